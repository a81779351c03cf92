//! Library side of the `seqinv` command: configuration, OEIS b-files and the
//! reproduction suite.

pub mod config;
pub mod oeis;
pub mod reproduce;

//! Formal power series over small prime fields, their compositional
//! inverses, kernel automata generating the coefficient sequences, and
//! decision procedures over those automata.

pub mod error;
pub mod field;
pub mod ntt;
pub mod series;

pub use error::{Error, Result};
pub use field::{DigitString, FieldElement, Prime};
pub use series::{BivariatePoly, PowerSeries};
pub mod sequences;
pub mod dfao;
pub mod analysis;

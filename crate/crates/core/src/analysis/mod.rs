//! Properties of the automata: synchronization, component structure,
//! pumped input families, arithmetic-progression statements, exact counts,
//! run lengths and conjecture probes.

mod count;
mod family;
mod probe;
mod progression;
mod runs;
mod statement;
mod structure;
mod sync;

pub use count::{count_letter, count_outputs, CountResult};
pub use family::{block_outputs, family_eval, family_eval_from, FamilyVerdict, WordFamily};
pub use probe::{matches_template, probe_conjectures, vanishing_offsets, MachineProbe, OffsetProbe, ProbeReport, RunProbe};
pub use progression::{log_radix, progression_automaton, Progression};
pub use runs::{max_runs, Run, RunStats};
pub use statement::{brute_force, verify_statement, Statement, Term, Verdict, DIRECT_BELOW};
pub use structure::{structure_report, transition_bipartite, Bipartition, Component, ComponentKind, StructureReport};
pub use sync::{is_synchronizing, shortest_sync_words, uniform_reach, ShortestSync, SyncCertificate};

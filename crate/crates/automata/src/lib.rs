//! Finite automata with relaxed initial/final structure: all-states-final,
//! all-states-initial, and both-at-once classes, plus the determinization,
//! closure, and reduction machinery used to measure their state complexity.

pub mod closure;
pub mod dfa;
pub mod error;
pub mod experiments;
pub mod json;
pub mod nfa;
pub mod oracle;
pub mod reductions;
pub mod report;
pub mod sample;
pub mod state_set;
pub mod subset;
pub mod unary;
pub mod witness;

pub use dfa::Dfa;
pub use error::{AutomatonError, Result};
pub use nfa::{Nfa, Word};
pub use report::{OutputFormat, Report, RunConfig, Verdict};
pub use state_set::StateSet;

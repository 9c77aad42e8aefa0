//! Two-head finite automata: one head reads the input left to right, the
//! other right to left, and a word is accepted when the heads meet in a
//! final state.
//!
//! The crate covers simulation, structural property checkers, constructions,
//! left deterministic linear grammars, bounded semantic oracles, an
//! exhaustive small-machine search and a corpus of witness machines.

pub mod analyze;
pub mod automaton;
pub mod corpus;
pub mod format;
pub mod grammar;
pub mod oracle;
pub mod report;
pub mod simulate;
pub mod transform;
pub mod words;

pub use analyze::{AnalysisError, Property};
pub use automaton::{Automaton, AutomatonError, Configuration, Head, Letter, ReadPair, StateId, Transition};
pub use format::{parse_automaton, serialize_automaton, FormatError};
pub use grammar::{Grammar, GrammarError};
pub use oracle::{LanguagePredicate, OracleError};
pub use report::PropertyReport;
pub use words::Word;

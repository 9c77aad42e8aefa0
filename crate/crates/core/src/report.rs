//! Verdicts of structural and semantic checks.

use std::fmt;

use serde::Serialize;

use crate::automaton::{Configuration, StateId, Transition};
use crate::words::Word;

/// What a witness points at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subject {
    Transitions(Vec<Transition>),
    States(Vec<StateId>),
    Configuration {
        word: Word,
        config: Configuration,
    },
    Word(Word),
    /// Indices into a grammar's rule list.
    Rules(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Which condition the subject violates (or, for positive reports, what
    /// it demonstrates).
    pub reason: String,
    /// Human-readable rendering of the subject, with state names resolved.
    pub detail: String,
    pub subject: Subject,
}

impl Witness {
    pub fn new(reason: impl Into<String>, detail: impl Into<String>, subject: Subject) -> Self {
        Witness {
            reason: reason.into(),
            detail: detail.into(),
            subject,
        }
    }
}

/// Outcome of one checker. A failing report always carries at least one
/// witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: String,
    pub verdict: bool,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl PropertyReport {
    /// A report whose verdict is `true` exactly when there are no witnesses.
    pub fn from_violations(property: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        PropertyReport {
            property: property.into(),
            verdict: witnesses.is_empty(),
            witnesses,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Conjunction of several reports under a new property name.
    pub fn all_of(property: impl Into<String>, parts: Vec<PropertyReport>) -> Self {
        let mut out = PropertyReport::from_violations(property, Vec::new());
        for p in parts {
            out.verdict &= p.verdict;
            out.witnesses.extend(p.witnesses);
            out.notes.extend(p.notes);
        }
        out
    }

    pub fn to_document(&self) -> ReportDocument {
        ReportDocument {
            property: self.property.clone(),
            verdict: self.verdict,
            witnesses: self
                .witnesses
                .iter()
                .map(|w| WitnessDocument {
                    reason: w.reason.clone(),
                    detail: w.detail.clone(),
                })
                .collect(),
            notes: self.notes.clone(),
        }
    }
}

/// `property: verdict`, then one indented line per witness and note.
impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.property, self.verdict)?;
        for w in &self.witnesses {
            writeln!(f, "  {}: {}", w.reason, w.detail)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub property: String,
    pub verdict: bool,
    pub witnesses: Vec<WitnessDocument>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessDocument {
    pub reason: String,
    pub detail: String,
}

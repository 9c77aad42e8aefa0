//! JSON document format for automata.
//!
//! ```json
//! { "alphabet": ["a","b"], "states": ["q0","q1"], "initial": "q0", "final": ["q0"],
//!   "transitions": [ {"from":"q0", "read1":"b", "read2":null, "to":"q1"} ] }
//! ```
//!
//! `read1`/`read2` are one-character strings, or `null` for the empty word.
//! Serialization is canonical: states, final states and transitions are
//! sorted, with `null` ordered before any letter.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automaton::{Automaton, AutomatonError, Letter, ReadPair, StateId, Transition};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Syntax(String),
    #[error("`{0}` is not a single letter")]
    BadLetter(String),
    #[error(transparent)]
    Invalid(#[from] AutomatonError),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Syntax(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonDocument {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    #[serde(default)]
    pub initial: Option<String>,
    #[serde(rename = "final", default)]
    pub finals: Vec<String>,
    #[serde(default)]
    pub transitions: Vec<TransitionDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TransitionDocument {
    pub from: String,
    pub read1: Option<String>,
    pub read2: Option<String>,
    pub to: String,
}

pub(crate) fn letter(s: &str) -> Result<Letter, FormatError> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(FormatError::BadLetter(s.to_string())),
    }
}

fn optional_letter(s: &Option<String>) -> Result<Option<Letter>, FormatError> {
    s.as_deref().map(letter).transpose()
}

impl AutomatonDocument {
    pub fn into_automaton(self) -> Result<Automaton, FormatError> {
        let index: BTreeMap<&str, StateId> = self
            .states
            .iter()
            .enumerate()
            .map(|(k, s)| (s.as_str(), StateId(k)))
            .collect();
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| AutomatonError::UnknownState(name.to_string()))
        };
        let alphabet = self
            .alphabet
            .iter()
            .map(|s| letter(s))
            .collect::<Result<Vec<_>, _>>()?;
        let initial = lookup(self.initial.as_deref().ok_or(AutomatonError::MissingInitial)?)?;
        let finals = self
            .finals
            .iter()
            .map(|f| lookup(f))
            .collect::<Result<Vec<_>, _>>()?;
        let mut transitions = Vec::with_capacity(self.transitions.len());
        for t in &self.transitions {
            let read = ReadPair::new(optional_letter(&t.read1)?, optional_letter(&t.read2)?);
            transitions.push(Transition::new(lookup(&t.from)?, read, lookup(&t.to)?));
        }
        Ok(Automaton::new(
            self.states.clone(),
            alphabet,
            initial,
            finals,
            transitions,
        )?)
    }

    /// The canonical document of `automaton`.
    pub fn from_automaton(automaton: &Automaton) -> Self {
        let mut states = automaton.states().to_vec();
        states.sort();
        let mut finals: Vec<String> = automaton
            .finals()
            .iter()
            .map(|&s| automaton.state_name(s).to_string())
            .collect();
        finals.sort();
        let mut transitions: Vec<TransitionDocument> = automaton
            .transitions()
            .iter()
            .map(|t| TransitionDocument {
                from: automaton.state_name(t.source).to_string(),
                read1: t.read.first.map(String::from),
                read2: t.read.second.map(String::from),
                to: automaton.state_name(t.target).to_string(),
            })
            .collect();
        transitions.sort();
        AutomatonDocument {
            alphabet: automaton.alphabet().iter().map(|c| c.to_string()).collect(),
            states,
            initial: Some(automaton.state_name(automaton.initial()).to_string()),
            finals,
            transitions,
        }
    }
}

/// Parses and validates an automaton document.
pub fn parse_automaton(text: &str) -> Result<Automaton, FormatError> {
    let doc: AutomatonDocument = serde_json::from_str(text)?;
    doc.into_automaton()
}

/// Canonical pretty-printed document, terminated by a newline.
pub fn serialize_automaton(automaton: &Automaton) -> String {
    let doc = AutomatonDocument::from_automaton(automaton);
    let mut out = serde_json::to_string_pretty(&doc).expect("document serializes");
    out.push('\n');
    out
}

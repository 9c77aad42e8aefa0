//! Loading automata, grammars and words from command-line arguments.

use std::fs;
use std::path::Path;

use twohead_core::corpus;
use twohead_core::grammar::{parse_grammar, Grammar};
use twohead_core::oracle::LanguagePredicate;
use twohead_core::{parse_automaton, Automaton, Letter, Word};

use crate::Failure;

const BUILTIN: &str = "builtin:";

fn builtin(name: &str) -> Result<corpus::CorpusEntry, Failure> {
    corpus::builtin(name).map_err(|e| Failure::Usage(e.to_string()))
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(Path::new(path)).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

/// A machine file, or `builtin:NAME` for a corpus machine.
pub fn automaton(arg: &str) -> Result<Automaton, Failure> {
    if let Some(name) = arg.strip_prefix(BUILTIN) {
        return Ok(builtin(name)?.automaton);
    }
    parse_automaton(&read(arg)?).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

pub fn grammar(arg: &str) -> Result<Grammar, Failure> {
    if let Some(name) = arg.strip_prefix(BUILTIN) {
        return builtin(name)?
            .grammar
            .ok_or_else(|| Failure::Usage(format!("corpus entry `{name}` has no grammar")));
    }
    parse_grammar(&read(arg)?).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

/// Either side of `compare`.
pub enum Subject {
    Automaton(Automaton),
    Grammar(Grammar),
    Predicate(LanguagePredicate),
}

impl Subject {
    pub fn as_language(&self) -> &dyn twohead_core::oracle::Language {
        match self {
            Subject::Automaton(a) => a,
            Subject::Grammar(g) => g,
            Subject::Predicate(p) => p,
        }
    }
}

/// `builtin:NAME` names the corpus language itself; files holding a `rules`
/// key are grammars, anything else a machine.
pub fn subject(arg: &str) -> Result<Subject, Failure> {
    if let Some(name) = arg.strip_prefix(BUILTIN) {
        return Ok(Subject::Predicate(builtin(name)?.predicate));
    }
    let text = read(arg)?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{arg}: {e}")))?;
    if value.get("rules").is_some() {
        parse_grammar(&text)
            .map(Subject::Grammar)
            .map_err(|e| Failure::Input(format!("{arg}: {e}")))
    } else {
        parse_automaton(&text)
            .map(Subject::Automaton)
            .map_err(|e| Failure::Input(format!("{arg}: {e}")))
    }
}

/// The literal `""` (as left over when a shell does not strip the quotes)
/// and the empty string both mean the empty word.
pub fn word(arg: Option<&str>, empty: bool, alphabet: &[Letter]) -> Result<Word, Failure> {
    let text = match (arg, empty) {
        (Some(_), true) => return Err(Failure::Usage("give either a word or --empty, not both".into())),
        (None, false) => {
            return Err(Failure::Usage(
                "missing word (use --empty for the empty word)".into(),
            ))
        }
        (None, true) | (Some("\"\""), false) => "",
        (Some(w), false) => w,
    };
    let word: Word = text.chars().collect();
    if let Some(bad) = word.iter().find(|c| !alphabet.contains(c)) {
        return Err(Failure::Usage(format!("letter `{bad}` is not in the alphabet")));
    }
    Ok(word)
}

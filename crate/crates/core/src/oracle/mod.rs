//! Ground truth by brute force.
//!
//! The semantic oracles decide determinism, backward determinism and
//! completeness by looking at every configuration over every input up to a
//! length bound, independently of the structural checkers in
//! [`crate::analyze`]. Agreement up to a bound is evidence, not proof.

mod search;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::automaton::{Automaton, Configuration, Letter};
use crate::grammar::Grammar;
use crate::report::{PropertyReport, Subject, Witness};
use crate::simulate::{accepts, reachable_configurations, step, step_back};
use crate::words::{render, words_up_to, Word};

pub use search::{search_automata, SearchConfig, SearchOutcome, SearchReport};

/// Witnesses kept per oracle report; the total is given in a note.
const WITNESS_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("alphabets differ: {0:?} vs {1:?}")]
    AlphabetMismatch(Vec<Letter>, Vec<Letter>),
    #[error("search budget of {budget} machines exceeded after examining {examined}")]
    BudgetExceeded { budget: u64, examined: u64 },
    #[error("invalid search parameters: {0}")]
    BadParameters(String),
}

type Membership = Arc<dyn Fn(&[Letter]) -> bool + Send + Sync>;

/// A language given by a membership test.
#[derive(Clone)]
pub struct LanguagePredicate {
    name: String,
    alphabet: Vec<Letter>,
    member: Membership,
}

impl LanguagePredicate {
    pub fn new(
        name: impl Into<String>,
        alphabet: &str,
        member: impl Fn(&[Letter]) -> bool + Send + Sync + 'static,
    ) -> Self {
        let mut alphabet: Vec<Letter> = alphabet.chars().collect();
        alphabet.sort_unstable();
        alphabet.dedup();
        LanguagePredicate {
            name: name.into(),
            alphabet,
            member: Arc::new(member),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn contains(&self, word: &[Letter]) -> bool {
        (self.member)(word)
    }
}

impl fmt::Debug for LanguagePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LanguagePredicate")
            .field("name", &self.name)
            .field("alphabet", &self.alphabet)
            .finish()
    }
}

/// Anything with a membership test over a finite alphabet.
pub trait Language {
    fn alphabet(&self) -> Vec<Letter>;
    fn contains(&self, word: &[Letter]) -> bool;
    fn label(&self) -> String;
}

impl Language for Automaton {
    fn alphabet(&self) -> Vec<Letter> {
        Automaton::alphabet(self).to_vec()
    }

    fn contains(&self, word: &[Letter]) -> bool {
        accepts(self, word)
    }

    fn label(&self) -> String {
        "automaton".to_string()
    }
}

impl Language for Grammar {
    fn alphabet(&self) -> Vec<Letter> {
        self.terminals().to_vec()
    }

    fn contains(&self, word: &[Letter]) -> bool {
        self.derives(word)
    }

    fn label(&self) -> String {
        "grammar".to_string()
    }
}

impl Language for LanguagePredicate {
    fn alphabet(&self) -> Vec<Letter> {
        self.alphabet.clone()
    }

    fn contains(&self, word: &[Letter]) -> bool {
        LanguagePredicate::contains(self, word)
    }

    fn label(&self) -> String {
        self.name.clone()
    }
}

/// Every configuration over `word`, all states included.
fn all_configurations(a: &Automaton, len: usize) -> impl Iterator<Item = Configuration> + '_ {
    a.state_ids()
        .flat_map(move |q| (0..=len).flat_map(move |i| (i..=len).map(move |j| Configuration::new(q, i, j))))
}

fn config_witness(a: &Automaton, reason: &str, word: &[Letter], c: &Configuration) -> Witness {
    Witness::new(
        reason,
        format!(
            "({}, word {}, window {})",
            a.state_name(c.state),
            render(word),
            render(c.window(word))
        ),
        Subject::Configuration {
            word: word.to_vec(),
            config: *c,
        },
    )
}

fn bounded_report(property: &str, n: usize, total: usize, witnesses: Vec<Witness>) -> PropertyReport {
    let mut report = PropertyReport::from_violations(property, witnesses);
    report.verdict = total == 0;
    report.notes.push(format!("checked all inputs of length <= {n}"));
    if total > WITNESS_LIMIT {
        report.notes.push(format!(
            "{total} violating configurations, first {WITNESS_LIMIT} shown"
        ));
    }
    report
}

/// Every configuration over every input of length `<= n` allows at most one
/// step, and no step that reads nothing.
pub fn semantic_determinism_oracle(a: &Automaton, n: usize) -> PropertyReport {
    let mut witnesses = Vec::new();
    let mut total = 0;
    for w in words_up_to(a.alphabet(), n) {
        for c in all_configurations(a, w.len()) {
            let applicable = a.applicable_transitions(&w, &c);
            let reason = if applicable.len() > 1 {
                "more than one step applies"
            } else if applicable.iter().any(|t| t.read.is_empty_pair()) {
                "a step reads no letter"
            } else {
                continue;
            };
            total += 1;
            if witnesses.len() < WITNESS_LIMIT {
                witnesses.push(config_witness(a, reason, &w, &c));
            }
        }
    }
    bounded_report("semantic-deterministic", n, total, witnesses)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PredecessorMode {
    /// Predecessors anywhere over the input.
    Unrestricted,
    /// Only predecessors reachable from the start configuration of the input.
    Reachable,
}

/// Every configuration over every input of length `<= n` has at most one
/// predecessor.
pub fn semantic_backward_oracle(a: &Automaton, n: usize, mode: PredecessorMode) -> PropertyReport {
    let mut witnesses = Vec::new();
    let mut total = 0;
    for w in words_up_to(a.alphabet(), n) {
        let reachable = match mode {
            PredecessorMode::Reachable => Some(reachable_configurations(a, &w)),
            PredecessorMode::Unrestricted => None,
        };
        for c in all_configurations(a, w.len()) {
            let preds = step_back(a, &w, &c);
            let count = match &reachable {
                None => preds.len(),
                Some(r) => {
                    if !r.contains(&c) {
                        continue;
                    }
                    preds.iter().filter(|p| r.contains(p)).count()
                }
            };
            if count > 1 {
                total += 1;
                if witnesses.len() < WITNESS_LIMIT {
                    let names: Vec<String> = preds
                        .iter()
                        .map(|p| format!("({}, {}, {})", a.state_name(p.state), p.left, p.right))
                        .collect();
                    let mut wit = config_witness(a, "more than one predecessor", &w, &c);
                    wit.detail = format!("{} <- {}", wit.detail, names.join(", "));
                    witnesses.push(wit);
                }
            }
        }
    }
    let name = match mode {
        PredecessorMode::Unrestricted => "semantic-backward-deterministic",
        PredecessorMode::Reachable => "semantic-backward-deterministic (reachable)",
    };
    bounded_report(name, n, total, witnesses)
}

/// Every configuration with a nonempty window over every input of length
/// `<= n` has exactly one successor.
pub fn semantic_completeness_oracle(a: &Automaton, n: usize) -> PropertyReport {
    let mut witnesses = Vec::new();
    let mut total = 0;
    for w in words_up_to(a.alphabet(), n) {
        for c in all_configurations(a, w.len()).filter(|c| !c.is_exhausted()) {
            let succ = step(a, &w, &c);
            if succ.len() != 1 {
                total += 1;
                if witnesses.len() < WITNESS_LIMIT {
                    let reason = if succ.is_empty() {
                        "stuck"
                    } else {
                        "more than one step applies"
                    };
                    witnesses.push(config_witness(a, reason, &w, &c));
                }
            }
        }
    }
    bounded_report("semantic-complete", n, total, witnesses)
}

/// Membership agreement on every word of length `<= n`; the witness is the
/// first disagreement in length-lexicographic order.
pub fn language_equal(x: &dyn Language, y: &dyn Language, n: usize) -> Result<PropertyReport, OracleError> {
    let ax = x.alphabet();
    let ay = y.alphabet();
    if ax != ay {
        return Err(OracleError::AlphabetMismatch(ax, ay));
    }
    let mut witnesses = Vec::new();
    let mut checked: u64 = 0;
    for w in words_up_to(&ax, n) {
        checked += 1;
        let in_x = x.contains(&w);
        if in_x != y.contains(&w) {
            let (yes, no) = if in_x {
                (x.label(), y.label())
            } else {
                (y.label(), x.label())
            };
            witnesses.push(Witness::new(
                "first disagreement",
                format!("{} is in {yes} but not in {no}", render(&w)),
                Subject::Word(w),
            ));
            break;
        }
    }
    let mut report = PropertyReport::from_violations("language-equal", witnesses);
    report
        .notes
        .push(format!("compared {checked} words of length <= {n}"));
    Ok(report)
}

/// Words of length `<= n` in the language, length-lexicographic.
pub fn members_up_to(language: &dyn Language, n: usize) -> Vec<Word> {
    words_up_to(&language.alphabet(), n)
        .filter(|w| language.contains(w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{ReadPair as R, StateId};

    fn wcb() -> Automaton {
        Automaton::builder("abc")
            .initial("q0")
            .transition("q0", R::both('b', 'b'), "q0")
            .transition("q0", R::first_head('a'), "q0")
            .transition("q0", R::first_head('c'), "qf")
            .finals(["qf"])
            .build()
            .unwrap()
    }

    fn ba() -> Automaton {
        Automaton::builder("ab")
            .initial("q0")
            .transition("q0", R::first_head('b'), "q")
            .transition("q", R::second_head('a'), "q0")
            .finals(["q0", "q"])
            .build()
            .unwrap()
    }

    fn ab() -> Automaton {
        Automaton::builder("ab")
            .initial("q0")
            .transition("q0", R::first_head('a'), "q0")
            .transition("q0", R::first_head('b'), "q1")
            .transition("q1", R::first_head('b'), "q1")
            .finals(["q0", "q1"])
            .build()
            .unwrap()
    }

    fn l_ba(w: &[Letter]) -> bool {
        let bs = w.iter().take_while(|&&c| c == 'b').count();
        let rest = &w[bs..];
        let n_a = rest.len();
        rest.iter().all(|&c| c == 'a') && (bs == n_a || bs == n_a + 1)
    }

    #[test]
    fn determinism_oracle_examples() {
        assert!(semantic_determinism_oracle(&wcb(), 6).verdict);
        let overlap = Automaton::builder("ab")
            .initial("q")
            .transition("q", R::first_head('a'), "q")
            .transition("q", R::both('a', 'b'), "q")
            .build()
            .unwrap();
        let r = semantic_determinism_oracle(&overlap, 2);
        assert!(!r.verdict);
        assert!(r.witnesses[0].detail.contains("word ab"));
        let empty = Automaton::builder("ab").initial("q").build().unwrap();
        assert!(semantic_determinism_oracle(&empty, 4).verdict);
    }

    #[test]
    fn backward_oracle_examples() {
        assert!(semantic_backward_oracle(&ba(), 6, PredecessorMode::Unrestricted).verdict);
        let r = semantic_backward_oracle(&ab(), 4, PredecessorMode::Unrestricted);
        assert!(!r.verdict);
        assert!(r.witnesses.iter().any(|w| matches!(
            &w.subject,
            Subject::Configuration { config, .. } if ab().state_name(config.state) == "q1"
        )));
        let two = crate::simulate::step_back(&ab(), &['a', 'b', 'b'], &Configuration::new(StateId(1), 2, 3));
        assert_eq!(two.len(), 2);
        // vacuous for deterministic machines
        assert!(semantic_backward_oracle(&ab(), 5, PredecessorMode::Reachable).verdict);
    }

    #[test]
    fn language_equal_examples() {
        let pred = LanguagePredicate::new("L_ba", "ab", l_ba);
        assert!(language_equal(&ba(), &pred, 12).unwrap().verdict);
        let lab = LanguagePredicate::new("L_ab", "ab", |w: &[Letter]| {
            let a = w.iter().take_while(|&&c| c == 'a').count();
            w[a..].iter().all(|&c| c == 'b')
        });
        let r = language_equal(&ba(), &lab, 2).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.witnesses[0].subject, Subject::Word(vec!['a']));
        let other = LanguagePredicate::new("x", "abc", |_: &[Letter]| true);
        assert!(language_equal(&ba(), &other, 2).is_err());
    }

    #[test]
    fn completeness_oracle_on_ba() {
        let r = semantic_completeness_oracle(&ba(), 3);
        assert!(!r.verdict);
    }
}

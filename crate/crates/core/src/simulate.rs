//! Forward and backward execution over the configuration graph of one input.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::automaton::{Automaton, Configuration, Letter, StateId, Transition};
use crate::words::{render, words_up_to, Word};

/// Successor configurations, one per applicable transition.
pub fn step(automaton: &Automaton, word: &[Letter], config: &Configuration) -> Vec<Configuration> {
    let mut next: Vec<Configuration> = automaton
        .applicable(word, config)
        .map(|t| config.after(t))
        .collect();
    next.sort_unstable();
    next.dedup();
    next
}

/// All configurations over `word` from which one step leads to `config`.
///
/// Predecessors are searched over the whole input, not only among
/// configurations reachable from the start.
pub fn step_back(automaton: &Automaton, word: &[Letter], config: &Configuration) -> Vec<Configuration> {
    let mut prev = Vec::new();
    for t in automaton.incoming(config.state) {
        let consumed_left = t.read.first.is_some() as usize;
        let consumed_right = t.read.second.is_some() as usize;
        if config.left < consumed_left || config.right + consumed_right > word.len() {
            continue;
        }
        let candidate = Configuration::new(
            t.source,
            config.left - consumed_left,
            config.right + consumed_right,
        );
        if t.read.matches_window(candidate.window(word)) {
            prev.push(candidate);
        }
    }
    prev.sort_unstable();
    prev.dedup();
    prev
}

/// Breadth-first exploration of the configurations reachable from the start
/// configuration of `word`. Stops early when `visit` returns `true`.
fn explore(automaton: &Automaton, word: &[Letter], mut visit: impl FnMut(&Configuration) -> bool) -> bool {
    let start = Configuration::start(automaton, word.len());
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start);
    queue.push_back(start);
    while let Some(c) = queue.pop_front() {
        if visit(&c) {
            return true;
        }
        for t in automaton.applicable(word, &c) {
            let n = c.after(t);
            if seen.insert(n) {
                queue.push_back(n);
            }
        }
    }
    false
}

/// Whether some computation on `word` ends with the input exhausted in a
/// final state.
pub fn accepts(automaton: &Automaton, word: &[Letter]) -> bool {
    explore(automaton, word, |c| {
        c.is_exhausted() && automaton.is_final(c.state)
    })
}

/// Every configuration reachable from the start configuration of `word`.
pub fn reachable_configurations(automaton: &Automaton, word: &[Letter]) -> BTreeSet<Configuration> {
    let mut all = BTreeSet::new();
    explore(automaton, word, |c| {
        all.insert(*c);
        false
    });
    all
}

/// States in which some computation on `word` exhausts the input.
pub fn exhausted_states(automaton: &Automaton, word: &[Letter]) -> BTreeSet<StateId> {
    let mut ends = BTreeSet::new();
    explore(automaton, word, |c| {
        if c.is_exhausted() {
            ends.insert(c.state);
        }
        false
    });
    ends
}

/// The accepted words of length `<= max_len`, in length-lexicographic order.
pub fn enumerate_language(automaton: &Automaton, max_len: usize) -> Vec<Word> {
    let all: Vec<Word> = words_up_to(automaton.alphabet(), max_len).collect();
    all.into_par_iter().filter(|w| accepts(automaton, w)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    /// Input left unread and no transition applies.
    RejectedStuck,
    /// Input exhausted in a non-final state.
    RejectedNonfinal,
}

impl Verdict {
    pub fn is_accepted(self) -> bool {
        self == Verdict::Accepted
    }

    pub fn label(self) -> &'static str {
        match self {
            Verdict::Accepted => "accepted",
            Verdict::RejectedStuck => "rejected-stuck",
            Verdict::RejectedNonfinal => "rejected-nonfinal",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub config: Configuration,
    /// The transition taken from `config`; `None` on the last step.
    pub transition: Option<Transition>,
}

/// The unique maximal computation of a deterministic automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub word: Word,
    pub steps: Vec<TraceStep>,
    pub verdict: Verdict,
}

impl Trace {
    pub fn final_config(&self) -> Configuration {
        self.steps.last().expect("a trace has at least one step").config
    }

    /// Number of transitions taken.
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// One line per configuration:
    /// `state | consumed-left | window | consumed-right | (read1,read2)`.
    pub fn render(&self, automaton: &Automaton) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let c = s.config;
            let read = s
                .transition
                .map(|t| t.read.to_string())
                .unwrap_or_else(|| "end".to_string());
            let _ = writeln!(
                out,
                "{} | {} | {} | {} | {}",
                automaton.state_name(c.state),
                render(&self.word[..c.left]),
                render(c.window(&self.word)),
                render(&self.word[c.right..]),
                read
            );
        }
        let _ = writeln!(out, "verdict: {}", self.verdict.label());
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimulationError {
    #[error("automaton is not deterministic: {count} transitions apply at step {step}")]
    NotDeterministic {
        step: usize,
        count: usize,
        config: Configuration,
    },
    #[error("automaton is not deterministic: a (λ,λ) transition applies at step {step}")]
    LambdaStep { step: usize, config: Configuration },
}

/// Runs a deterministic automaton to completion on `word`.
pub fn run_deterministic(automaton: &Automaton, word: &[Letter]) -> Result<Trace, SimulationError> {
    let mut steps = Vec::new();
    let mut config = Configuration::start(automaton, word.len());
    loop {
        let applicable = automaton.applicable_transitions(word, &config);
        let step = steps.len();
        match applicable.as_slice() {
            [] => {
                steps.push(TraceStep {
                    config,
                    transition: None,
                });
                let verdict = if !config.is_exhausted() {
                    Verdict::RejectedStuck
                } else if automaton.is_final(config.state) {
                    Verdict::Accepted
                } else {
                    Verdict::RejectedNonfinal
                };
                return Ok(Trace {
                    word: word.to_vec(),
                    steps,
                    verdict,
                });
            }
            [t] if t.read.is_empty_pair() => {
                return Err(SimulationError::LambdaStep { step, config });
            }
            [t] => {
                steps.push(TraceStep {
                    config,
                    transition: Some(*t),
                });
                config = config.after(t);
            }
            many => {
                return Err(SimulationError::NotDeterministic {
                    step,
                    count: many.len(),
                    config,
                });
            }
        }
    }
}

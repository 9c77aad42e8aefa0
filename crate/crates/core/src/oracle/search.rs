//! Exhaustive search over small automata.
//!
//! Machines are generated in a canonical form: states are numbered in the
//! order they are first mentioned while scanning the transition table state
//! by state, so every state is reachable and each renaming class of
//! deterministic machines is visited once. Determinism, 1-limitedness and
//! completeness restrict which read pairs a state may use; backward
//! determinism is enforced while targets are assigned.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use super::{language_equal, LanguagePredicate, OracleError};
use crate::analyze::{
    read_pairs_overlap, violates_first_head_condition, violates_second_head_condition, Property,
};
use crate::automaton::{Automaton, Letter, ReadPair, StateId, Transition};
use crate::format::{serialize_automaton, AutomatonDocument};
use crate::words::{words_up_to, Word};

const MAX_SEARCH_STATES: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_states: usize,
    pub max_len: usize,
    pub filters: BTreeSet<Property>,
    /// Upper bound on machines examined; `None` for no limit.
    pub budget: Option<u64>,
}

impl SearchConfig {
    pub fn new(max_states: usize, max_len: usize, filters: impl IntoIterator<Item = Property>) -> Self {
        SearchConfig {
            max_states,
            max_len,
            filters: filters.into_iter().collect(),
            budget: None,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// No machine within the bounds agrees with the target.
    Exhausted,
    /// Machines agreeing with the target on every word up to the bound,
    /// ordered by canonical serialization.
    Candidates(Vec<Automaton>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub target: String,
    pub max_states: usize,
    pub max_len: usize,
    pub filters: BTreeSet<Property>,
    pub examined: u64,
    pub outcome: SearchOutcome,
}

impl SearchReport {
    pub fn is_exhausted(&self) -> bool {
        self.outcome == SearchOutcome::Exhausted
    }

    pub fn candidates(&self) -> &[Automaton] {
        match &self.outcome {
            SearchOutcome::Exhausted => &[],
            SearchOutcome::Candidates(c) => c,
        }
    }

    /// Candidates that still agree with `target` on all words up to `n`.
    pub fn persistent_candidates(&self, target: &LanguagePredicate, n: usize) -> Vec<&Automaton> {
        self.candidates()
            .iter()
            .filter(|a| language_equal(*a, target, n).map(|r| r.verdict).unwrap_or(false))
            .collect()
    }

    pub fn render(&self) -> String {
        let filters: Vec<&str> = self.filters.iter().map(|p| p.name()).collect();
        let mut out = String::new();
        let _ = writeln!(out, "target: {}", self.target);
        let _ = writeln!(out, "states: <= {}", self.max_states);
        let _ = writeln!(out, "filters: {{{}}}", filters.join(", "));
        let _ = writeln!(out, "word bound: {}", self.max_len);
        let _ = writeln!(out, "machines examined: {}", self.examined);
        match &self.outcome {
            SearchOutcome::Exhausted => {
                let _ = writeln!(
                    out,
                    "outcome: exhausted (no machine agrees on all words of length <= {})",
                    self.max_len
                );
            }
            SearchOutcome::Candidates(c) => {
                let _ = writeln!(out, "outcome: {} candidate(s)", c.len());
                for a in c {
                    out.push_str(&serialize_automaton(a));
                }
            }
        }
        out
    }

    pub fn to_document(&self) -> SearchDocument {
        SearchDocument {
            target: self.target.clone(),
            max_states: self.max_states,
            max_len: self.max_len,
            filters: self.filters.iter().map(|p| p.name().to_string()).collect(),
            examined: self.examined,
            outcome: if self.is_exhausted() {
                "exhausted"
            } else {
                "candidates"
            }
            .to_string(),
            candidates: self
                .candidates()
                .iter()
                .map(AutomatonDocument::from_automaton)
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchDocument {
    pub target: String,
    pub max_states: usize,
    pub max_len: usize,
    pub filters: Vec<String>,
    pub examined: u64,
    pub outcome: String,
    pub candidates: Vec<AutomatonDocument>,
}

/// Structural constraints derived from the requested filters.
#[derive(Clone, Copy, Debug)]
struct Constraints {
    deterministic: bool,
    backward: bool,
    one_limited: bool,
    complete: bool,
}

impl Constraints {
    fn from_filters(filters: &BTreeSet<Property>) -> Self {
        let has = |p| filters.contains(&p);
        let complete = has(Property::Complete);
        Constraints {
            // completeness is only defined for deterministic machines
            deterministic: has(Property::Deterministic) || has(Property::Reversible) || complete,
            backward: has(Property::Reversible) || has(Property::BackwardDeterministic),
            one_limited: has(Property::OneLimited),
            complete,
        }
    }

    /// Every read-pair set one state may use.
    fn pair_sets(&self, alphabet: &[Letter]) -> Vec<Vec<ReadPair>> {
        if self.complete {
            return vec![
                alphabet.iter().map(|&c| ReadPair::first_head(c)).collect(),
                alphabet.iter().map(|&c| ReadPair::second_head(c)).collect(),
            ];
        }
        let options: Vec<Option<Letter>> = std::iter::once(None)
            .chain(alphabet.iter().copied().map(Some))
            .collect();
        let pairs: Vec<ReadPair> = options
            .iter()
            .flat_map(|&f| options.iter().map(move |&s| ReadPair::new(f, s)))
            .filter(|p| !(self.deterministic && p.is_empty_pair()))
            .filter(|p| !self.one_limited || p.letter_count() == 1)
            .collect();
        let mut sets = Vec::new();
        for mask in 0u64..(1 << pairs.len()) {
            let set: Vec<ReadPair> = (0..pairs.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| pairs[k])
                .collect();
            if !self.deterministic || deterministic_pair_set(&set) {
                sets.push(set);
            }
        }
        sets
    }
}

fn deterministic_pair_set(set: &[ReadPair]) -> bool {
    set.iter().enumerate().all(|(i, &p)| {
        set[i + 1..].iter().all(|&r| {
            !violates_first_head_condition(p, r)
                && !violates_first_head_condition(r, p)
                && !violates_second_head_condition(p, r)
                && !violates_second_head_condition(r, p)
        })
    })
}

/// Everything fixed for one search run.
struct Job<'a> {
    states: usize,
    alphabet: &'a [Letter],
    constraints: Constraints,
    pair_sets: &'a [Vec<ReadPair>],
    words: &'a [Word],
    member: &'a [bool],
    max_len: usize,
    budget: Option<u64>,
    examined: &'a AtomicU64,
    abort: &'a AtomicBool,
}

/// A transition table under construction.
#[derive(Clone)]
struct Partial {
    transitions: Vec<(usize, ReadPair, usize)>,
    incoming: Vec<Vec<ReadPair>>,
    max_used: usize,
}

impl Partial {
    fn new(states: usize) -> Self {
        Partial {
            transitions: Vec::new(),
            incoming: vec![Vec::new(); states],
            max_used: 0,
        }
    }

    fn accepts_incoming(&self, target: usize, read: ReadPair) -> bool {
        !self.incoming[target].iter().any(|&r| read_pairs_overlap(r, read))
    }
}

impl Job<'_> {
    fn visit_state(&self, s: usize, partial: &mut Partial, out: &mut Vec<Automaton>) {
        if self.abort.load(Ordering::Relaxed) {
            return;
        }
        if s == self.states {
            if partial.max_used + 1 == self.states {
                self.evaluate(partial, out);
            }
            return;
        }
        if s > partial.max_used {
            // not reachable from the states scanned so far
            return;
        }
        for set in self.pair_sets {
            self.assign(s, set, 0, partial, out);
        }
    }

    fn assign(&self, s: usize, set: &[ReadPair], k: usize, partial: &mut Partial, out: &mut Vec<Automaton>) {
        if k == set.len() {
            self.visit_state(s + 1, partial, out);
            return;
        }
        let read = set[k];
        let limit = (partial.max_used + 1).min(self.states - 1);
        if self.constraints.deterministic {
            for target in 0..=limit {
                if self.constraints.backward && !partial.accepts_incoming(target, read) {
                    continue;
                }
                let saved = partial.max_used;
                partial.max_used = saved.max(target);
                partial.transitions.push((s, read, target));
                partial.incoming[target].push(read);
                self.assign(s, set, k + 1, partial, out);
                partial.incoming[target].pop();
                partial.transitions.pop();
                partial.max_used = saved;
            }
            return;
        }
        // nondeterministic: a nonempty target set; new states must be the
        // next unused numbers, in order
        for mask in 1u64..(1 << self.states) {
            let targets: Vec<usize> = (0..self.states).filter(|t| mask & (1 << t) != 0).collect();
            let fresh: Vec<usize> = targets
                .iter()
                .copied()
                .filter(|&t| t > partial.max_used)
                .collect();
            if fresh
                .iter()
                .enumerate()
                .any(|(i, &t)| t != partial.max_used + 1 + i)
            {
                continue;
            }
            if self.constraints.backward && !targets.iter().all(|&t| partial.accepts_incoming(t, read)) {
                continue;
            }
            let saved = partial.max_used;
            partial.max_used = saved.max(targets.last().copied().unwrap_or(0));
            for &t in &targets {
                partial.transitions.push((s, read, t));
                partial.incoming[t].push(read);
            }
            self.assign(s, set, k + 1, partial, out);
            for &t in targets.iter().rev() {
                partial.incoming[t].pop();
                partial.transitions.pop();
            }
            partial.max_used = saved;
        }
    }

    /// Tries every choice of final states for a finished transition table.
    fn evaluate(&self, partial: &Partial, out: &mut Vec<Automaton>) {
        let m = self.states;
        let finals_choices = 1u64 << m;
        let seen = self.examined.fetch_add(finals_choices, Ordering::Relaxed) + finals_choices;
        if let Some(b) = self.budget {
            if seen > b {
                self.abort.store(true, Ordering::Relaxed);
                return;
            }
        }
        let mut table: Vec<Vec<(ReadPair, usize)>> = vec![Vec::new(); m];
        for &(s, r, t) in &partial.transitions {
            table[s].push((r, t));
        }
        let mut runner = Runner::new(m, self.max_len);
        // bit F set = final-state set F still agrees with every word so far
        let mut viable: u64 = if finals_choices == 64 {
            u64::MAX
        } else {
            (1u64 << finals_choices) - 1
        };
        for (w, &member) in self.words.iter().zip(self.member) {
            let ends = runner.exhausted_states(&table, w);
            let mut consistent = 0u64;
            for f in 0..finals_choices {
                if ((ends & f) != 0) == member {
                    consistent |= 1 << f;
                }
            }
            viable &= consistent;
            if viable == 0 {
                return;
            }
        }
        for f in 0..finals_choices {
            if viable & (1 << f) == 0 {
                continue;
            }
            let transitions = partial
                .transitions
                .iter()
                .map(|&(s, r, t)| Transition::new(StateId(s), r, StateId(t)));
            let finals = (0..m).filter(|q| f & (1 << q) != 0).map(StateId);
            let a = Automaton::with_state_count(
                m,
                self.alphabet.iter().copied(),
                StateId(0),
                finals,
                transitions,
            )
            .expect("generated automaton is valid");
            out.push(a);
        }
    }
}

/// Small-state simulator for the inner loop; avoids building an
/// [`Automaton`] per candidate table.
struct Runner {
    states: usize,
    span: usize,
    seen: Vec<bool>,
    stack: Vec<(usize, usize, usize)>,
}

impl Runner {
    fn new(states: usize, max_len: usize) -> Self {
        let span = max_len + 1;
        Runner {
            states,
            span,
            seen: vec![false; states * span * span],
            stack: Vec::new(),
        }
    }

    fn exhausted_states(&mut self, table: &[Vec<(ReadPair, usize)>], word: &[Letter]) -> u64 {
        self.seen.iter_mut().for_each(|s| *s = false);
        let index = |q: usize, i: usize, j: usize, span: usize| (q * span + i) * span + j;
        let mut ends = 0u64;
        self.stack.clear();
        self.stack.push((0, 0, word.len()));
        self.seen[index(0, 0, word.len(), self.span)] = true;
        while let Some((q, i, j)) = self.stack.pop() {
            if i == j {
                ends |= 1 << q;
            }
            for &(r, t) in &table[q] {
                if !r.matches_window(&word[i..j]) {
                    continue;
                }
                let ni = i + r.first.is_some() as usize;
                let nj = j - r.second.is_some() as usize;
                let k = index(t, ni, nj, self.span);
                if !self.seen[k] {
                    self.seen[k] = true;
                    self.stack.push((t, ni, nj));
                }
            }
        }
        debug_assert!(self.states <= 64);
        ends
    }
}

/// Enumerates every automaton with at most `config.max_states` states over
/// the target's alphabet that satisfies the structural filters, and returns
/// those agreeing with the target on all words up to `config.max_len`.
pub fn search_automata(
    target: &LanguagePredicate,
    config: &SearchConfig,
) -> Result<SearchReport, OracleError> {
    if config.max_states == 0 || config.max_len == 0 {
        return Err(OracleError::BadParameters(
            "state and word bounds must be at least 1".into(),
        ));
    }
    if config.max_states > MAX_SEARCH_STATES {
        return Err(OracleError::BadParameters(format!(
            "at most {MAX_SEARCH_STATES} states are supported"
        )));
    }
    let alphabet = target.alphabet();
    let constraints = Constraints::from_filters(&config.filters);
    let pair_sets = constraints.pair_sets(alphabet);
    let words: Vec<Word> = words_up_to(alphabet, config.max_len).collect();
    let member: Vec<bool> = words.iter().map(|w| target.contains(w)).collect();
    let examined = AtomicU64::new(0);
    let abort = AtomicBool::new(false);

    let tasks: Vec<(usize, usize)> = (1..=config.max_states)
        .flat_map(|m| (0..pair_sets.len()).map(move |k| (m, k)))
        .collect();
    let found: Vec<Vec<Automaton>> = tasks
        .par_iter()
        .map(|&(m, k)| {
            let job = Job {
                states: m,
                alphabet,
                constraints,
                pair_sets: &pair_sets,
                words: &words,
                member: &member,
                max_len: config.max_len,
                budget: config.budget,
                examined: &examined,
                abort: &abort,
            };
            let mut out = Vec::new();
            let mut partial = Partial::new(m);
            job.assign(0, &pair_sets[k], 0, &mut partial, &mut out);
            out
        })
        .collect();

    let examined = examined.load(Ordering::Relaxed);
    if abort.load(Ordering::Relaxed) {
        return Err(OracleError::BudgetExceeded {
            budget: config.budget.unwrap_or(0),
            examined,
        });
    }
    let mut candidates: Vec<(String, Automaton)> = found
        .into_iter()
        .flatten()
        .filter(|a| passes_filters(a, &config.filters))
        .map(|a| (serialize_automaton(&a), a))
        .collect();
    candidates.sort_by(|x, y| x.0.cmp(&y.0));
    let outcome = if candidates.is_empty() {
        SearchOutcome::Exhausted
    } else {
        SearchOutcome::Candidates(candidates.into_iter().map(|(_, a)| a).collect())
    };
    Ok(SearchReport {
        target: target.name().to_string(),
        max_states: config.max_states,
        max_len: config.max_len,
        filters: config.filters.clone(),
        examined,
        outcome,
    })
}

fn passes_filters(a: &Automaton, filters: &BTreeSet<Property>) -> bool {
    filters.iter().all(|p| p.measure(a) == Some(true))
}

//! The two-head automaton data model.
//!
//! An automaton reads a fixed input from both ends at once: the first head
//! moves left to right, the second head right to left. A configuration is a
//! state plus the still-unread window `word[left..right]`, so every
//! configuration over a given input is a small index triple.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A single input symbol.
pub type Letter = char;

/// Index of a state within [`Automaton::states`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub usize);

impl StateId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// What each head consumes in one step; `None` is the empty word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReadPair {
    pub first: Option<Letter>,
    pub second: Option<Letter>,
}

impl ReadPair {
    pub const EMPTY: ReadPair = ReadPair {
        first: None,
        second: None,
    };

    pub const fn new(first: Option<Letter>, second: Option<Letter>) -> Self {
        ReadPair { first, second }
    }

    /// `(a, λ)`: only the first head reads.
    pub const fn first_head(a: Letter) -> Self {
        ReadPair::new(Some(a), None)
    }

    /// `(λ, b)`: only the second head reads.
    pub const fn second_head(b: Letter) -> Self {
        ReadPair::new(None, Some(b))
    }

    pub const fn both(a: Letter, b: Letter) -> Self {
        ReadPair::new(Some(a), Some(b))
    }

    /// Number of letters consumed (0, 1 or 2).
    pub fn letter_count(&self) -> usize {
        self.first.is_some() as usize + self.second.is_some() as usize
    }

    pub fn is_empty_pair(&self) -> bool {
        self.first.is_none() && self.second.is_none()
    }

    pub fn is_two_head(&self) -> bool {
        self.first.is_some() && self.second.is_some()
    }

    /// The head used by a one-head pair.
    pub fn single_head(&self) -> Option<Head> {
        match (self.first, self.second) {
            (Some(_), None) => Some(Head::First),
            (None, Some(_)) => Some(Head::Second),
            _ => None,
        }
    }

    /// The same pair with the roles of the heads interchanged.
    pub fn swapped(&self) -> Self {
        ReadPair::new(self.second, self.first)
    }

    /// Whether a step reading this pair can occur on the unread `window`.
    ///
    /// One physical letter is never read by both heads, so a two-head pair
    /// needs a window of length at least two.
    pub fn matches_window(&self, window: &[Letter]) -> bool {
        match (self.first, self.second) {
            (None, None) => true,
            (Some(a), None) => window.first() == Some(&a),
            (None, Some(b)) => window.last() == Some(&b),
            (Some(a), Some(b)) => window.len() >= 2 && window[0] == a && window[window.len() - 1] == b,
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        self.first.into_iter().chain(self.second)
    }
}

fn letter_or_lambda(f: &mut fmt::Formatter<'_>, letter: Option<Letter>) -> fmt::Result {
    match letter {
        Some(c) => write!(f, "{c}"),
        None => write!(f, "λ"),
    }
}

impl fmt::Display for ReadPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        letter_or_lambda(f, self.first)?;
        write!(f, ",")?;
        letter_or_lambda(f, self.second)?;
        write!(f, ")")
    }
}

impl FromStr for ReadPair {
    type Err = AutomatonError;

    /// Accepts `(a,λ)`, `(a,-)`, `(a,_)` and the same without parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AutomatonError::BadReadPair(s.to_string());
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(inner);
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let part = |p: &str| -> Result<Option<Letter>, AutomatonError> {
            let p = p.trim();
            match p {
                "" | "λ" | "-" | "_" => Ok(None),
                _ => {
                    let mut chars = p.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => Ok(Some(c)),
                        _ => Err(bad()),
                    }
                }
            }
        };
        Ok(ReadPair::new(part(a)?, part(b)?))
    }
}

/// Which of the two heads performed a read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Head {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: StateId,
    pub read: ReadPair,
    pub target: StateId,
}

impl Transition {
    pub fn new(source: StateId, read: ReadPair, target: StateId) -> Self {
        Transition { source, read, target }
    }
}

/// A configuration over some fixed input `w`: the unread window is
/// `w[left..right]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Configuration {
    pub state: StateId,
    pub left: usize,
    pub right: usize,
}

impl Configuration {
    pub fn new(state: StateId, left: usize, right: usize) -> Self {
        debug_assert!(left <= right);
        Configuration { state, left, right }
    }

    /// The starting configuration `(q0, w)` of an input of length `len`.
    pub fn start(automaton: &Automaton, len: usize) -> Self {
        Configuration::new(automaton.initial(), 0, len)
    }

    pub fn window<'w>(&self, word: &'w [Letter]) -> &'w [Letter] {
        &word[self.left..self.right]
    }

    pub fn window_len(&self) -> usize {
        self.right - self.left
    }

    pub fn is_exhausted(&self) -> bool {
        self.left == self.right
    }

    /// The configuration after taking `t` from here. The caller is expected
    /// to have checked applicability.
    pub fn after(&self, t: &Transition) -> Configuration {
        Configuration {
            state: t.target,
            left: self.left + t.read.first.is_some() as usize,
            right: self.right - t.read.second.is_some() as usize,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("automaton has no states")]
    NoStates,
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("state `{0}` is declared more than once")]
    DuplicateState(String),
    #[error("undeclared state `{0}`")]
    UnknownState(String),
    #[error("state index {0} is out of range")]
    StateOutOfRange(usize),
    #[error("letter `{0}` is not in the alphabet")]
    UnknownLetter(Letter),
    #[error("letter `{0}` appears twice in the alphabet")]
    DuplicateLetter(Letter),
    #[error("missing initial state")]
    MissingInitial,
    #[error("cannot parse read pair `{0}`")]
    BadReadPair(String),
}

/// A (possibly nondeterministic) two-head finite automaton `(Q, q0, V, δ, F)`.
///
/// Values are immutable once built. Transitions are kept sorted and
/// duplicate-free, and per-state indices of outgoing and incoming
/// transitions are precomputed.
#[derive(Clone, Debug)]
pub struct Automaton {
    states: Vec<String>,
    alphabet: Vec<Letter>,
    initial: StateId,
    finals: BTreeSet<StateId>,
    transitions: Vec<Transition>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
}

impl Automaton {
    /// Builds and validates an automaton from indexed parts.
    ///
    /// The alphabet is sorted and must not repeat letters; transitions are
    /// deduplicated.
    pub fn new(
        states: Vec<String>,
        alphabet: impl IntoIterator<Item = Letter>,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = Transition>,
    ) -> Result<Self, AutomatonError> {
        if states.is_empty() {
            return Err(AutomatonError::NoStates);
        }
        let mut seen = BTreeSet::new();
        for name in &states {
            if !seen.insert(name.as_str()) {
                return Err(AutomatonError::DuplicateState(name.clone()));
            }
        }
        let mut letters: Vec<Letter> = Vec::new();
        for c in alphabet {
            if letters.contains(&c) {
                return Err(AutomatonError::DuplicateLetter(c));
            }
            letters.push(c);
        }
        if letters.is_empty() {
            return Err(AutomatonError::EmptyAlphabet);
        }
        letters.sort_unstable();

        let n = states.len();
        let check = |s: StateId| {
            if s.0 < n {
                Ok(s)
            } else {
                Err(AutomatonError::StateOutOfRange(s.0))
            }
        };
        check(initial)?;
        let finals = finals
            .into_iter()
            .map(check)
            .collect::<Result<BTreeSet<_>, _>>()?;
        let mut transitions: Vec<Transition> = transitions.into_iter().collect();
        for t in &transitions {
            check(t.source)?;
            check(t.target)?;
            if let Some(c) = t.read.letters().find(|c| letters.binary_search(c).is_err()) {
                return Err(AutomatonError::UnknownLetter(c));
            }
        }
        transitions.sort_unstable();
        transitions.dedup();

        let mut outgoing = vec![Vec::new(); n];
        let mut incoming = vec![Vec::new(); n];
        for (k, t) in transitions.iter().enumerate() {
            outgoing[t.source.0].push(k);
            incoming[t.target.0].push(k);
        }
        Ok(Automaton {
            states,
            alphabet: letters,
            initial,
            finals,
            transitions,
            outgoing,
            incoming,
        })
    }

    /// Starts a builder that refers to states by name.
    pub fn builder(alphabet: &str) -> AutomatonBuilder {
        AutomatonBuilder {
            alphabet: alphabet.chars().collect(),
            states: Vec::new(),
            initial: None,
            finals: Vec::new(),
            transitions: Vec::new(),
        }
    }

    /// Convenience constructor with generated state names `q0, q1, ...`.
    pub fn with_state_count(
        count: usize,
        alphabet: impl IntoIterator<Item = Letter>,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
        transitions: impl IntoIterator<Item = Transition>,
    ) -> Result<Self, AutomatonError> {
        let states = (0..count).map(|k| format!("q{k}")).collect();
        Automaton::new(states, alphabet, initial, finals, transitions)
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn state_ids(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.states.len()).map(StateId)
    }

    pub fn state_name(&self, s: StateId) -> &str {
        &self.states[s.0]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.states.iter().position(|s| s == name).map(StateId)
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_final(&self, s: StateId) -> bool {
        self.finals.contains(&s)
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn outgoing(&self, s: StateId) -> impl Iterator<Item = &Transition> + '_ {
        self.outgoing[s.0].iter().map(move |&k| &self.transitions[k])
    }

    pub fn incoming(&self, s: StateId) -> impl Iterator<Item = &Transition> + '_ {
        self.incoming[s.0].iter().map(move |&k| &self.transitions[k])
    }

    /// All transitions applicable at `config` over `word`.
    pub fn applicable_transitions(&self, word: &[Letter], config: &Configuration) -> Vec<Transition> {
        self.applicable(word, config).copied().collect()
    }

    pub(crate) fn applicable<'a>(
        &'a self,
        word: &'a [Letter],
        config: &Configuration,
    ) -> impl Iterator<Item = &'a Transition> + 'a {
        let window = config.window(word);
        self.outgoing(config.state)
            .filter(move |t| t.read.matches_window(window))
    }

    /// Same automaton with a different set of final states.
    pub fn with_finals(&self, finals: impl IntoIterator<Item = StateId>) -> Result<Self, AutomatonError> {
        Automaton::new(
            self.states.clone(),
            self.alphabet.iter().copied(),
            self.initial,
            finals,
            self.transitions.iter().copied(),
        )
    }

    /// Same states, initial and finals, different transition set.
    pub fn with_transitions(
        &self,
        transitions: impl IntoIterator<Item = Transition>,
    ) -> Result<Self, AutomatonError> {
        Automaton::new(
            self.states.clone(),
            self.alphabet.iter().copied(),
            self.initial,
            self.finals.iter().copied(),
            transitions,
        )
    }

    /// Renders a transition with state names, e.g. `q0 -(b,λ)-> q`.
    pub fn describe(&self, t: &Transition) -> String {
        format!(
            "{} -{}-> {}",
            self.state_name(t.source),
            t.read,
            self.state_name(t.target)
        )
    }

    fn named_transitions(&self) -> BTreeSet<(&str, ReadPair, &str)> {
        self.transitions
            .iter()
            .map(|t| (self.state_name(t.source), t.read, self.state_name(t.target)))
            .collect()
    }

    fn named_finals(&self) -> BTreeSet<&str> {
        self.finals.iter().map(|&s| self.state_name(s)).collect()
    }
}

/// Two automata are equal when they agree up to the order in which states
/// were declared.
impl PartialEq for Automaton {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.state_name(self.initial) == other.state_name(other.initial)
            && self.states.iter().collect::<BTreeSet<_>>() == other.states.iter().collect::<BTreeSet<_>>()
            && self.named_finals() == other.named_finals()
            && self.named_transitions() == other.named_transitions()
    }
}

impl Eq for Automaton {}

/// Name-based construction. States are declared on first mention, the
/// initial state first.
#[derive(Clone, Debug)]
pub struct AutomatonBuilder {
    alphabet: Vec<Letter>,
    states: Vec<String>,
    initial: Option<String>,
    finals: Vec<String>,
    transitions: Vec<(String, ReadPair, String)>,
}

impl AutomatonBuilder {
    pub fn state(mut self, name: &str) -> Self {
        self.declare(name);
        self
    }

    pub fn initial(mut self, name: &str) -> Self {
        self.declare(name);
        self.initial = Some(name.to_string());
        self
    }

    pub fn finals<'a>(mut self, names: impl IntoIterator<Item = &'a str>) -> Self {
        for name in names {
            self.declare(name);
            self.finals.push(name.to_string());
        }
        self
    }

    pub fn transition(mut self, from: &str, read: ReadPair, to: &str) -> Self {
        self.declare(from);
        self.declare(to);
        self.transitions.push((from.to_string(), read, to.to_string()));
        self
    }

    fn declare(&mut self, name: &str) {
        if !self.states.iter().any(|s| s == name) {
            self.states.push(name.to_string());
        }
    }

    pub fn build(self) -> Result<Automaton, AutomatonError> {
        let mut index = BTreeMap::new();
        let initial_name = self.initial.ok_or(AutomatonError::MissingInitial)?;
        // initial state goes first so that generated orderings start there
        let mut states = vec![initial_name.clone()];
        states.extend(self.states.into_iter().filter(|s| *s != initial_name));
        for (k, s) in states.iter().enumerate() {
            index.insert(s.clone(), StateId(k));
        }
        let finals: Vec<StateId> = self.finals.iter().map(|f| index[f]).collect();
        let transitions: Vec<Transition> = self
            .transitions
            .iter()
            .map(|(f, r, t)| Transition::new(index[f], *r, index[t]))
            .collect();
        Automaton::new(states, self.alphabet, StateId(0), finals, transitions)
    }
}

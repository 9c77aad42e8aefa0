//! Structural property checkers.
//!
//! Each checker inspects the transition table only and returns a
//! [`PropertyReport`] listing every offending transition pair or state.
//! The bounded semantic oracles in [`crate::oracle`] decide the same
//! properties by brute force and are used to cross-check these.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::automaton::{Automaton, Head, Letter, ReadPair, StateId, Transition};
use crate::report::{PropertyReport, Subject, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("{property} is not applicable: {reason}")]
    NotApplicable { property: &'static str, reason: String },
}

/// The structural properties that profiles and search filters talk about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Deterministic,
    BackwardDeterministic,
    Reversible,
    OneLimited,
    Complete,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::Deterministic,
        Property::BackwardDeterministic,
        Property::Reversible,
        Property::OneLimited,
        Property::Complete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Deterministic => "deterministic",
            Property::BackwardDeterministic => "backward-deterministic",
            Property::Reversible => "reversible",
            Property::OneLimited => "1-limited",
            Property::Complete => "complete",
        }
    }

    /// Measures the property; `None` when it is not defined for `automaton`
    /// (completeness of a nondeterministic machine).
    pub fn measure(self, automaton: &Automaton) -> Option<bool> {
        match self {
            Property::Deterministic => Some(check_deterministic(automaton).verdict),
            Property::BackwardDeterministic => Some(check_backward_deterministic(automaton).verdict),
            Property::Reversible => Some(check_reversible(automaton).verdict),
            Property::OneLimited => Some(check_one_limited(automaton).verdict),
            Property::Complete => check_complete(automaton).ok().map(|r| r.verdict),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "det" | "deterministic" => Ok(Property::Deterministic),
            "bdet" | "backward" | "backward-deterministic" => Ok(Property::BackwardDeterministic),
            "rev" | "reversible" => Ok(Property::Reversible),
            "1lim" | "1-limited" | "one-limited" => Ok(Property::OneLimited),
            "complete" => Ok(Property::Complete),
            other => Err(format!("unknown property `{other}`")),
        }
    }
}

fn pair_witness(a: &Automaton, reason: &str, t1: &Transition, t2: &Transition) -> Witness {
    Witness::new(
        reason,
        format!("{} and {}", a.describe(t1), a.describe(t2)),
        Subject::Transitions(vec![*t1, *t2]),
    )
}

/// The four conditions characterizing determinism:
/// 1. no `(λ,λ)` transitions;
/// 2. at most one target per state and read pair;
/// 3. if `(a,λ)` is defined at `q`, every other pair `(c,d)` at `q` has
///    `c ≠ a` and `c ≠ λ`;
/// 4. symmetrically for `(λ,a)` and the second component.
pub fn check_deterministic(a: &Automaton) -> PropertyReport {
    let mut witnesses = Vec::new();
    for q in a.state_ids() {
        let out: Vec<&Transition> = a.outgoing(q).collect();
        for t in out.iter().filter(|t| t.read.is_empty_pair()) {
            witnesses.push(Witness::new(
                "condition 1 (no (λ,λ) transition)",
                a.describe(t),
                Subject::Transitions(vec![**t]),
            ));
        }
        let mut by_pair: BTreeMap<ReadPair, Vec<Transition>> = BTreeMap::new();
        for t in &out {
            by_pair.entry(t.read).or_default().push(**t);
        }
        for (read, ts) in &by_pair {
            if ts.len() > 1 && !read.is_empty_pair() {
                let targets: Vec<&str> = ts.iter().map(|t| a.state_name(t.target)).collect();
                witnesses.push(Witness::new(
                    "condition 2 (at most one target per read pair)",
                    format!("{} -{}-> {{{}}}", a.state_name(q), read, targets.join(", ")),
                    Subject::Transitions(ts.clone()),
                ));
            }
        }
        let pairs: Vec<ReadPair> = by_pair.keys().copied().collect();
        for (i, &p) in pairs.iter().enumerate() {
            for &r in &pairs[i + 1..] {
                let t1 = by_pair[&p][0];
                let t2 = by_pair[&r][0];
                if violates_first_head_condition(p, r) || violates_first_head_condition(r, p) {
                    witnesses.push(pair_witness(
                        a,
                        "condition 3 (first-head step must be unambiguous)",
                        &t1,
                        &t2,
                    ));
                }
                if violates_second_head_condition(p, r) || violates_second_head_condition(r, p) {
                    witnesses.push(pair_witness(
                        a,
                        "condition 4 (second-head step must be unambiguous)",
                        &t1,
                        &t2,
                    ));
                }
            }
        }
    }
    PropertyReport::from_violations(Property::Deterministic.name(), witnesses)
}

/// `single` is `(a,λ)` and `other` is some distinct pair `(c,d)` with
/// `c = a` or `c = λ`.
pub(crate) fn violates_first_head_condition(single: ReadPair, other: ReadPair) -> bool {
    match single {
        ReadPair {
            first: Some(a),
            second: None,
        } => other.first.is_none() || other.first == Some(a),
        _ => false,
    }
}

pub(crate) fn violates_second_head_condition(single: ReadPair, other: ReadPair) -> bool {
    match single {
        ReadPair {
            first: None,
            second: Some(a),
        } => other.second.is_none() || other.second == Some(a),
        _ => false,
    }
}

/// Two components can be read from the same position of some input.
fn compatible(x: Option<Letter>, y: Option<Letter>) -> bool {
    x.is_none() || y.is_none() || x == y
}

/// Two transitions into the same state give the same configuration two
/// predecessors on some input exactly when their read pairs overlap
/// componentwise.
pub fn read_pairs_overlap(p: ReadPair, r: ReadPair) -> bool {
    compatible(p.first, r.first) && compatible(p.second, r.second)
}

/// The letter-count reading of the pairwise reversibility condition:
/// `a ≠ c or b ≠ d`, with `|ad| ≥ 1` and `|bc| ≥ 1`.
pub fn letter_count_condition_holds(p: ReadPair, r: ReadPair) -> bool {
    let differ = p != r;
    let ad = p.first.is_some() as usize + r.second.is_some() as usize;
    let bc = p.second.is_some() as usize + r.first.is_some() as usize;
    differ && ad >= 1 && bc >= 1
}

fn incoming_pairs(a: &Automaton) -> Vec<(Transition, Transition)> {
    let mut out = Vec::new();
    for p in a.state_ids() {
        let inc: Vec<&Transition> = a.incoming(p).collect();
        for (i, t1) in inc.iter().enumerate() {
            for t2 in &inc[i + 1..] {
                out.push((**t1, **t2));
            }
        }
    }
    out
}

/// Backward determinism: no two distinct transitions into the same state
/// have overlapping read pairs.
///
/// Pairs where the letter-count reading of the condition would decide
/// differently are listed as notes.
pub fn check_backward_deterministic(a: &Automaton) -> PropertyReport {
    let mut witnesses = Vec::new();
    let mut notes = Vec::new();
    for (t1, t2) in incoming_pairs(a) {
        let overlap = read_pairs_overlap(t1.read, t2.read);
        if overlap {
            witnesses.push(pair_witness(
                a,
                &format!("overlapping read pairs into {}", a.state_name(t1.target)),
                &t1,
                &t2,
            ));
        }
        let letter_count =
            letter_count_condition_holds(t1.read, t2.read) && letter_count_condition_holds(t2.read, t1.read);
        if overlap == letter_count {
            notes.push(format!(
                "{} and {}: overlap rule says {}, letter-count rule says {}",
                a.describe(&t1),
                a.describe(&t2),
                if overlap { "ambiguous" } else { "unambiguous" },
                if letter_count { "unambiguous" } else { "ambiguous" },
            ));
        }
    }
    let mut report = PropertyReport::from_violations(Property::BackwardDeterministic.name(), witnesses);
    report.notes = notes;
    report
}

/// Deterministic and backward deterministic.
pub fn check_reversible(a: &Automaton) -> PropertyReport {
    PropertyReport::all_of(
        Property::Reversible.name(),
        vec![check_deterministic(a), check_backward_deterministic(a)],
    )
}

/// Every transition reads exactly one letter with exactly one head.
pub fn check_one_limited(a: &Automaton) -> PropertyReport {
    let witnesses = a
        .transitions()
        .iter()
        .filter(|t| t.read.letter_count() != 1)
        .map(|t| {
            let reason = if t.read.is_empty_pair() {
                "reads no letter"
            } else {
                "both heads read"
            };
            Witness::new(reason, a.describe(t), Subject::Transitions(vec![*t]))
        })
        .collect();
    PropertyReport::from_violations(Property::OneLimited.name(), witnesses)
}

/// For a deterministic automaton: never stuck on a nonempty window.
///
/// This holds exactly when every state is first-full (has `(x,λ)` for every
/// letter `x`) or second-full (has `(λ,x)` for every letter `x`): a
/// one-letter window must be readable by a one-head step, and determinism
/// forbids mixing heads among one-head steps at a state.
pub fn check_complete(a: &Automaton) -> Result<PropertyReport, AnalysisError> {
    if !check_deterministic(a).verdict {
        return Err(AnalysisError::NotApplicable {
            property: "complete",
            reason: "automaton is not deterministic".to_string(),
        });
    }
    let mut witnesses = Vec::new();
    for q in a.state_ids() {
        let reads: BTreeSet<ReadPair> = a.outgoing(q).map(|t| t.read).collect();
        let missing = |head: Head| -> Vec<Letter> {
            a.alphabet()
                .iter()
                .copied()
                .filter(|&x| {
                    let pair = match head {
                        Head::First => ReadPair::first_head(x),
                        Head::Second => ReadPair::second_head(x),
                    };
                    !reads.contains(&pair)
                })
                .collect()
        };
        let first_missing = missing(Head::First);
        let second_missing = missing(Head::Second);
        if !first_missing.is_empty() && !second_missing.is_empty() {
            // report the head the state already uses, if any
            let (head, gaps) = if first_missing.len() <= second_missing.len() {
                ("first", first_missing)
            } else {
                ("second", second_missing)
            };
            let gaps: String = gaps.iter().collect();
            witnesses.push(Witness::new(
                "neither first-full nor second-full",
                format!("{} ({head} head misses {gaps})", a.state_name(q)),
                Subject::States(vec![q]),
            ));
        }
    }
    Ok(PropertyReport::from_violations(
        Property::Complete.name(),
        witnesses,
    ))
}

/// Which head a state's incoming or outgoing transitions use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HeadUse {
    First,
    Second,
    None,
}

impl HeadUse {
    fn tag(self) -> char {
        match self {
            HeadUse::First => 'F',
            HeadUse::Second => 'S',
            HeadUse::None => 'N',
        }
    }

    fn from_tag(c: char) -> Option<Self> {
        match c {
            'F' => Some(HeadUse::First),
            'S' => Some(HeadUse::Second),
            'N' => Some(HeadUse::None),
            _ => None,
        }
    }
}

/// Class of a state in a 1-limited reversible automaton: the head used to
/// enter it and the head used to leave it. `NN` is the isolated state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateClass {
    pub incoming: HeadUse,
    pub outgoing: HeadUse,
}

impl StateClass {
    pub const fn new(incoming: HeadUse, outgoing: HeadUse) -> Self {
        StateClass { incoming, outgoing }
    }

    pub fn is_isolated(&self) -> bool {
        self.incoming == HeadUse::None && self.outgoing == HeadUse::None
    }
}

impl fmt::Display for StateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_isolated() {
            f.write_str("ISOLATED")
        } else {
            write!(f, "{}{}", self.incoming.tag(), self.outgoing.tag())
        }
    }
}

impl FromStr for StateClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "ISOLATED" {
            return Ok(StateClass::new(HeadUse::None, HeadUse::None));
        }
        let mut chars = s.chars();
        match (
            chars.next().and_then(HeadUse::from_tag),
            chars.next().and_then(HeadUse::from_tag),
            chars.next(),
        ) {
            (Some(i), Some(o), None) if !(i == HeadUse::None && o == HeadUse::None) => {
                Ok(StateClass::new(i, o))
            }
            _ => Err(format!("unknown state class `{s}`")),
        }
    }
}

fn head_use(heads: &BTreeSet<Option<Head>>) -> Result<HeadUse, ()> {
    let mut it = heads.iter();
    match (it.next(), it.next()) {
        (None, _) => Ok(HeadUse::None),
        (Some(Some(Head::First)), None) => Ok(HeadUse::First),
        (Some(Some(Head::Second)), None) => Ok(HeadUse::Second),
        _ => Err(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub classes: BTreeMap<StateId, StateClass>,
    pub report: PropertyReport,
}

impl Classification {
    /// Distinct non-isolated classes in use.
    pub fn distinct_classes(&self) -> BTreeSet<StateClass> {
        self.classes
            .values()
            .copied()
            .filter(|c| !c.is_isolated())
            .collect()
    }
}

/// Assigns every state of a 1-limited reversible automaton its
/// (incoming head, outgoing head) class and checks the placement rules:
/// only the initial state may lack incoming transitions, only final states
/// may lack outgoing ones, and an isolated state only occurs in the
/// automaton without transitions.
pub fn classify_states(a: &Automaton) -> Result<Classification, AnalysisError> {
    let one_limited = check_one_limited(a);
    let reversible = check_reversible(a);
    if !one_limited.verdict || !reversible.verdict {
        let failed: Vec<&str> = [&one_limited, &reversible]
            .iter()
            .filter(|r| !r.verdict)
            .map(|r| r.property.as_str())
            .collect();
        return Err(AnalysisError::NotApplicable {
            property: "classify",
            reason: format!("automaton is not {}", failed.join(" and ")),
        });
    }

    let mut classes = BTreeMap::new();
    let mut witnesses = Vec::new();
    for q in a.state_ids() {
        let ins: BTreeSet<Option<Head>> = a.incoming(q).map(|t| t.read.single_head()).collect();
        let outs: BTreeSet<Option<Head>> = a.outgoing(q).map(|t| t.read.single_head()).collect();
        let name = a.state_name(q);
        let (inc, out) = match (head_use(&ins), head_use(&outs)) {
            (Ok(i), Ok(o)) => (i, o),
            (i, _) => {
                let side = if i.is_err() { "incoming" } else { "outgoing" };
                witnesses.push(Witness::new(
                    format!("{side} transitions use both heads"),
                    name.to_string(),
                    Subject::States(vec![q]),
                ));
                continue;
            }
        };
        let class = StateClass::new(inc, out);
        if class.is_isolated() {
            if !a.transitions().is_empty() {
                witnesses.push(Witness::new(
                    "isolated state in an automaton with transitions",
                    name.to_string(),
                    Subject::States(vec![q]),
                ));
            }
        } else if inc == HeadUse::None && q != a.initial() {
            witnesses.push(Witness::new(
                format!("class {class} is reserved for the initial state"),
                name.to_string(),
                Subject::States(vec![q]),
            ));
        } else if out == HeadUse::None && !a.is_final(q) {
            witnesses.push(Witness::new(
                format!("class {class} is reserved for final states"),
                name.to_string(),
                Subject::States(vec![q]),
            ));
        }
        classes.insert(q, class);
    }

    let sources: Vec<StateId> = classes
        .iter()
        .filter(|(_, c)| c.incoming == HeadUse::None && !c.is_isolated())
        .map(|(&q, _)| q)
        .collect();
    let source_classes: BTreeSet<StateClass> = sources.iter().map(|q| classes[q]).collect();
    if source_classes.len() > 1 {
        witnesses.push(Witness::new(
            "both NF and NS occur",
            sources
                .iter()
                .map(|&q| a.state_name(q))
                .collect::<Vec<_>>()
                .join(", "),
            Subject::States(sources.clone()),
        ));
    }
    let distinct: BTreeSet<StateClass> = classes.values().copied().filter(|c| !c.is_isolated()).collect();
    if distinct.len() > 7 {
        witnesses.push(Witness::new(
            "more than 7 classes in use",
            distinct
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(", "),
            Subject::States(classes.keys().copied().collect()),
        ));
    }

    let mut report = PropertyReport::from_violations("classify", witnesses);
    for (q, c) in &classes {
        report.notes.push(format!("{} ↦ {}", a.state_name(*q), c));
    }
    Ok(Classification { classes, report })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphAnalysis {
    pub reachable: BTreeSet<StateId>,
    pub unreachable: BTreeSet<StateId>,
    /// Whether the transition graph restricted to reachable states is
    /// strongly connected.
    pub strongly_connected: bool,
    pub report: PropertyReport,
}

fn closure(start: StateId, n: usize, next: impl Fn(StateId) -> Vec<StateId>) -> BTreeSet<StateId> {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([start]);
    seen[start.0] = true;
    while let Some(q) = queue.pop_front() {
        for r in next(q) {
            if !seen[r.0] {
                seen[r.0] = true;
                queue.push_back(r);
            }
        }
    }
    (0..n).filter(|&k| seen[k]).map(StateId).collect()
}

/// States reachable from the initial state in the transition graph.
///
/// A transition path is always realized by some input (first-head letters
/// in order, then second-head letters in reverse), so this is also the set
/// of states that occur in computations.
pub fn reachable_states(a: &Automaton) -> BTreeSet<StateId> {
    closure(a.initial(), a.state_count(), |q| {
        a.outgoing(q).map(|t| t.target).collect()
    })
}

pub fn graph_analysis(a: &Automaton) -> GraphAnalysis {
    let reachable = reachable_states(a);
    let unreachable: BTreeSet<StateId> = a.state_ids().filter(|q| !reachable.contains(q)).collect();
    // every reachable state must lead back to the initial state
    let back = closure(a.initial(), a.state_count(), |q| {
        a.incoming(q)
            .map(|t| t.source)
            .filter(|s| reachable.contains(s))
            .collect()
    });
    let stranded: Vec<StateId> = reachable.iter().copied().filter(|q| !back.contains(q)).collect();
    let witnesses = stranded
        .iter()
        .map(|&q| {
            Witness::new(
                "cannot return to the initial state",
                a.state_name(q).to_string(),
                Subject::States(vec![q]),
            )
        })
        .collect();
    let mut report = PropertyReport::from_violations("strongly-connected", witnesses);
    let names = |set: &BTreeSet<StateId>| {
        set.iter()
            .map(|&q| a.state_name(q))
            .collect::<Vec<_>>()
            .join(", ")
    };
    report.notes.push(format!("reachable: {{{}}}", names(&reachable)));
    if !unreachable.is_empty() {
        report
            .notes
            .push(format!("unreachable: {{{}}}", names(&unreachable)));
    }
    GraphAnalysis {
        reachable,
        unreachable,
        strongly_connected: stranded.is_empty(),
        report,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::ReadPair as R;

    fn ba() -> Automaton {
        Automaton::builder("ab")
            .initial("q0")
            .transition("q0", R::first_head('b'), "q")
            .transition("q", R::second_head('a'), "q0")
            .finals(["q0", "q"])
            .build()
            .unwrap()
    }

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

    fn palin() -> Automaton {
        Automaton::builder("ab")
            .initial("q0")
            .transition("q0", R::first_head('a'), "qa")
            .transition("qa", R::second_head('a'), "q0")
            .transition("q0", R::first_head('b'), "qb")
            .transition("qb", R::second_head('b'), "q0")
            .finals(["q0", "qa", "qb"])
            .build()
            .unwrap()
    }

    fn vstar() -> Automaton {
        Automaton::builder("ab")
            .initial("s")
            .transition("s", R::first_head('a'), "s")
            .transition("s", R::first_head('b'), "s")
            .finals(["s"])
            .build()
            .unwrap()
    }

    fn single(from: &str, read: R, to: &str, alphabet: &str) -> crate::automaton::AutomatonBuilder {
        Automaton::builder(alphabet)
            .initial(from)
            .transition(from, read, to)
    }

    fn classes_by_name(a: &Automaton) -> BTreeMap<String, String> {
        classify_states(a)
            .unwrap()
            .classes
            .iter()
            .map(|(q, c)| (a.state_name(*q).to_string(), c.to_string()))
            .collect()
    }

    #[test]
    fn determinism_examples() {
        assert!(check_deterministic(&wcb()).verdict);
        let mixed = single("q", R::first_head('a'), "q", "ab")
            .transition("q", R::second_head('b'), "q")
            .build()
            .unwrap();
        let r = check_deterministic(&mixed);
        assert!(!r.verdict);
        assert!(r.witnesses.iter().any(|w| w.reason.starts_with("condition 4")));
        let lam = single("q", R::EMPTY, "q", "a").build().unwrap();
        let r = check_deterministic(&lam);
        assert!(!r.verdict);
        assert!(r.witnesses[0].reason.starts_with("condition 1"));
    }

    #[test]
    fn condition_two_and_three() {
        let two = single("q", R::first_head('a'), "q", "ab")
            .transition("q", R::first_head('a'), "p")
            .build()
            .unwrap();
        let r = check_deterministic(&two);
        assert!(r.witnesses.iter().any(|w| w.reason.starts_with("condition 2")));
        let three = single("q", R::first_head('a'), "q", "ab")
            .transition("q", R::both('a', 'b'), "q")
            .build()
            .unwrap();
        let r = check_deterministic(&three);
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.witnesses[0].reason.starts_with("condition 3"));
        // different first letters never compete
        let fine = single("q", R::first_head('a'), "q", "ab")
            .transition("q", R::both('b', 'a'), "q")
            .transition("q", R::both('b', 'b'), "q")
            .build()
            .unwrap();
        assert!(check_deterministic(&fine).verdict);
    }

    #[test]
    fn backward_determinism_examples() {
        assert!(check_backward_deterministic(&palin()).verdict);
        let r = check_backward_deterministic(&ab());
        assert!(!r.verdict);
        assert_eq!(r.witnesses.len(), 1);
        let mixed = Automaton::builder("xy")
            .initial("s")
            .transition("s", R::second_head('x'), "p")
            .transition("t", R::first_head('y'), "p")
            .transition("s", R::first_head('x'), "t")
            .build()
            .unwrap();
        assert!(!check_backward_deterministic(&mixed).verdict);
    }

    #[test]
    fn letter_count_reading_disagreement_is_noted() {
        let a = Automaton::builder("ab")
            .initial("s")
            .transition("s", R::first_head('a'), "p")
            .transition("s", R::first_head('b'), "t")
            .transition("t", R::both('a', 'b'), "p")
            .build()
            .unwrap();
        let r = check_backward_deterministic(&a);
        assert!(!r.verdict);
        assert_eq!(r.notes.len(), 1);
        assert!(letter_count_condition_holds(
            R::first_head('a'),
            R::both('a', 'b')
        ));
        assert!(read_pairs_overlap(R::first_head('a'), R::both('a', 'b')));
    }

    #[test]
    fn reversibility_examples() {
        assert!(check_reversible(&ba()).verdict);
        assert!(check_reversible(&wcb()).verdict);
        assert!(!check_reversible(&ab()).verdict);
    }

    #[test]
    fn one_limited_examples() {
        assert!(check_one_limited(&ba()).verdict);
        let r = check_one_limited(&wcb());
        assert!(!r.verdict);
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.witnesses[0].detail.contains("(b,b)"));
        let empty = Automaton::builder("a").initial("s").build().unwrap();
        assert!(check_one_limited(&empty).verdict);
    }

    #[test]
    fn completeness_examples() {
        assert!(check_complete(&vstar()).unwrap().verdict);
        let r = check_complete(&ba()).unwrap();
        assert!(!r.verdict);
        assert!(r
            .witnesses
            .iter()
            .any(|w| w.subject == Subject::States(vec![StateId(0)])));
        assert!(!check_complete(&wcb()).unwrap().verdict);
        assert!(check_complete(&ab()).is_ok());
        let nondet = single("q", R::EMPTY, "q", "a").build().unwrap();
        assert!(matches!(
            check_complete(&nondet),
            Err(AnalysisError::NotApplicable { .. })
        ));
    }

    #[test]
    fn classification_examples() {
        let ba_classes = classes_by_name(&ba());
        assert_eq!(ba_classes["q0"], "SF");
        assert_eq!(ba_classes["q"], "FS");
        let p = classes_by_name(&palin());
        assert_eq!(p["q0"], "SF");
        assert_eq!(p["qa"], "FS");
        assert_eq!(p["qb"], "FS");
        let lone = Automaton::builder("a")
            .initial("q0")
            .finals(["q0"])
            .build()
            .unwrap();
        let c = classify_states(&lone).unwrap();
        assert!(c.report.verdict);
        assert_eq!(c.classes[&StateId(0)].to_string(), "ISOLATED");
        assert!(classify_states(&wcb()).is_err());
    }

    #[test]
    fn classification_flags_nonfinal_sink() {
        let a = single("s", R::first_head('a'), "t", "a").build().unwrap();
        let c = classify_states(&a).unwrap();
        assert!(!c.report.verdict);
        assert_eq!(c.classes[&StateId(1)].to_string(), "FN");
    }

    #[test]
    fn state_class_text() {
        for s in ["FF", "FS", "SF", "SS", "NF", "NS", "FN", "SN", "ISOLATED"] {
            assert_eq!(s.parse::<StateClass>().unwrap().to_string(), s);
        }
        assert!("NN".parse::<StateClass>().is_err());
    }

    #[test]
    fn graph_examples() {
        let g = graph_analysis(&ba());
        assert_eq!(g.reachable.len(), 2);
        assert!(g.strongly_connected);
        let g = graph_analysis(&wcb());
        assert!(!g.strongly_connected);
        assert_eq!(g.report.witnesses.len(), 1);
        assert!(graph_analysis(&vstar()).strongly_connected);
        let with_orphan = Automaton::builder("a")
            .initial("s")
            .state("orphan")
            .build()
            .unwrap();
        let g = graph_analysis(&with_orphan);
        assert_eq!(g.unreachable.len(), 1);
        assert!(g.strongly_connected);
    }

    #[test]
    fn property_names_parse() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert_eq!("1lim".parse::<Property>().unwrap(), Property::OneLimited);
    }
}

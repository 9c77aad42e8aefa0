//! Constructions on automata.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::analyze::{check_backward_deterministic, check_complete, check_reversible, Property};
use crate::automaton::{Automaton, StateId, Transition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("precondition violated: automaton is not {0}")]
    Precondition(Property),
}

/// Interchanges the roles of the two heads in every transition. The result
/// accepts the reversal of the language.
pub fn reverse(a: &Automaton) -> Automaton {
    a.with_transitions(
        a.transitions()
            .iter()
            .map(|t| Transition::new(t.source, t.read.swapped(), t.target)),
    )
    .expect("swapping heads keeps the automaton valid")
}

/// Complement of a complete reversible automaton: same machine, final states
/// replaced by their complement.
///
/// Non-complete inputs are refused; completing them would need a sink state,
/// which is not backward deterministic.
pub fn complement_complete(a: &Automaton) -> Result<Automaton, TransformError> {
    if !check_reversible(a).verdict {
        return Err(TransformError::Precondition(Property::Reversible));
    }
    match check_complete(a) {
        Ok(r) if r.verdict => {}
        _ => return Err(TransformError::Precondition(Property::Complete)),
    }
    let finals: Vec<StateId> = a.state_ids().filter(|q| !a.is_final(*q)).collect();
    Ok(a.with_finals(finals).expect("same states"))
}

#[derive(Clone, Debug)]
pub struct LambdaElimination {
    pub automaton: Automaton,
    pub notes: Vec<String>,
}

/// States reachable from `q` by `(λ,λ)` transitions alone, `q` included.
fn lambda_closure(a: &Automaton, q: StateId) -> BTreeSet<StateId> {
    let mut seen = BTreeSet::from([q]);
    let mut stack = vec![q];
    while let Some(s) = stack.pop() {
        for t in a.outgoing(s).filter(|t| t.read.is_empty_pair()) {
            if seen.insert(t.target) {
                stack.push(t.target);
            }
        }
    }
    seen
}

/// Removes `(λ,λ)` transitions without changing the language.
///
/// Each state `q` inherits every reading transition of the states in its
/// `(λ,λ)`-closure, and becomes final if its closure meets a final state.
/// The result may lose backward determinism; a note says so.
pub fn eliminate_lambda_pairs(a: &Automaton) -> LambdaElimination {
    if a.transitions().iter().all(|t| !t.read.is_empty_pair()) {
        return LambdaElimination {
            automaton: a.clone(),
            notes: Vec::new(),
        };
    }
    let mut transitions = Vec::new();
    let mut finals = Vec::new();
    for q in a.state_ids() {
        let closure = lambda_closure(a, q);
        if closure.iter().any(|r| a.is_final(*r)) {
            finals.push(q);
        }
        for &r in &closure {
            transitions.extend(
                a.outgoing(r)
                    .filter(|t| !t.read.is_empty_pair())
                    .map(|t| Transition::new(q, t.read, t.target)),
            );
        }
    }
    let out = Automaton::new(
        a.states().to_vec(),
        a.alphabet().iter().copied(),
        a.initial(),
        finals,
        transitions,
    )
    .expect("same states and letters");
    let mut notes = Vec::new();
    if check_backward_deterministic(a).verdict && !check_backward_deterministic(&out).verdict {
        notes.push("eliminating (λ,λ) transitions destroyed backward determinism".to_string());
    }
    LambdaElimination {
        automaton: out,
        notes,
    }
}

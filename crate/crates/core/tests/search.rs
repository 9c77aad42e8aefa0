//! Cross-checks the pruned, symmetry-reduced search against a plain
//! enumeration of every labelled transition table.

use twohead_core::analyze::{reachable_states, Property};
use twohead_core::oracle::{language_equal, search_automata, LanguagePredicate, OracleError, SearchConfig};
use twohead_core::{Automaton, Letter, ReadPair, StateId, Transition};

fn pairs(v: &[Letter], one_limited: bool) -> Vec<ReadPair> {
    let opts: Vec<Option<Letter>> = std::iter::once(None).chain(v.iter().copied().map(Some)).collect();
    let mut out = Vec::new();
    for &f in &opts {
        for &s in &opts {
            let p = ReadPair::new(f, s);
            if !p.is_empty_pair() && (!one_limited || p.letter_count() == 1) {
                out.push(p);
            }
        }
    }
    out
}

/// Number of labelled machines with exactly `m` states, initial state q0 and
/// every state reachable, that pass `filters` and agree with `target` up to
/// `n`. Each (state, pair) gets no target or exactly one, so only
/// deterministic filters are meaningful here.
fn labelled_count(target: &LanguagePredicate, m: usize, n: usize, filters: &[Property]) -> u64 {
    let v = target.alphabet();
    let ps = pairs(v, filters.contains(&Property::OneLimited));
    let slots = m * ps.len();
    let choices = (m + 1) as u64;
    let mut count = 0;
    for code in 0..choices.pow(slots as u32) {
        let mut rest = code;
        let mut ts = Vec::new();
        for slot in 0..slots {
            let pick = (rest % choices) as usize;
            rest /= choices;
            if pick > 0 {
                ts.push(Transition::new(
                    StateId(slot / ps.len()),
                    ps[slot % ps.len()],
                    StateId(pick - 1),
                ));
            }
        }
        let table = Automaton::with_state_count(m, v.iter().copied(), StateId(0), [], ts).unwrap();
        if reachable_states(&table).len() != m || !filters.iter().all(|p| p.measure(&table) == Some(true)) {
            continue;
        }
        for f in 0u32..(1 << m) {
            let finals = (0..m).filter(|q| f & (1 << q) != 0).map(StateId);
            let a = table.with_finals(finals).unwrap();
            if language_equal(&a, target, n).unwrap().verdict {
                count += 1;
            }
        }
    }
    count
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

fn check_against_brute_force(target: LanguagePredicate, k: usize, n: usize, filters: &[Property]) {
    let report = search_automata(&target, &SearchConfig::new(k, n, filters.iter().copied())).unwrap();
    for m in 1..=k {
        let canonical = report
            .candidates()
            .iter()
            .filter(|a| a.state_count() == m)
            .count() as u64;
        // reachable deterministic machines have no nontrivial automorphism
        // fixing the initial state, so each canonical machine stands for
        // (m-1)! labelled ones
        assert_eq!(
            canonical * factorial(m - 1),
            labelled_count(&target, m, n, filters),
            "{} with {m} states",
            target.name()
        );
    }
    for a in report.candidates() {
        for p in filters {
            assert_eq!(p.measure(a), Some(true));
        }
        assert!(language_equal(a, &target, n).unwrap().verdict);
    }
}

#[test]
fn deterministic_unary_matches_brute_force() {
    let even = LanguagePredicate::new("even", "a", |w: &[Letter]| w.len().is_multiple_of(2));
    check_against_brute_force(even, 2, 4, &[Property::Deterministic]);
    let all = LanguagePredicate::new("all", "a", |_: &[Letter]| true);
    check_against_brute_force(all, 3, 3, &[Property::Deterministic]);
}

#[test]
fn reversible_unary_matches_brute_force() {
    let all = LanguagePredicate::new("all", "a", |_: &[Letter]| true);
    check_against_brute_force(all, 3, 4, &[Property::Reversible]);
    let odd = LanguagePredicate::new("odd", "a", |w: &[Letter]| w.len() % 2 == 1);
    check_against_brute_force(odd, 2, 5, &[Property::Reversible]);
}

#[test]
fn one_limited_binary_matches_brute_force() {
    let ba = twohead_core::corpus::builtin("ba").unwrap().predicate;
    check_against_brute_force(ba.clone(), 2, 5, &[Property::Reversible, Property::OneLimited]);
    let ab = twohead_core::corpus::builtin("ab").unwrap().predicate;
    check_against_brute_force(ab, 2, 5, &[Property::Deterministic, Property::OneLimited]);
}

#[test]
fn ba_machine_is_found_among_reversible_candidates() {
    let entry = twohead_core::corpus::builtin("ba").unwrap();
    let report = search_automata(&entry.predicate, &SearchConfig::new(2, 6, [Property::Reversible])).unwrap();
    assert!(!report.is_exhausted());
    assert!(report
        .candidates()
        .iter()
        .any(|a| a.transitions().len() == 2 && a.finals().len() == 2 && a.state_count() == 2));
}

#[test]
fn output_is_independent_of_worker_count() {
    let target = LanguagePredicate::new("even", "ab", |w: &[Letter]| w.len().is_multiple_of(2));
    let config = SearchConfig::new(2, 4, [Property::Reversible]);
    let parallel = search_automata(&target, &config).unwrap();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| search_automata(&target, &config).unwrap());
    assert_eq!(parallel, single);
    assert_eq!(parallel.render(), single.render());
}

#[test]
fn bad_parameters_are_rejected() {
    let t = LanguagePredicate::new("all", "a", |_: &[Letter]| true);
    assert!(matches!(
        search_automata(&t, &SearchConfig::new(0, 3, [])),
        Err(OracleError::BadParameters(_))
    ));
}

mod common;

use proptest::prelude::*;

use twohead_core::analyze::{
    check_backward_deterministic, check_complete, check_deterministic, check_one_limited, check_reversible,
    classify_states, graph_analysis, Property,
};
use twohead_core::grammar::{generate, generate_with_counts, grammar_to_automaton};
use twohead_core::oracle::{semantic_completeness_oracle, semantic_determinism_oracle};
use twohead_core::simulate::{
    accepts, enumerate_language, reachable_configurations, run_deterministic, step, step_back, Verdict,
};
use twohead_core::transform::{complement_complete, reverse};
use twohead_core::words::{words_up_to, Word};
use twohead_core::{parse_automaton, serialize_automaton, Automaton, Configuration};

fn all_configurations(a: &Automaton, len: usize) -> Vec<Configuration> {
    let mut out = Vec::new();
    for q in a.state_ids() {
        for i in 0..=len {
            for j in i..=len {
                out.push(Configuration::new(q, i, j));
            }
        }
    }
    out
}

fn word_strategy() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(vec!['a', 'b', 'c']), 0..7)
}

/// Restricts `w` to the automaton's alphabet by folding letters onto it.
fn fit(a: &Automaton, w: &[char]) -> Word {
    let v = a.alphabet();
    w.iter().map(|&c| v[(c as usize) % v.len()]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn serialization_round_trip(seed in any::<u64>()) {
        let a = common::random_machine(seed);
        let text = serialize_automaton(&a);
        prop_assert_eq!(parse_automaton(&text).unwrap(), a.clone());
        prop_assert_eq!(serialize_automaton(&parse_automaton(&text).unwrap()), text);
    }

    #[test]
    fn no_two_head_step_on_single_letter_windows(seed in any::<u64>(), w in word_strategy()) {
        let a = common::random_machine(seed);
        let w = fit(&a, &w);
        for c in all_configurations(&a, w.len()).into_iter().filter(|c| c.window_len() == 1) {
            prop_assert!(a.applicable_transitions(&w, &c).iter().all(|t| !t.read.is_two_head()));
        }
    }

    #[test]
    fn applicability_ignores_interior_letters(seed in any::<u64>(), w in word_strategy(), noise in word_strategy()) {
        let a = common::random_machine(seed);
        let w = fit(&a, &w);
        let noise = fit(&a, &noise);
        for c in all_configurations(&a, w.len()).into_iter().filter(|c| c.window_len() >= 3) {
            let mut v = w.clone();
            for (k, x) in (c.left + 1..c.right - 1).zip(noise.iter().cycle()) {
                v[k] = *x;
            }
            prop_assert_eq!(a.applicable_transitions(&w, &c), a.applicable_transitions(&v, &c));
        }
    }

    #[test]
    fn step_and_step_back_are_dual(seed in any::<u64>(), w in word_strategy()) {
        let a = common::random_machine(seed);
        let w = fit(&a, &w);
        let configs = all_configurations(&a, w.len());
        for c in &configs {
            for d in step(&a, &w, c) {
                prop_assert!(step_back(&a, &w, &d).contains(c));
            }
            for p in step_back(&a, &w, c) {
                prop_assert!(step(&a, &w, &p).contains(c));
            }
        }
    }

    #[test]
    fn deterministic_machines_have_at_most_one_successor(seed in any::<u64>(), w in word_strategy()) {
        let a = common::random_machine(seed);
        prop_assume!(check_deterministic(&a).verdict);
        let w = fit(&a, &w);
        for c in all_configurations(&a, w.len()) {
            prop_assert!(step(&a, &w, &c).len() <= 1);
        }
        let trace = run_deterministic(&a, &w).unwrap();
        prop_assert_eq!(trace.verdict.is_accepted(), accepts(&a, &w));
    }

    #[test]
    fn enumeration_is_prefix_stable(seed in any::<u64>(), n in 0usize..6) {
        let a = common::random_machine(seed);
        let longer: Vec<Word> = enumerate_language(&a, n + 1).into_iter().filter(|w| w.len() <= n).collect();
        prop_assert_eq!(enumerate_language(&a, n), longer);
    }

    #[test]
    fn reachable_configurations_contain_the_start(seed in any::<u64>(), w in word_strategy()) {
        let a = common::random_machine(seed);
        let w = fit(&a, &w);
        prop_assert!(reachable_configurations(&a, &w).contains(&Configuration::start(&a, w.len())));
    }

    #[test]
    fn reverse_is_an_involution_preserving_flags(seed in any::<u64>()) {
        let a = common::random_machine(seed);
        let r = reverse(&a);
        let rr = reverse(&r);
        prop_assert_eq!(rr.transitions(), a.transitions());
        prop_assert_eq!(check_backward_deterministic(&a).verdict, check_backward_deterministic(&r).verdict);
        for p in Property::ALL {
            prop_assert_eq!(p.measure(&a), p.measure(&r), "{}", p);
        }
        let mut mirrored: Vec<Word> = enumerate_language(&a, 5)
            .into_iter()
            .map(|mut w| { w.reverse(); w })
            .collect();
        mirrored.sort_by(|x, y| x.len().cmp(&y.len()).then(x.cmp(y)));
        prop_assert_eq!(enumerate_language(&r, 5), mirrored);
    }

    #[test]
    fn completeness_means_never_stuck(seed in any::<u64>()) {
        let a = common::random_machine(seed);
        prop_assume!(check_deterministic(&a).verdict);
        let complete = check_complete(&a).map(|r| r.verdict).unwrap_or(false);
        let never_stuck = words_up_to(a.alphabet(), 5)
            .all(|w| run_deterministic(&a, &w).unwrap().verdict != Verdict::RejectedStuck);
        prop_assert_eq!(complete, never_stuck);
        prop_assert_eq!(complete, semantic_completeness_oracle(&a, 5).verdict);
        if complete {
            prop_assert!(check_one_limited(&a).verdict);
        }
    }

    #[test]
    fn one_limited_reversible_machines_classify(seed in any::<u64>()) {
        let a = common::random_one_limited_reversible(seed);
        prop_assert!(check_reversible(&a).verdict);
        prop_assert!(check_one_limited(&a).verdict);
        let c = classify_states(&a).unwrap();
        prop_assert!(c.report.verdict, "{}", c.report);
        prop_assert!(c.distinct_classes().iter().filter(|k| !k.is_isolated()).count() <= 7);
    }

    #[test]
    fn complete_reversible_machines(seed in any::<u64>()) {
        let a = common::random_complete_reversible(seed);
        prop_assert!(check_reversible(&a).verdict);
        prop_assert!(check_complete(&a).unwrap().verdict);
        prop_assert!(graph_analysis(&a).strongly_connected);
        let c = complement_complete(&a).unwrap();
        prop_assert_eq!(complement_complete(&c).unwrap(), a.clone());
        for w in words_up_to(a.alphabet(), 6) {
            prop_assert_ne!(accepts(&a, &w), accepts(&c, &w));
        }
    }

    #[test]
    fn grammars_compile_to_deterministic_machines(seed in any::<u64>()) {
        let g = common::random_ldlg(seed);
        let a = grammar_to_automaton(&g).unwrap();
        prop_assert!(check_deterministic(&a).verdict);
        prop_assert!(semantic_determinism_oracle(&a, 5).verdict);
        prop_assert_eq!(generate(&g, 6).unwrap(), enumerate_language(&a, 6));
        for (w, n) in generate_with_counts(&g, 6).unwrap() {
            prop_assert_eq!(n, 1, "{:?} has {} derivations", w, n);
            prop_assert!(g.derives(&w));
        }
    }
}

//! Seeded random generators shared by the integration tests.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use twohead_core::analyze::reachable_states;
use twohead_core::grammar::{Grammar, Production};
use twohead_core::{Automaton, Head, Letter, ReadPair, StateId, Transition};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const LETTERS: [Letter; 3] = ['a', 'b', 'c'];

fn alphabet(r: &mut ChaCha8Rng, max: usize) -> Vec<Letter> {
    LETTERS[..r.gen_range(1..=max)].to_vec()
}

fn all_pairs(v: &[Letter], with_empty: bool) -> Vec<ReadPair> {
    let opts: Vec<Option<Letter>> = std::iter::once(None).chain(v.iter().copied().map(Some)).collect();
    let mut out = Vec::new();
    for &f in &opts {
        for &s in &opts {
            let p = ReadPair::new(f, s);
            if with_empty || !p.is_empty_pair() {
                out.push(p);
            }
        }
    }
    out
}

fn build(m: usize, v: &[Letter], finals: Vec<StateId>, ts: Vec<Transition>) -> Automaton {
    Automaton::with_state_count(m, v.iter().copied(), StateId(0), finals, ts).expect("valid")
}

fn all_reachable(a: &Automaton) -> bool {
    reachable_states(a).len() == a.state_count()
}

fn random_finals(r: &mut ChaCha8Rng, m: usize) -> Vec<StateId> {
    (0..m).filter(|_| r.gen_bool(0.5)).map(StateId).collect()
}

/// A machine with at most 4 states over at most 3 letters, every state
/// reachable. Roughly half are built from head-consistent per-state pair
/// choices, which makes deterministic and reversible samples common.
pub fn random_machine(seed: u64) -> Automaton {
    let mut r = rng(seed);
    loop {
        let m = r.gen_range(1..=4);
        let v = alphabet(&mut r, 3);
        let structured = r.gen_bool(0.5);
        let mut ts = Vec::new();
        for q in 0..m {
            let pairs: Vec<ReadPair> = if structured {
                match r.gen_range(0..3) {
                    0 => v.iter().map(|&c| ReadPair::first_head(c)).collect(),
                    1 => v.iter().map(|&c| ReadPair::second_head(c)).collect(),
                    _ => all_pairs(&v, false)
                        .into_iter()
                        .filter(|p| p.is_two_head())
                        .collect(),
                }
            } else {
                all_pairs(&v, r.gen_bool(0.2))
            };
            let density = r.gen_range(0.2..0.7);
            for p in pairs {
                if !r.gen_bool(density) {
                    continue;
                }
                let copies = if structured { 1 } else { r.gen_range(1..=2) };
                for _ in 0..copies {
                    ts.push(Transition::new(StateId(q), p, StateId(r.gen_range(0..m))));
                }
            }
        }
        let finals = random_finals(&mut r, m);
        let a = build(m, &v, finals, ts);
        if all_reachable(&a) {
            return a;
        }
    }
}

fn head_pair(h: Head, c: Letter) -> ReadPair {
    match h {
        Head::First => ReadPair::first_head(c),
        Head::Second => ReadPair::second_head(c),
    }
}

fn random_head(r: &mut ChaCha8Rng) -> Head {
    if r.gen_bool(0.5) {
        Head::First
    } else {
        Head::Second
    }
}

/// A 1-limited reversible machine with every state reachable and every
/// state without outgoing transitions final. Each state reads with a single
/// head and is entered through a single head, using each letter at most once.
pub fn random_one_limited_reversible(seed: u64) -> Automaton {
    let mut r = rng(seed);
    loop {
        let m = r.gen_range(1..=5);
        let v = alphabet(&mut r, 3);
        let out_head: Vec<Head> = (0..m).map(|_| random_head(&mut r)).collect();
        let in_head: Vec<Head> = (0..m).map(|_| random_head(&mut r)).collect();
        let mut used = vec![Vec::<Letter>::new(); m];
        let mut ts = Vec::new();
        for (q, &h) in out_head.iter().enumerate() {
            for &c in &v {
                if !r.gen_bool(0.6) {
                    continue;
                }
                let options: Vec<usize> = (0..m)
                    .filter(|&t| in_head[t] == h && !used[t].contains(&c))
                    .collect();
                if let Some(&t) = options.choose(&mut r) {
                    used[t].push(c);
                    ts.push(Transition::new(StateId(q), head_pair(h, c), StateId(t)));
                }
            }
        }
        let mut finals = random_finals(&mut r, m);
        for q in 0..m {
            if !ts.iter().any(|t| t.source == StateId(q)) {
                finals.push(StateId(q));
            }
        }
        let a = build(m, &v, finals, ts);
        if all_reachable(&a) {
            return a;
        }
    }
}

/// A complete 1-limited reversible machine. States reading with head H
/// correspond one-to-one with states entered by head H, and each letter
/// induces a bijection between the two groups.
pub fn random_complete_reversible(seed: u64) -> Automaton {
    let mut r = rng(seed);
    let m = r.gen_range(1..=6);
    let v = alphabet(&mut r, 3);
    let out_head: Vec<Head> = (0..m).map(|_| random_head(&mut r)).collect();
    let mut in_head = out_head.clone();
    in_head.shuffle(&mut r);
    let mut ts = Vec::new();
    for h in [Head::First, Head::Second] {
        let sources: Vec<usize> = (0..m).filter(|&q| out_head[q] == h).collect();
        let targets: Vec<usize> = (0..m).filter(|&q| in_head[q] == h).collect();
        for &c in &v {
            let mut perm = targets.clone();
            perm.shuffle(&mut r);
            for (&s, &t) in sources.iter().zip(&perm) {
                ts.push(Transition::new(StateId(s), head_pair(h, c), StateId(t)));
            }
        }
    }
    let finals = random_finals(&mut r, m);
    build(m, &v, finals, ts)
}

/// A nondeterministic machine with at least one `(λ,λ)` transition.
pub fn random_with_lambda_pairs(seed: u64) -> Automaton {
    let mut r = rng(seed);
    let m = r.gen_range(1..=4);
    let v = alphabet(&mut r, 2);
    let pairs = all_pairs(&v, true);
    let mut ts = vec![Transition::new(
        StateId(r.gen_range(0..m)),
        ReadPair::EMPTY,
        StateId(r.gen_range(0..m)),
    )];
    for _ in 0..r.gen_range(1..=3 * m) {
        let p = *pairs.choose(&mut r).unwrap();
        ts.push(Transition::new(
            StateId(r.gen_range(0..m)),
            p,
            StateId(r.gen_range(0..m)),
        ));
    }
    let finals = random_finals(&mut r, m);
    build(m, &v, finals, ts)
}

/// A left deterministic linear grammar: for each nonterminal and terminal at
/// most one rule starting with that terminal, plus optional λ-rules.
pub fn random_ldlg(seed: u64) -> Grammar {
    let mut r = rng(seed);
    let n = r.gen_range(1..=4);
    let v = alphabet(&mut r, 3);
    let names: Vec<String> = (0..n).map(|k| ["S", "A", "B", "C"][k].to_string()).collect();
    let mut rules = Vec::new();
    for lhs in 0..n {
        if r.gen_bool(0.5) {
            rules.push(Production::lambda(lhs));
        }
        for &c in &v {
            if r.gen_bool(0.5) {
                let suffix: String = (0..r.gen_range(0..=2))
                    .map(|_| *v.choose(&mut r).unwrap())
                    .collect();
                rules.push(Production::step(lhs, c, r.gen_range(0..n), &suffix));
            }
        }
    }
    Grammar::new(names, v, 0, rules).expect("valid grammar")
}

//! Built-in witness machines, grammars and their languages.
//!
//! Each machine ships as a JSON file under `data/` and is validated when
//! loaded. The expected profile lists only the property values that the
//! acceptance suite checks; properties absent from it are left unclaimed.

use thiserror::Error;

use crate::analyze::Property;
use crate::automaton::{Automaton, Letter};
use crate::format::parse_automaton;
use crate::grammar::{parse_grammar, Grammar};
use crate::oracle::LanguagePredicate;

pub const NAMES: [&str; 6] = ["ab", "onethree", "wcb", "ba", "palin", "vstar"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown corpus entry `{0}` (known: ab, onethree, wcb, ba, palin, vstar)")]
pub struct UnknownEntry(pub String);

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub automaton: Automaton,
    pub grammar: Option<Grammar>,
    pub predicate: LanguagePredicate,
    pub profile: Vec<(Property, bool)>,
    pub note: &'static str,
}

impl CorpusEntry {
    /// Measured values for the properties in the expected profile.
    pub fn measured_profile(&self) -> Vec<(Property, Option<bool>)> {
        self.profile
            .iter()
            .map(|&(p, _)| (p, p.measure(&self.automaton)))
            .collect()
    }

    pub fn profile_holds(&self) -> bool {
        self.measured_profile()
            .iter()
            .zip(&self.profile)
            .all(|((_, got), (_, want))| *got == Some(*want))
    }
}

fn load(name: &str, text: &str) -> Automaton {
    parse_automaton(text).unwrap_or_else(|e| panic!("bundled automaton {name} is invalid: {e}"))
}

fn count(w: &[Letter], c: Letter) -> usize {
    w.iter().filter(|&&x| x == c).count()
}

/// Splits `w` as `x^i y^j`, returning `(i, j)`, or `None` if it has another shape.
fn block_split(w: &[Letter], x: Letter, y: Letter) -> Option<(usize, usize)> {
    let i = w.iter().take_while(|&&c| c == x).count();
    w[i..].iter().all(|&c| c == y).then(|| (i, w.len() - i))
}

pub fn in_l_ab(w: &[Letter]) -> bool {
    block_split(w, 'a', 'b').is_some()
}

pub fn in_l_onethree(w: &[Letter]) -> bool {
    matches!(block_split(w, 'a', 'b'), Some((i, j)) if j > 0 && (i == j || i == 3 * j))
}

pub fn in_l_wcb(w: &[Letter]) -> bool {
    let Some(c) = w.iter().position(|&x| x == 'c') else {
        return false;
    };
    let (head, tail) = (&w[..c], &w[c + 1..]);
    !head.contains(&'c') && tail.iter().all(|&x| x == 'b') && count(head, 'b') == tail.len()
}

pub fn in_l_ba(w: &[Letter]) -> bool {
    matches!(block_split(w, 'b', 'a'), Some((i, j)) if i == j || i == j + 1)
}

pub fn is_palindrome(w: &[Letter]) -> bool {
    w.iter().eq(w.iter().rev())
}

pub fn builtin(name: &str) -> Result<CorpusEntry, UnknownEntry> {
    use Property::*;
    let entry = match name {
        "ab" => CorpusEntry {
            name: "ab",
            automaton: load(name, include_str!("../data/ab.json")),
            grammar: Some(
                parse_grammar(include_str!("../data/ab_grammar.json")).expect("bundled grammar is valid"),
            ),
            predicate: LanguagePredicate::new("L_ab", "ab", in_l_ab),
            profile: vec![(Deterministic, true), (Reversible, false)],
            note: "a^n b^m: regular, deterministic, not reversible",
        },
        "onethree" => CorpusEntry {
            name: "onethree",
            automaton: load(name, include_str!("../data/onethree.json")),
            grammar: None,
            predicate: LanguagePredicate::new("L_1v3", "ab", in_l_onethree),
            profile: vec![(Deterministic, false)],
            note: "a^n b^n or a^3n b^n with n > 0: linear, needs nondeterminism",
        },
        "wcb" => CorpusEntry {
            name: "wcb",
            automaton: load(name, include_str!("../data/wcb.json")),
            grammar: None,
            predicate: LanguagePredicate::new("L_wcb", "abc", in_l_wcb),
            profile: vec![(Reversible, true), (OneLimited, false), (Complete, false)],
            note: "w c b^n with |w|_b = n: reversible, uses a two-head (b,b) loop",
        },
        "ba" => CorpusEntry {
            name: "ba",
            automaton: load(name, include_str!("../data/ba.json")),
            grammar: None,
            predicate: LanguagePredicate::new("L_ba", "ab", in_l_ba),
            profile: vec![(Reversible, true), (OneLimited, true), (Complete, false)],
            note: "b^n a^n or b^(n+1) a^n: 1-limited reversible, not complete",
        },
        "palin" => CorpusEntry {
            name: "palin",
            automaton: load(name, include_str!("../data/palin.json")),
            grammar: None,
            predicate: LanguagePredicate::new("palindromes", "ab", is_palindrome),
            profile: vec![(Reversible, true), (OneLimited, true), (Complete, false)],
            note: "palindromes over {a,b}: 1-limited reversible",
        },
        "vstar" => CorpusEntry {
            name: "vstar",
            automaton: load(name, include_str!("../data/vstar.json")),
            grammar: None,
            predicate: LanguagePredicate::new("V*", "ab", |_: &[Letter]| true),
            profile: vec![(Reversible, true), (OneLimited, true), (Complete, true)],
            note: "all words: complete reversible",
        },
        other => return Err(UnknownEntry(other.to_string())),
    };
    Ok(entry)
}

pub fn all() -> Vec<CorpusEntry> {
    NAMES.iter().map(|n| builtin(n).expect("listed name")).collect()
}

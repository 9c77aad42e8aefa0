//! Linear grammars, with left deterministic linear grammars (every rule is
//! `T → a T′ u` or `T → λ`, and the first terminal picks the rule) as the
//! class of interest.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automaton::{Automaton, Letter, ReadPair, StateId, Transition};
use crate::format::letter;
use crate::report::{PropertyReport, Subject, Witness};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("malformed grammar document: {0}")]
    Syntax(String),
    #[error("`{0}` is not a single letter")]
    BadLetter(String),
    #[error("undeclared symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol `{0}` is declared more than once")]
    DuplicateSymbol(String),
    #[error("no nonterminals declared")]
    NoNonterminals,
    #[error("rule {0} has more than one nonterminal on its right-hand side")]
    NotLinear(usize),
    #[error("rule {0} mixes the `lambda`, `rhs` and `first`/`next` forms")]
    BadRule(usize),
    #[error("grammar is not left deterministic linear:\n{0}")]
    NotLdlg(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Terminal(Letter),
    Nonterminal(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Production {
    pub lhs: usize,
    pub rhs: Vec<Symbol>,
}

/// The two rule shapes a left deterministic linear grammar allows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleShape<'a> {
    Lambda,
    Step {
        first: Letter,
        next: usize,
        suffix: Vec<Letter>,
        rule: &'a Production,
    },
}

impl Production {
    pub fn lambda(lhs: usize) -> Self {
        Production { lhs, rhs: Vec::new() }
    }

    /// `T → first next suffix`.
    pub fn step(lhs: usize, first: Letter, next: usize, suffix: &str) -> Self {
        let mut rhs = vec![Symbol::Terminal(first), Symbol::Nonterminal(next)];
        rhs.extend(suffix.chars().map(Symbol::Terminal));
        Production { lhs, rhs }
    }

    pub fn shape(&self) -> Option<RuleShape<'_>> {
        match self.rhs.as_slice() {
            [] => Some(RuleShape::Lambda),
            [Symbol::Terminal(a), Symbol::Nonterminal(n), rest @ ..] => {
                let suffix: Option<Vec<Letter>> = rest
                    .iter()
                    .map(|s| match s {
                        Symbol::Terminal(c) => Some(*c),
                        Symbol::Nonterminal(_) => None,
                    })
                    .collect();
                suffix.map(|suffix| RuleShape::Step {
                    first: *a,
                    next: *n,
                    suffix,
                    rule: self,
                })
            }
            _ => None,
        }
    }

    /// Splits a linear right-hand side into terminal prefix, nonterminal
    /// and terminal suffix.
    fn split(&self) -> (Vec<Letter>, Option<usize>, Vec<Letter>) {
        let mut pre = Vec::new();
        let mut post = Vec::new();
        let mut nt = None;
        for s in &self.rhs {
            match (s, nt) {
                (Symbol::Nonterminal(n), _) => nt = Some(*n),
                (Symbol::Terminal(c), None) => pre.push(*c),
                (Symbol::Terminal(c), Some(_)) => post.push(*c),
            }
        }
        (pre, nt, post)
    }
}

/// A linear grammar `(N, V, S, P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grammar {
    nonterminals: Vec<String>,
    terminals: Vec<Letter>,
    start: usize,
    rules: Vec<Production>,
}

impl Grammar {
    pub fn new(
        nonterminals: Vec<String>,
        terminals: impl IntoIterator<Item = Letter>,
        start: usize,
        rules: Vec<Production>,
    ) -> Result<Self, GrammarError> {
        if nonterminals.is_empty() {
            return Err(GrammarError::NoNonterminals);
        }
        let mut names = BTreeSet::new();
        for n in &nonterminals {
            if !names.insert(n.clone()) {
                return Err(GrammarError::DuplicateSymbol(n.clone()));
            }
        }
        let mut terms: Vec<Letter> = Vec::new();
        for t in terminals {
            if terms.contains(&t) || names.contains(&t.to_string()) {
                return Err(GrammarError::DuplicateSymbol(t.to_string()));
            }
            terms.push(t);
        }
        terms.sort_unstable();
        if start >= nonterminals.len() {
            return Err(GrammarError::UnknownSymbol(format!("#{start}")));
        }
        for (k, r) in rules.iter().enumerate() {
            let check_nt = |n: usize| {
                if n < nonterminals.len() {
                    Ok(())
                } else {
                    Err(GrammarError::UnknownSymbol(format!("#{n}")))
                }
            };
            check_nt(r.lhs)?;
            let mut nts = 0;
            for s in &r.rhs {
                match s {
                    Symbol::Nonterminal(n) => {
                        check_nt(*n)?;
                        nts += 1;
                    }
                    Symbol::Terminal(c) if !terms.contains(c) => {
                        return Err(GrammarError::UnknownSymbol(c.to_string()));
                    }
                    Symbol::Terminal(_) => {}
                }
            }
            if nts > 1 {
                return Err(GrammarError::NotLinear(k));
            }
        }
        Ok(Grammar {
            nonterminals,
            terminals: terms,
            start,
            rules,
        })
    }

    pub fn nonterminals(&self) -> &[String] {
        &self.nonterminals
    }

    pub fn nonterminal(&self, name: &str) -> Option<usize> {
        self.nonterminals.iter().position(|n| n == name)
    }

    pub fn terminals(&self) -> &[Letter] {
        &self.terminals
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn rules(&self) -> &[Production] {
        &self.rules
    }

    pub fn describe(&self, rule: &Production) -> String {
        let rhs: String = if rule.rhs.is_empty() {
            "λ".to_string()
        } else {
            rule.rhs
                .iter()
                .map(|s| match s {
                    Symbol::Terminal(c) => c.to_string(),
                    Symbol::Nonterminal(n) => self.nonterminals[*n].clone(),
                })
                .collect()
        };
        format!("{} → {}", self.nonterminals[rule.lhs], rhs)
    }

    /// Whether `word` is derivable from the start symbol. Works for any
    /// linear grammar, including ones with unit rules.
    pub fn derives(&self, word: &[Letter]) -> bool {
        let n = word.len();
        let nts = self.nonterminals.len();
        // derivable[i][j] = nonterminals deriving word[i..j]
        let mut derivable = vec![vec![vec![false; nts]; n + 1]; n + 1];
        let split: Vec<_> = self.rules.iter().map(|r| (r.lhs, r.split())).collect();
        for len in 0..=n {
            for i in 0..=n - len {
                let j = i + len;
                loop {
                    let mut changed = false;
                    for (lhs, (pre, nt, post)) in &split {
                        if derivable[i][j][*lhs] || pre.len() + post.len() > len {
                            continue;
                        }
                        if word[i..i + pre.len()] != pre[..] || word[j - post.len()..j] != post[..] {
                            continue;
                        }
                        let ok = match nt {
                            None => pre.len() + post.len() == len,
                            Some(m) => derivable[i + pre.len()][j - post.len()][*m],
                        };
                        if ok {
                            derivable[i][j][*lhs] = true;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
            }
        }
        derivable[0][n][self.start]
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{}", self.describe(r))?;
        }
        Ok(())
    }
}

/// Shape and left-determinism check. Identical duplicate rules are not a
/// clash.
pub fn check_ldlg(g: &Grammar) -> PropertyReport {
    let mut witnesses = Vec::new();
    let mut by_first: BTreeMap<(usize, Letter), Vec<usize>> = BTreeMap::new();
    for (k, r) in g.rules.iter().enumerate() {
        match r.shape() {
            None => witnesses.push(Witness::new(
                "not of the form T → aT′u or T → λ",
                g.describe(r),
                Subject::Rules(vec![k]),
            )),
            Some(RuleShape::Step { first, .. }) => by_first.entry((r.lhs, first)).or_default().push(k),
            Some(RuleShape::Lambda) => {}
        }
    }
    for ks in by_first.values() {
        for (i, &k1) in ks.iter().enumerate() {
            for &k2 in &ks[i + 1..] {
                if g.rules[k1] != g.rules[k2] {
                    witnesses.push(Witness::new(
                        "first terminal does not identify the rule",
                        format!("{} and {}", g.describe(&g.rules[k1]), g.describe(&g.rules[k2])),
                        Subject::Rules(vec![k1, k2]),
                    ));
                }
            }
        }
    }
    PropertyReport::from_violations("left-deterministic-linear", witnesses)
}

fn require_ldlg(g: &Grammar) -> Result<(), GrammarError> {
    let report = check_ldlg(g);
    if report.verdict {
        Ok(())
    } else {
        Err(GrammarError::NotLdlg(report.to_string()))
    }
}

/// Every derivable word of length `<= max_len` with its number of distinct
/// derivations.
pub fn generate_with_counts(g: &Grammar, max_len: usize) -> Result<BTreeMap<Word, usize>, GrammarError> {
    require_ldlg(g)?;
    let mut counts = BTreeMap::new();
    // sentential form: prefix · T · suffix
    let mut stack: Vec<(Word, usize, Word)> = vec![(Vec::new(), g.start, Vec::new())];
    while let Some((prefix, nt, suffix)) = stack.pop() {
        for r in g.rules.iter().filter(|r| r.lhs == nt) {
            match r.shape().expect("checked") {
                RuleShape::Lambda => {
                    let mut w = prefix.clone();
                    w.extend_from_slice(&suffix);
                    *counts.entry(w).or_insert(0) += 1;
                }
                RuleShape::Step {
                    first,
                    next,
                    suffix: u,
                    ..
                } => {
                    if prefix.len() + suffix.len() + 1 + u.len() > max_len {
                        continue;
                    }
                    let mut p = prefix.clone();
                    p.push(first);
                    let mut s = u;
                    s.extend_from_slice(&suffix);
                    stack.push((p, next, s));
                }
            }
        }
    }
    Ok(counts)
}

/// Derivable words of length `<= max_len`, in length-lexicographic order.
pub fn generate(g: &Grammar, max_len: usize) -> Result<Vec<Word>, GrammarError> {
    let mut words: Vec<Word> = generate_with_counts(g, max_len)?.into_keys().collect();
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(words)
}

/// Compiles a left deterministic linear grammar into a deterministic
/// two-head automaton.
///
/// Each nonterminal becomes a state, final when it has a λ-rule. A rule
/// `T → a T′ u` becomes `T -(a,λ)->` followed by a fresh chain of states
/// that reads `u` with the second head, last letter first, ending in `T′`.
pub fn grammar_to_automaton(g: &Grammar) -> Result<Automaton, GrammarError> {
    require_ldlg(g)?;
    let mut states = g.nonterminals.clone();
    let mut taken: BTreeSet<String> = states.iter().cloned().collect();
    let mut fresh = |base: String| {
        let mut name = base;
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        name
    };
    let mut transitions = Vec::new();
    let mut finals = Vec::new();
    let mut seen_rules = BTreeSet::new();
    for (k, r) in g.rules.iter().enumerate() {
        if !seen_rules.insert(r) {
            continue;
        }
        match r.shape().expect("checked") {
            RuleShape::Lambda => finals.push(StateId(r.lhs)),
            RuleShape::Step {
                first, next, suffix, ..
            } => {
                let mut from = StateId(r.lhs);
                let mut read = ReadPair::first_head(first);
                for (offset, &c) in suffix.iter().rev().enumerate() {
                    let name = fresh(format!("{}#{}.{}", g.nonterminals[r.lhs], k, offset + 1));
                    states.push(name);
                    let chain = StateId(states.len() - 1);
                    transitions.push(Transition::new(from, read, chain));
                    from = chain;
                    read = ReadPair::second_head(c);
                }
                transitions.push(Transition::new(from, read, StateId(next)));
            }
        }
    }
    Ok(Automaton::new(
        states,
        g.terminals.iter().copied(),
        StateId(g.start),
        finals,
        transitions,
    )
    .expect("compiled automaton is well formed"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrammarDocument {
    pub nonterminals: Vec<String>,
    pub terminals: Vec<String>,
    pub start: String,
    pub rules: Vec<RuleDocument>,
}

/// One rule: `{"lhs","first","next","suffix"}`, `{"lhs","lambda":true}`,
/// or the general linear form `{"lhs","rhs":[symbols...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleDocument {
    pub lhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub next: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suffix: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Vec<String>>,
}

impl GrammarDocument {
    pub fn into_grammar(self) -> Result<Grammar, GrammarError> {
        let terminals = self
            .terminals
            .iter()
            .map(|t| letter(t).map_err(|_| GrammarError::BadLetter(t.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let symbol = |name: &str| -> Result<Symbol, GrammarError> {
            if let Some(k) = self.nonterminals.iter().position(|n| n == name) {
                return Ok(Symbol::Nonterminal(k));
            }
            match letter(name) {
                Ok(c) if terminals.contains(&c) => Ok(Symbol::Terminal(c)),
                _ => Err(GrammarError::UnknownSymbol(name.to_string())),
            }
        };
        let nonterminal = |name: &str| match symbol(name)? {
            Symbol::Nonterminal(k) => Ok(k),
            Symbol::Terminal(_) => Err(GrammarError::UnknownSymbol(name.to_string())),
        };
        let start = nonterminal(&self.start)?;
        let mut rules = Vec::with_capacity(self.rules.len());
        for (k, r) in self.rules.iter().enumerate() {
            let lhs = nonterminal(&r.lhs)?;
            let step_form = r.first.is_some() || r.next.is_some() || r.suffix.is_some();
            let forms = r.lambda.unwrap_or(false) as usize + r.rhs.is_some() as usize + step_form as usize;
            if forms != 1 {
                return Err(GrammarError::BadRule(k));
            }
            let rhs = if r.lambda == Some(true) {
                Vec::new()
            } else if let Some(syms) = &r.rhs {
                syms.iter().map(|s| symbol(s)).collect::<Result<Vec<_>, _>>()?
            } else {
                let (Some(first), Some(next)) = (&r.first, &r.next) else {
                    return Err(GrammarError::BadRule(k));
                };
                let mut rhs = vec![symbol(first)?, symbol(next)?];
                for c in r.suffix.as_deref().unwrap_or("").chars() {
                    rhs.push(symbol(&c.to_string())?);
                }
                rhs
            };
            rules.push(Production { lhs, rhs });
        }
        Grammar::new(self.nonterminals.clone(), terminals, start, rules)
    }

    pub fn from_grammar(g: &Grammar) -> Self {
        let name = |s: &Symbol| match s {
            Symbol::Terminal(c) => c.to_string(),
            Symbol::Nonterminal(n) => g.nonterminals[*n].clone(),
        };
        let rules = g
            .rules
            .iter()
            .map(|r| {
                let lhs = g.nonterminals[r.lhs].clone();
                let empty = RuleDocument {
                    lhs,
                    first: None,
                    next: None,
                    suffix: None,
                    lambda: None,
                    rhs: None,
                };
                match r.shape() {
                    Some(RuleShape::Lambda) => RuleDocument {
                        lambda: Some(true),
                        ..empty
                    },
                    Some(RuleShape::Step {
                        first, next, suffix, ..
                    }) => RuleDocument {
                        first: Some(first.to_string()),
                        next: Some(g.nonterminals[next].clone()),
                        suffix: Some(suffix.iter().collect()),
                        ..empty
                    },
                    None => RuleDocument {
                        rhs: Some(r.rhs.iter().map(name).collect()),
                        ..empty
                    },
                }
            })
            .collect();
        GrammarDocument {
            nonterminals: g.nonterminals.clone(),
            terminals: g.terminals.iter().map(|c| c.to_string()).collect(),
            start: g.nonterminals[g.start].clone(),
            rules,
        }
    }
}

pub fn parse_grammar(text: &str) -> Result<Grammar, GrammarError> {
    let doc: GrammarDocument = serde_json::from_str(text).map_err(|e| GrammarError::Syntax(e.to_string()))?;
    doc.into_grammar()
}

pub fn serialize_grammar(g: &Grammar) -> String {
    let mut out =
        serde_json::to_string_pretty(&GrammarDocument::from_grammar(g)).expect("document serializes");
    out.push('\n');
    out
}

//! Loop languages and their local-testability and closure properties.
//!
//! `S(q)` is the set of nonempty words looping at `q` (the words whose anchor
//! is `q`), and `LL(c)` the union of `S(q)` over a class `c`. Since the
//! transition function reads right to left, all automata here read words
//! reversed; every property checked is invariant under reversal.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gcma::{Gcma, StateId};
use crate::graph::shortest_path;
use crate::ltl::{Alphabet, Letter, Word};
use crate::quotient::{ClassId, QuotientAutomaton};

/// Default cap on the size of a transition semigroup.
pub const DEFAULT_MAX_SEMIGROUP: usize = 20_000;

/// A complete deterministic automaton over letters `0..letters`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    letters: usize,
    start: usize,
    /// `delta[s][a]`.
    delta: Vec<Vec<usize>>,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn new(
        letters: usize,
        start: usize,
        delta: Vec<Vec<usize>>,
        accepting: Vec<bool>,
    ) -> Result<Dfa> {
        let n = delta.len();
        if start >= n || accepting.len() != n {
            return Err(Error::MalformedAutomaton("inconsistent DFA tables".into()));
        }
        if delta
            .iter()
            .any(|row| row.len() != letters || row.iter().any(|&t| t >= n))
        {
            return Err(Error::MalformedAutomaton(
                "DFA transition out of range".into(),
            ));
        }
        Ok(Dfa {
            letters,
            start,
            delta,
            accepting,
        })
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn step(&self, s: usize, a: Letter) -> usize {
        self.delta[s][a.index()]
    }

    pub fn run(&self, s: usize, word: &[Letter]) -> usize {
        word.iter().fold(s, |s, &a| self.step(s, a))
    }

    pub fn is_accepting(&self, s: usize) -> bool {
        self.accepting[s]
    }

    pub fn accepts(&self, word: &[Letter]) -> bool {
        self.accepting[self.run(self.start, word)]
    }

    fn letters(&self) -> impl Iterator<Item = Letter> + Clone {
        (0..self.letters as u16).map(Letter)
    }

    /// Minimal equivalent DFA: unreachable states removed, Moore refinement,
    /// states numbered in breadth-first order from the start.
    pub fn minimize(&self) -> Dfa {
        // reachable states in BFS order
        let mut order = vec![self.start];
        let mut seen = vec![false; self.num_states()];
        seen[self.start] = true;
        let mut i = 0;
        while i < order.len() {
            for a in self.letters() {
                let t = self.step(order[i], a);
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
            i += 1;
        }
        let mut class: Vec<usize> = vec![0; self.num_states()];
        let mut count = number(order.iter().map(|&s| self.accepting[s]), &order, &mut class);
        loop {
            let sigs: Vec<Vec<usize>> = order
                .iter()
                .map(|&s| {
                    let mut sig = vec![class[s]];
                    sig.extend(self.letters().map(|a| class[self.step(s, a)]));
                    sig
                })
                .collect();
            let next = number(sigs.into_iter(), &order, &mut class);
            if next == count {
                break;
            }
            count = next;
        }
        let mut delta = vec![vec![0; self.letters]; count];
        let mut accepting = vec![false; count];
        for &s in &order {
            let c = class[s];
            accepting[c] = self.accepting[s];
            for a in self.letters() {
                delta[c][a.index()] = class[self.step(s, a)];
            }
        }
        // class ids follow first occurrence in BFS order, so the start is 0
        Dfa {
            letters: self.letters,
            start: class[self.start],
            delta,
            accepting,
        }
    }

    /// Reachable product accepting when any component accepts.
    pub fn union(dfas: &[Dfa]) -> Result<Dfa> {
        let first = dfas
            .first()
            .ok_or_else(|| Error::MalformedAutomaton("union of no automata".into()))?;
        let letters = first.letters;
        let start: Vec<usize> = dfas.iter().map(|d| d.start).collect();
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::from([(start.clone(), 0)]);
        let mut states = vec![start];
        let mut delta = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let mut row = Vec::with_capacity(letters);
            for a in 0..letters as u16 {
                let t: Vec<usize> = states[i]
                    .iter()
                    .zip(dfas)
                    .map(|(&s, d)| d.step(s, Letter(a)))
                    .collect();
                let next = ids.len();
                let id = *ids.entry(t.clone()).or_insert_with(|| {
                    states.push(t);
                    next
                });
                row.push(id);
            }
            delta.push(row);
            i += 1;
        }
        let accepting = states
            .iter()
            .map(|v| v.iter().zip(dfas).any(|(&s, d)| d.accepting[s]))
            .collect();
        Dfa::new(letters, 0, delta, accepting)
    }
}

/// Assigns class ids by first occurrence along `order`; returns the count.
fn number<K: std::hash::Hash + Eq>(
    keys: impl Iterator<Item = K>,
    order: &[usize],
    class: &mut [usize],
) -> usize {
    let mut ids: HashMap<K, usize> = HashMap::new();
    for (k, &s) in keys.zip(order) {
        let next = ids.len();
        class[s] = *ids.entry(k).or_insert(next);
    }
    ids.len()
}

/// DFA accepting `reverse(u)` iff `u ∈ S(q)`.
///
/// States are pairs `(p, T)` of a state of `g` and the set `T` of final sets
/// visited so far, plus a fresh start state so that the empty word is
/// rejected. Reading `a` moves `(p, T)` to `(a·p, T ∪ {F : a·p ∈ F})`; the
/// accepting state is `(q, all sets)`.
pub fn loop_dfa(g: &Gcma, q: StateId) -> Result<Dfa> {
    let k = g.num_final_sets();
    if k > 63 {
        return Err(Error::SizeGuard {
            what: "final set count",
            actual: k,
            limit: 63,
        });
    }
    let full = (1u64 << k) - 1;
    let mask_of = |p: StateId| {
        (0..k)
            .filter(|&f| g.in_final(f, p))
            .fold(0u64, |m, f| m | 1 << f)
    };
    let letters = g.alphabet().len();
    // state 0 is the fresh start: it behaves like (q, mask of q) but is never
    // looked up, so reaching that pair again creates a separate state
    let first = (q, mask_of(q));
    let mut ids: HashMap<(StateId, u64), usize> = HashMap::new();
    let mut states: Vec<(StateId, u64)> = vec![first];
    let mut delta: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let (p, t) = states[i];
        let mut row = Vec::with_capacity(letters);
        for a in g.alphabet().letters() {
            let p2 = g.step(a, p);
            let key = (p2, t | mask_of(p2));
            let next = ids.len() + 1;
            let id = *ids.entry(key).or_insert_with(|| {
                states.push(key);
                next
            });
            row.push(id);
        }
        delta.push(row);
        i += 1;
    }
    let accepting = states
        .iter()
        .enumerate()
        .map(|(i, &(p, t))| i > 0 && p == q && t == full)
        .collect();
    Dfa::new(letters, 0, delta, accepting)
}

/// `LL(c)` as a minimal DFA over reversed words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopLanguage {
    pub class: ClassId,
    pub dfa: Dfa,
}

impl LoopLanguage {
    /// Whether `u` (in reading order) belongs to the loop language.
    pub fn contains(&self, u: &[Letter]) -> bool {
        let rev: Word = u.iter().rev().copied().collect();
        self.dfa.accepts(&rev)
    }
}

pub fn loop_language(g: &Gcma, qa: &QuotientAutomaton, c: ClassId) -> Result<LoopLanguage> {
    let parts = qa
        .members(c)
        .iter()
        .map(|&q| loop_dfa(g, q))
        .collect::<Result<Vec<_>>>()?;
    Ok(LoopLanguage {
        class: c,
        dfa: Dfa::union(&parts)?.minimize(),
    })
}

/// Left context allowed in the swap condition `uabv` vs `ubav`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SwapContext {
    /// `u ∈ A^*`: equivalent to "`Occ u = Occ v` implies equivalent anchors".
    Any,
    /// `u ∈ A^+`: equivalent to the same implication restricted to words
    /// with the same first letter.
    NonEmptyLeft,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureKind {
    Stutter,
    Swap,
}

/// Words `left`, `right` whose anchors are not congruent:
/// `u a v` / `u a a v` for stuttering, `u a b v` / `u b a v` for swapping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopCounterexample {
    pub kind: ClosureKind,
    pub u: Word,
    pub a: Letter,
    pub b: Option<Letter>,
    pub v: Word,
    /// Class whose loop language contains exactly one of the two words.
    pub class: ClassId,
}

impl LoopCounterexample {
    pub fn left(&self) -> Word {
        let mid = match self.b {
            Some(b) => vec![self.a, b],
            None => vec![self.a],
        };
        [&self.u[..], &mid, &self.v].concat()
    }

    pub fn right(&self) -> Word {
        let mid = match self.b {
            Some(b) => vec![b, self.a],
            None => vec![self.a, self.a],
        };
        [&self.u[..], &mid, &self.v].concat()
    }

    /// Re-checks the counterexample on anchors.
    pub fn validate(&self, g: &Gcma, qa: &QuotientAutomaton) -> Result<bool> {
        let l = qa.class_of(g.anchor(&self.left())?);
        let r = qa.class_of(g.anchor(&self.right())?);
        Ok(l != r)
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        json!({
            "kind": self.kind,
            "u": alphabet.format_word(&self.u),
            "a": alphabet.name(self.a),
            "b": self.b.map(|b| alphabet.name(b)),
            "v": alphabet.format_word(&self.v),
            "left": alphabet.format_word(&self.left()),
            "right": alphabet.format_word(&self.right()),
            "class": self.class,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Step {
    Sync(Letter),
    Mid(Letter, Option<Letter>),
}

/// Shortest `(u, mid, v)` such that the DFA (reading reversed words)
/// accepts exactly one of `u·m1·v` and `u·m2·v`.
fn closure_counterexample(
    dfa: &Dfa,
    kind: ClosureKind,
    ctx: SwapContext,
) -> Option<(Word, Letter, Option<Letter>, Word)> {
    let letters: Vec<Letter> = dfa.letters().collect();
    // middles as read on reversed words: (first machine, second machine)
    // (a, b, word read by the first machine, word read by the second)
    type Middle = (Letter, Option<Letter>, Vec<Letter>, Vec<Letter>);
    let mids: Vec<Middle> = match kind {
        ClosureKind::Stutter => letters
            .iter()
            .map(|&a| (a, None, vec![a], vec![a, a]))
            .collect(),
        ClosureKind::Swap => letters
            .iter()
            .flat_map(|&a| {
                letters
                    .iter()
                    .filter(move |&&b| a < b)
                    .map(move |&b| (a, b))
            })
            .map(|(a, b)| (a, Some(b), vec![b, a], vec![a, b]))
            .collect(),
    };
    let min_phase = match (kind, ctx) {
        (ClosureKind::Swap, SwapContext::NonEmptyLeft) => 2,
        _ => 1,
    };
    let (path, _) = shortest_path(
        (dfa.start(), dfa.start(), 0u8),
        |&(s1, s2, phase)| {
            let mut out: Vec<(Step, (usize, usize, u8))> = letters
                .iter()
                .map(|&c| {
                    let next = if phase == 0 { 0 } else { 2 };
                    (Step::Sync(c), (dfa.step(s1, c), dfa.step(s2, c), next))
                })
                .collect();
            if phase == 0 {
                for (a, b, m1, m2) in &mids {
                    out.push((Step::Mid(*a, *b), (dfa.run(s1, m1), dfa.run(s2, m2), 1)));
                }
            }
            out
        },
        |&(s1, s2, phase)| phase >= min_phase && dfa.is_accepting(s1) != dfa.is_accepting(s2),
    )?;
    let mut rev_v = Vec::new();
    let mut rev_u = Vec::new();
    let mut mid = None;
    for step in path {
        match step {
            Step::Sync(c) if mid.is_none() => rev_v.push(c),
            Step::Sync(c) => rev_u.push(c),
            Step::Mid(a, b) => mid = Some((a, b)),
        }
    }
    let (a, b) = mid.expect("goal lies after the middle");
    rev_u.reverse();
    rev_v.reverse();
    Some((rev_u, a, b, rev_v))
}

/// Transition semigroup of a DFA: the transformations of nonempty words.
#[derive(Clone, Debug)]
pub struct Semigroup {
    elements: Vec<Vec<u32>>,
    words: Vec<Word>,
}

impl Semigroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// A shortest word realizing element `i`.
    pub fn word(&self, i: usize) -> &[Letter] {
        &self.words[i]
    }

    pub fn transformation(&self, i: usize) -> &[u32] {
        &self.elements[i]
    }
}

fn then(f: &[u32], g: &[u32]) -> Vec<u32> {
    f.iter().map(|&x| g[x as usize]).collect()
}

pub fn transition_semigroup(dfa: &Dfa, cap: usize) -> Result<Semigroup> {
    let gens: Vec<Vec<u32>> = dfa
        .letters()
        .map(|a| {
            (0..dfa.num_states())
                .map(|s| dfa.step(s, a) as u32)
                .collect()
        })
        .collect();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut elements = Vec::new();
    let mut words: Vec<Word> = Vec::new();
    for (a, g) in dfa.letters().zip(&gens) {
        if !index.contains_key(g) {
            index.insert(g.clone(), elements.len());
            elements.push(g.clone());
            words.push(vec![a]);
        }
    }
    let mut i = 0;
    while i < elements.len() {
        for (a, g) in dfa.letters().zip(&gens) {
            let t = then(&elements[i], g);
            if !index.contains_key(&t) {
                if elements.len() >= cap {
                    return Err(Error::SizeGuard {
                        what: "transition semigroup",
                        actual: elements.len() + 1,
                        limit: cap,
                    });
                }
                index.insert(t.clone(), elements.len());
                let mut w = words[i].clone();
                w.push(a);
                elements.push(t);
                words.push(w);
            }
        }
        i += 1;
    }
    Ok(Semigroup { elements, words })
}

/// Why a language is not locally testable: for the idempotent `e`, either
/// `e s e` is not idempotent (`t` absent) or `e s e` and `e t e` do not
/// commute.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtCounterexample {
    pub e: Word,
    pub s: Word,
    pub t: Option<Word>,
}

impl LtCounterexample {
    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        json!({
            "e": alphabet.format_word(&self.e),
            "s": alphabet.format_word(&self.s),
            "t": self.t.as_ref().map(|t| alphabet.format_word(t)),
        })
    }
}

/// Decides local testability of the language of `dfa` (which should be
/// minimal): every local monoid `eSe` must be idempotent and commutative.
pub fn local_testability(dfa: &Dfa, cap: usize) -> Result<Option<LtCounterexample>> {
    let sg = transition_semigroup(dfa, cap)?;
    let n = sg.len();
    for e in 0..n {
        let fe = &sg.elements[e];
        if then(fe, fe) != *fe {
            continue;
        }
        // distinct elements of eSe with a witness index
        let mut local: HashMap<Vec<u32>, usize> = HashMap::new();
        for s in 0..n {
            let m = then(&then(fe, &sg.elements[s]), fe);
            local.entry(m).or_insert(s);
        }
        let mut items: Vec<(&Vec<u32>, usize)> = local.iter().map(|(m, &s)| (m, s)).collect();
        items.sort_by_key(|&(_, s)| s);
        for &(m, s) in &items {
            if then(m, m) != *m {
                return Ok(Some(LtCounterexample {
                    e: sg.words[e].clone(),
                    s: sg.words[s].clone(),
                    t: None,
                }));
            }
        }
        for (i, &(m1, s)) in items.iter().enumerate() {
            for &(m2, t) in &items[i + 1..] {
                if then(m1, m2) != then(m2, m1) {
                    return Ok(Some(LtCounterexample {
                        e: sg.words[e].clone(),
                        s: sg.words[s].clone(),
                        t: Some(sg.words[t].clone()),
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_locally_testable(dfa: &Dfa, cap: usize) -> Result<bool> {
    Ok(local_testability(dfa, cap)?.is_none())
}

/// Smallest `k <= max_k` such that, on all words of length `<= max_len`,
/// membership is determined by the `k`-profile (prefix and suffix of length
/// `k - 1` and the set of factors of length `k`; short words by themselves).
/// A bounded stand-in for the definition of local testability.
pub fn bounded_testability_order(
    alphabet: &Alphabet,
    member: impl Fn(&[Letter]) -> bool,
    max_k: usize,
    max_len: usize,
) -> Option<usize> {
    let words = alphabet.words_up_to(1, max_len);
    let verdicts: Vec<bool> = words.iter().map(|w| member(w)).collect();
    (1..=max_k).find(|&k| {
        let mut seen: HashMap<(Word, Word, Vec<Word>), bool> = HashMap::new();
        words.iter().zip(&verdicts).all(|(w, &v)| {
            let key = if w.len() < k {
                (w.clone(), w.clone(), Vec::new())
            } else {
                let mut factors: Vec<Word> = w.windows(k).map(|f| f.to_vec()).collect();
                factors.sort();
                factors.dedup();
                (w[..k - 1].to_vec(), w[w.len() + 1 - k..].to_vec(), factors)
            };
            *seen.entry(key).or_insert(v) == v
        })
    })
}

/// Per-class verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub class: ClassId,
    pub loop_language_dfa_size: usize,
    /// Closed under stuttering and under swaps with a nonempty left context.
    pub one_lt: bool,
    /// Closed under stuttering and under all swaps (membership depends on
    /// the set of occurring letters only).
    pub one_lt_any_context: bool,
    pub lt: bool,
    pub stutter: bool,
    pub counterexample: Option<LoopCounterexample>,
    pub lt_counterexample: Option<LtCounterexample>,
}

impl ClassReport {
    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        json!({
            "class": self.class,
            "loop_language_dfa_size": self.loop_language_dfa_size,
            "one_lt": self.one_lt,
            "one_lt_any_context": self.one_lt_any_context,
            "lt": self.lt,
            "stutter": self.stutter,
            "counterexample": self.counterexample.as_ref().map(|c| c.to_json(alphabet)),
            "lt_counterexample": self.lt_counterexample.as_ref().map(|c| c.to_json(alphabet)),
        })
    }
}

/// Loop languages of all classes with lazily computed closure checks.
#[derive(Clone, Debug)]
pub struct LoopAnalysis {
    languages: Vec<LoopLanguage>,
}

impl LoopAnalysis {
    pub fn new(g: &Gcma, qa: &QuotientAutomaton) -> Result<LoopAnalysis> {
        Ok(LoopAnalysis {
            languages: qa
                .classes()
                .map(|c| loop_language(g, qa, c))
                .collect::<Result<_>>()?,
        })
    }

    pub fn languages(&self) -> &[LoopLanguage] {
        &self.languages
    }

    pub fn language(&self, c: ClassId) -> &LoopLanguage {
        &self.languages[c]
    }

    /// Class of the anchor of `u`, read off the loop languages.
    pub fn class_of_word(&self, u: &[Letter]) -> Option<ClassId> {
        self.languages.iter().position(|l| l.contains(u))
    }

    fn closure(
        &self,
        kind: ClosureKind,
        ctx: SwapContext,
        c: ClassId,
    ) -> Option<LoopCounterexample> {
        closure_counterexample(&self.languages[c].dfa, kind, ctx).map(|(u, a, b, v)| {
            LoopCounterexample {
                kind,
                u,
                a,
                b,
                v,
                class: c,
            }
        })
    }

    /// Shortest counterexample over all classes (ties: lower class first).
    fn global(&self, kind: ClosureKind, ctx: SwapContext) -> Option<LoopCounterexample> {
        self.languages
            .iter()
            .filter_map(|l| self.closure(kind, ctx, l.class))
            .min_by_key(|c| (c.left().len(), c.class))
    }

    /// `u a v` and `u a a v` always have congruent anchors, or a
    /// counterexample.
    pub fn stutter_counterexample(&self) -> Option<LoopCounterexample> {
        self.global(ClosureKind::Stutter, SwapContext::Any)
    }

    /// `u a b v` and `u b a v` always have congruent anchors, or a
    /// counterexample.
    pub fn swap_counterexample(&self, ctx: SwapContext) -> Option<LoopCounterexample> {
        self.global(ClosureKind::Swap, ctx)
    }

    /// Stutter closure first, then swap closure.
    pub fn one_lt_counterexample(&self, ctx: SwapContext) -> Option<LoopCounterexample> {
        self.stutter_counterexample()
            .or_else(|| self.swap_counterexample(ctx))
    }

    /// First class (in class order) whose loop language is not locally
    /// testable.
    pub fn lt_failure(&self, cap: usize) -> Result<Option<(ClassId, LtCounterexample)>> {
        for l in &self.languages {
            if let Some(c) = local_testability(&l.dfa, cap)? {
                return Ok(Some((l.class, c)));
            }
        }
        Ok(None)
    }

    pub fn report(&self, cap: usize) -> Result<Vec<ClassReport>> {
        self.languages
            .iter()
            .map(|l| {
                let c = l.class;
                let stutter = self.closure(ClosureKind::Stutter, SwapContext::Any, c);
                let swap_any = self.closure(ClosureKind::Swap, SwapContext::Any, c);
                let swap = self.closure(ClosureKind::Swap, SwapContext::NonEmptyLeft, c);
                let lt_counterexample = local_testability(&l.dfa, cap)?;
                Ok(ClassReport {
                    class: c,
                    loop_language_dfa_size: l.dfa.num_states(),
                    one_lt: stutter.is_none() && swap.is_none(),
                    one_lt_any_context: stutter.is_none() && swap_any.is_none(),
                    lt: lt_counterexample.is_none(),
                    stutter: stutter.is_none(),
                    counterexample: stutter.or(swap).or(swap_any),
                    lt_counterexample,
                })
            })
            .collect()
    }
}

/// Bounded definitional form of 1-local testability: two words of length
/// `1..=max_len` with the same letters (and, for [`SwapContext::NonEmptyLeft`],
/// the same first letter) whose anchors are not congruent.
pub fn occ_violation(
    g: &Gcma,
    qa: &QuotientAutomaton,
    ctx: SwapContext,
    max_len: usize,
) -> Result<Option<(Word, Word)>> {
    let mut seen: HashMap<(Vec<bool>, Option<Letter>), (Word, ClassId)> = HashMap::new();
    for u in g.alphabet().words_up_to(1, max_len) {
        let mut occ = vec![false; g.alphabet().len()];
        for a in &u {
            occ[a.index()] = true;
        }
        let first = match ctx {
            SwapContext::Any => None,
            SwapContext::NonEmptyLeft => Some(u[0]),
        };
        let c = qa.class_of(g.anchor(&u)?);
        match seen.get(&(occ.clone(), first)) {
            Some((w, d)) if *d != c => return Ok(Some((w.clone(), u))),
            Some(_) => {}
            None => {
                seen.insert((occ, first), (u, c));
            }
        }
    }
    Ok(None)
}

pub fn check_stutter_closure(
    g: &Gcma,
    qa: &QuotientAutomaton,
) -> Result<Option<LoopCounterexample>> {
    Ok(LoopAnalysis::new(g, qa)?.stutter_counterexample())
}

pub fn check_swap_closure(
    g: &Gcma,
    qa: &QuotientAutomaton,
    ctx: SwapContext,
) -> Result<Option<LoopCounterexample>> {
    Ok(LoopAnalysis::new(g, qa)?.swap_counterexample(ctx))
}

pub fn is_one_locally_testable(g: &Gcma, qa: &QuotientAutomaton, ctx: SwapContext) -> Result<bool> {
    Ok(LoopAnalysis::new(g, qa)?
        .one_lt_counterexample(ctx)
        .is_none())
}

//! Forbidden patterns T1–T4 in the transition graph of the left quotient,
//! and witness pairs of ω-words built from them.
//!
//! All equations are over the quotient: `u∘c` applies the last letter of `u`
//! first, so `x∘p̄ = p̄` means that `x` loops at `p̄`.
//!
//! * T1: distinct `p̄`, `q̄` and `x ∈ A^+` with `x∘p̄ = p̄` and `x∘q̄ = q̄`.
//! * T2: `r̄ ≠ s̄` in one SCC, a letter `a` with `a∘r̄ ≠ a∘s̄`; then
//!   `r̄ = x∘s̄` and `s̄ = y∘r̄` for nonempty `x`, `y`.
//! * T3: a class `r̄` and a letter `a` with `a∘a∘r̄ ≠ a∘r̄`.
//! * T4: a T1 pair `p̄`, `q̄` (loop word `z`) lying in one SCC, with
//!   `p̄ = x∘q̄` and `q̄ = y∘p̄`.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::efgame::{certify_indistinguishable, Move, Moves};
use crate::error::{Error, Result};
use crate::gcma::Gcma;
use crate::graph::{shortest_cycle, shortest_path, strongly_connected, Sccs};
use crate::ltl::{Alphabet, Letter, UPWord, Word};
use crate::quotient::{ClassId, QuotientAutomaton};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PatternId {
    T1,
    T2,
    T3,
    T4,
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An occurrence of a forbidden pattern with explicit label words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternHit {
    T1 {
        p: ClassId,
        q: ClassId,
        x: Word,
    },
    T2 {
        p: ClassId,
        q: ClassId,
        r: ClassId,
        s: ClassId,
        a: Letter,
        x: Word,
        y: Word,
    },
    T3 {
        p: ClassId,
        q: ClassId,
        r: ClassId,
        a: Letter,
    },
    T4 {
        p: ClassId,
        q: ClassId,
        z: Word,
        x: Word,
        y: Word,
    },
}

impl PatternHit {
    pub fn id(&self) -> PatternId {
        match self {
            PatternHit::T1 { .. } => PatternId::T1,
            PatternHit::T2 { .. } => PatternId::T2,
            PatternHit::T3 { .. } => PatternId::T3,
            PatternHit::T4 { .. } => PatternId::T4,
        }
    }

    /// Re-checks the defining equations against the quotient.
    pub fn verify(&self, qa: &QuotientAutomaton) -> bool {
        match self {
            PatternHit::T1 { p, q, x } => {
                p != q && !x.is_empty() && qa.apply(x, *p) == *p && qa.apply(x, *q) == *q
            }
            PatternHit::T2 {
                p,
                q,
                r,
                s,
                a,
                x,
                y,
            } => {
                p != q
                    && !x.is_empty()
                    && !y.is_empty()
                    && qa.circ(*a, *r) == *p
                    && qa.circ(*a, *s) == *q
                    && qa.apply(y, *r) == *s
                    && qa.apply(x, *s) == *r
            }
            PatternHit::T3 { p, q, r, a } => {
                p != q && qa.circ(*a, *r) == *q && qa.circ(*a, *q) == *p
            }
            PatternHit::T4 { p, q, z, x, y } => {
                p != q
                    && !z.is_empty()
                    && qa.apply(z, *p) == *p
                    && qa.apply(z, *q) == *q
                    && qa.apply(x, *q) == *p
                    && qa.apply(y, *p) == *q
            }
        }
    }

    pub fn describe(&self, alphabet: &Alphabet) -> String {
        let w = |u: &Word| alphabet.format_word(u);
        let l = |a: &Letter| alphabet.name(*a).to_string();
        match self {
            PatternHit::T1 { p, q, x } => {
                format!("T1: classes C{p} and C{q} both loop on x={}", w(x))
            }
            PatternHit::T2 {
                p,
                q,
                r,
                s,
                a,
                x,
                y,
            } => format!(
                "T2: C{r} and C{s} share an SCC (x={}, y={}) but {} sends them to C{p} and C{q}",
                w(x),
                w(y),
                l(a)
            ),
            PatternHit::T3 { p, q, r, a } => {
                format!("T3: {a}∘C{r} = C{q} but {a}{a}∘C{r} = C{p}", a = l(a))
            }
            PatternHit::T4 { p, q, z, x, y } => format!(
                "T4: classes C{p} and C{q} loop on z={} within one SCC (x={}, y={})",
                w(z),
                w(x),
                w(y)
            ),
        }
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        let w = |u: &Word| alphabet.format_word(u);
        match self {
            PatternHit::T1 { p, q, x } => json!({"pattern": "T1", "p": p, "q": q, "x": w(x)}),
            PatternHit::T2 {
                p,
                q,
                r,
                s,
                a,
                x,
                y,
            } => json!({
                "pattern": "T2", "p": p, "q": q, "r": r, "s": s,
                "a": alphabet.name(*a), "x": w(x), "y": w(y)
            }),
            PatternHit::T3 { p, q, r, a } => json!({
                "pattern": "T3", "p": p, "q": q, "r": r, "a": alphabet.name(*a)
            }),
            PatternHit::T4 { p, q, z, x, y } => json!({
                "pattern": "T4", "p": p, "q": q, "z": w(z), "x": w(x), "y": w(y)
            }),
        }
    }
}

/// The graph on ordered pairs of distinct classes with edges
/// `(p, q) → (a∘p, a∘q)`.
struct PairGraph<'a> {
    qa: &'a QuotientAutomaton,
    sccs: Sccs,
}

impl<'a> PairGraph<'a> {
    fn new(qa: &'a QuotientAutomaton) -> Self {
        let n = qa.num_classes();
        let sccs = strongly_connected(n * n, |v| {
            let (p, q) = (v / n, v % n);
            qa.alphabet()
                .letters()
                .map(|a| (qa.circ(a, p), qa.circ(a, q)))
                .filter(|(p2, q2)| p != q && p2 != q2)
                .map(|(p2, q2)| p2 * n + q2)
                .collect::<Vec<_>>()
        });
        PairGraph { qa, sccs }
    }

    fn on_cycle(&self, p: ClassId, q: ClassId) -> bool {
        let n = self.qa.num_classes();
        p != q && self.sccs.has_edge[self.sccs.component[p * n + q]]
    }

    /// Shortest nonempty `z` with `z∘p = p` and `z∘q = q`.
    fn loop_word(&self, p: ClassId, q: ClassId) -> Option<Word> {
        let qa = self.qa;
        let mut labels = shortest_cycle((p, q), |&(p, q)| {
            qa.alphabet()
                .letters()
                .map(move |a| (a, (qa.circ(a, p), qa.circ(a, q))))
                .filter(|(_, (p2, q2))| p2 != q2)
        })?;
        labels.reverse();
        Some(labels)
    }
}

fn ordered_pairs(n: usize) -> impl Iterator<Item = (ClassId, ClassId)> {
    (0..n).flat_map(move |p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)))
}

pub fn find_t1(qa: &QuotientAutomaton) -> Option<PatternHit> {
    let g = PairGraph::new(qa);
    let (p, q) = ordered_pairs(qa.num_classes()).find(|&(p, q)| g.on_cycle(p, q))?;
    let x = g.loop_word(p, q)?;
    Some(PatternHit::T1 { p, q, x })
}

pub fn find_t2(qa: &QuotientAutomaton) -> Option<PatternHit> {
    for (r, s) in ordered_pairs(qa.num_classes()) {
        if !qa.same_scc(r, s) {
            continue;
        }
        for a in qa.alphabet().letters() {
            let (p, q) = (qa.circ(a, r), qa.circ(a, s));
            if p != q {
                let x = qa.path_word(r, s)?;
                let y = qa.path_word(s, r)?;
                return Some(PatternHit::T2 {
                    p,
                    q,
                    r,
                    s,
                    a,
                    x,
                    y,
                });
            }
        }
    }
    None
}

pub fn find_t3(qa: &QuotientAutomaton) -> Option<PatternHit> {
    for r in qa.classes() {
        for a in qa.alphabet().letters() {
            let q = qa.circ(a, r);
            let p = qa.circ(a, q);
            if p != q {
                return Some(PatternHit::T3 { p, q, r, a });
            }
        }
    }
    None
}

pub fn find_t4(qa: &QuotientAutomaton) -> Option<PatternHit> {
    let g = PairGraph::new(qa);
    let (p, q) =
        ordered_pairs(qa.num_classes()).find(|&(p, q)| qa.same_scc(p, q) && g.on_cycle(p, q))?;
    let z = g.loop_word(p, q)?;
    let x = qa.path_word(p, q)?;
    let y = qa.path_word(q, p)?;
    Some(PatternHit::T4 { p, q, z, x, y })
}

pub fn find(qa: &QuotientAutomaton, id: PatternId) -> Option<PatternHit> {
    match id {
        PatternId::T1 => find_t1(qa),
        PatternId::T2 => find_t2(qa),
        PatternId::T3 => find_t3(qa),
        PatternId::T4 => find_t4(qa),
    }
}

/// How the two words of a witness pair resemble each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// Common prefix longer than the pump.
    PrefixKEqual,
    StutterEquivalent,
    /// Pumped so that Duplicator survives the `SF` game for `pump` rounds.
    OccEqualPumped,
    /// Pumped so that Duplicator survives the `X,F` game for `pump` rounds.
    XfPumped,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::PrefixKEqual => "prefix-k-equal",
            Relation::StutterEquivalent => "stutter-equivalent",
            Relation::OccEqualPumped => "occ-equal-pumped",
            Relation::XfPumped => "xf-pumped",
        })
    }
}

/// Two ω-words with different membership that the fragment cannot tell
/// apart up to the pump.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPair {
    pub w1: UPWord,
    pub w2: UPWord,
    pub relation: Relation,
    /// Game depth (or prefix length) the pair is built for.
    pub pump: usize,
    /// Number of repetitions of the pumped block.
    pub repetitions: usize,
}

impl WitnessPair {
    /// The game under which the pair is certified, if any.
    pub fn game(&self) -> Option<Moves> {
        match self.relation {
            Relation::PrefixKEqual => Moves::new([Move::X]).ok(),
            Relation::OccEqualPumped => Moves::new([Move::SF]).ok(),
            Relation::XfPumped => Moves::new([Move::X, Move::F]).ok(),
            Relation::StutterEquivalent => None,
        }
    }

    /// Checks the relation tag (not the membership difference).
    pub fn relation_holds(&self) -> bool {
        match self.relation {
            Relation::PrefixKEqual => self.w1.common_prefix_len(&self.w2, self.pump) >= self.pump,
            Relation::StutterEquivalent => self.w1.stutter_equivalent(&self.w2),
            Relation::OccEqualPumped | Relation::XfPumped => {
                let moves = self.game().expect("game relation");
                certify_indistinguishable(&self.w1, &self.w2, &moves, self.pump)
            }
        }
    }

    pub fn to_json(&self, alphabet: &Alphabet) -> Value {
        json!({
            "w1": self.w1.to_text(alphabet),
            "w2": self.w2.to_text(alphabet),
            "relation": self.relation.to_string(),
            "pump": self.pump,
            "repetitions": self.repetitions,
        })
    }
}

/// Shortest `u` such that exactly one of `u∘c1`, `u∘c2` is initial.
pub fn distinguishing_word(qa: &QuotientAutomaton, c1: ClassId, c2: ClassId) -> Option<Word> {
    let (mut labels, _) = shortest_path(
        (c1, c2),
        |&(p, q)| {
            qa.alphabet()
                .letters()
                .map(move |a| (a, (qa.circ(a, p), qa.circ(a, q))))
        },
        |&(p, q)| qa.is_initial(p) != qa.is_initial(q),
    )?;
    labels.reverse();
    Some(labels)
}

fn class_suffix(g: &Gcma, qa: &QuotientAutomaton, c: ClassId) -> Result<UPWord> {
    g.suffix_word(qa.representative(c))
        .ok_or_else(|| Error::Witness(format!("class C{c} has no final run")))
}

fn concat(parts: &[&[Letter]]) -> Word {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn pow(w: &[Letter], n: usize) -> Word {
    w.repeat(n)
}

/// `prefix · v` as an ultimately periodic word.
fn prepend(prefix: &[Letter], v: &UPWord) -> UPWord {
    UPWord::new(concat(&[prefix, v.prefix()]), v.period().to_vec())
        .expect("nonempty period")
        .canonical()
}

/// Largest repetition count tried before giving up on certification.
const MAX_REPETITIONS: usize = 64;

/// Builds a witness pair for `hit` with pump `m`.
///
/// Membership of `w·v` only depends on the class of the state where the final
/// run on `v` starts, so all constructions work on classes: `w1` and `w2`
/// end in the same suffix word and their prefixes lead to two classes that
/// a distinguishing word `u` separates. Repetition counts start at `m` and
/// grow until the game solver certifies the pair.
pub fn witness(
    g: &Gcma,
    qa: &QuotientAutomaton,
    hit: &PatternHit,
    m: usize,
) -> Result<WitnessPair> {
    let sep = |c1, c2| {
        distinguishing_word(qa, c1, c2)
            .ok_or_else(|| Error::Witness(format!("classes C{c1} and C{c2} are not separated")))
    };
    let pair = match hit {
        PatternHit::T1 { p, q, x } => {
            let u = sep(*p, *q)?;
            let k = (m + 1).div_ceil(x.len()).max(1);
            let head = concat(&[&u, &pow(x, k)]);
            WitnessPair {
                w1: prepend(&head, &class_suffix(g, qa, *p)?),
                w2: prepend(&head, &class_suffix(g, qa, *q)?),
                relation: Relation::PrefixKEqual,
                pump: m,
                repetitions: k,
            }
        }
        PatternHit::T3 { p, q, r, a } => {
            let u = sep(*q, *p)?;
            let v = class_suffix(g, qa, *r)?;
            WitnessPair {
                w1: prepend(&concat(&[&u, &[*a]]), &v),
                w2: prepend(&concat(&[&u, &[*a, *a]]), &v),
                relation: Relation::StutterEquivalent,
                pump: m,
                repetitions: 1,
            }
        }
        PatternHit::T2 {
            p, q, r, a, x, y, ..
        } => {
            // (xy)∘r̄ = r̄, so w1 ends in class a∘r̄ = p̄ and w2 in a∘y∘r̄ = q̄
            let u = sep(*p, *q)?;
            let v = class_suffix(g, qa, *r)?;
            let xy = concat(&[x, y]);
            certified(m, Relation::OccEqualPumped, |n| {
                (
                    prepend(&concat(&[&u, &[*a], &pow(&xy, n)]), &v),
                    prepend(&concat(&[&u, &[*a], y, &pow(&xy, n)]), &v),
                )
            })?
        }
        PatternHit::T4 { p, q, z, x, y } => {
            // W = x z^n y z^n fixes p̄; both words start with u z^n and
            // differ by one block y z^n before the pumped part
            let u = sep(*p, *q)?;
            let v = class_suffix(g, qa, *p)?;
            certified(m, Relation::XfPumped, |n| {
                let zn = pow(z, n);
                let block = concat(&[x, &zn, y, &zn]);
                let tail = pow(&block, n);
                (
                    prepend(&concat(&[&u, &zn, &tail]), &v),
                    prepend(&concat(&[&u, &zn, y, &zn, &tail]), &v),
                )
            })?
        }
    };
    let a1 = g.accepts(&pair.w1)?;
    let a2 = g.accepts(&pair.w2)?;
    if a1 == a2 {
        return Err(Error::Witness(format!(
            "{} pair has equal membership",
            hit.id()
        )));
    }
    Ok(pair)
}

fn certified(
    m: usize,
    relation: Relation,
    build: impl Fn(usize) -> (UPWord, UPWord),
) -> Result<WitnessPair> {
    let mut n = m.max(1);
    while n <= MAX_REPETITIONS.max(m) {
        let (w1, w2) = build(n);
        let pair = WitnessPair {
            w1,
            w2,
            relation,
            pump: m,
            repetitions: n,
        };
        if pair.relation_holds() {
            return Ok(pair);
        }
        n *= 2;
    }
    Err(Error::Witness(format!(
        "no {relation} pair certified at depth {m} up to {MAX_REPETITIONS} repetitions"
    )))
}

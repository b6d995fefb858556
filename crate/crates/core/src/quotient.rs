//! Left congruence of a trim automaton and the quotient semi-automaton.
//!
//! Two states are congruent when they accept the same finite words from the
//! left: `u·p ∈ I ⇔ u·q ∈ I` for every `u`. Classes are written `p̄`, and
//! `a∘p̄` is the class of `a·p`.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::gcma::{Gcma, StateId};
use crate::graph::{strongly_connected, Sccs};
use crate::ltl::{Alphabet, Letter};

pub type ClassId = usize;

/// A partition of the states of an automaton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    class_of: Vec<ClassId>,
    count: usize,
}

impl Partition {
    pub fn class_of(&self, q: StateId) -> ClassId {
        self.class_of[q]
    }

    pub fn num_classes(&self) -> usize {
        self.count
    }

    pub fn assignment(&self) -> &[ClassId] {
        &self.class_of
    }

    /// Members of every class, ascending.
    pub fn classes(&self) -> Vec<Vec<StateId>> {
        let mut out = vec![Vec::new(); self.count];
        for (q, &c) in self.class_of.iter().enumerate() {
            out[c].push(q);
        }
        out
    }
}

/// Renumbers keys by first occurrence.
fn number<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> (Vec<ClassId>, usize) {
    let mut ids: HashMap<K, ClassId> = HashMap::new();
    let assigned = keys
        .map(|k| {
            let next = ids.len();
            *ids.entry(k).or_insert(next)
        })
        .collect();
    (assigned, ids.len())
}

/// Coarsest partition refining `I`-membership that is compatible with every
/// letter (Moore refinement).
pub fn left_congruence(g: &Gcma) -> Partition {
    let (mut class_of, mut count) = number(g.states().map(|q| g.is_initial(q)));
    loop {
        let (next, next_count) = number(g.states().map(|q| {
            let mut sig = vec![class_of[q]];
            sig.extend(g.alphabet().letters().map(|a| class_of[g.step(a, q)]));
            sig
        }));
        class_of = next;
        if next_count == count {
            return Partition { class_of, count };
        }
        count = next_count;
    }
}

/// The left quotient `𝔄/≡` with its transition graph (edges `a∘p̄ → p̄`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientAutomaton {
    alphabet: Alphabet,
    partition: Partition,
    members: Vec<Vec<StateId>>,
    initial: Vec<bool>,
    /// `circ[a][c] = a∘c`.
    circ: Vec<Vec<ClassId>>,
    sccs: Sccs,
}

/// Quotient of `g` by a partition that is a left congruence.
pub fn quotient(g: &Gcma, partition: &Partition) -> QuotientAutomaton {
    let members = partition.classes();
    let circ: Vec<Vec<ClassId>> = g
        .alphabet()
        .letters()
        .map(|a| {
            members
                .iter()
                .map(|m| partition.class_of(g.step(a, m[0])))
                .collect()
        })
        .collect();
    let initial = members.iter().map(|m| g.is_initial(m[0])).collect();
    let n = members.len();
    // SCCs do not depend on the edge direction, so follow c → a∘c
    let sccs = strongly_connected(n, |c| {
        circ.iter().map(move |row| row[c]).collect::<Vec<_>>()
    });
    QuotientAutomaton {
        alphabet: g.alphabet().clone(),
        partition: partition.clone(),
        members,
        initial,
        circ,
        sccs,
    }
}

impl QuotientAutomaton {
    /// Left congruence and quotient in one step.
    pub fn of(g: &Gcma) -> QuotientAutomaton {
        quotient(g, &left_congruence(g))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn num_classes(&self) -> usize {
        self.members.len()
    }

    pub fn classes(&self) -> std::ops::Range<ClassId> {
        0..self.members.len()
    }

    pub fn members(&self, c: ClassId) -> &[StateId] {
        &self.members[c]
    }

    /// Smallest state of the class.
    pub fn representative(&self, c: ClassId) -> StateId {
        self.members[c][0]
    }

    pub fn class_of(&self, q: StateId) -> ClassId {
        self.partition.class_of(q)
    }

    pub fn is_initial(&self, c: ClassId) -> bool {
        self.initial[c]
    }

    /// `a∘c`.
    pub fn circ(&self, a: Letter, c: ClassId) -> ClassId {
        self.circ[a.index()][c]
    }

    /// `u∘c`, reading `u` from its last letter.
    pub fn apply(&self, u: &[Letter], c: ClassId) -> ClassId {
        u.iter().rev().fold(c, |s, &a| self.circ(a, s))
    }

    pub fn sccs(&self) -> &Sccs {
        &self.sccs
    }

    pub fn scc_of(&self, c: ClassId) -> usize {
        self.sccs.component[c]
    }

    pub fn same_scc(&self, c: ClassId, d: ClassId) -> bool {
        self.sccs.same(c, d)
    }

    /// Edges of the transition graph: `(a∘c, a, c)`.
    pub fn edges(&self) -> impl Iterator<Item = (ClassId, Letter, ClassId)> + '_ {
        self.alphabet
            .letters()
            .flat_map(move |a| self.classes().map(move |c| (self.circ(a, c), a, c)))
    }

    /// Shortest `u` with `from = u∘to`, or `None` if there is no path from
    /// `from` to `to` in the transition graph. Letters are tried in alphabet
    /// order.
    pub fn path_word(&self, from: ClassId, to: ClassId) -> Option<Vec<Letter>> {
        // walk backwards from `to`: the last letter of u is applied first
        let (mut rev, _) = crate::graph::shortest_path(
            to,
            |&c| self.alphabet.letters().map(move |a| (a, self.circ(a, c))),
            |&c| c == from,
        )?;
        rev.reverse();
        Some(rev)
    }

    /// Like [`QuotientAutomaton::path_word`] but never empty: a shortest
    /// `u ∈ A^+` with `from = u∘to`.
    pub fn nonempty_path_word(&self, from: ClassId, to: ClassId) -> Option<Vec<Letter>> {
        let mut best: Option<Vec<Letter>> = None;
        for a in self.alphabet.letters() {
            if let Some(mut u) = self.path_word(from, self.circ(a, to)) {
                if best.as_ref().is_none_or(|b| u.len() + 1 < b.len()) {
                    u.push(a);
                    best = Some(u);
                }
            }
        }
        best
    }

    pub fn to_json(&self, g: &Gcma) -> QuotientJson {
        QuotientJson {
            alphabet: self.alphabet.clone(),
            classes: self
                .classes()
                .map(|c| ClassJson {
                    id: c,
                    states: self.members[c].clone(),
                    labels: self.members[c]
                        .iter()
                        .map(|&q| g.label(q).to_string())
                        .collect(),
                    initial: self.initial[c],
                    scc: self.scc_of(c),
                })
                .collect(),
            circ: self
                .alphabet
                .letters()
                .map(|a| {
                    (
                        self.alphabet.name(a).to_string(),
                        self.circ[a.index()].clone(),
                    )
                })
                .collect(),
            scc_has_edge: self.sccs.has_edge.clone(),
        }
    }

    /// Graphviz rendering with one cluster per SCC. An edge `p -a-> q`
    /// means `p = a∘q`.
    pub fn to_dot(&self, g: &Gcma) -> String {
        use crate::gcma::io_escape as escape;
        let mut out = String::from("digraph quotient {\n  rankdir=LR;\n");
        for (s, members) in self.sccs.members.iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_{s} {{");
            let _ = writeln!(
                out,
                "    label=\"SCC {s}{}\";",
                if self.sccs.has_edge[s] {
                    ""
                } else {
                    " (trivial)"
                }
            );
            for &c in members {
                let states: Vec<&str> = self.members[c].iter().map(|&q| g.label(q)).collect();
                let shape = if self.initial[c] {
                    "doublecircle"
                } else {
                    "circle"
                };
                let _ = writeln!(
                    out,
                    "    c{c} [label=\"C{c}\\n{}\", shape={shape}];",
                    escape(&states.join(" "))
                );
            }
            out.push_str("  }\n");
        }
        for (p, a, q) in self.edges() {
            let _ = writeln!(
                out,
                "  c{p} -> c{q} [label=\"{}\"];",
                escape(self.alphabet.name(a))
            );
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientJson {
    pub alphabet: Alphabet,
    pub classes: Vec<ClassJson>,
    pub circ: BTreeMap<String, Vec<ClassId>>,
    pub scc_has_edge: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub id: ClassId,
    pub states: Vec<StateId>,
    pub labels: Vec<String>,
    pub initial: bool,
    pub scc: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcma::build_gcma;
    use crate::ltl::{parse, to_nnf};

    fn trimmed(f: &str) -> Gcma {
        let ab = Alphabet::parse("a,b").unwrap();
        build_gcma(&to_nnf(&parse(f, &ab).unwrap(), &ab), &ab, 16)
            .unwrap()
            .trim()
    }

    #[test]
    fn release_quotient() {
        let g = trimmed("a R b");
        let q = QuotientAutomaton::of(&g);
        assert_eq!(q.partition().classes(), vec![vec![0, 1], vec![2]]);
        let (a, b) = (Letter(0), Letter(1));
        assert_eq!(
            [q.circ(a, 0), q.circ(a, 1), q.circ(b, 0), q.circ(b, 1)],
            [0, 0, 0, 1]
        );
        assert_eq!(q.sccs().members, vec![vec![0], vec![1]]);
        assert_eq!(q.sccs().has_edge, vec![true, true]);
    }

    #[test]
    fn eventually_quotient() {
        let g = trimmed("F a");
        let q = QuotientAutomaton::of(&g);
        // class 0 = {∅}, class 1 = {F a, a F a}
        assert_eq!(q.partition().classes(), vec![vec![0], vec![1, 2]]);
        let (a, b) = (Letter(0), Letter(1));
        assert_eq!(
            [q.circ(a, 1), q.circ(a, 0), q.circ(b, 1), q.circ(b, 0)],
            [1, 1, 1, 0]
        );
        assert!(q.is_initial(1) && !q.is_initial(0));
        assert_eq!(q.sccs().has_edge, vec![true, true]);
    }

    #[test]
    fn single_class() {
        let g = trimmed("true");
        let q = QuotientAutomaton::of(&g);
        assert_eq!(q.num_classes(), 1);
        assert!(q.edges().all(|(p, _, c)| p == 0 && c == 0));
    }

    #[test]
    fn paths() {
        let g = trimmed("X b");
        let q = QuotientAutomaton::of(&g);
        for c in q.classes() {
            for d in q.classes() {
                if let Some(u) = q.path_word(c, d) {
                    assert_eq!(q.apply(&u, d), c);
                }
                if let Some(u) = q.nonempty_path_word(c, d) {
                    assert!(!u.is_empty());
                    assert_eq!(q.apply(&u, d), c);
                }
            }
        }
    }

    #[test]
    fn dot_and_json() {
        let g = trimmed("a R b");
        let q = QuotientAutomaton::of(&g);
        let dot = q.to_dot(&g);
        assert!(dot.contains("subgraph cluster_1"));
        let json = q.to_json(&g);
        assert_eq!(json.classes[1].labels, vec!["{b, (a R b)}"]);
        assert_eq!(json.circ["b"], vec![0, 1]);
    }
}

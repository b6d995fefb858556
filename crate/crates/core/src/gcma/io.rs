use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Gcma, StateId};
use crate::error::{Error, Result};
use crate::ltl::Alphabet;

/// Serialized form of a [`Gcma`]. `delta[letter][q]` is `letter·q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcmaJson {
    pub alphabet: Alphabet,
    pub states: Vec<StateJson>,
    pub initial: Vec<StateId>,
    pub delta: BTreeMap<String, Vec<StateId>>,
    pub final_sets: Vec<Vec<StateId>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    pub id: StateId,
    pub label: String,
}

impl From<&Gcma> for GcmaJson {
    fn from(g: &Gcma) -> Self {
        GcmaJson {
            alphabet: g.alphabet.clone(),
            states: g
                .states()
                .map(|q| StateJson {
                    id: q,
                    label: g.labels[q].clone(),
                })
                .collect(),
            initial: g.initial_states(),
            delta: g
                .alphabet
                .letters()
                .map(|a| (g.alphabet.name(a).to_string(), g.delta_row(a).to_vec()))
                .collect(),
            final_sets: g.final_sets(),
        }
    }
}

impl GcmaJson {
    pub fn to_gcma(&self) -> Result<Gcma> {
        for (i, s) in self.states.iter().enumerate() {
            if s.id != i {
                return Err(Error::MalformedAutomaton(format!(
                    "state ids must be 0..n in order, found {} at position {i}",
                    s.id
                )));
            }
        }
        let mut delta = Vec::new();
        for a in self.alphabet.letters() {
            let name = self.alphabet.name(a);
            let row = self
                .delta
                .get(name)
                .ok_or_else(|| Error::MalformedAutomaton(format!("no transitions for `{name}`")))?;
            delta.push(row.clone());
        }
        if self.delta.len() != self.alphabet.len() {
            return Err(Error::MalformedAutomaton(
                "transitions for unknown letters".into(),
            ));
        }
        Gcma::from_parts(
            self.alphabet.clone(),
            self.states.iter().map(|s| s.label.clone()).collect(),
            &self.initial,
            delta,
            &self.final_sets,
        )
    }
}

pub(super) fn to_dot(g: &Gcma) -> String {
    let mut out = String::from("digraph gcma {\n  rankdir=LR;\n");
    for q in g.states() {
        let finals: Vec<String> = (0..g.num_final_sets())
            .filter(|&f| g.in_final(f, q))
            .map(|f| format!("F{f}"))
            .collect();
        let mut label = escape(&g.labels[q]);
        if !finals.is_empty() {
            let _ = write!(label, "\\n{}", finals.join(","));
        }
        let shape = if g.is_initial(q) {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(out, "  q{q} [label=\"{label}\", shape={shape}];");
    }
    // p -a-> q depicts p = a·q
    for (p, a, q) in g.edges() {
        let _ = writeln!(
            out,
            "  q{p} -> q{q} [label=\"{}\"];",
            escape(g.alphabet.name(a))
        );
    }
    out.push_str("}\n");
    out
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcma::fixtures;

    #[test]
    fn json_round_trip() {
        let g = fixtures::four_state();
        let text = serde_json::to_string(&g.to_json()).unwrap();
        let back: GcmaJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Gcma::from_json(&back).unwrap(), g);
    }

    #[test]
    fn dot_edges_point_from_image() {
        let dot = fixtures::four_state().to_dot();
        assert!(dot.contains("q3 -> q2 [label=\"b\"]"));
        assert!(dot.contains("q0 -> q1 [label=\"a\"]"));
    }
}

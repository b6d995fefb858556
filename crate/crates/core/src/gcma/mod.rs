//! Reverse-deterministic generalized Carton–Michel automata.
//!
//! The transition function reads words right to left: `u·q` applies the last
//! letter of `u` first. A run on an ω-word satisfies `r(i) = w(i)·r(i+1)`.

mod anchor;
mod build;
mod io;
mod trim;

pub use anchor::AnchorTable;
pub use build::{build_gcma, DEFAULT_MAX_SUB};
pub(crate) use io::escape as io_escape;
pub use io::{GcmaJson, StateJson};

use crate::error::{Error, Result};
use crate::ltl::{Alphabet, Formula, Letter, UPWord};

pub type StateId = usize;

/// A generalized Carton–Michel automaton `(A, Q, I, ·, 𝔉)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gcma {
    alphabet: Alphabet,
    labels: Vec<String>,
    /// Subformula bitset of each state; empty for hand-built automata.
    subsets: Vec<u64>,
    /// Subformulas indexing the bits of `subsets`.
    subformulas: Vec<Formula>,
    initial: Vec<bool>,
    /// `delta[a][q] = a·q`.
    delta: Vec<Vec<StateId>>,
    final_sets: Vec<Vec<bool>>,
}

impl Gcma {
    /// Assembles an automaton from explicit tables. `delta[a][q]` is `a·q`.
    pub fn from_parts(
        alphabet: Alphabet,
        labels: Vec<String>,
        initial: &[StateId],
        delta: Vec<Vec<StateId>>,
        final_sets: &[Vec<StateId>],
    ) -> Result<Gcma> {
        let n = labels.len();
        let bad = |m: String| Err(Error::MalformedAutomaton(m));
        if delta.len() != alphabet.len() {
            return bad(format!(
                "{} transition rows for {} letters",
                delta.len(),
                alphabet.len()
            ));
        }
        for (a, row) in delta.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {a} has {} entries, expected {n}", row.len()));
            }
            if let Some(q) = row.iter().find(|&&q| q >= n) {
                return bad(format!("transition target {q} out of range"));
            }
        }
        let mask = |ids: &[StateId], what: &str| -> Result<Vec<bool>> {
            let mut m = vec![false; n];
            for &q in ids {
                if q >= n {
                    return Err(Error::MalformedAutomaton(format!(
                        "{what} state {q} out of range"
                    )));
                }
                m[q] = true;
            }
            Ok(m)
        };
        Ok(Gcma {
            initial: mask(initial, "initial")?,
            final_sets: final_sets
                .iter()
                .map(|f| mask(f, "final"))
                .collect::<Result<_>>()?,
            alphabet,
            labels,
            subsets: Vec::new(),
            subformulas: Vec::new(),
            delta,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.labels.len()
    }

    pub fn states(&self) -> std::ops::Range<StateId> {
        0..self.num_states()
    }

    pub fn label(&self, q: StateId) -> &str {
        &self.labels[q]
    }

    /// Subformula set of a tableau state, as formulas in subformula order.
    pub fn state_formulas(&self, q: StateId) -> Option<Vec<&Formula>> {
        let bits = *self.subsets.get(q)?;
        Some(
            self.subformulas
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, f)| f)
                .collect(),
        )
    }

    /// Whether tableau state `q` contains `formula`. `None` for hand-built
    /// automata or formulas outside the subformula list.
    pub fn state_contains(&self, q: StateId, formula: &Formula) -> Option<bool> {
        let bits = *self.subsets.get(q)?;
        let i = self.subformulas.iter().position(|f| f == formula)?;
        Some(bits >> i & 1 == 1)
    }

    pub fn subformulas(&self) -> &[Formula] {
        &self.subformulas
    }

    pub fn is_initial(&self, q: StateId) -> bool {
        self.initial[q]
    }

    pub fn initial_states(&self) -> Vec<StateId> {
        self.states().filter(|&q| self.initial[q]).collect()
    }

    pub fn final_sets(&self) -> Vec<Vec<StateId>> {
        self.final_sets
            .iter()
            .map(|f| self.states().filter(|&q| f[q]).collect())
            .collect()
    }

    pub fn num_final_sets(&self) -> usize {
        self.final_sets.len()
    }

    pub fn in_final(&self, set: usize, q: StateId) -> bool {
        self.final_sets[set][q]
    }

    /// `a·q`.
    pub fn step(&self, a: Letter, q: StateId) -> StateId {
        self.delta[a.index()][q]
    }

    /// `u·q`, reading `u` from its last letter.
    pub fn apply(&self, u: &[Letter], q: StateId) -> StateId {
        u.iter().rev().fold(q, |s, &a| self.step(a, s))
    }

    pub fn delta_row(&self, a: Letter) -> &[StateId] {
        &self.delta[a.index()]
    }

    /// Copy with `a·q` redirected to `target`, used to inject faults.
    pub fn with_transition(&self, a: Letter, q: StateId, target: StateId) -> Result<Gcma> {
        let n = self.num_states();
        if q >= n || target >= n || !self.alphabet.contains(a) {
            return Err(Error::MalformedAutomaton(format!(
                "no transition {}·{q} to redirect",
                a.index()
            )));
        }
        let mut g = self.clone();
        g.delta[a.index()][q] = target;
        Ok(g)
    }

    /// Whether no initial state survives, i.e. the recognized language is
    /// empty (for trim automata).
    pub fn has_empty_language(&self) -> bool {
        !self.initial.iter().any(|&i| i)
    }

    /// Edges of the transition graph: `(a·q, a, q)`.
    pub fn edges(&self) -> impl Iterator<Item = (StateId, Letter, StateId)> + '_ {
        self.alphabet
            .letters()
            .flat_map(move |a| self.states().map(move |q| (self.step(a, q), a, q)))
    }

    /// Removes every state that occurs in no final run.
    pub fn trim(&self) -> Gcma {
        trim::trim(self)
    }

    /// The anchor of a nonempty word: the unique state on which `u` loops
    /// while visiting every final set.
    pub fn anchor(&self, u: &[Letter]) -> Result<StateId> {
        anchor::anchor(self, u)
    }

    /// Whether `w` is accepted: `x·anchor(y) ∈ I`.
    pub fn accepts(&self, w: &UPWord) -> Result<bool> {
        let q = self.anchor(w.period())?;
        Ok(self.initial[self.apply(w.prefix(), q)])
    }

    /// [`Gcma::accepts`] with a shared anchor cache.
    pub fn accepts_with(&self, table: &mut AnchorTable, w: &UPWord) -> Result<bool> {
        let q = table.get(self, w.period())?;
        Ok(self.initial[self.apply(w.prefix(), q)])
    }

    /// `r(0..=n)` of the unique final run on `w`.
    pub fn final_run_prefix(&self, w: &UPWord, n: usize) -> Result<Vec<StateId>> {
        let y = w.period();
        let x = w.prefix();
        let q = self.anchor(y)?;
        Ok((0..=n)
            .map(|i| {
                if i < x.len() {
                    self.apply(&x[i..], q)
                } else {
                    self.apply(&y[(i - x.len()) % y.len()..], q)
                }
            })
            .collect())
    }

    /// An ω-word whose final run starts in `q`: a shortest path to the
    /// nearest viable SCC followed by a loop through all final sets there.
    /// `None` if `q` occurs in no final run.
    pub fn suffix_word(&self, q: StateId) -> Option<UPWord> {
        use crate::graph::{shortest_cycle, shortest_path, strongly_connected};
        let mut succ: Vec<Vec<(Letter, StateId)>> = vec![Vec::new(); self.num_states()];
        for (p, a, q) in self.edges() {
            succ[p].push((a, q));
        }
        let sccs = strongly_connected(self.num_states(), |p| {
            succ[p].iter().map(|&(_, q)| q).collect::<Vec<_>>()
        });
        let viable: Vec<bool> = (0..sccs.len())
            .map(|c| {
                sccs.has_edge[c]
                    && self
                        .final_sets
                        .iter()
                        .all(|f| sccs.members[c].iter().any(|&s| f[s]))
            })
            .collect();
        let (prefix, t) = shortest_path(q, |&p| succ[p].clone(), |&p| viable[sccs.component[p]])?;
        let comp = sccs.component[t];
        let inside = |p: &StateId| {
            succ[*p]
                .iter()
                .filter(|&&(_, s)| sccs.component[s] == comp)
                .copied()
                .collect::<Vec<_>>()
        };
        let mut period = Vec::new();
        let mut cur = t;
        for f in &self.final_sets {
            let (path, end) = shortest_path(cur, inside, |&s| f[s])?;
            period.extend(path);
            cur = end;
        }
        let (back, _) = shortest_path(cur, inside, |&s| s == t)?;
        period.extend(back);
        if period.is_empty() {
            period = shortest_cycle(t, inside)?;
        }
        UPWord::new(prefix, period).ok()
    }

    pub fn to_json(&self) -> GcmaJson {
        GcmaJson::from(self)
    }

    pub fn from_json(json: &GcmaJson) -> Result<Gcma> {
        json.to_gcma()
    }

    /// Graphviz rendering. An edge `p -a-> q` means `p = a·q`.
    pub fn to_dot(&self) -> String {
        io::to_dot(self)
    }
}

/// Hand-built automata used in tests and examples.
pub mod fixtures {
    use super::Gcma;
    use crate::ltl::Alphabet;

    /// The four-state CMA over `{a, b}` recognizing `(a+b)^* b^ω`.
    ///
    /// `I = {0, 1}`, `F = {1, 2}`; `a` sends every state to `0` or `2`
    /// (`a·0 = a·1 = 0`, `a·2 = a·3 = 2`), `b` fixes `0`, `1`, `3` and
    /// sends `2` to `3`.
    pub fn four_state() -> Gcma {
        let ab = Alphabet::parse("a,b").expect("valid alphabet");
        Gcma::from_parts(
            ab,
            (0..4).map(|i| i.to_string()).collect(),
            &[0, 1],
            vec![vec![0, 0, 2, 2], vec![0, 1, 3, 3]],
            &[vec![1, 2]],
        )
        .expect("valid fixture")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_state_runs() {
        let g = fixtures::four_state();
        let ab = g.alphabet().clone();
        let w = |s: &str| UPWord::parse(s, &ab).unwrap();
        let u = |s: &str| ab.parse_word(s).unwrap();
        assert_eq!(g.anchor(&u("b")), Ok(1));
        assert_eq!(g.anchor(&u("a")), Ok(2));
        assert_eq!(g.anchor(&u("ab")), Ok(2));
        assert_eq!(g.accepts(&w("ab(b)")), Ok(true));
        assert_eq!(g.accepts(&w("(ab)")), Ok(false));
        assert_eq!(g.final_run_prefix(&w("a(b)"), 1), Ok(vec![0, 1]));
        assert_eq!(g.final_run_prefix(&w("a(b)"), 0), Ok(vec![0]));
        assert_eq!(g.trim(), g);
    }

    #[test]
    fn suffix_words_start_their_runs_in_place() {
        let g = fixtures::four_state();
        for q in g.states() {
            let v = g.suffix_word(q).unwrap();
            assert_eq!(g.final_run_prefix(&v, 0).unwrap(), vec![q], "{v:?}");
        }
    }

    #[test]
    fn malformed_parts_are_rejected() {
        let ab = Alphabet::parse("a,b").unwrap();
        let labels = vec!["0".to_string()];
        assert!(Gcma::from_parts(ab.clone(), labels.clone(), &[0], vec![vec![0]], &[]).is_err());
        assert!(Gcma::from_parts(
            ab.clone(),
            labels.clone(),
            &[1],
            vec![vec![0], vec![0]],
            &[]
        )
        .is_err());
        assert!(Gcma::from_parts(ab, labels, &[0], vec![vec![0], vec![0]], &[]).is_ok());
    }
}

use std::collections::HashMap;

use super::{Gcma, StateId};
use crate::error::{Error, Result};
use crate::ltl::{Letter, Word};

/// Whether `u` loops at `q` (`u·q = q`) and the loop visits every final set.
/// Both the empty and the full suffix of `u` count as split points.
pub(crate) fn is_loop(g: &Gcma, u: &[Letter], q: StateId) -> bool {
    let k = g.num_final_sets();
    let mut seen = vec![false; k];
    let mut s = q;
    let mut mark = |s: StateId| {
        for (f, hit) in seen.iter_mut().enumerate() {
            *hit |= g.in_final(f, s);
        }
    };
    mark(s);
    for &a in u.iter().rev() {
        s = g.step(a, s);
        mark(s);
    }
    s == q && seen.iter().all(|&h| h)
}

pub(super) fn anchor(g: &Gcma, u: &[Letter]) -> Result<StateId> {
    if u.is_empty() {
        return Err(Error::InvalidWord("anchor of the empty word".into()));
    }
    let mut found = None;
    let mut count = 0;
    for q in g.states() {
        if is_loop(g, u, q) {
            count += 1;
            found.get_or_insert(q);
        }
    }
    match (count, found) {
        (1, Some(q)) => Ok(q),
        _ => Err(Error::AnchorViolation {
            word: u.iter().map(|l| l.index()).collect(),
            candidates: count,
        }),
    }
}

/// Memoized anchors for one automaton.
#[derive(Clone, Debug, Default)]
pub struct AnchorTable {
    memo: HashMap<Word, StateId>,
}

impl AnchorTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, g: &Gcma, u: &[Letter]) -> Result<StateId> {
        if let Some(&q) = self.memo.get(u) {
            return Ok(q);
        }
        let q = anchor(g, u)?;
        self.memo.insert(u.to_vec(), q);
        Ok(q)
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gcma::{build_gcma, fixtures};
    use crate::ltl::{parse, to_nnf, Alphabet};

    #[test]
    fn release_anchors() {
        let ab = Alphabet::parse("a,b").unwrap();
        let f = to_nnf(&parse("a R b", &ab).unwrap(), &ab);
        let g = build_gcma(&f, &ab, 16).unwrap().trim();
        let mut t = AnchorTable::new();
        let b = ab.parse_word("b").unwrap();
        let q = t.get(&g, &b).unwrap();
        assert_eq!(g.label(q), "{b, (a R b)}");
        let q = t.get(&g, &ab.parse_word("ab").unwrap()).unwrap();
        assert_eq!(g.label(q), "{a}");
        assert_eq!(t.get(&g, &b).unwrap(), g.anchor(&b).unwrap());
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn empty_word_and_broken_automaton() {
        let g = fixtures::four_state();
        assert!(g.anchor(&[]).is_err());
        // drop the final set: every fixpoint of `b` now passes the loop test
        let broken = Gcma::from_parts(
            g.alphabet().clone(),
            (0..4).map(|i| i.to_string()).collect(),
            &[0, 1],
            vec![vec![0, 0, 2, 2], vec![0, 1, 3, 3]],
            &[],
        )
        .unwrap();
        assert_eq!(
            broken.anchor(&[Letter(1)]),
            Err(Error::AnchorViolation {
                word: vec![1],
                candidates: 3
            })
        );
    }
}

use super::{Gcma, StateId};
use crate::graph::strongly_connected;

/// Keeps the states from which the transition graph (edges `a·q → q`) reaches
/// a viable SCC: one that contains an edge and meets every final set.
///
/// Retained states are closed under `q ↦ a·q`, so the restricted transition
/// function stays total. State order is preserved.
pub(super) fn trim(g: &Gcma) -> Gcma {
    let n = g.num_states();
    let mut succ: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for (p, _, q) in g.edges() {
        succ[p].push(q);
    }
    let sccs = strongly_connected(n, |p| succ[p].clone());

    let mut keep = vec![false; n];
    let mut stack = Vec::new();
    for (c, members) in sccs.members.iter().enumerate() {
        let viable = sccs.has_edge[c] && g.final_sets.iter().all(|f| members.iter().any(|&q| f[q]));
        if viable {
            for &q in members {
                keep[q] = true;
                stack.push(q);
            }
        }
    }
    while let Some(q) = stack.pop() {
        for row in &g.delta {
            let p = row[q];
            if !keep[p] {
                keep[p] = true;
                stack.push(p);
            }
        }
    }

    let mut new_id = vec![usize::MAX; n];
    let old: Vec<StateId> = (0..n).filter(|&q| keep[q]).collect();
    for (i, &q) in old.iter().enumerate() {
        new_id[q] = i;
    }
    let pick = |v: &[bool]| old.iter().map(|&q| v[q]).collect::<Vec<_>>();
    Gcma {
        alphabet: g.alphabet.clone(),
        labels: old.iter().map(|&q| g.labels[q].clone()).collect(),
        subsets: if g.subsets.is_empty() {
            Vec::new()
        } else {
            old.iter().map(|&q| g.subsets[q]).collect()
        },
        subformulas: g.subformulas.clone(),
        initial: pick(&g.initial),
        delta: g
            .delta
            .iter()
            .map(|row| old.iter().map(|&q| new_id[row[q]]).collect())
            .collect(),
        final_sets: g.final_sets.iter().map(|f| pick(f)).collect(),
    }
}

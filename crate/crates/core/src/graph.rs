//! Small graph utilities shared by the automaton modules.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

/// Strongly connected components of a graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sccs {
    /// Component id of every node.
    pub component: Vec<usize>,
    /// Members of every component, ascending.
    pub members: Vec<Vec<usize>>,
    /// Whether the component contains at least one edge. A singleton has an
    /// edge iff it carries a self-loop.
    pub has_edge: Vec<bool>,
}

impl Sccs {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.component[a] == self.component[b]
    }
}

/// Iterative Tarjan. Components are numbered by their smallest member.
pub fn strongly_connected<F, I>(n: usize, succ: F) -> Sccs
where
    F: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    const UNSEEN: usize = usize::MAX;
    let adj: Vec<Vec<usize>> = (0..n).map(|v| succ(v).into_iter().collect()).collect();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut counter = 0;
    // (node, next child position)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < adj[v].len() {
                let w = adj[v][*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }

    comps.sort_by_key(|c| c[0]);
    let mut component = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            component[v] = i;
        }
    }
    let has_edge = comps
        .iter()
        .map(|c| c.len() > 1 || adj[c[0]].contains(&c[0]))
        .collect();
    Sccs {
        component,
        members: comps,
        has_edge,
    }
}

/// Breadth-first search for the shortest labelled path from `start` to a
/// node satisfying `goal`. Successors are explored in the order `succ`
/// yields them, which makes the result deterministic.
///
/// Returns the labels along the path and the node reached. The empty path is
/// returned when `start` itself is a goal.
pub fn shortest_path<N, L, F, I, G>(start: N, succ: F, goal: G) -> Option<(Vec<L>, N)>
where
    N: Clone + Eq + Hash,
    L: Clone,
    F: Fn(&N) -> I,
    I: IntoIterator<Item = (L, N)>,
    G: Fn(&N) -> bool,
{
    if goal(&start) {
        return Some((Vec::new(), start));
    }
    let mut parent: HashMap<N, Option<(N, L)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(node) = queue.pop_front() {
        for (label, next) in succ(&node) {
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), Some((node.clone(), label)));
            if goal(&next) {
                let mut labels = Vec::new();
                let mut cur = next.clone();
                while let Some(Some((prev, l))) = parent.get(&cur) {
                    labels.push(l.clone());
                    cur = prev.clone();
                }
                labels.reverse();
                return Some((labels, next));
            }
            queue.push_back(next);
        }
    }
    None
}

/// Shortest nonempty cycle through `start`.
pub fn shortest_cycle<N, L, F, I>(start: N, succ: F) -> Option<Vec<L>>
where
    N: Clone + Eq + Hash,
    L: Clone,
    F: Fn(&N) -> I,
    I: IntoIterator<Item = (L, N)>,
{
    let mut best: Option<Vec<L>> = None;
    for (label, next) in succ(&start) {
        if let Some((mut rest, _)) = shortest_path(next, &succ, |n| *n == start) {
            if best.as_ref().is_none_or(|b| rest.len() + 1 < b.len()) {
                rest.insert(0, label);
                best = Some(rest);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tarjan_components() {
        // 0 -> 1 -> 2 -> 0, 2 -> 3, 3 -> 3, 4 isolated
        let edges = [vec![1], vec![2], vec![0, 3], vec![3], vec![]];
        let s = strongly_connected(5, |v| edges[v].clone());
        assert_eq!(s.members, vec![vec![0, 1, 2], vec![3], vec![4]]);
        assert_eq!(s.has_edge, vec![true, true, false]);
        assert!(s.same(0, 2));
        assert!(!s.same(2, 3));
    }

    #[test]
    fn chain_has_no_edges() {
        let s = strongly_connected(4, |v| if v < 3 { vec![v + 1] } else { vec![] });
        assert_eq!(s.len(), 4);
        assert!(s.has_edge.iter().all(|e| !e));
    }

    #[test]
    fn deep_graph_does_not_overflow() {
        let n = 200_000;
        let s = strongly_connected(n, |v| vec![(v + 1) % n]);
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn bfs_paths() {
        let succ = |&n: &u32| vec![('a', n + 1), ('b', n * 2)];
        let (path, end) = shortest_path(1u32, succ, |&n| n == 8).unwrap();
        assert_eq!(end, 8);
        assert_eq!(path, vec!['a', 'b', 'b']);
        let cyc = shortest_cycle(0u32, |&n: &u32| vec![((), (n + 1) % 3)]).unwrap();
        assert_eq!(cyc.len(), 3);
    }
}

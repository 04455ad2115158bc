//! Degree-sum closure: repeatedly join non-adjacent pairs whose degree sum is at least `k`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureResult {
    pub graph: Graph,
    /// Joined pairs `(u, v)`, `u < v`, in the order they were added.
    pub joined: Vec<(usize, usize)>,
}

/// The `k`-closure, joining eligible pairs in lexicographic order.
pub fn k_closure(g: &Graph, k: usize) -> ClosureResult {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let mut h = g.clone();
    let mut work: BTreeSet<(usize, usize)> = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if !h.has_edge(u, v) && deg[u] + deg[v] >= k {
                work.insert((u, v));
            }
        }
    }
    let mut joined = Vec::new();
    while let Some((u, v)) = work.pop_first() {
        h = h.with_edge(u, v).expect("pair is in range");
        joined.push((u, v));
        deg[u] += 1;
        deg[v] += 1;
        for x in [u, v] {
            for w in 0..n {
                if w != x && !h.has_edge(x, w) && deg[x] + deg[w] >= k {
                    work.insert((x.min(w), x.max(w)));
                }
            }
        }
    }
    ClosureResult { graph: h, joined }
}

/// The `k`-closure with the next pair chosen by `pick` among all currently
/// eligible pairs (given in lexicographic order).
pub fn k_closure_by(g: &Graph, k: usize, mut pick: impl FnMut(&[(usize, usize)]) -> usize) -> ClosureResult {
    let n = g.order();
    let mut h = g.clone();
    let mut joined = Vec::new();
    loop {
        let eligible: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !h.has_edge(u, v) && h.degree(u) + h.degree(v) >= k)
            .collect();
        if eligible.is_empty() {
            return ClosureResult { graph: h, joined };
        }
        let (u, v) = eligible[pick(&eligible) % eligible.len()];
        h = h.with_edge(u, v).expect("pair is in range");
        joined.push((u, v));
    }
}

pub fn is_complete(g: &Graph) -> bool {
    g.is_complete()
}

/// Whether `n(n - 5) / (n - 1) < n - 4`, decided in integers.
pub fn complement_edge_bound_below(n: u64) -> bool {
    let n = n as u128;
    n >= 5 && n * (n - 5) < (n - 4) * (n - 1)
}

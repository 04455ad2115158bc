//! Dense simple graphs on vertices `0..n` and the structural operations the
//! rest of the crate is written against.
//!
//! Rows are stored as packed `u64` words. Graphs of order at most 64 use one
//! word per row, which is the layout the bit-parallel engines in [`crate::iso`],
//! [`crate::enumerate`] and [`crate::squareham`] require; larger graphs (up to
//! [`MAX_ORDER`]) are accepted here so the spectral routines can work on the
//! closed-form families at larger orders.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// Largest order accepted by [`Graph`].
pub const MAX_ORDER: usize = 4096;

/// Largest order accepted by the single-word bitset engines.
pub const BITSET_ORDER: usize = 64;

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    bits: Vec<u64>,
    size: usize,
}

#[inline]
fn words_for(order: usize) -> usize {
    order.div_ceil(64).max(1)
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order, max: MAX_ORDER });
        }
        let words = words_for(order);
        Ok(Graph { order, words, bits: vec![0; words * order], size: 0 })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            g.check_pair(u, v)?;
            g.set(u, v);
        }
        Ok(g)
    }

    /// Complete graph `K_n`.
    pub fn complete(order: usize) -> Result<Self, GraphError> {
        Graph::empty(order)?.complement_checked()
    }

    /// Builds a graph of order at most 64 from neighbour masks.
    pub fn from_masks(order: usize, masks: &[u64]) -> Result<Self, GraphError> {
        if order > BITSET_ORDER {
            return Err(GraphError::OrderTooLarge { order, max: BITSET_ORDER });
        }
        if masks.len() != order {
            return Err(GraphError::InvalidAdjacency(format!(
                "expected {order} rows, found {}",
                masks.len()
            )));
        }
        let full = full_mask(order);
        let mut size = 0usize;
        for (u, &m) in masks.iter().enumerate() {
            if m & !full != 0 {
                return Err(GraphError::InvalidAdjacency(format!("row {u} has bits beyond the order")));
            }
            if m >> u & 1 == 1 {
                return Err(GraphError::Loop(u));
            }
            let mut rest = m;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if masks[v] >> u & 1 == 0 {
                    return Err(GraphError::InvalidAdjacency(format!("asymmetric pair ({u}, {v})")));
                }
            }
            size += m.count_ones() as usize;
        }
        Ok(Graph { order, words: 1, bits: masks.to_vec(), size: size / 2 })
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.order {
                return Err(GraphError::EndpointOutOfRange { vertex: w, order: self.order });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(())
    }

    fn set(&mut self, u: usize, v: usize) {
        if !self.has_edge(u, v) {
            self.bits[u * self.words + v / 64] |= 1 << (v % 64);
            self.bits[v * self.words + u / 64] |= 1 << (u % 64);
            self.size += 1;
        }
    }

    fn clear(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.bits[u * self.words + v / 64] &= !(1 << (v % 64));
            self.bits[v * self.words + u / 64] &= !(1 << (u % 64));
            self.size -= 1;
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges, `e(G)`.
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Packed neighbour row of `u`.
    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    /// One-word neighbour masks, available when the order is at most 64.
    pub fn masks(&self) -> Result<&[u64], GraphError> {
        if self.order > BITSET_ORDER {
            Err(GraphError::OrderTooLarge { order: self.order, max: BITSET_ORDER })
        } else {
            Ok(&self.bits)
        }
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * 64 + b))
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size);
        for u in 0..self.order {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.size == self.order * self.order.saturating_sub(1) / 2
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.set(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.clear(u, v);
        Ok(g)
    }

    /// Adds `extra` isolated vertices.
    pub fn pad(&self, extra: usize) -> Result<Graph, GraphError> {
        Graph::new(self.order + extra, self.edges())
    }

    pub fn complement(&self) -> Graph {
        self.complement_checked().expect("order already validated")
    }

    fn complement_checked(&self) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(self.order)?;
        for u in 0..self.order {
            for wi in 0..self.words {
                let lo = wi * 64;
                let valid = if lo + 64 <= self.order {
                    u64::MAX
                } else if lo < self.order {
                    (1u64 << (self.order - lo)) - 1
                } else {
                    0
                };
                let mut w = !self.bits[u * self.words + wi] & valid;
                if u / 64 == wi {
                    w &= !(1 << (u % 64));
                }
                g.bits[u * g.words + wi] = w;
            }
        }
        g.size = self.order * self.order.saturating_sub(1) / 2 - self.size;
        Ok(g)
    }

    /// Breadth-first distances from `source`; unreachable vertices get `None`.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// The `k`-th power: `u ~ v` iff `1 <= dist(u, v) <= k`.
    pub fn power(&self, k: usize) -> Result<Graph, GraphError> {
        if k == 0 {
            return Err(GraphError::ZeroPower);
        }
        let mut g = Graph::empty(self.order)?;
        for u in 0..self.order {
            for (v, d) in self.distances_from(u).into_iter().enumerate() {
                if v > u && matches!(d, Some(d) if d <= k) {
                    g.set(u, v);
                }
            }
        }
        Ok(g)
    }

    /// `self ∪ other` with the vertices of `other` shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let shift = self.order;
        let edges = self.edges().into_iter().chain(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Graph::new(self.order + other.order, edges)
    }

    /// `self ∨ other`: the disjoint union plus every cross pair.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.order {
            for v in 0..other.order {
                g.set(u, self.order + v);
            }
        }
        Ok(g)
    }

    /// Relabels by `perm`, sending vertex `u` to `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.order {
            return Err(GraphError::InvalidAnchor(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.order
            )));
        }
        let mut seen = vec![false; self.order];
        for &p in perm {
            if p >= self.order || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::InvalidAnchor("not a permutation".into()));
            }
        }
        Graph::new(self.order, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn non_isolated_count(&self) -> usize {
        (0..self.order).filter(|&u| self.degree(u) > 0).count()
    }

    /// The same graph with isolated vertices removed, remaining labels kept in order.
    pub fn without_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.order).filter(|&u| self.degree(u) > 0).collect();
        if keep.len() == self.order {
            return self.clone();
        }
        let mut index = vec![usize::MAX; self.order];
        for (i, &u) in keep.iter().enumerate() {
            index[u] = i;
        }
        Graph::new(keep.len(), self.edges().into_iter().map(|(u, v)| (index[u], index[v])))
            .expect("subgraph of a valid graph")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for s in 0..self.order {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            if u >= self.order {
                return Err(GraphError::EndpointOutOfRange { vertex: u, order: self.order });
            }
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), edges)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.order).map(|u| self.degree(u)).collect();
        DegreeStats {
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            sum_of_squares: degrees.iter().map(|&d| (d * d) as u64).sum(),
            degrees,
        }
    }

    /// `K_n` minus the edges of the placed pattern.
    pub fn delete_pattern_edges(spec: &PlacementSpec) -> Result<Graph, GraphError> {
        let anchor = spec.resolved_anchor()?;
        let mut g = Graph::complete(spec.host_order)?;
        for (u, v) in spec.pattern.edges() {
            g.clear(anchor[u], anchor[v]);
        }
        Ok(g)
    }
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::graph6::encode(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        crate::graph6::decode_str(&s).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

/// Degree sequence summary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub sum_of_squares: u64,
}

/// Where a pattern sits inside `K_n` when its edges are deleted.
#[derive(Clone, Debug)]
pub struct PlacementSpec {
    pub host_order: usize,
    pub pattern: Graph,
    /// `anchor[i]` is the host vertex carrying pattern vertex `i`; identity when absent.
    pub anchor: Option<Vec<usize>>,
}

impl PlacementSpec {
    pub fn new(host_order: usize, pattern: Graph) -> Self {
        PlacementSpec { host_order, pattern, anchor: None }
    }

    pub fn with_anchor(mut self, anchor: Vec<usize>) -> Self {
        self.anchor = Some(anchor);
        self
    }

    fn resolved_anchor(&self) -> Result<Vec<usize>, GraphError> {
        let p = self.pattern.order();
        let anchor = match &self.anchor {
            Some(a) => a.clone(),
            None => (0..p).collect(),
        };
        if p > self.host_order {
            return Err(GraphError::InvalidAnchor(format!(
                "pattern order {p} exceeds host order {}",
                self.host_order
            )));
        }
        if anchor.len() != p {
            return Err(GraphError::InvalidAnchor(format!("anchor has {} entries, pattern has {p}", anchor.len())));
        }
        let mut seen = vec![false; self.host_order];
        for &a in &anchor {
            if a >= self.host_order {
                return Err(GraphError::InvalidAnchor(format!("anchor vertex {a} out of range")));
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(GraphError::InvalidAnchor(format!("anchor vertex {a} used twice")));
            }
        }
        Ok(anchor)
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

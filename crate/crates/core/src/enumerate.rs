//! Isomorph-free generation of graphs with a bounded number of non-isolated
//! vertices, by canonical edge augmentation.
//!
//! A graph on `v` non-isolated vertices with `t` edges is extended in three
//! ways: an edge between two of its vertices, a pendant edge to a new vertex,
//! or an edge between two new vertices. A child is kept only when the added
//! edge lies in the automorphism orbit of the child's canonical edge, so each
//! isomorphism class is produced exactly once.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::family::{GraphFamily, Provenance};
use crate::graph::{BitIter, Graph};
use crate::iso::{orbits_of, Canonizer, HostIndex, Perm};

/// Largest order bound accepted by the generator.
pub const MAX_ENUM_ORDER: usize = 64;

/// A graph under construction: vertices `0..order`, none isolated except in the empty graph.
#[derive(Clone)]
pub struct Node {
    order: usize,
    edges: usize,
    adj: [u64; 64],
}

impl Node {
    pub fn empty() -> Self {
        Node { order: 0, edges: 0, adj: [0; 64] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> usize {
        self.edges
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.order]
    }

    pub fn graph(&self) -> Graph {
        Graph::from_masks(self.order, self.rows()).expect("node rows are symmetric")
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
        self.edges += 1;
    }
}

impl std::fmt::Debug for Node {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Node({:?})", self.graph())
    }
}

/// How a child was obtained from its parent. New vertices are labelled
/// `parent.order()` and `parent.order() + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Augmentation {
    Edge(u8, u8),
    Pendant(u8),
    NewEdge,
}

impl Augmentation {
    /// The added edge in child labels, given the parent's order.
    pub fn added_edge(self, parent_order: usize) -> (usize, usize) {
        match self {
            Augmentation::Edge(x, y) => (x as usize, y as usize),
            Augmentation::Pendant(x) => (x as usize, parent_order),
            Augmentation::NewEdge => (parent_order, parent_order + 1),
        }
    }
}

/// Decision taken before the canonicity test of a candidate child.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Consider {
    /// Discard the candidate. Only valid for isomorphism-invariant reasons.
    Reject,
    Test,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Control {
    Descend,
    Skip,
}

/// Receives the generated graphs in depth-first order.
pub trait Visitor {
    fn consider(&mut self, _child: &Node, _aug: Augmentation) -> Consider {
        Consider::Test
    }

    /// Called once per isomorphism class. `aug` is `None` for the root of a run.
    fn visit(&mut self, node: &Node, aug: Option<Augmentation>) -> Control;

    /// Called before a parallel subtree rooted at `root` starts.
    fn enter(&mut self, _root: &Node) {}
}

/// Limits on a run.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub max_members: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("budget exceeded ({reason}) after {visited} graphs; resume token {resume:?}")]
    BudgetExceeded { visited: u64, reason: String, resume: Option<String> },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Clone)]
struct Meter {
    count: Arc<AtomicU64>,
    stop: Arc<AtomicBool>,
    max_members: Option<u64>,
    deadline: Option<Instant>,
}

impl Meter {
    fn new(b: &Budget) -> Self {
        Meter {
            count: Arc::new(AtomicU64::new(0)),
            stop: Arc::new(AtomicBool::new(false)),
            max_members: b.max_members,
            deadline: b.max_time.map(|d| Instant::now() + d),
        }
    }

    fn tick(&self) -> Result<(), EnumError> {
        let c = self.count.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        if self.stop.load(AtomicOrdering::Relaxed) {
            return Err(self.exceeded("stopped"));
        }
        if matches!(self.max_members, Some(m) if c > m) {
            self.stop.store(true, AtomicOrdering::Relaxed);
            return Err(self.exceeded("member cap"));
        }
        if c % 512 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    self.stop.store(true, AtomicOrdering::Relaxed);
                    return Err(self.exceeded("wall-clock cap"));
                }
            }
        }
        Ok(())
    }

    fn exceeded(&self, reason: &str) -> EnumError {
        EnumError::BudgetExceeded {
            visited: self.count.load(AtomicOrdering::Relaxed),
            reason: reason.into(),
            resume: None,
        }
    }

    fn visited(&self) -> u64 {
        self.count.load(AtomicOrdering::Relaxed)
    }
}

/// Depth-first canonical augmentation engine.
pub struct Enumerator {
    n: usize,
    t_max: usize,
    canon: Canonizer,
    meter: Meter,
    tied: Vec<(u8, u8)>,
    twins: Vec<(u8, u8)>,
    uf: Vec<u16>,
    /// Depth at which children are collected instead of visited.
    frontier_depth: Option<usize>,
    frontier: Vec<(Node, Augmentation)>,
}

fn check_params(n: usize, t_max: usize) -> Result<(), EnumError> {
    if n > MAX_ENUM_ORDER {
        return Err(EnumError::InvalidParameters(format!("order bound {n} exceeds {MAX_ENUM_ORDER}")));
    }
    if t_max > n * n.saturating_sub(1) / 2 {
        return Err(EnumError::InvalidParameters(format!("{t_max} edges do not fit on {n} vertices")));
    }
    Ok(())
}

impl Enumerator {
    pub fn new(n: usize, t_max: usize, budget: &Budget) -> Result<Self, EnumError> {
        check_params(n, t_max)?;
        Ok(Self::with_meter(n, t_max, Meter::new(budget)))
    }

    fn with_meter(n: usize, t_max: usize, meter: Meter) -> Self {
        Enumerator {
            n,
            t_max,
            canon: Canonizer::new(),
            meter,
            tied: Vec::new(),
            twins: Vec::new(),
            uf: Vec::new(),
            frontier_depth: None,
            frontier: Vec::new(),
        }
    }

    /// Number of graphs visited so far.
    pub fn visited(&self) -> u64 {
        self.meter.visited()
    }

    /// Visits every graph with at most `t_max` edges and at most `n`
    /// non-isolated vertices, starting from the empty graph.
    pub fn run<V: Visitor>(&mut self, visitor: &mut V) -> Result<(), EnumError> {
        let root = Node::empty();
        self.meter.tick()?;
        if visitor.visit(&root, None) == Control::Descend {
            self.expand(&root, &[], visitor)?;
        }
        Ok(())
    }

    /// Runs below `root` (which must be a canonical representative produced
    /// by this generator), visiting `root` itself first.
    pub fn run_from<V: Visitor>(&mut self, root: &Node, visitor: &mut V) -> Result<(), EnumError> {
        self.meter.tick()?;
        visitor.enter(root);
        if visitor.visit(root, None) == Control::Descend {
            let gens = self.automorphisms(root);
            self.expand(root, &gens, visitor)?;
        }
        Ok(())
    }

    fn automorphisms(&mut self, node: &Node) -> Vec<Perm> {
        if node.order == 0 {
            return Vec::new();
        }
        self.canon.run(node.rows());
        self.canon.gens.clone()
    }

    fn expand<V: Visitor>(&mut self, node: &Node, gens: &[Perm], visitor: &mut V) -> Result<(), EnumError> {
        if node.edges >= self.t_max {
            return Ok(());
        }
        let v = node.order;
        let orb = orbits_of(v, gens, gens.iter().map(|_| true));

        // Orbits of non-adjacent pairs.
        let npairs = v * v.saturating_sub(1) / 2;
        let idx = |a: usize, b: usize| -> usize {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            b * (b - 1) / 2 + a
        };
        let mut uf = std::mem::take(&mut self.uf);
        uf.clear();
        uf.extend(0..npairs as u16);
        fn find(uf: &mut [u16], mut x: usize) -> usize {
            while uf[x] as usize != x {
                uf[x] = uf[uf[x] as usize];
                x = uf[x] as usize;
            }
            x
        }
        if !gens.is_empty() {
            for b in 1..v {
                for a in 0..b {
                    if node.adj[a] >> b & 1 == 1 {
                        continue;
                    }
                    let i = idx(a, b);
                    for g in gens {
                        let j = idx(g[a] as usize, g[b] as usize);
                        let (ri, rj) = (find(&mut uf, i), find(&mut uf, j));
                        if ri != rj {
                            let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
                            uf[hi] = lo as u16;
                        }
                    }
                }
            }
        }
        let mut reps: Vec<(u8, u8)> = Vec::new();
        for b in 1..v {
            for a in 0..b {
                if node.adj[a] >> b & 1 == 0 {
                    let i = idx(a, b);
                    if find(&mut uf, i) == i {
                        reps.push((a as u8, b as u8));
                    }
                }
            }
        }
        self.uf = uf;

        for (a, b) in reps {
            let mut child = node.clone();
            child.add_edge(a as usize, b as usize);
            self.try_child(child, Augmentation::Edge(a, b), visitor)?;
        }
        if v < self.n {
            for x in 0..v {
                if orb[x] as usize == x {
                    let mut child = node.clone();
                    child.order = v + 1;
                    child.add_edge(x, v);
                    self.try_child(child, Augmentation::Pendant(x as u8), visitor)?;
                }
            }
        }
        if v + 2 <= self.n {
            let mut child = node.clone();
            child.order = v + 2;
            child.add_edge(v, v + 1);
            self.try_child(child, Augmentation::NewEdge, visitor)?;
        }
        Ok(())
    }

    fn try_child<V: Visitor>(&mut self, child: Node, aug: Augmentation, visitor: &mut V) -> Result<(), EnumError> {
        if visitor.consider(&child, aug) == Consider::Reject {
            return Ok(());
        }
        let parent_order = match aug {
            Augmentation::Edge(..) => child.order,
            Augmentation::Pendant(_) => child.order - 1,
            Augmentation::NewEdge => child.order - 2,
        };
        let (a, b) = aug.added_edge(parent_order);
        let gens = match self.canonical_test(&child, a, b) {
            None => return Ok(()),
            Some(g) => g,
        };
        if self.frontier_depth == Some(child.edges) {
            self.frontier.push((child, aug));
            return Ok(());
        }
        self.meter.tick()?;
        if visitor.visit(&child, Some(aug)) == Control::Descend && child.edges < self.t_max {
            let gens = match gens {
                Some(g) => g,
                None => self.automorphisms(&child),
            };
            self.expand(&child, &gens, visitor)?;
        }
        Ok(())
    }

    /// Decides whether edge `(a, b)` is in the orbit of the canonical edge of
    /// `child`. Returns `None` to reject; on acceptance returns the
    /// automorphism generators when they were computed along the way.
    fn canonical_test(&mut self, child: &Node, a: usize, b: usize) -> Option<Option<Vec<Perm>>> {
        let v = child.order;
        let rows = &child.adj[..v];
        let mut deg = [0u32; 64];
        for u in 0..v {
            deg[u] = rows[u].count_ones();
        }
        let mut x = [0u64; 64];
        for u in 0..v {
            let s: u32 = BitIter(rows[u]).map(|w| deg[w]).sum();
            x[u] = (deg[u] as u64) << 12 | s as u64;
        }
        let key = |p: usize, q: usize| -> u64 {
            let (hi, lo) = if x[p] >= x[q] { (x[p], x[q]) } else { (x[q], x[p]) };
            hi << 40 | lo << 16 | (rows[p] & rows[q]).count_ones() as u64
        };
        let ke = key(a, b);
        self.tied.clear();
        for p in 0..v {
            let higher = if p >= 63 { 0 } else { rows[p] & (u64::MAX << (p + 1)) };
            for q in BitIter(higher) {
                let k = key(p, q);
                if k > ke {
                    return None;
                }
                if k == ke {
                    self.tied.push((p as u8, q as u8));
                }
            }
        }
        if self.tied.len() == 1 {
            return Some(None);
        }

        // Transpositions of twins are automorphisms; if they already connect
        // every tied edge, all of them share one orbit.
        self.twins.clear();
        for p in 0..v {
            for q in p + 1..v {
                if rows[p] & !(1 << q) == rows[q] & !(1 << p) {
                    self.twins.push((p as u8, q as u8));
                }
            }
        }
        if !self.twins.is_empty() {
            let m = self.tied.len();
            let mut parent: Vec<usize> = (0..m).collect();
            fn root(p: &mut [usize], mut i: usize) -> usize {
                while p[i] != i {
                    p[i] = p[p[i]];
                    i = p[i];
                }
                i
            }
            let mut comps = m;
            for &(s, t) in &self.twins {
                let swap = |w: u8| if w == s { t } else if w == t { s } else { w };
                for i in 0..m {
                    let (p, q) = self.tied[i];
                    let (p2, q2) = (swap(p), swap(q));
                    let img = if p2 < q2 { (p2, q2) } else { (q2, p2) };
                    if img == (p, q) {
                        continue;
                    }
                    if let Some(j) = self.tied.iter().position(|&e| e == img) {
                        let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                        if ri != rj {
                            parent[ri] = rj;
                            comps -= 1;
                        }
                    }
                }
            }
            if comps == 1 {
                return Some(None);
            }
        }

        // Full canonical labelling decides.
        self.canon.run(rows);
        let lab = self.canon.lab();
        let mut pos = [0u8; 64];
        for (i, &w) in lab.iter().enumerate() {
            pos[w as usize] = i as u8;
        }
        let star = *self
            .tied
            .iter()
            .max_by_key(|&&(p, q)| {
                let (pp, pq) = (pos[p as usize], pos[q as usize]);
                if pp > pq {
                    (pp, pq)
                } else {
                    (pq, pp)
                }
            })
            .expect("tied set is non-empty");
        let target = if a < b { (a as u8, b as u8) } else { (b as u8, a as u8) };
        let gens = &self.canon.gens;
        let accepted = target == star || edge_orbit_contains(gens, star, target);
        if accepted {
            Some(Some(gens.clone()))
        } else {
            None
        }
    }
}

fn edge_orbit_contains(gens: &[Perm], start: (u8, u8), target: (u8, u8)) -> bool {
    let mut seen: Vec<(u8, u8)> = vec![start];
    let mut i = 0;
    while i < seen.len() {
        let (p, q) = seen[i];
        i += 1;
        for g in gens {
            let (a, b) = (g[p as usize], g[q as usize]);
            let e = if a < b { (a, b) } else { (b, a) };
            if e == target {
                return true;
            }
            if !seen.contains(&e) {
                seen.push(e);
            }
        }
    }
    false
}

/// Runs the generator sequentially.
pub fn run<V: Visitor>(n: usize, t_max: usize, budget: &Budget, visitor: &mut V) -> Result<u64, EnumError> {
    let mut e = Enumerator::new(n, t_max, budget)?;
    e.run(visitor)?;
    Ok(e.visited())
}

/// Options for [`run_parallel`].
#[derive(Clone, Debug)]
pub struct ParallelOptions {
    /// Edge count at which subtrees are handed to workers.
    pub split_depth: usize,
    pub workers: usize,
    /// Number of leading subtrees to skip (from a previous partial run).
    pub resume_from: usize,
}

/// Result of a parallel run: the visitors of completed subtrees in a fixed
/// order, suitable for a deterministic merge.
pub struct ParallelOutcome<V> {
    pub head: V,
    pub workers: Vec<V>,
    pub visited: u64,
    pub subtrees: usize,
}

/// Runs the generator with the subtrees rooted at `split_depth` edges
/// processed in parallel. `factory` makes the visitor for the shallow levels
/// and one visitor per subtree; subtree visitors come back in generation
/// order, so merging them in sequence is deterministic.
pub fn run_parallel<V, F>(
    n: usize,
    t_max: usize,
    budget: &Budget,
    options: &ParallelOptions,
    factory: F,
) -> Result<ParallelOutcome<V>, EnumError>
where
    V: Visitor + Send,
    F: Fn() -> V + Sync,
{
    check_params(n, t_max)?;
    let meter = Meter::new(budget);
    let mut head = factory();
    let mut e = Enumerator::with_meter(n, t_max, meter.clone());
    if options.split_depth == 0 || options.split_depth > t_max {
        e.run(&mut head)?;
        return Ok(ParallelOutcome { head, workers: Vec::new(), visited: meter.visited(), subtrees: 0 });
    }
    e.frontier_depth = Some(options.split_depth);
    e.run(&mut head)?;
    let frontier = std::mem::take(&mut e.frontier);
    let subtrees = frontier.len();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers.max(1))
        .build()
        .map_err(|err| EnumError::InvalidParameters(err.to_string()))?;
    let results: Vec<Result<V, EnumError>> = pool.install(|| {
        frontier
            .into_par_iter()
            .skip(options.resume_from)
            .map(|(node, _)| {
                let mut v = factory();
                let mut en = Enumerator::with_meter(n, t_max, meter.clone());
                en.run_from(&node, &mut v).map(|_| v)
            })
            .collect()
    });
    let mut workers = Vec::with_capacity(results.len());
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Ok(v) => workers.push(v),
            Err(EnumError::BudgetExceeded { reason, .. }) => {
                return Err(EnumError::BudgetExceeded {
                    visited: meter.visited(),
                    reason,
                    resume: Some(format!("split={};subtree={}", options.split_depth, options.resume_from + i)),
                })
            }
            Err(other) => return Err(other),
        }
    }
    Ok(ParallelOutcome { head, workers, visited: meter.visited(), subtrees })
}

/// Collects the graphs with exactly `t` edges.
struct Collect {
    t: usize,
    out: Vec<Graph>,
}

impl Visitor for Collect {
    fn visit(&mut self, node: &Node, _aug: Option<Augmentation>) -> Control {
        if node.edges == self.t {
            self.out.push(node.graph());
            Control::Skip
        } else {
            Control::Descend
        }
    }
}

/// `K(n, t)`: one representative per isomorphism class of graphs with `t`
/// edges and at most `n` non-isolated vertices, ordered by canonical code.
pub fn enumerate_family(n: usize, t: usize, budget: &Budget) -> Result<GraphFamily, EnumError> {
    let mut c = Collect { t, out: Vec::new() };
    run(n, t, budget, &mut c)?;
    let mut fam = GraphFamily::new(format!("K({n},{t})")).with_bounds(Some(n), Some(t));
    for g in c.out {
        let fresh = fam.insert(None, g, Provenance::Enumerated).expect("order at most 64");
        debug_assert!(fresh, "generator produced a duplicate class");
    }
    Ok(fam)
}

/// Calls `f` on every member of `K(n, t)` in generation order.
pub fn for_each_member(n: usize, t: usize, budget: &Budget, mut f: impl FnMut(&Node)) -> Result<u64, EnumError> {
    struct Each<'a, G: FnMut(&Node)> {
        t: usize,
        f: &'a mut G,
        count: u64,
    }
    impl<G: FnMut(&Node)> Visitor for Each<'_, G> {
        fn visit(&mut self, node: &Node, _aug: Option<Augmentation>) -> Control {
            if node.edges == self.t {
                (self.f)(node);
                self.count += 1;
                Control::Skip
            } else {
                Control::Descend
            }
        }
    }
    let mut v = Each { t, f: &mut f, count: 0 };
    run(n, t, budget, &mut v)?;
    Ok(v.count)
}

/// Number of members of `K(n, t)` for each `t` in `0..=t_max`.
pub fn count_by_size(n: usize, t_max: usize, budget: &Budget) -> Result<Vec<u64>, EnumError> {
    struct Count(Vec<u64>);
    impl Visitor for Count {
        fn visit(&mut self, node: &Node, _aug: Option<Augmentation>) -> Control {
            self.0[node.edges] += 1;
            Control::Descend
        }
    }
    let mut c = Count(vec![0; t_max + 1]);
    run(n, t_max, budget, &mut c)?;
    Ok(c.0)
}

// ---------------------------------------------------------------------------
// Embedding witnesses carried down the search tree

/// Tracks, for each depth of the current search path, whether the node
/// embeds in a fixed host and with which map. A child's map is usually the
/// parent's map extended by one step; a full search runs only when that fails.
pub struct WitnessTrail<'h> {
    host: &'h HostIndex,
    maps: Vec<Option<([u8; 64], u64)>>,
    pending: Option<(usize, Option<([u8; 64], u64)>)>,
    full_searches: u64,
}

impl<'h> WitnessTrail<'h> {
    pub fn new(host: &'h HostIndex) -> Self {
        WitnessTrail { host, maps: Vec::new(), pending: None, full_searches: 0 }
    }

    pub fn full_searches(&self) -> u64 {
        self.full_searches
    }

    fn full(&mut self, node: &Node) -> Option<([u8; 64], u64)> {
        self.full_searches += 1;
        let mut out = [0u8; 64];
        if self.host.embed_masks(node.rows(), &mut out) {
            let used = out[..node.order].iter().filter(|&&h| h != u8::MAX).fold(0u64, |m, &h| m | 1 << h);
            Some((out, used))
        } else {
            None
        }
    }

    fn extend(&self, node: &Node, aug: Augmentation) -> Result<Option<([u8; 64], u64)>, ()> {
        let depth = node.edges;
        let parent = match self.maps.get(depth.wrapping_sub(1)) {
            Some(p) => p,
            None => return Err(()),
        };
        let Some((map, used)) = parent else {
            // A supergraph of a non-embeddable graph does not embed.
            return Ok(None);
        };
        let (mut map, mut used) = (*map, *used);
        let rows = self.host.rows();
        let free = crate::graph::full_mask(self.host.order()) & !used;
        match aug {
            Augmentation::Edge(x, y) => {
                if rows[map[x as usize] as usize] >> map[y as usize] & 1 == 1 {
                    return Ok(Some((map, used)));
                }
            }
            Augmentation::Pendant(x) => {
                let c = rows[map[x as usize] as usize] & free;
                if c != 0 {
                    let h = c.trailing_zeros() as u8;
                    map[node.order - 1] = h;
                    used |= 1 << h;
                    return Ok(Some((map, used)));
                }
            }
            Augmentation::NewEdge => {
                for h in BitIter(free) {
                    let c = rows[h] & free;
                    if c != 0 {
                        let g = c.trailing_zeros() as u8;
                        map[node.order - 2] = h as u8;
                        map[node.order - 1] = g;
                        used |= 1 << h | 1 << g;
                        return Ok(Some((map, used)));
                    }
                }
            }
        }
        Err(())
    }

    /// Whether `node`, reached from the node on top of the trail by `aug`
    /// (or as a fresh root when `aug` is `None`), embeds in the host. The
    /// answer is remembered for [`WitnessTrail::commit`].
    pub fn probe(&mut self, node: &Node, aug: Option<Augmentation>) -> bool {
        let r = match aug.map(|a| self.extend(node, a)) {
            Some(Ok(r)) => r,
            _ => self.full(node),
        };
        let ok = r.is_some();
        self.pending = Some((node.edges, r));
        ok
    }

    /// Records the result for `node` on the trail at its depth and returns it.
    /// Reuses the last probe when it was for this depth.
    pub fn commit(&mut self, node: &Node, aug: Option<Augmentation>) -> bool {
        let r = match self.pending.take() {
            Some((d, r)) if d == node.edges => r,
            _ => {
                self.probe(node, aug);
                self.pending.take().unwrap().1
            }
        };
        let d = node.edges;
        if self.maps.len() <= d {
            self.maps.resize(d + 1, None);
        }
        let ok = r.is_some();
        self.maps[d] = r;
        self.maps.truncate(d + 1);
        ok
    }

    /// The map committed at depth `d`, if that node embeds.
    pub fn map_at(&self, d: usize) -> Option<&[u8; 64]> {
        self.maps.get(d).and_then(|m| m.as_ref()).map(|(m, _)| m)
    }
}

// ---------------------------------------------------------------------------
// Minimal non-embeddable graphs

/// Whether every graph obtained from `node` by deleting one edge embeds in `host`.
pub fn all_edge_deletions_embed(node: &Node, host: &HostIndex) -> bool {
    let mut rows = node.adj;
    let mut out = [0u8; 64];
    for u in 0..node.order {
        for w in BitIter(node.adj[u] & !((2u64 << u) - 1)) {
            rows[u] &= !(1 << w);
            rows[w] &= !(1 << u);
            let ok = host.embed_masks(&rows[..node.order], &mut out);
            rows[u] |= 1 << w;
            rows[w] |= 1 << u;
            if !ok {
                return false;
            }
        }
    }
    true
}

struct Cores<'h> {
    trail: WitnessTrail<'h>,
    host: &'h HostIndex,
    out: Vec<Graph>,
}

impl Visitor for Cores<'_> {
    fn visit(&mut self, node: &Node, aug: Option<Augmentation>) -> Control {
        if self.trail.commit(node, aug) {
            return Control::Descend;
        }
        // The parent embeds, or it would not have been expanded.
        if all_edge_deletions_embed(node, self.host) {
            self.out.push(node.graph());
        }
        Control::Skip
    }
}

/// Graphs with at most `t_max` edges and at most `host.order()` non-isolated
/// vertices that do not embed in `host` while all their proper subgraphs do.
pub fn minimal_non_embeddable(host: &Graph, t_max: usize, budget: &Budget) -> Result<GraphFamily, EnumError> {
    let index = HostIndex::new(host).map_err(|e| EnumError::InvalidParameters(e.to_string()))?;
    let n = host.order();
    let mut v = Cores { trail: WitnessTrail::new(&index), host: &index, out: Vec::new() };
    run(n, t_max, budget, &mut v)?;
    let mut fam = GraphFamily::new(format!("cores({n},{t_max})")).with_bounds(Some(n), None);
    for g in v.out {
        fam.insert(None, g, Provenance::Enumerated).expect("order at most 64");
    }
    Ok(fam)
}

/// Minimal graphs with at most `t_max` edges that do not embed in the
/// complement of the square of the `n`-cycle.
pub fn minimal_forbidden_cores(n: usize, t_max: usize, budget: &Budget) -> Result<GraphFamily, EnumError> {
    if n < 3 || t_max + 2 > n {
        return Err(EnumError::InvalidParameters(format!("need n >= 3 and t_max <= n - 2, got n = {n}, t_max = {t_max}")));
    }
    let host = crate::catalog::square_cycle_complement(n).map_err(|e| EnumError::InvalidParameters(e.to_string()))?;
    minimal_non_embeddable(&host, t_max, budget)
}

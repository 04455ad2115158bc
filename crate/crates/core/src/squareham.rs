//! Deciding whether a graph contains the square of a Hamilton cycle, and the
//! edge- and spectral-extremal searches over graphs that do not.
//!
//! `G` contains `C_n^2` exactly when the complement of `G` embeds in the
//! complement of `C_n^2`, so most questions here become embedding questions
//! about sparse graphs.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::square_cycle_complement;
use crate::closure::k_closure;
use crate::enumerate::{
    self, run_parallel, Augmentation, Budget, Control, EnumError, Node, ParallelOptions, Visitor, WitnessTrail,
};
use crate::error::GraphError;
use crate::family::{GraphFamily, Provenance};
use crate::graph::{BitIter, Graph, PlacementSpec};
use crate::iso::HostIndex;
use crate::spectral::{spectral_radius, SpectralError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SquareHamError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("order {0} is below 3")]
    TooSmall(usize),
    #[error("no graph with at most {t_limit} edges fails to embed at n = {n}")]
    NotFound { n: usize, t_limit: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ComplementEmbedding,
    DirectSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareHamResult {
    pub contains: bool,
    /// Cyclic vertex order whose square lies in `G`, starting at 0, with the
    /// smaller of the two directions.
    pub witness: Option<Vec<usize>>,
    pub method: Method,
}

/// Checks a cyclic order: positions at cyclic distance 1 or 2 must be adjacent.
pub fn verify_witness(g: &Graph, order: &[usize]) -> bool {
    let n = g.order();
    if order.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n]) && (n == 3 || g.has_edge(order[i], order[(i + 2) % n])))
}

fn normalize(mut order: Vec<usize>) -> Vec<usize> {
    let i = order.iter().position(|&v| v == 0).unwrap_or(0);
    order.rotate_left(i);
    if order.len() > 2 && order[order.len() - 1] < order[1] {
        order[1..].reverse();
    }
    order
}

/// Reusable complement-embedding checker for a fixed order.
#[derive(Clone, Debug)]
pub struct SquareHamChecker {
    n: usize,
    host: HostIndex,
}

impl SquareHamChecker {
    pub fn new(n: usize) -> Result<Self, SquareHamError> {
        if n < 3 {
            return Err(SquareHamError::TooSmall(n));
        }
        let host = HostIndex::new(&square_cycle_complement(n)?)?;
        Ok(SquareHamChecker { n, host })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn host(&self) -> &HostIndex {
        &self.host
    }

    /// Whether a complement pattern (at most `n` non-isolated vertices)
    /// embeds in the complement of `C_n^2`.
    pub fn pattern_embeds(&self, pattern: &Graph) -> Result<bool, GraphError> {
        let mut out = [0u8; 64];
        Ok(self.host.embed_masks(pattern.masks()?, &mut out))
    }

    pub fn check(&self, g: &Graph) -> Result<SquareHamResult, SquareHamError> {
        if g.order() != self.n {
            return Err(GraphError::InvalidParameters(format!("expected order {}, got {}", self.n, g.order())).into());
        }
        let comp = g.complement();
        let mut out = [0u8; 64];
        let contains = self.host.embed_masks(comp.masks()?, &mut out);
        let witness = contains.then(|| {
            let mut at = vec![usize::MAX; self.n];
            let mut free: Vec<usize> = Vec::new();
            for v in 0..self.n {
                if comp.degree(v) > 0 {
                    at[out[v] as usize] = v;
                } else {
                    free.push(v);
                }
            }
            let mut free = free.into_iter();
            for slot in at.iter_mut().filter(|s| **s == usize::MAX) {
                *slot = free.next().expect("one free vertex per free position");
            }
            normalize(at)
        });
        Ok(SquareHamResult { contains, witness, method: Method::ComplementEmbedding })
    }
}

/// Decides whether `g` contains the square of a Hamilton cycle.
pub fn contains_square_hamilton(g: &Graph, method: Method) -> Result<SquareHamResult, SquareHamError> {
    let n = g.order();
    if n < 3 {
        return Err(SquareHamError::TooSmall(n));
    }
    match method {
        Method::ComplementEmbedding => SquareHamChecker::new(n)?.check(g),
        Method::DirectSearch => {
            let witness = direct_search(g.masks()?).map(normalize);
            Ok(SquareHamResult { contains: witness.is_some(), witness, method })
        }
    }
}

/// Builds the cyclic order vertex by vertex from 0; every new vertex must be
/// adjacent to the two before it. Failed states are memoised.
fn direct_search(rows: &[u64]) -> Option<Vec<usize>> {
    let n = rows.len();
    if n == 3 {
        return (rows[0] >> 1 & 1 == 1 && rows[0] >> 2 & 1 == 1 && rows[1] >> 2 & 1 == 1).then(|| vec![0, 1, 2]);
    }
    struct Ctx<'a> {
        rows: &'a [u64],
        n: usize,
        seq: Vec<usize>,
        dead: HashSet<(u64, u8, u8)>,
    }
    fn go(c: &mut Ctx, used: u64) -> bool {
        let k = c.seq.len();
        let (a, b) = (c.seq[k - 2], c.seq[k - 1]);
        if k == c.n {
            let (v0, v1) = (c.seq[0], c.seq[1]);
            return c.rows[b] >> v0 & 1 == 1 && c.rows[b] >> v1 & 1 == 1 && c.rows[a] >> v0 & 1 == 1;
        }
        if c.dead.contains(&(used, a as u8, b as u8)) {
            return false;
        }
        let mut cand = c.rows[a] & c.rows[b] & !used;
        // The last two positions are adjacent to vertex 0.
        if k >= c.n - 2 {
            cand &= c.rows[c.seq[0]];
        }
        if k == c.n - 1 {
            cand &= c.rows[c.seq[1]];
        }
        for w in BitIter(cand) {
            c.seq.push(w);
            if go(c, used | 1 << w) {
                return true;
            }
            c.seq.pop();
        }
        c.dead.insert((used, a as u8, b as u8));
        false
    }
    let mut ctx = Ctx { rows, n, seq: vec![0], dead: HashSet::new() };
    for v1 in BitIter(rows[0]) {
        ctx.seq.truncate(1);
        ctx.seq.push(v1);
        ctx.dead.clear();
        if go(&mut ctx, 1 | 1 << v1) {
            return Some(ctx.seq);
        }
    }
    None
}

/// `K_n` with the edges of `f` removed.
pub fn complement_host(n: usize, f: &Graph) -> Result<Graph, GraphError> {
    Graph::delete_pattern_edges(&PlacementSpec::new(n, f.without_isolated()))
}

// ---------------------------------------------------------------------------
// Sweeps over K(n, t) with embedding witnesses

struct Sweep<'h, F> {
    trail: WitnessTrail<'h>,
    f: F,
}

impl<F: FnMut(&Node, bool) -> Control> Visitor for Sweep<'_, F> {
    fn visit(&mut self, node: &Node, aug: Option<Augmentation>) -> Control {
        let ok = self.trail.commit(node, aug);
        (self.f)(node, ok)
    }
}

/// Visits every graph with at most `t_max` edges and at most `host.order()`
/// non-isolated vertices, telling `f` whether it embeds in the host.
pub fn sweep_embeddings(
    host: &HostIndex,
    t_max: usize,
    budget: &Budget,
    f: impl FnMut(&Node, bool) -> Control,
) -> Result<u64, EnumError> {
    let mut v = Sweep { trail: WitnessTrail::new(host), f };
    enumerate::run(host.order(), t_max, budget, &mut v)
}

/// All graphs in `K(n, t)`, `t <= t_max`, that do not embed in the
/// complement of `C_n^2`, grouped by edge count.
#[derive(Clone, Debug, Default)]
pub struct Census {
    pub n: usize,
    pub t_max: usize,
    pub visited: u64,
    /// Number of members of `K(n, t)` for each `t`.
    pub counts: Vec<u64>,
    pub non_embeddable: Vec<Graph>,
}

impl Census {
    pub fn at(&self, t: usize) -> impl Iterator<Item = &Graph> {
        self.non_embeddable.iter().filter(move |g| g.size() == t)
    }
}

struct CensusVisitor<'h> {
    trail: WitnessTrail<'h>,
    counts: Vec<u64>,
    bad: Vec<Graph>,
    descend_bad: bool,
}

impl Visitor for CensusVisitor<'_> {
    fn visit(&mut self, node: &Node, aug: Option<Augmentation>) -> Control {
        self.counts[node.edges()] += 1;
        if self.trail.commit(node, aug) {
            return Control::Descend;
        }
        self.bad.push(node.graph());
        if self.descend_bad {
            Control::Descend
        } else {
            Control::Skip
        }
    }
}

/// Sweeps `K(n, t)` for `t <= t_max`. With `minimal_only`, supergraphs of
/// non-embeddable graphs are not generated.
pub fn census(
    n: usize,
    t_max: usize,
    budget: &Budget,
    options: &ParallelOptions,
    minimal_only: bool,
) -> Result<Census, SquareHamError> {
    let checker = SquareHamChecker::new(n)?;
    let host = checker.host();
    let make = || CensusVisitor {
        trail: WitnessTrail::new(host),
        counts: vec![0; t_max + 1],
        bad: Vec::new(),
        descend_bad: !minimal_only,
    };
    let out = run_parallel(n, t_max, budget, options, make)?;
    let mut c = Census { n, t_max, visited: out.visited, counts: vec![0; t_max + 1], non_embeddable: Vec::new() };
    for v in std::iter::once(out.head).chain(out.workers) {
        for (i, k) in v.counts.iter().enumerate() {
            c.counts[i] += k;
        }
        c.non_embeddable.extend(v.bad);
    }
    Ok(c)
}

// ---------------------------------------------------------------------------
// Classification

/// Outcome of sorting `K(n, t)` by how each member relates to a list of
/// cores and exceptions.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Classification {
    pub n: usize,
    pub t: usize,
    pub total: u64,
    pub embeds: u64,
    pub contains_core: u64,
    pub exceptions: u64,
    /// Non-embeddable members explained by neither list.
    pub unexplained: Vec<Graph>,
    /// Non-embeddable members, with the name of the first core they contain.
    pub non_embeddable: Vec<(Graph, Option<String>)>,
}

impl Classification {
    pub fn holds(&self) -> bool {
        self.unexplained.is_empty()
    }
}

/// Names of `cores` members contained in `f`.
pub fn contained_cores(f: &Graph, cores: &GraphFamily) -> Result<Vec<String>, GraphError> {
    let host = HostIndex::new(f)?;
    let mut out = [0u8; 64];
    let mut names = Vec::new();
    for m in cores.members() {
        let p = m.graph.without_isolated();
        if p.size() <= f.size() && host.embed_masks(p.masks()?, &mut out) {
            names.push(m.name.clone().unwrap_or_else(|| m.code.to_string()));
        }
    }
    Ok(names)
}

/// Sorts every member of `K(n, t)` into: embeds in the complement of
/// `C_n^2`; contains a member of `cores`; is a member of `exceptions`; or
/// none of these.
pub fn classify_nonembeddable(
    n: usize,
    t: usize,
    cores: &GraphFamily,
    exceptions: &GraphFamily,
    budget: &Budget,
) -> Result<Classification, SquareHamError> {
    let checker = SquareHamChecker::new(n)?;
    let mut cls = Classification { n, t, ..Default::default() };
    let mut err = None;
    sweep_embeddings(checker.host(), t, budget, |node, ok| {
        if node.edges() < t {
            return Control::Descend;
        }
        cls.total += 1;
        if ok {
            cls.embeds += 1;
            return Control::Skip;
        }
        let g = node.graph();
        match classify_one(&g, cores, exceptions) {
            Ok(Verdict::Core(name)) => {
                cls.contains_core += 1;
                cls.non_embeddable.push((g, Some(name)));
            }
            Ok(Verdict::Exception) => {
                cls.exceptions += 1;
                cls.non_embeddable.push((g, None));
            }
            Ok(Verdict::Unexplained) => {
                cls.non_embeddable.push((g.clone(), None));
                cls.unexplained.push(g);
            }
            Err(e) => err = Some(e),
        }
        Control::Skip
    })?;
    match err {
        Some(e) => Err(e.into()),
        None => Ok(cls),
    }
}

enum Verdict {
    Core(String),
    Exception,
    Unexplained,
}

fn classify_one(g: &Graph, cores: &GraphFamily, exceptions: &GraphFamily) -> Result<Verdict, GraphError> {
    if let Some(name) = contained_cores(g, cores)?.into_iter().next() {
        return Ok(Verdict::Core(name));
    }
    if exceptions.contains(g)? {
        return Ok(Verdict::Exception);
    }
    Ok(Verdict::Unexplained)
}

// ---------------------------------------------------------------------------
// Extremal searches

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    Edges,
    Mu,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Optimum {
    Edges(usize),
    Mu(f64),
}

impl fmt::Display for Optimum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Optimum::Edges(e) => write!(f, "{e}"),
            Optimum::Mu(m) => write!(f, "{m:.12}"),
        }
    }
}

/// A complement `F` with the spectral radius of `K_n \ E(F)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub complement: Graph,
    pub mu: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub objective: Objective,
    pub optimum: Optimum,
    /// The graphs `F` with `K_n \ E(F)` extremal.
    pub extremal_complements: GraphFamily,
    pub pruning_bound_used: String,
    /// Whether the pruning argument applies to the optimum found.
    pub certificate_valid: bool,
    pub instances_examined: u64,
    /// Best non-extremal candidates, for the spectral objective.
    pub runners_up: Vec<Candidate>,
}

/// Largest number of edges in a graph of order `n` without `C_n^2`, found
/// by sweeping `t = 1, 2, ...` for the least `t` at which some member of
/// `K(n, t)` does not embed in the complement of `C_n^2`.
pub fn edge_extremal(n: usize, t_limit: usize, budget: &Budget) -> Result<ExtremalReport, SquareHamError> {
    let checker = SquareHamChecker::new(n)?;
    let mut best = t_limit + 1;
    let mut found: Vec<Graph> = Vec::new();
    let visited = sweep_embeddings(checker.host(), t_limit, budget, |node, ok| {
        let d = node.edges();
        if ok {
            return if d >= best { Control::Skip } else { Control::Descend };
        }
        if d < best {
            best = d;
            found.clear();
        }
        if d == best {
            found.push(node.graph());
        }
        Control::Skip
    })?;
    if found.is_empty() {
        return Err(SquareHamError::NotFound { n, t_limit });
    }
    let mut fam = GraphFamily::new(format!("edge-extremal complements, n = {n}")).with_bounds(Some(n), Some(best));
    for f in found {
        let g = complement_host(n, &f)?;
        debug_assert!(!checker.check(&g)?.contains);
        fam.insert(None, f, Provenance::Enumerated)?;
    }
    Ok(ExtremalReport {
        n,
        objective: Objective::Edges,
        optimum: Optimum::Edges(n * (n - 1) / 2 - best),
        extremal_complements: fam,
        pruning_bound_used: format!(
            "every graph with fewer than {best} edges embeds; supergraphs of non-embeddable graphs are not generated"
        ),
        certificate_valid: true,
        instances_examined: visited,
        runners_up: Vec::new(),
    })
}

/// Where [`spectral_extremal`] takes its candidate complements from.
pub enum CandidateSource<'a> {
    /// Full sweep of `K(n, t)`, `t <= n - 2`.
    Sweep { budget: &'a Budget, options: &'a ParallelOptions },
    /// A previously computed census.
    Census(&'a Census),
    /// Every graph with at most `n - 2` edges containing one of the given
    /// cores, grown edge by edge.
    CoreGrowth(&'a GraphFamily),
}

/// Supergraphs with at most `t_max` edges on `n` vertices of the given cores.
pub fn grow_from_cores(n: usize, t_max: usize, cores: &GraphFamily) -> Result<Vec<Graph>, GraphError> {
    let mut all = GraphFamily::new("grown");
    let mut level: Vec<Graph> = Vec::new();
    for m in cores.members() {
        let g = m.graph.without_isolated();
        if g.order() <= n && g.size() <= t_max && all.insert(None, g.clone(), Provenance::Constructed)? {
            level.push(g.pad(n - g.order())?);
        }
    }
    while !level.is_empty() {
        let mut next = Vec::new();
        for g in &level {
            if g.size() >= t_max {
                continue;
            }
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let h = g.with_edge(u, v)?;
                        if all.insert(None, h.clone(), Provenance::Constructed)? {
                            next.push(h);
                        }
                    }
                }
            }
        }
        level = next;
    }
    Ok(all.members().map(|m| m.graph.clone()).collect())
}

/// Maximises the spectral radius over graphs of order `n` without `C_n^2`.
///
/// If the best value exceeds `n - 2`, any graph reaching it is connected
/// (a component on at most `n - 1` vertices has radius at most `n - 2`),
/// and `sqrt(2m - n + 1) > n - 2` gives `m > (n^2 - 3n + 3) / 2`, so its
/// complement has at most `n - 2` edges. Only those complements are searched.
pub fn spectral_extremal(n: usize, tol: f64, source: CandidateSource<'_>) -> Result<ExtremalReport, SquareHamError> {
    let checker = SquareHamChecker::new(n)?;
    let t_max = n - 2;
    let owned;
    let (candidates, examined): (Vec<Graph>, u64) = match source {
        CandidateSource::Sweep { budget, options } => {
            owned = census(n, t_max, budget, options, false)?;
            (owned.non_embeddable.clone(), owned.visited)
        }
        CandidateSource::Census(c) => {
            (c.non_embeddable.iter().filter(|g| g.size() <= t_max).cloned().collect(), c.visited)
        }
        CandidateSource::CoreGrowth(cores) => {
            let grown = grow_from_cores(n, t_max, cores)?;
            let k = grown.len() as u64;
            (grown, k)
        }
    };
    let mut scored: Vec<Candidate> = Vec::with_capacity(candidates.len());
    for f in candidates {
        if checker.pattern_embeds(&f)? {
            continue;
        }
        let g = complement_host(n, &f)?;
        let mu = spectral_radius(&g, tol)?.mu;
        scored.push(Candidate { complement: f.without_isolated(), mu });
    }
    scored.sort_by(|a, b| b.mu.total_cmp(&a.mu));
    let Some(top) = scored.first().map(|c| c.mu) else {
        return Err(SquareHamError::NotFound { n, t_limit: t_max });
    };
    let mut fam = GraphFamily::new(format!("spectral-extremal complements, n = {n}")).with_bounds(Some(n), None);
    let mut runners_up = Vec::new();
    for c in scored {
        if c.mu >= top - 10.0 * tol {
            fam.insert(None, c.complement, Provenance::Enumerated)?;
        } else if runners_up.len() < 8 {
            runners_up.push(c);
        }
    }
    let certificate_valid = top > (n - 2) as f64 + 10.0 * tol;
    Ok(ExtremalReport {
        n,
        objective: Objective::Mu,
        optimum: Optimum::Mu(top),
        extremal_complements: fam,
        pruning_bound_used: format!(
            "mu > n - 2 = {} forces connectivity and sqrt(2m - n + 1) > n - 2, so e(complement) <= n - 2 = {}",
            n - 2,
            t_max
        ),
        certificate_valid,
        instances_examined: examined,
        runners_up,
    })
}

/// For every non-embeddable `F` with at most `n - 2` edges and radius at
/// most `sqrt(n - 5)`, whether the `n`-closure of `K_n \ E(F)` is complete.
/// Returns the graphs `F` for which it is not.
pub fn closure_failures(census: &Census, tol: f64) -> Result<Vec<Graph>, SquareHamError> {
    let n = census.n;
    let limit = ((n as f64) - 5.0).sqrt();
    let mut bad = Vec::new();
    for f in census.non_embeddable.iter().filter(|g| g.size() + 2 <= n) {
        let mu = spectral_radius(f, tol)?.mu;
        if mu > limit + 10.0 * tol {
            continue;
        }
        let g = complement_host(n, f)?;
        if !k_closure(&g, n).graph.is_complete() {
            bad.push(f.clone());
        }
    }
    Ok(bad)
}

/// `ceil((n - 1) / 4) - 1`, the number of old vertices a lifted vertex is joined to.
pub fn lift_width(n: usize) -> usize {
    (n - 1).div_ceil(4).saturating_sub(1)
}

/// Whether `g` contains a star of the given order.
pub fn has_star(g: &Graph, order: usize) -> bool {
    order <= 1 || (0..g.order()).any(|u| g.degree(u) + 1 >= order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs_contain_the_square() {
        for n in 3..12 {
            let k = Graph::complete(n).unwrap();
            for m in [Method::ComplementEmbedding, Method::DirectSearch] {
                let r = contains_square_hamilton(&k, m).unwrap();
                assert!(r.contains);
                let w = r.witness.unwrap();
                assert!(verify_witness(&k, &w));
                assert_eq!(w, (0..n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn small_hosts() {
        let k3 = Graph::complete(3).unwrap();
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        for m in [Method::ComplementEmbedding, Method::DirectSearch] {
            assert!(!contains_square_hamilton(&complement_host(8, &k3).unwrap(), m).unwrap().contains);
            let r = contains_square_hamilton(&complement_host(8, &p3).unwrap(), m).unwrap();
            assert!(r.contains && verify_witness(&complement_host(8, &p3).unwrap(), r.witness.as_ref().unwrap()));
        }
        assert!(contains_square_hamilton(&Graph::complete(2).unwrap(), Method::DirectSearch).is_err());
    }

    #[test]
    fn lift_width_values() {
        let w: Vec<usize> = (7..=12).map(lift_width).collect();
        assert_eq!(w, vec![1, 1, 1, 2, 2, 2]);
    }
}

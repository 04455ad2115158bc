//! Canonical labelling, isomorphism, subgraph embedding and clique number.
//!
//! Everything here works on graphs of order at most 64 with one `u64` word
//! per adjacency row.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{full_mask, BitIter, Graph, BITSET_ORDER};

/// How isolated vertices are treated when computing a canonical code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsolatedPolicy {
    Keep,
    #[default]
    Drop,
}

/// A byte string equal for two graphs exactly when they are isomorphic.
///
/// The code is the graph6 encoding of the canonically relabelled graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode {
    pub code: String,
    pub isolated_policy: IsolatedPolicy,
}

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.code
    }

    /// The canonical representative this code encodes.
    pub fn graph(&self) -> Graph {
        crate::graph6::decode_str(&self.code).expect("canonical codes are valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

fn check_bitset(order: usize) -> Result<(), GraphError> {
    if order > BITSET_ORDER {
        Err(GraphError::OrderTooLarge { order, max: BITSET_ORDER })
    } else {
        Ok(())
    }
}

pub fn canonical_form(g: &Graph, policy: IsolatedPolicy) -> Result<CanonicalCode, GraphError> {
    let h;
    let g = match policy {
        IsolatedPolicy::Keep => g,
        IsolatedPolicy::Drop => {
            h = g.without_isolated();
            &h
        }
    };
    check_bitset(g.order())?;
    let mut c = Canonizer::new();
    c.run(g.masks()?);
    Ok(CanonicalCode { code: c.code(), isolated_policy: policy })
}

pub fn is_isomorphic(g: &Graph, h: &Graph, policy: IsolatedPolicy) -> Result<bool, GraphError> {
    if policy == IsolatedPolicy::Keep && g.order() != h.order() {
        return Ok(false);
    }
    if g.size() != h.size() {
        return Ok(false);
    }
    Ok(canonical_form(g, policy)? == canonical_form(h, policy)?)
}

/// Full result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Labelling {
    /// `lab[i]` is the vertex placed at canonical position `i`.
    pub lab: Vec<usize>,
    /// Generators of the automorphism group, as vertex images.
    pub generators: Vec<Vec<usize>>,
    /// Smallest vertex of each vertex's automorphism orbit.
    pub orbits: Vec<usize>,
    pub code: String,
}

/// Canonical labelling of `g` with isolated vertices kept.
pub fn canonical_labelling(g: &Graph) -> Result<Labelling, GraphError> {
    let mut c = Canonizer::new();
    c.run(g.masks()?);
    let n = g.order();
    Ok(Labelling {
        lab: c.lab().iter().map(|&v| v as usize).collect(),
        generators: c.gens.iter().map(|p| p[..n].iter().map(|&v| v as usize).collect()).collect(),
        orbits: c.orbits()[..n].iter().map(|&v| v as usize).collect(),
        code: c.code(),
    })
}

// ---------------------------------------------------------------------------
// Partition refinement

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Ordered partition of positions `0..n`; bit `p` of `starts` marks a cell start.
#[derive(Clone, Copy)]
struct Part {
    lab: [u8; 64],
    starts: u64,
}

impl Part {
    #[inline]
    fn cell_end(&self, p: usize, n: usize) -> usize {
        let rest = if p >= 63 { 0 } else { self.starts & (u64::MAX << (p + 1)) };
        if rest == 0 {
            n
        } else {
            rest.trailing_zeros() as usize
        }
    }
}

/// Refines `part` to the coarsest equitable partition below it, using the
/// cells whose starts are set in `queue` as initial splitters. Returns a trace
/// hash that depends only on the graph up to relabelling.
fn refine(adj: &[u64], n: usize, part: &mut Part, mut queue: u64) -> u64 {
    let full = full_mask(n);
    let mut h = 0x5851_f42d_4c95_7f2d;
    let mut cnt = [0u8; 64];
    let mut tmp = [0u8; 64];
    while queue != 0 && part.starts != full {
        let s = queue.trailing_zeros() as usize;
        queue &= queue - 1;
        let e = part.cell_end(s, n);
        let mut w = 0u64;
        for &v in &part.lab[s..e] {
            w |= 1 << v;
        }
        h = mix(h, (s as u64) << 8 | e as u64);
        let mut p = 0;
        while p < n {
            let e2 = part.cell_end(p, n);
            if e2 - p > 1 {
                let first = (adj[part.lab[p] as usize] & w).count_ones() as u8;
                let mut same = true;
                for q in p..e2 {
                    let c = (adj[part.lab[q] as usize] & w).count_ones() as u8;
                    cnt[q] = c;
                    same &= c == first;
                }
                if !same {
                    // Stable counting-free insertion sort by count.
                    for q in p..e2 {
                        tmp[q] = part.lab[q];
                    }
                    for q in p + 1..e2 {
                        let (c, v) = (cnt[q], tmp[q]);
                        let mut r = q;
                        while r > p && cnt[r - 1] > c {
                            cnt[r] = cnt[r - 1];
                            tmp[r] = tmp[r - 1];
                            r -= 1;
                        }
                        cnt[r] = c;
                        tmp[r] = v;
                    }
                    part.lab[p..e2].copy_from_slice(&tmp[p..e2]);
                    let was_queued = queue >> p & 1 == 1;
                    let mut largest = p;
                    let mut largest_len = 0;
                    let mut a = p;
                    while a < e2 {
                        let mut b = a + 1;
                        while b < e2 && cnt[b] == cnt[a] {
                            b += 1;
                        }
                        part.starts |= 1 << a;
                        queue |= 1 << a;
                        h = mix(h, (a as u64) << 16 | (cnt[a] as u64) << 8 | (b - a) as u64);
                        if b - a > largest_len {
                            largest_len = b - a;
                            largest = a;
                        }
                        a = b;
                    }
                    if !was_queued {
                        queue &= !(1 << largest);
                    }
                }
            }
            p = e2;
        }
    }
    mix(h, part.starts.count_ones() as u64)
}

// ---------------------------------------------------------------------------
// Canonical search

pub(crate) type Perm = [u8; 64];

#[derive(Clone)]
struct Leaf {
    lab: [u8; 64],
    rows: [u64; 64],
    trace: Vec<u64>,
    path: Vec<u8>,
}

/// Reusable canonical labelling engine for graphs of order at most 64.
///
/// Individualisation and refinement with trace comparison against the first
/// and best leaves, automorphism pruning from generators that fix the
/// current prefix, and backjumping when a leaf proves an automorphism.
pub struct Canonizer {
    n: usize,
    adj: [u64; 64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    pub(crate) gens: Vec<Perm>,
    gen_fix: Vec<u64>,
    trace: Vec<u64>,
    path: Vec<u8>,
}

const NO_JUMP: usize = usize::MAX;

impl Default for Canonizer {
    fn default() -> Self {
        Self::new()
    }
}

impl Canonizer {
    pub fn new() -> Self {
        Canonizer {
            n: 0,
            adj: [0; 64],
            first: None,
            best: None,
            gens: Vec::new(),
            gen_fix: Vec::new(),
            trace: Vec::with_capacity(64),
            path: Vec::with_capacity(64),
        }
    }

    /// Canonically labels the graph given by `adj` (one mask per vertex).
    pub fn run(&mut self, adj: &[u64]) {
        let n = adj.len();
        assert!(n <= 64, "canonical labelling supports at most 64 vertices");
        self.n = n;
        self.adj[..n].copy_from_slice(adj);
        self.first = None;
        self.best = None;
        self.gens.clear();
        self.gen_fix.clear();
        self.trace.clear();
        self.path.clear();
        let mut part = Part { lab: [0; 64], starts: 1 };
        for (i, slot) in part.lab.iter_mut().enumerate().take(n) {
            *slot = i as u8;
        }
        if n == 0 {
            part.starts = 0;
        }
        let t = refine(&self.adj[..n], n, &mut part, if n > 0 { 1 } else { 0 });
        self.trace.push(t);
        self.visit(&part, 0, true, Ordering::Equal);
    }

    /// Canonical order: `lab()[i]` is the vertex at position `i`.
    pub fn lab(&self) -> &[u8] {
        match &self.best {
            Some(b) => &b.lab[..self.n],
            None => &[],
        }
    }

    /// Rows of the canonically relabelled graph.
    pub fn canonical_rows(&self) -> &[u64] {
        match &self.best {
            Some(b) => &b.rows[..self.n],
            None => &[],
        }
    }

    pub fn generators(&self) -> impl Iterator<Item = &[u8]> {
        self.gens.iter().map(move |p| &p[..self.n])
    }

    /// Orbit representative (smallest member) of every vertex under the full group.
    pub fn orbits(&self) -> [u8; 64] {
        orbits_of(self.n, &self.gens, self.gens.iter().map(|_| true))
    }

    /// graph6 encoding of the canonical graph.
    pub fn code(&self) -> String {
        encode_rows(self.n, self.canonical_rows())
    }

    fn visit(&mut self, part: &Part, depth: usize, mut eq_first: bool, mut cmp: Ordering) -> usize {
        let n = self.n;
        let t = self.trace[depth];
        if let (Some(first), Some(best)) = (&self.first, &self.best) {
            eq_first = eq_first && first.trace.get(depth) == Some(&t);
            if cmp == Ordering::Equal {
                cmp = match best.trace.get(depth) {
                    None => Ordering::Greater,
                    Some(b) => t.cmp(b),
                };
            }
            if !eq_first && cmp == Ordering::Less {
                return NO_JUMP;
            }
        }
        if part.starts == full_mask(n) || n == 0 {
            return self.leaf(part, eq_first, cmp);
        }
        // Target cell: first smallest non-singleton cell.
        let (mut ts, mut te) = (0, 0);
        let mut p = 0;
        while p < n {
            let e = part.cell_end(p, n);
            if e - p > 1 && (te == 0 || e - p < te - ts) {
                ts = p;
                te = e;
            }
            p = e;
        }
        let mut cell = 0u64;
        for &v in &part.lab[ts..te] {
            cell |= 1 << v;
        }
        let prefix: u64 = self.path[..depth].iter().fold(0, |m, &v| m | 1 << v);
        let mut tried = 0u64;
        let mut seen_gens = usize::MAX;
        let mut orb = [0u8; 64];
        for v in BitIter(cell) {
            if self.gens.len() != seen_gens {
                seen_gens = self.gens.len();
                orb = orbits_of(n, &self.gens, self.gen_fix.iter().map(|&f| f & prefix == prefix));
            }
            if BitIter(tried).any(|u| orb[u] == orb[v]) {
                continue;
            }
            tried |= 1 << v;
            let mut child = *part;
            let q = child.lab[ts..te].iter().position(|&x| x as usize == v).unwrap() + ts;
            child.lab.swap(ts, q);
            child.starts |= 1 << ts;
            if ts + 1 < n {
                child.starts |= 1 << (ts + 1);
            }
            let tr = refine(&self.adj[..n], n, &mut child, 1 << ts);
            self.trace.truncate(depth + 1);
            self.trace.push(tr);
            self.path.truncate(depth);
            self.path.push(v as u8);
            let j = self.visit(&child, depth + 1, eq_first, cmp);
            if j < depth {
                return j;
            }
        }
        NO_JUMP
    }

    fn leaf(&mut self, part: &Part, eq_first: bool, mut cmp: Ordering) -> usize {
        let n = self.n;
        let mut pos = [0u8; 64];
        for i in 0..n {
            pos[part.lab[i] as usize] = i as u8;
        }
        let mut rows = [0u64; 64];
        for i in 0..n {
            let mut r = 0u64;
            for v in BitIter(self.adj[part.lab[i] as usize]) {
                r |= 1 << pos[v];
            }
            rows[i] = r;
        }
        let depth = self.trace.len();
        let (first, best) = match (&self.first, &self.best) {
            (Some(f), Some(b)) => (f, b),
            _ => {
                let leaf = Leaf { lab: part.lab, rows, trace: self.trace.clone(), path: self.path.clone() };
                self.first = Some(leaf.clone());
                self.best = Some(leaf);
                return NO_JUMP;
            }
        };
        if eq_first && first.trace.len() == depth && first.rows[..n] == rows[..n] {
            let k = common_prefix(&self.path, &first.path);
            let lab = first.lab;
            self.add_automorphism(&part.lab, &lab);
            return k;
        }
        if cmp == Ordering::Equal && depth < best.trace.len() {
            cmp = Ordering::Less;
        }
        if cmp == Ordering::Equal {
            cmp = rows[..n].cmp(&best.rows[..n]);
            if cmp == Ordering::Equal {
                let k = common_prefix(&self.path, &best.path);
                let lab = best.lab;
                self.add_automorphism(&part.lab, &lab);
                return k;
            }
        }
        if cmp == Ordering::Greater {
            self.best = Some(Leaf { lab: part.lab, rows, trace: self.trace.clone(), path: self.path.clone() });
        }
        NO_JUMP
    }

    fn add_automorphism(&mut self, from: &[u8; 64], to: &[u8; 64]) {
        let mut g: Perm = [0; 64];
        let mut fix = 0u64;
        for i in 0..self.n {
            g[from[i] as usize] = to[i];
            if from[i] == to[i] {
                fix |= 1 << from[i];
            }
        }
        if fix != full_mask(self.n) {
            self.gens.push(g);
            self.gen_fix.push(fix);
        }
    }
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn uf_find(parent: &mut [u8; 64], mut x: usize) -> usize {
    while parent[x] as usize != x {
        parent[x] = parent[parent[x] as usize];
        x = parent[x] as usize;
    }
    x
}

/// Orbits of the group generated by the selected permutations; each entry is
/// the smallest vertex of its orbit.
pub(crate) fn orbits_of(n: usize, gens: &[Perm], use_gen: impl Iterator<Item = bool>) -> [u8; 64] {
    let mut parent = [0u8; 64];
    for (i, p) in parent.iter_mut().enumerate() {
        *p = i as u8;
    }
    for (g, keep) in gens.iter().zip(use_gen) {
        if !keep {
            continue;
        }
        for v in 0..n {
            let (a, b) = (uf_find(&mut parent, v), uf_find(&mut parent, g[v] as usize));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo as u8;
            }
        }
    }
    let mut out = [0u8; 64];
    for v in 0..n {
        out[v] = uf_find(&mut parent, v) as u8;
    }
    out
}

/// graph6 encoding straight from bit rows.
pub(crate) fn encode_rows(n: usize, rows: &[u64]) -> String {
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, 63, (n >> 6) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let (mut acc, mut filled) = (0u8, 0);
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | (rows[u] >> v & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("ascii")
}

// ---------------------------------------------------------------------------
// Subgraph embedding

/// Certificate for the relation "pattern is a subgraph of host".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingWitness {
    /// `mapping[v]` is the host vertex carrying pattern vertex `v`. Isolated
    /// pattern vertices that do not fit in the host are left unmapped.
    pub mapping: Option<Vec<Option<usize>>>,
}

impl EmbeddingWitness {
    pub fn is_present(&self) -> bool {
        self.mapping.is_some()
    }

    /// Checks injectivity and edge preservation directly.
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        let Some(map) = &self.mapping else { return false };
        if map.len() != pattern.order() {
            return false;
        }
        let mut used = vec![false; host.order()];
        for (v, m) in map.iter().enumerate() {
            match m {
                Some(h) => {
                    if *h >= host.order() || std::mem::replace(&mut used[*h], true) {
                        return false;
                    }
                }
                None if pattern.degree(v) > 0 => return false,
                None => {}
            }
        }
        pattern.edges().into_iter().all(|(u, v)| host.has_edge(map[u].unwrap(), map[v].unwrap()))
    }
}

/// Precomputed data about a fixed host graph.
#[derive(Clone, Debug)]
pub struct HostIndex {
    n: usize,
    rows: Vec<u64>,
    size: usize,
    degree_ge: Vec<u64>,
    sorted_degrees: Vec<u32>,
    orbit_reps: u64,
}

impl HostIndex {
    pub fn new(host: &Graph) -> Result<Self, GraphError> {
        Ok(Self::from_masks(host.masks()?))
    }

    pub fn from_masks(rows: &[u64]) -> Self {
        let n = rows.len();
        let deg: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
        let mut degree_ge = vec![0u64; n + 2];
        for (d, slot) in degree_ge.iter_mut().enumerate() {
            *slot = deg.iter().enumerate().filter(|(_, &x)| x as usize >= d).fold(0, |m, (v, _)| m | 1 << v);
        }
        let mut sorted_degrees = deg.clone();
        sorted_degrees.sort_unstable_by(|a, b| b.cmp(a));
        let mut c = Canonizer::new();
        c.run(rows);
        let orb = c.orbits();
        let orbit_reps = (0..n).filter(|&v| orb[v] as usize == v).fold(0u64, |m, v| m | 1 << v);
        HostIndex {
            n,
            rows: rows.to_vec(),
            size: deg.iter().map(|&d| d as usize).sum::<usize>() / 2,
            degree_ge,
            sorted_degrees,
            orbit_reps,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Looks for an embedding of the pattern given by `pattern` masks. On
    /// success the image of every non-isolated pattern vertex is written to
    /// `out` (isolated ones get `u8::MAX`).
    pub fn embed_masks(&self, pattern: &[u64], out: &mut [u8; 64]) -> bool {
        Search::new(self).run(pattern, out)
    }

    /// Whether the given partial map (entries `u8::MAX` ignored) is an
    /// edge-preserving injection of the pattern's non-isolated vertices.
    pub fn check_mapping(&self, pattern: &[u64], map: &[u8]) -> bool {
        let mut used = 0u64;
        for (v, &row) in pattern.iter().enumerate() {
            if row == 0 {
                continue;
            }
            let h = map[v];
            if h as usize >= self.n || used >> h & 1 == 1 {
                return false;
            }
            used |= 1 << h;
        }
        for (v, &row) in pattern.iter().enumerate() {
            for u in BitIter(row) {
                if u > v && self.rows[map[v] as usize] >> map[u] & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }
}

struct Search<'h> {
    host: &'h HostIndex,
}

impl<'h> Search<'h> {
    fn new(host: &'h HostIndex) -> Self {
        Search { host }
    }

    fn run(&self, pat: &[u64], out: &mut [u8; 64]) -> bool {
        let host = self.host;
        let pn = pat.len();
        debug_assert!(pn <= 64);
        for o in out.iter_mut() {
            *o = u8::MAX;
        }
        let mut verts = [0u8; 64];
        let mut k = 0;
        let mut pdeg = [0u32; 64];
        let mut edges2 = 0usize;
        for v in 0..pn {
            let d = pat[v].count_ones();
            pdeg[v] = d;
            edges2 += d as usize;
            if d > 0 {
                verts[k] = v as u8;
                k += 1;
            }
        }
        if k == 0 {
            return true;
        }
        if k > host.n || edges2 / 2 > host.size {
            return false;
        }
        // Degree sequence domination.
        let mut ds: Vec<u32> = verts[..k].iter().map(|&v| pdeg[v as usize]).collect();
        ds.sort_unstable_by(|a, b| b.cmp(a));
        if ds.iter().zip(&host.sorted_degrees).any(|(p, h)| p > h) {
            return false;
        }

        // Search order: highest degree first, then most already-ordered neighbours.
        let mut order = [0u8; 64];
        let mut pos_of = [u8::MAX; 64];
        let mut placed = 0u64;
        let remaining: u64 = verts[..k].iter().fold(0, |m, &v| m | 1 << v);
        for i in 0..k {
            let mut bestv = usize::MAX;
            let mut key = (0u32, 0u32);
            for v in BitIter(remaining & !placed) {
                let kk = ((pat[v] & placed).count_ones(), pdeg[v]);
                if bestv == usize::MAX || kk > key {
                    bestv = v;
                    key = kk;
                }
            }
            order[i] = bestv as u8;
            pos_of[bestv] = i as u8;
            placed |= 1 << bestv;
        }

        // Twin classes: images increase along the order inside a class.
        let mut twin_prev = [u8::MAX; 64];
        let mut class_single = [true; 64];
        for i in 0..k {
            let v = order[i] as usize;
            for j in (0..i).rev() {
                let u = order[j] as usize;
                let bu = 1u64 << u;
                let bv = 1u64 << v;
                if pat[u] & !bv == pat[v] & !bu {
                    twin_prev[i] = j as u8;
                    class_single[i] = false;
                    class_single[j] = false;
                    break;
                }
            }
        }

        let mut back = [0u64; 64];
        let mut later = [0u32; 64];
        for i in 0..k {
            let v = order[i] as usize;
            let mut b = 0u64;
            for u in BitIter(pat[v]) {
                let pu = pos_of[u] as usize;
                if pu < i {
                    b |= 1 << pu;
                }
            }
            back[i] = b;
            later[i] = pdeg[v] - b.count_ones();
        }

        let mut img = [0u8; 64];
        let mut cand = [0u64; 64];
        let mut free = full_mask(host.n);
        let first_mask = if class_single[0] { host.orbit_reps } else { u64::MAX };

        let compute = |i: usize, img: &[u8; 64], free: u64| -> u64 {
            let v = order[i] as usize;
            let mut m = free & host.degree_ge[pdeg[v] as usize];
            for j in BitIter(back[i]) {
                m &= host.rows[img[j] as usize];
            }
            if twin_prev[i] != u8::MAX {
                let lo = img[twin_prev[i] as usize] as u32 + 1;
                m &= u64::MAX.checked_shl(lo).unwrap_or(0);
            }
            if i == 0 {
                m &= first_mask;
            }
            m
        };

        let mut i = 0;
        cand[0] = compute(0, &img, free);
        loop {
            if cand[i] == 0 {
                if i == 0 {
                    return false;
                }
                i -= 1;
                free |= 1 << img[i];
                continue;
            }
            let h = cand[i].trailing_zeros() as usize;
            cand[i] &= cand[i] - 1;
            let nfree = free & !(1 << h);
            if later[i] > (host.rows[h] & nfree).count_ones() {
                continue;
            }
            img[i] = h as u8;
            free = nfree;
            if i + 1 == k {
                for j in 0..k {
                    out[order[j] as usize] = img[j];
                }
                return true;
            }
            i += 1;
            cand[i] = compute(i, &img, free);
        }
    }
}

/// Decides whether `pattern` is a subgraph of `host`. Isolated vertices of
/// `pattern` are ignored.
pub fn embed_subgraph(pattern: &Graph, host: &Graph) -> Result<EmbeddingWitness, GraphError> {
    let host_index = HostIndex::new(host)?;
    let core = pattern.without_isolated();
    if core.order() > host.order() {
        return Ok(EmbeddingWitness { mapping: None });
    }
    // Non-isolated vertices of the pattern, in their original order.
    let keep: Vec<usize> = (0..pattern.order()).filter(|&v| pattern.degree(v) > 0).collect();
    let mut out = [0u8; 64];
    if !host_index.embed_masks(core.masks()?, &mut out) {
        return Ok(EmbeddingWitness { mapping: None });
    }
    let mut mapping = vec![None; pattern.order()];
    let mut used = vec![false; host.order()];
    for (i, &v) in keep.iter().enumerate() {
        mapping[v] = Some(out[i] as usize);
        used[out[i] as usize] = true;
    }
    let mut spare = (0..host.order()).filter(|&h| !used[h]);
    for (v, slot) in mapping.iter_mut().enumerate() {
        if pattern.degree(v) == 0 {
            *slot = spare.next();
        }
    }
    Ok(EmbeddingWitness { mapping: Some(mapping) })
}

// ---------------------------------------------------------------------------
// Maximum clique

/// Size of a maximum clique together with one maximum clique as a vertex mask.
pub fn max_clique_masks(rows: &[u64]) -> (usize, u64) {
    let n = rows.len();
    let mut best = (0usize, 0u64);
    if n > 0 {
        expand_clique(rows, 0, 0, full_mask(n), &mut best);
    }
    best
}

fn expand_clique(rows: &[u64], size: usize, clique: u64, mut cand: u64, best: &mut (usize, u64)) {
    // Greedy colouring gives an upper bound for each candidate.
    let mut order = [0u8; 64];
    let mut colour = [0u8; 64];
    let mut count = 0;
    let mut uncoloured = cand;
    let mut c = 0u8;
    while uncoloured != 0 {
        c += 1;
        let mut avail = uncoloured;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !rows[v];
            uncoloured &= !(1 << v);
            order[count] = v as u8;
            colour[count] = c;
            count += 1;
        }
    }
    for idx in (0..count).rev() {
        if size + colour[idx] as usize <= best.0 {
            return;
        }
        let v = order[idx] as usize;
        let next = cand & rows[v];
        let nc = clique | 1 << v;
        if next == 0 {
            if size + 1 > best.0 {
                *best = (size + 1, nc);
            }
        } else {
            expand_clique(rows, size + 1, nc, next, best);
        }
        cand &= !(1 << v);
    }
}

pub fn clique_number(g: &Graph) -> Result<usize, GraphError> {
    Ok(max_clique_masks(g.masks()?).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn sq_complement(n: usize) -> Graph {
        cycle(n).power(2).unwrap().complement()
    }

    #[test]
    fn relabelled_cycles_share_codes() {
        let c5 = cycle(5);
        let code = canonical_form(&c5, IsolatedPolicy::Keep).unwrap();
        let shuffled = c5.relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert_eq!(canonical_form(&shuffled, IsolatedPolicy::Keep).unwrap(), code);
    }

    #[test]
    fn isolated_policy() {
        let m2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let padded = m2.pad(2).unwrap();
        assert_eq!(
            canonical_form(&m2, IsolatedPolicy::Drop).unwrap().code,
            canonical_form(&padded, IsolatedPolicy::Drop).unwrap().code
        );
        assert_ne!(
            canonical_form(&m2, IsolatedPolicy::Keep).unwrap(),
            canonical_form(&padded, IsolatedPolicy::Keep).unwrap()
        );
    }

    #[test]
    fn complement_of_square_of_seven_cycle() {
        assert!(is_isomorphic(&sq_complement(7), &cycle(7), IsolatedPolicy::Keep).unwrap());
        let m3 = Graph::new(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(is_isomorphic(&sq_complement(6), &m3, IsolatedPolicy::Keep).unwrap());
    }

    #[test]
    fn automorphism_orbits_of_small_graphs() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let l = canonical_labelling(&p4).unwrap();
        assert_eq!(l.orbits, vec![0, 1, 1, 0]);
        let petersen = Graph::new(
            10,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
        )
        .unwrap();
        let l = canonical_labelling(&petersen).unwrap();
        assert!(l.orbits.iter().all(|&o| o == 0));
    }

    #[test]
    fn embedding_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(!embed_subgraph(&k3, &sq_complement(8)).unwrap().is_present());
        let h12 = sq_complement(12);
        let k4 = Graph::complete(4).unwrap();
        let w = embed_subgraph(&k4, &h12).unwrap();
        assert!(w.verify(&k4, &h12));
        let k5m = Graph::complete(5).unwrap().without_edge(0, 1).unwrap();
        assert!(!embed_subgraph(&k5m, &h12).unwrap().is_present());
        let g = cycle(9);
        let w = embed_subgraph(&g, &g).unwrap();
        assert!(w.verify(&g, &g));
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&sq_complement(12)).unwrap(), 4);
        assert_eq!(clique_number(&sq_complement(8)).unwrap(), 2);
        for n in 1..20 {
            assert_eq!(clique_number(&Graph::complete(n).unwrap()).unwrap(), n);
        }
        assert_eq!(clique_number(&Graph::empty(0).unwrap()).unwrap(), 0);
    }
}

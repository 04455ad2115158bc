//! Named graphs, derived-family operators and the exceptional families.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::GraphError;
use crate::family::{GraphFamily, Provenance};
use crate::graph::Graph;
use crate::iso::{canonical_labelling, IsolatedPolicy};

/// Environment variable naming the default gadget file.
pub const GADGETS_ENV: &str = "HAMSQUARE_GADGETS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{name} has no textual definition; supply it through a gadget file")]
    Unavailable { name: String },
    #[error("{kind:?} family is defined for {range}, not n = {n}")]
    OutOfRange { kind: FamilyKind, n: usize, range: &'static str },
    #[error("gadget file {path}: line {line}: {reason}")]
    Gadget { path: String, line: usize, reason: String },
}

fn invalid(msg: impl Into<String>) -> CatalogError {
    CatalogError::Graph(GraphError::InvalidParameters(msg.into()))
}

// ---------------------------------------------------------------------------
// Named graphs

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Graph::complete(n)
}

/// Star of order `n`, i.e. `K_{1,n-1}`, centred at 0.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameters("a star has at least one vertex".into()));
    }
    Graph::new(n, (1..n).map(|i| (0, i)))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameters(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    Graph::empty(a)?.join(&Graph::empty(b)?)
}

/// `S_{n,k}`: each vertex of `K_k` joined to `n - k` independent vertices.
pub fn split_star(n: usize, k: usize) -> Result<Graph, GraphError> {
    if k > n {
        return Err(GraphError::InvalidParameters(format!("S_{{{n},{k}}} needs k <= n")));
    }
    Graph::complete(k)?.join(&Graph::empty(n - k)?)
}

/// Wheel of order `n`: a hub joined to `C_{n-1}`.
pub fn wheel(n: usize) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::InvalidParameters(format!("a wheel needs at least 4 vertices, got {n}")));
    }
    Graph::complete(1)?.join(&cycle(n - 1)?)
}

/// Friendship graph of odd order `n`: `(n - 1) / 2` triangles on a common vertex.
pub fn friendship(n: usize) -> Result<Graph, GraphError> {
    if n < 3 || n % 2 == 0 {
        return Err(GraphError::InvalidParameters(format!("friendship graph needs odd n >= 3, got {n}")));
    }
    let mut edges = Vec::new();
    for i in 0..(n - 1) / 2 {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    Graph::new(n, edges)
}

/// `M_k`: `k` independent edges on `2k` vertices.
pub fn matching(k: usize) -> Result<Graph, GraphError> {
    Graph::new(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1)))
}

/// `S_n*`: the star of order `n` with a new vertex hung on one leaf.
pub fn star_pendant(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameters("star_pendant needs n >= 2".into()));
    }
    star(n)?.pad(1)?.with_edge(1, n)
}

/// `S_n + e`: the star of order `n` with an edge between two leaves.
pub fn star_plus_edge(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameters("star_plus_edge needs n >= 3".into()));
    }
    star(n)?.with_edge(1, 2)
}

/// Spider with one branch vertex whose removal leaves paths of the given
/// orders (`T_{a,b,c}` and its four- and five-armed versions).
pub fn spider(arms: &[usize]) -> Result<Graph, GraphError> {
    if arms.len() < 3 || arms.windows(2).any(|w| w[0] > w[1]) || arms.contains(&0) {
        return Err(GraphError::InvalidParameters(format!("spider arms must be >= 1, sorted, at least three: {arms:?}")));
    }
    let n = 1 + arms.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in arms {
        edges.push((0, next));
        for i in 1..len {
            edges.push((next + i - 1, next + i));
        }
        next += len;
    }
    Graph::new(n, edges)
}

/// Double star `T_{a,b}`: adjacent centres 0 and 1 carrying `a` and `b` leaves.
pub fn double_star(a: usize, b: usize) -> Result<Graph, GraphError> {
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::new(a + b + 2, edges)
}

/// `G` with a new vertex joined to vertex `x`.
pub fn attach_pendant(g: &Graph, x: usize) -> Result<Graph, GraphError> {
    let n = g.order();
    g.pad(1)?.with_edge(x, n)
}

/// `G` with a new vertex joined to the lowest vertex of the given degree.
pub fn attach_at_degree(g: &Graph, degree: usize) -> Result<Graph, GraphError> {
    let x = (0..g.order())
        .find(|&v| g.degree(v) == degree)
        .ok_or_else(|| GraphError::InvalidParameters(format!("no vertex of degree {degree}")))?;
    attach_pendant(g, x)
}

/// `K_n` minus one edge.
pub fn complete_minus(n: usize) -> Result<Graph, GraphError> {
    Graph::complete(n)?.without_edge(0, 1)
}

/// `K_n` with a pendant vertex.
pub fn complete_plus(n: usize) -> Result<Graph, GraphError> {
    attach_pendant(&Graph::complete(n)?, 0)
}

/// `C_n^k`, the `k`-th power of the `n`-cycle.
pub fn cycle_power(n: usize, k: usize) -> Result<Graph, GraphError> {
    cycle(n)?.power(k)
}

/// Complement of the square of the `n`-cycle; `i ~ j` iff their cyclic distance is at least 3.
pub fn square_cycle_complement(n: usize) -> Result<Graph, GraphError> {
    Ok(cycle_power(n, 2)?.complement())
}

/// Textually defined gadget graphs, by name.
pub fn gadget(name: &str) -> Result<Graph, CatalogError> {
    let k3p = || attach_pendant(&Graph::complete(3)?, 0);
    let k4m = || complete_minus(4);
    let k4p = || complete_plus(4);
    let g = match name {
        "G2" => attach_at_degree(&k3p()?, 1)?,
        "G3" => attach_at_degree(&k3p()?, 2)?,
        "G4" => attach_at_degree(&k3p()?, 3)?,
        "G5" => attach_at_degree(&k4m()?, 2)?,
        "G6" => attach_at_degree(&k4m()?, 3)?,
        "G7" => attach_at_degree(&k4p()?, 1)?,
        "G8" => attach_at_degree(&k4p()?, 3)?,
        "G9" => attach_at_degree(&k4p()?, 4)?,
        "G10" => cycle(3)?.disjoint_union(&cycle(3)?)?.with_edge(0, 3)?.with_edge(1, 4)?.with_edge(2, 5)?,
        "G16" => attach_at_degree(&double_star(2, 2)?, 3)?,
        "G17" => attach_at_degree(&attach_pendant(&cycle(4)?, 0)?, 3)?,
        "G30" => attach_at_degree(&friendship(5)?, 4)?,
        "G31" => attach_at_degree(&gadget("G6")?, 4)?,
        _ => return Err(CatalogError::Unavailable { name: name.to_owned() }),
    };
    Ok(g)
}

/// Parses names like `S12`, `K4-`, `S5,2`, `K2,3`, `C5`, `W5`, `F5`, `M3`,
/// `P4`, `K3+`, `S5*`, `S5+e`, `T1,1,2`, `D6`, `G10` and disjoint unions
/// joined by `∪` or `|`, with multiplicities such as `2S3`.
pub fn parse_name(name: &str) -> Result<Graph, CatalogError> {
    let name = name.trim();
    for sep in ['∪', '|'] {
        if name.contains(sep) {
            let mut parts = name.split(sep).map(str::trim);
            let mut g = parse_name(parts.next().unwrap_or(""))?;
            for p in parts {
                let (mult, rest) = split_multiplier(p);
                for _ in 0..mult {
                    g = g.disjoint_union(&parse_name(rest)?)?;
                }
            }
            return Ok(g);
        }
    }
    let (mult, name) = split_multiplier(name);
    if mult > 1 {
        let one = parse_name(name)?;
        let mut g = Graph::empty(0)?;
        for _ in 0..mult {
            g = g.disjoint_union(&one)?;
        }
        return Ok(g);
    }
    if name.starts_with('G') && name[1..].chars().all(|c| c.is_ascii_digit()) {
        return gadget(name);
    }
    let (head, body) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
    let (body, suffix) = match body.strip_suffix('-') {
        Some(b) => (b, "-"),
        None => match body.strip_suffix('+') {
            Some(b) => (b, "+"),
            None => match body.strip_suffix('*') {
                Some(b) => (b, "*"),
                None => match body.strip_suffix("+e") {
                    Some(b) => (b, "+e"),
                    None => (body, ""),
                },
            },
        },
    };
    let nums: Vec<usize> = body
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| invalid(format!("cannot parse graph name {name:?}")))?;
    let one = |v: &[usize]| -> Result<usize, CatalogError> {
        match v {
            [x] => Ok(*x),
            _ => Err(invalid(format!("{name:?} takes one parameter"))),
        }
    };
    let base = match (head, nums.len()) {
        ("K", 1) => complete(one(&nums)?)?,
        ("K", 2) => complete_bipartite(nums[0], nums[1])?,
        ("S", 1) => star(one(&nums)?)?,
        ("S", 2) => split_star(nums[0], nums[1])?,
        ("P", 1) => path(one(&nums)?)?,
        ("C", 1) => cycle(one(&nums)?)?,
        ("W", 1) => wheel(one(&nums)?)?,
        ("F", 1) => friendship(one(&nums)?)?,
        ("M", 1) => matching(one(&nums)?)?,
        ("T", 2) => double_star(nums[0], nums[1])?,
        ("T", _) => spider(&nums)?,
        ("D", 1) if nums[0] == 6 => double_star(2, 2)?,
        ("D", _) => return Err(CatalogError::Unavailable { name: name.to_owned() }),
        _ => return Err(invalid(format!("unknown graph name {name:?}"))),
    };
    let g = match (head, suffix) {
        (_, "") => base,
        ("S", "*") => star_pendant(nums[0])?,
        ("S", "+e") => star_plus_edge(nums[0])?,
        (_, "-") => {
            let fam = lift_minus(&base)?;
            if fam.len() != 1 {
                return Err(invalid(format!("{name:?} is ambiguous: {} edge deletions", fam.len())));
            }
            let g = fam.members().next().map(|m| m.graph.clone()).expect("one member");
            g
        }
        (_, "+") => {
            let fam = lift_plus(&base)?;
            if fam.len() != 1 {
                return Err(invalid(format!("{name:?} is ambiguous: {} pendant attachments", fam.len())));
            }
            let g = fam.members().next().map(|m| m.graph.clone()).expect("one member");
            g
        }
        _ => return Err(invalid(format!("unsupported suffix in {name:?}"))),
    };
    Ok(g)
}

fn split_multiplier(s: &str) -> (usize, &str) {
    let digits = s.chars().take_while(char::is_ascii_digit).count();
    if digits > 0 && digits < s.len() {
        (s[..digits].parse().unwrap_or(1), &s[digits..])
    } else {
        (1, s)
    }
}

// ---------------------------------------------------------------------------
// Derived families

/// Parameters of the "new vertex joined to `t` old vertices" operator.
#[derive(Clone, Debug)]
pub struct LiftSpec {
    pub base: Graph,
    pub t: usize,
}

/// Every graph obtained by deleting one edge, up to isomorphism.
pub fn lift_minus(f: &Graph) -> Result<GraphFamily, CatalogError> {
    if f.size() == 0 {
        return Err(invalid("edge deletion needs at least one edge"));
    }
    let mut fam = GraphFamily::new("minus");
    for (u, v) in f.edges() {
        fam.insert(None, f.without_edge(u, v)?, Provenance::Constructed)?;
    }
    Ok(fam)
}

/// Every graph obtained by adding a new vertex joined to one vertex, one per vertex orbit.
pub fn lift_plus(f: &Graph) -> Result<GraphFamily, CatalogError> {
    lift_plus_t(&LiftSpec { base: f.clone(), t: 1 })
}

/// Every graph obtained by adding a new vertex joined to `t` existing vertices.
pub fn lift_plus_t(spec: &LiftSpec) -> Result<GraphFamily, CatalogError> {
    let n = spec.base.order();
    if spec.t == 0 || spec.t > n {
        return Err(invalid(format!("t = {} outside 1..={n}", spec.t)));
    }
    let orbits = canonical_labelling(&spec.base)?.orbits;
    let mut fam = GraphFamily::new(format!("plus{}", spec.t));
    let padded = spec.base.pad(1)?;
    let mut subset: Vec<usize> = (0..spec.t).collect();
    loop {
        // The first chosen vertex can be taken as an orbit representative.
        if orbits[subset[0]] == subset[0] || spec.t > 1 {
            let mut g = padded.clone();
            for &x in &subset {
                g = g.with_edge(x, n)?;
            }
            fam.insert(None, g, Provenance::Constructed)?;
        }
        // Next t-subset in lexicographic order.
        let mut i = spec.t;
        loop {
            if i == 0 {
                return Ok(fam);
            }
            i -= 1;
            if subset[i] < n - spec.t + i {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..spec.t {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Exceptional families

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    /// Complements of the edge-extremal graphs.
    H,
    /// Minimal obstructions with `n - 3` edges.
    F,
    /// Minimal obstructions with `n - 2` edges.
    E,
    /// Graphs with `n - 2` edges containing a large star or one of the two exceptional unions.
    L,
    /// Complements of the three exceptional hosts.
    Y,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyId {
    pub kind: FamilyKind,
    pub n: usize,
}

impl FamilyId {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self, CatalogError> {
        let (ok, range) = match kind {
            FamilyKind::H => (n >= 6, "n >= 6"),
            FamilyKind::F => ((6..=15).contains(&n), "6 <= n <= 15"),
            FamilyKind::E => ((6..=18).contains(&n), "6 <= n <= 18"),
            FamilyKind::L => (n >= 9, "n >= 9"),
            FamilyKind::Y => (n >= 18, "n >= 18"),
        };
        if ok {
            Ok(FamilyId { kind, n })
        } else {
            Err(CatalogError::OutOfRange { kind, n, range })
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}_{}", self.kind, self.n)
    }
}

/// Names of figure-only members, which need a gadget file.
pub const FIGURE_ONLY: &[&str] = &["G1"];

/// Member names of a family.
pub fn member_names(id: FamilyId) -> Vec<String> {
    let n = id.n;
    let s = |k: usize| format!("S{k}");
    let v: Vec<String> = match id.kind {
        FamilyKind::H => match n {
            6 => vec![s(3)],
            7 => vec![s(4), "K3".into()],
            8 => vec!["K3".into()],
            9 => vec!["K4-".into(), s(6)],
            10 => vec!["K4".into(), s(7)],
            11 => vec!["K4".into()],
            12 => vec![s(9)],
            13 => vec![s(10)],
            14 => vec![s(11), "K5".into()],
            _ => vec![s(n - 3)],
        },
        FamilyKind::F => match n {
            6 => vec![s(3)],
            7 => vec![s(4), "C4".into(), "K3".into()],
            8 => vec!["K3".into(), s(5)],
            9 => vec!["K4-".into(), s(6), "F5".into()],
            10 => vec!["K4".into(), s(7), "S5,2".into()],
            11 => vec!["K4".into(), s(8)],
            12 => vec!["K5-".into(), s(9)],
            13 => vec![s(10), "K5".into()],
            14 => vec![s(11), "K5".into()],
            _ => vec![s(12)],
        },
        FamilyKind::E => match n {
            6 => vec![s(3)],
            7 => vec![s(4), "C4".into(), "K3".into(), "C5".into()],
            8 => vec!["K3".into(), s(5), "K2,3".into()],
            9 => vec!["K4-".into(), s(6), "F5".into()],
            10 => vec!["K4".into(), s(7), "S5,2".into(), "W5".into(), "G1".into()],
            11 => vec!["K4".into(), s(8), "S6,2".into()],
            12 => vec!["K5-".into(), s(9)],
            13 => vec![s(10), "K5".into()],
            14 => vec![s(11), "K5".into()],
            15 => vec![s(12)],
            16 => vec![s(13)],
            17 => vec![s(14), "K6".into()],
            _ => vec![s(15)],
        },
        FamilyKind::L | FamilyKind::Y => {
            vec![s(n - 3), format!("S{}∪S4", n - 4), format!("S{}∪K3", n - 4)]
        }
    };
    v
}

/// Named graphs read from a gadget file (`name<TAB>graph6` per line).
#[derive(Clone, Debug, Default)]
pub struct GadgetSet {
    pub path: Option<PathBuf>,
    entries: BTreeMap<String, (Graph, usize)>,
    /// Whether the file declares its entries to be reconstructions.
    pub reconstruction: bool,
}

impl GadgetSet {
    pub fn parse(text: &str, path: Option<&Path>) -> Result<Self, CatalogError> {
        let label = path.map(|p| p.display().to_string()).unwrap_or_else(|| "<memory>".into());
        let mut set = GadgetSet { path: path.map(Path::to_path_buf), ..Default::default() };
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if let Some(comment) = line.strip_prefix('#') {
                if comment.trim().eq_ignore_ascii_case("reconstruction") {
                    set.reconstruction = true;
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let (name, g6) = line.split_once('\t').ok_or_else(|| CatalogError::Gadget {
                path: label.clone(),
                line: i + 1,
                reason: "expected name<TAB>graph6".into(),
            })?;
            let g = crate::graph6::decode_str(g6.trim()).map_err(|e| CatalogError::Gadget {
                path: label.clone(),
                line: i + 1,
                reason: e.to_string(),
            })?;
            set.entries.insert(name.trim().to_owned(), (g, i + 1));
        }
        Ok(set)
    }

    pub fn load(path: &Path) -> Result<Self, CatalogError> {
        let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Gadget {
            path: path.display().to_string(),
            line: 0,
            reason: e.to_string(),
        })?;
        Self::parse(&text, Some(path))
    }

    /// Loads the file named by the environment variable, if set.
    pub fn from_env() -> Result<Option<Self>, CatalogError> {
        match std::env::var_os(GADGETS_ENV) {
            Some(p) => Self::load(Path::new(&p)).map(Some),
            None => Ok(None),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Graph> {
        self.entries.get(name).map(|(g, _)| g)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn provenance(&self, name: &str) -> Provenance {
        Provenance::GadgetFile {
            path: self.path.as_ref().map(|p| p.display().to_string()).unwrap_or_default(),
            line: self.entries.get(name).map_or(0, |(_, l)| *l),
            reconstruction: self.reconstruction,
        }
    }
}

/// The gadget file shipped with the crate.
pub fn bundled_gadgets() -> GadgetSet {
    GadgetSet::parse(include_str!("../data/gadgets.tsv"), Some(Path::new("data/gadgets.tsv")))
        .expect("bundled gadget file parses")
}

/// The members with textual definitions, plus the names of members that
/// could not be resolved without a gadget file.
pub fn family_textual(id: FamilyId) -> Result<(GraphFamily, Vec<String>), CatalogError> {
    family_inner(id, None)
}

/// A family with every member resolved; figure-only members are taken from
/// `gadgets` and their absence is an error.
pub fn family(id: FamilyId, gadgets: Option<&GadgetSet>) -> Result<GraphFamily, CatalogError> {
    let (fam, missing) = family_inner(id, gadgets)?;
    match missing.into_iter().next() {
        Some(name) => Err(CatalogError::Unavailable { name }),
        None => Ok(fam),
    }
}

fn family_inner(id: FamilyId, gadgets: Option<&GadgetSet>) -> Result<(GraphFamily, Vec<String>), CatalogError> {
    if id.kind == FamilyKind::L {
        return Ok((l_family(id.n)?, Vec::new()));
    }
    let mut fam = GraphFamily::new(id.to_string()).with_bounds(Some(id.n), None);
    let mut missing = Vec::new();
    for name in member_names(id) {
        if FIGURE_ONLY.contains(&name.as_str()) {
            match gadgets.and_then(|g| g.get(&name).map(|x| (g, x))) {
                Some((set, g)) => {
                    fam.insert(Some(&name), g.clone(), set.provenance(&name))?;
                }
                None => missing.push(name),
            }
            continue;
        }
        fam.insert(Some(&name), parse_name(&name)?, Provenance::Constructed)?;
    }
    Ok((fam, missing))
}

/// Graphs with `n - 2` edges on at most `n` vertices that contain
/// `S_{n-3}`, together with `S_{n-4} ∪ S_4` and `S_{n-4} ∪ K_3`.
pub fn l_family(n: usize) -> Result<GraphFamily, CatalogError> {
    FamilyId::new(FamilyKind::L, n)?;
    let mut fam = GraphFamily::new(format!("L_{n}")).with_bounds(Some(n), Some(n - 2));
    let base = star(n - 3)?.pad(3)?;
    let non_edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !base.has_edge(u, v)).collect();
    for (i, &(a, b)) in non_edges.iter().enumerate() {
        for &(c, d) in &non_edges[i + 1..] {
            let g = base.with_edge(a, b)?.with_edge(c, d)?;
            fam.insert(None, g, Provenance::Constructed)?;
        }
    }
    for name in [format!("S{}∪S4", n - 4), format!("S{}∪K3", n - 4)] {
        fam.insert(Some(&name), parse_name(&name)?, Provenance::Constructed)?;
    }
    let named = named_variants(n)?;
    fam.adopt_names(&named);
    Ok(fam)
}

/// Names for the common members of the `n - 2` edge families.
fn named_variants(n: usize) -> Result<GraphFamily, CatalogError> {
    let mut named = GraphFamily::new("names");
    let k = n - 3;
    for name in [
        format!("S{}", k + 2),
        format!("S{}*", k + 1),
        format!("S{}+e", k + 1),
        format!("S{}∪K2", k + 1),
        format!("S{k}∪K3"),
        format!("S{k}∪P3"),
        format!("S{k}∪M2"),
    ] {
        if let Ok(g) = parse_name(&name) {
            named.insert(Some(&name), g, Provenance::Constructed)?;
        }
    }
    Ok(named)
}

/// The three exceptional hosts `K_n \ E(F)` for `F` in the `Y` family.
pub fn y_hosts(n: usize) -> Result<Vec<(String, Graph)>, CatalogError> {
    let id = FamilyId::new(FamilyKind::Y, n)?;
    member_names(id)
        .into_iter()
        .map(|name| {
            let f = parse_name(&name)?;
            let g = Graph::delete_pattern_edges(&crate::graph::PlacementSpec::new(n, f))?;
            Ok((name, g))
        })
        .collect()
}

/// Checks that two graphs are isomorphic after dropping isolated vertices.
pub fn same_shape(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    crate::iso::is_isomorphic(a, b, IsolatedPolicy::Drop)
}

//! Verification targets: each runs a family of exhaustive checks over a
//! range of orders and produces a [`VerificationReport`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{anyhow, Result};
use hamsquare::catalog::{
    self, complete_minus, double_star, family, family_textual, lift_plus, lift_plus_t, parse_name, star,
    square_cycle_complement, FamilyId, FamilyKind, GadgetSet, LiftSpec,
};
use hamsquare::closure::{complement_edge_bound_below, k_closure};
use hamsquare::enumerate::{minimal_forbidden_cores, Control, EnumError};
use hamsquare::iso::{clique_number, embed_subgraph};
use hamsquare::spectral::{double_star_mu_for_order, spectral_radius};
use hamsquare::squareham::{
    census, classify_nonembeddable, closure_failures, complement_host, contained_cores, has_star, lift_width,
    spectral_extremal, sweep_embeddings, CandidateSource, Census, Classification, Optimum, SquareHamChecker,
    SquareHamError,
};
use hamsquare::{graph6, Graph, GraphFamily, Provenance};
use serde::{Deserialize, Serialize};

use crate::config::RunConfig;
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    CliqueNumber,
    SparseEmbedding,
    SmallCores,
    StarCore,
    DenseCores,
    StarCoreDense,
    EdgeThreshold,
    SpectralMaximizer,
    ComplementSpectral,
    EdgeExtremal,
    VertexLifting,
}

impl Target {
    pub const ALL: [Target; 11] = [
        Target::CliqueNumber,
        Target::SparseEmbedding,
        Target::SmallCores,
        Target::StarCore,
        Target::DenseCores,
        Target::StarCoreDense,
        Target::EdgeThreshold,
        Target::SpectralMaximizer,
        Target::ComplementSpectral,
        Target::EdgeExtremal,
        Target::VertexLifting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::CliqueNumber => "clique-number",
            Target::SparseEmbedding => "sparse-embedding",
            Target::SmallCores => "small-cores",
            Target::StarCore => "star-core",
            Target::DenseCores => "dense-cores",
            Target::StarCoreDense => "star-core-dense",
            Target::EdgeThreshold => "edge-threshold",
            Target::SpectralMaximizer => "spectral-maximizer",
            Target::ComplementSpectral => "complement-spectral",
            Target::EdgeExtremal => "edge-extremal",
            Target::VertexLifting => "vertex-lifting",
        }
    }

    /// The property under test. `H_n`, `F_n` and `E_n` are the tabulated
    /// families of the catalog; `K(n, t)` is the set of graphs with `t`
    /// edges and at most `n` non-isolated vertices.
    pub fn clause(self) -> &'static str {
        match self {
            Target::CliqueNumber => {
                "The complement of C_n^2 has clique number floor(n/3). If 3 | n it contains K_{n/3} but not \
                 K_{n/3+1} minus an edge; otherwise it contains K_{ceil(n/3)} minus an edge."
            }
            Target::SparseEmbedding => {
                "Every F in K(n, n-4) outside H_n embeds in the complement of C_n^2; for n = 8 and n = 11 the \
                 same holds for K(n, n-5)."
            }
            Target::SmallCores => {
                "Every F in K(n, n-3) embeds in the complement of C_n^2 unless F contains a member of F_n, and \
                 the minimal non-embeddable graphs with at most n-3 edges are exactly F_n."
            }
            Target::StarCore => {
                "Every F in K(n, n-3) that does not embed in the complement of C_n^2 contains the star S_{n-3}."
            }
            Target::DenseCores => {
                "Every F in K(n, n-2) other than S_{n-4} u S_4 and S_{n-4} u K_3 embeds in the complement of \
                 C_n^2 unless F contains a member of E_n, and the minimal non-embeddable graphs with at most n-2 \
                 edges are E_n together with those two unions."
            }
            Target::StarCoreDense => {
                "Every F in K(n, n-2) other than S_{n-4} u S_4 and S_{n-4} u K_3 that does not embed in the \
                 complement of C_n^2 contains the star S_{n-3}."
            }
            Target::EdgeThreshold => {
                "A graph of order n with more than (n^2-3n+3)/2 edges contains C_n^2 unless it is a subgraph of \
                 K_n minus the edges of S_{n-3}, S_{n-4} u S_4 or S_{n-4} u K_3."
            }
            Target::SpectralMaximizer => {
                "Among graphs of order n without C_n^2, the spectral radius is maximised exactly by K_n minus \
                 the edges of S_{n-3}."
            }
            Target::ComplementSpectral => {
                "If the complement of G has spectral radius at most sqrt(n-5), then G contains C_n^2 or the \
                 n-closure of G is complete; with the double-star radius, edge-count and closure facts the \
                 argument relies on."
            }
            Target::EdgeExtremal => {
                "The largest graph of order n without C_n^2 has 25 edges for n = 8, 49 edges for n = 11 and \
                 C(n-1, 2) + 3 edges otherwise, and the extremal graphs are exactly K_n minus the edges of a \
                 member of H_n."
            }
            Target::VertexLifting => {
                "If F on n-1 vertices embeds in the complement of C_{n-1}^2, then adding a vertex joined to one \
                 vertex of F, or to any t = ceil((n-1)/4) - 1 >= 1 vertices of F, gives a graph that embeds in \
                 the complement of C_n^2."
            }
        }
    }

    pub fn default_range(self) -> (usize, usize) {
        match self {
            Target::CliqueNumber => (6, 30),
            Target::SparseEmbedding => (6, 14),
            Target::SmallCores => (6, 15),
            Target::StarCore => (15, 17),
            Target::DenseCores => (6, 13),
            Target::StarCoreDense
            | Target::EdgeThreshold
            | Target::SpectralMaximizer
            | Target::ComplementSpectral => (18, 18),
            Target::EdgeExtremal => (6, 13),
            Target::VertexLifting => (7, 12),
        }
    }

    /// Smallest order the target is defined for.
    fn min_order(self) -> usize {
        match self {
            Target::VertexLifting => 7,
            _ => 6,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| anyhow!("unknown target {s:?}; expected one of {}", names()))
    }
}

fn names() -> String {
    Target::ALL.map(Target::name).join(", ")
}

/// Runs one target and writes its report when an output directory is set.
pub fn run(target: Target, config: &RunConfig) -> Result<VerificationReport> {
    Session::new(config.clone())?.run(target)
}

/// Runs targets with shared state: sweeps of `K(n, t)` computed by one
/// target are reused by the next.
pub struct Session {
    pub config: RunConfig,
    gadgets: Option<GadgetSet>,
    censuses: HashMap<usize, Census>,
}

enum Stop {
    Budget(String, Option<String>),
    Fatal(anyhow::Error),
}

impl From<SquareHamError> for Stop {
    fn from(e: SquareHamError) -> Self {
        match e {
            SquareHamError::Enumeration(EnumError::BudgetExceeded { visited, reason, resume }) => {
                Stop::Budget(format!("budget exceeded ({reason}) after {visited} graphs"), resume)
            }
            other => Stop::Fatal(other.into()),
        }
    }
}

impl From<EnumError> for Stop {
    fn from(e: EnumError) -> Self {
        SquareHamError::from(e).into()
    }
}

impl From<anyhow::Error> for Stop {
    fn from(e: anyhow::Error) -> Self {
        Stop::Fatal(e)
    }
}

impl From<hamsquare::GraphError> for Stop {
    fn from(e: hamsquare::GraphError) -> Self {
        Stop::Fatal(e.into())
    }
}

impl From<catalog::CatalogError> for Stop {
    fn from(e: catalog::CatalogError) -> Self {
        Stop::Fatal(e.into())
    }
}

impl From<hamsquare::spectral::SpectralError> for Stop {
    fn from(e: hamsquare::spectral::SpectralError) -> Self {
        Stop::Fatal(e.into())
    }
}

type Step<T = ()> = std::result::Result<T, Stop>;

fn g6(g: &Graph) -> String {
    graph6::encode(&g.without_isolated())
}

/// `S_{n-4} u S_4` and `S_{n-4} u K_3`.
pub fn union_exceptions(n: usize) -> Result<GraphFamily> {
    let mut fam = GraphFamily::new(format!("exceptions({n})"));
    for name in [format!("S{}∪S4", n - 4), format!("S{}∪K3", n - 4)] {
        fam.insert(Some(&name), parse_name(&name)?, Provenance::Constructed)?;
    }
    Ok(fam)
}

fn named(fam: &GraphFamily) -> String {
    let mut v = fam.names();
    v.sort();
    v.join(", ")
}

impl Session {
    pub fn new(config: RunConfig) -> Result<Self> {
        config.validate()?;
        let gadgets = config.gadget_set()?;
        Ok(Session { config, gadgets, censuses: HashMap::new() })
    }

    pub fn run(&mut self, target: Target) -> Result<VerificationReport> {
        let start = Instant::now();
        let (lo, hi) = self.config.range(target.default_range());
        let lo = lo.max(target.min_order());
        let mut report = VerificationReport::new(target, (lo, hi), self.config.hash());
        let outcome = match target {
            Target::CliqueNumber => self.clique_number(&mut report, lo, hi),
            Target::SparseEmbedding => self.sparse_embedding(&mut report, lo, hi),
            Target::SmallCores => self.small_cores(&mut report, lo, hi),
            Target::StarCore => self.star_core(&mut report, lo, hi),
            Target::DenseCores => self.dense_cores(&mut report, lo, hi),
            Target::StarCoreDense => self.star_core_dense(&mut report, lo, hi),
            Target::EdgeThreshold => self.edge_threshold(&mut report, lo, hi),
            Target::SpectralMaximizer => self.spectral_maximizer(&mut report, lo, hi),
            Target::ComplementSpectral => self.complement_spectral(&mut report, lo, hi),
            Target::EdgeExtremal => self.edge_extremal(&mut report, lo, hi),
            Target::VertexLifting => self.vertex_lifting(&mut report, lo, hi),
        };
        match outcome {
            Ok(()) => {}
            Err(Stop::Budget(msg, resume)) => {
                report.resume = resume;
                report.partial(msg);
            }
            Err(Stop::Fatal(e)) => return Err(e),
        }
        report.finish();
        report.wall_time = start.elapsed().as_secs_f64();
        if let Some(dir) = &self.config.out_dir {
            report.write(dir)?;
        }
        Ok(report)
    }

    /// The sweep of `K(n, t)`, `t <= t_max`, reusing an earlier one that went at least as deep.
    fn census(&mut self, n: usize, t_max: usize) -> Step<&Census> {
        let stale = self.censuses.get(&n).map_or(true, |c| c.t_max < t_max);
        if stale {
            let c = census(n, t_max, &self.config.budget(), &self.config.parallel(), false)?;
            self.censuses.insert(n, c);
        }
        Ok(&self.censuses[&n])
    }

    fn clique_number(&mut self, r: &mut VerificationReport, lo: usize, hi: usize) -> Step {
        for n in lo..=hi {
            let host = square_cycle_complement(n)?;
            let omega = clique_number(&host)?;
            let mut bad = Vec::new();
            if omega != n / 3 {
                bad.push(format!("clique number {omega}, expected {}", n / 3));
            }
            let summary = if n % 3 == 0 {
                let k = n / 3;
                if !embed_subgraph(&Graph::complete(k)?, &host)?.is_present() {
                    bad.push(format!("K{k} absent"));
                }
                if embed_subgraph(&complete_minus(k + 1)?, &host)?.is_present() {
                    bad.push(format!("K{}- present", k + 1));
                }
                format!("omega = {omega}; K{k} present, K{}- absent", k + 1)
            } else {
                let k = n.div_ceil(3);
                if !embed_subgraph(&complete_minus(k)?, &host)?.is_present() {
                    bad.push(format!("K{k}- absent"));
                }
                format!("omega = {omega}; K{k}- present")
            };
            for b in bad {
                r.discrepancy(n, g6(&host), b);
            }
            r.row(n, 1, summary);
        }
        Ok(())
    }

    fn h_family(&self, n: usize) -> Step<GraphFamily> {
        Ok(family(FamilyId::new(FamilyKind::H, n)?, self.gadgets.as_ref())?)
    }

    fn report_classification(r: &mut VerificationReport, cls: &Classification, extra: &str) {
        for g in &cls.unexplained {
            r.discrepancy(cls.n, g6(g), format!("does not embed and is not explained (t = {})", cls.t));
        }
        r.row(
            cls.n,
            cls.total,
            format!(
                "t = {}: {} embed, {} contain a core, {} listed exceptions, {} unexplained{extra}",
                cls.t,
                cls.embeds,
                cls.contains_core,
                cls.exceptions,
                cls.unexplained.len()
            ),
        );
    }

    fn sparse_embedding(&mut self, r: &mut VerificationReport, lo: usize, hi: usize) -> Step {
        for n in lo..=hi {
            let t = if n == 8 || n == 11 { n - 5 } else { n - 4 };
            let h = self.h_family(n)?;
            let cls = classify_nonembeddable(n, t, &GraphFamily::new("none"), &h, &self.config.budget())?;
            Self::report_classification(r, &cls, &format!("; exceptions {}", named(&h)));
        }
        Ok(())
    }

    /// Compares derived minimal cores with a tabulated family. Figure-only
    /// members missing from the gadget file are matched by count.
    fn compare_cores(
        &self,
        r: &mut VerificationReport,
        n: usize,
        kind: FamilyKind,
        derived: &GraphFamily,
    ) -> Step<GraphFamily> {
        let id = FamilyId::new(kind, n)?;
        let (textual, missing) = family_textual(id)?;
        let mut table = textual.clone();
        let mut unresolved = Vec::new();
        for name in &missing {
            match self.gadgets.as_ref().and_then(|s| s.get(name).map(|g| (s, g))) {
                Some((set, g)) => {
                    table.insert(Some(name), g.clone(), Provenance::Constructed)?;
                    if set.reconstruction {
                        r.notices.push(format!("n = {n}: {name} taken from a reconstruction in the gadget file"));
                    }
                }
                None => unresolved.push(name.clone()),
            }
        }
        for m in table.members() {
            if !derived.contains_code(&m.code) {
                r.discrepancy(n, g6(&m.graph), format!("{} is not a minimal core", m.name.as_deref().unwrap_or("?")));
            }
        }
        let extra: Vec<_> = derived.members().filter(|m| !table.contains_code(&m.code)).collect();
        if extra.len() == unresolved.len() {
            for (m, name) in extra.iter().zip(&unresolved) {
                r.partial(format!(
                    "n = {n}: {name} has no definition available; matched by count to derived core {}",
                    g6(&m.graph)
                ));
                table.insert(Some(name), m.graph.clone(), Provenance::Enumerated)?;
            }
        } else {
            for m in &extra {
                r.discrepancy(n, g6(&m.graph), "minimal core missing from the table");
            }
        }
        table.adopt_names(&textual);
        Ok(table)
    }

    fn small_cores(&mut self, r: &mut VerificationReport, lo: usize, hi: usize) -> Step {
        for n in lo..=hi {
            let derived = minimal_forbidden_cores(n, n - 3, &self.config.budget())?;
            let table = self.compare_cores(r, n, FamilyKind::F, &derived)?;
            let cls = classify_nonembeddable(n, n - 3, &table, &GraphFamily::new("none"), &self.config.budget())?;
            Self::report_classification(r, &cls, &format!("; cores {}", named(&table)));
        }
        Ok(())
    }

    fn dense_cores(&mut self, r: &mut VerificationReport, lo: usize, hi: usize) -> Step {
        for n in lo..=hi {
            let exceptions = union_exceptions(n)?;
            let mut derived = minimal_forbidden_cores(n, n - 2, &self.config.budget())?;
            for m in exceptions.members() {
                if derived.contains_code(&m.code) {
                    r.notices.push(format!("n = {n}: {} is a minimal core", m.name.as_deref().unwrap_or("?")));
                }
            }
            derived.retain(|m| !exceptions.contains_code(&m.code));
            let table = self.compare_cores(r, n, FamilyKind::E, &derived)?;
            let cls = classify_nonembeddable(n, n - 2, &table, &exceptions, &self.config.budget())?;
            Self::report_classification(r, &cls, &format!("; cores {}", named(&table)));
        }
        Ok(())
    }

    fn star_core(&mut self, r: &mut VerificationReport, lo: usize, hi: usize) -> Step {
        for n in lo..=hi {
            let t = n - 3;
            let c = self.census(n, t)?;
            let mut bad = Vec::new();
            let mut k = 0;
            for g in c.at(t) {
                k += 1;
                if !has_star(g, n - 3) {
                    bad.push(g6(g));
                }
            }
            let total = c.counts[t];
            for b in &bad {
                r.discrepancy(n, b.clone(), format!("does not embed and has no S{}", n - 3));
            }
            r.row(n, total, format!("t = {t}: {total} graphs, {k} do not embed, {} without S{}", bad.len(), n - 3));
        }
        Ok(())
    }

    fn star_core_dense(&mut self, r: &mut VerificationReport, lo: usize, hi: usize) -> Step {
        for n in lo..=hi {
            let t = n - 2;
            let exceptions = union_exceptions(n)?;
            let c = self.census(n, t)?;
            let (mut k, mut exc) = (0, 0);
            let mut bad = Vec::new();
            for g in c.at(t) {
                k += 1;
                if has_star(g, n - 3) {
                    continue;
                }
                if exceptions.contains(g)? {
                    exc += 1;
                } else {
                    bad.push(g6(g));
                }
            }
            let total = c.counts[t];
            for b in &bad {
                r.discrepancy(n, b.clone(), format!("does not embed, has no S{} and is not a listed union", n - 3));
            }
            r.row(n, total, format!("t = {t}: {total} graphs, {k} do not embed, {exc} listed unions, {} unexplained", bad.len()));
        }
        Ok(())
    }

    fn y_complements(n: usize) -> Step<GraphFamily> {
        let mut fam = GraphFamily::new(format!("Y({n})"));
        for name in [format!("S{}", n - 3), format!("S{}∪S4", n - 4), format!("S{}∪K3", n - 4)] {
            fam.insert(Some(&name), parse_name(&name)?, Provenance::Constructed)?;
        }
        Ok(fam)
    }

    fn edge_threshold(&mut self, r: &mut VerificationReport, lo: usize, hi: usize) -> Step {
        for n in lo..=hi {
            let y = Self::y_complements(n)?;
            let c = self.census(n, n - 2)?;
            let mut per_t = vec![0u64; n - 1];
            let mut unions = BTreeSet::new();
            let mut bad = Vec::new();
            for g in &c.non_embeddable {
                if g.size() > n - 2 {
                    continue;
                }
                per_t[g.size()] += 1;
                let hits = contained_cores(g, &y)?;
                if hits.is_empty() {
                    bad.push(g6(g));
                } else if !hits.iter().any(|h| *h == format!("S{}", n - 3)) {
                    unions.insert((g.size(), hits.join("+")));
                }
            }
            let visited = c.visited;
            for b in &bad {
                r.discrepancy(n, b.clone(), "does not embed and avoids all three complements");
            }
            for (t, name) in &unions {
                if *t != n - 2 {
                    r.discrepancy(n, name.clone(), format!("union-type core below n - 2 edges (t = {t})"));
                }
            }
            r.row(
                n,
                visited,
                format!(
                    "non-embeddable by edge count {:?}; without S{}: {:?}",
                    per_t,
                    n - 3,
                    unions.iter().map(|(_, s)| s.as_str()).collect::<Vec<_>>()
                ),
            );
        }
        Ok(())
    }

    fn spectral_maximizer(&mut self, r: &mut VerificationReport, lo: usize, hi: usize) -> Step {
        let tol = self.config.tol;
        for n in lo..=hi {
            let checker = SquareHamChecker::new(n)?;
            let c = self.census(n, n - 2)?;
            let full = spectral_extremal(n, tol, CandidateSource::Census(c))?;
            let visited = c.visited;
            let cores = if n >= 18 {
                Self::y_complements(n)?
            } else {
                let mut f = family(FamilyId::new(FamilyKind::E, n)?, self.gadgets.as_ref())?;
                for m in union_exceptions(n)?.members() {
                    f.insert(m.name.as_deref(), m.graph.clone(), Provenance::Constructed)?;
                }
                f
            };
            let quick = spectral_extremal(n, tol, CandidateSource::CoreGrowth(&cores))?;
            let a: Vec<&str> = full.extremal_complements.codes().collect();
            let b: Vec<&str> = quick.extremal_complements.codes().collect();
            if a != b {
                let shown: Vec<String> = quick.extremal_complements.members().map(|m| g6(&m.graph)).collect();
                r.discrepancy(n, shown.join(" "), "core growth and full sweep disagree on the extremal set");
            }
            let Optimum::Mu(mu) = full.optimum else { unreachable!("spectral objective") };
            if !full.certificate_valid {
                r.partial(format!("n = {n}: optimum {mu:.12} does not exceed n - 2; edge pruning not justified"));
            }
            if mu >= (n - 1) as f64 {
                r.discrepancy(n, "", format!("optimum {mu} reaches n - 1"));
            }
            for m in full.extremal_complements.members() {
                let g = complement_host(n, &m.graph)?;
                if checker.check(&g)?.contains {
                    r.discrepancy(n, g6(&m.graph), "extremal graph contains C_n^2");
                }
            }
            let mut summary = format!(
                "{} candidates from the sweep, {} from core growth; optimum mu = {mu:.12}",
                full.instances_examined, quick.instances_examined
            );
            if n >= 18 {
                let s = star(n - 3)?;
                let expected = full.extremal_complements.len() == 1 && full.extremal_complements.contains(&s)?;
                if !expected {
                    let shown: Vec<String> = full.extremal_complements.members().map(|m| g6(&m.graph)).collect();
                    r.discrepancy(n, shown.join(" "), format!("extremal set is not {{S{}}}", n - 3));
                }
                summary.push_str(&format!(" at S{}", n - 3));
                for m in union_exceptions(n)?.members() {
                    let other = spectral_radius(&complement_host(n, &m.graph)?, tol)?.mu;
                    let name = m.name.clone().unwrap_or_default();
                    if mu - other <= 1e-6 {
                        r.discrepancy(n, g6(&m.graph), format!("margin over {name} is only {:.3e}", mu - other));
                    }
                    summary.push_str(&format!("; {name}: {other:.12} (margin {:.3e})", mu - other));
                }
            }
            r.row(n, visited, summary);
        }
        Ok(())
    }

    fn complement_spectral(&mut self, r: &mut VerificationReport, lo: usize, hi: usize) -> Step {
        let tol = self.config.tol;
        let fine = tol / 10.0;
        // Double stars T_{n-5,2} on n - 1 vertices.
        let mut worst: f64 = 0.0;
        for n in 18..=200usize {
            let closed = double_star_mu_for_order(n as u64);
            let eig = spectral_radius(&double_star(n - 5, 2)?, fine)?.mu;
            worst = worst.max((closed - eig).abs());
            let (s4, s5) = (((n - 4) as f64).sqrt(), ((n - 5) as f64).sqrt());
            if (closed - eig).abs() > tol || !(closed > s4 && s4 > s5) {
                r.discrepancy(n, g6(&double_star(n - 5, 2)?), format!("double star radius {closed} vs {eig}"));
            }
            // The complement of K_{n-1} plus a pendant edge is a star on n - 1 vertices.
            let k = Graph::complete(n - 1)?.pad(1)?.with_edge(0, n - 1)?;
            let mu = spectral_radius(&k.complement(), fine)?.mu;
            if (mu - ((n - 2) as f64).sqrt()).abs() > tol {
                r.discrepancy(n, g6(&k), format!("complement radius {mu}, expected sqrt(n - 2)"));
            }
        }
        r.row(18, 183, format!("double star T_(n-5,2) and star complements for n = 18..=200; max deviation {worst:.2e}"));
        let bad = (18..=1_000_000u64).filter(|&n| !complement_edge_bound_below(n)).count();
        if bad > 0 {
            r.discrepancy(0, "", format!("{bad} orders violate n(n-5)/(n-1) < n-4"));
        }
        r.row(18, 1_000_000 - 17, "n(n-5) < (n-4)(n-1) in integers for n = 18..=1000000");
        for n in 7..=40 {
            let g = complement_host(n, &star(n - 3)?)?;
            if !k_closure(&g, n).graph.is_complete() {
                r.discrepancy(n, g6(&star(n - 3)?), "n-closure of K_n minus S_{n-3} is not complete");
            }
        }
        r.row(7, 34, "closure of K_n minus S_{n-3} is complete for n = 7..=40");
        for n in lo..=hi {
            let c = self.census(n, n - 2)?;
            let visited = c.visited;
            let failures = closure_failures(c, tol)?;
            let limit = ((n - 5) as f64).sqrt();
            let mut hyp = 0;
            for f in c.non_embeddable.iter().filter(|g| g.size() + 2 <= n) {
                if spectral_radius(f, tol)?.mu <= limit + 10.0 * tol {
                    hyp += 1;
                }
            }
            for f in &failures {
                r.discrepancy(n, g6(f), "no C_n^2 and the n-closure is not complete");
            }
            r.row(
                n,
                visited,
                format!("{hyp} non-embeddable complements with radius <= sqrt(n-5); {} closure failures", failures.len()),
            );
        }
        Ok(())
    }

    fn edge_extremal(&mut self, r: &mut VerificationReport, lo: usize, hi: usize) -> Step {
        for n in lo..=hi {
            let t_limit = self.config.t_max.unwrap_or(n - 4);
            let rep = hamsquare::squareham::edge_extremal(n, t_limit, &self.config.budget())?;
            let Optimum::Edges(e) = rep.optimum else { unreachable!("edge objective") };
            let expected = match n {
                8 => 25,
                11 => 49,
                _ => (n - 1) * (n - 2) / 2 + 3,
            };
            if e != expected {
                r.discrepancy(n, "", format!("optimum {e}, expected {expected}"));
            }
            let h = self.h_family(n)?;
            let mut found = rep.extremal_complements.clone();
            found.adopt_names(&h);
            let a: Vec<&str> = found.codes().collect();
            let b: Vec<&str> = h.codes().collect();
            if a != b {
                for m in found.members().filter(|m| !h.contains_code(&m.code)) {
                    r.discrepancy(n, g6(&m.graph), "extremal complement outside H_n");
                }
                for m in h.members().filter(|m| !found.contains_code(&m.code)) {
                    r.discrepancy(n, g6(&m.graph), "member of H_n is not extremal");
                }
            }
            r.row(n, rep.instances_examined, format!("optimum {e} edges; complements {}", named(&found)));
        }
        Ok(())
    }

    fn vertex_lifting(&mut self, r: &mut VerificationReport, lo: usize, hi: usize) -> Step {
        for n in lo..=hi {
            let prev = SquareHamChecker::new(n - 1)?;
            let next = SquareHamChecker::new(n)?;
            let width = lift_width(n);
            let mut lifts = 0u64;
            let mut bases = 0u64;
            let mut bad: Vec<(Graph, String)> = Vec::new();
            let mut err = None;
            sweep_embeddings(prev.host(), n - 5, &self.config.budget(), |node, ok| {
                if !ok {
                    return Control::Skip;
                }
                bases += 1;
                let f = match node.graph().pad(n - 1 - node.order()) {
                    Ok(f) => f,
                    Err(e) => {
                        err = Some(e);
                        return Control::Skip;
                    }
                };
                let mut check = |fam: Result<GraphFamily, catalog::CatalogError>, what: &str| match fam {
                    Ok(fam) => {
                        for m in fam.members() {
                            lifts += 1;
                            match next.pattern_embeds(&m.graph) {
                                Ok(true) => {}
                                Ok(false) => bad.push((m.graph.clone(), format!("{what} lift of {}", g6(&f)))),
                                Err(e) => err = Some(e),
                            }
                        }
                    }
                    Err(catalog::CatalogError::Graph(e)) => err = Some(e),
                    Err(e) => err = Some(hamsquare::GraphError::InvalidParameters(e.to_string())),
                };
                check(lift_plus(&f), "single");
                if width >= 1 {
                    check(lift_plus_t(&LiftSpec { base: f.clone(), t: width }), "multiple");
                }
                Control::Descend
            })?;
            if let Some(e) = err {
                return Err(e.into());
            }
            for (g, what) in &bad {
                r.discrepancy(n, g6(g), format!("{what} does not embed"));
            }
            r.row(n, lifts, format!("{bases} embeddable bases with at most {} edges; t = {width}; {lifts} lifts", n - 5));
        }
        Ok(())
    }
}

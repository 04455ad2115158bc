use std::io::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hamsquare::catalog::{
    cycle, double_star, family, matching, parse_name, square_cycle_complement, star, FamilyId, FamilyKind,
};
use hamsquare::closure::complement_edge_bound_below;
use hamsquare::enumerate::{for_each_member, Budget};
use hamsquare::iso::{clique_number, embed_subgraph, is_isomorphic, IsolatedPolicy};
use hamsquare::spectral::{
    double_star_mu, hpoly_coefficients, hpoly_eval, hpoly_identity_check, hpoly_largest_root, spectral_radius,
    CharPolyParams, HPoly,
};
use hamsquare::squareham::{
    complement_host, contains_square_hamilton, edge_extremal, spectral_extremal, verify_witness, CandidateSource,
    Method, Optimum,
};
use hamsquare::{graph6, Graph, GraphFamily, Provenance};
use hamsquare_cli::{RunConfig, Session, Status, Target, VerificationReport};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn confirmed(r: &VerificationReport) -> Result<(), String> {
    ensure(r.status == Status::Confirmed, || {
        format!("{} is {:?}: {:?} {:?}", r.target, r.status, r.discrepancies, r.notices)
    })
}

fn perm_iso(g: &Graph, h: &Graph) -> bool {
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = map.len();
        if k == g.order() {
            return true;
        }
        for v in 0..h.order() {
            if used[v] || (0..k).any(|i| g.has_edge(i, k) != h.has_edge(map[i], v)) {
                continue;
            }
            used[v] = true;
            map.push(v);
            if go(g, h, map, used) {
                return true;
            }
            map.pop();
            used[v] = false;
        }
        false
    }
    g.order() == h.order() && g.size() == h.size() && go(g, h, &mut Vec::new(), &mut vec![false; h.order()])
}

fn largest_clique(g: &Graph) -> usize {
    fn grow(g: &Graph, clique: &mut Vec<usize>, from: usize, best: &mut usize) {
        *best = (*best).max(clique.len());
        for v in from..g.order() {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
                grow(g, clique, v + 1, best);
                clique.pop();
            }
        }
    }
    let mut best = 0;
    grow(g, &mut Vec::new(), 0, &mut best);
    best
}

fn criterion_1(_: &mut Session) -> Check {
    let six = square_cycle_complement(6).unwrap();
    let seven = square_cycle_complement(7).unwrap();
    let m3 = matching(3).unwrap();
    let c7 = cycle(7).unwrap();
    ensure(is_isomorphic(&six, &m3, IsolatedPolicy::Keep).unwrap(), || "C6^2 complement is not M3".into())?;
    ensure(is_isomorphic(&seven, &c7, IsolatedPolicy::Keep).unwrap(), || "C7^2 complement is not C7".into())?;
    ensure(perm_iso(&six, &m3) && perm_iso(&seven, &c7), || "permutation check disagrees".into())?;
    Ok("complement of C6^2 is M3, complement of C7^2 is C7".into())
}

fn criterion_2(s: &mut Session) -> Check {
    let r = s.run(Target::CliqueNumber).map_err(|e| e.to_string())?;
    confirmed(&r)?;
    ensure(r.rows.len() == 25, || format!("{} orders checked", r.rows.len()))?;
    for n in 6..=30 {
        let host = square_cycle_complement(n).unwrap();
        let w = largest_clique(&host);
        ensure(w == n / 3 && clique_number(&host).unwrap() == w, || format!("n = {n}: clique number {w}"))?;
    }
    Ok("25 orders, clique numbers checked by exhaustive search".into())
}

fn criterion_3(s: &mut Session) -> Check {
    let r = s.run(Target::EdgeExtremal).map_err(|e| e.to_string())?;
    confirmed(&r)?;
    let table = [13, 18, 25, 31, 39, 49, 58, 69];
    let mut got = Vec::new();
    for (n, want) in (6..=13).zip(table) {
        let rep = edge_extremal(n, n - 4, &Budget::unlimited()).map_err(|e| e.to_string())?;
        let Optimum::Edges(e) = rep.optimum else { return Err("wrong objective".into()) };
        let formula = if n == 8 || n == 11 { want } else { (n - 1) * (n - 2) / 2 + 3 };
        ensure(e == want && e == formula, || format!("n = {n}: {e} edges, expected {want}"))?;
        let h = family(FamilyId::new(FamilyKind::H, n).unwrap(), None).unwrap();
        let a: Vec<&str> = rep.extremal_complements.codes().collect();
        let b: Vec<&str> = h.codes().collect();
        ensure(a == b, || format!("n = {n}: extremal complements differ from H_n"))?;
        for m in rep.extremal_complements.members() {
            let g = complement_host(n, &m.graph).unwrap();
            ensure(g.size() == e, || format!("n = {n}: edge count mismatch"))?;
            let direct = contains_square_hamilton(&g, Method::DirectSearch).unwrap();
            ensure(!direct.contains, || format!("n = {n}: extremal graph contains C_n^2"))?;
        }
        got.push(e);
    }
    Ok(format!("optima {got:?}"))
}

fn criterion_4(s: &mut Session) -> Check {
    let a = s.run(Target::SmallCores).map_err(|e| e.to_string())?;
    confirmed(&a)?;
    let b = s.run(Target::DenseCores).map_err(|e| e.to_string())?;
    confirmed(&b)?;
    let config = RunConfig { n_min: Some(10), n_max: Some(10), gadgets: Some("".into()), ..RunConfig::default() };
    let c = Session::new(config).map_err(|e| e.to_string())?.run(Target::DenseCores).map_err(|e| e.to_string())?;
    ensure(c.status == Status::Partial && c.discrepancies.is_empty(), || {
        format!("without gadgets: {:?} {:?}", c.status, c.discrepancies)
    })?;
    let notice = c.notices.iter().find(|n| n.contains("G1")).ok_or("no notice for G1")?;
    let code = notice.rsplit(' ').next().unwrap();
    let audit = graph6::decode_str(code).map_err(|e| e.to_string())?;
    let bundled = hamsquare::catalog::bundled_gadgets();
    let g1 = bundled.get("G1").ok_or("bundled G1 missing")?;
    ensure(is_isomorphic(&audit, g1, IsolatedPolicy::Drop).unwrap(), || "emitted G1 differs from bundled".into())?;
    Ok(format!(
        "{} + {} graphs classified; without gadgets G1 is matched by count as {code}",
        a.instances_checked, b.instances_checked
    ))
}

fn criterion_5(s: &mut Session) -> Check {
    let r = s.run(Target::StarCore).map_err(|e| e.to_string())?;
    confirmed(&r)?;
    let sizes: Vec<u64> = r.rows.iter().map(|x| x.checked).collect();
    ensure(sizes.len() == 3, || "expected n = 15, 16, 17".into())?;
    Ok(format!("|K(n, n-3)| = {sizes:?}"))
}

/// Largest eigenvalue of `K_n \ E(S_{n-3})` from its three-cell equitable
/// partition: the star centre, its leaves, and the three remaining vertices.
fn star_deleted_mu(n: usize) -> f64 {
    let n = n as f64;
    let q = [[0.0, 0.0, 3.0], [0.0, n - 5.0, 3.0], [1.0, n - 4.0, 2.0]];
    let mut x = [1.0f64; 3];
    let mut mu = 0.0;
    for _ in 0..10_000 {
        let y: Vec<f64> = (0..3).map(|i| (0..3).map(|j| q[i][j] * x[j]).sum()).collect();
        let norm = y.iter().cloned().fold(0.0, f64::max);
        mu = norm / x.iter().cloned().fold(0.0, f64::max);
        for i in 0..3 {
            x[i] = y[i] / norm;
        }
    }
    mu
}

fn criterion_6(s: &mut Session) -> Check {
    let start = Instant::now();
    for t in [Target::StarCoreDense, Target::EdgeThreshold, Target::SpectralMaximizer] {
        let r = s.run(t).map_err(|e| e.to_string())?;
        confirmed(&r)?;
    }
    let full = start.elapsed();
    ensure(full < Duration::from_secs(3600), || format!("full sweep took {full:?}"))?;
    let n = 18;
    let mut y = GraphFamily::new("Y");
    for name in ["S15", "S14∪S4", "S14∪K3"] {
        y.insert(Some(name), parse_name(name).unwrap(), Provenance::Constructed).unwrap();
    }
    let t0 = Instant::now();
    let quick = spectral_extremal(n, 1e-9, CandidateSource::CoreGrowth(&y)).map_err(|e| e.to_string())?;
    let shortcut = t0.elapsed();
    ensure(shortcut < Duration::from_secs(300), || format!("core growth took {shortcut:?}"))?;
    let s15 = star(15).unwrap();
    ensure(quick.extremal_complements.len() == 1 && quick.extremal_complements.contains(&s15).unwrap(), || {
        "core growth maximiser is not S15".into()
    })?;
    let Optimum::Mu(mu) = quick.optimum else { return Err("wrong objective".into()) };
    let oracle = star_deleted_mu(n);
    ensure(mu > 16.0 && (mu - oracle).abs() < 1e-8, || format!("mu = {mu}, partition value {oracle}"))?;
    let mut margins = Vec::new();
    for name in ["S14∪S4", "S14∪K3"] {
        let other = spectral_radius(&complement_host(n, &parse_name(name).unwrap()).unwrap(), 1e-10).unwrap().mu;
        ensure(mu - other > 1e-6, || format!("margin over {name} is {}", mu - other))?;
        margins.push(mu - other);
    }
    Ok(format!(
        "mu = {mu:.12}, margins {:.4} / {:.4}; full sweep {:.0} s, core growth {:.2} s",
        margins[0],
        margins[1],
        full.as_secs_f64(),
        shortcut.as_secs_f64()
    ))
}

fn criterion_7(_: &mut Session) -> Check {
    for n in 2..=64 {
        let s = spectral_radius(&star(n).unwrap(), 1e-10).unwrap().mu;
        let k = spectral_radius(&Graph::complete(n).unwrap(), 1e-10).unwrap().mu;
        ensure((s - ((n - 1) as f64).sqrt()).abs() <= 1e-9, || format!("star {n}: {s}"))?;
        ensure((k - (n - 1) as f64).abs() <= 1e-9, || format!("complete {n}: {k}"))?;
    }
    let mut worst: f64 = 0.0;
    for a in 1..=50 {
        for b in 1..=50 {
            let eig = spectral_radius(&double_star(a, b).unwrap(), 1e-10).unwrap().mu;
            let closed = double_star_mu(a as u64, b as u64);
            // The radius is the largest root of x^4 - (a + b + 1) x^2 + ab.
            let x2 = closed * closed;
            let f = x2 * x2 - (a + b + 1) as f64 * x2 + (a * b) as f64;
            worst = worst.max((eig - closed).abs());
            ensure((eig - closed).abs() <= 1e-9 && f.abs() < 1e-7 * x2 * x2, || format!("T({a},{b}): {eig} vs {closed}"))?;
        }
    }
    let mut points = 0;
    for a in 1..=10u64 {
        for b in 1..=10u64 {
            for c in 1..=10u64 {
                let rg = hpoly_largest_root(HPoly::G, a, b, c).ok_or("g has no real root")?;
                let rh = hpoly_largest_root(HPoly::H, a, b, c).ok_or("h has no real root")?;
                ensure(rh <= rg, || format!("root(h) {rh} > root(g) {rg} at ({a},{b},{c})"))?;
                let p = CharPolyParams { a, b, c, lambda: rg };
                ensure(hpoly_identity_check(p).abs() <= 1e-12, || format!("identity fails at ({a},{b},{c})"))?;
                let (g, h) = (hpoly_eval(HPoly::G, p), hpoly_eval(HPoly::H, p));
                let direct = g - h + rg * (2.0 * c as f64 - 1.0 + 2.0 * rg);
                let scale = 1.0 + hpoly_coefficients(HPoly::H, a, b, c).iter().map(|&v| v.abs() as f64).sum::<f64>()
                    * rg.abs().max(1.0).powi(5);
                ensure(direct.abs() <= 1e-12 * scale, || format!("g - h differs at ({a},{b},{c}): {direct}"))?;
                points += 1;
            }
        }
    }
    Ok(format!("double star max deviation {worst:.2e}; {points} grid points"))
}

/// Closure computed by repeated full scans.
fn naive_closure_complete(g: &Graph, k: usize) -> bool {
    let n = g.order();
    let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    loop {
        let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
        let mut changed = false;
        for u in 0..n {
            for v in u + 1..n {
                if !adj[u][v] && deg[u] + deg[v] >= k {
                    adj[u][v] = true;
                    adj[v][u] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return adj.iter().enumerate().all(|(u, r)| r.iter().enumerate().all(|(v, &x)| x || u == v));
        }
    }
}

fn criterion_8(s: &mut Session) -> Check {
    let r = s.run(Target::ComplementSpectral).map_err(|e| e.to_string())?;
    confirmed(&r)?;
    for n in 18..=1_000_000u64 {
        // floor(n(n-5)/(n-1)) < n-4 implies n(n-5)/(n-1) < n-4.
        let q = n * (n - 5) / (n - 1);
        ensure(q < n - 4, || format!("n = {n}"))?;
        ensure(complement_edge_bound_below(n), || format!("library bound fails at {n}"))?;
    }
    for n in 7..=40 {
        let g = complement_host(n, &star(n - 3).unwrap()).unwrap();
        ensure(naive_closure_complete(&g, n), || format!("closure incomplete at n = {n}"))?;
    }
    Ok(format!("{} instances", r.instances_checked))
}

fn criterion_9(_: &mut Session) -> Check {
    let mut total = 0u64;
    let mut positive = 0u64;
    let mut fail = None;
    for t in 0..=28 {
        for_each_member(8, t, &Budget::unlimited(), |node| {
            let g = node.graph().pad(8 - node.order()).unwrap();
            total += 1;
            let a = contains_square_hamilton(&g, Method::ComplementEmbedding).unwrap();
            let b = contains_square_hamilton(&g, Method::DirectSearch).unwrap();
            if a.contains {
                positive += 1;
            }
            let witnesses_ok = [&a, &b].iter().all(|r| r.witness.as_ref().map_or(!r.contains, |w| verify_witness(&g, w)));
            if (a.contains != b.contains || !witnesses_ok) && fail.is_none() {
                fail = Some(graph6::encode(&g));
            }
        })
        .unwrap();
    }
    ensure(fail.is_none(), || format!("methods disagree on {}", fail.clone().unwrap()))?;
    ensure(total == 12346, || format!("{total} graphs of order 8"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut random_pos = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(9..=14);
        let p: f64 = rng.gen_range(0.55..0.97);
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
        let g = Graph::new(n, edges).unwrap();
        let a = contains_square_hamilton(&g, Method::ComplementEmbedding).unwrap();
        let b = contains_square_hamilton(&g, Method::DirectSearch).unwrap();
        ensure(a.contains == b.contains, || format!("methods disagree on {}", graph6::encode(&g)))?;
        if a.contains {
            random_pos += 1;
        }
    }
    Ok(format!("order 8: {total} graphs, {positive} contain C_8^2; random: {random_pos} of 10000 contain it"))
}

fn criterion_10(s: &mut Session) -> Check {
    let r = s.run(Target::VertexLifting).map_err(|e| e.to_string())?;
    confirmed(&r)?;
    let mut lifts = 0;
    for n in 7..=9 {
        let prev = square_cycle_complement(n - 1).unwrap();
        let host = square_cycle_complement(n).unwrap();
        for t in 0..=n - 5 {
            let mut bad = None;
            for_each_member(n - 1, t, &Budget::unlimited(), |node| {
                let f = node.graph().pad(n - 1 - node.order()).unwrap();
                if !embed_subgraph(&f, &prev).unwrap().is_present() {
                    return;
                }
                let base = f.pad(1).unwrap();
                for x in 0..n - 1 {
                    lifts += 1;
                    let g = base.with_edge(x, n - 1).unwrap();
                    if !embed_subgraph(&g, &host).unwrap().is_present() {
                        bad = Some(graph6::encode(&g));
                    }
                }
            })
            .unwrap();
            ensure(bad.is_none(), || format!("n = {n}: lift {} does not embed", bad.clone().unwrap()))?;
        }
    }
    Ok(format!("{} lifts; {lifts} single lifts rechecked directly for n = 7..9", r.instances_checked))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn(&mut Session) -> Check); 10] = [
        ("complement identities", criterion_1),
        ("clique number of the complement", criterion_2),
        ("edge-extremal table", criterion_3),
        ("minimal cores with at most n-3 and n-2 edges", criterion_4),
        ("star core at n-3 edges", criterion_5),
        ("order 18: cores, edge threshold, spectral maximiser", criterion_6),
        ("spectral identities", criterion_7),
        ("complement radius numerics and implication", criterion_8),
        ("square Hamiltonicity oracles agree", criterion_9),
        ("vertex lifting", criterion_10),
    ];
    let mut session = Session::new(RunConfig::default()).expect("default config");
    let mut failed = 0;
    let mut err = std::io::stderr();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| f(&mut session)))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panic".into())));
        let secs = start.elapsed().as_secs_f64();
        let line = match outcome {
            Ok(detail) => format!("PASS criterion {} ({name}): {detail} [{secs:.1} s]", i + 1),
            Err(detail) => {
                failed += 1;
                format!("FAIL criterion {} ({name}): {detail} [{secs:.1} s]", i + 1)
            }
        };
        let _ = writeln!(err, "{line}");
    }
    let _ = writeln!(err, "{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

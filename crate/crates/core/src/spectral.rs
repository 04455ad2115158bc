//! Adjacency spectral radius, degree-based eigenvalue bounds and the
//! characteristic polynomials of the double-star-like graphs `H1`, `H2`, `H3`.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Default absolute tolerance for eigenvalue estimates.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Largest component order handed to the dense eigensolver.
pub const DENSE_LIMIT: usize = 256;

const MAX_ITERATIONS: usize = 4000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("no convergence: best estimate {best} with bracket width {width}")]
    NoConvergence { best: f64, width: f64 },
    #[error("the bound needs a connected graph")]
    Disconnected,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub mu: f64,
    /// Bound on `|mu - true radius|`.
    pub tol: f64,
    /// `sqrt(2m - n + 1)`, present only for connected graphs.
    pub upper_bound: Option<f64>,
    /// `sqrt(sum d^2 / n)`.
    pub lower_bound: f64,
    pub connected: bool,
    pub regular: bool,
    /// Degrees `(r1, r2)`, `r1 < r2`, when every component is bipartite with
    /// one side of degree `r1` and the other of degree `r2`.
    pub biregular: Option<(usize, usize)>,
}

/// Largest adjacency eigenvalue of `g` to within `tol`.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult, SpectralError> {
    if !(tol > 0.0) {
        return Err(SpectralError::BadTolerance(tol));
    }
    let comps = g.components();
    let mut mu: f64 = 0.0;
    let mut err: f64 = 0.0;
    for comp in comps.iter().filter(|c| c.len() > 1) {
        let (m, e) = component_radius(&g.induced(comp).expect("component vertices are in range"), tol)?;
        if m > mu {
            mu = m;
            err = e;
        }
    }
    let stats = g.degree_stats();
    let connected = g.is_connected();
    Ok(SpectralResult {
        mu,
        tol: err,
        upper_bound: if connected { Some(upper_value(g)) } else { None },
        lower_bound: bound_lower(g),
        connected,
        regular: g.order() > 0 && stats.min_degree == stats.max_degree,
        biregular: biregular(g),
    })
}

/// Power iteration on `A + I` with a Collatz-Wielandt bracket; returns the
/// midpoint and half the bracket width.
fn component_radius(g: &Graph, tol: f64) -> Result<(f64, f64), SpectralError> {
    let n = g.order();
    if g.is_complete() {
        return Ok(((n - 1) as f64, 0.0));
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|u| g.neighbors(u).collect()).collect();
    let mut x = vec![1.0f64; n];
    let mut y = vec![0.0f64; n];
    let mut best = (0.0, f64::INFINITY);
    for _ in 0..MAX_ITERATIONS {
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        let mut norm = 0.0;
        for u in 0..n {
            let s: f64 = nbrs[u].iter().map(|&w| x[w]).sum();
            let r = s / x[u];
            lo = lo.min(r);
            hi = hi.max(r);
            y[u] = s + x[u];
            norm += y[u] * y[u];
        }
        let mid = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo) + 4.0 * f64::EPSILON * hi.max(1.0);
        if half < best.1 {
            best = (mid, half);
        }
        if half <= tol {
            return Ok(best);
        }
        let norm = norm.sqrt();
        for u in 0..n {
            x[u] = y[u] / norm;
        }
    }
    if n <= DENSE_LIMIT {
        let mut a = DMatrix::<f64>::zeros(n, n);
        for (u, row) in nbrs.iter().enumerate() {
            for &w in row {
                a[(u, w)] = 1.0;
            }
        }
        let eig = SymmetricEigen::new(a);
        let mu = eig.eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let err = 64.0 * f64::EPSILON * (n as f64);
        if err <= tol {
            return Ok((mu, err));
        }
    }
    Err(SpectralError::NoConvergence { best: best.0, width: 2.0 * best.1 })
}

fn upper_value(g: &Graph) -> f64 {
    let v = 2.0 * g.size() as f64 - g.order() as f64 + 1.0;
    v.max(0.0).sqrt()
}

/// `sqrt(2m - n + 1)`, an upper bound on the radius of a connected graph.
pub fn bound_upper(g: &Graph) -> Result<f64, SpectralError> {
    if !g.is_connected() {
        return Err(SpectralError::Disconnected);
    }
    Ok(upper_value(g))
}

/// `sqrt(sum d(u)^2 / n)`, a lower bound on the radius.
pub fn bound_lower(g: &Graph) -> f64 {
    if g.order() == 0 {
        return 0.0;
    }
    (g.degree_stats().sum_of_squares as f64 / g.order() as f64).sqrt()
}

fn biregular(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    let mut pair: Option<(usize, usize)> = None;
    for s in 0..n {
        if side[s] != u8::MAX || g.degree(s) == 0 {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        let mut degs = [None::<usize>; 2];
        while let Some(u) = stack.pop() {
            let d = g.degree(u);
            let k = side[u] as usize;
            match degs[k] {
                None => degs[k] = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
            for w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
        let (a, b) = (degs[0]?, degs[1]?);
        let p = (a.min(b), a.max(b));
        if p.0 == p.1 || pair.is_some_and(|q| q != p) {
            return None;
        }
        pair = Some(p);
    }
    pair
}

/// Closed-form radius of the double star `T_{a,b}`.
pub fn double_star_mu(a: u64, b: u64) -> f64 {
    let (a, b) = (a as f64, b as f64);
    let s = a + b;
    (2.0 + 2.0 * s + 2.0 * (2.0 * s + 1.0 + (a - b) * (a - b)).sqrt()).sqrt() / 2.0
}

/// Radius of `T_{n-5,2}`, the double star on `n - 1` vertices used in the
/// closure argument.
pub fn double_star_mu_for_order(n: u64) -> f64 {
    double_star_mu(n - 5, 2)
}

/// Which of the three characteristic polynomial factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HPoly {
    /// `λ^4 - (a + b + 1) λ^2 + ab`
    F,
    /// `λ^5 - (a + b + 2c + 1) λ^3 - 2c λ^2 + (ab + ac + bc) λ`
    G,
    /// `λ^5 - (a + b + 2c + 1) λ^3 - (2c - 2) λ^2 + (ab + ac + bc + 2c - 1) λ`
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharPolyParams {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub lambda: f64,
}

/// Integer coefficients, lowest degree first.
pub fn hpoly_coefficients(which: HPoly, a: u64, b: u64, c: u64) -> [i128; 6] {
    let (a, b, c) = (a as i128, b as i128, c as i128);
    match which {
        HPoly::F => [a * b, 0, -(a + b + 1), 0, 1, 0],
        HPoly::G => [0, a * b + a * c + b * c, -2 * c, -(a + b + 2 * c + 1), 0, 1],
        HPoly::H => [0, a * b + a * c + b * c + 2 * c - 1, -(2 * c - 2), -(a + b + 2 * c + 1), 0, 1],
    }
}

fn horner(coeffs: &[i128], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
}

pub fn hpoly_eval(which: HPoly, p: CharPolyParams) -> f64 {
    horner(&hpoly_coefficients(which, p.a, p.b, p.c), p.lambda)
}

/// `g(λ) - h(λ) + λ(2c - 1 + 2λ)`, formed coefficient-wise and then
/// evaluated; zero exactly when the difference identity holds.
pub fn hpoly_identity_check(p: CharPolyParams) -> f64 {
    let g = hpoly_coefficients(HPoly::G, p.a, p.b, p.c);
    let h = hpoly_coefficients(HPoly::H, p.a, p.b, p.c);
    let c = p.c as i128;
    let mut r = [0i128; 6];
    for i in 0..6 {
        r[i] = g[i] - h[i];
    }
    r[1] += 2 * c - 1;
    r[2] += 2;
    horner(&r, p.lambda)
}

/// Largest real root of the given factor.
pub fn hpoly_largest_root(which: HPoly, a: u64, b: u64, c: u64) -> Option<f64> {
    let coeffs: Vec<f64> = hpoly_coefficients(which, a, b, c).iter().map(|&v| v as f64).collect();
    real_roots(&coeffs).last().copied()
}

fn trim(coeffs: &[f64]) -> &[f64] {
    let mut d = coeffs.len();
    while d > 0 && coeffs[d - 1] == 0.0 {
        d -= 1;
    }
    &coeffs[..d]
}

fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Sorted real roots of a polynomial (coefficients lowest degree first),
/// isolated between the roots of its derivative and refined by bisection.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let p = trim(coeffs);
    if p.len() <= 1 {
        return Vec::new();
    }
    let d = p.len() - 1;
    let lead = p[d];
    let bound = 1.0 + p[..d].iter().map(|c| (c / lead).abs()).fold(0.0, f64::max);
    let deriv: Vec<f64> = (1..=d).map(|i| p[i] * i as f64).collect();
    let mut cuts = vec![-bound];
    cuts.extend(real_roots(&deriv).into_iter().filter(|x| x.abs() < bound));
    cuts.push(bound);
    let mut roots: Vec<f64> = Vec::new();
    for w in cuts.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (eval(p, lo), eval(p, hi));
        if flo == 0.0 {
            if roots.last() != Some(&lo) {
                roots.push(lo);
            }
            continue;
        }
        if fhi == 0.0 || (flo < 0.0) == (fhi < 0.0) {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = eval(p, mid);
            if fm == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if (fm < 0.0) == (flo < 0.0) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    if eval(p, bound) == 0.0 {
        roots.push(bound);
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_star() {
        for n in 2..20 {
            let k = Graph::complete(n).unwrap();
            assert!((spectral_radius(&k, DEFAULT_TOL).unwrap().mu - (n - 1) as f64).abs() < 1e-9);
            let s = Graph::new(n, (1..n).map(|i| (0, i))).unwrap();
            let r = spectral_radius(&s, DEFAULT_TOL).unwrap();
            assert!((r.mu - ((n - 1) as f64).sqrt()).abs() < 1e-9, "n = {n}: {}", r.mu);
        }
    }

    #[test]
    fn path_on_four() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = spectral_radius(&p4, DEFAULT_TOL).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((r.mu - golden).abs() < 1e-9);
        assert!((r.lower_bound - 2.5f64.sqrt()).abs() < 1e-12);
        assert!((double_star_mu(1, 1) - golden).abs() < 1e-12);
        assert!((hpoly_largest_root(HPoly::F, 1, 1, 0).unwrap() - golden).abs() < 1e-12);
        assert_eq!(r.biregular, None);
    }

    #[test]
    fn bound_requires_connectivity() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(bound_upper(&g), Err(SpectralError::Disconnected));
        assert!(spectral_radius(&g, 0.0).is_err());
    }

    #[test]
    fn biregular_flag() {
        let k23 = Graph::empty(2).unwrap().join(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(spectral_radius(&k23, DEFAULT_TOL).unwrap().biregular, Some((2, 3)));
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let r = spectral_radius(&c6, DEFAULT_TOL).unwrap();
        assert!(r.regular && r.biregular.is_none());
    }

    #[test]
    fn roots_of_known_polynomials() {
        // (x - 1)(x - 2)(x + 3) = x^3 - 7x + 6
        let r = real_roots(&[6.0, -7.0, 0.0, 1.0]);
        assert_eq!(r.len(), 3);
        for (got, want) in r.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        assert!(real_roots(&[1.0, 0.0, 1.0]).is_empty());
        assert_eq!(hpoly_eval(HPoly::F, CharPolyParams { a: 3, b: 4, c: 0, lambda: 0.0 }), 12.0);
    }
}

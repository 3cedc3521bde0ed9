//! Spectral radius via shifted power iteration, Rayleigh quotients, and the
//! two deletion lemmas built on the Perron vector.
//!
//! The iteration applies `A + sI` with adaptive shift `s = max(1, mu_est)`.
//! The shift keeps all shifted eigenvalues nonnegative, which makes the
//! iteration converge on bipartite graphs where `-mu` would otherwise make
//! plain power iteration oscillate. The start vector is uniform, so the whole
//! computation is deterministic. Convergence is certified by the residual
//! `||Ax - mu x||_inf <= tol * max(1, mu)`; after that threshold is met a
//! short polish phase pushes the residual lower so that entries on
//! components not achieving the spectral radius decay below `tol`.

use crate::graph::Graph;
use crate::verify::Outcome;

/// Uniform additive tolerance used by every inequality check in the crate:
/// a slack of at least `-SLACK_TOL` counts as holding.
pub const SLACK_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralOptions {
    /// Residual threshold scale: converged when
    /// `||Ax - mu x||_inf <= tol * max(1, mu)`.
    pub tol: f64,
    /// Hard cap on matrix-vector products.
    pub max_iter: usize,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions { tol: 1e-10, max_iter: 1_000_000 }
    }
}

/// Output of the eigensolver: the spectral radius estimate and a unit
/// nonnegative eigenvector estimate.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    pub mu: f64,
    /// Unit 2-norm, entrywise nonnegative. On disconnected graphs the mass
    /// sits on the components achieving the spectral radius; entries
    /// elsewhere end below `tol` once converged.
    pub vector: Vec<f64>,
    /// Matrix-vector products performed.
    pub iterations: usize,
    /// `||Ax - mu x||_inf` at exit.
    pub residual: f64,
    /// Whether the residual threshold was met within `max_iter`.
    pub converged: bool,
}

impl SpectralResult {
    /// Minimum vector entry and its vertex; ties resolve to the smallest
    /// index. `None` only for the empty graph.
    pub fn min_entry(&self) -> Option<(usize, f64)> {
        let mut best: Option<(usize, f64)> = None;
        for (u, &x) in self.vector.iter().enumerate() {
            if best.map_or(true, |(_, b)| x < b) {
                best = Some((u, x));
            }
        }
        best
    }
}

/// `x' A x / x' x`; zero for the zero vector. Never exceeds the spectral
/// radius.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> f64 {
    assert_eq!(x.len(), g.order(), "vector length must match graph order");
    let mut num = 0.0;
    let mut den = 0.0;
    for u in 0..g.order() {
        let mut row = 0.0;
        for &v in g.neighbors(u) {
            row += x[v];
        }
        num += x[u] * row;
        den += x[u] * x[u];
    }
    if den == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Spectral radius from the uniform start vector.
pub fn spectral_radius(g: &Graph, opts: &SpectralOptions) -> SpectralResult {
    power_iterate(g, opts, None)
}

/// Spectral radius from a caller-supplied start vector, used to warm-start
/// after vertex deletions. Negative entries are clamped to zero; a zero or
/// length-mismatched start falls back to uniform.
pub fn spectral_radius_warm(g: &Graph, opts: &SpectralOptions, start: &[f64]) -> SpectralResult {
    power_iterate(g, opts, Some(start))
}

fn power_iterate(g: &Graph, opts: &SpectralOptions, start: Option<&[f64]>) -> SpectralResult {
    let n = g.order();
    if n == 0 {
        return SpectralResult { mu: 0.0, vector: vec![], iterations: 0, residual: 0.0, converged: true };
    }
    let uniform = 1.0 / (n as f64).sqrt();
    if g.edge_count() == 0 {
        // The zero matrix: every vector is an eigenvector for 0.
        return SpectralResult {
            mu: 0.0,
            vector: vec![uniform; n],
            iterations: 0,
            residual: 0.0,
            converged: true,
        };
    }

    let mut x = match start {
        Some(s) if s.len() == n => {
            let mut x: Vec<f64> = s.iter().map(|&v| v.max(0.0)).collect();
            let norm = norm2(&x);
            if norm > 0.0 {
                // Mix in a little uniform mass so a warm start that died on
                // the new dominant component still overlaps it.
                for v in x.iter_mut() {
                    *v = *v / norm + 1e-3 * uniform;
                }
                let norm = norm2(&x);
                for v in x.iter_mut() {
                    *v /= norm;
                }
                x
            } else {
                vec![uniform; n]
            }
        }
        _ => vec![uniform; n],
    };

    let mut z = vec![0.0; n];
    let mut iterations = 0;
    let mut mu;
    let mut residual;
    let mut polish_left = 200usize;
    loop {
        // z = A x; one matvec per loop turn feeds the Rayleigh quotient,
        // the residual, and the next iterate.
        for u in 0..n {
            let mut row = 0.0;
            for &v in g.neighbors(u) {
                row += x[v];
            }
            z[u] = row;
        }
        iterations += 1;
        mu = x.iter().zip(&z).map(|(a, b)| a * b).sum::<f64>();
        residual = x
            .iter()
            .zip(&z)
            .map(|(&xi, &zi)| (zi - mu * xi).abs())
            .fold(0.0, f64::max);
        let threshold = opts.tol * mu.max(1.0);
        let done = residual <= threshold;
        if done {
            // Polish: push toward a 100x tighter residual so entries off
            // the dominant components fall below tol.
            if residual <= threshold / 100.0 || polish_left == 0 {
                return SpectralResult { mu, vector: x, iterations, residual, converged: true };
            }
            polish_left -= 1;
        }
        if iterations >= opts.max_iter {
            return SpectralResult { mu, vector: x, iterations, residual, converged: done };
        }
        let s = mu.max(1.0);
        for u in 0..n {
            z[u] += s * x[u];
        }
        let norm = norm2(&z);
        for u in 0..n {
            x[u] = z[u] / norm;
        }
    }
}

fn norm2(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Lemma 1 bound: for a graph of order `n` with minimum degree `delta` and
/// spectral radius `mu`, the smallest entry of any unit nonnegative
/// eigenvector for `mu` is at most
/// `sqrt(delta / (mu^2 + delta * (n - delta)))`.
/// `None` when the denominator vanishes (`mu = 0` and `delta = 0`).
///
/// Equality holds for regular graphs (where the bound is `1/sqrt(n)`) and
/// for stars.
pub fn lemma1_bound(mu: f64, n: usize, delta: usize) -> Option<f64> {
    let d = delta as f64;
    let den = mu * mu + d * ((n as f64) - d);
    if den <= 0.0 {
        return None;
    }
    Some((d / den).sqrt())
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Lemma1Check {
    pub n: usize,
    pub mu: f64,
    pub min_degree: usize,
    /// Vertex holding the smallest Perron entry (smallest index on ties).
    pub min_vertex: usize,
    pub min_entry: f64,
    /// `None` exactly when the bound is not applicable.
    pub bound: Option<f64>,
    /// `bound - min_entry`; nonnegative (up to `SLACK_TOL`) when the bound
    /// holds.
    pub slack: Option<f64>,
    pub outcome: Outcome,
}

/// Checks the Lemma 1 bound against the computed Perron vector.
pub fn lemma1_check(g: &Graph, opts: &SpectralOptions) -> Lemma1Check {
    lemma1_check_with(g, &spectral_radius(g, opts))
}

/// Same check reusing an existing eigensolve.
pub fn lemma1_check_with(g: &Graph, sp: &SpectralResult) -> Lemma1Check {
    let n = g.order();
    if n == 0 {
        return Lemma1Check {
            n,
            mu: 0.0,
            min_degree: 0,
            min_vertex: 0,
            min_entry: 0.0,
            bound: None,
            slack: None,
            outcome: Outcome::NotApplicable,
        };
    }
    let delta = g.min_degree().expect("n >= 1");
    let (min_vertex, min_entry) = sp.min_entry().expect("n >= 1");
    match lemma1_bound(sp.mu, n, delta) {
        None => Lemma1Check {
            n,
            mu: sp.mu,
            min_degree: delta,
            min_vertex,
            min_entry,
            bound: None,
            slack: None,
            outcome: Outcome::NotApplicable,
        },
        Some(bound) => {
            let slack = bound - min_entry;
            let outcome = if slack >= -SLACK_TOL { Outcome::Pass } else { Outcome::Fail };
            Lemma1Check {
                n,
                mu: sp.mu,
                min_degree: delta,
                min_vertex,
                min_entry,
                bound: Some(bound),
                slack: Some(slack),
                outcome,
            }
        }
    }
}

/// Lemma 2 right-hand side: deleting a vertex `u` whose unit Perron entry is
/// `x_u` from a graph with spectral radius `mu` and order `n >= 2` leaves
/// `mu(G - u) / (n - 1)` at least
/// `(mu / n) * (1 + (1 - n x_u^2 - 1/(n-1)) / (n-1))`.
///
/// With `c = 1 - n x_u^2` (nonnegative at a minimum entry), the factor reads
/// `1 + (c - 1/(n-1)) / (n-1)`: the density `mu/n` drops by at most a
/// second-order term when the deleted entry is small.
pub fn lemma2_rhs(mu: f64, n: usize, x_u: f64) -> f64 {
    assert!(n >= 2, "lemma2_rhs needs n >= 2");
    let nf = n as f64;
    let c = 1.0 - nf * x_u * x_u;
    (mu / nf) * (1.0 + (c - 1.0 / (nf - 1.0)) / (nf - 1.0))
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Lemma2Check {
    pub n: usize,
    pub mu: f64,
    /// Deleted vertex: the one with the smallest Perron entry.
    pub deleted_vertex: usize,
    /// Perron entry of the deleted vertex.
    pub entry: f64,
    /// `1 - n * entry^2`.
    pub c: f64,
    /// Spectral radius of the graph minus the deleted vertex.
    pub mu_sub: f64,
    /// `mu_sub / (n - 1)`.
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`; zero for complete graphs.
    pub slack: f64,
    pub outcome: Outcome,
}

/// Checks the Lemma 2 deletion bound at the minimum-entry vertex.
pub fn lemma2_check(g: &Graph, opts: &SpectralOptions) -> Lemma2Check {
    lemma2_check_with(g, &spectral_radius(g, opts), opts)
}

/// Same check reusing an existing eigensolve of `g`.
pub fn lemma2_check_with(g: &Graph, sp: &SpectralResult, opts: &SpectralOptions) -> Lemma2Check {
    let n = g.order();
    if n < 2 {
        return Lemma2Check {
            n,
            mu: sp.mu,
            deleted_vertex: 0,
            entry: 0.0,
            c: 0.0,
            mu_sub: 0.0,
            lhs: 0.0,
            rhs: 0.0,
            slack: 0.0,
            outcome: Outcome::NotApplicable,
        };
    }
    let (u, x_u) = sp.min_entry().expect("n >= 2");
    let (sub, _) = g.delete_vertex(u).expect("u < n");
    let mut warm: Vec<f64> = Vec::with_capacity(n - 1);
    warm.extend(sp.vector.iter().enumerate().filter(|&(v, _)| v != u).map(|(_, &x)| x));
    let sub_sp = spectral_radius_warm(&sub, opts, &warm);
    let lhs = sub_sp.mu / ((n - 1) as f64);
    let rhs = lemma2_rhs(sp.mu, n, x_u);
    let slack = lhs - rhs;
    Lemma2Check {
        n,
        mu: sp.mu,
        deleted_vertex: u,
        entry: x_u,
        c: 1.0 - (n as f64) * x_u * x_u,
        mu_sub: sub_sp.mu,
        lhs,
        rhs,
        slack,
        outcome: if slack >= -SLACK_TOL { Outcome::Pass } else { Outcome::Fail },
    }
}

//! The iterated minimum-entry vertex-deletion procedure and its
//! dense-subgraph conclusion.
//!
//! Given parameters `alpha, beta, gamma, K` and a graph whose spectral
//! radius is large (`mu > gamma*n - K/n`) while its minimum degree is small
//! (`delta <= (gamma - alpha)*n`), repeatedly deleting the vertex with the
//! smallest Perron entry while `delta(G_k) <= (gamma - alpha)(n - k)` and
//! `k < floor(beta*n)` ends at an induced subgraph `H` with
//! `|H| >= (1 - beta)n` satisfying one of:
//!
//! - (i) `k = floor(beta*n)` and `mu(H) > gamma*(1 + beta*alpha/2)*|H|`, or
//! - (ii) `mu(H) > gamma*|H|` and `delta(H) > (gamma - alpha)*|H|`.
//!
//! Along the way the normalized spectral radius never drops: at every step
//! `mu(G_i)/(n-i) >= (1 + 3*i*alpha/(5n)) * mu(G)/n` (the chain inequality),
//! and at the end `mu(H) > gamma*(1 + 4*k*alpha/(7n))*|H|` (the exit bound).
//! Both are checked explicitly by [`check_theorem3_conclusion`].
//!
//! The guarantee needs the strict parameter ranges `0 < 4*alpha <= 1`,
//! `0 < 2*beta <= 1`, `1/2 - alpha/4 <= gamma < 1`, `K >= 0` and the order
//! gate `n >= (42K + 4)/(alpha^2 * beta)`. Non-strict mode skips the gates
//! for experiments; conclusion checks then downgrade from assertions to
//! observations.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::spectral::{spectral_radius, spectral_radius_warm, SpectralOptions, SLACK_TOL};
use crate::verify::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProcedureParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    /// The additive slack constant in the spectral premise `mu > gamma*n - K/n`.
    #[serde(rename = "K")]
    pub k_const: f64,
    /// Enforce the parameter and premise gates before running.
    pub strict: bool,
}

impl Default for ProcedureParams {
    /// `alpha = 1/4`, `beta = 1/2`, `gamma = 1/2 - alpha/4 = 0.4375`, `K = 0`:
    /// the loosest strict parameters, with order gate `n >= 128`.
    fn default() -> Self {
        ProcedureParams { alpha: 0.25, beta: 0.5, gamma: 0.4375, k_const: 0.0, strict: true }
    }
}

/// Per-clause verdict of the parameter hypotheses at a given order.
#[derive(Debug, Clone, Serialize)]
pub struct ParamGate {
    /// `(42K + 4)/(alpha^2 * beta)`; infinite when alpha or beta vanish.
    pub n_min: f64,
    pub alpha_ok: bool,
    pub beta_ok: bool,
    pub gamma_ok: bool,
    pub k_ok: bool,
    pub n_ok: bool,
    /// Human-readable list of every violated clause; empty iff satisfied.
    pub violations: Vec<String>,
}

impl ParamGate {
    pub fn satisfied(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every parameter hypothesis individually, including the order gate.
pub fn validate_params(p: &ProcedureParams, n: usize) -> ParamGate {
    let mut violations = Vec::new();
    let alpha_ok = p.alpha > 0.0 && 4.0 * p.alpha <= 1.0;
    if !alpha_ok {
        violations.push(format!("4*alpha = {} outside (0, 1]", 4.0 * p.alpha));
    }
    let beta_ok = p.beta > 0.0 && 2.0 * p.beta <= 1.0;
    if !beta_ok {
        violations.push(format!("2*beta = {} outside (0, 1]", 2.0 * p.beta));
    }
    let gamma_floor = 0.5 - p.alpha / 4.0;
    let gamma_ok = p.gamma >= gamma_floor && p.gamma < 1.0;
    if !gamma_ok {
        violations.push(format!("gamma = {} outside [{gamma_floor}, 1)", p.gamma));
    }
    let k_ok = p.k_const >= 0.0;
    if !k_ok {
        violations.push(format!("K = {} is negative", p.k_const));
    }
    let n_min = if p.alpha > 0.0 && p.beta > 0.0 {
        (42.0 * p.k_const + 4.0) / (p.alpha * p.alpha * p.beta)
    } else {
        f64::INFINITY
    };
    let n_ok = (n as f64) >= n_min;
    if !n_ok {
        violations.push(format!("n = {n} below the order gate n_min = {n_min}"));
    }
    ParamGate { n_min, alpha_ok, beta_ok, gamma_ok, k_ok, n_ok, violations }
}

/// Both premise inequalities with their slacks.
#[derive(Debug, Clone, Serialize)]
pub struct PremiseCheck {
    pub n: usize,
    pub mu: f64,
    /// `gamma*n - K/n`; the spectral radius must exceed it strictly.
    pub mu_threshold: f64,
    pub mu_slack: f64,
    pub mu_ok: bool,
    pub min_degree: usize,
    /// `(gamma - alpha)*n`; the minimum degree must not exceed it.
    pub degree_threshold: f64,
    pub degree_slack: f64,
    pub degree_ok: bool,
}

impl PremiseCheck {
    pub fn satisfied(&self) -> bool {
        self.mu_ok && self.degree_ok
    }
}

/// Evaluates `mu(G) > gamma*n - K/n` and `delta(G) <= (gamma - alpha)*n`.
pub fn premise_check(g: &Graph, p: &ProcedureParams, opts: &SpectralOptions) -> PremiseCheck {
    let n = g.order();
    let sp = spectral_radius(g, opts);
    let nf = n as f64;
    let mu_threshold = if n == 0 { 0.0 } else { p.gamma * nf - p.k_const / nf };
    let mu_slack = sp.mu - mu_threshold;
    let min_degree = g.min_degree().unwrap_or(0);
    let degree_threshold = (p.gamma - p.alpha) * nf;
    let degree_slack = degree_threshold - min_degree as f64;
    PremiseCheck {
        n,
        mu: sp.mu,
        mu_threshold,
        mu_slack,
        // Strict inequality, so the guard band pushes against the premise.
        mu_ok: n > 0 && mu_slack > SLACK_TOL,
        min_degree,
        degree_threshold,
        degree_slack,
        degree_ok: degree_slack >= -SLACK_TOL,
    }
}

/// One deletion step: the state of `G_k` and the vertex removed from it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProcedureStep {
    /// Step index; this step transforms `G_k` into `G_{k+1}`.
    pub k: usize,
    /// Order of `G_k`, i.e. `n - k`.
    pub order: usize,
    /// `mu(G_k)`.
    pub mu: f64,
    /// `delta(G_k)`.
    pub min_degree: usize,
    /// Loop guard threshold `(gamma - alpha)*(n - k)` at this step.
    pub degree_guard: f64,
    /// Deleted vertex, as an id of the input graph.
    pub deleted_vertex: usize,
    /// Perron entry of the deleted vertex in `G_k`'s unit eigenvector.
    pub min_entry: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    /// Stopped because `k` reached `floor(beta*n)`.
    I,
    /// Stopped because the minimum degree climbed above the guard.
    II,
}

/// Full record of a procedure run; replaying the same input reproduces it
/// byte for byte.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProcedureTrace {
    /// Order of the input graph.
    pub n: usize,
    pub params: ProcedureParams,
    pub steps: Vec<ProcedureStep>,
    /// Vertices of `H` as input-graph ids.
    pub final_subgraph: VertexSet,
    pub branch: Branch,
    /// `mu(H)`.
    pub final_mu: f64,
    /// `delta(H)`.
    pub final_min_degree: usize,
}

impl ProcedureTrace {
    /// Number of deletions performed.
    pub fn deletions(&self) -> usize {
        self.steps.len()
    }
}

#[derive(Debug, Error)]
pub enum ProcedureError {
    #[error("strict parameter gate rejected: {}", .0.join("; "))]
    Params(Vec<String>),
    #[error(
        "strict premise rejected: mu slack {mu_slack:.6}, degree slack {degree_slack:.6}"
    )]
    Premise { mu_slack: f64, degree_slack: f64 },
    #[error(
        "eigensolver did not converge at step {step} (residual {residual:.3e}); partial trace retained"
    )]
    Eigensolver { step: usize, residual: f64, partial: Vec<ProcedureStep> },
}

/// Runs the deletion procedure. Strict mode refuses invalid parameters and
/// unmet premises; non-strict mode runs regardless.
pub fn run_procedure(
    g: &Graph,
    p: &ProcedureParams,
    opts: &SpectralOptions,
) -> Result<ProcedureTrace, ProcedureError> {
    if p.strict {
        let gate = validate_params(p, g.order());
        if !gate.satisfied() {
            return Err(ProcedureError::Params(gate.violations));
        }
        let premise = premise_check(g, p, opts);
        if !premise.satisfied() {
            return Err(ProcedureError::Premise {
                mu_slack: premise.mu_slack,
                degree_slack: premise.degree_slack,
            });
        }
    }
    let n = g.order();
    let cap = (p.beta * n as f64).floor() as usize;
    let mut current = g.clone();
    // Position i of `ids` holds the input id of the current vertex i;
    // deletions keep relative order, so index ties equal id ties.
    let mut ids: Vec<usize> = (0..n).collect();
    let mut steps: Vec<ProcedureStep> = Vec::new();
    let mut warm: Option<Vec<f64>> = None;
    let mut k = 0usize;
    let final_sp = loop {
        let sp = match &warm {
            Some(w) => spectral_radius_warm(&current, opts, w),
            None => spectral_radius(&current, opts),
        };
        if !sp.converged {
            return Err(ProcedureError::Eigensolver {
                step: k,
                residual: sp.residual,
                partial: steps,
            });
        }
        let order = current.order();
        let min_degree = current.min_degree().unwrap_or(0);
        let degree_guard = (p.gamma - p.alpha) * ((n - k) as f64);
        let guard = (min_degree as f64) <= degree_guard + SLACK_TOL;
        // Safety floor: never delete the last vertex (possible only with
        // non-strict beta > 1 - 1/n).
        if !(guard && k < cap && order > 1) {
            break sp;
        }
        let (u, min_entry) = sp.min_entry().expect("order >= 1");
        steps.push(ProcedureStep {
            k,
            order,
            mu: sp.mu,
            min_degree,
            degree_guard,
            deleted_vertex: ids[u],
            min_entry,
        });
        let (next, _) = current.delete_vertex(u).expect("u in range");
        ids.remove(u);
        let mut w = sp.vector;
        w.remove(u);
        warm = Some(w);
        current = next;
        k += 1;
    };
    Ok(ProcedureTrace {
        n,
        params: *p,
        steps,
        final_subgraph: ids.iter().copied().collect(),
        branch: if k == cap { Branch::I } else { Branch::II },
        final_mu: final_sp.mu,
        final_min_degree: current.min_degree().unwrap_or(0),
    })
}

/// One asserted inequality in the conclusion report.
#[derive(Debug, Clone, Serialize)]
pub struct InequalityCheck {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`; the inequality holds when this is at least `-1e-9`.
    pub slack: f64,
    pub pass: bool,
}

impl InequalityCheck {
    fn new(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        let slack = lhs - rhs;
        InequalityCheck { label: label.into(), lhs, rhs, slack, pass: slack >= -SLACK_TOL }
    }
}

/// Conclusion verdict: the order floor, the branch inequalities, the
/// per-step chain inequality, and the exit bound.
#[derive(Debug, Clone, Serialize)]
pub struct ConclusionCheck {
    pub branch: Branch,
    pub h_order: usize,
    pub checks: Vec<InequalityCheck>,
    /// `Fail` downgrades to `Exception` for non-strict traces: the guarantee
    /// only holds under the strict hypotheses.
    pub outcome: Outcome,
}

impl ConclusionCheck {
    pub fn worst_slack(&self) -> f64 {
        self.checks.iter().map(|c| c.slack).fold(f64::INFINITY, f64::min)
    }
}

/// Verifies everything the run guarantees. A `Fail` on a strict trace means
/// an implementation bug, not a property of the input graph.
pub fn check_theorem3_conclusion(trace: &ProcedureTrace, p: &ProcedureParams) -> ConclusionCheck {
    let n = trace.n as f64;
    let k = trace.deletions();
    let h_order = trace.final_subgraph.len();
    let h = h_order as f64;
    let mut checks = Vec::new();

    checks.push(InequalityCheck::new("|H| >= (1 - beta)*n", h, (1.0 - p.beta) * n));

    // mu(G_0)/n: from the first step, or from H itself for zero-step runs.
    let mu0_over_n = if let Some(first) = trace.steps.first() {
        first.mu / first.order as f64
    } else {
        trace.final_mu / h.max(1.0)
    };
    // Chain inequality at every i, with mu(G_k) = mu(H) closing the chain.
    for i in 0..=k {
        let (mu_i, order_i) = if i < k {
            (trace.steps[i].mu, trace.steps[i].order as f64)
        } else {
            (trace.final_mu, h.max(1.0))
        };
        checks.push(InequalityCheck::new(
            format!("chain i={i}: mu(G_i)/(n-i) >= (1 + 3*i*alpha/(5n))*mu(G)/n"),
            mu_i / order_i,
            (1.0 + 3.0 * i as f64 * p.alpha / (5.0 * n)) * mu0_over_n,
        ));
    }

    checks.push(InequalityCheck::new(
        "exit bound: mu(H) > gamma*(1 + 4*k*alpha/(7n))*|H|",
        trace.final_mu,
        p.gamma * (1.0 + 4.0 * k as f64 * p.alpha / (7.0 * n)) * h,
    ));

    match trace.branch {
        Branch::I => {
            checks.push(InequalityCheck::new(
                "(i): mu(H) > gamma*(1 + beta*alpha/2)*|H|",
                trace.final_mu,
                p.gamma * (1.0 + p.beta * p.alpha / 2.0) * h,
            ));
        }
        Branch::II => {
            checks.push(InequalityCheck::new(
                "(ii): mu(H) > gamma*|H|",
                trace.final_mu,
                p.gamma * h,
            ));
            checks.push(InequalityCheck::new(
                "(ii): delta(H) > (gamma - alpha)*|H|",
                trace.final_min_degree as f64,
                (p.gamma - p.alpha) * h,
            ));
        }
    }

    let all_pass = checks.iter().all(|c| c.pass);
    let outcome = if all_pass {
        Outcome::Pass
    } else if trace.params.strict {
        Outcome::Fail
    } else {
        Outcome::Exception
    };
    ConclusionCheck { branch: trace.branch, h_order, checks, outcome }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    fn opts() -> SpectralOptions {
        SpectralOptions::default()
    }

    fn default_params() -> ProcedureParams {
        ProcedureParams::default()
    }

    #[test]
    fn gate_accepts_reference_parameters() {
        let gate = validate_params(&default_params(), 128);
        assert!(gate.satisfied(), "{:?}", gate.violations);
        assert_eq!(gate.n_min, 128.0);

        // The odd-cycle application: alpha=1/10, beta=1/2, gamma=1/2, K=1.
        let p = ProcedureParams { alpha: 0.1, beta: 0.5, gamma: 0.5, k_const: 1.0, strict: true };
        let gate = validate_params(&p, 9200);
        assert!(gate.satisfied(), "{:?}", gate.violations);
        assert!((gate.n_min - 9200.0).abs() < 1e-9);
        assert!(!validate_params(&p, 9199).satisfied());
    }

    #[test]
    fn gate_lists_every_violation() {
        // Negative K makes the order gate vacuous, so four clauses fire here.
        let p = ProcedureParams { alpha: 0.3, beta: 0.7, gamma: 1.0, k_const: -1.0, strict: true };
        let gate = validate_params(&p, 10);
        assert!(!gate.alpha_ok && !gate.beta_ok && !gate.gamma_ok && !gate.k_ok && gate.n_ok);
        assert_eq!(gate.violations.len(), 4);

        // The order clause alone, one short of the reference gate.
        let gate = validate_params(&default_params(), 127);
        assert!(gate.alpha_ok && gate.beta_ok && gate.gamma_ok && gate.k_ok && !gate.n_ok);
        assert_eq!(gate.violations.len(), 1);
    }

    #[test]
    fn gate_gamma_floor_is_inclusive() {
        let p = ProcedureParams { gamma: 0.4375, ..default_params() };
        assert!(validate_params(&p, 128).gamma_ok);
        let p = ProcedureParams { gamma: 0.4374, ..default_params() };
        assert!(!validate_params(&p, 128).gamma_ok);
    }

    #[test]
    fn premise_on_reference_join() {
        let g = construct::join_clique_empty(128, 24).unwrap().graph;
        let pc = premise_check(&g, &default_params(), &opts());
        assert!(pc.satisfied());
        assert!((pc.mu_threshold - 56.0).abs() < 1e-12);
        assert!(pc.mu > 62.7 && pc.mu < 62.8);
        assert_eq!(pc.min_degree, 24);
        // delta = 24 lands exactly on the threshold 0.1875 * 128 = 24.
        assert!((pc.degree_threshold - 24.0).abs() < 1e-12);
        assert!(pc.degree_ok);
    }

    #[test]
    fn premise_rejects_t2_and_edgeless() {
        let g = construct::turan_t2(128).unwrap().graph;
        let pc = premise_check(&g, &default_params(), &opts());
        // T2(128): mu = 64 > 56 but delta = 64 > 24.
        assert!(pc.mu_ok);
        assert!(!pc.degree_ok);
        assert!(!pc.satisfied());

        let pc = premise_check(&Graph::empty(128), &default_params(), &opts());
        assert!(!pc.mu_ok);
    }

    #[test]
    fn reference_trace_single_deletion_branch_ii() {
        let g = construct::join_clique_empty(128, 24).unwrap().graph;
        let trace = run_procedure(&g, &default_params(), &opts()).unwrap();
        assert_eq!(trace.deletions(), 1);
        assert_eq!(trace.branch, Branch::II);
        // The deleted vertex is on the empty side (ids 24..127), and ties
        // resolve to the lowest id.
        assert_eq!(trace.steps[0].deleted_vertex, 24);
        assert_eq!(trace.steps[0].min_degree, 24);
        assert_eq!(trace.final_subgraph.len(), 127);
        assert!(!trace.final_subgraph.contains(24));
        // H = the 24-clique joined to 103 isolated vertices.
        let want_mu = construct::join_exact_mu(127, 24);
        assert!((trace.final_mu - want_mu).abs() < 1e-7, "{} vs {want_mu}", trace.final_mu);
        assert_eq!(trace.final_min_degree, 24);
    }

    #[test]
    fn reference_conclusion_passes() {
        let g = construct::join_clique_empty(128, 24).unwrap().graph;
        let p = default_params();
        let trace = run_procedure(&g, &p, &opts()).unwrap();
        let conclusion = check_theorem3_conclusion(&trace, &p);
        assert_eq!(conclusion.outcome, Outcome::Pass, "{:#?}", conclusion.checks);
        assert!(conclusion.worst_slack() >= -1e-9);
        // mu(H) > 0.4375 * 127 = 55.5625 and delta(H) = 24 > 23.8125.
        let branch_mu = conclusion
            .checks
            .iter()
            .find(|c| c.label.starts_with("(ii): mu"))
            .unwrap();
        assert!((branch_mu.rhs - 55.5625).abs() < 1e-12);
        assert!(branch_mu.lhs > 55.5625);
    }

    #[test]
    fn trace_replay_is_identical() {
        let g = construct::join_clique_empty(130, 22).unwrap().graph;
        let p = ProcedureParams { strict: false, ..default_params() };
        let a = run_procedure(&g, &p, &opts()).unwrap();
        let b = run_procedure(&g, &p, &opts()).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn high_degree_graph_stops_immediately() {
        // delta(K20) = 19 > (gamma - alpha) * 20 = 3.75: zero steps, branch (ii).
        let g = construct::complete(20);
        let p = ProcedureParams { strict: false, ..default_params() };
        let trace = run_procedure(&g, &p, &opts()).unwrap();
        assert_eq!(trace.deletions(), 0);
        assert_eq!(trace.branch, Branch::II);
        assert_eq!(trace.final_subgraph.len(), 20);
        let conclusion = check_theorem3_conclusion(&trace, &p);
        // Observational rather than asserted (non-strict), but K20 happens
        // to satisfy (ii) outright: mu = 19 > 0.4375 * 20.
        assert_eq!(conclusion.outcome, Outcome::Pass);
    }

    #[test]
    fn star_run_hits_the_beta_cap() {
        // Star leaves have the smaller entry; with beta = 0.1 the run stops
        // at the cap after deleting exactly 10 leaves.
        let g = construct::star(100);
        let p = ProcedureParams {
            alpha: 0.25,
            beta: 0.1,
            gamma: 0.4375,
            k_const: 0.0,
            strict: false,
        };
        let trace = run_procedure(&g, &p, &opts()).unwrap();
        assert_eq!(trace.deletions(), 10);
        assert_eq!(trace.branch, Branch::I);
        for (i, step) in trace.steps.iter().enumerate() {
            // Leaves in id order: 1, 2, ..., 10. The center is vertex 0.
            assert_eq!(step.deleted_vertex, i + 1);
        }
        assert!(trace.final_subgraph.contains(0));
    }

    #[test]
    fn strict_gates_reject() {
        let g = construct::join_clique_empty(100, 20).unwrap().graph;
        // n = 100 < 128: parameter gate.
        match run_procedure(&g, &default_params(), &opts()) {
            Err(ProcedureError::Params(v)) => assert_eq!(v.len(), 1),
            other => panic!("expected parameter rejection, got {other:?}"),
        }
        // T2(128): premise gate (degree side).
        let t2 = construct::turan_t2(128).unwrap().graph;
        match run_procedure(&t2, &default_params(), &opts()) {
            Err(ProcedureError::Premise { degree_slack, .. }) => assert!(degree_slack < 0.0),
            other => panic!("expected premise rejection, got {other:?}"),
        }
    }

    #[test]
    fn normalized_mu_is_nondecreasing_along_traces() {
        for (n, k) in [(128, 24), (160, 30), (200, 37)] {
            let g = construct::join_clique_empty(n, k).unwrap().graph;
            let trace = run_procedure(&g, &default_params(), &opts()).unwrap();
            let mut ratios: Vec<f64> =
                trace.steps.iter().map(|s| s.mu / s.order as f64).collect();
            ratios.push(trace.final_mu / trace.final_subgraph.len() as f64);
            for w in ratios.windows(2) {
                assert!(w[1] >= w[0] - 1e-9, "ratios {ratios:?}");
            }
        }
    }

    #[test]
    fn deleted_entries_stay_below_uniform() {
        let g = construct::join_clique_empty(128, 20).unwrap().graph;
        let p = ProcedureParams { strict: false, ..default_params() };
        let trace = run_procedure(&g, &p, &opts()).unwrap();
        assert!(trace.deletions() > 1);
        for step in &trace.steps {
            let uniform = 1.0 / (step.order as f64).sqrt();
            assert!(step.min_entry <= uniform + 1e-9);
        }
    }

    #[test]
    fn conclusion_flags_doctored_traces() {
        let g = construct::join_clique_empty(128, 24).unwrap().graph;
        let p = default_params();
        let mut trace = run_procedure(&g, &p, &opts()).unwrap();
        trace.final_mu = 20.0; // below gamma * |H|
        let conclusion = check_theorem3_conclusion(&trace, &p);
        assert_eq!(conclusion.outcome, Outcome::Fail);
        assert!(conclusion.worst_slack() < -1e-9);
    }
}

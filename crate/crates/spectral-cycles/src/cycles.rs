//! Exact detection of cycles of a given length under a node-expansion
//! budget, full cycle spectra, and the headline odd-cycle threshold check.
//!
//! Fixed-length cycle detection is NP-hard in general, so the engine is an
//! anchored backtracking search that always returns one of three honest
//! answers: `Found` with a verified witness, `Absent` after an exhaustive
//! search, or `BudgetExhausted` when the expansion budget ran out first.
//! Never a silent wrong answer.
//!
//! Pruning: only 2-core vertices can lie on cycles; odd lengths are cut
//! immediately on bipartite graphs; each anchor search keeps BFS distances
//! back to the anchor and abandons paths that cannot close in the remaining
//! steps. Anchoring at the smallest cycle vertex with a fixed orientation
//! (second vertex smaller than last) kills rotations and reflections, so
//! every cycle is visited once and witnesses are deterministic.

use serde::Serialize;
use thiserror::Error;

use crate::construct::t2_exact_mu;
use crate::graph::Graph;
use crate::spectral::{spectral_radius, SpectralOptions, SLACK_TOL};
use crate::verify::Outcome;

/// Default node-expansion budget per cycle length.
pub const DEFAULT_CYCLE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum CycleError {
    #[error("cycle length {0} is below 3")]
    LengthBelowThree(usize),
}

/// Answer for one cycle length.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "snake_case")]
pub enum CycleStatus {
    /// A verified cycle, listed from its smallest vertex.
    Found(Vec<usize>),
    /// Exhaustive: the graph has no cycle of this length.
    Absent,
    /// The expansion budget ran out before the search finished.
    BudgetExhausted,
}

impl CycleStatus {
    pub fn is_found(&self) -> bool {
        matches!(self, CycleStatus::Found(_))
    }
}

/// Result of a single-length search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CycleSearch {
    pub t: usize,
    #[serde(flatten)]
    pub status: CycleStatus,
    /// Node expansions spent on this length.
    pub expanded: u64,
}

/// Statuses for every length in `[3, t_max]`.
#[derive(Debug, Clone, Serialize)]
pub struct CycleReport {
    pub t_min: usize,
    pub t_max: usize,
    /// Expansion budget granted to each length separately.
    pub budget: u64,
    pub entries: Vec<CycleSearch>,
}

impl CycleReport {
    pub fn status(&self, t: usize) -> Option<&CycleStatus> {
        self.entries.iter().find(|e| e.t == t).map(|e| &e.status)
    }

    pub fn found_lengths(&self) -> Vec<usize> {
        self.entries.iter().filter(|e| e.status.is_found()).map(|e| e.t).collect()
    }

    /// No entry hit the budget, so every `Absent` is exhaustive.
    pub fn exhaustive(&self) -> bool {
        !self.entries.iter().any(|e| e.status == CycleStatus::BudgetExhausted)
    }

    /// Shortest found length; the girth when `t_max = n` and the report is
    /// exhaustive.
    pub fn girth(&self) -> Option<usize> {
        self.found_lengths().into_iter().min()
    }

    /// Longest found length; the circumference under the same proviso.
    pub fn circumference(&self) -> Option<usize> {
        self.found_lengths().into_iter().max()
    }
}

/// Searches for a cycle of exactly `t` vertices.
pub fn has_cycle_of_length(g: &Graph, t: usize, budget: u64) -> Result<CycleSearch, CycleError> {
    if t < 3 {
        return Err(CycleError::LengthBelowThree(t));
    }
    let n = g.order();
    if t > n {
        return Ok(CycleSearch { t, status: CycleStatus::Absent, expanded: 0 });
    }
    if t % 2 == 1 && g.is_bipartite() {
        return Ok(CycleSearch { t, status: CycleStatus::Absent, expanded: 0 });
    }
    let core = g.two_core_mask();
    let mut ctx = SearchCtx {
        g,
        core: &core,
        t,
        budget,
        expanded: 0,
        dist: vec![u32::MAX; n],
        visited: vec![false; n],
        path: Vec::with_capacity(t),
        queue: Vec::with_capacity(n),
    };
    for s in 0..n {
        if !core[s] {
            continue;
        }
        ctx.bfs_from(s);
        if (ctx.dist[s] as usize) != 0 {
            unreachable!("anchor distance is zero");
        }
        ctx.path.clear();
        ctx.path.push(s);
        ctx.visited[s] = true;
        let step = ctx.extend();
        ctx.visited[s] = false;
        match step {
            Step::Found(cycle) => {
                debug_assert!(crate::graph::is_valid_cycle(g, &cycle));
                return Ok(CycleSearch {
                    t,
                    status: CycleStatus::Found(cycle),
                    expanded: ctx.expanded,
                });
            }
            Step::Exhausted => {
                return Ok(CycleSearch {
                    t,
                    status: CycleStatus::BudgetExhausted,
                    expanded: ctx.expanded,
                });
            }
            Step::None => {}
        }
    }
    Ok(CycleSearch { t, status: CycleStatus::Absent, expanded: ctx.expanded })
}

enum Step {
    Found(Vec<usize>),
    None,
    Exhausted,
}

struct SearchCtx<'a> {
    g: &'a Graph,
    core: &'a [bool],
    t: usize,
    budget: u64,
    expanded: u64,
    /// BFS distance to the current anchor within the allowed vertex set.
    dist: Vec<u32>,
    visited: Vec<bool>,
    path: Vec<usize>,
    queue: Vec<usize>,
}

impl SearchCtx<'_> {
    /// Distances from `s` over 2-core vertices with index at least `s`; a
    /// lower bound on the steps any partial path needs to close.
    fn bfs_from(&mut self, s: usize) {
        for d in self.dist.iter_mut() {
            *d = u32::MAX;
        }
        self.dist[s] = 0;
        self.queue.clear();
        self.queue.push(s);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &w in self.g.neighbors(v) {
                if w > s && self.core[w] && self.dist[w] == u32::MAX {
                    self.dist[w] = self.dist[v] + 1;
                    self.queue.push(w);
                }
            }
        }
    }

    fn extend(&mut self) -> Step {
        let i = self.path.len();
        let v = *self.path.last().unwrap();
        let s = self.path[0];
        let closing = i + 1 == self.t;
        for idx in 0..self.g.neighbors(v).len() {
            let w = self.g.neighbors(v)[idx];
            if w <= s || !self.core[w] || self.visited[w] {
                continue;
            }
            if self.dist[w] as usize > self.t - i {
                continue;
            }
            self.expanded += 1;
            if self.expanded > self.budget {
                return Step::Exhausted;
            }
            if closing {
                // Final vertex: orientation filter plus the closing edge.
                if w > self.path[1] && self.g.has_edge(w, s) {
                    let mut cycle = self.path.clone();
                    cycle.push(w);
                    return Step::Found(cycle);
                }
                continue;
            }
            self.path.push(w);
            self.visited[w] = true;
            let step = self.extend();
            self.path.pop();
            self.visited[w] = false;
            match step {
                Step::None => {}
                other => return other,
            }
        }
        Step::None
    }
}

/// Statuses for every `t` in `[3, t_max]`, each with its own budget.
pub fn cycle_spectrum(g: &Graph, t_max: usize, budget: u64) -> CycleReport {
    let mut entries = Vec::new();
    for t in 3..=t_max {
        let search = has_cycle_of_length(g, t, budget).expect("t >= 3");
        entries.push(search);
    }
    CycleReport { t_min: 3, t_max, budget, entries }
}

/// Largest `k` with `m > n(k-1)/2`: a graph with `n` vertices and `m >= 1`
/// edges contains a path with at least `k` edges. Returns 0 when `m = 0`.
pub fn erdos_gallai_guarantee(n: usize, m: usize) -> usize {
    assert!(n >= 1, "n >= 1");
    if m == 0 {
        0
    } else {
        (2 * m - 1) / n + 1
    }
}

/// Three-way comparison of a spectral radius against a threshold with the
/// crate-wide guard band: values within `SLACK_TOL` count as equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PremiseStatus {
    Exceeds,
    Equal,
    Below,
}

pub fn classify_premise(mu: f64, threshold: f64) -> PremiseStatus {
    if mu > threshold + SLACK_TOL {
        PremiseStatus::Exceeds
    } else if mu < threshold - SLACK_TOL {
        PremiseStatus::Below
    } else {
        PremiseStatus::Equal
    }
}

/// Outcome of the odd-cycle threshold check on one graph.
#[derive(Debug, Clone, Serialize)]
pub struct Theorem1Report {
    pub n: usize,
    pub mu: f64,
    /// `sqrt(floor(n^2/4))`, the exact threshold.
    pub threshold: f64,
    pub premise: PremiseStatus,
    /// `max(3, floor(fraction * n))`; lengths checked when the premise holds.
    pub t_max: usize,
    pub spectrum: Option<CycleReport>,
    /// `Pass` needs a triangle. Lengths `t >= 4` are observational: at desk
    /// scale the guaranteed range `t <= n/320` is empty below n = 960, so
    /// their absences never fail the check.
    pub outcome: Outcome,
}

/// Checks the threshold statement: spectral radius strictly above
/// `sqrt(floor(n^2/4))` forces a triangle (asserted for every n) and, for
/// large n, cycles of every length up to a linear fraction of n (reported,
/// not asserted).
pub fn theorem1_check(
    g: &Graph,
    fraction: f64,
    budget: u64,
    opts: &SpectralOptions,
) -> Theorem1Report {
    let n = g.order();
    let sp = spectral_radius(g, opts);
    let threshold = t2_exact_mu(n);
    let premise = classify_premise(sp.mu, threshold);
    if premise != PremiseStatus::Exceeds {
        return Theorem1Report {
            n,
            mu: sp.mu,
            threshold,
            premise,
            t_max: 0,
            spectrum: None,
            outcome: Outcome::NotApplicable,
        };
    }
    let t_max = ((fraction * n as f64).floor() as usize).max(3);
    let spectrum = cycle_spectrum(g, t_max, budget);
    let outcome = match spectrum.status(3) {
        Some(CycleStatus::Found(_)) => Outcome::Pass,
        Some(CycleStatus::Absent) => Outcome::Fail,
        _ => Outcome::Exception,
    };
    Theorem1Report { n, mu: sp.mu, threshold, premise, t_max, spectrum: Some(spectrum), outcome }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::graph::is_valid_cycle;

    const B: u64 = DEFAULT_CYCLE_BUDGET;

    #[test]
    fn c5_lengths() {
        let g = construct::cycle(5).unwrap();
        let hit = has_cycle_of_length(&g, 5, B).unwrap();
        match &hit.status {
            CycleStatus::Found(w) => assert!(is_valid_cycle(&g, w)),
            other => panic!("expected Found, got {other:?}"),
        }
        assert_eq!(has_cycle_of_length(&g, 4, B).unwrap().status, CycleStatus::Absent);
        assert_eq!(has_cycle_of_length(&g, 3, B).unwrap().status, CycleStatus::Absent);
        assert_eq!(has_cycle_of_length(&g, 6, B).unwrap().status, CycleStatus::Absent);
    }

    #[test]
    fn length_below_three_is_an_error() {
        let g = construct::complete(4);
        assert_eq!(has_cycle_of_length(&g, 2, B), Err(CycleError::LengthBelowThree(2)));
    }

    #[test]
    fn petersen_has_no_heptagon() {
        let g = construct::petersen();
        let search = has_cycle_of_length(&g, 7, B).unwrap();
        assert_eq!(search.status, CycleStatus::Absent);
    }

    #[test]
    fn petersen_spectrum() {
        let report = cycle_spectrum(&construct::petersen(), 10, B);
        assert!(report.exhaustive());
        assert_eq!(report.found_lengths(), vec![5, 6, 8, 9]);
        assert_eq!(report.girth(), Some(5));
        assert_eq!(report.circumference(), Some(9));
    }

    #[test]
    fn complete_graphs_are_pancyclic() {
        let report = cycle_spectrum(&construct::complete(7), 7, B);
        assert_eq!(report.found_lengths(), vec![3, 4, 5, 6, 7]);
        for e in &report.entries {
            match &e.status {
                CycleStatus::Found(w) => {
                    assert_eq!(w.len(), e.t);
                    assert!(is_valid_cycle(&construct::complete(7), w));
                }
                other => panic!("K7 t={} should be Found, got {other:?}", e.t),
            }
        }
    }

    #[test]
    fn balanced_bipartite_even_spectrum() {
        let g = construct::turan_t2(8).unwrap().graph;
        let report = cycle_spectrum(&g, 8, B);
        assert!(report.exhaustive());
        assert_eq!(report.found_lengths(), vec![4, 6, 8]);
    }

    #[test]
    fn bipartite_odd_lengths_cost_nothing() {
        let g = construct::turan_t2(30).unwrap().graph;
        let search = has_cycle_of_length(&g, 15, B).unwrap();
        assert_eq!(search.status, CycleStatus::Absent);
        assert_eq!(search.expanded, 0);
    }

    #[test]
    fn trees_have_empty_spectra() {
        let report = cycle_spectrum(&construct::star(9), 9, B);
        assert!(report.found_lengths().is_empty());
        assert!(report.exhaustive());
        // The 2-core filter makes tree searches free.
        assert!(report.entries.iter().all(|e| e.expanded == 0));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = construct::complete(12);
        let tiny = has_cycle_of_length(&g, 12, 2).unwrap();
        assert_eq!(tiny.status, CycleStatus::BudgetExhausted);
        assert_eq!(tiny.expanded, 3);
        let full = has_cycle_of_length(&g, 12, B).unwrap();
        assert!(full.status.is_found());
    }

    #[test]
    fn witnesses_are_deterministic() {
        let g = construct::gnp(24, 0.3, 19).unwrap();
        let a = has_cycle_of_length(&g, 7, B).unwrap();
        let b = has_cycle_of_length(&g, 7, B).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!(a.expanded, b.expanded);
        if let CycleStatus::Found(w) = &a.status {
            assert!(is_valid_cycle(&g, w));
            // Canonical orientation: starts at the smallest vertex, second
            // below last.
            assert!(w.iter().skip(1).all(|&v| v > w[0]));
            assert!(w[1] < w[w.len() - 1]);
        }
    }

    #[test]
    fn erdos_gallai_examples() {
        assert_eq!(erdos_gallai_guarantee(3, 3), 2);
        assert_eq!(erdos_gallai_guarantee(5, 10), 4);
        assert_eq!(erdos_gallai_guarantee(7, 0), 0);
        // Formula agrees with a direct scan of the defining inequality.
        for n in 1..30 {
            for m in 0..(n * n) {
                let direct = (0..=n + m)
                    .filter(|&k| k >= 1 && 2 * m > n * (k - 1))
                    .max()
                    .unwrap_or(0);
                assert_eq!(erdos_gallai_guarantee(n, m), direct, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn theorem1_sharpness_at_t2() {
        // The balanced bipartite graph meets the threshold exactly.
        let g = construct::turan_t2(9).unwrap().graph;
        let report = theorem1_check(&g, 1.0 / 320.0, B, &SpectralOptions::default());
        assert_eq!(report.premise, PremiseStatus::Equal);
        assert_eq!(report.outcome, Outcome::NotApplicable);
        assert!(report.spectrum.is_none());
    }

    #[test]
    fn theorem1_join_passes() {
        // K2 joined to 3 isolated vertices: mu = 3 > sqrt(6).
        let g = construct::join_clique_empty(5, 2).unwrap().graph;
        let report = theorem1_check(&g, 1.0 / 320.0, B, &SpectralOptions::default());
        assert_eq!(report.premise, PremiseStatus::Exceeds);
        assert_eq!(report.t_max, 3);
        assert_eq!(report.outcome, Outcome::Pass);
    }

    #[test]
    fn theorem1_small_n_absences_are_observational() {
        // K3 with an oversized fraction: t = 4 lands in range, is absent,
        // and does not fail the check.
        let g = construct::complete(3);
        let report = theorem1_check(&g, 1.34, B, &SpectralOptions::default());
        assert_eq!(report.premise, PremiseStatus::Exceeds);
        assert_eq!(report.t_max, 4);
        let spectrum = report.spectrum.as_ref().unwrap();
        assert!(spectrum.status(3).unwrap().is_found());
        assert_eq!(spectrum.status(4), Some(&CycleStatus::Absent));
        assert_eq!(report.outcome, Outcome::Pass);
    }

    #[test]
    fn theorem1_below_threshold() {
        let g = construct::path(6);
        let report = theorem1_check(&g, 1.0, B, &SpectralOptions::default());
        assert_eq!(report.premise, PremiseStatus::Below);
        assert_eq!(report.outcome, Outcome::NotApplicable);
    }

    #[test]
    fn premise_classification_band() {
        assert_eq!(classify_premise(2.0, 1.0), PremiseStatus::Exceeds);
        assert_eq!(classify_premise(1.0 + 5e-10, 1.0), PremiseStatus::Equal);
        assert_eq!(classify_premise(1.0 - 5e-10, 1.0), PremiseStatus::Equal);
        assert_eq!(classify_premise(0.5, 1.0), PremiseStatus::Below);
    }

    #[test]
    fn wheel_spectrum_is_full() {
        // Wheels are pancyclic: hub plus any rim arc.
        let g = construct::wheel(8).unwrap();
        let report = cycle_spectrum(&g, 8, B);
        assert_eq!(report.found_lengths(), (3..=8).collect::<Vec<_>>());
    }
}

//! Generators for the extremal graphs, standard fixtures, and seeded random
//! corpora, with closed-form spectral radii attached where known.
//!
//! Randomized families draw from ChaCha8 seeded with the 64-bit seed in the
//! family spec. For `gnp` the pairs `(u, v)` with `u < v` are visited in
//! ascending lexicographic order and one standard-uniform `f64` is drawn per
//! pair; the edge is present iff the draw is below `p`. Identical
//! `(n, p, seed)` triples therefore produce bit-identical edge lists.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, PartialEq)]
pub enum ConstructError {
    #[error("{family} requires n >= {min}, got {n}")]
    OrderTooSmall { family: &'static str, min: usize, n: usize },
    #[error("clique size {k} out of range [1, {n}]")]
    CliqueSizeOutOfRange { k: usize, n: usize },
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A generated graph together with its closed-form spectral radius, used to
/// validate the eigensolver against exact values.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub exact_mu: f64,
}

/// Balanced complete bipartite graph on `n` vertices, parts of size
/// `floor(n/2)` and `ceil(n/2)`. Its spectral radius is exactly
/// `sqrt(floor(n^2/4))`.
pub fn turan_t2(n: usize) -> Result<Construction, ConstructError> {
    if n < 2 {
        return Err(ConstructError::OrderTooSmall { family: "t2", min: 2, n });
    }
    let a = n / 2;
    let mut edges = Vec::with_capacity(a * (n - a));
    for u in 0..a {
        for v in a..n {
            edges.push((u, v));
        }
    }
    Ok(Construction {
        graph: Graph::new(n, &edges)?,
        exact_mu: t2_exact_mu(n),
    })
}

/// `sqrt(floor(n^2/4))`, the spectral radius of the balanced complete
/// bipartite graph.
pub fn t2_exact_mu(n: usize) -> f64 {
    (((n * n) / 4) as f64).sqrt()
}

/// Join of a `k`-clique with an independent set of `n - k` vertices
/// (clique on vertices `0..k`). The spectral radius comes from the 2x2
/// equitable-partition quotient:
/// `((k-1) + sqrt((k-1)^2 + 4k(n-k))) / 2`.
pub fn join_clique_empty(n: usize, k: usize) -> Result<Construction, ConstructError> {
    if k == 0 || k > n {
        return Err(ConstructError::CliqueSizeOutOfRange { k, n });
    }
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Construction {
        graph: Graph::new(n, &edges)?,
        exact_mu: join_exact_mu(n, k),
    })
}

/// Closed-form spectral radius of the clique-on-empty join, from the larger
/// root of `x^2 - (k-1)x - k(n-k)`.
pub fn join_exact_mu(n: usize, k: usize) -> f64 {
    let km1 = (k - 1) as f64;
    (km1 + (km1 * km1 + 4.0 * (k as f64) * ((n - k) as f64)).sqrt()) / 2.0
}

/// The clique-on-empty join with `k = ceil((3 - sqrt 5) n / 4)`, the ratio at
/// which the join's spectral radius crosses `n/2` asymptotically. Its longest
/// cycle has length `2k` (every cycle alternates into the clique at least
/// every other step).
#[derive(Debug, Clone)]
pub struct GoldenRatioJoin {
    pub construction: Construction,
    pub k: usize,
    pub longest_cycle: usize,
}

pub fn golden_ratio_join(n: usize) -> Result<GoldenRatioJoin, ConstructError> {
    if n < 4 {
        return Err(ConstructError::OrderTooSmall { family: "golden_ratio_join", min: 4, n });
    }
    let k = ((3.0 - 5.0_f64.sqrt()) * n as f64 / 4.0).ceil() as usize;
    let k = k.max(1);
    Ok(GoldenRatioJoin {
        construction: join_clique_empty(n, k)?,
        k,
        longest_cycle: 2 * k,
    })
}

/// Seeded Erdos-Renyi sample; see the module docs for the exact drawing
/// convention.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, ConstructError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(ConstructError::InvalidProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, &edges)?)
}

/// Balanced complete bipartite graph plus one seeded edge inside a part.
/// The seed picks the part (when both have at least two vertices) and the
/// endpoint pair.
pub fn t2_plus_edge(n: usize, seed: u64) -> Result<Graph, ConstructError> {
    if n < 4 {
        return Err(ConstructError::OrderTooSmall { family: "t2_plus_edge", min: 4, n });
    }
    let a = n / 2;
    let mut g = turan_t2(n)?.graph;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = if rng.gen::<bool>() { (0, a) } else { (a, n) };
    let u = rng.gen_range(lo..hi);
    let v = loop {
        let v = rng.gen_range(lo..hi);
        if v != u {
            break v;
        }
    };
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.push((u.min(v), u.max(v)));
    g = Graph::new(n, &edges)?;
    Ok(g)
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).expect("petersen edges are valid")
}

pub fn cycle(n: usize) -> Result<Graph, ConstructError> {
    if n < 3 {
        return Err(ConstructError::OrderTooSmall { family: "cycle", min: 3, n });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::new(n, &edges)?)
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).expect("path edges are valid")
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("complete edges are valid")
}

/// Wheel on `n` vertices: rim cycle `0..n-1` joined to hub `n-1`.
pub fn wheel(n: usize) -> Result<Graph, ConstructError> {
    if n < 4 {
        return Err(ConstructError::OrderTooSmall { family: "wheel", min: 4, n });
    }
    let rim = n - 1;
    let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    edges.extend((0..rim).map(|i| (i, rim)));
    Ok(Graph::new(n, &edges)?)
}

/// Star on `n` vertices, center `0`.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::new(n, &edges).expect("star edges are valid")
}

/// Circulant on `n` vertices with jump set {1, 2}; 4-regular for n >= 5.
pub fn circulant2(n: usize) -> Result<Graph, ConstructError> {
    if n < 5 {
        return Err(ConstructError::OrderTooSmall { family: "circulant2", min: 5, n });
    }
    let mut edges = Vec::with_capacity(2 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, (i + 2) % n));
    }
    Ok(Graph::new(n, &edges)?)
}

/// Named standard fixtures used across the check suites.
pub fn fixtures() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    out.push(("petersen".into(), petersen()));
    for n in [3, 4, 5, 6, 7, 10, 20] {
        out.push((format!("cycle({n})"), cycle(n).unwrap()));
    }
    for n in [2, 3, 4, 5, 8] {
        out.push((format!("path({n})"), path(n)));
    }
    for n in [2, 3, 4, 5, 6, 8] {
        out.push((format!("complete({n})"), complete(n)));
    }
    for n in [5, 6, 7, 9] {
        out.push((format!("wheel({n})"), wheel(n).unwrap()));
    }
    for n in [4, 5, 10] {
        out.push((format!("star({n})"), star(n)));
    }
    for n in [7, 11] {
        out.push((format!("circulant2({n})"), circulant2(n).unwrap()));
    }
    for n in [4, 5, 8, 9, 16] {
        out.push((format!("t2({n})"), turan_t2(n).unwrap().graph));
    }
    out
}

/// Family tags for corpus descriptors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    T2,
    JoinCliqueEmpty,
    Gnp,
    Cycle,
    Complete,
    Path,
    Petersen,
    T2PlusEdge,
    Wheel,
    Circulant2,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::T2 => "t2",
            Family::JoinCliqueEmpty => "join_clique_empty",
            Family::Gnp => "gnp",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Petersen => "petersen",
            Family::T2PlusEdge => "t2_plus_edge",
            Family::Wheel => "wheel",
            Family::Circulant2 => "circulant2",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "t2" => Family::T2,
            "join_clique_empty" | "join" => Family::JoinCliqueEmpty,
            "gnp" => Family::Gnp,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "path" => Family::Path,
            "petersen" => Family::Petersen,
            "t2_plus_edge" => Family::T2PlusEdge,
            "wheel" => Family::Wheel,
            "circulant2" => Family::Circulant2,
            other => return Err(format!("unknown family `{other}`")),
        })
    }
}

/// One graph of a parametrized family; the corpus descriptor unit inside
/// check reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn t2(n: usize) -> Self {
        FamilySpec { family: Family::T2, n, k: None, p: None, seed: None }
    }

    pub fn join(n: usize, k: usize) -> Self {
        FamilySpec { family: Family::JoinCliqueEmpty, n, k: Some(k), p: None, seed: None }
    }

    pub fn gnp(n: usize, p: f64, seed: u64) -> Self {
        FamilySpec { family: Family::Gnp, n, k: None, p: Some(p), seed: Some(seed) }
    }

    pub fn t2_plus_edge(n: usize, seed: u64) -> Self {
        FamilySpec { family: Family::T2PlusEdge, n, k: None, p: None, seed: Some(seed) }
    }

    pub fn fixture(family: Family, n: usize) -> Self {
        FamilySpec { family, n, k: None, p: None, seed: None }
    }

    /// Deterministic short id, used as the graph id in reports.
    pub fn id(&self) -> String {
        let mut s = format!("{}(n={}", self.family.as_str(), self.n);
        if let Some(k) = self.k {
            s.push_str(&format!(",k={k}"));
        }
        if let Some(p) = self.p {
            s.push_str(&format!(",p={p}"));
        }
        if let Some(seed) = self.seed {
            s.push_str(&format!(",seed={seed}"));
        }
        s.push(')');
        s
    }

    /// Materializes the described graph.
    pub fn realize(&self) -> Result<Graph, ConstructError> {
        match self.family {
            Family::T2 => Ok(turan_t2(self.n)?.graph),
            Family::JoinCliqueEmpty => {
                let k = self.k.unwrap_or(1);
                Ok(join_clique_empty(self.n, k)?.graph)
            }
            Family::Gnp => gnp(self.n, self.p.unwrap_or(0.5), self.seed.unwrap_or(0)),
            Family::Cycle => cycle(self.n),
            Family::Complete => Ok(complete(self.n)),
            Family::Path => Ok(path(self.n)),
            Family::Petersen => Ok(petersen()),
            Family::T2PlusEdge => t2_plus_edge(self.n, self.seed.unwrap_or(0)),
            Family::Wheel => wheel(self.n),
            Family::Circulant2 => circulant2(self.n),
        }
    }

    /// Closed-form spectral radius where one is known.
    pub fn exact_mu(&self) -> Option<f64> {
        match self.family {
            Family::T2 => Some(t2_exact_mu(self.n)),
            Family::JoinCliqueEmpty => self.k.map(|k| join_exact_mu(self.n, k)),
            Family::Complete => Some((self.n as f64) - 1.0),
            Family::Cycle | Family::Circulant2 => {
                Some(if self.family == Family::Cycle { 2.0 } else { 4.0 })
            }
            _ => None,
        }
    }
}

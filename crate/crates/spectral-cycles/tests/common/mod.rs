//! Independent oracles for integration tests: a dense Jacobi eigensolver, a
//! permutation-based cycle enumerator, and a subset triangle counter. None
//! of them share an algorithm with the library; agreement is the evidence.

#![allow(dead_code)]

use spectral_cycles::Graph;

/// Largest adjacency eigenvalue via cyclic Jacobi rotations on the dense
/// matrix. Independent of the power iteration in every respect except the
/// input graph.
pub fn jacobi_spectral_radius(g: &Graph) -> f64 {
    let n = g.order();
    if n == 0 {
        return 0.0;
    }
    let mut a = vec![vec![0.0f64; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off.sqrt() < 1e-13 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let theta = 0.5 * (a[q][q] - a[p][p]) / apq;
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for i in 0..n {
                    let api = a[p][i];
                    let aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
        }
    }
    // Adjacency eigenvalues sum to zero, so the largest is nonnegative.
    (0..n).map(|i| a[i][i]).fold(0.0, f64::max)
}

/// Whether `g` has a simple cycle on exactly `t` vertices, by enumerating
/// every `t`-subset and every circular arrangement of it. No pruning beyond
/// the canonical anchor, so correctness is immediate from the definition.
pub fn cycle_exists_bruteforce(g: &Graph, t: usize) -> bool {
    let n = g.order();
    if t < 3 || t > n {
        return false;
    }
    let mut subset = Vec::with_capacity(t);
    subsets_any(g, t, 0, &mut subset)
}

fn subsets_any(g: &Graph, t: usize, from: usize, subset: &mut Vec<usize>) -> bool {
    if subset.len() == t {
        let mut rest: Vec<usize> = subset[1..].to_vec();
        return permutations_any(g, subset[0], &mut rest, 0);
    }
    let n = g.order();
    // Not enough vertices left to finish the subset.
    for v in from..n {
        if n - v < t - subset.len() {
            break;
        }
        subset.push(v);
        if subsets_any(g, t, v + 1, subset) {
            subset.pop();
            return true;
        }
        subset.pop();
    }
    false
}

fn permutations_any(g: &Graph, anchor: usize, rest: &mut Vec<usize>, at: usize) -> bool {
    if at == rest.len() {
        // Orientation cut: traverse the cycle toward its smaller neighbor.
        if rest[0] > rest[rest.len() - 1] {
            return false;
        }
        if !g.has_edge(anchor, rest[0]) || !g.has_edge(anchor, rest[rest.len() - 1]) {
            return false;
        }
        return rest.windows(2).all(|w| g.has_edge(w[0], w[1]));
    }
    for i in at..rest.len() {
        rest.swap(at, i);
        if permutations_any(g, anchor, rest, at + 1) {
            rest.swap(at, i);
            return true;
        }
        rest.swap(at, i);
    }
    false
}

/// Every length in `[3, t_max]` with a cycle, by brute force.
pub fn cycle_lengths_bruteforce(g: &Graph, t_max: usize) -> Vec<usize> {
    (3..=t_max).filter(|&t| cycle_exists_bruteforce(g, t)).collect()
}

/// Triangle count by testing all vertex triples.
pub fn triangle_count_bruteforce(g: &Graph) -> usize {
    let n = g.order();
    let mut count = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            for w in (v + 1)..n {
                if g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// All graphs on `n` labeled vertices, one per edge-subset bitmask.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total)
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).expect("bitmask edges are valid")
        })
        .collect()
}

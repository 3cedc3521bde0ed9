//! Simple undirected graphs stored as sorted adjacency lists, with the
//! structural queries (degrees, deletion, induced subgraphs, bipartiteness,
//! triangle counts) that the spectral machinery is built on.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("operation requires at least {required} vertices, graph has {order}")]
    OrderTooSmall { order: usize, required: usize },
}

/// Simple undirected graph: no self-loops, no parallel edges.
///
/// Adjacency lists are kept sorted so that equality, iteration order, and
/// serialization are canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges and
    /// reversed duplicates are collapsed; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Sorted neighbor list of `u`.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as pairs `(u, v)` with `u < v`, in ascending lexicographic
    /// order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// Minimum degree over all vertices. Errors on the order-zero graph.
    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.adj
            .iter()
            .map(Vec::len)
            .min()
            .ok_or(GraphError::OrderTooSmall { order: 0, required: 1 })
    }

    fn check_vertex(&self, u: usize) -> Result<(), GraphError> {
        if u < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: u, order: self.order() })
        }
    }

    /// Deletes vertex `u`. Vertices above `u` shift down by one; the returned
    /// map sends each new index to the index it had before deletion, so that
    /// chains of deletions can report original vertex ids.
    pub fn delete_vertex(&self, u: usize) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_vertex(u)?;
        let n = self.order();
        let relabel: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        let mut adj = Vec::with_capacity(n - 1);
        let mut m = 0;
        for &old in &relabel {
            let list: Vec<usize> = self.adj[old]
                .iter()
                .copied()
                .filter(|&w| w != u)
                .map(|w| if w > u { w - 1 } else { w })
                .collect();
            m += list.len();
            adj.push(list);
        }
        Ok((Graph { adj, m: m / 2 }, relabel))
    }

    /// Subgraph induced by `s`, on `|s|` vertices. Vertex `i` of the result
    /// corresponds to the `i`-th smallest element of `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        let n = self.order();
        let mut position = vec![usize::MAX; n];
        for (i, &v) in s.as_slice().iter().enumerate() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            position[v] = i;
        }
        let mut adj = vec![Vec::new(); s.len()];
        let mut m = 0;
        for (i, &v) in s.as_slice().iter().enumerate() {
            for &w in &self.adj[v] {
                if position[w] != usize::MAX {
                    adj[i].push(position[w]);
                }
            }
            adj[i].sort_unstable();
            m += adj[i].len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Two-colors the graph if it is bipartite; otherwise produces an odd
    /// cycle as a witness.
    pub fn bipartition(&self) -> Bipartition {
        let n = self.order();
        let mut color = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        parent[w] = v;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return Bipartition::OddCycle(odd_cycle_witness(&parent, v, w));
                    }
                }
            }
        }
        Bipartition::TwoColoring(color)
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartition::TwoColoring(_))
    }

    /// Exact number of triangles.
    pub fn triangle_count(&self) -> usize {
        // Each triangle a < b < c is counted once, at its lexicographically
        // least edge (a, b) with the third vertex above b.
        self.edges()
            .map(|(u, v)| {
                count_common_above(&self.adj[u], &self.adj[v], v)
            })
            .sum()
    }

    /// Number of triangles containing `u`, counted as adjacent pairs inside
    /// the neighborhood of `u`.
    pub fn triangles_at(&self, u: usize) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        let mut count = 0;
        for (i, &v) in self.adj[u].iter().enumerate() {
            for &w in &self.adj[u][i + 1..] {
                if self.has_edge(v, w) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Lexicographically first triangle `u < v < w`, if any.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for u in 0..self.order() {
            for (i, &v) in self.adj[u].iter().enumerate() {
                if v <= u {
                    continue;
                }
                for &w in &self.adj[u][i + 1..] {
                    if self.has_edge(v, w) {
                        return Some([u, v, w]);
                    }
                }
            }
        }
        None
    }

    /// Number of edges inside the neighborhood of `u`, computed through the
    /// induced subgraph. Always equals `triangles_at(u)`.
    pub fn neighborhood_edge_count(&self, u: usize) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        let nbhd = VertexSet::new(self.adj[u].clone());
        Ok(self.induced_subgraph(&nbhd)?.edge_count())
    }

    /// Membership mask of the 2-core: the maximal subgraph with minimum
    /// degree at least 2. Every cycle lies inside it.
    pub(crate) fn two_core_mask(&self) -> Vec<bool> {
        let n = self.order();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < 2).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for &w in &self.adj[v] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] < 2 {
                        stack.push(w);
                    }
                }
            }
        }
        alive
    }
}

/// Reconstructs an odd cycle from the BFS tree when edge `(v, w)` joins two
/// vertices of the same color.
fn odd_cycle_witness(parent: &[usize], v: usize, w: usize) -> Vec<usize> {
    let ancestors = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pv = ancestors(v);
    let pw = ancestors(w);
    // Trim the shared tail above the lowest common ancestor, leaving
    // pv[i-1] == pw[j-1] == lca.
    let mut i = pv.len();
    let mut j = pw.len();
    while i > 1 && j > 1 && pv[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    // lca .. v, then w .. child-of-lca; the conflict edge closes v -> w and
    // the tree edge child-of-lca -> lca closes the loop.
    let mut cycle: Vec<usize> = pv[..i].to_vec();
    cycle.reverse();
    cycle.extend_from_slice(&pw[..j - 1]);
    cycle
}

fn count_common_above(a: &[usize], b: &[usize], floor: usize) -> usize {
    let mut i = a.partition_point(|&x| x <= floor);
    let mut j = b.partition_point(|&x| x <= floor);
    let mut count = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Result of [`Graph::bipartition`]: either a proper 2-coloring or an odd
/// cycle proving none exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    TwoColoring(Vec<u8>),
    OddCycle(Vec<usize>),
}

/// Sorted set of distinct vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl<'de> serde::Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(VertexSet::new(Vec::<usize>::deserialize(d)?))
    }
}

impl VertexSet {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    /// All vertices of a graph of order `n`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// Checks that `cycle` is a valid simple cycle of `g`: at least 3 distinct
/// vertices with consecutive pairs (cyclically) adjacent.
pub fn is_valid_cycle(g: &Graph, cycle: &[usize]) -> bool {
    if cycle.len() < 3 {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &v in cycle {
        if v >= g.order() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .all(|(&u, &v)| g.has_edge(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn build_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(2, 0));
    }

    #[test]
    fn build_edgeless() {
        let g = Graph::new(4, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.min_degree().unwrap(), 0);
    }

    #[test]
    fn build_dedups_and_symmetrizes() {
        let g = Graph::new(5, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0]);
    }

    #[test]
    fn build_rejects_self_loop_and_out_of_range() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(construct::complete(3).min_degree().unwrap(), 2);
        // star K_{1,3}: center 0
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.min_degree().unwrap(), 1);
        // T2(5) has parts of size 2 and 3; min degree is the smaller part size
        assert_eq!(construct::turan_t2(5).unwrap().graph.min_degree().unwrap(), 2);
        assert!(Graph::empty(0).min_degree().is_err());
    }

    #[test]
    fn delete_vertex_examples() {
        let (k3, map) = construct::complete(4).delete_vertex(0).unwrap();
        assert_eq!(k3, construct::complete(3));
        assert_eq!(map, vec![1, 2, 3]);

        let (p4, _) = construct::cycle(5).unwrap().delete_vertex(2).unwrap();
        assert_eq!(p4.order(), 4);
        assert_eq!(p4.edge_count(), 3);
        assert!(p4.is_bipartite());

        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (rest, _) = star.delete_vertex(0).unwrap();
        assert_eq!(rest, Graph::empty(3));

        assert!(star.delete_vertex(4).is_err());
    }

    #[test]
    fn delete_vertex_degree_property() {
        let g = construct::petersen();
        let u = 3;
        let (h, map) = g.delete_vertex(u).unwrap();
        for (new, &old) in map.iter().enumerate() {
            let expected = g.degree(old) - usize::from(g.has_edge(old, u));
            assert_eq!(h.degree(new), expected);
        }
    }

    #[test]
    fn induced_subgraph_examples() {
        let k5 = construct::complete(5);
        let sub = k5.induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap();
        assert_eq!(sub, construct::complete(3));

        let c6 = construct::cycle(6).unwrap();
        let alt = c6.induced_subgraph(&VertexSet::new(vec![0, 2, 4])).unwrap();
        assert_eq!(alt, Graph::empty(3));

        // one part of T2(6) is independent
        let t2 = construct::turan_t2(6).unwrap().graph;
        let part = t2.induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap();
        assert_eq!(part, Graph::empty(3));

        assert!(k5.induced_subgraph(&VertexSet::new(vec![0, 7])).is_err());
    }

    #[test]
    fn induced_subgraph_full_is_identity() {
        let g = construct::petersen();
        assert_eq!(g.induced_subgraph(&VertexSet::full(10)).unwrap(), g);
    }

    #[test]
    fn bipartition_examples() {
        match construct::cycle(6).unwrap().bipartition() {
            Bipartition::TwoColoring(c) => {
                assert_eq!(c, vec![0, 1, 0, 1, 0, 1]);
            }
            Bipartition::OddCycle(_) => panic!("C6 is bipartite"),
        }
        let c5 = construct::cycle(5).unwrap();
        match c5.bipartition() {
            Bipartition::OddCycle(w) => {
                assert_eq!(w.len(), 5);
                assert!(is_valid_cycle(&c5, &w));
            }
            Bipartition::TwoColoring(_) => panic!("C5 is not bipartite"),
        }
        let t2 = construct::turan_t2(7).unwrap().graph;
        match t2.bipartition() {
            Bipartition::TwoColoring(c) => {
                for (u, v) in t2.edges() {
                    assert_ne!(c[u], c[v]);
                }
            }
            Bipartition::OddCycle(_) => panic!("T2(7) is bipartite"),
        }
    }

    #[test]
    fn odd_cycle_witness_is_always_valid() {
        // non-tree conflict edges exercise the lca reconstruction
        for seed in 0..50u64 {
            let g = construct::gnp(12, 0.3, seed).unwrap();
            if let Bipartition::OddCycle(w) = g.bipartition() {
                assert!(is_valid_cycle(&g, &w), "bad witness {w:?} for seed {seed}");
                assert_eq!(w.len() % 2, 1);
            }
        }
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(construct::complete(4).triangle_count(), 4);
        assert_eq!(construct::turan_t2(10).unwrap().graph.triangle_count(), 0);
        assert_eq!(construct::complete(6).triangle_count(), 20);
    }

    #[test]
    fn triangles_at_vertex_examples() {
        let k4 = construct::complete(4);
        for u in 0..4 {
            assert_eq!(k4.triangles_at(u).unwrap(), 3);
        }
        let c5 = construct::cycle(5).unwrap();
        assert_eq!(c5.triangles_at(0).unwrap(), 0);
        // wheel on 6 vertices: hub is vertex 5, rim C5 has 5 edges
        let w = construct::wheel(6).unwrap();
        assert_eq!(w.triangles_at(5).unwrap(), 5);
        assert_eq!(w.neighborhood_edge_count(5).unwrap(), 5);
        assert!(k4.triangles_at(9).is_err());
    }

    #[test]
    fn triangle_sum_identity() {
        for seed in 0..20u64 {
            let g = construct::gnp(14, 0.4, seed).unwrap();
            let total: usize = (0..g.order()).map(|u| g.triangles_at(u).unwrap()).sum();
            assert_eq!(total, 3 * g.triangle_count());
            for u in 0..g.order() {
                assert_eq!(
                    g.triangles_at(u).unwrap(),
                    g.neighborhood_edge_count(u).unwrap()
                );
            }
        }
    }

    #[test]
    fn bipartite_implies_triangle_free() {
        for seed in 0..20u64 {
            let g = construct::gnp(12, 0.25, seed).unwrap();
            if g.is_bipartite() {
                assert_eq!(g.triangle_count(), 0);
            }
        }
    }

    #[test]
    fn two_core_drops_pendant_trees() {
        // triangle with a pendant path
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.two_core_mask(), vec![true, true, true, false, false]);
    }
}

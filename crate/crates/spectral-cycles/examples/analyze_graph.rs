//! Full structural and spectral summary of a graph, the library analogue of
//! `spectral-cycles analyze`.

use spectral_cycles::construct::{join_clique_empty, t2_exact_mu, turan_t2};
use spectral_cycles::cycles::classify_premise;
use spectral_cycles::spectral::{lemma1_check_with, lemma2_check_with, spectral_radius, SpectralOptions};
use spectral_cycles::Graph;

fn analyze(name: &str, g: &Graph) {
    let opts = SpectralOptions::default();
    let sp = spectral_radius(g, &opts);
    let threshold = t2_exact_mu(g.order());

    println!("== {name} ==");
    println!("order {}, size {}, min degree {}", g.order(), g.edge_count(), g.min_degree().unwrap_or(0));
    println!("bipartite: {}, triangles: {}", g.is_bipartite(), g.triangle_count());
    println!("spectral radius: {:.10} ({} iterations, residual {:.2e})", sp.mu, sp.iterations, sp.residual);
    println!(
        "odd-cycle threshold sqrt(floor(n^2/4)) = {:.10} -> {:?}",
        threshold,
        classify_premise(sp.mu, threshold)
    );
    if let Some((v, x)) = sp.min_entry() {
        println!("smallest perron entry {x:.10} at vertex {v}");
    }

    let l1 = lemma1_check_with(g, &sp);
    if let (Some(bound), Some(slack)) = (l1.bound, l1.slack) {
        println!("entry bound {bound:.10}, slack {slack:.3e} ({:?})", l1.outcome);
    }
    let l2 = lemma2_check_with(g, &sp, &opts);
    println!(
        "deleting vertex {}: mu/(n-1) = {:.10} vs bound {:.10}, slack {:.3e} ({:?})",
        l2.deleted_vertex, l2.lhs, l2.rhs, l2.slack, l2.outcome
    );
    println!();
}

fn main() {
    // The extremal bipartite shape, a triangle-rich join, and a sparse graph.
    analyze("T2(30)", &turan_t2(30).unwrap().graph);
    analyze("K6 v E24", &join_clique_empty(30, 6).unwrap().graph);
    analyze(
        "3-cube",
        &Graph::new(
            8,
            &[(0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7)],
        )
        .unwrap(),
    );
}

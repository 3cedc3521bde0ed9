//! The eigensolver against closed forms, and what warm starts buy when a
//! graph changes by one vertex.

use spectral_cycles::construct::{gnp, join_clique_empty, join_exact_mu, t2_exact_mu, turan_t2};
use spectral_cycles::spectral::{spectral_radius, spectral_radius_warm, SpectralOptions};

fn main() {
    let opts = SpectralOptions::default();

    println!("closed forms vs the power iteration:");
    for n in [10, 47, 128, 301] {
        let g = turan_t2(n).unwrap().graph;
        let sp = spectral_radius(&g, &opts);
        let exact = t2_exact_mu(n);
        println!(
            "  T2({n:3}): computed {:<18.12} exact {:<18.12} |diff| {:.2e}",
            sp.mu,
            exact,
            (sp.mu - exact).abs()
        );
    }
    for (n, k) in [(20, 5), (128, 24), (400, 75)] {
        let g = join_clique_empty(n, k).unwrap().graph;
        let sp = spectral_radius(&g, &opts);
        let exact = join_exact_mu(n, k);
        println!(
            "  K{k} v E{:<3}: computed {:<18.12} exact {:<18.12} |diff| {:.2e}",
            n - k,
            sp.mu,
            exact,
            (sp.mu - exact).abs()
        );
    }

    // Deleting one vertex barely moves the perron vector, so the previous
    // vector (with the deleted entry removed) is a strong start.
    println!("\nwarm start after one deletion:");
    let g = gnp(400, 0.1, 42).unwrap();
    let cold = spectral_radius(&g, &opts);
    let (h, _) = g.delete_vertex(0).unwrap();
    let fresh = spectral_radius(&h, &opts);
    let warm = spectral_radius_warm(&h, &opts, &cold.vector[1..]);
    println!("  parent graph: mu {:.8} in {} iterations", cold.mu, cold.iterations);
    println!("  child, cold:  mu {:.8} in {} iterations", fresh.mu, fresh.iterations);
    println!("  child, warm:  mu {:.8} in {} iterations", warm.mu, warm.iterations);
}

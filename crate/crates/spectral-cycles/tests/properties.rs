//! Property-based tests: the all-n inequalities must hold on arbitrary
//! seeded graphs, witnesses must verify, and encodings must round-trip.

mod common;

use proptest::prelude::*;

use common::triangle_count_bruteforce;
use spectral_cycles::construct::{gnp, t2_exact_mu};
use spectral_cycles::cycles::{
    classify_premise, erdos_gallai_guarantee, has_cycle_of_length, PremiseStatus,
    DEFAULT_CYCLE_BUDGET,
};
use spectral_cycles::graph::{is_valid_cycle, Bipartition};
use spectral_cycles::io::{format_edge_list, parse_edge_list};
use spectral_cycles::spectral::{
    lemma1_check, lemma2_check, spectral_radius, SpectralOptions, SLACK_TOL,
};
use spectral_cycles::verify::{fact2_check, greedy_bipartite_extract, Outcome};
use spectral_cycles::Graph;

fn opts() -> SpectralOptions {
    SpectralOptions::default()
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..48, 0.02f64..0.95, any::<u64>())
        .prop_map(|(n, p, seed)| gnp(n.max(1), p, seed).expect("gnp arguments are valid"))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn lemma1_never_fails(g in arb_graph()) {
        let chk = lemma1_check(&g, &opts());
        prop_assert_ne!(chk.outcome, Outcome::Fail);
    }

    #[test]
    fn lemma2_never_fails(g in arb_graph()) {
        let chk = lemma2_check(&g, &opts());
        prop_assert_ne!(chk.outcome, Outcome::Fail);
    }

    #[test]
    fn fact2_never_fails(g in arb_graph()) {
        let chk = fact2_check(&g, &opts());
        prop_assert_ne!(chk.outcome, Outcome::Fail);
        prop_assert_eq!(chk.triangles, triangle_count_bruteforce(&g));
    }

    #[test]
    fn threshold_exceeders_have_triangles(g in arb_graph()) {
        let sp = spectral_radius(&g, &opts());
        let thr = t2_exact_mu(g.order());
        if classify_premise(sp.mu, thr) == PremiseStatus::Exceeds {
            prop_assert!(g.find_triangle().is_some(), "mu {} thr {thr}", sp.mu);
        }
    }

    #[test]
    fn found_cycle_witnesses_verify(g in arb_graph(), t in 3usize..12) {
        let search = has_cycle_of_length(&g, t, DEFAULT_CYCLE_BUDGET).unwrap();
        if let spectral_cycles::CycleStatus::Found(w) = &search.status {
            prop_assert!(is_valid_cycle(&g, w));
            prop_assert_eq!(w.len(), t);
            // Canonical form: anchored at the smallest vertex, oriented
            // toward its smaller neighbor.
            prop_assert_eq!(w[0], *w.iter().min().unwrap());
            prop_assert!(w[1] < w[w.len() - 1]);
        }
    }

    #[test]
    fn edge_list_round_trips(g in arb_graph()) {
        let parsed = parse_edge_list(&format_edge_list(&g)).unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn spectral_radius_within_classic_bounds(g in arb_graph()) {
        let n = g.order();
        let sp = spectral_radius(&g, &opts());
        let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0) as f64;
        let avg_deg = if n == 0 { 0.0 } else { 2.0 * g.edge_count() as f64 / n as f64 };
        prop_assert!(sp.mu <= max_deg + 1e-7, "mu {} max degree {max_deg}", sp.mu);
        prop_assert!(sp.mu >= avg_deg - 1e-7, "mu {} avg degree {avg_deg}", sp.mu);
        prop_assert!(sp.mu >= max_deg.sqrt() - 1e-7, "mu {} sqrt max degree", sp.mu);
    }

    #[test]
    fn perron_vector_is_unit_and_nonnegative(g in arb_graph()) {
        let sp = spectral_radius(&g, &opts());
        let norm: f64 = sp.vector.iter().map(|v| v * v).sum::<f64>().sqrt();
        prop_assert!((norm - 1.0).abs() < 1e-9);
        prop_assert!(sp.vector.iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn bipartition_is_correct(g in arb_graph()) {
        match g.bipartition() {
            Bipartition::TwoColoring(colors) => {
                for (u, v) in g.edges() {
                    prop_assert_ne!(colors[u], colors[v]);
                }
            }
            Bipartition::OddCycle(cycle) => {
                prop_assert!(cycle.len() % 2 == 1);
                prop_assert!(is_valid_cycle(&g, &cycle));
            }
        }
    }

    #[test]
    fn erdos_gallai_is_the_largest_such_k(g in arb_graph()) {
        let (n, m) = (g.order(), g.edge_count());
        let k = erdos_gallai_guarantee(n, m);
        if m > 0 {
            // 2m > n(k-1) holds at k and fails at k+1.
            prop_assert!(2 * m > n * (k - 1));
            prop_assert!(2 * m <= n * k);
        } else {
            prop_assert_eq!(k, 0);
        }
    }

    #[test]
    fn greedy_extract_induces_bipartite(g in arb_graph()) {
        let kept = greedy_bipartite_extract(&g);
        prop_assert!(g.induced_subgraph(&kept).unwrap().is_bipartite());
        if g.is_bipartite() {
            prop_assert_eq!(kept.len(), g.order());
        }
    }

    #[test]
    fn vertex_deletion_relabels_consistently(g in arb_graph()) {
        let n = g.order();
        if n >= 2 {
            let u = n / 2;
            let (h, relabel) = g.delete_vertex(u).unwrap();
            prop_assert_eq!(h.order(), n - 1);
            prop_assert_eq!(relabel.len(), n - 1);
            for (new, &old) in relabel.iter().enumerate() {
                prop_assert_eq!(h.degree(new), g.degree(old) - usize::from(g.has_edge(old, u)));
            }
        }
    }

    #[test]
    fn lemma1_slack_is_tiny_on_regular_graphs(d in 2usize..6, rows in 2usize..5) {
        // Circulant-style regular graphs: vertex i adjacent to i +- 1..=d/2
        // (mod n) plus the antipode for even d; here simply C_n powers.
        let n = rows * 7;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 1..=d / 2 {
                edges.push((i, (i + j) % n));
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        if g.min_degree().unwrap() == 2 * (d / 2) {
            let chk = lemma1_check(&g, &opts());
            // Regular graphs meet the bound with equality.
            prop_assert!(chk.slack.unwrap().abs() <= 1e-7 + SLACK_TOL);
        }
    }
}

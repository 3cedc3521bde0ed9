//! The edge-list file format: canonical serialization, tolerant parsing,
//! and errors that point at the offending line.

use spectral_cycles::construct::wheel;
use spectral_cycles::io::{format_edge_list, parse_edge_list};

fn main() {
    let g = wheel(6).unwrap();
    let text = format_edge_list(&g);
    println!("canonical form of the 6-vertex wheel:\n{text}");

    // Parsing accepts comments, blank lines, and duplicate edges.
    let noisy = "# a wheel, written sloppily\n6\n\n0 1\n1 0\n1 2\n2 3\n3 4\n4 0\n0 5\n1 5\n2 5\n3 5\n4 5\n";
    let parsed = parse_edge_list(noisy).unwrap();
    println!("noisy parse round-trips: {}", parsed == g);

    // Errors carry the 1-based line number.
    for bad in ["6\n0 six\n", "6\n0 1 2\n", "6\n0 9\n", ""] {
        match parse_edge_list(bad) {
            Ok(_) => println!("unexpectedly parsed {bad:?}"),
            Err(e) => println!("rejected {bad:?}: {e}"),
        }
    }
}

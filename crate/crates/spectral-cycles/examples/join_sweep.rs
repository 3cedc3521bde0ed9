//! How much clique a join needs before its spectral radius passes n/2: the
//! minimal k for K_k v E_{n-k}, swept over n against the limiting ratio
//! (3 - sqrt 5)/4 = 0.19098...

use spectral_cycles::verify::join_threshold_sweep;

fn main() {
    let sweep = join_threshold_sweep(&[20, 50, 100, 200, 500, 1000, 2000, 5000]).unwrap();
    println!("{:>6} {:>7} {:>12} {:>10} {:>10}", "n", "k_min", "mu", "ratio", "deviation");
    for row in &sweep.rows {
        println!(
            "{:>6} {:>7} {:>12.4} {:>10.6} {:>10.6}",
            row.n, row.k_min, row.mu, row.ratio, row.deviation
        );
    }
    println!("limit: (3 - sqrt 5)/4 = {:.6}", sweep.limit_constant);
}

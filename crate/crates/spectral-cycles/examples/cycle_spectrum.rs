//! Exhaustive cycle spectra with verified witnesses, plus the budget
//! semantics that keep every answer honest.

use spectral_cycles::construct::{complete, petersen, turan_t2, wheel};
use spectral_cycles::cycles::{cycle_spectrum, has_cycle_of_length, DEFAULT_CYCLE_BUDGET};
use spectral_cycles::CycleStatus;

fn main() {
    for (name, g) in [
        ("petersen", petersen()),
        ("K7", complete(7)),
        ("T2(8)", turan_t2(8).unwrap().graph),
        ("wheel W9", wheel(9).unwrap()),
    ] {
        let report = cycle_spectrum(&g, g.order(), DEFAULT_CYCLE_BUDGET);
        println!("== {name} ==");
        for entry in &report.entries {
            match &entry.status {
                CycleStatus::Found(w) => println!("  t={}: {w:?}", entry.t),
                CycleStatus::Absent => println!("  t={}: none (exhaustive)", entry.t),
                CycleStatus::BudgetExhausted => println!("  t={}: undecided", entry.t),
            }
        }
        println!(
            "  girth {:?}, circumference {:?}, exhaustive {}",
            report.girth(),
            report.circumference(),
            report.exhaustive()
        );
        println!();
    }

    // A tiny budget can run out; the status says so instead of guessing.
    let g = complete(14);
    let search = has_cycle_of_length(&g, 13, 40).unwrap();
    println!("K14, t=13, budget 40: {:?}", search.status);
    let search = has_cycle_of_length(&g, 13, DEFAULT_CYCLE_BUDGET).unwrap();
    println!(
        "K14, t=13, default budget: found = {} after {} expansions",
        search.status.is_found(),
        search.expanded
    );
}

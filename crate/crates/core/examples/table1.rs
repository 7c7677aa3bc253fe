//! Prints the bound table for the classical families with exact `cp` values
//! where the solver is within its size guard.

use specpart::table::{table_row, TableRanges};
use specpart::SolveOptions;

fn main() {
    let opts = SolveOptions::default();
    println!(
        "{:<10} {:>3} {:>4} {:>9} {:>9} {:>9} {:>9} {:>8} {:>9}",
        "family", "n", "m", "cp_lower", "cp_via_pi", "hoff_q", "hoff_lam", "cp", "residual"
    );
    for inst in TableRanges::default().instances() {
        let row = table_row(inst, Some(&opts)).expect("table families are connected");
        println!(
            "{:<10} {:>3} {:>4} {:>9.4} {:>9.4} {:>9.4} {:>9.4} {:>8} {:>9.1e}",
            row.family,
            row.n,
            row.m,
            row.cp_lower,
            row.cp_via_pi,
            row.hoffman_eigencount,
            row.hoffman_min_eigenvalue,
            row.cp,
            row.max_residual
        );
    }
}

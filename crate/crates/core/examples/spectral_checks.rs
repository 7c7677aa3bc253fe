//! Spectra of a few graphs, the trace identities and a Weyl sweep.

use specpart::graph::generators;
use specpart::spectral::{check_weyl, count_not_minus_one, graph_spectrum};
use specpart::SymMatrix;

fn main() {
    let graphs = [
        ("Petersen", generators::petersen()),
        ("T(6)", generators::triangular(6).unwrap()),
        ("F_4", generators::friendship(4).unwrap()),
        ("complement of C_7", generators::cycle_complement(7).unwrap()),
    ];
    for (name, g) in &graphs {
        let s = graph_spectrum(g).unwrap();
        let grouped: Vec<String> = s.grouped().iter().map(|(v, m)| format!("{v:.4}^{m}")).collect();
        let trace: f64 = s.eigenvalues().iter().sum();
        let squares: f64 = s.eigenvalues().iter().map(|x| x * x).sum();
        println!(
            "{name:<18} {}  | sum {:+.1e}  sum of squares {:.6} (2m = {})  q {}",
            grouped.join(" "),
            trace,
            squares,
            2 * g.m(),
            count_not_minus_one(g).unwrap()
        );
    }

    let a = SymMatrix::adjacency(&graphs[0].1);
    let b = SymMatrix::adjacency(&graphs[0].1.complement());
    let mut checked = 0;
    for i in 1..=a.order() {
        for j in 1..=a.order() {
            let w = check_weyl(&a, &b, i, j).unwrap();
            assert!(w.upper.unwrap_or(true) && w.lower.unwrap_or(true));
            checked += 1;
        }
    }
    println!("Weyl inequalities hold for all {checked} index pairs of Petersen + complement");
}

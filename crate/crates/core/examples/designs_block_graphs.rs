//! Builds Steiner 2-designs, their block graphs and the canonical
//! decompositions, then recovers each design from its decomposition.

use specpart::designs::{
    affine_plane, block_graph, bose_sts, decomposition_to_design, projective_plane, trivial_pair_design,
    validate_design,
};
use specpart::spectral::graph_spectrum;

fn main() {
    let designs = [
        ("AG(2,3)", affine_plane(3).unwrap()),
        ("PG(2,2)", projective_plane(2).unwrap()),
        ("PG(2,3)", projective_plane(3).unwrap()),
        ("pairs of 5", trivial_pair_design(5).unwrap()),
        ("STS(9)", bose_sts(9).unwrap()),
    ];
    for (name, d) in designs {
        let p = validate_design(&d).unwrap();
        let bg = block_graph(&d).unwrap();
        let spectrum = graph_spectrum(&bg.graph).unwrap();
        let grouped: Vec<String> = spectrum
            .grouped()
            .iter()
            .map(|(value, mult)| format!("{:.3}^{mult}", if value.abs() < 5e-4 { 0.0 } else { *value }))
            .collect();
        let recovered = decomposition_to_design(&bg.graph, &bg.partition).unwrap();
        let back = validate_design(&recovered).unwrap();
        println!(
            "{name:<11} v {:>2} k {} r {:>2} b {:>2} | block graph n {:>2} m {:>3} t {:>2} | {} | recovered v {} b {}",
            p.v,
            p.k,
            p.r,
            p.b,
            bg.graph.n(),
            bg.graph.m(),
            bg.t,
            grouped.join(" "),
            back.v,
            back.b
        );
    }
}

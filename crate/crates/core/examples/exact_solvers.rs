//! Exact `cp`, `π`, their `t`-restricted forms and `k_t` on small graphs,
//! with witnesses.

use specpart::graph::generators;
use specpart::partition::{solve_cp, solve_cp_t, solve_kt, solve_pi, solve_pi_t};
use specpart::SolveOptions;

fn show(label: &str, optimum: usize, cliques: &[specpart::Clique], nodes: u64) {
    let parts: Vec<String> = cliques.iter().map(|q| format!("{:?}", q.vertices())).collect();
    println!("  {label:<8} {optimum:>3}  ({nodes} nodes)  {}", parts.join(" "));
}

fn main() {
    let opts = SolveOptions::default();
    let graphs = [
        ("triangle chain", generators::triangle_chain()),
        ("T(5)", generators::triangular(5).unwrap()),
        ("complement of C_9", generators::cycle_complement(9).unwrap()),
    ];
    for (name, g) in graphs {
        println!("{name}: n {} m {}", g.n(), g.m());
        let r = solve_cp(&g, &opts).unwrap();
        show("cp", r.optimum, r.witness.cliques(), r.nodes_explored);
        let r = solve_pi(&g, &opts).unwrap();
        show("pi", r.optimum, r.witness.cliques(), r.nodes_explored);
        let r = solve_cp_t(&g, 3, &opts).unwrap();
        show("cp_3", r.optimum, r.witness.cliques(), r.nodes_explored);
        let r = solve_pi_t(&g, 3, &opts).unwrap();
        show("pi_3", r.optimum, r.witness.cliques(), r.nodes_explored);
        let r = solve_kt(&g, 3, &opts).unwrap();
        show("k_3", r.optimum, r.witness.cliques(), r.nodes_explored);
    }

    let k7 = generators::complete(7).unwrap();
    let r = solve_cp(&k7, &opts.clone().excluding_trivial()).unwrap();
    println!("K_7 without the trivial partition:");
    show("cp", r.optimum, r.witness.cliques(), r.nodes_explored);
}

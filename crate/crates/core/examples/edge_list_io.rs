//! Writes a graph as an edge list, reads it back, and reads a partition
//! from JSON.

use specpart::graph::{edgelist, generators};
use specpart::partition::{solve_cp, PartitionJson};
use specpart::{CliquePartition, SolveOptions};

fn main() {
    let g = generators::triangle_chain();
    let text = edgelist::write(&g);
    print!("{text}");
    let back = edgelist::parse(&text).unwrap();
    assert_eq!(back, g);

    let p = solve_cp(&g, &SolveOptions::default()).unwrap();
    let json = serde_json::to_string(&p.witness.as_partition().unwrap().to_json()).unwrap();
    println!("{json}");
    let parsed: PartitionJson = serde_json::from_str(&json).unwrap();
    let q = CliquePartition::from_json(back, &parsed).unwrap();
    println!("{} cliques, total size {}", q.size(), q.total_size());

    match edgelist::parse("4 2\n0 1\n1 1\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}

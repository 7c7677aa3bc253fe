//! Decides whether the `t`-restricted bounds are attained and prints the
//! certificate when one exists.

use specpart::bounds::{classify_equality, EqualityTarget};
use specpart::family;
use specpart::SolveOptions;

fn main() {
    let opts = SolveOptions::default();
    let cases = [
        ("complete:7", 3, EqualityTarget::CliqueCount),
        ("triangular:5", 4, EqualityTarget::CliqueCount),
        ("multipartite:3x3", 3, EqualityTarget::CliqueCount),
        ("multipartite:2,2,2", 3, EqualityTarget::TotalSize),
        ("friendship:2", 3, EqualityTarget::TotalSize),
        ("multipartite:2,2,2", 3, EqualityTarget::Packing),
        ("block-graph:affine:3", 4, EqualityTarget::Packing),
    ];
    for (spec, t, target) in cases {
        let g = family::build(spec).unwrap();
        let r = classify_equality(&g, t, target, &opts).unwrap();
        println!(
            "{spec:<22} t={t} {:<10} raw {:>8.4} strengthened {:>3} exact {:>4}  {}",
            r.name.as_str(),
            r.raw,
            r.strengthened,
            r.exact.map_or("-".into(), |e| e.to_string()),
            r.equality_diagnosis.as_str()
        );
        if let Some(cert) = &r.certificate {
            println!("    certificate {}", serde_json::to_string(cert).unwrap());
        }
    }
}

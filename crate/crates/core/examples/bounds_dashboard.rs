//! Evaluates every bound on a few graphs and compares with exact optima.
//!
//! ```text
//! cargo run --example bounds_dashboard -- friendship:3 3
//! ```

use specpart::bounds::{bound_dashboard, DashboardOptions};
use specpart::family;

fn main() {
    let mut args = std::env::args().skip(1);
    let specs: Vec<(String, Option<usize>)> = match args.next() {
        Some(spec) => vec![(spec, args.next().map(|t| t.parse().expect("t is an integer")))],
        None => vec![
            ("triangular:5".into(), Some(3)),
            ("friendship:2".into(), Some(3)),
            ("multipartite:3x3".into(), Some(3)),
            ("petersen".into(), None),
        ],
    };
    for (spec, t) in specs {
        let g = family::build(&spec).expect("known family");
        let opts = DashboardOptions {
            t,
            exact: true,
            ..DashboardOptions::default()
        };
        println!("{spec}  (n {}, m {})", g.n(), g.m());
        for r in bound_dashboard(&g, &opts).expect("connected graph") {
            let exact = r.exact.map_or("-".to_string(), |e| e.to_string());
            println!(
                "  {:<24} {:>12.6} -> {:>3}   exact {:>3}   {}",
                r.name.as_str(),
                r.raw,
                r.strengthened,
                exact,
                r.equality_diagnosis.as_str()
            );
        }
    }
}

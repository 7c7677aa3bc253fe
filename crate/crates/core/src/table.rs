//! The four clique-partition bounds on the classical families, next to
//! their closed forms.
//!
//! | family        | `cp_lower`        | `cp_via_pi`           | `hoffman_eigencount` | `hoffman_min_eigenvalue` |
//! |---------------|-------------------|-----------------------|----------------------|--------------------------|
//! | `K_{p×a}`     | `p(a-1)+1`        | `a²`                  | `(-1+√(8pa+1))/2`    | `a`                      |
//! | `C̄_{2s+1}`    | `s+1`             | `(4s+2)/s`            | `(-1+√(16s+9))/2`    | `2cos(2π/(2s+1))+1`      |
//! | `T(v)`        | `v`               | `v`                   | `v-1`                | `2`                      |
//! | `F_v`         | `(-1+√(8v+1))/2`  | `(4v-1+√(8v+1))/6`    | `(-1+√(8v+9))/2`     | `(-1+√(8v+1))/2`         |

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bounds::{
    cp_lower_bound_with, cp_via_pi_bound_with, hoffman_eigencount_with,
    hoffman_min_eigenvalue_with, BoundError, GraphFacts,
};
use crate::family::Family;
use crate::graph::{generators, Graph};
use crate::partition::{solve_cp, SolveError, SolveOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFamily {
    Multipartite { p: usize, a: usize },
    /// `C̄_{2s+1}`.
    CycleComplement { s: usize },
    Triangular { v: usize },
    Friendship { v: usize },
}

impl TableFamily {
    pub fn graph(self) -> Graph {
        match self {
            TableFamily::Multipartite { p, a } => generators::complete_multipartite_uniform(p, a),
            TableFamily::CycleComplement { s } => generators::cycle_complement(2 * s + 1),
            TableFamily::Triangular { v } => generators::triangular(v),
            TableFamily::Friendship { v } => generators::friendship(v),
        }
        .expect("table parameters are in range")
    }

    pub fn family(self) -> Family {
        match self {
            TableFamily::Multipartite { p, a } => Family::Multipartite(vec![a; p]),
            TableFamily::CycleComplement { s } => Family::CycleComplement(2 * s + 1),
            TableFamily::Triangular { v } => Family::Triangular(v),
            TableFamily::Friendship { v } => Family::Friendship(v),
        }
    }

    /// Closed forms in dashboard order: `cp_lower`, `cp_via_pi`,
    /// `hoffman_eigencount`, `hoffman_min_eigenvalue`.
    pub fn closed_forms(self) -> [f64; 4] {
        let sqrt = |x: usize| (x as f64).sqrt();
        match self {
            TableFamily::Multipartite { p, a } => [
                (p * (a - 1) + 1) as f64,
                (a * a) as f64,
                (-1.0 + sqrt(8 * p * a + 1)) / 2.0,
                a as f64,
            ],
            TableFamily::CycleComplement { s } => {
                let s_f = s as f64;
                [
                    s_f + 1.0,
                    (4.0 * s_f + 2.0) / s_f,
                    (-1.0 + sqrt(16 * s + 9)) / 2.0,
                    2.0 * (2.0 * std::f64::consts::PI / (2.0 * s_f + 1.0)).cos() + 1.0,
                ]
            }
            TableFamily::Triangular { v } => [v as f64, v as f64, (v - 1) as f64, 2.0],
            TableFamily::Friendship { v } => {
                let r = sqrt(8 * v + 1);
                [
                    (-1.0 + r) / 2.0,
                    (4.0 * v as f64 - 1.0 + r) / 6.0,
                    (-1.0 + sqrt(8 * v + 9)) / 2.0,
                    (-1.0 + r) / 2.0,
                ]
            }
        }
    }

    /// `cp` where it is known in closed form.
    pub fn known_cp(self) -> Option<usize> {
        match self {
            TableFamily::Triangular { v } | TableFamily::Friendship { v } => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for TableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableFamily::Multipartite { p, a } => write!(f, "K_{{{p}x{a}}}"),
            TableFamily::CycleComplement { s } => write!(f, "co-C_{}", 2 * s + 1),
            TableFamily::Triangular { v } => write!(f, "T({v})"),
            TableFamily::Friendship { v } => write!(f, "F_{v}"),
        }
    }
}

/// Parameter sweeps, as inclusive ranges.
#[derive(Clone, Debug)]
pub struct TableRanges {
    pub multipartite_p: (usize, usize),
    pub multipartite_a: (usize, usize),
    pub cycle_complement_s: (usize, usize),
    pub triangular_v: (usize, usize),
    pub friendship_v: (usize, usize),
}

impl Default for TableRanges {
    fn default() -> Self {
        TableRanges {
            multipartite_p: (2, 5),
            multipartite_a: (2, 5),
            cycle_complement_s: (2, 6),
            triangular_v: (4, 8),
            friendship_v: (2, 8),
        }
    }
}

impl TableRanges {
    pub fn instances(&self) -> Vec<TableFamily> {
        let range = |(lo, hi): (usize, usize)| lo..=hi;
        let mut out = Vec::new();
        for p in range(self.multipartite_p) {
            for a in range(self.multipartite_a) {
                out.push(TableFamily::Multipartite { p, a });
            }
        }
        out.extend(range(self.cycle_complement_s).map(|s| TableFamily::CycleComplement { s }));
        out.extend(range(self.triangular_v).map(|v| TableFamily::Triangular { v }));
        out.extend(range(self.friendship_v).map(|v| TableFamily::Friendship { v }));
        out
    }
}

/// Exact `cp` cell of a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CpCell {
    Exact(usize),
    /// Beyond the size guard, or solving was not requested.
    Skipped,
    TimedOut,
}

impl fmt::Display for CpCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CpCell::Exact(v) => f.pad(&v.to_string()),
            CpCell::Skipped => f.pad("skipped"),
            CpCell::TimedOut => f.pad("timeout"),
        }
    }
}

impl Serialize for CpCell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CpCell::Exact(v) => s.serialize_u64(*v as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub family: String,
    pub spec: String,
    pub n: usize,
    pub m: usize,
    pub cp_lower: f64,
    pub cp_via_pi: f64,
    pub hoffman_eigencount: f64,
    pub hoffman_min_eigenvalue: f64,
    pub cp: CpCell,
    /// Largest `|evaluated - closed form|` over the four bounds.
    pub max_residual: f64,
}

impl TableRow {
    pub fn values(&self) -> [f64; 4] {
        [
            self.cp_lower,
            self.cp_via_pi,
            self.hoffman_eigencount,
            self.hoffman_min_eigenvalue,
        ]
    }
}

/// Evaluates one row. `opts` is `None` to skip the exact column.
pub fn table_row(inst: TableFamily, opts: Option<&SolveOptions>) -> Result<TableRow, BoundError> {
    let g = inst.graph();
    let facts = GraphFacts::compute(&g)?;
    let values = [
        cp_lower_bound_with(&facts)?.raw,
        cp_via_pi_bound_with(&facts)?.raw,
        hoffman_eigencount_with(&facts)?.raw,
        hoffman_min_eigenvalue_with(&facts)?.raw,
    ];
    let max_residual = values
        .iter()
        .zip(inst.closed_forms())
        .map(|(v, c)| (v - c).abs())
        .fold(0.0, f64::max);
    let cp = match opts {
        Some(opts) if opts.force || g.m() <= opts.edge_limit => match solve_cp(&g, opts) {
            Ok(r) => CpCell::Exact(r.optimum),
            Err(SolveError::Timeout { .. }) => CpCell::TimedOut,
            Err(SolveError::SizeGuard { .. }) => CpCell::Skipped,
            Err(e) => return Err(e.into()),
        },
        _ => CpCell::Skipped,
    };
    Ok(TableRow {
        family: inst.to_string(),
        spec: inst.family().to_string(),
        n: g.n(),
        m: g.m(),
        cp_lower: values[0],
        cp_via_pi: values[1],
        hoffman_eigencount: values[2],
        hoffman_min_eigenvalue: values[3],
        cp,
        max_residual,
    })
}

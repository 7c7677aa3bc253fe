//! Clique partitions, edge-disjoint clique packings and the spectral bounds
//! that constrain them.
//!
//! The crate is organised around a small dense [`Graph`] type:
//!
//! * [`spectral`]: symmetric eigenvalues, spectra and Weyl checks.
//! * [`cliques`]: clique enumeration and the clique number.
//! * [`partition`]: clique partitions, incidence matrices, and exact
//!   branch-and-bound solvers for `cp`, `cp_t`, `π`, `π_t` and `k_t`.
//! * [`designs`]: Steiner 2-designs, their block graphs and the
//!   correspondence with pairwise-meeting `K_t`-decompositions.
//! * [`bounds`]: the spectral lower and upper bounds with equality
//!   diagnosis.
//! * [`cli`]: the `specpart` command-line front end.
//!
//! ```
//! use specpart::{bounds, graph::generators};
//!
//! let g = generators::triangular(5).unwrap();
//! let r = bounds::cp_lower_bound(&g).unwrap();
//! assert_eq!(r.strengthened, 5);
//! ```

pub mod bounds;
pub mod cli;
pub mod cliques;
pub mod designs;
pub mod family;
pub mod graph;
pub mod partition;
pub mod spectral;
pub mod table;

pub use bounds::{BoundError, BoundName, BoundReport, EqualityDiagnosis};
pub use cliques::Clique;
pub use designs::{BlockGraph, Design};
pub use graph::{Graph, GraphError};
pub use partition::{CliquePartition, SolveOptions, SolveResult};
pub use spectral::{Spectrum, SymMatrix};

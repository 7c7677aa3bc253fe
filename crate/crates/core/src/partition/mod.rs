//! Clique partitions: validation, derived structures and exact solvers.
//!
//! A clique partition of `G` is a family of cliques (each with at least two
//! vertices) such that every edge of `G` lies in exactly one of them.

mod decompose;
mod search;
mod solve;

pub use decompose::{find_kt_decomposition, find_kt_decomposition_with, DecompositionQuery, DecompositionOutcome};
pub use solve::{
    solve_cp, solve_cp_t, solve_kt, solve_pi, solve_pi_t, SolveError, SolveOptions, SolveResult,
    Witness, DEFAULT_EDGE_LIMIT,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cliques::Clique;
use crate::graph::Graph;
use crate::spectral::SymMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("edge {{{0}, {1}}} is not covered by any clique")]
    EdgeUncovered(usize, usize),
    #[error("edge {{{0}, {1}}} is covered more than once")]
    EdgeCoveredTwice(usize, usize),
    #[error("member {0} is not a clique of the host graph")]
    NotAClique(usize),
    #[error("member {0} has fewer than two vertices")]
    CliqueTooSmall(usize),
    #[error("vertex {vertex} out of range for a host on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("partition is for {found} vertices but the host has {expected}")]
    HostMismatch { expected: usize, found: usize },
}

/// Counting data of a valid clique partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    /// Number of cliques `v`.
    pub size: usize,
    /// `s(Q) = Σ |Q_i|`.
    pub total_size: usize,
    /// `d_u^Q` for every vertex `u`.
    pub q_degrees: Vec<usize>,
    pub max_clique_size: usize,
}

/// A validated clique partition of a host graph. Cliques are kept in
/// canonical (lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePartition {
    host: Graph,
    cliques: Vec<Clique>,
}

/// Checks that `cliques` partition the edges of `host` and returns the
/// counting data.
pub fn validate(host: &Graph, cliques: &[Clique]) -> Result<PartitionStats, PartitionError> {
    let n = host.n();
    let mut cover = vec![false; n * n];
    for (idx, q) in cliques.iter().enumerate() {
        if let Some(&vertex) = q.vertices().iter().find(|&&v| v >= n) {
            return Err(PartitionError::VertexOutOfRange { vertex, n });
        }
        if q.len() < 2 {
            return Err(PartitionError::CliqueTooSmall(idx));
        }
        for (a, b) in q.pairs() {
            if !host.has_edge(a, b) {
                return Err(PartitionError::NotAClique(idx));
            }
            if std::mem::replace(&mut cover[a * n + b], true) {
                return Err(PartitionError::EdgeCoveredTwice(a, b));
            }
        }
    }
    if let Some((a, b)) = host.edges().find(|&(a, b)| !cover[a * n + b]) {
        return Err(PartitionError::EdgeUncovered(a, b));
    }

    let mut q_degrees = vec![0; n];
    for q in cliques {
        for &u in q.vertices() {
            q_degrees[u] += 1;
        }
    }
    let stats = PartitionStats {
        size: cliques.len(),
        total_size: cliques.iter().map(Clique::len).sum(),
        q_degrees,
        max_clique_size: cliques.iter().map(Clique::len).max().unwrap_or(0),
    };
    debug_assert_eq!(stats.total_size, stats.q_degrees.iter().sum::<usize>());
    debug_assert_eq!(cliques.iter().map(Clique::edge_count).sum::<usize>(), host.m());
    Ok(stats)
}

impl CliquePartition {
    pub fn new(host: Graph, cliques: Vec<Clique>) -> Result<Self, PartitionError> {
        let mut cliques = cliques;
        cliques.sort();
        validate(&host, &cliques)?;
        Ok(CliquePartition { host, cliques })
    }

    /// Every edge as its own clique.
    pub fn all_edges(host: &Graph) -> Self {
        let cliques = host.edges().map(|(u, v)| Clique::new(vec![u, v])).collect();
        CliquePartition {
            host: host.clone(),
            cliques,
        }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn size(&self) -> usize {
        self.cliques.len()
    }

    pub fn total_size(&self) -> usize {
        self.cliques.iter().map(Clique::len).sum()
    }

    pub fn stats(&self) -> PartitionStats {
        validate(&self.host, &self.cliques).expect("partition validated on construction")
    }

    /// Whether every clique has exactly `t` vertices.
    pub fn is_kt_decomposition(&self, t: usize) -> bool {
        self.cliques.iter().all(|q| q.len() == t)
    }

    /// `Ω(Q)`: vertex `i` is the `i`-th clique, adjacent when they meet.
    pub fn clique_graph(&self) -> Graph {
        Graph::from_fn(self.cliques.len(), |i, j| {
            self.cliques[i].intersection_size(&self.cliques[j]) > 0
        })
    }

    /// `B_Q`.
    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let rows = self.host.n();
        let cols = self.cliques.len();
        let mut data = vec![0u8; rows * cols];
        for (j, q) in self.cliques.iter().enumerate() {
            for &u in q.vertices() {
                data[u * cols + j] = 1;
            }
        }
        IncidenceMatrix { rows, cols, data }
    }

    /// Checks `B Bᵀ = A(G) + D` and `Bᵀ B = A(Ω(Q)) + E` entrywise in
    /// integer arithmetic.
    pub fn verify_gram_identities(&self) -> bool {
        let b = self.incidence_matrix();
        let stats = self.stats();

        let vertex_gram = b.vertex_gram();
        let n = self.host.n();
        let vertex_ok = (0..n).all(|i| {
            (0..n).all(|j| {
                let expected = if i == j {
                    stats.q_degrees[i]
                } else {
                    usize::from(self.host.has_edge(i, j))
                };
                vertex_gram[i * n + j] == expected
            })
        });

        let omega = self.clique_graph();
        let clique_gram = b.clique_gram();
        let v = self.cliques.len();
        let clique_ok = (0..v).all(|i| {
            (0..v).all(|j| {
                let expected = if i == j {
                    self.cliques[i].len()
                } else {
                    usize::from(omega.has_edge(i, j))
                };
                clique_gram[i * v + j] == expected
            })
        });
        vertex_ok && clique_ok
    }

    pub fn to_json(&self) -> PartitionJson {
        PartitionJson {
            n: self.host.n(),
            cliques: self.cliques.iter().map(|q| q.vertices().to_vec()).collect(),
        }
    }

    pub fn from_json(host: Graph, json: &PartitionJson) -> Result<Self, PartitionError> {
        if json.n != host.n() {
            return Err(PartitionError::HostMismatch {
                expected: host.n(),
                found: json.n,
            });
        }
        let cliques = json.cliques.iter().map(|q| Clique::new(q.clone())).collect();
        CliquePartition::new(host, cliques)
    }
}

/// Wire format `{"n": int, "cliques": [[int, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub n: usize,
    pub cliques: Vec<Vec<usize>>,
}

/// The 0/1 vertex–clique incidence matrix, `rows = |V(G)|`, `cols = |Q|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, vertex: usize, clique: usize) -> u8 {
        self.data[vertex * self.cols + clique]
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| usize::from(self.get(i, j))).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| usize::from(self.get(i, j))).sum())
            .collect()
    }

    /// `B Bᵀ`, row-major `rows × rows`.
    pub fn vertex_gram(&self) -> Vec<usize> {
        let n = self.rows;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (0..self.cols)
                    .map(|k| usize::from(self.get(i, k) & self.get(j, k)))
                    .sum();
            }
        }
        out
    }

    /// `Bᵀ B`, row-major `cols × cols`.
    pub fn clique_gram(&self) -> Vec<usize> {
        let v = self.cols;
        let mut out = vec![0; v * v];
        for i in 0..v {
            for j in 0..v {
                out[i * v + j] = (0..self.rows)
                    .map(|u| usize::from(self.get(u, i) & self.get(u, j)))
                    .sum();
            }
        }
        out
    }

    pub fn vertex_gram_matrix(&self) -> SymMatrix {
        let g = self.vertex_gram();
        SymMatrix::from_upper(self.rows, |i, j| g[i * self.rows + j] as f64)
    }

    pub fn clique_gram_matrix(&self) -> SymMatrix {
        let g = self.clique_gram();
        SymMatrix::from_upper(self.cols, |i, j| g[i * self.cols + j] as f64)
    }
}

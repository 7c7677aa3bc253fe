//! Clique recognition and enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

/// A vertex set in canonical (strictly increasing) order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Clique(Vec<usize>);

impl Clique {
    /// Sorts and deduplicates `vertices`. Adjacency is not checked here.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Clique(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Number of edges spanned, `|Q|(|Q|-1)/2`.
    pub fn edge_count(&self) -> usize {
        self.0.len() * self.0.len().saturating_sub(1) / 2
    }

    pub fn intersection_size(&self, other: &Clique) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Vertex pairs `(a, b)`, `a < b`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(move |(i, &a)| self.0[i + 1..].iter().map(move |&b| (a, b)))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Debug for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

impl From<Vec<usize>> for Clique {
    fn from(v: Vec<usize>) -> Self {
        Clique::new(v)
    }
}

/// Whether every pair of `vertices` is adjacent. The empty set and
/// singletons are cliques.
pub fn is_clique(g: &Graph, vertices: &[usize]) -> Result<bool, GraphError> {
    if let Some(&bad) = vertices.iter().find(|&&v| v >= g.n()) {
        return Err(GraphError::VertexOutOfRange {
            vertex: bad,
            n: g.n(),
        });
    }
    Ok(vertices.iter().enumerate().all(|(i, &a)| {
        vertices[i + 1..]
            .iter()
            .all(|&b| a != b && g.has_edge(a, b))
    }))
}

/// All inclusion-maximal cliques in lexicographic order. Isolated vertices
/// appear as singleton cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<Clique> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let candidates: Vec<usize> = (0..g.n()).collect();
    bron_kerbosch(g, &mut current, candidates, Vec::new(), &mut out);
    for c in &mut out {
        c.0.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    mut excluded: Vec<usize>,
    out: &mut Vec<Clique>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(Clique(current.clone()));
        }
        return;
    }
    // Pivot on the vertex with the most neighbours among the candidates.
    let pivot = candidates
        .iter()
        .chain(&excluded)
        .copied()
        .max_by_key(|&u| {
            let hits = candidates.iter().filter(|&&v| g.has_edge(u, v)).count();
            (hits, std::cmp::Reverse(u))
        })
        .expect("candidates non-empty");

    let branch: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    let mut remaining = candidates;
    for v in branch {
        let next_candidates = remaining.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let next_excluded = excluded.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        current.push(v);
        bron_kerbosch(g, current, next_candidates, next_excluded, out);
        current.pop();
        remaining.retain(|&w| w != v);
        excluded.push(v);
    }
}

/// `ω(G)`; zero only for the graph on no vertices.
pub fn clique_number(g: &Graph) -> usize {
    maximal_cliques(g).iter().map(Clique::len).max().unwrap_or(0)
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("clique size limit must be at least 2, got {0}")]
pub struct SizeLimitError(pub usize);

/// Every clique with `2 ≤ |Q| ≤ t`, in lexicographic order.
pub fn cliques_up_to(g: &Graph, t: usize) -> Result<Vec<Clique>, SizeLimitError> {
    if t < 2 {
        return Err(SizeLimitError(t));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    for v in 0..g.n() {
        let higher: Vec<usize> = g.neighbors(v).filter(|&w| w > v).collect();
        current.push(v);
        extend_cliques(g, t, &mut current, &higher, &mut out);
        current.pop();
    }
    Ok(out)
}

fn extend_cliques(
    g: &Graph,
    t: usize,
    current: &mut Vec<usize>,
    candidates: &[usize],
    out: &mut Vec<Clique>,
) {
    if current.len() == t {
        return;
    }
    for (i, &w) in candidates.iter().enumerate() {
        current.push(w);
        out.push(Clique(current.clone()));
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&x| g.has_edge(w, x))
            .collect();
        extend_cliques(g, t, current, &next, out);
        current.pop();
    }
}

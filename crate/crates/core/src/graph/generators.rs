//! Generators for the graph families used throughout the crate.
//!
//! Vertex labelling is fixed per family so partitions written down in tests
//! stay reproducible:
//!
//! * [`complete_multipartite`]: parts are consecutive vertex ranges.
//! * [`triangular`]: 2-subsets `{a, b}` of `0..v` in lexicographic order.
//! * [`friendship`]: vertex 0 is the centre; triangle `i` is `{0, 2i+1, 2i+2}`.

use super::{Graph, GraphError};

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), GraphError> {
    if cond {
        Ok(())
    } else {
        Err(GraphError::InvalidParameter(msg()))
    }
}

/// `K_n`, `n ≥ 1`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    require(n >= 1, || format!("complete graph needs n >= 1, got {n}"))?;
    Ok(Graph::from_fn(n, |_, _| true))
}

/// Complete multipartite graph with the given part sizes (each `≥ 1`).
pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Graph, GraphError> {
    require(!part_sizes.is_empty(), || "multipartite graph needs at least one part".into())?;
    require(part_sizes.iter().all(|&s| s >= 1), || {
        format!("every part must have size >= 1, got {part_sizes:?}")
    })?;
    let part_of: Vec<usize> = part_sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    Ok(Graph::from_fn(part_of.len(), |u, v| part_of[u] != part_of[v]))
}

/// `K_{p×a}`: `p` parts of size `a`.
pub fn complete_multipartite_uniform(p: usize, a: usize) -> Result<Graph, GraphError> {
    complete_multipartite(&vec![a; p])
}

/// `C_n`, `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    require(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complement of `C_n`.
pub fn cycle_complement(n: usize) -> Result<Graph, GraphError> {
    Ok(cycle(n)?.complement())
}

/// `P_n` on `n ≥ 1` vertices.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    require(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    Graph::from_fn(edges.len(), |i, j| {
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        a == c || a == d || b == c || b == d
    })
}

/// Triangular graph `T(v)`, the line graph of `K_v`, `v ≥ 3`.
pub fn triangular(v: usize) -> Result<Graph, GraphError> {
    require(v >= 3, || format!("triangular graph needs v >= 3, got {v}"))?;
    Ok(line_graph(&complete(v)?))
}

/// Index of the pair `{a, b}` (`a < b < v`) in the vertex labelling of
/// [`triangular`].
pub fn triangular_vertex(v: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < v);
    a * v - a * (a + 1) / 2 + (b - a - 1)
}

/// Friendship graph `F_v`: `v ≥ 1` triangles sharing vertex 0.
pub fn friendship(v: usize) -> Result<Graph, GraphError> {
    require(v >= 1, || format!("friendship graph needs v >= 1, got {v}"))?;
    Graph::from_edges(
        2 * v + 1,
        (0..v).flat_map(|i| [(0, 2 * i + 1), (0, 2 * i + 2), (2 * i + 1, 2 * i + 2)]),
    )
}

/// The Petersen graph, as the complement of `T(5)`.
pub fn petersen() -> Graph {
    line_graph(&Graph::from_fn(5, |_, _| true)).complement()
}

/// Three triangles `{0,1,2}`, `{1,3,4}`, `{2,4,5}` glued pairwise at a vertex.
pub fn triangle_chain() -> Graph {
    Graph::from_edges(
        6,
        [
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (1, 4),
            (3, 4),
            (2, 4),
            (2, 5),
            (4, 5),
        ],
    )
    .expect("static edge list")
}

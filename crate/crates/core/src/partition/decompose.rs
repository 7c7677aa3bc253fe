//! `K_t`-decompositions by exact cover of the edge set.

use super::search::EdgeSet;
use super::solve::SolveError;
use super::CliquePartition;
use crate::cliques::{cliques_up_to, Clique};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecompositionQuery {
    pub t: usize,
    /// Also require every two cliques to share a vertex (complete clique graph).
    pub pairwise_intersecting: bool,
    /// Give up after this many search nodes.
    pub node_limit: Option<u64>,
}

impl DecompositionQuery {
    pub fn new(t: usize) -> Self {
        DecompositionQuery {
            t,
            pairwise_intersecting: false,
            node_limit: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionOutcome {
    Found(CliquePartition),
    /// The search space was exhausted (or a divisibility filter failed).
    NotFound,
    BudgetExceeded,
}

/// A `K_t`-decomposition of `g` if one exists.
pub fn find_kt_decomposition(g: &Graph, t: usize) -> Result<Option<CliquePartition>, SolveError> {
    match find_kt_decomposition_with(g, DecompositionQuery::new(t))? {
        DecompositionOutcome::Found(p) => Ok(Some(p)),
        _ => Ok(None),
    }
}

pub fn find_kt_decomposition_with(
    g: &Graph,
    query: DecompositionQuery,
) -> Result<DecompositionOutcome, SolveError> {
    let t = query.t;
    if t < 2 {
        return Err(SolveError::InvalidT { t, min: 2 });
    }
    let per_clique = t * (t - 1) / 2;
    if !g.m().is_multiple_of(per_clique) || g.degrees().iter().any(|d| d % (t - 1) != 0) {
        return Ok(DecompositionOutcome::NotFound);
    }

    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.n();
    let mut edge_id = vec![usize::MAX; n * n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        edge_id[u * n + v] = i;
    }
    let cands: Vec<Clique> = cliques_up_to(g, t)
        .expect("t >= 2")
        .into_iter()
        .filter(|q| q.len() == t)
        .collect();
    let masks: Vec<EdgeSet> = cands
        .iter()
        .map(|q| EdgeSet::from_indices(edges.len(), q.pairs().map(|(a, b)| edge_id[a * n + b])))
        .collect();
    let mut by_edge = vec![Vec::new(); edges.len()];
    for (i, q) in cands.iter().enumerate() {
        for (a, b) in q.pairs() {
            by_edge[edge_id[a * n + b]].push(i);
        }
    }

    let mut search = ExactCover {
        m: edges.len(),
        cands: &cands,
        masks: &masks,
        by_edge: &by_edge,
        pairwise: query.pairwise_intersecting,
        node_limit: query.node_limit.unwrap_or(u64::MAX),
        nodes: 0,
        chosen: Vec::new(),
    };
    let mut covered = EdgeSet::new(edges.len());
    match search.descend(&mut covered, 0) {
        Step::Found => {
            let cliques = search.chosen.iter().map(|&i| cands[i].clone()).collect();
            Ok(DecompositionOutcome::Found(CliquePartition::new(g.clone(), cliques)?))
        }
        Step::Exhausted => Ok(DecompositionOutcome::NotFound),
        Step::Budget => Ok(DecompositionOutcome::BudgetExceeded),
    }
}

enum Step {
    Found,
    Exhausted,
    Budget,
}

struct ExactCover<'a> {
    m: usize,
    cands: &'a [Clique],
    masks: &'a [EdgeSet],
    by_edge: &'a [Vec<usize>],
    pairwise: bool,
    node_limit: u64,
    nodes: u64,
    chosen: Vec<usize>,
}

impl ExactCover<'_> {
    fn usable(&self, c: usize, covered: &EdgeSet) -> bool {
        self.masks[c].is_disjoint(covered)
            && (!self.pairwise
                || self
                    .chosen
                    .iter()
                    .all(|&o| self.cands[o].intersection_size(&self.cands[c]) > 0))
    }

    fn descend(&mut self, covered: &mut EdgeSet, covered_count: usize) -> Step {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Step::Budget;
        }
        if covered_count == self.m {
            return Step::Found;
        }
        // Uncovered edge with the fewest usable cliques; ties to the lowest index.
        let mut pick: Option<(usize, usize)> = None;
        for e in 0..self.m {
            if covered.contains(e) {
                continue;
            }
            let options = self.by_edge[e]
                .iter()
                .filter(|&&c| self.usable(c, covered))
                .count();
            if pick.is_none_or(|(_, best)| options < best) {
                pick = Some((e, options));
                if options <= 1 {
                    break;
                }
            }
        }
        let (edge, options) = pick.expect("some edge is uncovered");
        if options == 0 {
            return Step::Exhausted;
        }
        let per_clique = self.cands[0].edge_count();
        for &c in &self.by_edge[edge] {
            if !self.usable(c, covered) {
                continue;
            }
            let saved = covered.clone();
            covered.union_with(&self.masks[c]);
            self.chosen.push(c);
            match self.descend(covered, covered_count + per_clique) {
                Step::Exhausted => {}
                other => return other,
            }
            self.chosen.pop();
            *covered = saved;
        }
        Step::Exhausted
    }
}

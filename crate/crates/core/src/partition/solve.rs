//! Exact solvers for `cp^(t)`, `cp`, `π_t`, `π` and `k_t`.
//!
//! Partition problems branch on the lowest-index uncovered edge and try every
//! still-disjoint clique through it, largest first. Bounds are purely
//! combinatorial: the remaining edges times the cheapest possible cost per
//! edge. Graphs are split into connected components first.

use std::time::{Duration, Instant};

use thiserror::Error;

use super::search::{self, BranchProblem, EdgeSet};
use super::{CliquePartition, PartitionError};
use crate::cliques::{clique_number, cliques_up_to, Clique};
use crate::graph::Graph;

/// Solvers refuse graphs with more edges than this unless forced.
pub const DEFAULT_EDGE_LIMIT: usize = 60;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("clique size limit t = {t} is below the minimum {min}")]
    InvalidT { t: usize, min: usize },
    #[error("graph has {edges} edges, above the solver limit of {limit} (use force to override)")]
    SizeGuard { edges: usize, limit: usize },
    #[error("search timed out after {elapsed:?} ({nodes} nodes)")]
    Timeout { nodes: u64, elapsed: Duration },
    #[error("no clique partition satisfies the constraints")]
    Infeasible,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads; results do not depend on this.
    pub workers: usize,
    /// Forbid the single clique covering every edge (so `cp(K_n) = n`).
    pub exclude_trivial: bool,
    /// Skip the edge-count guard.
    pub force: bool,
    pub edge_limit: usize,
    pub timeout: Option<Duration>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            exclude_trivial: false,
            force: false,
            edge_limit: DEFAULT_EDGE_LIMIT,
            timeout: None,
        }
    }
}

impl SolveOptions {
    pub fn sequential() -> Self {
        SolveOptions {
            workers: 1,
            ..Self::default()
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn excluding_trivial(mut self) -> Self {
        self.exclude_trivial = true;
        self
    }

    pub fn forced(mut self) -> Self {
        self.force = true;
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.timeout = Some(timeout);
        self
    }

    fn check_size(&self, g: &Graph) -> Result<(), SolveError> {
        if !self.force && g.m() > self.edge_limit {
            return Err(SolveError::SizeGuard {
                edges: g.m(),
                limit: self.edge_limit,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Partition(CliquePartition),
    /// Edge-disjoint cliques, not necessarily covering every edge.
    Packing(Vec<Clique>),
}

impl Witness {
    pub fn cliques(&self) -> &[Clique] {
        match self {
            Witness::Partition(p) => p.cliques(),
            Witness::Packing(c) => c,
        }
    }

    pub fn as_partition(&self) -> Option<&CliquePartition> {
        match self {
            Witness::Partition(p) => Some(p),
            Witness::Packing(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: usize,
    pub witness: Witness,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Objective {
    Count,
    TotalSize,
}

/// `cp^(t)(G)`.
pub fn solve_cp_t(g: &Graph, t: usize, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    solve_partition(g, t, Objective::Count, opts)
}

/// `cp(G) = cp^(ω)(G)`.
pub fn solve_cp(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    solve_partition(g, clique_number(g).max(2), Objective::Count, opts)
}

/// `π_t(G)`.
pub fn solve_pi_t(g: &Graph, t: usize, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    solve_partition(g, t, Objective::TotalSize, opts)
}

/// `π(G) = π_ω(G)`.
pub fn solve_pi(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    solve_partition(g, clique_number(g).max(2), Objective::TotalSize, opts)
}

fn solve_partition(
    g: &Graph,
    t: usize,
    objective: Objective,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    if t < 2 {
        return Err(SolveError::InvalidT { t, min: 2 });
    }
    let start = Instant::now();
    if g.m() == 0 {
        return Ok(SolveResult {
            optimum: 0,
            witness: Witness::Partition(CliquePartition::new(g.clone(), Vec::new())?),
            nodes_explored: 0,
            elapsed: start.elapsed(),
        });
    }
    opts.check_size(g)?;
    let deadline = opts.timeout.map(|d| start + d);

    // The trivial partition exists only when the edges form a single clique.
    let nontrivial: Vec<Vec<usize>> = g
        .components()
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let forbid_whole = opts.exclude_trivial && nontrivial.len() == 1;

    let mut optimum = 0;
    let mut nodes = 0;
    let mut cliques = Vec::new();
    for comp in &nontrivial {
        let sub = g.induced_subgraph(comp);
        let mut cands = cliques_up_to(&sub, t).expect("t >= 2");
        if forbid_whole {
            cands.retain(|q| q.len() < sub.n() || !sub.is_complete());
        }
        let problem = CoverProblem::new(&sub, cands, objective);
        let outcome = search::run(&problem, opts.workers, deadline);
        nodes += outcome.nodes;
        if outcome.timed_out {
            return Err(SolveError::Timeout {
                nodes,
                elapsed: start.elapsed(),
            });
        }
        let (cost, state) = outcome.best.ok_or(SolveError::Infeasible)?;
        optimum += cost as usize;
        for &c in &state.chosen {
            let local = problem.cands[c as usize].clique.vertices();
            cliques.push(Clique::new(local.iter().map(|&v| comp[v]).collect()));
        }
    }
    let witness = CliquePartition::new(g.clone(), cliques)?;
    Ok(SolveResult {
        optimum,
        witness: Witness::Partition(witness),
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

/// Lexicographic edge indexing of a graph.
struct EdgeIndex {
    n: usize,
    ids: Vec<usize>,
    m: usize,
}

impl EdgeIndex {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut ids = vec![usize::MAX; n * n];
        let mut m = 0;
        for (u, v) in g.edges() {
            ids[u * n + v] = m;
            ids[v * n + u] = m;
            m += 1;
        }
        EdgeIndex { n, ids, m }
    }

    fn mask(&self, q: &Clique) -> EdgeSet {
        EdgeSet::from_indices(self.m, q.pairs().map(|(a, b)| self.ids[a * self.n + b]))
    }
}

struct Candidate {
    clique: Clique,
    mask: EdgeSet,
    edges: usize,
    cost: i64,
}

struct CoverProblem {
    m: usize,
    cands: Vec<Candidate>,
    by_edge: Vec<Vec<u32>>,
    /// Cheapest cost per covered edge is `bound_num / bound_den`.
    bound_num: i64,
    bound_den: i64,
}

#[derive(Clone)]
struct CoverState {
    covered: EdgeSet,
    remaining: usize,
    cost: i64,
    chosen: Vec<u32>,
}

impl CoverProblem {
    fn new(g: &Graph, cliques: Vec<Clique>, objective: Objective) -> Self {
        let index = EdgeIndex::new(g);
        let max_size = cliques.iter().map(Clique::len).max().unwrap_or(2) as i64;
        let cands: Vec<Candidate> = cliques
            .into_iter()
            .map(|clique| Candidate {
                mask: index.mask(&clique),
                edges: clique.edge_count(),
                cost: match objective {
                    Objective::Count => 1,
                    Objective::TotalSize => clique.len() as i64,
                },
                clique,
            })
            .collect();
        let mut by_edge = vec![Vec::new(); index.m];
        for (i, c) in cands.iter().enumerate() {
            for e in c.mask.iter() {
                by_edge[e].push(i as u32);
            }
        }
        for list in &mut by_edge {
            list.sort_by_key(|&i| std::cmp::Reverse(cands[i as usize].clique.len()));
        }
        let (bound_num, bound_den) = match objective {
            Objective::Count => (1, max_size * (max_size - 1) / 2),
            Objective::TotalSize => (2, max_size - 1),
        };
        CoverProblem {
            m: index.m,
            cands,
            by_edge,
            bound_num,
            bound_den,
        }
    }
}

impl BranchProblem for CoverProblem {
    type State = CoverState;

    fn root(&self) -> CoverState {
        CoverState {
            covered: EdgeSet::new(self.m),
            remaining: self.m,
            cost: 0,
            chosen: Vec::new(),
        }
    }

    fn children(&self, s: &CoverState) -> Vec<CoverState> {
        let Some(e) = s.covered.first_missing(self.m) else {
            return Vec::new();
        };
        self.by_edge[e]
            .iter()
            .filter(|&&c| self.cands[c as usize].mask.is_disjoint(&s.covered))
            .map(|&c| {
                let cand = &self.cands[c as usize];
                let mut covered = s.covered.clone();
                covered.union_with(&cand.mask);
                let mut chosen = s.chosen.clone();
                chosen.push(c);
                CoverState {
                    covered,
                    remaining: s.remaining - cand.edges,
                    cost: s.cost + cand.cost,
                    chosen,
                }
            })
            .collect()
    }

    fn leaf_cost(&self, s: &CoverState) -> Option<i64> {
        (s.remaining == 0).then_some(s.cost)
    }

    fn lower_bound(&self, s: &CoverState) -> i64 {
        let r = s.remaining as i64;
        s.cost + (r * self.bound_num + self.bound_den - 1) / self.bound_den
    }
}

/// `k_t(G)`: the maximum number of pairwise edge-disjoint `t`-cliques.
pub fn solve_kt(g: &Graph, t: usize, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    if t < 3 {
        return Err(SolveError::InvalidT { t, min: 3 });
    }
    let start = Instant::now();
    opts.check_size(g)?;
    let deadline = opts.timeout.map(|d| start + d);
    let cliques: Vec<Clique> = cliques_up_to(g, t)
        .expect("t >= 3")
        .into_iter()
        .filter(|q| q.len() == t)
        .collect();
    let problem = PackProblem::new(g, cliques, t);
    let outcome = search::run(&problem, opts.workers, deadline);
    if outcome.timed_out {
        return Err(SolveError::Timeout {
            nodes: outcome.nodes,
            elapsed: start.elapsed(),
        });
    }
    let (cost, state) = outcome.best.expect("the empty packing is always a leaf");
    let packing = state
        .chosen
        .iter()
        .map(|&c| problem.cands[c as usize].clone())
        .collect();
    Ok(SolveResult {
        optimum: (-cost) as usize,
        witness: Witness::Packing(packing),
        nodes_explored: outcome.nodes,
        elapsed: start.elapsed(),
    })
}

struct PackProblem {
    m: usize,
    n: usize,
    t: usize,
    endpoints: Vec<(usize, usize)>,
    per_clique: usize,
    cands: Vec<Clique>,
    masks: Vec<EdgeSet>,
}

#[derive(Clone)]
struct PackState {
    /// First candidate index still eligible and disjoint from `covered`.
    next: usize,
    covered: EdgeSet,
    covered_count: usize,
    chosen: Vec<u32>,
}

impl PackProblem {
    fn new(g: &Graph, cands: Vec<Clique>, t: usize) -> Self {
        let index = EdgeIndex::new(g);
        let masks = cands.iter().map(|q| index.mask(q)).collect();
        PackProblem {
            m: index.m,
            n: g.n(),
            t,
            endpoints: g.edges().collect(),
            per_clique: t * (t - 1) / 2,
            cands,
            masks,
        }
    }

    fn advance(&self, from: usize, covered: &EdgeSet) -> usize {
        (from..self.cands.len())
            .find(|&i| self.masks[i].is_disjoint(covered))
            .unwrap_or(self.cands.len())
    }
}

impl BranchProblem for PackProblem {
    type State = PackState;

    fn root(&self) -> PackState {
        let covered = EdgeSet::new(self.m);
        PackState {
            next: self.advance(0, &covered),
            covered,
            covered_count: 0,
            chosen: Vec::new(),
        }
    }

    fn children(&self, s: &PackState) -> Vec<PackState> {
        if s.next >= self.cands.len() {
            return Vec::new();
        }
        let i = s.next;
        let mut covered = s.covered.clone();
        covered.union_with(&self.masks[i]);
        let mut chosen = s.chosen.clone();
        chosen.push(i as u32);
        let include = PackState {
            next: self.advance(i + 1, &covered),
            covered,
            covered_count: s.covered_count + self.per_clique,
            chosen,
        };
        let exclude = PackState {
            next: self.advance(i + 1, &s.covered),
            ..s.clone()
        };
        vec![include, exclude]
    }

    fn leaf_cost(&self, s: &PackState) -> Option<i64> {
        (s.next >= self.cands.len()).then(|| -(s.chosen.len() as i64))
    }

    /// The packing can only grow by cliques built from edges that some
    /// still-available candidate covers; a vertex with `d` such edges lies
    /// in at most `⌊d / (t-1)⌋` of them.
    fn lower_bound(&self, s: &PackState) -> i64 {
        let mut available = 0;
        let mut coverable = EdgeSet::new(self.m);
        for i in s.next..self.cands.len() {
            if self.masks[i].is_disjoint(&s.covered) {
                available += 1;
                coverable.union_with(&self.masks[i]);
            }
        }
        let mut degree = vec![0usize; self.n];
        let mut edges = 0;
        for e in coverable.iter() {
            let (u, v) = self.endpoints[e];
            degree[u] += 1;
            degree[v] += 1;
            edges += 1;
        }
        let by_vertices = degree.iter().map(|d| d / (self.t - 1)).sum::<usize>() / self.t;
        let extra = available.min(edges / self.per_clique).min(by_vertices);
        -((s.chosen.len() + extra) as i64)
    }
}

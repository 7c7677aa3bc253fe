//! Deterministic branch and bound over a worker pool.
//!
//! The tree is split into a fixed frontier of subtrees (independent of the
//! worker count), each searched depth-first. Workers share a monotone
//! incumbent used only for strict pruning, so every subtree still reports
//! its first optimal leaf in depth-first order. The winning leaf is the
//! best one from the lowest-indexed subtree, which is exactly the leaf a
//! single-threaded depth-first search would return.

use std::sync::atomic::{AtomicBool, AtomicI64, AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;

/// Number of subtrees the root is split into before work is distributed.
const FRONTIER_TARGET: usize = 64;
const FRONTIER_MAX_DEPTH: usize = 6;
const DEADLINE_CHECK_INTERVAL: u64 = 1 << 10;

/// A search tree whose leaves carry a cost to be minimized.
pub(crate) trait BranchProblem: Sync {
    type State: Clone + Send + Sync;

    fn root(&self) -> Self::State;

    /// Feasible children in branching order.
    fn children(&self, state: &Self::State) -> Vec<Self::State>;

    /// `Some(cost)` when `state` is a complete solution.
    fn leaf_cost(&self, state: &Self::State) -> Option<i64>;

    /// Lower bound on the cost of any leaf below `state`.
    fn lower_bound(&self, state: &Self::State) -> i64;
}

pub(crate) struct Outcome<S> {
    pub best: Option<(i64, S)>,
    pub nodes: u64,
    pub timed_out: bool,
}

struct Shared {
    incumbent: AtomicI64,
    nodes: AtomicU64,
    abort: AtomicBool,
    deadline: Option<Instant>,
}

struct Local<S> {
    best: Option<(i64, S)>,
    nodes: u64,
}

impl<S> Local<S> {
    fn best_cost(&self) -> i64 {
        self.best.as_ref().map_or(i64::MAX, |(c, _)| *c)
    }
}

pub(crate) fn run<P: BranchProblem>(
    problem: &P,
    workers: usize,
    deadline: Option<Instant>,
) -> Outcome<P::State> {
    let shared = Shared {
        incumbent: AtomicI64::new(i64::MAX),
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        deadline,
    };
    let frontier = build_frontier(problem);
    shared.nodes.fetch_add(frontier.expanded, Ordering::Relaxed);

    let search = |state: &P::State| {
        let mut local = Local { best: None, nodes: 0 };
        dfs(problem, state, &shared, &mut local);
        shared.nodes.fetch_add(local.nodes, Ordering::Relaxed);
        local.best
    };

    let results: Vec<Option<(i64, P::State)>> = if workers <= 1 {
        frontier.states.iter().map(search).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            Ok(pool) => pool.install(|| frontier.states.par_iter().map(search).collect()),
            Err(_) => frontier.states.iter().map(search).collect(),
        }
    };

    // Strict `<` keeps the lowest-indexed subtree among equal costs.
    let mut best: Option<(i64, P::State)> = None;
    for (cost, state) in results.into_iter().flatten() {
        if best.as_ref().is_none_or(|(c, _)| cost < *c) {
            best = Some((cost, state));
        }
    }
    Outcome {
        best,
        nodes: shared.nodes.load(Ordering::Relaxed),
        timed_out: shared.abort.load(Ordering::Relaxed),
    }
}

struct Frontier<S> {
    states: Vec<S>,
    expanded: u64,
}

/// Expands the tree level by level, keeping depth-first order, until the
/// frontier is large enough.
fn build_frontier<P: BranchProblem>(problem: &P) -> Frontier<P::State> {
    let mut states = vec![problem.root()];
    let mut expanded = 0;
    for _ in 0..FRONTIER_MAX_DEPTH {
        if states.len() >= FRONTIER_TARGET {
            break;
        }
        let mut next = Vec::with_capacity(states.len() * 2);
        let mut grew = false;
        for s in states {
            if problem.leaf_cost(&s).is_some() {
                next.push(s);
                continue;
            }
            expanded += 1;
            let children = problem.children(&s);
            grew |= !children.is_empty();
            next.extend(children);
        }
        states = next;
        if !grew {
            break;
        }
    }
    Frontier { states, expanded }
}

fn dfs<P: BranchProblem>(problem: &P, state: &P::State, shared: &Shared, local: &mut Local<P::State>) {
    local.nodes += 1;
    if local.nodes % DEADLINE_CHECK_INTERVAL == 0 {
        if let Some(deadline) = shared.deadline {
            if Instant::now() >= deadline {
                shared.abort.store(true, Ordering::Relaxed);
            }
        }
    }
    if shared.abort.load(Ordering::Relaxed) {
        return;
    }
    if let Some(cost) = problem.leaf_cost(state) {
        if cost < local.best_cost() {
            local.best = Some((cost, state.clone()));
            shared.incumbent.fetch_min(cost, Ordering::Relaxed);
        }
        return;
    }
    let bound = problem.lower_bound(state);
    if !promising(bound, local, shared) {
        return;
    }
    for child in problem.children(state) {
        if promising(problem.lower_bound(&child), local, shared) {
            dfs(problem, &child, shared, local);
        }
    }
}

/// Local pruning is non-strict (keeps the first optimal leaf); pruning
/// against other workers is strict, so it never removes a leaf that ties
/// with the global optimum.
#[inline]
fn promising<S>(bound: i64, local: &Local<S>, shared: &Shared) -> bool {
    bound < local.best_cost() && bound <= shared.incumbent.load(Ordering::Relaxed)
}

/// Fixed-size bitset over edge indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct EdgeSet {
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new(len: usize) -> Self {
        EdgeSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = EdgeSet::new(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn union_with(&mut self, other: &EdgeSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                (rest != 0).then(|| {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    w * 64 + bit
                })
            })
        })
    }

    /// Smallest index `< len` not in the set.
    pub fn first_missing(&self, len: usize) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != u64::MAX {
                let i = w * 64 + (!word).trailing_zeros() as usize;
                return (i < len).then_some(i);
            }
        }
        None
    }
}

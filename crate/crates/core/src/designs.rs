//! Steiner 2-designs, their block graphs, and the passage between
//! pairwise-meeting `K_t`-decompositions and designs.
//!
//! Finite planes are built over prime fields only (integer arithmetic mod
//! `q`). Points and blocks carry canonical integer labels and blocks are
//! kept in lexicographic order, so block-graph vertex labels are stable.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cliques::Clique;
use crate::graph::Graph;
use crate::partition::{CliquePartition, PartitionError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DesignError {
    #[error("design needs at least two points, got {0}")]
    TooFewPoints(usize),
    #[error("point {point} out of range for {v} points")]
    PointOutOfRange { point: usize, v: usize },
    #[error("blocks do not all have the same size")]
    NonUniformBlocks,
    #[error("block size {0} is below 2")]
    BlockTooSmall(usize),
    #[error("point pair {{{0}, {1}}} lies in no block")]
    PairUncovered(usize, usize),
    #[error("point pair {{{0}, {1}}} lies in more than one block")]
    PairCoveredTwice(usize, usize),
    #[error("order {0} is not prime")]
    NotPrime(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("a single-block design has a one-vertex block graph without edges")]
    SingleBlock,
    #[error("graph is not regular")]
    NotRegular,
    #[error("partition member {index} has {size} vertices, expected {t}")]
    NotKtDecomposition { index: usize, size: usize, t: usize },
    #[error("degree {degree} is not divisible by t - 1 = {divisor}")]
    DegreeNotDivisible { degree: usize, divisor: usize },
    #[error("cliques {0} and {1} meet in {2} vertices, expected exactly 1")]
    IntersectionNotOne(usize, usize, usize),
    #[error("partition belongs to a different graph")]
    HostMismatch,
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// A point set `0..v` with a list of blocks, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Design {
    num_points: usize,
    blocks: Vec<Vec<usize>>,
}

/// Parameters `(v, k, r, b)` of a 2-`(v, k, 1)` design.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DesignParams {
    pub v: usize,
    pub k: usize,
    pub r: usize,
    pub b: usize,
}

impl Design {
    /// Sorts every block and the block list. No validation.
    pub fn new(num_points: usize, blocks: Vec<Vec<usize>>) -> Self {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        Design { num_points, blocks }
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn to_json(&self) -> DesignJson {
        DesignJson {
            v: self.num_points,
            blocks: self.blocks.clone(),
        }
    }

    pub fn from_json(json: &DesignJson) -> Self {
        Design::new(json.v, json.blocks.clone())
    }
}

/// Wire format `{"v": int, "blocks": [[int, ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignJson {
    pub v: usize,
    pub blocks: Vec<Vec<usize>>,
}

/// Checks that `d` is a 2-`(v, k, 1)` design.
pub fn validate_design(d: &Design) -> Result<DesignParams, DesignError> {
    let v = d.num_points;
    if v < 2 {
        return Err(DesignError::TooFewPoints(v));
    }
    let k = d.blocks.first().map_or(0, Vec::len);
    if d.blocks.iter().any(|b| b.len() != k) {
        return Err(DesignError::NonUniformBlocks);
    }
    if !d.blocks.is_empty() && k < 2 {
        return Err(DesignError::BlockTooSmall(k));
    }
    let mut seen = vec![false; v * v];
    for block in &d.blocks {
        if let Some(&point) = block.iter().find(|&&p| p >= v) {
            return Err(DesignError::PointOutOfRange { point, v });
        }
        for (i, &a) in block.iter().enumerate() {
            for &b in &block[i + 1..] {
                if a == b || std::mem::replace(&mut seen[a * v + b], true) {
                    return Err(DesignError::PairCoveredTwice(a, b));
                }
            }
        }
    }
    for a in 0..v {
        for b in a + 1..v {
            if !seen[a * v + b] {
                return Err(DesignError::PairUncovered(a, b));
            }
        }
    }
    // Every point's pairs are split evenly by the blocks through it.
    let r = (v - 1) / (k - 1);
    debug_assert_eq!(r * (k - 1), v - 1);
    Ok(DesignParams {
        v,
        k,
        r,
        b: d.blocks.len(),
    })
}

pub fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn require_prime(q: usize) -> Result<(), DesignError> {
    if is_prime(q) {
        Ok(())
    } else {
        Err(DesignError::NotPrime(q))
    }
}

/// `AG(2, q)`: points `(x, y) ↦ x·q + y`, lines `y = ax + b` and `x = c`.
pub fn affine_plane(q: usize) -> Result<Design, DesignError> {
    require_prime(q)?;
    let point = |x: usize, y: usize| x * q + y;
    let mut blocks = Vec::with_capacity(q * q + q);
    for a in 0..q {
        for b in 0..q {
            blocks.push((0..q).map(|x| point(x, (a * x + b) % q)).collect());
        }
    }
    for c in 0..q {
        blocks.push((0..q).map(|y| point(c, y)).collect());
    }
    Ok(Design::new(q * q, blocks))
}

/// `PG(2, q)` from normalized homogeneous coordinates: `(1, a, b)`,
/// `(0, 1, b)`, `(0, 0, 1)`, in that order. Lines use the same coordinates
/// and incidence is a zero dot product.
pub fn projective_plane(q: usize) -> Result<Design, DesignError> {
    require_prime(q)?;
    let mut coords: Vec<[usize; 3]> = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            coords.push([1, a, b]);
        }
    }
    for b in 0..q {
        coords.push([0, 1, b]);
    }
    coords.push([0, 0, 1]);
    let blocks = coords
        .iter()
        .map(|line| {
            coords
                .iter()
                .enumerate()
                .filter(|(_, p)| (0..3).map(|i| line[i] * p[i]).sum::<usize>() % q == 0)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Ok(Design::new(coords.len(), blocks))
}

/// All pairs of a `v`-set, a 2-`(v, 2, 1)` design.
pub fn trivial_pair_design(v: usize) -> Result<Design, DesignError> {
    if v < 3 {
        return Err(DesignError::InvalidParameter(format!(
            "pair design needs v >= 3, got {v}"
        )));
    }
    let blocks = (0..v)
        .flat_map(|a| (a + 1..v).map(move |b| vec![a, b]))
        .collect();
    Ok(Design::new(v, blocks))
}

/// Bose's Steiner triple system on `v ≡ 3 (mod 6)` points over `Z_n`,
/// `n = v / 3`. Point `(x, i)` is labelled `i·n + x`.
pub fn bose_sts(v: usize) -> Result<Design, DesignError> {
    if v < 9 || v % 6 != 3 {
        return Err(DesignError::InvalidParameter(format!(
            "Bose construction needs v ≡ 3 (mod 6) and v >= 9, got {v}"
        )));
    }
    let n = v / 3;
    let half = n.div_ceil(2); // inverse of 2 modulo odd n
    let point = |x: usize, i: usize| (i % 3) * n + x;
    let mut blocks = Vec::with_capacity(v * (v - 1) / 6);
    for x in 0..n {
        blocks.push(vec![point(x, 0), point(x, 1), point(x, 2)]);
    }
    for x in 0..n {
        for y in x + 1..n {
            let mid = (x + y) * half % n;
            for i in 0..3 {
                blocks.push(vec![point(x, i), point(y, i), point(mid, i + 1)]);
            }
        }
    }
    Ok(Design::new(v, blocks))
}

/// Block graph of a Steiner 2-design together with its canonical
/// `K_t`-decomposition (`Q_i` = blocks through point `i`, `t = r`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockGraph {
    pub graph: Graph,
    pub partition: CliquePartition,
    pub t: usize,
}

pub fn block_graph(d: &Design) -> Result<BlockGraph, DesignError> {
    let params = validate_design(d)?;
    if params.b < 2 {
        return Err(DesignError::SingleBlock);
    }
    let blocks = &d.blocks;
    let meets = |a: &[usize], b: &[usize]| a.iter().any(|p| b.binary_search(p).is_ok());
    let graph = Graph::from_fn(blocks.len(), |i, j| meets(&blocks[i], &blocks[j]));
    let cliques = (0..params.v)
        .map(|p| {
            Clique::new(
                blocks
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| b.binary_search(&p).is_ok())
                    .map(|(i, _)| i)
                    .collect(),
            )
        })
        .collect();
    let partition = CliquePartition::new(graph.clone(), cliques)?;
    debug_assert_eq!(params.v - 1, params.r * (params.k - 1));
    Ok(BlockGraph {
        graph,
        partition,
        t: params.r,
    })
}

/// Recovers the design whose points are the cliques of `p` and whose blocks
/// are `S_u = {i : u ∈ Q_i}`, after checking that `g` is regular and `p` is
/// a `K_t`-decomposition with pairwise single-vertex intersections.
pub fn decomposition_to_design(g: &Graph, p: &CliquePartition) -> Result<Design, DesignError> {
    if p.host() != g {
        return Err(DesignError::HostMismatch);
    }
    let profile = g.degree_profile();
    if !profile.is_regular {
        return Err(DesignError::NotRegular);
    }
    let cliques = p.cliques();
    let t = cliques.first().map_or(0, Clique::len);
    if let Some((index, q)) = cliques.iter().enumerate().find(|(_, q)| q.len() != t) {
        return Err(DesignError::NotKtDecomposition {
            index,
            size: q.len(),
            t,
        });
    }
    if t < 2 || !profile.min_degree.is_multiple_of(t - 1) {
        return Err(DesignError::DegreeNotDivisible {
            degree: profile.min_degree,
            divisor: t.saturating_sub(1),
        });
    }
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let s = cliques[i].intersection_size(&cliques[j]);
            if s != 1 {
                return Err(DesignError::IntersectionNotOne(i, j, s));
            }
        }
    }
    let blocks = (0..g.n())
        .map(|u| {
            cliques
                .iter()
                .enumerate()
                .filter(|(_, q)| q.contains(u))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let design = Design::new(cliques.len(), blocks);
    let params = validate_design(&design)?;
    debug_assert_eq!(params.k, profile.min_degree / (t - 1));
    Ok(design)
}

/// Block graph followed by design recovery reproduces `(v, k, r, b)`.
pub fn roundtrip_check(d: &Design) -> bool {
    let Ok(original) = validate_design(d) else {
        return false;
    };
    let Ok(bg) = block_graph(d) else {
        return false;
    };
    decomposition_to_design(&bg.graph, &bg.partition)
        .and_then(|back| validate_design(&back))
        .is_ok_and(|params| params == original)
}

//! Named graph families, addressed by inline specs such as `triangular:5`,
//! `multipartite:3x3` or `block-graph:affine:3`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::designs::{self, BlockGraph, Design, DesignError};
use crate::graph::{generators, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    Unknown(String),
    #[error("bad parameters for `{family}`: {msg}")]
    BadParams { family: String, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Design(#[from] DesignError),
}

/// Steiner 2-designs that have a named constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DesignFamily {
    Affine(usize),
    Projective(usize),
    /// All 2-subsets of a `v`-set.
    Pairs(usize),
    /// Bose's Steiner triple system, `v ≡ 3 (mod 6)`.
    Sts(usize),
}

impl DesignFamily {
    pub fn build(self) -> Result<Design, DesignError> {
        match self {
            DesignFamily::Affine(q) => designs::affine_plane(q),
            DesignFamily::Projective(q) => designs::projective_plane(q),
            DesignFamily::Pairs(v) => designs::trivial_pair_design(v),
            DesignFamily::Sts(v) => designs::bose_sts(v),
        }
    }
}

impl fmt::Display for DesignFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignFamily::Affine(q) => write!(f, "affine:{q}"),
            DesignFamily::Projective(q) => write!(f, "projective:{q}"),
            DesignFamily::Pairs(v) => write!(f, "pairs:{v}"),
            DesignFamily::Sts(v) => write!(f, "sts:{v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Multipartite(Vec<usize>),
    Cycle(usize),
    CycleComplement(usize),
    Path(usize),
    Triangular(usize),
    Friendship(usize),
    Petersen,
    /// Six vertices, three triangles around a central one.
    TriangleChain,
    BlockGraph(DesignFamily),
}

impl Family {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        Ok(match self {
            Family::Complete(n) => generators::complete(*n)?,
            Family::Multipartite(parts) => generators::complete_multipartite(parts)?,
            Family::Cycle(n) => generators::cycle(*n)?,
            Family::CycleComplement(n) => generators::cycle_complement(*n)?,
            Family::Path(n) => generators::path(*n)?,
            Family::Triangular(v) => generators::triangular(*v)?,
            Family::Friendship(v) => generators::friendship(*v)?,
            Family::Petersen => generators::petersen(),
            Family::TriangleChain => generators::triangle_chain(),
            Family::BlockGraph(d) => self.block_graph_of(*d)?.graph,
        })
    }

    fn block_graph_of(&self, d: DesignFamily) -> Result<BlockGraph, FamilyError> {
        Ok(designs::block_graph(&d.build()?)?)
    }

    /// The design and its block graph, for `block-graph:*` families.
    pub fn block_graph(&self) -> Option<Result<BlockGraph, FamilyError>> {
        match self {
            Family::BlockGraph(d) => Some(self.block_graph_of(*d)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Multipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::CycleComplement(n) => write!(f, "cycle-complement:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Triangular(v) => write!(f, "triangular:{v}"),
            Family::Friendship(v) => write!(f, "friendship:{v}"),
            Family::Petersen => f.write_str("petersen"),
            Family::TriangleChain => f.write_str("triangle-chain"),
            Family::BlockGraph(d) => write!(f, "block-graph:{d}"),
        }
    }
}

fn bad(family: &str, msg: impl Into<String>) -> FamilyError {
    FamilyError::BadParams {
        family: family.to_string(),
        msg: msg.into(),
    }
}

fn one_number(family: &str, params: &[&str]) -> Result<usize, FamilyError> {
    match params {
        [p] => p
            .trim()
            .parse()
            .map_err(|_| bad(family, format!("`{p}` is not a non-negative integer"))),
        _ => Err(bad(family, "expected exactly one integer parameter")),
    }
}

fn no_params(family: &str, params: &[&str]) -> Result<(), FamilyError> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(bad(family, "takes no parameters"))
    }
}

/// `3,3,3`, `3x3` (three parts of size 3) or `2,3`.
fn parse_parts(family: &str, params: &[&str]) -> Result<Vec<usize>, FamilyError> {
    let [p] = params else {
        return Err(bad(family, "expected part sizes such as `3,3,3` or `3x3`"));
    };
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| bad(family, format!("`{s}` is not a non-negative integer")))
    };
    if let Some((count, size)) = p.split_once('x') {
        Ok(vec![num(size)?; num(count)?])
    } else {
        p.split(',').map(num).collect()
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(spec: &str) -> Result<Self, FamilyError> {
        let mut fields = spec.split(':');
        let name = fields.next().unwrap_or_default().trim();
        let params: Vec<&str> = fields.collect();
        Ok(match name {
            "complete" => Family::Complete(one_number(name, &params)?),
            "multipartite" => Family::Multipartite(parse_parts(name, &params)?),
            "cycle" => Family::Cycle(one_number(name, &params)?),
            "cycle-complement" => Family::CycleComplement(one_number(name, &params)?),
            "path" => Family::Path(one_number(name, &params)?),
            "triangular" => Family::Triangular(one_number(name, &params)?),
            "friendship" => Family::Friendship(one_number(name, &params)?),
            "petersen" => {
                no_params(name, &params)?;
                Family::Petersen
            }
            "triangle-chain" => {
                no_params(name, &params)?;
                Family::TriangleChain
            }
            "block-graph" => {
                let Some((kind, rest)) = params.split_first() else {
                    return Err(bad(name, "expected a design such as `affine:3`"));
                };
                if *kind == "fano" {
                    no_params(name, rest)?;
                    return Ok(Family::BlockGraph(DesignFamily::Projective(2)));
                }
                let p = one_number(name, rest)?;
                Family::BlockGraph(match *kind {
                    "affine" => DesignFamily::Affine(p),
                    "projective" => DesignFamily::Projective(p),
                    "pairs" => DesignFamily::Pairs(p),
                    "sts" => DesignFamily::Sts(p),
                    other => return Err(bad(name, format!("unknown design `{other}`"))),
                })
            }
            other => return Err(FamilyError::Unknown(other.to_string())),
        })
    }
}

/// Parses and builds in one step.
pub fn build(spec: &str) -> Result<Graph, FamilyError> {
    spec.parse::<Family>()?.build()
}

use thiserror::Error;

use crate::rootsys::Family;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}: {bounds}")]
    InvalidRank {
        family: Family,
        rank: usize,
        bounds: &'static str,
    },
    #[error("cannot parse Dynkin type {0:?} (expected e.g. A3, B2, D4, E8, F4, G2)")]
    BadType(String),
    #[error("vector is not a root of the root system")]
    NotARoot,
    #[error("weight has {got} coordinates, expected {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("Weyl group of order {order} exceeds the enumeration bound {bound}")]
    GroupTooLarge { order: u128, bound: u128 },
    #[error("type {0} has no trivalent node")]
    NoTrivalentNode(String),
    #[error("root subset is not closed")]
    NotClosed,
    #[error("weight is not integral")]
    NonIntegralWeight,
    #[error("weight is not rho-dominant")]
    NotRhoDominant,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid graph: {0}")]
    BadGraph(String),
    #[error("vertex {0} out of range")]
    BadVertex(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

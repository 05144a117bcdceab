use thiserror::Error;

use crate::VertexSet;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6: {message} (byte {offset})")]
    Graph6 { offset: usize, message: String },

    #[error("a graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("order {n} exceeds the supported maximum {max} for {what}")]
    OrderTooLarge {
        n: usize,
        max: usize,
        what: &'static str,
    },

    #[error("scanning C({n},{k}) = {count} subsets exceeds the cap of {max}")]
    SubsetCapExceeded {
        n: usize,
        k: usize,
        count: u128,
        max: u64,
    },

    #[error("no PSD forcing set of size {k} exists")]
    NoForcingSetOfSize { k: usize },

    #[error("{0} is not a PSD forcing set")]
    NotForcing(VertexSet),

    #[error("{forcer}->{target} is not a valid initial PSD force")]
    InvalidInitialForce { forcer: usize, target: usize },

    #[error("{0} is not a component of G - B")]
    InvalidComponent(VertexSet),

    #[error("take = {take} but only {available} first-step forces enter the component")]
    TakeOutOfRange { take: usize, available: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no graph of order {n} has Z+ = {k}")]
    NoGraphWithZPlus { n: usize, k: usize },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    /// A guarantee that should hold unconditionally was observed to fail.
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

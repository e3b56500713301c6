use thiserror::Error;

use crate::quiver::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("rank {rank} out of range: {reason}")]
    RankOutOfRange { rank: usize, reason: &'static str },
    #[error("orientation has {got} bits, expected {expected}")]
    OrientationLength { expected: usize, got: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("deleting vertex {0} would disconnect the quiver")]
    Disconnects(Vertex),
    #[error("vertex {0} is not a leaf")]
    NotLeaf(Vertex),
    #[error("vertex {0} is not a sink")]
    NotSink(Vertex),
    #[error("vertex {0} is not a source")]
    NotSource(Vertex),
    #[error("vertex {0} is neither a source nor a sink")]
    NotSourceOrSink(Vertex),
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("dimension vector length {got} does not match {expected} vertices")]
    DimMismatch { expected: usize, got: usize },
    #[error("underlying graph is not of Dynkin type A or D")]
    NotTypeAD,
    #[error("quivers do not share an underlying graph")]
    DifferentUnderlyingGraph,
    #[error("model parameters out of range: {0}")]
    BadModel(String),
    #[error("class mismatch: {0}")]
    ClassMismatch(String),
    #[error("indecomposable with dimension vector {0:?} not found")]
    NoSuchIndecomposable(Vec<u32>),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

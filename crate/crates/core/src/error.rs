use crate::set::ElementSet;
use thiserror::Error;

/// Errors raised by constructors and transforms.
///
/// Query operations on an already-constructed [`crate::Matroid`] are total;
/// only construction and precondition checks can fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis family is empty")]
    EmptyBasisFamily,

    #[error("bases {first} and {second} have different cardinalities")]
    UnequalBasisSizes { first: ElementSet, second: ElementSet },

    #[error("basis exchange fails between {from} and {to}")]
    ExchangeAxiomViolation { from: ElementSet, to: ElementSet },

    #[error("circuit {inner} is contained in circuit {outer}")]
    CircuitContainment { inner: ElementSet, outer: ElementSet },

    #[error("the empty set cannot be a circuit")]
    EmptyCircuit,

    #[error("circuit elimination fails for {first} and {second}")]
    EliminationAxiomViolation { first: ElementSet, second: ElementSet },

    #[error("set {set} has elements outside ground set of size {ground_size}")]
    OutOfRangeElement { set: ElementSet, ground_size: usize },

    #[error("sets overlap in {overlap}")]
    OverlappingSets { overlap: ElementSet },

    #[error("ground set of size {requested} exceeds capacity {capacity}")]
    CapacityExceeded { requested: usize, capacity: usize },

    #[error("element {element} is a loop and cannot carry a parallel class")]
    LoopTarget { element: usize },

    #[error("set {set} is not a flat")]
    NotAFlat { set: ElementSet },

    #[error("set {set} is not a circuit-hyperplane")]
    NotACircuitHyperplane { set: ElementSet },

    #[error("bad parameters: {message}")]
    BadParameters { message: String },

    #[error("traversals {first:?} and {second:?} agree on more than rank-2 legs")]
    IllegalTraversalPair { first: Vec<u8>, second: Vec<u8> },

    #[error("unknown matroid name `{name}`")]
    UnknownName { name: String },

    #[error("candidate matrix failed certification: {detail}")]
    P8CertificationFailure { detail: String },

    #[error("unsupported field GF({field})")]
    BadField { field: u8 },

    #[error("ground set of size {size} exceeds enumeration guard {max}")]
    CapacityGuard { size: usize, max: usize },

    #[error("rank {rank} is below the minimum of {min}")]
    RankTooSmall { rank: usize, min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

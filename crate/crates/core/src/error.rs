use num_bigint::BigInt;
use thiserror::Error;

/// Errors surfaced by the library. Variants name the operation contract they
/// belong to; the messages carry the offending data so CLI diagnostics can be
/// printed without extra lookups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    /// Polynomial division left a remainder. For knot polynomials this means
    /// the mandatory (x - 2) factor is missing.
    #[error("polynomial division left a nonzero remainder ({remainder})")]
    NonZeroRemainder { remainder: String },

    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// A matrix failed the row/column-sum-2 validation.
    #[error("not a knot matrix: {0}")]
    MalformedMatrix(String),

    /// The derivative of the characteristic polynomial at 2 is not a multiple
    /// of the crossing count, so the input cannot come from one connected
    /// alternating diagram.
    #[error("P'(2) = {value} is not divisible by the crossing count {crossings}")]
    NotDivisible { value: BigInt, crossings: usize },

    /// The alternating walk produced a non-permutation colour class. This
    /// cannot happen for matrices that pass validation and is kept as an
    /// internal-consistency error.
    #[error("permutation decomposition walk produced an inconsistent colouring")]
    DecompositionFailure,

    /// A Gauss-code token could not be read.
    #[error("syntax error at `{token}`: {reason}")]
    Syntax { token: String, reason: String },

    /// Over/under passes fail to alternate along a component.
    #[error("passes do not alternate: {0}")]
    NonAlternating(String),

    /// A crossing id is not used exactly once as an overpass and once as an
    /// underpass.
    #[error("crossing {id} must occur exactly once as O and once as U")]
    BadCrossingUse { id: u32 },

    /// The diagram admits no alternating over/under assignment.
    #[error("no alternating assignment exists: crossing {id} is forced to the same pass twice")]
    AlternationConflict { id: u32 },

    /// Closing a tangle produced a component that passes through no crossing.
    #[error("closure produced a crossing-free component")]
    ClosureDisconnected,

    /// Composition needs at least one crossing on each side once both
    /// operands are empty.
    #[error("cannot compose two empty diagrams")]
    EmptyDiagram,

    /// A Conway function was evaluated with the wrong number of arguments.
    #[error("expected {expected} crossing numbers, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// The ribbon catalog stops at five ribbons.
    #[error("the ribbon catalog covers 1..=5 ribbons, got {0}")]
    OutOfRange(usize),

    /// A crossing-count vector was empty where at least one entry is needed.
    #[error("crossing-count vector is empty")]
    EmptyVector,

    /// A catalog family without a pinned diagram construction.
    #[error("family {0} has no pinned diagram realization")]
    NoRealization(String),

    /// A builder was called with a parameter outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, KnotError>;

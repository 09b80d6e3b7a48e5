//! Error type shared by the whole crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A partition failed structural validation (empty block, repeated or
    /// out-of-range element, missing element).
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// Two objects that must live on the same ground set do not.
    #[error("ground sets differ: n = {left} vs n = {right}")]
    GroundSetMismatch { left: usize, right: usize },

    /// An operation that requires noncrossing input received a crossing
    /// partition.
    #[error("partition {0} is crossing")]
    CrossingInput(String),

    /// A permutation failed structural validation.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// The permutation is not below the long cycle `(1, 2, .., n)` in
    /// absolute order, so it corresponds to no noncrossing partition.
    #[error("permutation {perm} is not below the long cycle on {n} points")]
    NotBelowLongCycle { perm: String, n: usize },

    /// `q` was expected to cover `p` and does not.
    #[error("{q} does not cover {p}")]
    NotACover { p: String, q: String },

    /// An element fell outside the interval an operation works in.
    #[error("{element} is not in the interval [{lo}, {hi}]")]
    OutsideInterval {
        element: String,
        lo: String,
        hi: String,
    },

    /// A label sequence is not a chain labelling: some prefix product leaves
    /// the allowed interval or a step is not length-additive.
    #[error("invalid label sequence: {0}")]
    InvalidLabels(String),

    /// A requested size exceeds the configured enumeration bound.
    #[error("n = {n} exceeds the bound {bound} for {what}")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    /// A preference sequence is out of range for the parking rule.
    #[error("invalid preference sequence: {0}")]
    InvalidPreferences(String),

    /// A diagonal set is not a triangulation of the polygon.
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),

    /// A bracket family is not nested, in range, and duplicate-free.
    #[error("invalid bracketing: {0}")]
    InvalidBracketing(String),

    /// A linear functional is constant on some edge of the polytope, so it
    /// induces no orientation there.
    #[error("functional is not generic: edge {u} -- {v} is level")]
    LevelEdge { u: String, v: String },

    /// Numeric sequences fed to a transform have incompatible lengths.
    #[error("sequence orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// A power series operation received a series with the wrong constant
    /// term.
    #[error("series has constant term {found}, expected {expected}")]
    BadConstantTerm { expected: String, found: String },

    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

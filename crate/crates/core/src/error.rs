use thiserror::Error;

/// Errors raised by the library.
///
/// Variants that describe an `Internal` failure indicate a broken invariant
/// (a convention bug), never bad user input.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,

    #[error("group not closed within bound of {cap} elements")]
    NotClosed { cap: usize },

    #[error("generator {index} is not unimodular (determinant != 1)")]
    NotUnimodular { index: usize },

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("group has no central involution -I")]
    NoCentralInvolution,

    #[error("no suitable prime found for exponent {exponent}")]
    NoSuitablePrime { exponent: u64 },

    #[error("nontrivial cohomology class: {0}")]
    NontrivialCohomology(String),

    #[error("unrecognized group: {0}")]
    Unrecognized(String),

    #[error("unrecognized diagram: {0}")]
    UnrecognizedDiagram(String),

    #[error("operands belong to different algebras")]
    ParentMismatch,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

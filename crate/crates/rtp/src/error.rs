//! Crate-wide error type.
//!
//! Every fallible operation returns [`Result`].  Variants are grouped by the
//! layer that raises them; the job runner maps them onto process exit codes
//! (`2` for parse errors, `3` for domain errors).

use std::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Series division, `exp`, `log`, `pow` or reversion asked for an inverse
    /// of a constant term that is not a unit in the coefficient ring.
    NonUnitConstantTerm(String),
    /// Composition or reversion requires the inner series to vanish at 0.
    ConstantTermNotZero(String),
    /// `log` and rational powers require constant term exactly 1.
    ConstantTermNotOne(String),
    /// A coefficient beyond the stored truncation order was requested.
    OrderExceeded { wanted: usize, order: usize },
    /// Riordan pair is not proper: needs `g(0)` a unit, `f(0) = 0`, `f'(0)` a unit.
    ImproperPair(String),
    /// Determinant of a non-square matrix requested.
    NonSquareMatrix { rows: usize, cols: usize },
    /// Sturm root counting on the zero polynomial.
    ZeroPolynomial,
    /// A sequence is too short for the requested matrix truncation.
    InsufficientTerms { needed: usize, have: usize },
    /// Diagonal scaling factors must be strictly positive.
    NonPositiveScale(String),
    /// Reciprocal transform needs `deg P_n <= n` for every row index `n`.
    DegreeExceedsIndex { index: usize, degree: usize },
    /// Family parameters outside the documented domain.
    ParameterDomain(String),
    /// Two independent realizations of the same triangle disagree.
    RealizationMismatch(String),
    /// A registered moment-sequence sample failed its own Hankel check.
    SampleNotSm(String),
    /// Expression or job-file syntax error.
    Parse(String),
    /// Structurally valid input with out-of-domain content (bad check/target
    /// combination, unbound parameter, unknown family, ...).
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonUnitConstantTerm(what) => {
                write!(f, "constant term is not a unit in {what}")
            }
            Error::ConstantTermNotZero(what) => {
                write!(f, "constant term must be 0 in {what}")
            }
            Error::ConstantTermNotOne(what) => {
                write!(f, "constant term must be 1 in {what}")
            }
            Error::OrderExceeded { wanted, order } => {
                write!(f, "coefficient {wanted} requested but series is truncated at order {order}")
            }
            Error::ImproperPair(what) => write!(f, "improper Riordan pair: {what}"),
            Error::NonSquareMatrix { rows, cols } => {
                write!(f, "determinant of non-square {rows}x{cols} matrix")
            }
            Error::ZeroPolynomial => write!(f, "root counting on the zero polynomial"),
            Error::InsufficientTerms { needed, have } => {
                write!(f, "sequence has {have} terms but {needed} are required")
            }
            Error::NonPositiveScale(what) => write!(f, "scale factor must be positive: {what}"),
            Error::DegreeExceedsIndex { index, degree } => {
                write!(f, "row polynomial {index} has degree {degree} > {index}; reciprocal undefined")
            }
            Error::ParameterDomain(what) => write!(f, "parameter outside documented domain: {what}"),
            Error::RealizationMismatch(what) => write!(f, "realizations disagree: {what}"),
            Error::SampleNotSm(name) => {
                write!(f, "sample '{name}' fails its own Hankel positivity check")
            }
            Error::Parse(what) => write!(f, "parse error: {what}"),
            Error::Domain(what) => write!(f, "domain error: {what}"),
        }
    }
}

impl std::error::Error for Error {}

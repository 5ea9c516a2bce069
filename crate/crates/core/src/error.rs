//! Error type shared across the library, with the CLI's exit-code mapping.

use num_complex::Complex64;

/// Everything that can go wrong in the library.
///
/// Errors split into two classes, mirrored by [`Error::exit_code`]: domain
/// errors (the input itself is outside the contract) and numerical failures
/// (a legal input on which an algorithm could not certify its result).
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("the zero polynomial has no well-defined roots or degree")]
    ZeroPolynomial,
    #[error("degree {0} is unsupported here (expected {1})")]
    UnsupportedDegree(usize, &'static str),
    #[error("quadratic solver requires a nonzero leading coefficient; use the linear path")]
    QuadraticLeadingZero,
    #[error("projective point requires at least one nonzero coordinate")]
    AllZeroCoordinates,
    #[error("homogenization degree {given} is below the polynomial's total degree {needed}")]
    HomogenizeDegreeTooSmall { given: usize, needed: usize },
    #[error("conic has full rank (not a line pair); cannot split")]
    NotDegenerate,
    #[error("line lies on the conic: infinitely many intersections")]
    LineOnConic,
    #[error("every member of the pencil is singular; no isolated degenerate members")]
    IdenticallySingularPencil,
    #[error("({x}, {y}) is a base point: both pencil generators vanish")]
    BasePoint { x: Complex64, y: Complex64 },
    #[error("map is undefined at ({x}, {y}): denominator vanishes")]
    PoleInput { x: Complex64, y: Complex64 },
    #[error("root iteration did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize },
    #[error("pencil is too degenerate for the base-point pipeline: {0}")]
    NonGenericPencil(&'static str),
    #[error("internal inconsistency: {0}")]
    Internal(&'static str),
}

impl Error {
    /// CLI exit code: 1 for domain errors (bad input), 2 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ZeroPolynomial
            | Error::UnsupportedDegree(..)
            | Error::QuadraticLeadingZero
            | Error::AllZeroCoordinates
            | Error::HomogenizeDegreeTooSmall { .. }
            | Error::BasePoint { .. }
            | Error::PoleInput { .. } => 1,
            Error::NotDegenerate
            | Error::LineOnConic
            | Error::IdenticallySingularPencil
            | Error::NonConvergence { .. }
            | Error::NonGenericPencil(..)
            | Error::Internal(..) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

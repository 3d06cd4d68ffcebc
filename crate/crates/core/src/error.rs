//! Crate-wide error type.
//!
//! Every fallible operation in the crate reports through [`Error`]; the
//! variants carry enough context (offending names, residuals rendered as
//! strings) to produce a useful diagnostic without holding references into
//! the structures that produced them.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the exact algebra layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Division by the zero scalar.
    #[error("division by zero scalar")]
    ZeroDivision,

    /// A radicand could not be factored by trial division (cofactor too large
    /// to certify squarefree).
    #[error("radicand {0} too large to factor by trial division")]
    RadicandTooLarge(String),

    /// The multiplicative closure of a radicand set exceeded the supported size.
    #[error("radicand closure exceeds {limit} elements; scalar inversion unsupported")]
    ClosureTooLarge { limit: usize },

    /// Malformed angular-momentum pair: j negative, |m| > j or m - j not an integer.
    #[error("malformed (j, m) pair: ({j}, {m})")]
    DomainError { j: String, m: String },

    /// A requested coupling rank violates the triangle rule.
    #[error("rank {k} not reachable from {k1} x {k2}")]
    TriangleError { k1: String, k2: String, k: String },

    /// A spherical tensor was built with the wrong number of components.
    #[error("rank {k} tensor needs {expected} components, got {got}")]
    ComponentCount { k: String, expected: usize, got: usize },

    /// A generating set does not close under the commutator.
    #[error("bracket [{left}, {right}] leaves the span; residual: {residual}")]
    NotClosed {
        left: String,
        right: String,
        residual: String,
    },

    /// A generating set is linearly dependent.
    #[error("generator {name} is linearly dependent on its predecessors")]
    LinearlyDependent { name: String },

    /// Levi decomposition was requested for a non-reductive algebra.
    #[error("algebra is not reductive: radical differs from center")]
    NotReductive,

    /// A candidate (x, y, h) fails one of the sl2 bracket relations.
    #[error("sl2 relation {relation} fails; residual: {residual}")]
    NotSl2 { relation: String, residual: String },

    /// An operator expected to be a pure bilinear (one creation and one
    /// annihilation factor per monomial) is not.
    #[error("operator is not a bilinear: {0}")]
    NotBilinear(String),

    /// A matrix expected to have an all-integer spectrum does not.
    #[error("matrix spectrum is not integral: {0}")]
    NonIntegerSpectrum(String),

    /// The weight labels derived from a spectrum fall outside {0, 1, 2}.
    #[error("weighted-diagram label out of range for spectrum {0}")]
    WddLabelOutOfRange(String),

    /// An adjoint action could not be split into weight eigenspaces.
    #[error("adjoint action not diagonalizable: {0}")]
    NotDiagonalizable(String),

    /// A rank-1 multiplet does not generate an sl2 triple.
    #[error("vector does not generate a valid triple: {0}")]
    NotProportional(String),

    /// A bilinear form required to be invertible is singular.
    #[error("bilinear form is degenerate on the requested subalgebra")]
    DegenerateForm,

    /// A chain label or sector number violates its stated bounds.
    #[error("invalid label: {0}")]
    InvalidLabel(String),

    /// A Fock-space matrix was requested for a non-number-conserving operator.
    #[error("operator does not conserve total boson number: {0}")]
    NotNumberConserving(String),

    /// A numerical matrix expected to be Hermitian is not.
    #[error("matrix is not Hermitian: max |a_ij - conj(a_ji)| = {0:e}")]
    NotHermitian(f64),

    /// The iterative eigensolver did not reach its tolerance.
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off:e})")]
    NotConverged { sweeps: usize, off: f64 },

    /// An element required to lie in an algebra's span does not.
    #[error("element {0} is not in the span of the algebra")]
    NotInSpan(String),

    /// A named lookup (model, J-set, operator) failed.
    #[error("unknown {kind}: {name}")]
    UnknownName { kind: &'static str, name: String },

    /// A curated catalog entry failed its build-time verification.
    #[error("catalog verification failed for {what}: {detail}")]
    CatalogVerification { what: String, detail: String },
}

use thiserror::Error;

/// Errors produced by the simulator and compiler layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max |m - m^†| = {deviation:.3e} exceeds {tol:.1e}")]
    NonHermitian { deviation: f64, tol: f64 },

    #[error("eigensolver failed to converge (index {index})")]
    NoConvergence { index: usize },

    #[error("spin count {n} exceeds the supported maximum of {max}")]
    DimensionTooLarge { n: usize, max: usize },

    #[error("eigenstates {a} and {b} both map to Zeeman label |{label}>")]
    AmbiguousLabeling { a: usize, b: usize, label: String },

    #[error("index {value} out of range [0, {limit})")]
    OutOfRange { value: usize, limit: usize },

    #[error("encoding range l must be nonzero")]
    ZeroRange,

    #[error("s*f({index}) = {value} is {error:.3e} away from an integer (tolerance 1e-6)")]
    NonIntegerImage { index: usize, value: f64, error: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("initial state has zero purity: trace(rho^2) = 0")]
    ZeroState,

    #[error("readout is degenerate: top two input-register marginals differ by {gap:.3e}")]
    Degenerate { gap: f64 },

    #[error("transition {index} is forbidden (|<u|Fx|l>|^2 = {moment2:.3e})")]
    ForbiddenTransition { index: usize, moment2: f64 },

    #[error("tomography set {set} is rank-deficient")]
    SingularDesign { set: usize },

    #[error("line assignment is unstable: {changed} of {total} assignments changed near the optimum")]
    AssignmentUnstable { changed: usize, total: usize },

    #[error("both diagonals are zero; correlation is undefined")]
    ZeroDiagonal,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors produced by the state-geometry routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("hermiticity violated: max |M - M^dagger| = {deviation:e} exceeds {tol:e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("unit trace violated: Tr(M) = {trace}")]
    NotUnitTrace { trace: f64 },

    #[error("positivity violated: smallest eigenvalue {min_eigenvalue:e} below {bound:e}")]
    NotPositive { min_eigenvalue: f64, bound: f64 },

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {dim} outside supported range [{min}, {max}]")]
    DimensionOutOfRange { dim: usize, min: usize, max: usize },

    #[error("parameter {name} = {value} outside its domain {domain}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("ambiguous eigenvalue clustering: cluster means {first} and {second} closer than twice the cluster tolerance {cluster_tol:e}")]
    AmbiguousClustering {
        first: f64,
        second: f64,
        cluster_tol: f64,
    },

    #[error("matrix dimension {dim} is odd; symplectic tests need 2n x 2n matrices")]
    OddDimension { dim: usize },

    #[error("diagonal is not normalized: entries must lie in [0, 1] and sum to 1 (sum = {sum})")]
    NotNormalized { sum: f64 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

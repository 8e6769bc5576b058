use thiserror::Error;

/// Failures reported by the linear-algebra kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    /// A matrix that must be Hermitian (or symmetric) is not, beyond tolerance.
    #[error("matrix is not Hermitian: max |a_pq - conj(a_qp)| = {asymmetry:e} exceeds tolerance {tolerance:e}")]
    NotHermitian { asymmetry: f64, tolerance: f64 },
    /// A matrix that must be positive definite has a non-positive eigenvalue.
    #[error("matrix is not positive definite: eigenvalue {eigenvalue:e} <= 0")]
    NotPositiveDefinite { eigenvalue: f64 },
    /// Jacobi sweeps did not reduce the off-diagonal norm far enough.
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (relative off-diagonal norm {residual:e})")]
    JacobiNoConvergence { sweeps: usize, residual: f64 },
    /// Shifted QR iteration exhausted its iteration budget.
    #[error("QR iteration stagnated after {iterations} iterations with {remaining} eigenvalues unresolved")]
    QrStagnation { iterations: usize, remaining: usize },
    /// Input contains NaN or infinite entries.
    #[error("matrix contains non-finite entries")]
    NonFinite,
    /// Input dimension is invalid for the requested operation.
    #[error("invalid dimension: {0}")]
    Dimension(String),
}

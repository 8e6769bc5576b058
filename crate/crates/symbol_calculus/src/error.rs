use numerics::NumericsError;
use thiserror::Error;

/// Errors raised by the symbol calculus.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SymbolError {
    /// A kernel monomial `y₁^a y₂^b/|y|^p` outside the supported table.
    #[error("unsupported monomial y1^{a} y2^{b} / |y|^{p}")]
    UnsupportedMonomial {
        /// Power of y₁.
        a: u32,
        /// Power of y₂.
        b: u32,
        /// Power of |y|.
        p: u32,
    },
    /// The kernel expansion carries a curvature power other than 0 or 1.
    #[error("unexpected curvature power {0} in the kernel expansion")]
    UnexpectedCurvaturePower(u32),
    /// The reduced symbol `z·m·q` is not Hermitian.
    #[error("reduced symbol is not Hermitian: defect {defect:e} at scale {scale:e}")]
    NotHermitian {
        /// `‖b − b*‖` (max entry).
        defect: f64,
        /// `‖b‖` (max entry).
        scale: f64,
    },
    /// Failure in a numerical primitive.
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

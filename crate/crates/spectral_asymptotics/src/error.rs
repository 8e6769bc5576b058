use geometry::GeometryError;
use numerics::NumericsError;
use symbol_calculus::SymbolError;
use thiserror::Error;

/// Errors raised by the asymptotics machinery.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum AsymptoticsError {
    /// A matrix whose spectrum should be real is not Hermitian.
    #[error("spectrum is not real: Hermitian defect {defect:e} at scale {scale:e}")]
    ComplexSpectrum {
        /// `‖h − h*‖` (max entry).
        defect: f64,
        /// `‖h‖` (max entry).
        scale: f64,
    },
    /// A resolution or grid argument is out of range.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    /// The counting window reaches another essential-spectrum point.
    #[error("counting window of width {reference} at {omega} reaches essential point {other}")]
    WindowOverlap {
        /// Point the window is centred at.
        omega: f64,
        /// Reference width τ±.
        reference: f64,
        /// The offending point.
        other: f64,
    },
    /// Grid doubling moved a coefficient by more than the tolerance.
    #[error("under-resolved: {quantity} drifted by {drift:e} (tolerance {tolerance:e}) under grid doubling")]
    UnderResolved {
        /// Which coefficient.
        quantity: String,
        /// Relative change.
        drift: f64,
        /// Declared tolerance.
        tolerance: f64,
    },
    /// The τ⁻² fit preconditions are not met.
    #[error("fit rejected: {0}")]
    Fit(String),
    /// Geometry failure.
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    /// Symbol calculus failure.
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    /// Numerical primitive failure.
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

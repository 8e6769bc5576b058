use elastic_core::ElasticError;
use geometry::GeometryError;
use numerics::NumericsError;
use thiserror::Error;

/// Errors raised by the discretization.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiscretizationError {
    /// The surface is not a single closed outer ellipsoid or sphere.
    #[error("unsupported surface: {0}")]
    UnsupportedSurface(String),
    /// The requested system exceeds the dense memory budget.
    #[error("system size 3N = {size} exceeds the budget of {max}")]
    BudgetExceeded {
        /// Requested `3N`.
        size: usize,
        /// Largest accepted `3N`.
        max: usize,
    },
    /// A resolution or window argument is out of range.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    /// Geometry failure.
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    /// Material failure.
    #[error(transparent)]
    Elastic(#[from] ElasticError),
    /// Linear-algebra failure.
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

use thiserror::Error;

/// Failures of material construction and kernel evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ElasticError {
    /// Shear modulus must be positive.
    #[error("invalid Lamé constants: mu = {mu} must satisfy mu > 0")]
    NonPositiveShear { mu: f64 },
    /// Strong ellipticity requires λ + 2μ > 0.
    #[error("invalid Lamé constants: lambda + 2 mu = {value} must be > 0")]
    NotElliptic { value: f64 },
    /// Lamé constants must be finite numbers.
    #[error("invalid Lamé constants: lambda = {lambda}, mu = {mu} must be finite")]
    NonFinite { lambda: f64, mu: f64 },
    /// Kernels are singular when source and target coincide.
    #[error("kernel evaluated at coincident points (|x - y| = {distance:e})")]
    Singular { distance: f64 },
    /// Normal vectors must have unit length.
    #[error("normal vector has length {length}, expected 1")]
    NonUnitNormal { length: f64 },
}

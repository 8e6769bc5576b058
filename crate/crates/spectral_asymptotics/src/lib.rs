//! Eigenvalue-counting asymptotics of the elastic Neumann–Poincaré operator.
//!
//! Near each essential-spectrum point ω_ι the eigenvalue counting functions
//! behave as `n±(τ) ~ C±·τ⁻²`, with
//!
//! `C± = ½(2π)⁻² ∫_Γ ∫_{S¹} Tr±²(m_ι(x, θ)) dθ dS(x)`
//!
//! and two-sided total `C = C⁺ + C⁻ = A_ι·W(Γ) + B_ι·χ(Γ)`. This crate
//! evaluates these integrals by product quadrature, computes the material
//! constants `A_ι`, `B_ι`, and provides the closed-form sphere spectrum with
//! counting curves and τ⁻² fits for comparison.

mod coefficients;
mod counting;
mod error;
mod sphere;
mod trace;

pub use coefficients::{
    ab_from_pq, coeff_ab, coeff_c_total, coeff_cpm, coefficients, coefficients_with_refinement,
    coefficients_with_table, cosphere_integrals, curvature_samples, upsilon, AsymptoticCoefficients, CircleIntegrals,
    CoefficientConfig, CurvatureSample, SymbolTable, MIN_THETA, MIN_THETA_AB,
};
pub use counting::{counting_curve, fit_tau_minus2, log_grid_descending, CountingCurve, Side, TauFit, FIT_SPREAD_LIMIT};
pub use error::AsymptoticsError;
pub use sphere::{
    printed_pm_counting_constant, sphere_counting_coefficient, sphere_exact_eigs, sphere_minus_series,
    sphere_plus_series, sphere_scaled_gap, sphere_zero_series, SphereSpectrum,
};
pub use trace::{tr_pm_squared, trace_of_square, REAL_SPECTRUM_TOL};

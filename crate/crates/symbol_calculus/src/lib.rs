//! Symbol calculus for the elastic Neumann–Poincaré operator on surfaces.
//!
//! Symbols are 3×3 complex matrices evaluated at a unit covector
//! `ξ = (cos θ, sin θ)` of the tangent plane ([`CircleDirection`]). The crate
//! provides
//!
//! - exact Fourier transforms of the homogeneous kernel monomials
//!   ([`ft_homogeneous`]),
//! - the principal symbol `k₀`, its eigen-decomposition and derivatives,
//! - the subprincipal symbol `k₋₁` re-derived term by term from the cylinder
//!   kernel expansion,
//! - the universal matrices `M_ι` and effective symbols
//!   `m_ι = κ₁M_ι + κ₂VM̂_ιV`,
//! - the Hermitian reduction `b = z·m·q` through the single-layer symbol,
//! - an audit comparing derived symbols with alternative closed forms.

mod assembly;
mod audit;
mod direction;
mod error;
mod fourier;
mod principal;
mod single_layer;
mod subsymbol;

pub use assembly::{
    assemble_f, assemble_f_ordered, assemble_g, assemble_g_ordered, effective_symbol, effective_symbol_direct,
    factor_multiset, material_split, p_prime, universal_matrix, universal_matrix_at_curvature, MaterialSplit,
};
pub use audit::{audit_report, classify, AuditReport, AuditSection, Finding, FindingKind};
pub use direction::CircleDirection;
pub use error::SymbolError;
pub use fourier::{fmt_crational, ft_homogeneous, CRational, ExactFourier, ExactPoly, SUPPORTED_TRIPLES};
pub use principal::{
    dk0_dx, dk0_dx1_cylinder, dk0_dxi, dk0_dxi1, dk0_dxi2, k0, k0_eigensystem, rotation_generator,
    spectral_projector, swap_involution, K0Eigenpair, Symbol3,
};
pub use single_layer::{
    hermitian_reduce, q_symbol, rank_one_projector, reduced_eigenvalues, single_layer_symbol, z_symbol,
    HERMITIAN_REDUCTION_TOL,
};
pub use subsymbol::{
    derive_cylinder_symbol, principal_from_kernel, subsymbol_cylinder, subsymbol_general, ExactCylinderSymbol,
    ExactSymbolMatrix,
};

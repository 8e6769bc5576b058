//! Material constants and pointwise elastic kernels.
//!
//! * [`LameMaterial`] — Lamé constants and every derived scalar
//!   (𝕜, 𝕞, λ′, μ′, ω_ι).
//! * [`kelvin_matrix`], [`single_layer_kernel`] — fundamental solution.
//! * [`traction_apply`] — conormal derivative of a displacement gradient.
//! * [`np_kernel`] — double-layer (Neumann–Poincaré) kernel.
//! * [`cylinder_kernel_expansion`] / [`cylinder_kernel_monomials`] — the
//!   two leading terms of the kernel on a circular cylinder, as exact
//!   monomials that the symbol calculus consumes.

mod cylinder;
mod error;
mod kernels;
mod material;

pub use cylinder::{
    cylinder_kernel_expansion, cylinder_kernel_monomials, cylinder_point, KernelMonomial, KernelPart,
};
pub use error::ElasticError;
pub use kernels::{
    kelvin_matrix, kelvin_real, np_kernel, np_kernel_real, np_kernel_signed, np_kernel_signed_real,
    single_layer_kernel,
    traction_apply, ANTISYMMETRIC_SIGN,
};
pub use material::{Iota, LameMaterial};

//! Self-contained linear-algebra kernels shared by every other crate.
//!
//! * [`Mat3C`] — 3×3 complex matrices (all symbol values live here).
//! * [`hermitian_eig3`] / [`spd_sqrt3`] — closed-form Hermitian 3×3
//!   eigen-decomposition and positive square roots.
//! * [`DenseMatR`] with [`jacobi_sym_eig`] and [`real_schur_spectrum`] —
//!   dense real eigenvalue routines for discretized operators.
//! * [`gauss_legendre`] and [`ordered_sum`] — quadrature and deterministic
//!   summation helpers.
//!
//! Everything here is a pure function of its inputs.

mod dense;
mod eig3;
mod error;
mod jacobi;
mod mat3;
mod quadrature;
mod schur;

pub use dense::DenseMatR;
pub use eig3::{hermitian_eig3, spd_sqrt3, Eigh3, HERMITIAN_TOL};
pub use error::NumericsError;
pub use jacobi::jacobi_sym_eig;
pub use mat3::{Mat3C, Vec3C};
pub use num_complex::Complex64;
pub use quadrature::{gauss_legendre, ordered_sum, pairwise_sum};
pub use schur::{hessenberg_reduce, real_schur_spectrum};

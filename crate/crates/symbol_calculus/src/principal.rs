use crate::CircleDirection;
use elastic_core::{Iota, LameMaterial};
use numerics::{Complex64, Mat3C, Vec3C};

/// A matrix symbol evaluated at a unit covector, with its homogeneity degree.
///
/// The value at `ξ` with `|ξ| ≠ 1` is `|ξ|^degree · value` at `ξ/|ξ|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Symbol3 {
    /// Value at the unit direction.
    pub value: Mat3C,
    /// Homogeneity degree in ξ.
    pub degree: f64,
}

impl Symbol3 {
    /// Value at `s·ξ̂` for `s > 0`.
    pub fn at_scale(&self, s: f64) -> Mat3C {
        self.value.scale(s.powf(self.degree))
    }
}

fn i() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

/// `J = e₁e₂ᵀ − e₂e₁ᵀ`, the tangential rotation generator.
pub fn rotation_generator() -> Mat3C {
    Mat3C::from_real([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
}

/// The row/column swap `V` exchanging the two tangential axes.
pub fn swap_involution() -> Mat3C {
    Mat3C::from_real([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
}

/// Principal symbol `k₀ = i𝕜·[[0,0,−φ₁],[0,0,−φ₂],[φ₁,φ₂,0]]` (degree 0).
pub fn k0(dir: &CircleDirection, mat: &LameMaterial) -> Symbol3 {
    let (c, s) = (dir.phi1, dir.phi2);
    let a = Mat3C::from_real([[0.0, 0.0, -c], [0.0, 0.0, -s], [c, s, 0.0]]);
    Symbol3 { value: a.scale_c(i() * mat.kappa), degree: 0.0 }
}

/// One eigenpair of `k₀`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct K0Eigenpair {
    /// Which essential-spectrum point.
    pub iota: Iota,
    /// Eigenvalue ω_ι = ι𝕜.
    pub value: f64,
    /// Unit eigenvector.
    pub vector: Vec3C,
}

/// Orthonormal eigenbasis of `k₀`, ordered ι = −1, 0, +1.
///
/// `e± = 2^{−1/2}(φ₁, φ₂, ±i)ᵀ` and `e₀ = (−φ₂, φ₁, 0)ᵀ`, the actual kernel of `k₀`.
pub fn k0_eigensystem(dir: &CircleDirection, mat: &LameMaterial) -> [K0Eigenpair; 3] {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let (c, s) = (dir.phi1, dir.phi2);
    let e = |sign: f64| -> Vec3C { [Complex64::new(h * c, 0.0), Complex64::new(h * s, 0.0), Complex64::new(0.0, sign * h)] };
    [
        K0Eigenpair { iota: Iota::Minus, value: -mat.kappa, vector: e(-1.0) },
        K0Eigenpair {
            iota: Iota::Zero,
            value: 0.0,
            vector: [Complex64::new(-s, 0.0), Complex64::new(c, 0.0), Complex64::new(0.0, 0.0)],
        },
        K0Eigenpair { iota: Iota::Plus, value: mat.kappa, vector: e(1.0) },
    ]
}

/// Spectral projector of `k₀` onto ω_ι.
pub fn spectral_projector(iota: Iota, dir: &CircleDirection, mat: &LameMaterial) -> Mat3C {
    let pair = k0_eigensystem(dir, mat).into_iter().find(|p| p.iota == iota).expect("all three present");
    Mat3C::outer(&pair.vector, &pair.vector)
}

/// `∂k₀/∂ξ_α` at a unit direction (degree −1), `α ∈ {1, 2}`.
///
/// Obtained by differentiating `ξ_β/|ξ|`: `∂_α(ξ_β/|ξ|) = δ_αβ − φ_α φ_β`.
pub fn dk0_dxi(alpha: usize, dir: &CircleDirection, mat: &LameMaterial) -> Symbol3 {
    assert!(alpha == 1 || alpha == 2, "tangential index must be 1 or 2");
    let (c, s) = (dir.phi1, dir.phi2);
    let (d1, d2) = if alpha == 1 { (s * s, -c * s) } else { (-c * s, c * c) };
    let a = Mat3C::from_real([[0.0, 0.0, -d1], [0.0, 0.0, -d2], [d1, d2, 0.0]]);
    Symbol3 { value: a.scale_c(i() * mat.kappa), degree: -1.0 }
}

/// `∂k₀/∂ξ₁` at a unit direction.
pub fn dk0_dxi1(dir: &CircleDirection, mat: &LameMaterial) -> Symbol3 {
    dk0_dxi(1, dir, mat)
}

/// `∂k₀/∂ξ₂` at a unit direction.
pub fn dk0_dxi2(dir: &CircleDirection, mat: &LameMaterial) -> Symbol3 {
    dk0_dxi(2, dir, mat)
}

/// `∂k₀/∂x_α` at the chart centre (degree 0), in the fixed ambient frame
/// made of the principal directions and the normal at that centre.
///
/// Moving along `x_α` tilts the normal by `κ_α`, which rotates the local
/// `k₀` about the other tangential axis: `∂x₁k₀ = −i𝕜κ₁φ₂J`,
/// `∂x₂k₀ = +i𝕜κ₂φ₁J`.
pub fn dk0_dx(alpha: usize, curvature: f64, dir: &CircleDirection, mat: &LameMaterial) -> Symbol3 {
    assert!(alpha == 1 || alpha == 2, "tangential index must be 1 or 2");
    let f = if alpha == 1 { -dir.phi2 } else { dir.phi1 };
    Symbol3 { value: rotation_generator().scale_c(i() * (mat.kappa * curvature * f)), degree: 0.0 }
}

/// `∂k₀/∂x₁` on a cylinder of curvature κ across the `x₁` direction.
pub fn dk0_dx1_cylinder(dir: &CircleDirection, mat: &LameMaterial, kappa: f64) -> Symbol3 {
    dk0_dx(1, kappa, dir, mat)
}

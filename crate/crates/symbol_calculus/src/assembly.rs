use crate::principal::{dk0_dx, dk0_dxi, k0, swap_involution};
use crate::subsymbol::{subsymbol_cylinder, subsymbol_general};
use crate::{CircleDirection, Symbol3};
use elastic_core::{Iota, LameMaterial};
use numerics::{Complex64, Mat3C};

/// `p′_ι(ω_ι) = ∏_{ι′≠ι} (ω_ι − ω_ι′)²`: `4𝕜⁴` for ι = ±1 and `𝕜⁴` for ι = 0.
pub fn p_prime(iota: Iota, mat: &LameMaterial) -> f64 {
    Iota::ALL
        .iter()
        .filter(|j| **j != iota)
        .map(|j| {
            let d = mat.omega(iota) - mat.omega(*j);
            d * d
        })
        .product()
}

/// The multiset `𝕁_ι`: each of −1, 0, 1 twice, with one copy of ι removed,
/// in ascending order (five entries).
pub fn factor_multiset(iota: Iota) -> [Iota; 5] {
    let mut out = [Iota::Zero; 5];
    let mut n = 0;
    let mut skipped = false;
    for j in Iota::ALL {
        for _ in 0..2 {
            if j == iota && !skipped {
                skipped = true;
                continue;
            }
            out[n] = j;
            n += 1;
        }
    }
    out
}

fn factors(k0: &Mat3C, mat: &LameMaterial, order: &[Iota; 5]) -> Vec<Mat3C> {
    order.iter().map(|j| *k0 - Mat3C::identity().scale(mat.omega(*j))).collect()
}

fn product(ms: &[Mat3C]) -> Mat3C {
    ms.iter().fold(Mat3C::identity(), |acc, m| acc * *m)
}

/// Type-1 terms: `Σ_l ∏_{j<l}(k₀ − ω_j) · k_sub · ∏_{j>l}(k₀ − ω_j)`.
pub fn assemble_f(iota: Iota, k0: &Symbol3, ksub: &Symbol3, mat: &LameMaterial) -> Mat3C {
    assemble_f_ordered(k0, ksub, mat, &factor_multiset(iota))
}

/// [`assemble_f`] with an explicit ordering of the five factors.
pub fn assemble_f_ordered(k0: &Symbol3, ksub: &Symbol3, mat: &LameMaterial, order: &[Iota; 5]) -> Mat3C {
    let fac = factors(&k0.value, mat, order);
    let mut acc = Mat3C::zeros();
    for l in 0..5 {
        acc += product(&fac[..l]) * ksub.value * product(&fac[l + 1..]);
    }
    acc
}

/// Type-2 terms for one tangential index α, including the `1/i` prefactor:
/// `(1/i) Σ_{l<m} ∏_{j<l}(k₀−ω_j) ∂_ξα k₀ ∏_{l<j<m}(k₀−ω_j) ∂_xα k₀ ∏_{j>m}(k₀−ω_j)`.
pub fn assemble_g(iota: Iota, k0: &Symbol3, dxi_k0: &Symbol3, dx_k0: &Symbol3, mat: &LameMaterial) -> Mat3C {
    assemble_g_ordered(k0, dxi_k0, dx_k0, mat, &factor_multiset(iota))
}

/// [`assemble_g`] with an explicit ordering of the five factors.
pub fn assemble_g_ordered(
    k0: &Symbol3,
    dxi_k0: &Symbol3,
    dx_k0: &Symbol3,
    mat: &LameMaterial,
    order: &[Iota; 5],
) -> Mat3C {
    let fac = factors(&k0.value, mat, order);
    let mut acc = Mat3C::zeros();
    for l in 0..5 {
        for m in (l + 1)..5 {
            acc += product(&fac[..l]) * dxi_k0.value * product(&fac[l + 1..m]) * dx_k0.value * product(&fac[m + 1..]);
        }
    }
    acc.scale_c(Complex64::new(0.0, -1.0))
}

/// Universal matrix `M_ι(θ)` (degree −1), computed on a cylinder of
/// curvature `kappa ≠ 0` and divided by κ·p′_ι.
pub fn universal_matrix_at_curvature(iota: Iota, dir: &CircleDirection, mat: &LameMaterial, kappa: f64) -> Mat3C {
    let k = k0(dir, mat);
    let ksub = subsymbol_cylinder(dir, mat, kappa).expect("cylinder table is supported");
    let f = assemble_f(iota, &k, &ksub, mat);
    let g = assemble_g(iota, &k, &dk0_dxi(1, dir, mat), &dk0_dx(1, kappa, dir, mat), mat);
    (f + g).scale(1.0 / (kappa * p_prime(iota, mat)))
}

/// Universal matrix `M_ι(θ)` at unit direction θ (degree −1).
pub fn universal_matrix(iota: Iota, dir: &CircleDirection, mat: &LameMaterial) -> Mat3C {
    universal_matrix_at_curvature(iota, dir, mat, 1.0)
}

/// Effective symbol `m_ι = κ₁M_ι(θ) + κ₂·V M_ι(θ̂) V` for principal
/// curvatures `(κ₁, κ₂)`, with θ measured from the κ₁ direction.
pub fn effective_symbol(iota: Iota, kappa1: f64, kappa2: f64, dir: &CircleDirection, mat: &LameMaterial) -> Mat3C {
    let v = swap_involution();
    universal_matrix(iota, dir, mat).scale(kappa1) + (v * universal_matrix(iota, &dir.swapped(), mat) * v).scale(kappa2)
}

/// Effective symbol assembled directly from the general subsymbol and both
/// tangential derivative pairs (no universal-matrix shortcut).
pub fn effective_symbol_direct(
    iota: Iota,
    kappa1: f64,
    kappa2: f64,
    dir: &CircleDirection,
    mat: &LameMaterial,
) -> Mat3C {
    let k = k0(dir, mat);
    let f = assemble_f(iota, &k, &subsymbol_general(dir, mat, kappa1, kappa2), mat);
    let g1 = assemble_g(iota, &k, &dk0_dxi(1, dir, mat), &dk0_dx(1, kappa1, dir, mat), mat);
    let g2 = assemble_g(iota, &k, &dk0_dxi(2, dir, mat), &dk0_dx(2, kappa2, dir, mat), mat);
    (f + g1 + g2).scale(1.0 / p_prime(iota, mat))
}

/// Split `M_ι = 𝕜·X_ι + 𝕞·Y_ι` determined from two Lamé pairs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MaterialSplit {
    /// Coefficient of 𝕜.
    pub x: Mat3C,
    /// Coefficient of 𝕞.
    pub y: Mat3C,
}

impl MaterialSplit {
    /// Predicted `M_ι` for another material.
    pub fn predict(&self, mat: &LameMaterial) -> Mat3C {
        self.x.scale(mat.kappa) + self.y.scale(mat.em)
    }
}

/// Solves for `X_ι(θ)`, `Y_ι(θ)` from the materials `(λ, μ) = (1, 1)` and `(0, 1)`.
pub fn material_split(iota: Iota, dir: &CircleDirection) -> MaterialSplit {
    let a = LameMaterial::new(1.0, 1.0).expect("valid");
    let b = LameMaterial::new(0.0, 1.0).expect("valid");
    let ma = universal_matrix(iota, dir, &a);
    let mb = universal_matrix(iota, dir, &b);
    // [𝕜a 𝕞a; 𝕜b 𝕞b]·[X; Y] = [Ma; Mb]
    let det = a.kappa * b.em - a.em * b.kappa;
    let x = (ma.scale(b.em) - mb.scale(a.em)).scale(1.0 / det);
    let y = (mb.scale(a.kappa) - ma.scale(b.kappa)).scale(1.0 / det);
    MaterialSplit { x, y }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_prime_values() {
        let m = LameMaterial::new(2.0, 1.0).unwrap();
        let k4 = m.kappa.powi(4);
        assert!((p_prime(Iota::Plus, &m) - 4.0 * k4).abs() < 1e-15);
        assert!((p_prime(Iota::Minus, &m) - 4.0 * k4).abs() < 1e-15);
        assert!((p_prime(Iota::Zero, &m) - k4).abs() < 1e-15);
    }

    #[test]
    fn multisets() {
        use Iota::*;
        assert_eq!(factor_multiset(Plus), [Minus, Minus, Zero, Zero, Plus]);
        assert_eq!(factor_multiset(Zero), [Minus, Minus, Zero, Plus, Plus]);
        assert_eq!(factor_multiset(Minus), [Minus, Zero, Zero, Plus, Plus]);
    }
}

use crate::{ElasticError, LameMaterial};
use num_rational::Rational64;
use std::f64::consts::PI;

/// Which of the two expansion terms a monomial belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KernelPart {
    /// The antisymmetric (𝕜-weighted) part: leading flat term and its
    /// first curvature correction.
    K1,
    /// The curvature-induced symmetric part.
    K2,
}

/// One exact monomial of the cylinder kernel expansion:
///
/// `(1/2π)·(coeff_kappa·𝕜 + coeff_em·𝕞)·κ^curvature_power·y₁^a y₂^b / |y|^p`
///
/// placed at matrix entry `entry` (0-based row, column).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelMonomial {
    /// 0-based (row, column).
    pub entry: (usize, usize),
    /// Rational coefficient of 𝕜.
    pub coeff_kappa: Rational64,
    /// Rational coefficient of 𝕞.
    pub coeff_em: Rational64,
    /// Power of the curvature κ (0 or 1).
    pub curvature_power: u32,
    /// Power of y₁.
    pub a: u32,
    /// Power of y₂.
    pub b: u32,
    /// Power of |y| in the denominator.
    pub p: u32,
    /// Expansion term this monomial belongs to.
    pub part: KernelPart,
}

impl KernelMonomial {
    /// Homogeneity degree in `y`: `a + b − p`.
    pub fn degree(&self) -> i32 {
        self.a as i32 + self.b as i32 - self.p as i32
    }

    /// Scalar material factor `(coeff_kappa·𝕜 + coeff_em·𝕞)/2π`.
    pub fn material_factor(&self, mat: &LameMaterial) -> f64 {
        (r2f(self.coeff_kappa) * mat.kappa + r2f(self.coeff_em) * mat.em) / (2.0 * PI)
    }

    /// Value of the monomial at `y ≠ 0` for curvature `kappa`.
    pub fn eval(&self, mat: &LameMaterial, kappa: f64, y: [f64; 2]) -> f64 {
        let r = (y[0] * y[0] + y[1] * y[1]).sqrt();
        self.material_factor(mat)
            * kappa.powi(self.curvature_power as i32)
            * y[0].powi(self.a as i32)
            * y[1].powi(self.b as i32)
            / r.powi(self.p as i32)
    }
}

fn r2f(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn mono(
    entry: (usize, usize),
    ck: (i64, i64),
    cm: (i64, i64),
    curvature_power: u32,
    (a, b, p): (u32, u32, u32),
    part: KernelPart,
) -> KernelMonomial {
    KernelMonomial {
        entry,
        coeff_kappa: Rational64::new(ck.0, ck.1),
        coeff_em: Rational64::new(cm.0, cm.1),
        curvature_power,
        a,
        b,
        p,
        part,
    }
}

/// Exact monomial table for the kernel `K(0, y)` on a circular cylinder of
/// curvature κ whose axis is the `x₂` direction, in graph coordinates
/// `y = (y₁, y₂)` over the tangent plane at the origin (outer normal `e₃`).
///
/// `K(0, y) = K¹(y) + K²(y) + O(1)` as `y → 0`. `K¹` collects the degree −2
/// flat term and its degree −1 curvature correction; `K²` is degree −1 and
/// vanishes on the axis line `y₁ = 0`.
pub fn cylinder_kernel_monomials() -> Vec<KernelMonomial> {
    use KernelPart::{K1, K2};
    let z = (0, 1);
    vec![
        // K¹, flat part
        mono((0, 2), (-1, 1), z, 0, (1, 0, 3), K1),
        mono((1, 2), (-1, 1), z, 0, (0, 1, 3), K1),
        mono((2, 0), (1, 1), z, 0, (1, 0, 3), K1),
        mono((2, 1), (1, 1), z, 0, (0, 1, 3), K1),
        // K¹, curvature correction
        mono((0, 1), (-1, 1), z, 1, (1, 1, 3), K1),
        mono((1, 0), (1, 1), z, 1, (1, 1, 3), K1),
        // K², diagonal 𝕜 part
        mono((0, 0), (-1, 2), z, 1, (2, 0, 3), K2),
        mono((1, 1), (-1, 2), z, 1, (2, 0, 3), K2),
        mono((2, 2), (-1, 2), z, 1, (2, 0, 3), K2),
        // K², 𝕞 part
        mono((0, 0), z, (-3, 2), 1, (4, 0, 5), K2),
        mono((0, 1), z, (-3, 2), 1, (3, 1, 5), K2),
        mono((1, 0), z, (-3, 2), 1, (3, 1, 5), K2),
        mono((1, 1), z, (-3, 2), 1, (2, 2, 5), K2),
    ]
}

/// Real 3×3 block.
type Block = [[f64; 3]; 3];

/// Evaluates `(K¹(y), K²(y))` from the monomial table.
pub fn cylinder_kernel_expansion(
    mat: &LameMaterial,
    kappa: f64,
    y: [f64; 2],
) -> Result<(Block, Block), ElasticError> {
    let r = (y[0] * y[0] + y[1] * y[1]).sqrt();
    if r == 0.0 || !r.is_finite() {
        return Err(ElasticError::Singular { distance: r });
    }
    let mut k1 = [[0.0; 3]; 3];
    let mut k2 = [[0.0; 3]; 3];
    for m in cylinder_kernel_monomials() {
        let target = match m.part {
            KernelPart::K1 => &mut k1,
            KernelPart::K2 => &mut k2,
        };
        target[m.entry.0][m.entry.1] += m.eval(mat, kappa, y);
    }
    Ok((k1, k2))
}

/// Point and outer unit normal of the cylinder over graph coordinates `y`.
///
/// The cylinder touches the tangent plane `x₃ = 0` at the origin, has axis
/// parallel to `x₂` through `(0, ·, 1/κ)`, and is the graph
/// `x₃ = (1 − √(1 − κ²y₁²))/κ`. The normal is `(−κy₁, 0, 1 − κx₃)`.
/// Requires `|κy₁| < 1`; `κ = 0` gives the flat plane.
pub fn cylinder_point(kappa: f64, y: [f64; 2]) -> Result<([f64; 3], [f64; 3]), ElasticError> {
    let t = kappa * y[0];
    if !(t.abs() < 1.0) {
        return Err(ElasticError::Singular { distance: 1.0 - t.abs() });
    }
    let root = (1.0 - t * t).sqrt();
    // (1 − √(1−t²))/κ written without cancellation.
    let x3 = if kappa == 0.0 { 0.0 } else { t * t / (kappa * (1.0 + root)) };
    Ok(([y[0], y[1], x3], [-t, 0.0, root]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_degrees() {
        for m in cylinder_kernel_monomials() {
            let want = if m.curvature_power == 0 { -2 } else { -1 };
            assert_eq!(m.degree(), want, "{m:?}");
        }
    }

    #[test]
    fn flat_part_is_antisymmetric() {
        let mat = LameMaterial::new(1.0, 1.0).unwrap();
        let (k1, _) = cylinder_kernel_expansion(&mat, 0.0, [0.3, -0.4]).unwrap();
        for p in 0..3 {
            for q in 0..3 {
                assert!((k1[p][q] + k1[q][p]).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn point_normal_is_unit_and_orthogonal_to_axis() {
        let (x, n) = cylinder_point(-0.8, [0.5, 2.0]).unwrap();
        assert!(((n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt() - 1.0).abs() < 1e-15);
        // distance to the axis equals the radius
        let c = 1.0 / -0.8;
        let dist = (x[0] * x[0] + (x[2] - c) * (x[2] - c)).sqrt();
        assert!((dist - 1.25).abs() < 1e-14);
    }

    #[test]
    fn rejects_out_of_chart() {
        assert!(cylinder_point(2.0, [0.6, 0.0]).is_err());
    }
}

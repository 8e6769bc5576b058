use crate::{CircleDirection, Symbol3, SymbolError};
use elastic_core::LameMaterial;
use numerics::{hermitian_eig3, Mat3C};

/// Tolerance (relative to `‖b‖`, floored at `‖m‖`) on the Hermitian defect of `b = z m q`.
pub const HERMITIAN_REDUCTION_TOL: f64 = 1e-10;

/// Absolute defect floor, in units of 𝕜, below which `b` counts as Hermitian.
/// Covers directions where the symbol cancels to rounding noise.
const HERMITIAN_ABS_FLOOR: f64 = 1e-13;

/// `P = L ⊕ 1` with `L = ξ̂ξ̂ᵀ` the tangential rank-one projector.
fn projector(dir: &CircleDirection) -> Mat3C {
    let (c, s) = (dir.phi1, dir.phi2);
    Mat3C::from_real([[c * c, c * s, 0.0], [c * s, s * s, 0.0], [0.0, 0.0, 1.0]])
}

/// Tangential rank-one projector `L(ξ) = ξ̂ξ̂ᵀ` embedded in the upper 2×2 block.
pub fn rank_one_projector(dir: &CircleDirection) -> Mat3C {
    let mut p = projector(dir);
    p[(2, 2)] = num_complex::Complex64::new(0.0, 0.0);
    p
}

/// Single-layer principal symbol `s = (2μ)⁻¹ (E − 𝕞(L ⊕ 1))` (degree −1).
pub fn single_layer_symbol(dir: &CircleDirection, mat: &LameMaterial) -> Symbol3 {
    let value = (Mat3C::identity() - projector(dir).scale(mat.em)).scale(1.0 / (2.0 * mat.mu));
    Symbol3 { value, degree: -1.0 }
}

/// Positive square root `q = (2μ)^{−1/2}(E − (1 − √(1−𝕞))(L ⊕ 1))` of `s` (degree −½).
pub fn q_symbol(dir: &CircleDirection, mat: &LameMaterial) -> Symbol3 {
    let a = 1.0 - (1.0 - mat.em).sqrt();
    let value = (Mat3C::identity() - projector(dir).scale(a)).scale(1.0 / (2.0 * mat.mu).sqrt());
    Symbol3 { value, degree: -0.5 }
}

/// Inverse `z = q⁻¹ = (2μ)^{1/2}(E − (1 − 1/√(1−𝕞))(L ⊕ 1))` (degree +½).
pub fn z_symbol(dir: &CircleDirection, mat: &LameMaterial) -> Symbol3 {
    let b = 1.0 - 1.0 / (1.0 - mat.em).sqrt();
    let value = (Mat3C::identity() - projector(dir).scale(b)).scale((2.0 * mat.mu).sqrt());
    Symbol3 { value, degree: 0.5 }
}

/// Similarity `b = z·m·q`, which must be Hermitian for an effective symbol `m`.
///
/// Returns the exact Hermitian part after checking the defect; a larger
/// defect indicates an inconsistent upstream symbol.
pub fn hermitian_reduce(m: &Mat3C, dir: &CircleDirection, mat: &LameMaterial) -> Result<Mat3C, SymbolError> {
    let b = z_symbol(dir, mat).value * *m * q_symbol(dir, mat).value;
    let defect = b.hermitian_defect();
    let scale = b.norm().max(m.norm());
    if defect > HERMITIAN_REDUCTION_TOL * scale && defect > HERMITIAN_ABS_FLOOR * mat.kappa {
        return Err(SymbolError::NotHermitian { defect, scale });
    }
    Ok(b.hermitian_part())
}

/// Real eigenvalues (ascending) of an effective symbol via its Hermitian reduction.
pub fn reduced_eigenvalues(m: &Mat3C, dir: &CircleDirection, mat: &LameMaterial) -> Result<[f64; 3], SymbolError> {
    let b = hermitian_reduce(m, dir, mat)?;
    Ok(hermitian_eig3(&b).map_err(SymbolError::Numerics)?.values)
}

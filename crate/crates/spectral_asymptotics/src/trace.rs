use crate::AsymptoticsError;
use numerics::{hermitian_eig3, Mat3C};

/// Relative Hermitian-defect tolerance accepted by [`tr_pm_squared`].
pub const REAL_SPECTRUM_TOL: f64 = 1e-10;

/// Sums of squares of the positive and of the negative eigenvalues of a
/// Hermitian 3×3 matrix, returned as `(plus, minus)`, both ≥ 0.
///
/// The input must be Hermitian (e.g. the output of a Hermitian reduction);
/// a defect above [`REAL_SPECTRUM_TOL`] relative to the largest entry is
/// rejected because the spectrum is then not guaranteed real.
pub fn tr_pm_squared(h: &Mat3C) -> Result<(f64, f64), AsymptoticsError> {
    let scale = h.max_abs();
    let defect = h.hermitian_defect();
    if defect > REAL_SPECTRUM_TOL * scale {
        return Err(AsymptoticsError::ComplexSpectrum { defect, scale });
    }
    if scale == 0.0 {
        return Ok((0.0, 0.0));
    }
    Ok(split_squares(&hermitian_eig3(&h.hermitian_part())?.values))
}

/// `(Σ max(λ,0)², Σ min(λ,0)²)`.
pub(crate) fn split_squares(values: &[f64; 3]) -> (f64, f64) {
    values.iter().fold((0.0, 0.0), |(p, m), &l| if l > 0.0 { (p + l * l, m) } else { (p, m + l * l) })
}

/// `Re Tr(m²)` without forming eigenvalues.
pub fn trace_of_square(m: &Mat3C) -> f64 {
    (*m * *m).trace().re
}

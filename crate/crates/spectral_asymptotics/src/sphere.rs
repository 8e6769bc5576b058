use elastic_core::{Iota, LameMaterial};
use serde::Serialize;

/// Closed-form eigenvalues of the double-layer operator on a sphere.
///
/// For `n ≥ 1` there are three series, each eigenvalue of multiplicity `2n+1`:
///
/// * `Λₙ⁰ = 3 / (2(2n+1))` → 0,
/// * `Λₙ⁻ = (3λ − 2μ(2n² − 2n − 3)) / (2(λ+2μ)(4n² − 1))` → −𝕜,
/// * `Λₙ⁺ = (−3λ + 2μ(2n² + 2n − 3)) / (2(λ+2μ)(4n² − 1))` → +𝕜,
///
/// all approaching their limits from above. The radius does not enter.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SphereSpectrum {
    /// Lamé λ.
    pub lambda: f64,
    /// Lamé μ.
    pub mu: f64,
    /// Largest `n`.
    pub nmax: usize,
    /// `Λₙ⁰`, `n = 1..=nmax`.
    pub zero: Vec<f64>,
    /// `Λₙ⁻`.
    pub minus: Vec<f64>,
    /// `Λₙ⁺`.
    pub plus: Vec<f64>,
}

/// `Λₙ⁰`.
pub fn sphere_zero_series(n: usize) -> f64 {
    3.0 / (2.0 * (2 * n + 1) as f64)
}

/// `Λₙ⁻`.
pub fn sphere_minus_series(mat: &LameMaterial, n: usize) -> f64 {
    let (l, m, n) = (mat.lambda, mat.mu, n as f64);
    (3.0 * l - 2.0 * m * (2.0 * n * n - 2.0 * n - 3.0)) / (2.0 * (l + 2.0 * m) * (4.0 * n * n - 1.0))
}

/// `Λₙ⁺`.
pub fn sphere_plus_series(mat: &LameMaterial, n: usize) -> f64 {
    let (l, m, n) = (mat.lambda, mat.mu, n as f64);
    (-3.0 * l + 2.0 * m * (2.0 * n * n + 2.0 * n - 3.0)) / (2.0 * (l + 2.0 * m) * (4.0 * n * n - 1.0))
}

/// Builds the three series for `n = 1..=nmax` (`nmax ≥ 1`; 0 is clamped to 1).
pub fn sphere_exact_eigs(mat: &LameMaterial, nmax: usize) -> SphereSpectrum {
    let nmax = nmax.max(1);
    SphereSpectrum {
        lambda: mat.lambda,
        mu: mat.mu,
        nmax,
        zero: (1..=nmax).map(sphere_zero_series).collect(),
        minus: (1..=nmax).map(|n| sphere_minus_series(mat, n)).collect(),
        plus: (1..=nmax).map(|n| sphere_plus_series(mat, n)).collect(),
    }
}

impl SphereSpectrum {
    /// Multiplicity `2n + 1` of the `n`-th entry of each series.
    pub fn multiplicity(n: usize) -> usize {
        2 * n + 1
    }

    /// The series accumulating at ω_ι as `(value, multiplicity)` pairs.
    pub fn series(&self, iota: Iota) -> Vec<(f64, usize)> {
        let s = match iota {
            Iota::Minus => &self.minus,
            Iota::Zero => &self.zero,
            Iota::Plus => &self.plus,
        };
        s.iter().enumerate().map(|(k, &v)| (v, Self::multiplicity(k + 1))).collect()
    }

    /// All eigenvalues as `(value, multiplicity)` pairs.
    pub fn all(&self) -> Vec<(f64, usize)> {
        Iota::ALL.iter().flat_map(|&i| self.series(i)).collect()
    }

    /// Total number of eigenvalues counted with multiplicity.
    pub fn dimension(&self) -> usize {
        3 * (1..=self.nmax).map(Self::multiplicity).sum::<usize>()
    }
}

/// `n·(Λₙ − ω_ι)` at a given `n`; its limit is the slope whose square is the
/// one-sided counting coefficient at ω_ι.
pub fn sphere_scaled_gap(mat: &LameMaterial, iota: Iota, n: usize) -> f64 {
    let v = match iota {
        Iota::Minus => sphere_minus_series(mat, n),
        Iota::Zero => sphere_zero_series(n),
        Iota::Plus => sphere_plus_series(mat, n),
    };
    n as f64 * (v - mat.omega(iota))
}

/// Closed-form one-sided counting coefficient above ω_ι for the sphere:
/// `(lim n(Λₙ − ω_ι))²`, i.e. `9/16` at 0 and `𝕜²` at ±𝕜.
pub fn sphere_counting_coefficient(mat: &LameMaterial, iota: Iota) -> f64 {
    match iota {
        Iota::Zero => 9.0 / 16.0,
        _ => mat.kappa * mat.kappa,
    }
}

/// The ±𝕜 counting constant as printed alongside the sphere spectrum, `(4𝕜)²`.
/// Kept for reporting; it disagrees with the series by a factor of 16.
pub fn printed_pm_counting_constant(mat: &LameMaterial) -> f64 {
    (4.0 * mat.kappa).powi(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_terms() {
        let m = LameMaterial::new(0.0, 1.0).unwrap();
        let s = sphere_exact_eigs(&m, 2);
        assert!((s.zero[0] - 0.5).abs() < 1e-16);
        assert!((s.minus[0] - 0.5).abs() < 1e-16);
        assert!((s.plus[1] - 0.3).abs() < 1e-16);
        assert!((s.minus[1] + 1.0 / 30.0).abs() < 1e-16);
        assert_eq!(s.dimension(), 3 * (3 + 5));
    }
}

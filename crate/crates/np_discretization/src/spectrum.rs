//! Spectrum extraction, positivity checks and clustering near `{0, ±𝕜}`.

use crate::nystrom::{NystromSystem, SingleLayer};
use crate::DiscretizationError;
use elastic_core::{Iota, LameMaterial};
use numerics::{jacobi_sym_eig, real_schur_spectrum, Complex64, DenseMatR};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Default cluster radius around each essential-spectrum point.
pub const DEFAULT_CLUSTER_RADIUS: f64 = 0.05;

const IOTAS: [Iota; 3] = [Iota::Minus, Iota::Zero, Iota::Plus];

/// Eigenvalues falling within `radius` of one essential-spectrum point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    /// ι ∈ {−1, 0, 1}.
    pub iota: i32,
    /// ω_ι.
    pub omega: f64,
    /// Cluster radius.
    pub radius: f64,
    /// Real parts of the members, descending.
    pub members: Vec<f64>,
}

/// Discretized spectrum with realness diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumSample {
    /// Eigenvalues, descending by real part.
    pub eigenvalues: Vec<Complex64>,
    /// Largest |imaginary part|.
    pub max_imag: f64,
    /// Largest modulus.
    pub spectral_radius: f64,
    /// One cluster per ι, ordered −1, 0, 1.
    pub clusters: Vec<Cluster>,
}

/// JSON summary of a [`SpectrumSample`] (no eigenvalue list).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSummary {
    /// Matrix dimension.
    pub dimension: usize,
    /// Largest real eigenvalue.
    pub largest: f64,
    /// Smallest real eigenvalue.
    pub smallest: f64,
    /// Largest |imaginary part|.
    pub max_imag: f64,
    /// Largest modulus.
    pub spectral_radius: f64,
    /// Cluster sizes and extents.
    pub clusters: Vec<ClusterSummary>,
    /// Fraction of eigenvalues outside every cluster.
    pub outside_fraction: f64,
}

/// Size and extent of one cluster.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClusterSummary {
    /// ι.
    pub iota: i32,
    /// ω_ι.
    pub omega: f64,
    /// Radius.
    pub radius: f64,
    /// Number of members.
    pub count: usize,
}

/// Eigenvalues of the discretized double-layer operator, clustered with
/// [`DEFAULT_CLUSTER_RADIUS`] (capped at `𝕜/2`).
pub fn np_spectrum(system: &NystromSystem) -> Result<SpectrumSample, DiscretizationError> {
    let r = DEFAULT_CLUSTER_RADIUS.min(0.5 * system.material.kappa);
    np_spectrum_with_radius(system, r)
}

/// As [`np_spectrum`] with an explicit cluster radius.
pub fn np_spectrum_with_radius(system: &NystromSystem, radius: f64) -> Result<SpectrumSample, DiscretizationError> {
    if !(radius > 0.0 && radius < system.material.kappa) {
        return Err(DiscretizationError::InvalidConfig(format!(
            "cluster radius {radius} must lie in (0, 𝕜 = {})",
            system.material.kappa
        )));
    }
    let eigenvalues = real_schur_spectrum(&system.k)?;
    Ok(SpectrumSample::new(eigenvalues, &system.material, radius))
}

impl SpectrumSample {
    /// Wraps a spectrum and clusters it about `{−𝕜, 0, 𝕜}`.
    pub fn new(mut eigenvalues: Vec<Complex64>, material: &LameMaterial, radius: f64) -> Self {
        eigenvalues.sort_by(|x, y| y.re.total_cmp(&x.re).then(y.im.total_cmp(&x.im)));
        let max_imag = eigenvalues.iter().fold(0.0_f64, |m, z| m.max(z.im.abs()));
        let spectral_radius = eigenvalues.iter().fold(0.0_f64, |m, z| m.max(z.norm()));
        let clusters = IOTAS
            .iter()
            .map(|&iota| {
                let omega = material.omega(iota);
                let members = eigenvalues.iter().filter(|z| (z.re - omega).abs() < radius).map(|z| z.re).collect();
                Cluster { iota: iota.value(), omega, radius, members }
            })
            .collect();
        SpectrumSample { eigenvalues, max_imag, spectral_radius, clusters }
    }

    /// Largest real part.
    pub fn largest(&self) -> f64 {
        self.eigenvalues.first().map_or(f64::NAN, |z| z.re)
    }

    /// Eigenvalues within `tol` of the largest one (real parts, descending).
    pub fn top_cluster(&self, tol: f64) -> Vec<f64> {
        let top = self.largest();
        self.eigenvalues.iter().map(|z| z.re).take_while(|&x| top - x <= tol).collect()
    }

    /// Fraction of eigenvalues farther than the cluster radius from every
    /// essential-spectrum point.
    pub fn outside_fraction(&self) -> f64 {
        let inside: usize = self.clusters.iter().map(|c| c.members.len()).sum();
        (self.eigenvalues.len() - inside) as f64 / self.eigenvalues.len() as f64
    }

    /// JSON-ready summary.
    pub fn summary(&self) -> SpectrumSummary {
        SpectrumSummary {
            dimension: self.eigenvalues.len(),
            largest: self.largest(),
            smallest: self.eigenvalues.last().map_or(f64::NAN, |z| z.re),
            max_imag: self.max_imag,
            spectral_radius: self.spectral_radius,
            clusters: self
                .clusters
                .iter()
                .map(|c| ClusterSummary { iota: c.iota, omega: c.omega, radius: c.radius, count: c.members.len() })
                .collect(),
            outside_fraction: self.outside_fraction(),
        }
    }

    /// CSV dump with header `re,im`, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("re,im\n");
        for z in &self.eigenvalues {
            let _ = writeln!(s, "{:.16e},{:.16e}", z.re, z.im);
        }
        s
    }
}

/// One-sided counting window `(ω + τ_min, ω + τ_max)` and its mirror.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountingWindow {
    /// Inner distance τ.
    pub tau_min: f64,
    /// Outer distance τ₊.
    pub tau_max: f64,
}

/// Empirical counts about one essential-spectrum point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClusterCount {
    /// ι.
    pub iota: i32,
    /// ω_ι.
    pub omega: f64,
    /// Eigenvalues in `(ω + τ_min, ω + τ_max)`.
    pub above: usize,
    /// Eigenvalues in `(ω − τ_max, ω − τ_min)`.
    pub below: usize,
}

/// Counts discretized eigenvalues in the window on both sides of each ω_ι.
///
/// The window must fit within half the gap `𝕜` between essential points.
/// Counts are resolution-limited and only qualitative.
pub fn cluster_counts(
    sample: &SpectrumSample,
    material: &LameMaterial,
    window: CountingWindow,
) -> Result<Vec<ClusterCount>, DiscretizationError> {
    let CountingWindow { tau_min, tau_max } = window;
    if !(tau_min >= 0.0 && tau_min < tau_max && tau_max < 0.5 * material.kappa) {
        return Err(DiscretizationError::InvalidConfig(format!(
            "window (τ, τ₊) = ({tau_min}, {tau_max}) must satisfy 0 ≤ τ < τ₊ < 𝕜/2 = {}",
            0.5 * material.kappa
        )));
    }
    Ok(IOTAS
        .iter()
        .map(|&iota| {
            let omega = material.omega(iota);
            let count = |lo: f64, hi: f64| sample.eigenvalues.iter().filter(|z| z.re > lo && z.re < hi).count();
            ClusterCount {
                iota: iota.value(),
                omega,
                above: count(omega + tau_min, omega + tau_max),
                below: count(omega - tau_max, omega - tau_min),
            }
        })
        .collect())
}

/// Positive-definiteness report of the single-layer Galerkin matrix.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PositivityReport {
    /// Whether the Cholesky factorization succeeded with positive pivots.
    pub positive_definite: bool,
    /// Smallest squared Cholesky pivot relative to the largest diagonal entry.
    pub min_pivot_ratio: f64,
    /// Galerkin asymmetry before symmetrization.
    pub raw_asymmetry: f64,
}

/// Checks positive definiteness of the single layer by Cholesky
/// factorization of its Galerkin matrix.
pub fn single_layer_positivity(s: &SingleLayer) -> PositivityReport {
    let g = &s.galerkin;
    let n = g.n();
    let scale = (0..n).fold(0.0_f64, |m, i| m.max(g[(i, i)]));
    let mut l = vec![0.0; n * n];
    let mut min_pivot = f64::INFINITY;
    let mut ok = true;
    for j in 0..n {
        let mut d = g[(j, j)];
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        min_pivot = min_pivot.min(d);
        if d <= 0.0 || !d.is_finite() {
            ok = false;
            break;
        }
        let djj = d.sqrt();
        l[j * n + j] = djj;
        for i in (j + 1)..n {
            let mut v = g[(i, j)];
            for k in 0..j {
                v -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = v / djj;
        }
    }
    PositivityReport { positive_definite: ok, min_pivot_ratio: min_pivot / scale, raw_asymmetry: s.raw_asymmetry }
}

/// Eigenvalues of the symmetrized single-layer Galerkin matrix, descending
/// (dense Jacobi; intended for moderate sizes).
pub fn single_layer_eigenvalues(s: &SingleLayer) -> Result<Vec<f64>, DiscretizationError> {
    Ok(jacobi_sym_eig(&s.galerkin)?)
}

/// `‖Π A Πᵀ − A‖_F / ‖A‖_F` for the nodal similarity `Π` that shifts every
/// node one azimuthal step and rotates vector components by the same angle
/// about the `x₃` axis.
pub fn azimuthal_defect(system: &NystromSystem, nodal: &DenseMatR) -> f64 {
    let g = &system.grid;
    let n = g.len();
    let h = std::f64::consts::PI / g.config.n_theta as f64;
    let (c, s) = (h.cos(), h.sin());
    let rot = [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]];
    let succ: Vec<usize> = (0..n).map(|j| g.azimuthal_successor(j)).collect();
    let mut diff = 0.0;
    for i in 0..n {
        for j in 0..n {
            let (pi, pj) = (succ[i], succ[j]);
            for a in 0..3 {
                for b in 0..3 {
                    let mut v = 0.0;
                    for p in 0..3 {
                        for q in 0..3 {
                            v += rot[a][p] * nodal[(3 * i + p, 3 * j + q)] * rot[b][q];
                        }
                    }
                    let d = v - nodal[(3 * pi + a, 3 * pj + b)];
                    diff += d * d;
                }
            }
        }
    }
    diff.sqrt() / nodal.frobenius()
}

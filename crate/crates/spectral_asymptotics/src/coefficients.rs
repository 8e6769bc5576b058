use crate::trace::{split_squares, trace_of_square};
use crate::AsymptoticsError;
use elastic_core::{Iota, LameMaterial};
use geometry::{euler_characteristic_gb, surface_quadrature, Surface};
use numerics::{hermitian_eig3, pairwise_sum, Mat3C};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use symbol_calculus::{hermitian_reduce, swap_involution, universal_matrix, CircleDirection};

/// Smallest accepted θ grid for the cosphere integrals.
pub const MIN_THETA: usize = 64;

/// Smallest accepted θ grid for [`coeff_ab`].
pub const MIN_THETA_AB: usize = 256;

/// Resolutions of the cosphere quadrature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientConfig {
    /// Surface quadrature resolution (see `geometry::surface_quadrature`).
    pub n_surface: usize,
    /// Number of trapezoid nodes on the cotangent circle.
    pub n_theta: usize,
}

impl Default for CoefficientConfig {
    /// Reference resolution: `n_surface = 64`, `n_theta = 256`.
    fn default() -> Self {
        CoefficientConfig { n_surface: 64, n_theta: 256 }
    }
}

impl CoefficientConfig {
    /// Both resolutions doubled.
    pub fn doubled(&self) -> Self {
        CoefficientConfig { n_surface: 2 * self.n_surface, n_theta: 2 * self.n_theta }
    }
}

/// θ-tables of the universal matrices for one ι and material.
///
/// Stores `M_ι(θ)`, `W_ι(θ) = V M_ι(θ̂) V` and their Hermitian reductions, so
/// that the effective symbol at curvatures `(κ₁, κ₂)` is `κ₁M + κ₂W` and its
/// reduction is `κ₁·zMq + κ₂·zWq` by linearity.
#[derive(Clone, Debug)]
pub struct SymbolTable {
    iota: Iota,
    material: LameMaterial,
    m: Vec<Mat3C>,
    w: Vec<Mat3C>,
    bm: Vec<Mat3C>,
    bw: Vec<Mat3C>,
}

/// θ-integrals `∫Tr₊²`, `∫Tr₋²`, `∫Tr(m²)` of the effective symbol at one point.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct CircleIntegrals {
    /// `∫ Tr₊²(m) dθ`.
    pub plus: f64,
    /// `∫ Tr₋²(m) dθ`.
    pub minus: f64,
    /// `∫ Tr(m²) dθ`.
    pub total: f64,
}

impl SymbolTable {
    /// Tabulates `n_theta ≥` [`MIN_THETA`] uniformly spaced directions.
    pub fn new(iota: Iota, material: &LameMaterial, n_theta: usize) -> Result<Self, AsymptoticsError> {
        if n_theta < MIN_THETA {
            return Err(AsymptoticsError::InvalidGrid(format!("n_theta = {n_theta} < {MIN_THETA}")));
        }
        let v = swap_involution();
        let dirs = CircleDirection::uniform(n_theta);
        let rows: Vec<Result<[Mat3C; 4], AsymptoticsError>> = dirs
            .par_iter()
            .map(|d| {
                let m = universal_matrix(iota, d, material);
                let w = v * universal_matrix(iota, &d.swapped(), material) * v;
                let bm = hermitian_reduce(&m, d, material)?;
                let bw = hermitian_reduce(&w, d, material)?;
                Ok([m, w, bm, bw])
            })
            .collect();
        let mut t = SymbolTable { iota, material: *material, m: vec![], w: vec![], bm: vec![], bw: vec![] };
        for r in rows {
            let [m, w, bm, bw] = r?;
            t.m.push(m);
            t.w.push(w);
            t.bm.push(bm);
            t.bw.push(bw);
        }
        Ok(t)
    }

    /// Which essential point the table belongs to.
    pub fn iota(&self) -> Iota {
        self.iota
    }

    /// Material the table was built for.
    pub fn material(&self) -> &LameMaterial {
        &self.material
    }

    /// Number of θ nodes.
    pub fn n_theta(&self) -> usize {
        self.m.len()
    }

    fn dtheta(&self) -> f64 {
        2.0 * PI / self.m.len() as f64
    }

    /// Effective symbol at table node `k`.
    pub fn effective(&self, k: usize, kappa1: f64, kappa2: f64) -> Mat3C {
        self.m[k].scale(kappa1) + self.w[k].scale(kappa2)
    }

    /// θ-integrals at a point with principal curvatures `(κ₁, κ₂)`.
    ///
    /// `plus`/`minus` come from eigenvalues of the Hermitian reduction,
    /// `total` from `Tr(m²)` of the unreduced symbol (an independent path).
    pub fn circle_integrals(&self, kappa1: f64, kappa2: f64) -> Result<CircleIntegrals, AsymptoticsError> {
        let n = self.m.len();
        let mut plus = Vec::with_capacity(n);
        let mut minus = Vec::with_capacity(n);
        let mut total = Vec::with_capacity(n);
        for k in 0..n {
            let b = self.bm[k].scale(kappa1) + self.bw[k].scale(kappa2);
            let (p, m) = if b.max_abs() == 0.0 { (0.0, 0.0) } else { split_squares(&hermitian_eig3(&b)?.values) };
            plus.push(p);
            minus.push(m);
            total.push(trace_of_square(&self.effective(k, kappa1, kappa2)));
        }
        let h = self.dtheta();
        Ok(CircleIntegrals { plus: h * pairwise_sum(&plus), minus: h * pairwise_sum(&minus), total: h * pairwise_sum(&total) })
    }

    /// `P = ∫Tr(M_ι²)dθ` and `Q = ∫Tr(M_ι·V M_ι(θ̂) V)dθ`.
    pub fn p_q(&self) -> (f64, f64) {
        let p: Vec<f64> = self.m.iter().map(trace_of_square).collect();
        let q: Vec<f64> = self.m.iter().zip(&self.w).map(|(m, w)| (*m * *w).trace().re).collect();
        (self.dtheta() * pairwise_sum(&p), self.dtheta() * pairwise_sum(&q))
    }
}

/// One surface quadrature node reduced to what the coefficients need.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurvatureSample {
    /// Smaller principal curvature (body-outward normal; negative where convex).
    pub kappa1: f64,
    /// Larger principal curvature.
    pub kappa2: f64,
    /// Area weight.
    pub weight: f64,
}

/// Curvature samples of the surface quadrature at resolution `n`.
pub fn curvature_samples(surface: &Surface, n: usize) -> Result<Vec<CurvatureSample>, AsymptoticsError> {
    let q = surface_quadrature(surface, n)?;
    Ok(q.nodes
        .iter()
        .zip(&q.weights)
        .map(|(p, &w)| CurvatureSample { kappa1: p.kappa1, kappa2: p.kappa2, weight: w })
        .collect())
}

/// `½(2π)⁻²·Σ w·(∫Tr₊², ∫Tr₋², ∫Tr(m²))` over the samples.
///
/// Nodes are processed in parallel; the reduction is an ordered pairwise sum,
/// so the result does not depend on the thread count.
pub fn cosphere_integrals(table: &SymbolTable, samples: &[CurvatureSample]) -> Result<CircleIntegrals, AsymptoticsError> {
    let per_node: Vec<CircleIntegrals> = samples
        .par_iter()
        .map(|s| {
            table.circle_integrals(s.kappa1, s.kappa2).map(|c| CircleIntegrals {
                plus: s.weight * c.plus,
                minus: s.weight * c.minus,
                total: s.weight * c.total,
            })
        })
        .collect::<Result<_, _>>()?;
    let norm = 0.5 / (4.0 * PI * PI);
    let sum = |f: fn(&CircleIntegrals) -> f64| norm * pairwise_sum(&per_node.iter().map(f).collect::<Vec<_>>());
    Ok(CircleIntegrals { plus: sum(|c| c.plus), minus: sum(|c| c.minus), total: sum(|c| c.total) })
}

/// Counting coefficients for one surface, essential point and material.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticCoefficients {
    /// Essential point index ι ∈ {−1, 0, 1}.
    pub iota: i32,
    /// Lamé λ.
    pub lambda: f64,
    /// Lamé μ.
    pub mu: f64,
    /// `C⁺`: coefficient of τ⁻² for eigenvalues above ω_ι.
    pub c_plus: f64,
    /// `C⁻`: coefficient of τ⁻² for eigenvalues below ω_ι.
    pub c_minus: f64,
    /// Two-sided coefficient `½(2π)⁻²∫∫Tr(m²)`.
    pub c_total: f64,
    /// Willmore coefficient `A_ι`.
    pub a: f64,
    /// Euler coefficient `B_ι`.
    pub b: f64,
    /// Willmore energy of the surface.
    pub willmore: f64,
    /// Euler characteristic; for open surfaces the total curvature `(2π)⁻¹∫κ₁κ₂dS`.
    pub chi: f64,
    /// Resolutions used.
    pub config: CoefficientConfig,
}

impl AsymptoticCoefficients {
    /// `A·W + B·χ`.
    pub fn two_path_total(&self) -> f64 {
        self.a * self.willmore + self.b * self.chi
    }

    /// `|C⁺ + C⁻ − C_total|`.
    pub fn split_defect(&self) -> f64 {
        (self.c_plus + self.c_minus - self.c_total).abs()
    }

    /// `|A·W + B·χ − C_total| / |C_total|`.
    pub fn two_path_defect(&self) -> f64 {
        (self.two_path_total() - self.c_total).abs() / self.c_total.abs().max(f64::MIN_POSITIVE)
    }
}

/// `A = P/(2π²)`, `B = (Q − P)/(2π)`, so that `C_total = A·W + B·χ`.
///
/// With `Tr(m²) = κ₁²Tr M² + 2κ₁κ₂Tr(M·VM̂V) + κ₂²Tr M̂²`, the θ-integral is
/// `(κ₁² + κ₂²)P + 2κ₁κ₂Q = 4H²P + 2K(Q − P)`; multiplying by `½(2π)⁻²`
/// and using `∫H² = W`, `∫K = 2πχ` gives the constants.
pub fn ab_from_pq(p: f64, q: f64) -> (f64, f64) {
    (p / (2.0 * PI * PI), (q - p) / (2.0 * PI))
}

/// Material coefficients `(A_ι, B_ι)` from θ-integrals on `n_theta ≥` [`MIN_THETA_AB`] nodes.
pub fn coeff_ab(iota: Iota, material: &LameMaterial, n_theta: usize) -> Result<(f64, f64), AsymptoticsError> {
    if n_theta < MIN_THETA_AB {
        return Err(AsymptoticsError::InvalidGrid(format!("n_theta = {n_theta} < {MIN_THETA_AB}")));
    }
    let (p, q) = SymbolTable::new(iota, material, n_theta)?.p_q();
    Ok(ab_from_pq(p, q))
}

/// `Υ_ι = 2π⁻¹A_ι + 2B_ι`.
pub fn upsilon(a: f64, b: f64) -> f64 {
    2.0 * a / PI + 2.0 * b
}

fn willmore_and_chi(surface: &Surface, samples: &[CurvatureSample], n: usize) -> Result<(f64, f64), AsymptoticsError> {
    let w = pairwise_sum(&samples.iter().map(|s| s.weight * 0.25 * (s.kappa1 + s.kappa2).powi(2)).collect::<Vec<_>>());
    let closed = surface.components().iter().all(|c| c.primitive.is_closed());
    let chi = if closed {
        euler_characteristic_gb(surface, n)?.integer as f64
    } else {
        pairwise_sum(&samples.iter().map(|s| s.weight * s.kappa1 * s.kappa2).collect::<Vec<_>>()) / (2.0 * PI)
    };
    Ok((w, chi))
}

/// All coefficients for `surface` at essential point ι.
pub fn coefficients(
    surface: &Surface,
    iota: Iota,
    material: &LameMaterial,
    config: CoefficientConfig,
) -> Result<AsymptoticCoefficients, AsymptoticsError> {
    let table = SymbolTable::new(iota, material, config.n_theta)?;
    coefficients_with_table(surface, &table, config.n_surface)
}

/// As [`coefficients`], reusing a prebuilt θ-table.
pub fn coefficients_with_table(
    surface: &Surface,
    table: &SymbolTable,
    n_surface: usize,
) -> Result<AsymptoticCoefficients, AsymptoticsError> {
    let samples = curvature_samples(surface, n_surface)?;
    let c = cosphere_integrals(table, &samples)?;
    let (p, q) = table.p_q();
    let (a, b) = ab_from_pq(p, q);
    let (willmore, chi) = willmore_and_chi(surface, &samples, n_surface)?;
    Ok(AsymptoticCoefficients {
        iota: table.iota().value(),
        lambda: table.material().lambda,
        mu: table.material().mu,
        c_plus: c.plus,
        c_minus: c.minus,
        c_total: c.total,
        a,
        b,
        willmore,
        chi,
        config: CoefficientConfig { n_surface, n_theta: table.n_theta() },
    })
}

/// `(C⁺, C⁻)`.
pub fn coeff_cpm(
    surface: &Surface,
    iota: Iota,
    material: &LameMaterial,
    config: CoefficientConfig,
) -> Result<(f64, f64), AsymptoticsError> {
    let c = coefficients(surface, iota, material, config)?;
    Ok((c.c_plus, c.c_minus))
}

/// Two-sided coefficient `C = ½(2π)⁻²∫∫Tr(m²)`.
pub fn coeff_c_total(
    surface: &Surface,
    iota: Iota,
    material: &LameMaterial,
    config: CoefficientConfig,
) -> Result<f64, AsymptoticsError> {
    Ok(coefficients(surface, iota, material, config)?.c_total)
}

/// Computes the coefficients at `config` and at the doubled grid; fails with
/// [`AsymptoticsError::UnderResolved`] if any of `C⁺`, `C⁻`, `C_total`
/// moves by more than `tolerance` relative to `max(C_total, tiny)`.
///
/// Returns `(coarse, fine)`.
pub fn coefficients_with_refinement(
    surface: &Surface,
    iota: Iota,
    material: &LameMaterial,
    config: CoefficientConfig,
    tolerance: f64,
) -> Result<(AsymptoticCoefficients, AsymptoticCoefficients), AsymptoticsError> {
    let coarse = coefficients(surface, iota, material, config)?;
    let fine = coefficients(surface, iota, material, config.doubled())?;
    let scale = fine.c_total.abs().max(1e-300);
    for (name, a, b) in [
        ("C+", coarse.c_plus, fine.c_plus),
        ("C-", coarse.c_minus, fine.c_minus),
        ("C_total", coarse.c_total, fine.c_total),
    ] {
        let drift = (a - b).abs() / scale;
        if drift > tolerance {
            return Err(AsymptoticsError::UnderResolved { quantity: name.into(), drift, tolerance });
        }
    }
    Ok((coarse, fine))
}

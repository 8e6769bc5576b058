use crate::AsymptoticsError;
use serde::Serialize;
use std::fmt::Write as _;

/// Which side of ω the counting window lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// `(ω + τ, ω + τ₊)`.
    Above,
    /// `(ω − τ₋, ω − τ)`.
    Below,
}

/// Counting function sampled on a descending τ grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CountingCurve {
    /// Spectral point ω.
    pub omega: f64,
    /// Window side.
    pub side: Side,
    /// Reference width τ± of the window.
    pub reference: f64,
    /// Descending positive τ values.
    pub taus: Vec<f64>,
    /// Eigenvalue counts (with multiplicity), nondecreasing along `taus`.
    pub counts: Vec<u64>,
}

impl CountingCurve {
    /// CSV with header `tau,count,count_times_tau2`, 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("tau,count,count_times_tau2\n");
        for (t, c) in self.taus.iter().zip(&self.counts) {
            let _ = writeln!(s, "{:.16e},{},{:.16e}", t, c, *c as f64 * t * t);
        }
        s
    }
}

/// `count` log-spaced values from `hi` down to `lo` (inclusive).
pub fn log_grid_descending(hi: f64, lo: f64, count: usize) -> Result<Vec<f64>, AsymptoticsError> {
    if !(lo > 0.0 && hi > lo && count >= 2) {
        return Err(AsymptoticsError::InvalidGrid(format!("need 0 < lo < hi and count ≥ 2 (lo {lo}, hi {hi}, count {count})")));
    }
    let (a, b) = (hi.ln(), lo.ln());
    Ok((0..count).map(|k| (a + (b - a) * k as f64 / (count - 1) as f64).exp()).collect())
}

/// Counts eigenvalues (with multiplicity) in the open window at distance τ
/// from `omega` on `side`, for each τ in `taus`.
///
/// `reference` is the outer window width τ±; it must be smaller than the
/// distance from `omega` to every other point of `essential`, and every τ
/// must lie in `(0, reference)`. Open intervals exclude exact hits.
pub fn counting_curve(
    spectrum: &[(f64, usize)],
    omega: f64,
    side: Side,
    taus: &[f64],
    reference: f64,
    essential: &[f64],
) -> Result<CountingCurve, AsymptoticsError> {
    for &e in essential {
        if e != omega && (e - omega).abs() <= reference {
            return Err(AsymptoticsError::WindowOverlap { omega, reference, other: e });
        }
    }
    if taus.is_empty() {
        return Err(AsymptoticsError::InvalidGrid("empty τ grid".into()));
    }
    for w in taus.windows(2) {
        if !(w[1] < w[0]) {
            return Err(AsymptoticsError::InvalidGrid("τ grid must be strictly descending".into()));
        }
    }
    if !(taus[taus.len() - 1] > 0.0 && taus[0] < reference) {
        return Err(AsymptoticsError::InvalidGrid("τ values must lie in (0, reference)".into()));
    }
    // Signed distances into the window, sorted ascending, with cumulative multiplicities.
    let mut inside: Vec<(f64, u64)> = spectrum
        .iter()
        .filter_map(|&(v, m)| {
            let d = match side {
                Side::Above => v - omega,
                Side::Below => omega - v,
            };
            (d > 0.0 && d < reference).then_some((d, m as u64))
        })
        .collect();
    inside.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut suffix = vec![0u64; inside.len() + 1];
    for k in (0..inside.len()).rev() {
        suffix[k] = suffix[k + 1] + inside[k].1;
    }
    let counts = taus
        .iter()
        .map(|&t| {
            let first = inside.partition_point(|&(d, _)| d <= t);
            suffix[first]
        })
        .collect();
    Ok(CountingCurve { omega, side, reference, taus: taus.to_vec(), counts })
}

/// Result of a τ⁻² fit.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TauFit {
    /// Median of `count·τ²` over the lowest decade of the grid.
    pub coefficient: f64,
    /// Smallest `count·τ²` in that decade.
    pub min: f64,
    /// Largest `count·τ²` in that decade.
    pub max: f64,
    /// `(max − min)/coefficient` (0 when the coefficient is 0).
    pub spread: f64,
    /// Set when the spread exceeds [`FIT_SPREAD_LIMIT`].
    pub low_confidence: bool,
    /// Number of grid points used.
    pub points: usize,
}

/// Spread above which a fit is flagged.
pub const FIT_SPREAD_LIMIT: f64 = 0.25;

/// Median-based estimate of `C` in `count(τ) ~ C τ⁻²`.
///
/// Requires at least 10 grid points spanning at least 1.5 decades; the
/// median is taken over points with `τ ≤ 10·τ_min`.
pub fn fit_tau_minus2(curve: &CountingCurve) -> Result<TauFit, AsymptoticsError> {
    let n = curve.taus.len();
    if n < 10 {
        return Err(AsymptoticsError::Fit(format!("{n} grid points (< 10)")));
    }
    let tmax = curve.taus.iter().cloned().fold(f64::MIN, f64::max);
    let tmin = curve.taus.iter().cloned().fold(f64::MAX, f64::min);
    let decades = (tmax / tmin).log10();
    if decades < 1.5 - 1e-12 {
        return Err(AsymptoticsError::Fit(format!("grid spans {decades:.3} decades (< 1.5)")));
    }
    let mut vals: Vec<f64> = curve
        .taus
        .iter()
        .zip(&curve.counts)
        .filter(|(t, _)| **t <= 10.0 * tmin * (1.0 + 1e-12))
        .map(|(t, c)| *c as f64 * t * t)
        .collect();
    vals.sort_by(|a, b| a.total_cmp(b));
    let k = vals.len();
    let median = if k % 2 == 1 { vals[k / 2] } else { 0.5 * (vals[k / 2 - 1] + vals[k / 2]) };
    let (min, max) = (vals[0], vals[k - 1]);
    let spread = if median > 0.0 { (max - min) / median } else { 0.0 };
    Ok(TauFit { coefficient: median, min, max, spread, low_confidence: spread > FIT_SPREAD_LIMIT, points: k })
}

use std::f64::consts::PI;

/// Gauss–Legendre nodes (ascending) and weights on `[−1, 1]`.
///
/// Nodes are found by Newton iteration on the three-term recurrence,
/// started from Tricomi's asymptotic guess. Accurate to a few ulps for the
/// sizes used here (n ≤ a few hundred).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "Gauss-Legendre rule needs at least one node");
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // i-th largest root
        let mut z = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, z);
        if d.is_finite() {
            dp = d;
        }
        let wt = 2.0 / ((1.0 - z * z) * dp * dp);
        x[n - 1 - i] = z;
        x[i] = -z;
        w[n - 1 - i] = wt;
        w[i] = wt;
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

/// Left-to-right sum; the fixed order makes results reproducible.
pub fn ordered_sum(values: &[f64]) -> f64 {
    values.iter().fold(0.0, |a, v| a + v)
}

/// Pairwise (cascade) summation with a fixed split pattern.
///
/// Error grows like O(log n·ε). The result is independent of how the
/// values were produced (e.g. which thread computed them).
pub fn pairwise_sum(values: &[f64]) -> f64 {
    const BLOCK: usize = 32;
    if values.len() <= BLOCK {
        return ordered_sum(values);
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        for n in [1usize, 2, 5, 16, 33, 64] {
            let (x, w) = gauss_legendre(n);
            for deg in 0..(2 * n) {
                let got: f64 = x.iter().zip(&w).map(|(xi, wi)| wi * xi.powi(deg as i32)).sum();
                let want = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!((got - want).abs() < 1e-13, "n={n} deg={deg}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn nodes_ascending_and_interior() {
        let (x, w) = gauss_legendre(40);
        assert!(x.windows(2).all(|p| p[0] < p[1]));
        assert!(x.iter().all(|v| v.abs() < 1.0));
        assert!(w.iter().all(|v| *v > 0.0));
    }

    #[test]
    fn pairwise_matches_exact_integer_sum() {
        let v: Vec<f64> = (1..=1000).map(|k| k as f64).collect();
        assert_eq!(pairwise_sum(&v), 500500.0);
    }
}

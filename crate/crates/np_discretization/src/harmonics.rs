//! Real spherical harmonics orthonormal on the unit sphere.

use std::f64::consts::PI;

/// Number of real harmonics of degree `≤ l_max`.
pub fn harmonic_count(l_max: usize) -> usize {
    (l_max + 1) * (l_max + 1)
}

/// Index of `Y_l^m` (`−l ≤ m ≤ l`) in the flat ordering `l² + l + m`.
pub fn harmonic_index(l: usize, m: i64) -> usize {
    ((l * l + l) as i64 + m) as usize
}

/// Evaluates every real harmonic of degree `≤ l_max` at the unit vector `s`
/// into `out` (length [`harmonic_count`]), in the order of [`harmonic_index`].
///
/// `Y_l^0 = p̄_l^0(z)`, `Y_l^m = √2 p̄_l^m(z) cos mφ` and
/// `Y_l^{−m} = √2 p̄_l^m(z) sin mφ` for `m > 0`, where `p̄_l^m` are the
/// associated Legendre functions normalized so that each harmonic has unit
/// L² norm. The Legendre recurrences run in `m`-major order and stay stable
/// to high degree.
pub fn real_harmonics(l_max: usize, s: [f64; 3], out: &mut [f64]) {
    debug_assert_eq!(out.len(), harmonic_count(l_max));
    let z = s[2].clamp(-1.0, 1.0);
    let rho = (s[0] * s[0] + s[1] * s[1]).sqrt();
    let (c1, s1) = if rho > 0.0 { (s[0] / rho, s[1] / rho) } else { (1.0, 0.0) };
    let sqrt2 = std::f64::consts::SQRT_2;
    let mut pmm = (0.25 / PI).sqrt();
    let (mut cm, mut sm) = (1.0, 0.0);
    for m in 0..=l_max {
        if m > 0 {
            pmm *= ((2 * m + 1) as f64 / (2 * m) as f64).sqrt() * rho;
            let c = cm * c1 - sm * s1;
            sm = sm * c1 + cm * s1;
            cm = c;
        }
        let mf = m as f64;
        let mut store = |l: usize, p: f64| {
            let base = l * l + l;
            if m == 0 {
                out[base] = p;
            } else {
                out[base + m] = sqrt2 * p * cm;
                out[base - m] = sqrt2 * p * sm;
            }
        };
        store(m, pmm);
        if m == l_max {
            break;
        }
        let mut p_prev = pmm;
        let mut p = (2.0 * mf + 3.0).sqrt() * z * pmm;
        store(m + 1, p);
        for l in (m + 2)..=l_max {
            let lf = l as f64;
            let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
            let b = (((lf - 1.0) * (lf - 1.0) - mf * mf) / (4.0 * (lf - 1.0) * (lf - 1.0) - 1.0)).sqrt();
            let next = a * (z * p - b * p_prev);
            p_prev = p;
            p = next;
            store(l, p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_closed_forms() {
        let s = [0.36, 0.48, 0.8];
        let mut y = vec![0.0; harmonic_count(2)];
        real_harmonics(2, s, &mut y);
        let c0 = (0.25 / PI).sqrt();
        let c1 = (0.75 / PI).sqrt();
        assert!((y[0] - c0).abs() < 1e-15);
        assert!((y[harmonic_index(1, 0)] - c1 * s[2]).abs() < 1e-15);
        assert!((y[harmonic_index(1, 1)] - c1 * s[0]).abs() < 1e-15);
        assert!((y[harmonic_index(1, -1)] - c1 * s[1]).abs() < 1e-15);
        let c2 = (15.0 / (4.0 * PI)).sqrt();
        assert!((y[harmonic_index(2, -2)] - c2 * s[0] * s[1]).abs() < 1e-14);
        assert!((y[harmonic_index(2, 1)] - c2 * s[0] * s[2]).abs() < 1e-14);
    }
}

//! Closed-form eigen-decomposition of Hermitian 3×3 matrices.
//!
//! The characteristic cubic of the shifted, normalized matrix is solved with
//! the trigonometric real-root formula. The eigenvector of the best isolated
//! eigenvalue comes from a cross product of two rows of `h − λE`. The
//! remaining pair is resolved exactly on the orthogonal complement as a
//! 2×2 Hermitian problem. Eigenvalues are finally refined by Rayleigh
//! quotients. Nothing iterates, so run time is fixed.

use crate::{Mat3C, NumericsError, Vec3C};
use num_complex::Complex64;

/// Relative tolerance on `max |a_pq − conj(a_qp)|` for accepting a matrix
/// as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenvalues (ascending) and matching orthonormal eigenvectors.
#[derive(Clone, Copy, Debug)]
pub struct Eigh3 {
    /// Real eigenvalues in ascending order.
    pub values: [f64; 3],
    /// `vectors[k]` is the unit eigenvector for `values[k]`.
    pub vectors: [Vec3C; 3],
}

impl Eigh3 {
    /// Reassembles `Σ f(λ_k) v_k v_k*`.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> Mat3C {
        let mut out = Mat3C::zeros();
        for k in 0..3 {
            out += Mat3C::outer(&self.vectors[k], &self.vectors[k]).scale(f(self.values[k]));
        }
        out
    }
}

fn cross(a: &Vec3C, b: &Vec3C) -> Vec3C {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn vnorm(v: &Vec3C) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr() + v[2].norm_sqr()).sqrt()
}

fn vscale(v: &Vec3C, s: Complex64) -> Vec3C {
    [v[0] * s, v[1] * s, v[2] * s]
}

fn vdot(a: &Vec3C, b: &Vec3C) -> Complex64 {
    // Hermitian inner product <a, b> = Σ conj(a_k) b_k.
    a[0].conj() * b[0] + a[1].conj() * b[1] + a[2].conj() * b[2]
}

fn normalized(v: &Vec3C) -> Vec3C {
    let n = vnorm(v);
    vscale(v, Complex64::new(1.0 / n, 0.0))
}

/// Eigen-decomposition of a Hermitian 3×3 matrix.
///
/// Rejects input whose Hermitian defect exceeds [`HERMITIAN_TOL`] relative to
/// its Frobenius norm; the error reports the measured asymmetry.
pub fn hermitian_eig3(h: &Mat3C) -> Result<Eigh3, NumericsError> {
    if !h.is_finite() {
        return Err(NumericsError::NonFinite);
    }
    let scale = h.norm();
    let asym = h.hermitian_defect();
    let tol = HERMITIAN_TOL * scale;
    if asym > tol && asym > f64::MIN_POSITIVE {
        return Err(NumericsError::NotHermitian {
            asymmetry: asym,
            tolerance: tol,
        });
    }
    let h = h.hermitian_part();

    let q = h.trace().re / 3.0;
    let b = h - Mat3C::identity().scale(q);
    let p = (b.norm().powi(2) / 6.0).sqrt();
    let e = [
        [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
    ];
    if p < 1e-290 {
        return Ok(Eigh3 {
            values: [q; 3],
            vectors: e,
        });
    }
    let c = b.scale(1.0 / p);
    let r = (c.det().re / 2.0).clamp(-1.0, 1.0);
    let phi = r.acos() / 3.0;
    let beta_max = 2.0 * phi.cos();
    let beta_min = 2.0 * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    let beta_mid = -beta_max - beta_min;
    let beta_iso = if beta_max - beta_mid >= beta_mid - beta_min {
        beta_max
    } else {
        beta_min
    };

    // Null vector of the Hermitian rank-2 matrix c − β E: the bilinear cross
    // product of two rows is annihilated by both rows.
    let m = c - Mat3C::identity().scale(beta_iso);
    let rows = [m.0[0], m.0[1], m.0[2]];
    let cands = [
        cross(&rows[0], &rows[1]),
        cross(&rows[0], &rows[2]),
        cross(&rows[1], &rows[2]),
    ];
    let mut best = cands[0];
    for cnd in &cands[1..] {
        if vnorm(cnd) > vnorm(&best) {
            best = *cnd;
        }
    }
    let v_iso = if vnorm(&best) > 0.0 {
        normalized(&best)
    } else {
        e[0]
    };

    // Orthonormal basis of the complement of v_iso.
    let mut kmin = 0;
    for k in 1..3 {
        if v_iso[k].norm() < v_iso[kmin].norm() {
            kmin = k;
        }
    }
    let ek = e[kmin];
    let proj = vdot(&v_iso, &ek);
    let u1 = normalized(&[
        ek[0] - v_iso[0] * proj,
        ek[1] - v_iso[1] * proj,
        ek[2] - v_iso[2] * proj,
    ]);
    let w = cross(&v_iso, &u1);
    let u2 = normalized(&[w[0].conj(), w[1].conj(), w[2].conj()]);

    // Exact 2×2 Hermitian problem on span{u1, u2}.
    let cu1 = c.mul_vec(&u1);
    let cu2 = c.mul_vec(&u2);
    let t00 = vdot(&u1, &cu1).re;
    let t11 = vdot(&u2, &cu2).re;
    let t01 = vdot(&u1, &cu2);
    let mean = 0.5 * (t00 + t11);
    let half = 0.5 * (t00 - t11);
    let rad = (half * half + t01.norm_sqr()).sqrt();
    let (x1, x2) = if t01.norm() <= 1e-300 {
        ([Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], [
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ])
    } else {
        let lp = mean + rad;
        let a = [t01, Complex64::new(lp - t00, 0.0)];
        let bvec = [Complex64::new(lp - t11, 0.0), t01.conj()];
        let na = (a[0].norm_sqr() + a[1].norm_sqr()).sqrt();
        let nb = (bvec[0].norm_sqr() + bvec[1].norm_sqr()).sqrt();
        let x = if na >= nb {
            [a[0] / na, a[1] / na]
        } else {
            [bvec[0] / nb, bvec[1] / nb]
        };
        (x, [-x[1].conj(), x[0].conj()])
    };
    let v2 = [
        u1[0] * x1[0] + u2[0] * x1[1],
        u1[1] * x1[0] + u2[1] * x1[1],
        u1[2] * x1[0] + u2[2] * x1[1],
    ];
    let v3 = [
        u1[0] * x2[0] + u2[0] * x2[1],
        u1[1] * x2[0] + u2[1] * x2[1],
        u1[2] * x2[0] + u2[2] * x2[1],
    ];

    let mut pairs: Vec<(f64, Vec3C)> = [v_iso, normalized(&v2), normalized(&v3)]
        .iter()
        .map(|v| (vdot(v, &h.mul_vec(v)).re, *v))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(Eigh3 {
        values: [pairs[0].0, pairs[1].0, pairs[2].0],
        vectors: [pairs[0].1, pairs[1].1, pairs[2].1],
    })
}

/// Positive square root of a Hermitian positive-definite 3×3 matrix.
///
/// Rejects matrices with a non-positive eigenvalue, naming it.
pub fn spd_sqrt3(s: &Mat3C) -> Result<Mat3C, NumericsError> {
    let eig = hermitian_eig3(s)?;
    if eig.values[0] <= 0.0 {
        return Err(NumericsError::NotPositiveDefinite {
            eigenvalue: eig.values[0],
        });
    }
    Ok(eig.reconstruct_with(f64::sqrt).hermitian_part())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_case() {
        let e = hermitian_eig3(&Mat3C::diag_real([3.0, 1.0, 2.0])).unwrap();
        assert_eq!(e.values, [1.0, 2.0, 3.0]);
    }

    #[test]
    fn pauli_block() {
        let mut h = Mat3C::zeros();
        h[(0, 1)] = c(0.0, 1.0);
        h[(1, 0)] = c(0.0, -1.0);
        let e = hermitian_eig3(&h).unwrap();
        for (got, want) in e.values.iter().zip([-1.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-15, "{got} vs {want}");
        }
    }

    #[test]
    fn multiple_of_identity() {
        let e = hermitian_eig3(&Mat3C::identity().scale(2.5)).unwrap();
        assert_eq!(e.values, [2.5; 3]);
    }

    #[test]
    fn double_eigenvalue_has_accurate_vectors() {
        let h = Mat3C::from_real([[2.0, 1.0, 0.0], [1.0, 2.0, 0.0], [0.0, 0.0, 3.0]]);
        let e = hermitian_eig3(&h).unwrap();
        for k in 0..3 {
            let hv = h.mul_vec(&e.vectors[k]);
            let res: f64 = (0..3)
                .map(|i| (hv[i] - e.vectors[k][i] * e.values[k]).norm_sqr())
                .sum::<f64>()
                .sqrt();
            assert!(res < 1e-14, "residual {res}");
        }
        assert!((e.values[0] - 1.0).abs() < 1e-15);
        assert!((e.values[1] - 3.0).abs() < 1e-15);
        assert!((e.values[2] - 3.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut h = Mat3C::identity();
        h[(0, 1)] = c(1.0, 0.0);
        match hermitian_eig3(&h) {
            Err(NumericsError::NotHermitian { asymmetry, .. }) => assert_eq!(asymmetry, 1.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn sqrt_of_diagonal() {
        let r = spd_sqrt3(&Mat3C::diag_real([4.0, 9.0, 16.0])).unwrap();
        assert!(r.max_diff(&Mat3C::diag_real([2.0, 3.0, 4.0])) < 1e-14);
    }

    #[test]
    fn sqrt_rejects_indefinite() {
        match spd_sqrt3(&Mat3C::diag_real([1.0, -2.0, 3.0])) {
            Err(NumericsError::NotPositiveDefinite { eigenvalue }) => assert_eq!(eigenvalue, -2.0),
            other => panic!("unexpected {other:?}"),
        }
    }
}

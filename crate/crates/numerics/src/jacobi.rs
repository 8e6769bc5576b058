use crate::{DenseMatR, NumericsError};

const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
/// sorted in descending order.
///
/// The input must be symmetric within `1e−10` relative to its largest entry.
/// Converges when the off-diagonal Frobenius norm falls below `1e−11‖a‖`;
/// otherwise reports the residual after the sweep budget.
pub fn jacobi_sym_eig(a: &DenseMatR) -> Result<Vec<f64>, NumericsError> {
    if !a.is_finite() {
        return Err(NumericsError::NonFinite);
    }
    let n = a.n();
    let scale = a.max_abs();
    let asym = a.asymmetry();
    let tol = 1e-10 * scale;
    if asym > tol {
        return Err(NumericsError::NotHermitian {
            asymmetry: asym,
            tolerance: tol,
        });
    }
    let mut m = DenseMatR::from_fn(n, |i, j| 0.5 * (a[(i, j)] + a[(j, i)]));
    let total = m.frobenius();
    let target = 1e-11 * total;
    let off = |m: &DenseMatR| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[(i, j)] * m[(i, j)];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off(&m) > target && total > 0.0 {
        if sweeps == MAX_SWEEPS {
            return Err(NumericsError::JacobiNoConvergence {
                sweeps,
                residual: off(&m) / total,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let app = m[(p, p)];
                let aqq = m[(q, q)];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| m[(i, i)]).collect();
    vals.sort_by(|a, b| b.total_cmp(a));
    Ok(vals)
}

//! Eigenvalues of a dense real non-symmetric matrix.
//!
//! Steps:
//! 1. Diagonal balancing.
//! 2. Householder reduction to upper Hessenberg form.
//! 3. Francis double-shift QR on the active block.
//!
//! Eigenvectors are never formed. The iteration budget is `40·n` double
//! steps in total, with exceptional shifts every tenth step on a stagnating
//! block.

use crate::{DenseMatR, NumericsError};
use num_complex::Complex64;

const RADIX: f64 = 2.0;

fn balance(a: &mut DenseMatR) {
    let n = a.n();
    let sqrdx = RADIX * RADIX;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut r = 0.0;
            let mut c = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].abs();
                    r += a[(i, j)].abs();
                }
            }
            if c != 0.0 && r != 0.0 {
                let mut g = r / RADIX;
                let mut f = 1.0;
                let s = c + r;
                while c < g {
                    f *= RADIX;
                    c *= sqrdx;
                }
                g = r * RADIX;
                while c > g {
                    f /= RADIX;
                    c /= sqrdx;
                }
                if (c + r) / f < 0.95 * s {
                    done = false;
                    let ginv = 1.0 / f;
                    for j in 0..n {
                        a[(i, j)] *= ginv;
                    }
                    for j in 0..n {
                        a[(j, i)] *= f;
                    }
                }
            }
        }
    }
}

/// Orthogonal similarity reduction to upper Hessenberg form (Householder).
///
/// Entries below the first subdiagonal of the result are exactly zero.
pub fn hessenberg_reduce(a: &DenseMatR) -> DenseMatR {
    let n = a.n();
    let mut h = a.clone();
    if n < 3 {
        return h;
    }
    let mut v = vec![0.0; n];
    let mut w = vec![0.0; n];
    for k in 0..n - 2 {
        let m = n - k - 1;
        let mut norm2 = 0.0;
        for i in 0..m {
            let x = h[(k + 1 + i, k)];
            v[i] = x;
            norm2 += x * x;
        }
        let norm = norm2.sqrt();
        if norm == 0.0 {
            continue;
        }
        let alpha = if v[0] >= 0.0 { -norm } else { norm };
        v[0] -= alpha;
        let vtv: f64 = v[..m].iter().map(|x| x * x).sum();
        if vtv == 0.0 {
            continue;
        }
        let beta = 2.0 / vtv;

        // Left update on rows k+1.., columns k..
        w[k..n].iter_mut().for_each(|x| *x = 0.0);
        for i in 0..m {
            let vi = v[i];
            if vi == 0.0 {
                continue;
            }
            let row = &h.as_slice()[(k + 1 + i) * n..(k + 2 + i) * n];
            for j in k..n {
                w[j] += vi * row[j];
            }
        }
        for i in 0..m {
            let f = beta * v[i];
            if f == 0.0 {
                continue;
            }
            let row = &mut h.as_mut_slice()[(k + 1 + i) * n..(k + 2 + i) * n];
            for j in k..n {
                row[j] -= f * w[j];
            }
        }
        // Right update on all rows, columns k+1..
        for i in 0..n {
            let row = &mut h.as_mut_slice()[i * n..(i + 1) * n];
            let mut s = 0.0;
            for j in 0..m {
                s += row[k + 1 + j] * v[j];
            }
            let f = beta * s;
            if f == 0.0 {
                continue;
            }
            for j in 0..m {
                row[k + 1 + j] -= f * v[j];
            }
        }
        h[(k + 1, k)] = alpha;
        for i in (k + 2)..n {
            h[(i, k)] = 0.0;
        }
    }
    h
}

/// All eigenvalues of a real square matrix.
///
/// Results are sorted by descending real part, then descending imaginary
/// part, so the output order is deterministic.
pub fn real_schur_spectrum(a: &DenseMatR) -> Result<Vec<Complex64>, NumericsError> {
    if !a.is_finite() {
        return Err(NumericsError::NonFinite);
    }
    let n = a.n();
    let mut b = a.clone();
    balance(&mut b);
    let mut h = hessenberg_reduce(&b);
    let mut eig = hqr(&mut h)?;
    eig.sort_by(|x, y| y.re.total_cmp(&x.re).then(y.im.total_cmp(&x.im)));
    debug_assert_eq!(eig.len(), n);
    Ok(eig)
}

fn sign(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

fn hqr(a: &mut DenseMatR) -> Result<Vec<Complex64>, NumericsError> {
    let n = a.n();
    let eps = f64::EPSILON;
    let cap = 40 * n;
    let mut out = Vec::with_capacity(n);
    let mut anorm = 0.0;
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm += a[(i, j)].abs();
        }
    }
    let mut nn = n as isize - 1;
    let mut t = 0.0;
    let mut total = 0usize;
    while nn >= 0 {
        let mut its = 0usize;
        loop {
            let nu = nn as usize;
            let mut l = nu;
            while l > 0 {
                let mut s = a[(l - 1, l - 1)].abs() + a[(l, l)].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if a[(l, l - 1)].abs() <= eps * s {
                    a[(l, l - 1)] = 0.0;
                    break;
                }
                l -= 1;
            }
            let mut x = a[(nu, nu)];
            if l == nu {
                out.push(Complex64::new(x + t, 0.0));
                nn -= 1;
                break;
            }
            let mut y = a[(nu - 1, nu - 1)];
            let mut w = a[(nu, nu - 1)] * a[(nu - 1, nu)];
            if l == nu - 1 {
                let p = 0.5 * (y - x);
                let q = p * p + w;
                let mut z = q.abs().sqrt();
                x += t;
                if q >= 0.0 {
                    z = p + sign(z, p);
                    let e1 = x + z;
                    let e2 = if z != 0.0 { x - w / z } else { e1 };
                    out.push(Complex64::new(e1, 0.0));
                    out.push(Complex64::new(e2, 0.0));
                } else {
                    out.push(Complex64::new(x + p, z));
                    out.push(Complex64::new(x + p, -z));
                }
                nn -= 2;
                break;
            }
            if total >= cap {
                return Err(NumericsError::QrStagnation {
                    iterations: total,
                    remaining: nu + 1,
                });
            }
            if its > 0 && its % 10 == 0 {
                // Exceptional shift.
                t += x;
                for i in 0..=nu {
                    a[(i, i)] -= x;
                }
                let s = a[(nu, nu - 1)].abs() + a[(nu - 1, nu - 2)].abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            total += 1;

            let mut m = nu - 2;
            let (mut p, mut q, mut r);
            loop {
                let z = a[(m, m)];
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / a[(m + 1, m)] + a[(m, m + 1)];
                q = a[(m + 1, m + 1)] - z - rr - ss;
                r = a[(m + 2, m + 1)];
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if m == l {
                    break;
                }
                let u = a[(m, m - 1)].abs() * (q.abs() + r.abs());
                let v = p.abs() * (a[(m - 1, m - 1)].abs() + z.abs() + a[(m + 1, m + 1)].abs());
                if u <= eps * v {
                    break;
                }
                m -= 1;
            }
            for i in m..nu - 1 {
                a[(i + 2, i)] = 0.0;
                if i != m {
                    a[(i + 2, i - 1)] = 0.0;
                }
            }
            let mut k = m;
            while k < nu {
                if k != m {
                    p = a[(k, k - 1)];
                    q = a[(k + 1, k - 1)];
                    r = 0.0;
                    if k + 1 != nu {
                        r = a[(k + 2, k - 1)];
                    }
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = sign((p * p + q * q + r * r).sqrt(), p);
                if s != 0.0 {
                    if k == m {
                        if l != m {
                            a[(k, k - 1)] = -a[(k, k - 1)];
                        }
                    } else {
                        a[(k, k - 1)] = -s * x;
                    }
                    p += s;
                    x = p / s;
                    y = q / s;
                    let z = r / s;
                    q /= p;
                    r /= p;
                    let nc = n;
                    {
                        let data = a.as_mut_slice();
                        for j in k..=nu {
                            let mut pp = data[k * nc + j] + q * data[(k + 1) * nc + j];
                            if k + 1 != nu {
                                pp += r * data[(k + 2) * nc + j];
                                data[(k + 2) * nc + j] -= pp * z;
                            }
                            data[(k + 1) * nc + j] -= pp * y;
                            data[k * nc + j] -= pp * x;
                        }
                        let mmin = if nu < k + 3 { nu } else { k + 3 };
                        for i in l..=mmin {
                            let row = &mut data[i * nc..(i + 1) * nc];
                            let mut pp = x * row[k] + y * row[k + 1];
                            if k + 1 != nu {
                                pp += z * row[k + 2];
                                row[k + 2] -= pp * r;
                            }
                            row[k + 1] -= pp * q;
                            row[k] -= pp;
                        }
                    }
                }
                k += 1;
            }
        }
    }
    Ok(out)
}

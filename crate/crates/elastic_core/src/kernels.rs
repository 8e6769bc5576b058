use crate::{ElasticError, LameMaterial};
use numerics::Mat3C;
use std::f64::consts::PI;

/// Sign of the antisymmetric (𝕜-weighted) line of the double-layer kernel.
///
/// With `−1` the kernel equals −[T_y Γ(x−y)]ᵀ, the transposed traction of the
/// standard Kelvin solution Γ. This reproduces the closed-form sphere
/// spectrum and maps constant fields to ½·constant. The opposite sign is the
/// untransposed traction, whose discretized sphere spectrum does not match.
pub const ANTISYMMETRIC_SIGN: f64 = -1.0;

const SINGULAR_TOL: f64 = 1e-300;
const UNIT_TOL: f64 = 1e-10;

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn check_unit(n: [f64; 3]) -> Result<(), ElasticError> {
    let len = dot(n, n).sqrt();
    if (len - 1.0).abs() > UNIT_TOL {
        return Err(ElasticError::NonUnitNormal { length: len });
    }
    Ok(())
}

/// Kelvin matrix `R_pq = λ′δ_pq/|d| + μ′d_p d_q/|d|³` as a plain real array.
///
/// No singularity check; callers guarantee `d ≠ 0`.
#[inline]
pub fn kelvin_real(mat: &LameMaterial, d: [f64; 3]) -> [[f64; 3]; 3] {
    let r2 = dot(d, d);
    let r = r2.sqrt();
    let a = mat.lambda_prime / r;
    let b = mat.mu_prime / (r2 * r);
    let mut out = [[0.0; 3]; 3];
    for p in 0..3 {
        for q in 0..3 {
            out[p][q] = b * (d[p] * d[q]);
        }
        out[p][p] += a;
    }
    out
}

/// Kelvin fundamental matrix at displacement `d = x − y`.
///
/// Symmetric, even in `d`, homogeneous of degree −1.
pub fn kelvin_matrix(mat: &LameMaterial, d: [f64; 3]) -> Result<Mat3C, ElasticError> {
    let r = dot(d, d).sqrt();
    if r <= SINGULAR_TOL || !r.is_finite() {
        return Err(ElasticError::Singular { distance: r });
    }
    Ok(Mat3C::from_real(kelvin_real(mat, d)))
}

/// Single-layer kernel `R(x − y)`.
pub fn single_layer_kernel(mat: &LameMaterial, x: [f64; 3], y: [f64; 3]) -> Result<Mat3C, ElasticError> {
    kelvin_matrix(mat, sub(x, y))
}

/// Traction (conormal derivative) of a displacement field with gradient
/// `jacobian[p][q] = ∂u_p/∂x_q` on a surface with unit normal `normal`:
/// `t = λ (div u) ν + μ (∇u + ∇uᵀ) ν`.
///
/// Component form: `t_p = Σ_q (λν_p∂_q + μν_q∂_p + μδ_pq∂_ν) u_q`.
pub fn traction_apply(
    mat: &LameMaterial,
    normal: [f64; 3],
    jacobian: [[f64; 3]; 3],
) -> Result<[f64; 3], ElasticError> {
    check_unit(normal)?;
    let div = jacobian[0][0] + jacobian[1][1] + jacobian[2][2];
    let mut t = [0.0; 3];
    for (p, tp) in t.iter_mut().enumerate() {
        let mut s = mat.lambda * normal[p] * div;
        for q in 0..3 {
            s += mat.mu * (jacobian[q][p] + jacobian[p][q]) * normal[q];
        }
        *tp = s;
    }
    Ok(t)
}

/// Double-layer kernel with an explicit sign for the antisymmetric line.
///
/// `K_pq = s·(𝕜/2π)(ν_p d_q − ν_q d_p)/|d|³ − (1/2π)(𝕜δ_pq + 3𝕞 d_p d_q/|d|²)(ν·d)/|d|³`
/// with `d = x − y` and `ν = ν(y)`. No checks; callers guarantee `x ≠ y`.
#[inline]
pub fn np_kernel_signed_real(
    mat: &LameMaterial,
    x: [f64; 3],
    y: [f64; 3],
    nu: [f64; 3],
    sign: f64,
) -> [[f64; 3]; 3] {
    let d = sub(x, y);
    let r2 = dot(d, d);
    let r = r2.sqrt();
    let inv_r3 = 1.0 / (r2 * r);
    let nd = dot(nu, d);
    let a = sign * mat.kappa / (2.0 * PI) * inv_r3;
    let diag = -mat.kappa / (2.0 * PI) * nd * inv_r3;
    let sym = -3.0 * mat.em / (2.0 * PI) * nd * inv_r3 / r2;
    let mut k = [[0.0; 3]; 3];
    for p in 0..3 {
        for q in 0..3 {
            k[p][q] = a * (nu[p] * d[q] - nu[q] * d[p]) + sym * d[p] * d[q];
        }
        k[p][p] += diag;
    }
    k
}

/// Double-layer kernel as a plain real array (hot-loop variant of
/// [`np_kernel`]; no checks).
#[inline]
pub fn np_kernel_real(mat: &LameMaterial, x: [f64; 3], y: [f64; 3], nu: [f64; 3]) -> [[f64; 3]; 3] {
    np_kernel_signed_real(mat, x, y, nu, ANTISYMMETRIC_SIGN)
}

/// Double-layer kernel with a caller-chosen antisymmetric sign (`±1`).
pub fn np_kernel_signed(
    mat: &LameMaterial,
    x: [f64; 3],
    y: [f64; 3],
    normal_at_y: [f64; 3],
    sign: f64,
) -> Result<Mat3C, ElasticError> {
    check_unit(normal_at_y)?;
    let r = dot(sub(x, y), sub(x, y)).sqrt();
    if r <= SINGULAR_TOL || !r.is_finite() {
        return Err(ElasticError::Singular { distance: r });
    }
    Ok(Mat3C::from_real(np_kernel_signed_real(mat, x, y, normal_at_y, sign)))
}

/// Neumann–Poincaré (double-layer) kernel `K(x, y)` with normal taken at `y`.
///
/// The antisymmetric line carries [`ANTISYMMETRIC_SIGN`].
pub fn np_kernel(
    mat: &LameMaterial,
    x: [f64; 3],
    y: [f64; 3],
    normal_at_y: [f64; 3],
) -> Result<Mat3C, ElasticError> {
    np_kernel_signed(mat, x, y, normal_at_y, ANTISYMMETRIC_SIGN)
}

//! Independent oracles for the symbol calculus.

use elastic_core::{cylinder_point, Iota, LameMaterial};
use numerics::{hermitian_eig3, Complex64, Mat3C};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use symbol_calculus::*;

fn random_dirs(n: usize, seed: u64) -> Vec<CircleDirection> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| CircleDirection::new(rng.gen_range(0.0..2.0 * PI))).collect()
}

fn materials() -> Vec<LameMaterial> {
    [(1.0, 1.0), (0.0, 1.0), (2.0, 1.0), (3.0, 2.0), (-0.5, 0.8), (40.0, 0.3)]
        .iter()
        .map(|&(l, m)| LameMaterial::new(l, m).unwrap())
        .collect()
}

fn i() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

/// Principal symbol from its ambient definition `i𝕜(ν ξᵀ − ξ νᵀ)/|ξ|`.
fn k0_ambient(mat: &LameMaterial, nu: [f64; 3], xi: [f64; 3]) -> Mat3C {
    let r = (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]).sqrt();
    Mat3C::from_fn(|p, q| i() * mat.kappa * (nu[p] * xi[q] - xi[p] * nu[q]) / r)
}

// ---------------------------------------------------------------- principal symbol

#[test]
fn k0_at_zero_angle() {
    let mat = LameMaterial::new(0.0, 1.0).unwrap();
    assert!((mat.kappa - 0.25).abs() < 1e-15);
    let k = k0(&CircleDirection::new(0.0), &mat).value;
    let want = Mat3C::from_real([[0.0, 0.0, -1.0], [0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]).scale_c(i() * 0.25);
    assert!(k.max_diff(&want) < 1e-16);
}

#[test]
fn k0_spectrum_and_eigenvectors() {
    for mat in materials() {
        for dir in random_dirs(20, 1) {
            let k = k0(&dir, &mat).value;
            assert!(k.hermitian_defect() < 1e-16);
            let e = hermitian_eig3(&k).unwrap();
            let want = [-mat.kappa, 0.0, mat.kappa];
            for (a, b) in e.values.iter().zip(want) {
                assert!((a - b).abs() < 1e-14 * mat.kappa.max(1.0));
            }
            // e₊ = 2^{−1/2}(φ₁, φ₂, i)
            let h = std::f64::consts::FRAC_1_SQRT_2;
            let ep = [Complex64::new(h * dir.phi1, 0.0), Complex64::new(h * dir.phi2, 0.0), Complex64::new(0.0, h)];
            let r = k.mul_vec(&ep);
            for c in 0..3 {
                assert!((r[c] - ep[c] * mat.kappa).norm() < 1e-15);
            }
        }
    }
}

#[test]
fn k0_eigensystem_is_orthonormal_eigenbasis() {
    let mat = LameMaterial::new(1.5, 0.9).unwrap();
    let sys = k0_eigensystem(&CircleDirection::new(0.0), &mat);
    let v0 = sys[1].vector;
    assert!((v0[0].norm() + (v0[1] - 1.0).norm() + v0[2].norm()) < 1e-15, "null vector at θ=0");
    for dir in random_dirs(20, 2) {
        let sys = k0_eigensystem(&dir, &mat);
        let k = k0(&dir, &mat).value;
        for (a, pa) in sys.iter().enumerate() {
            assert_eq!(pa.iota, Iota::ALL[a]);
            let r = k.mul_vec(&pa.vector);
            for c in 0..3 {
                assert!((r[c] - pa.vector[c] * pa.value).norm() <= 1e-14);
            }
            for pb in &sys {
                let ip: Complex64 = (0..3).map(|c| pa.vector[c].conj() * pb.vector[c]).sum();
                let want = if pa.iota == pb.iota { 1.0 } else { 0.0 };
                assert!((ip - want).norm() < 1e-15);
            }
        }
        // projectors resolve the identity and reproduce k₀
        let sum = Iota::ALL.iter().fold(Mat3C::zeros(), |acc, &j| acc + spectral_projector(j, &dir, &mat));
        assert!(sum.max_diff(&Mat3C::identity()) < 1e-15);
        let recon = Iota::ALL
            .iter()
            .fold(Mat3C::zeros(), |acc, &j| acc + spectral_projector(j, &dir, &mat).scale(mat.omega(j)));
        assert!(recon.max_diff(&k) < 1e-15);
    }
}

#[test]
fn dk0_dxi_matches_finite_differences() {
    let mat = LameMaterial::new(0.7, 1.2).unwrap();
    let h = 1e-5;
    for dir in random_dirs(20, 3) {
        for alpha in 1..=2 {
            let mut xp = [dir.phi1, dir.phi2, 0.0];
            let mut xm = xp;
            xp[alpha - 1] += h;
            xm[alpha - 1] -= h;
            let e3 = [0.0, 0.0, 1.0];
            let fd = (k0_ambient(&mat, e3, xp) - k0_ambient(&mat, e3, xm)).scale(0.5 / h);
            let d = dk0_dxi(alpha, &dir, &mat);
            assert_eq!(d.degree, -1.0);
            assert!(d.value.max_diff(&fd) <= 1e-8 * d.value.max_abs().max(mat.kappa), "alpha {alpha}");
        }
        assert_eq!(dk0_dxi1(&dir, &mat).value, dk0_dxi(1, &dir, &mat).value);
        assert_eq!(dk0_dxi2(&dir, &mat).value, dk0_dxi(2, &dir, &mat).value);
    }
    // θ = π/2: only the (1,3)/(3,1) entries survive
    let d = dk0_dxi1(&CircleDirection::new(PI / 2.0), &mat).value;
    for p in 0..3 {
        for q in 0..3 {
            let survives = (p, q) == (0, 2) || (p, q) == (2, 0);
            assert_eq!(d[(p, q)].norm() > 1e-12, survives, "({p},{q})");
        }
    }
}

#[test]
fn dk0_dx_matches_normal_rotation_on_cylinders() {
    // The curvature enters k₀ only through the normal; differentiate the
    // ambient formula along the curved direction of each cylinder.
    let mat = LameMaterial::new(2.0, 0.5).unwrap();
    let h = 1e-6;
    for kappa in [-1.3, 0.6] {
        for dir in random_dirs(10, 4) {
            let xi = [dir.phi1, dir.phi2, 0.0];
            // α = 1: cylinder curved along x₁
            let (_, np) = cylinder_point(kappa, [h, 0.0]).unwrap();
            let (_, nm) = cylinder_point(kappa, [-h, 0.0]).unwrap();
            let fd = (k0_ambient(&mat, np, xi) - k0_ambient(&mat, nm, xi)).scale(0.5 / h);
            assert!(dk0_dx(1, kappa, &dir, &mat).value.max_diff(&fd) < 1e-8);
            assert!(dk0_dx1_cylinder(&dir, &mat, kappa).value.max_diff(&fd) < 1e-8);
            // α = 2: the same cylinder rotated so it curves along x₂
            let rot = |n: [f64; 3]| [n[1], n[0], n[2]];
            let fd2 = (k0_ambient(&mat, rot(np), xi) - k0_ambient(&mat, rot(nm), xi)).scale(0.5 / h);
            assert!(dk0_dx(2, kappa, &dir, &mat).value.max_diff(&fd2) < 1e-8);
        }
    }
    let dir = CircleDirection::new(0.4);
    assert_eq!(dk0_dx1_cylinder(&dir, &mat, 0.0).value.max_abs(), 0.0);
    let a = dk0_dx1_cylinder(&dir, &mat, 0.8).value;
    let b = dk0_dx1_cylinder(&dir, &mat, 1.6).value;
    assert!(b.max_diff(&a.scale(2.0)) < 1e-16);
}

// ---------------------------------------------------------------- Fourier transforms

fn hermite(n: u32, y: f64) -> f64 {
    let (mut a, mut b) = (1.0, y);
    if n == 0 {
        return a;
    }
    for k in 1..n {
        let c = y * b - k as f64 * a;
        a = b;
        b = c;
    }
    b
}

/// `∫₀^∞ r^n e^{−r²/2} dr` for integer `n ≥ 0`.
fn gaussian_moment(n: i32) -> f64 {
    match n {
        0 => (PI / 2.0).sqrt(),
        1 => 1.0,
        _ => (n - 1) as f64 * gaussian_moment(n - 2),
    }
}

#[test]
fn fourier_transforms_satisfy_parseval_against_gaussians() {
    // With F[f](ξ) = ∫ f(y) e^{iy·ξ} dy and g(ξ) = ξ^γ e^{−|ξ|²/2}:
    //   ∫ F[f] g dξ = ∫ f(y) F[g](y) dy,
    //   F[g](y) = i^{|γ|}·2π·He_{γ₁}(y₁)He_{γ₂}(y₂)e^{−|y|²/2}.
    // Polar quadrature with the angular sum first removes the principal-value
    // singularity of the odd degree −2 kernels.
    let nth = 64;
    let dirs = CircleDirection::uniform(nth);
    let (gx, gw) = numerics::gauss_legendre(160);
    let rmax = 14.0;
    for &(a, b, p) in SUPPORTED_TRIPLES.iter() {
        let ft = ft_homogeneous(a, b, p).unwrap();
        assert_eq!(ft.degree(), p as i32 - a as i32 - b as i32 - 2);
        for gamma in [(a, b), (a + 1, b + 1), (b, a)] {
            let g = (gamma.0 + gamma.1) as i32;
            // left side
            let ang: Complex64 = dirs
                .iter()
                .map(|d| ft.eval_unit(d.phi1, d.phi2) * d.phi1.powi(gamma.0 as i32) * d.phi2.powi(gamma.1 as i32))
                .sum::<Complex64>()
                * (2.0 * PI / nth as f64);
            let lhs = ang * gaussian_moment(ft.degree() + g + 1);
            // right side
            let ig = i().powi(g);
            let mut rhs = Complex64::new(0.0, 0.0);
            for (t, w) in gx.iter().zip(&gw) {
                let r = 0.5 * rmax * (t + 1.0);
                let inner: f64 = dirs
                    .iter()
                    .map(|d| {
                        d.phi1.powi(a as i32)
                            * d.phi2.powi(b as i32)
                            * hermite(gamma.0, r * d.phi1)
                            * hermite(gamma.1, r * d.phi2)
                    })
                    .sum::<f64>()
                    * (2.0 * PI / nth as f64);
                let radial = r.powi(a as i32 + b as i32 - p as i32 + 1) * (-0.5 * r * r).exp();
                rhs += ig * (0.5 * rmax * w * radial * inner);
            }
            let scale = lhs.norm().max(rhs.norm()).max(1e-3);
            assert!((lhs - rhs).norm() < 1e-9 * scale, "{:?} γ={gamma:?}: {lhs} vs {rhs}", (a, b, p));
        }
    }
}

#[test]
fn fourier_rejects_unsupported_triples() {
    assert!(matches!(ft_homogeneous(2, 1, 5), Err(SymbolError::UnsupportedMonomial { a: 2, b: 1, p: 5 })));
    assert!(ft_homogeneous(0, 0, 3).is_err());
}

// ---------------------------------------------------------------- subsymbol

#[test]
fn subsymbol_structure() {
    let mat = LameMaterial::new(1.0, 1.0).unwrap();
    for dir in random_dirs(10, 5) {
        assert_eq!(subsymbol_cylinder(&dir, &mat, 0.0).unwrap().value.max_abs(), 0.0);
        let a = subsymbol_cylinder(&dir, &mat, 0.7).unwrap().value;
        let b = subsymbol_cylinder(&dir, &mat, -1.4).unwrap().value;
        assert!(b.max_diff(&a.scale(-2.0)) < 1e-15);
    }
    // The 𝕜-diagonal magnitude ∝ φ₂²: maximal at θ = π/2, zero at θ = 0.
    let only_k = |mat: &LameMaterial, th: f64| subsymbol_cylinder(&CircleDirection::new(th), mat, 1.0).unwrap().value[(2, 2)];
    let m = LameMaterial::new(0.0, 1.0).unwrap();
    assert!(only_k(&m, 0.0).norm() < 1e-16);
    assert!(only_k(&m, PI / 2.0).norm() > only_k(&m, 1.0).norm());
}

#[test]
fn audit_flags_known_discrepancies() {
    let report = audit_report().unwrap();
    let section = |n: &str| report.sections.iter().find(|s| s.name == n).unwrap().clone();
    let f = section("fourier");
    assert_eq!(f.mismatches(), 2);
    assert!(f.findings.iter().filter(|x| x.kind.is_mismatch()).all(|x| x.kind == FindingKind::SignFlip));
    assert_eq!(section("dk0_dxi1").mismatches(), 2);
    assert!(section("subsymbol_expanded").mismatches() > 0);
    assert!(section("subsymbol_collected").mismatches() > 0);
    assert_eq!(section("null_vector").mismatches(), 1);
    let json = serde_json::to_string(&report).unwrap();
    assert!(json.contains("sign_flip"));
    assert!(report.to_string().contains("SIGN"));
}

// ---------------------------------------------------------------- assembly

#[test]
fn f_assembly_projector_identity() {
    for mat in materials() {
        for dir in random_dirs(5, 6) {
            let k = k0(&dir, &mat);
            for iota in Iota::ALL {
                let c = 0.37;
                let ksub = Symbol3 { value: Mat3C::identity().scale(c), degree: -1.0 };
                let f = assemble_f(iota, &k, &ksub, &mat);
                let want = spectral_projector(iota, &dir, &mat).scale(c * p_prime(iota, &mat));
                assert!(f.max_diff(&want) < 1e-12 * want.max_abs(), "{iota:?}");
                let zero = Symbol3 { value: Mat3C::zeros(), degree: -1.0 };
                assert_eq!(assemble_f(iota, &k, &zero, &mat).max_abs(), 0.0);
            }
        }
    }
}

fn permutations(v: [Iota; 5]) -> Vec<[Iota; 5]> {
    let mut out = Vec::new();
    let mut idx = [0usize, 1, 2, 3, 4];
    // Heap's algorithm
    fn heap(k: usize, idx: &mut [usize; 5], v: &[Iota; 5], out: &mut Vec<[Iota; 5]>) {
        if k == 1 {
            out.push(idx.map(|j| v[j]));
            return;
        }
        heap(k - 1, idx, v, out);
        for j in 0..k - 1 {
            if k % 2 == 0 {
                idx.swap(j, k - 1);
            } else {
                idx.swap(0, k - 1);
            }
            heap(k - 1, idx, v, out);
        }
    }
    heap(5, &mut idx, &v, &mut out);
    out
}

#[test]
fn assembly_is_independent_of_factor_order() {
    let mat = LameMaterial::new(1.7, 0.6).unwrap();
    let dir = CircleDirection::new(0.83);
    let k = k0(&dir, &mat);
    let ksub = subsymbol_general(&dir, &mat, 0.9, -0.4);
    let dxi = dk0_dxi(1, &dir, &mat);
    let dx = dk0_dx(1, 0.9, &dir, &mat);
    for iota in Iota::ALL {
        let base = factor_multiset(iota);
        let f0 = assemble_f_ordered(&k, &ksub, &mat, &base);
        let g0 = assemble_g_ordered(&k, &dxi, &dx, &mat, &base);
        let perms = permutations(base);
        assert_eq!(perms.len(), 120);
        for order in perms {
            assert!(assemble_f_ordered(&k, &ksub, &mat, &order).max_diff(&f0) < 1e-14);
            assert!(assemble_g_ordered(&k, &dxi, &dx, &mat, &order).max_diff(&g0) < 1e-14);
        }
    }
}

#[test]
fn g_assembly_vanishes_without_derivatives_and_is_linear_in_curvature() {
    let mat = LameMaterial::new(0.4, 1.1).unwrap();
    let zero = Symbol3 { value: Mat3C::zeros(), degree: -1.0 };
    for dir in random_dirs(5, 7) {
        let k = k0(&dir, &mat);
        let dxi = dk0_dxi(1, &dir, &mat);
        for iota in Iota::ALL {
            assert_eq!(assemble_g(iota, &k, &dxi, &zero, &mat).max_abs(), 0.0);
            assert_eq!(assemble_g(iota, &k, &zero, &dk0_dx1_cylinder(&dir, &mat, 1.0), &mat).max_abs(), 0.0);
            let g1 = assemble_g(iota, &k, &dxi, &dk0_dx1_cylinder(&dir, &mat, 0.5), &mat);
            let g2 = assemble_g(iota, &k, &dxi, &dk0_dx1_cylinder(&dir, &mat, 1.5), &mat);
            assert!(g2.max_diff(&g1.scale(3.0)) < 1e-15 * g2.max_abs().max(1.0));
        }
    }
}

#[test]
fn universal_matrix_is_curvature_independent_and_periodic() {
    for mat in materials() {
        for dir in random_dirs(5, 8) {
            for iota in Iota::ALL {
                let a = universal_matrix_at_curvature(iota, &dir, &mat, -1.0);
                let b = universal_matrix_at_curvature(iota, &dir, &mat, -2.0);
                assert!(a.max_diff(&b) < 1e-12 * a.max_abs().max(1.0));
                assert!(a.max_diff(&universal_matrix(iota, &dir, &mat)) < 1e-12 * a.max_abs().max(1.0));
                let shifted = universal_matrix(iota, &CircleDirection::new(dir.theta + 2.0 * PI), &mat);
                assert!(a.max_diff(&shifted) < 1e-12 * a.max_abs().max(1.0));
            }
        }
    }
}

#[test]
fn universal_matrix_is_linear_in_material_scalars() {
    let m21 = LameMaterial::new(2.0, 1.0).unwrap();
    let m32 = LameMaterial::new(3.0, 2.0).unwrap();
    for dir in random_dirs(10, 9) {
        for iota in Iota::ALL {
            let split = material_split(iota, &dir);
            for m in [&m21, &m32] {
                let want = universal_matrix(iota, &dir, m);
                assert!(split.predict(m).max_diff(&want) < 1e-10 * want.max_abs().max(1.0));
            }
        }
    }
}

// ---------------------------------------------------------------- effective symbols

#[test]
fn effective_symbol_plane_swap_and_direct_assembly() {
    for mat in materials() {
        for dir in random_dirs(5, 10) {
            let v = swap_involution();
            for iota in Iota::ALL {
                assert!(effective_symbol(iota, 0.0, 0.0, &dir, &mat).max_abs() < 1e-300);
                let (k1, k2) = (0.8, -1.7);
                let m = effective_symbol(iota, k1, k2, &dir, &mat);
                let swapped = v * effective_symbol(iota, k2, k1, &dir.swapped(), &mat) * v;
                assert!(m.max_diff(&swapped) < 1e-12 * m.max_abs());
                let direct = effective_symbol_direct(iota, k1, k2, &dir, &mat);
                assert!(m.max_diff(&direct) < 1e-11 * m.max_abs(), "{iota:?}");
            }
        }
    }
}

#[test]
fn sphere_effective_symbols_are_semidefinite_with_single_nonzero_eigenvalue() {
    for mat in materials() {
        for dir in random_dirs(10, 11) {
            let v = swap_involution();
            for iota in Iota::ALL {
                let sum = universal_matrix(iota, &dir, &mat) + v * universal_matrix(iota, &dir.swapped(), &mat) * v;
                let sphere = effective_symbol(iota, -1.0, -1.0, &dir, &mat);
                assert!(sphere.max_diff(&sum.scale(-1.0)) < 1e-13 * sum.max_abs());
                let ev = reduced_eigenvalues(&sum, &dir, &mat).unwrap();
                let want = if iota == Iota::Zero { 0.75 } else { mat.kappa };
                let tol = 1e-12 * want;
                assert!(ev.iter().all(|&e| e <= tol), "nonpositive: {ev:?}");
                assert!((ev[0] + want).abs() < tol && ev[1].abs() < tol && ev[2].abs() < tol, "{iota:?}: {ev:?}");
            }
        }
    }
}

// ---------------------------------------------------------------- single layer and Hermitian reduction

#[test]
fn single_layer_closed_forms() {
    let mat = LameMaterial::new(0.0, 1.0).unwrap();
    let s = single_layer_symbol(&CircleDirection::new(0.0), &mat).value;
    assert!(s.max_diff(&Mat3C::diag_real([0.375, 0.5, 0.375])) < 1e-16);
    for mat in materials() {
        for dir in random_dirs(20, 12) {
            let s = single_layer_symbol(&dir, &mat).value;
            let q = q_symbol(&dir, &mat).value;
            let z = z_symbol(&dir, &mat).value;
            assert!((q * q).max_diff(&s) < 1e-14 * s.max_abs());
            assert!((q * z).max_diff(&Mat3C::identity()) < 1e-13);
            assert!((z * s * z).max_diff(&Mat3C::identity()) < 1e-13);
            let l = rank_one_projector(&dir);
            assert!((l * l).max_diff(&l) < 1e-15);
            assert!((l.trace() - 1.0).norm() < 1e-15);
        }
    }
}

fn invariants(m: &Mat3C) -> [Complex64; 3] {
    let t = m.trace();
    let t2 = (*m * *m).trace();
    [t, (t * t - t2) * 0.5, m.det()]
}

#[test]
fn hermitian_reduction_preserves_spectrum() {
    for mat in materials() {
        for dir in random_dirs(10, 13) {
            for iota in Iota::ALL {
                let m = effective_symbol(iota, 1.3, -0.4, &dir, &mat);
                let b = hermitian_reduce(&m, &dir, &mat).unwrap();
                assert!(b.hermitian_defect() == 0.0);
                let (im, ib) = (invariants(&m), invariants(&b));
                let scale = m.max_abs().max(1e-300);
                for k in 0..3 {
                    assert!((im[k] - ib[k]).norm() < 1e-10 * scale.powi(k as i32 + 1), "{iota:?} invariant {k}");
                }
            }
        }
    }
    let dir = CircleDirection::new(0.2);
    let mat = LameMaterial::new(1.0, 1.0).unwrap();
    assert_eq!(hermitian_reduce(&Mat3C::zeros(), &dir, &mat).unwrap().max_abs(), 0.0);
}

#[test]
fn hermitian_reduction_rejects_non_hermitian_input() {
    let dir = CircleDirection::new(0.2);
    let mat = LameMaterial::new(1.0, 1.0).unwrap();
    let bad = Mat3C::from_real([[0.0, 1.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]);
    assert!(matches!(hermitian_reduce(&bad, &dir, &mat), Err(SymbolError::NotHermitian { .. })));
}

/// `∫₀^{2π} Σ max(±λ, 0)² dθ` over the reduced eigenvalues.
fn tr_pm_integral(iota: Iota, k1: f64, k2: f64, mat: &LameMaterial) -> (f64, f64) {
    let n = 256;
    let dirs = CircleDirection::uniform(n);
    let (mut p, mut m) = (0.0, 0.0);
    for d in &dirs {
        for e in reduced_eigenvalues(&effective_symbol(iota, k1, k2, d, mat), d, mat).unwrap() {
            p += e.max(0.0).powi(2);
            m += (-e).max(0.0).powi(2);
        }
    }
    let w = 2.0 * PI / n as f64;
    (p * w, m * w)
}

#[test]
fn trace_integrals_are_frame_invariant() {
    let mat = LameMaterial::new(1.2, 0.9).unwrap();
    for iota in Iota::ALL {
        let a = tr_pm_integral(iota, 1.1, -0.6, &mat);
        let b = tr_pm_integral(iota, -0.6, 1.1, &mat);
        assert!((a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9, "{iota:?}: {a:?} vs {b:?}");
    }
}

// ---------------------------------------------------------------- properties

fn material() -> impl Strategy<Value = LameMaterial> {
    (0.1f64..5.0, -0.6f64..5.0).prop_map(|(mu, lr)| LameMaterial::new(lr * mu, mu).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn effective_eigenvalues_are_real(mat in material(), th in 0.0f64..6.3, k1 in -3.0f64..3.0, k2 in -3.0f64..3.0, j in 0usize..3) {
        let dir = CircleDirection::new(th);
        let m = effective_symbol(Iota::ALL[j], k1, k2, &dir, &mat);
        let b = hermitian_reduce(&m, &dir, &mat);
        prop_assert!(b.is_ok());
    }

    #[test]
    fn effective_symbol_is_linear_in_curvatures(mat in material(), th in 0.0f64..6.3, k1 in -3.0f64..3.0, k1p in -3.0f64..3.0, k2 in -3.0f64..3.0, a in -2.0f64..2.0, j in 0usize..3) {
        let dir = CircleDirection::new(th);
        let iota = Iota::ALL[j];
        let lhs = effective_symbol(iota, a * k1 + k1p, k2, &dir, &mat);
        let m1 = effective_symbol(iota, k1, 0.0, &dir, &mat);
        let m2 = effective_symbol(iota, k1p, k2, &dir, &mat);
        let rhs = m1.scale(a) + m2;
        prop_assert!(lhs.max_diff(&rhs) <= 1e-13 * lhs.max_abs().max(rhs.max_abs()).max(1e-300) * 8.0);
    }

    #[test]
    fn k0_is_degree_zero(mat in material(), th in 0.0f64..6.3, s in 0.1f64..10.0) {
        let dir = CircleDirection::new(th);
        let e3 = [0.0, 0.0, 1.0];
        let a = k0_ambient(&mat, e3, [s * dir.phi1, s * dir.phi2, 0.0]);
        prop_assert!(a.max_diff(&k0(&dir, &mat).value) < 1e-15);
    }
}

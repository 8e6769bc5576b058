use elastic_core::LameMaterial;
use geometry::{Surface, SurfaceSpec};
use np_discretization::*;
use proptest::prelude::*;
use spectral_asymptotics::sphere_exact_eigs;
use std::f64::consts::PI;

fn sphere(r: f64) -> Surface {
    Surface::new(SurfaceSpec::Sphere { radius: r }).unwrap()
}

fn ellipsoid() -> Surface {
    Surface::new(SurfaceSpec::Ellipsoid { semiaxes: [1.5, 1.0, 0.7] }).unwrap()
}

fn spheroid() -> Surface {
    Surface::new(SurfaceSpec::Ellipsoid { semiaxes: [1.2, 1.2, 0.8] }).unwrap()
}

fn mat(l: f64, m: f64) -> LameMaterial {
    LameMaterial::new(l, m).unwrap()
}

/// Groups a descending real spectrum into (value, multiplicity) runs.
fn groups(sample: &SpectrumSample, tol: f64) -> Vec<(f64, usize)> {
    let mut g: Vec<(f64, usize)> = Vec::new();
    for z in &sample.eigenvalues {
        match g.last_mut() {
            Some((v, c)) if (*v - z.re).abs() < tol => *c += 1,
            _ => g.push((z.re, 1)),
        }
    }
    g
}

fn legendre(l: usize, x: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, x);
    if l == 0 {
        return p0;
    }
    for k in 1..l {
        let p2 = ((2 * k + 1) as f64 * x * p1 - k as f64 * p0) / (k + 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    p1
}

fn unit(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Addition theorem: Σ_m Y_l^m(s) Y_l^m(t) = (2l + 1)/(4π)·P_l(s·t).
    #[test]
    fn harmonics_satisfy_addition_theorem(
        a in prop::array::uniform3(-1.0f64..1.0),
        b in prop::array::uniform3(-1.0f64..1.0),
    ) {
        prop_assume!(a.iter().map(|x| x * x).sum::<f64>() > 1e-3);
        prop_assume!(b.iter().map(|x| x * x).sum::<f64>() > 1e-3);
        let (s, t) = (unit(a), unit(b));
        let lmax = 20;
        let (mut ys, mut yt) = (vec![0.0; harmonic_count(lmax)], vec![0.0; harmonic_count(lmax)]);
        real_harmonics(lmax, s, &mut ys);
        real_harmonics(lmax, t, &mut yt);
        let c = s[0] * t[0] + s[1] * t[1] + s[2] * t[2];
        for l in 0..=lmax {
            let sum: f64 = (-(l as i64)..=l as i64).map(|m| ys[harmonic_index(l, m)] * yt[harmonic_index(l, m)]).sum();
            let want = (2 * l + 1) as f64 / (4.0 * PI) * legendre(l, c);
            prop_assert!((sum - want).abs() < 1e-12, "l = {l}: {sum} vs {want}");
        }
    }
}

#[test]
fn grid_harmonics_are_discretely_orthonormal() {
    let g = NystromGrid::new(&sphere(1.0), NystromConfig::new(9)).unwrap();
    let nb = g.basis_size();
    for k in 0..nb {
        for l in 0..nb {
            let s: f64 = (0..g.len()).map(|j| g.param_weights[j] * g.y(j, k) * g.y(j, l)).sum();
            let want = if k == l { 1.0 } else { 0.0 };
            assert!((s - want).abs() < 1e-12, "({k}, {l}): {s}");
        }
    }
}

#[test]
fn grid_matches_surface_quadrature_and_map() {
    let surf = ellipsoid();
    let g = NystromGrid::new(&surf, NystromConfig::new(10)).unwrap();
    assert_eq!(g.len(), NystromConfig::new(10).nodes());
    for (j, p) in g.nodes.iter().enumerate() {
        let (x, nu, jac) = g.map.eval(g.params[j]);
        for a in 0..3 {
            assert!((x[a] - p.position[a]).abs() < 1e-14);
            assert!((nu[a] - p.outward_normal[a]).abs() < 1e-12);
        }
        assert!((g.param_weights[j] * jac - g.weights[j]).abs() < 1e-13 * g.weights[j]);
    }
    let area: f64 = g.weights.iter().sum();
    let sph = NystromGrid::new(&sphere(2.0), NystromConfig::new(10)).unwrap();
    assert!((sph.weights.iter().sum::<f64>() - 16.0 * PI).abs() < 1e-11);
    assert!(area > 0.0);
}

#[test]
fn config_for_nodes_and_budget() {
    let c = NystromConfig::for_nodes(1000);
    assert_eq!(c.n_theta, 22);
    assert_eq!(c.nodes(), 968);
    assert!(c.validate().is_ok());
    let big = NystromConfig::new(32);
    assert!(matches!(big.validate(), Err(DiscretizationError::BudgetExceeded { size: 6144, max: 6000 })));
    assert!(matches!(
        assemble_np(&sphere(1.0), &mat(1.0, 1.0), big),
        Err(DiscretizationError::BudgetExceeded { .. })
    ));
    assert!(NystromConfig::new(3).validate().is_err());
    assert!(NystromConfig { n_theta: 8, n_polar: 6 }.validate().is_err());
}

#[test]
fn unsupported_surfaces_are_rejected() {
    let m = mat(1.0, 1.0);
    let cfg = NystromConfig::new(6);
    for spec in [
        r#"{"kind":"torus","R":2.0,"r":1.0}"#,
        r#"{"kind":"cylinder_patch","radius":1.0,"length":2.0}"#,
        r#"{"kind":"union","components":[{"kind":"sphere","radius":2.0},{"kind":"sphere","radius":1.0,"orientation":"cavity"}]}"#,
        r#"{"kind":"union","components":[{"kind":"sphere","radius":1.0,"orientation":"cavity"}]}"#,
    ] {
        let s = Surface::from_json(spec).unwrap();
        assert!(matches!(assemble_np(&s, &m, cfg), Err(DiscretizationError::UnsupportedSurface(_))), "{spec}");
    }
}

/// Rigid translations are eigenfields with eigenvalue ½ for every material
/// and every closed surface.
#[test]
fn constants_map_to_half_constants() {
    for (surf, tol) in [(sphere(1.0), 1e-12), (sphere(0.5), 1e-12), (ellipsoid(), 1e-9)] {
        for m in [mat(0.0, 1.0), mat(1.0, 1.0), mat(3.0, 2.0)] {
            let sys = assemble_np(&surf, &m, NystromConfig::new(8)).unwrap();
            for b in 0..3 {
                let c: Vec<f64> = (0..3 * sys.nodes()).map(|r| if r % 3 == b { 1.0 } else { 0.0 }).collect();
                let kc = sys.apply(&c);
                let dev = kc.iter().zip(&c).map(|(x, y)| (x - 0.5 * y).abs()).fold(0.0, f64::max);
                assert!(dev < tol, "component {b}: {dev:e}");
            }
        }
    }
}

/// On the sphere every discrete eigenvalue is one of the closed-form values,
/// for several materials and radii.
#[test]
fn sphere_spectrum_matches_closed_form() {
    for (m, r) in [(mat(0.0, 1.0), 1.0), (mat(1.0, 1.0), 2.0), (mat(2.0, 0.5), 1.0)] {
        let sys = assemble_np(&sphere(r), &m, NystromConfig::new(8)).unwrap();
        let sp = np_spectrum(&sys).unwrap();
        let exact = sphere_exact_eigs(&m, 12).all();
        for z in &sp.eigenvalues {
            let d = exact.iter().map(|(v, _)| (v - z.re).abs()).fold(f64::INFINITY, f64::min);
            assert!(d < 1e-10 && z.im.abs() < 1e-12, "{z} is {d:e} from the closed-form set");
        }
        assert!((sp.largest() - 0.5).abs() < 1e-12);
        assert_eq!(sp.top_cluster(1e-2).len(), 6);
    }
}

/// Multiplicities on the sphere. The rigid motions give ½ with multiplicity
/// 6 (Λ₁⁰ = Λ₁⁻ = ½). The Λ⁰ and Λ⁻ series carry 2n + 1. The Λ⁺ series
/// carries 2n − 1; in particular Λ₁⁺ is simple, with the radial dilation
/// field as eigenfunction.
#[test]
fn sphere_multiplicities() {
    let m = mat(0.7, 1.0);
    let sys = assemble_np(&sphere(1.0), &m, NystromConfig::new(8)).unwrap();
    let sp = np_spectrum(&sys).unwrap();
    let g = groups(&sp, 1e-9);
    let mult = |v: f64| g.iter().find(|(x, _)| (x - v).abs() < 1e-9).map_or(0, |(_, c)| *c);
    let ex = sphere_exact_eigs(&m, 6);
    assert_eq!(mult(0.5), 6);
    for n in 2..=5 {
        assert_eq!(mult(ex.zero[n - 1]), 2 * n + 1, "Λ⁰_{n}");
        assert_eq!(mult(ex.minus[n - 1]), 2 * n + 1, "Λ⁻_{n}");
        assert_eq!(mult(ex.plus[n - 1]), 2 * n - 1, "Λ⁺_{n}");
    }
    assert_eq!(mult(ex.plus[0]), 1);
    let dilation: Vec<f64> = sys.grid.params.iter().flat_map(|s| *s).collect();
    let kd = sys.apply(&dilation);
    let dev = kd.iter().zip(&dilation).map(|(a, b)| (a - ex.plus[0] * b).abs()).fold(0.0, f64::max);
    assert!(dev < 1e-12, "{dev:e}");
}

#[test]
fn first_zero_series_values_resolved() {
    let m = mat(0.0, 1.0);
    let sys = assemble_np(&sphere(1.0), &m, NystromConfig::new(10)).unwrap();
    let sp = np_spectrum(&sys).unwrap();
    for n in 1..=5 {
        let v = 3.0 / (2.0 * (2 * n + 1) as f64);
        let d = sp.eigenvalues.iter().map(|z| (z.re - v).abs()).fold(f64::INFINITY, f64::min);
        assert!(d < 1e-2, "Λ⁰_{n}");
    }
}

#[test]
fn top_eigenvalue_converges_under_refinement() {
    let m = mat(1.0, 1.0);
    let mut last = f64::INFINITY;
    for surf in [sphere(1.0), ellipsoid()] {
        for nt in [5, 10] {
            let sp = np_spectrum(&assemble_np(&surf, &m, NystromConfig::new(nt)).unwrap()).unwrap();
            let d = (sp.largest() - 0.5).abs();
            assert!(d <= last.max(1e-12), "{d:e} after {last:e}");
            assert!(d < 1e-8);
            last = d;
        }
        last = f64::INFINITY;
    }
}

/// Rotating every node one azimuthal step (and vector components by the
/// same angle) is an exact similarity on axisymmetric surfaces.
#[test]
fn azimuthal_rotation_is_a_similarity() {
    let m = mat(1.0, 1.0);
    for surf in [sphere(1.0), spheroid()] {
        let sys = assemble_np(&surf, &m, NystromConfig::new(6)).unwrap();
        let k = sys.nodal_matrix();
        assert!(azimuthal_defect(&sys, &k) < 1e-12);
    }
}

/// The nodal matrix and the coefficient-space operator share their nonzero
/// spectrum.
#[test]
fn nodal_and_coefficient_spectra_agree() {
    let m = mat(1.0, 1.0);
    let sys = assemble_np(&ellipsoid(), &m, NystromConfig::new(5)).unwrap();
    let nodal = numerics::real_schur_spectrum(&sys.nodal_matrix()).unwrap();
    let coeff = np_spectrum(&sys).unwrap();
    let nonzero: Vec<_> = nodal.iter().filter(|z| z.norm() > 1e-8).collect();
    let coeff_nz: Vec<_> = coeff.eigenvalues.iter().filter(|z| z.norm() > 1e-8).collect();
    assert_eq!(nonzero.len(), coeff_nz.len());
    for (a, b) in nonzero.iter().zip(&coeff_nz) {
        assert!((*a - *b).norm() < 1e-9, "{a} vs {b}");
    }
}

#[test]
fn spectrum_is_real_and_bounded() {
    let m = mat(1.0, 1.0);
    for surf in [sphere(1.0), ellipsoid()] {
        let sp = np_spectrum(&assemble_np(&surf, &m, NystromConfig::new(10)).unwrap()).unwrap();
        assert!(sp.max_imag <= 1e-3 * sp.spectral_radius, "{}", sp.max_imag);
        assert!(sp.eigenvalues.iter().all(|z| z.re > -0.5 && z.re <= 0.5 + 1e-9));
    }
}

/// With the untransposed antisymmetric line the discrete sphere spectrum is
/// wrong: eigenvalues appear below −𝕜, where no closed-form value lies.
#[test]
fn printed_sign_fails_sphere_oracle() {
    let m = mat(0.0, 1.0);
    let sys = assemble_np_signed(&sphere(1.0), &m, NystromConfig::new(8), 1.0).unwrap();
    let sp = np_spectrum(&sys).unwrap();
    let exact = sphere_exact_eigs(&m, 12).all();
    let worst = sp
        .eigenvalues
        .iter()
        .map(|z| exact.iter().map(|(v, _)| (v - z.re).abs()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max);
    assert!(worst > 1e-2, "{worst}");
    assert!(sp.eigenvalues.iter().any(|z| z.re < -m.kappa - 1e-2));
}

#[test]
fn single_layer_positive_and_symmetric_on_sphere() {
    for m in [mat(0.0, 1.0), mat(1.0, 1.0)] {
        let s = assemble_single_layer(&sphere(1.0), &m, NystromConfig::new(15)).unwrap();
        assert!(NystromConfig::new(15).nodes() >= 400);
        assert!(s.raw_asymmetry <= 1e-10, "{:e}", s.raw_asymmetry);
        assert_eq!(s.galerkin.asymmetry(), 0.0);
        let ev = single_layer_eigenvalues(&s).unwrap();
        assert!(*ev.last().unwrap() > 0.0, "{:?}", ev.last());
        assert!(single_layer_positivity(&s).positive_definite);
    }
}

#[test]
fn single_layer_on_ellipsoid() {
    let m = mat(1.0, 1.0);
    let coarse = assemble_single_layer(&ellipsoid(), &m, NystromConfig::new(6)).unwrap();
    let fine = assemble_single_layer(&ellipsoid(), &m, NystromConfig::new(12)).unwrap();
    assert!(fine.raw_asymmetry < coarse.raw_asymmetry);
    for s in [&coarse, &fine] {
        let p = single_layer_positivity(s);
        assert!(p.positive_definite && p.min_pivot_ratio > 0.0, "{p:?}");
    }
}

/// `S K* = K S`: the residual is at rounding level on the sphere and
/// decreases under refinement on the ellipsoid.
#[test]
fn symmetrizer_residual_shrinks() {
    let m = mat(1.0, 1.0);
    let s = assemble_np(&sphere(1.0), &m, NystromConfig::new(6)).unwrap();
    assert!(s.symmetrizer_residual() < 1e-12);
    let r6 = assemble_np(&ellipsoid(), &m, NystromConfig::new(6)).unwrap().symmetrizer_residual();
    let r12 = assemble_np(&ellipsoid(), &m, NystromConfig::new(12)).unwrap().symmetrizer_residual();
    assert!(r12 < r6, "{r6:e} → {r12:e}");
}

#[test]
fn sphere_cluster_counts() {
    let m = mat(0.0, 1.0);
    let w = CountingWindow { tau_min: 0.01, tau_max: 0.1 };
    let mut above_zero = Vec::new();
    let mut below = Vec::new();
    let mut outside = Vec::new();
    for nt in [6, 10, 14] {
        let sp = np_spectrum(&assemble_np(&sphere(1.0), &m, NystromConfig::new(nt)).unwrap()).unwrap();
        let counts = cluster_counts(&sp, &m, w).unwrap();
        assert_eq!(counts.iter().map(|c| c.iota).collect::<Vec<_>>(), vec![-1, 0, 1]);
        above_zero.push(counts[1].above);
        below.push(counts.iter().map(|c| c.below).collect::<Vec<_>>());
        outside.push(sp.outside_fraction());
    }
    // Only finitely many low-index eigenvalues lie below each ω; once they
    // are resolved, refinement adds none.
    assert_eq!(below[1], below[2], "{below:?}");
    assert!(above_zero.windows(2).all(|w| w[1] > w[0]), "{above_zero:?}");
    assert!(outside.windows(2).all(|w| w[1] <= w[0]), "{outside:?}");
}

#[test]
fn window_and_radius_validation() {
    let m = mat(0.0, 1.0);
    let sys = assemble_np(&sphere(1.0), &m, NystromConfig::new(4)).unwrap();
    let sp = np_spectrum(&sys).unwrap();
    assert!(cluster_counts(&sp, &m, CountingWindow { tau_min: 0.01, tau_max: 0.2 }).is_err());
    assert!(cluster_counts(&sp, &m, CountingWindow { tau_min: 0.05, tau_max: 0.01 }).is_err());
    assert!(np_spectrum_with_radius(&sys, 0.3).is_err());
    assert!(np_spectrum_with_radius(&sys, 0.0).is_err());
}

#[test]
fn outputs_are_well_formed() {
    let m = mat(1.0, 1.0);
    let sp = np_spectrum(&assemble_np(&sphere(1.0), &m, NystromConfig::new(4)).unwrap()).unwrap();
    let csv = sp.to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("re,im"));
    let first: Vec<f64> = lines.next().unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(first[0], sp.eigenvalues[0].re);
    assert_eq!(csv.lines().count(), sp.eigenvalues.len() + 1);
    let summary = sp.summary();
    let json = serde_json::to_string(&summary).unwrap();
    let back: SpectrumSummary = serde_json::from_str(&json).unwrap();
    assert_eq!(back, summary);
    assert_eq!(summary.clusters.iter().map(|c| c.count).sum::<usize>() as f64, (1.0 - summary.outside_fraction) * summary.dimension as f64);
}

//! Assembly of the double-layer and single-layer operators.
//!
//! Every target `x_i` gets its own polar quadrature centred on its parameter
//! point: Gauss–Legendre in the geodesic angle `θ′ ∈ (0, π)` and midpoint
//! azimuths `φ′`. In these coordinates the single-layer kernel becomes
//! bounded, and the odd leading part of the double-layer kernel cancels
//! between the antipodal azimuths `φ′` and `φ′ + π`. The density is
//! represented by its spherical-harmonic hyperinterpolant on the global grid,
//! so each target row is first computed against the harmonics and then
//! mapped back to nodal values.

use crate::grid::{NystromConfig, NystromGrid};
use crate::harmonics::real_harmonics;
use crate::DiscretizationError;
use elastic_core::{kelvin_real, np_kernel_signed_real, LameMaterial, ANTISYMMETRIC_SIGN};
use geometry::Surface;
use numerics::{gauss_legendre, DenseMatR};
use rayon::prelude::*;
use std::f64::consts::PI;

type Block = [[f64; 3]; 3];

/// Harmonic-space rows `C` of an operator: entry `((3i + a), (3k + b))` is
/// the `a`-component at node `i` of the operator applied to `Y_k·e_b`.
/// Stored row-major, `3N × 3(L + 1)²`.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicRows {
    /// Number of columns `3(L + 1)²`.
    pub cols: usize,
    /// Row-major data.
    pub data: Vec<f64>,
}

impl HarmonicRows {
    fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

/// Discretized double-layer and single-layer operators on one surface.
#[derive(Clone, Debug)]
pub struct NystromSystem {
    /// Material.
    pub material: LameMaterial,
    /// Grid and harmonic table.
    pub grid: NystromGrid,
    /// Double-layer rows against the harmonics.
    pub k_rows: HarmonicRows,
    /// Double-layer operator on harmonic coefficients, `3(L + 1)²` square.
    /// Its spectrum equals the nonzero spectrum of the nodal matrix.
    pub k: DenseMatR,
    /// Single-layer operator.
    pub single_layer: SingleLayer,
}

/// Discretized single-layer operator.
#[derive(Clone, Debug)]
pub struct SingleLayer {
    /// Single-layer rows against the harmonics.
    pub rows: HarmonicRows,
    /// Operator on harmonic coefficients.
    pub operator: DenseMatR,
    /// Galerkin matrix `⟨Y_k e_a, S Y_k′ e_b⟩_{L²(Γ)}`, symmetrized.
    pub galerkin: DenseMatR,
    /// `‖G − Gᵀ‖_F / ‖G‖_F` of the Galerkin matrix before symmetrization.
    pub raw_asymmetry: f64,
}

/// Builds the double-layer and single-layer operators.
pub fn assemble_np(
    surface: &Surface,
    material: &LameMaterial,
    config: NystromConfig,
) -> Result<NystromSystem, DiscretizationError> {
    assemble_np_signed(surface, material, config, ANTISYMMETRIC_SIGN)
}

/// As [`assemble_np`] with an explicit sign on the antisymmetric kernel line.
pub fn assemble_np_signed(
    surface: &Surface,
    material: &LameMaterial,
    config: NystromConfig,
    sign: f64,
) -> Result<NystromSystem, DiscretizationError> {
    let grid = NystromGrid::new(surface, config)?;
    let mat = *material;
    let kernels: [&PointKernel; 2] = [
        &move |x, y, nu| np_kernel_signed_real(&mat, x, y, nu, sign),
        &move |x, y, _| kelvin_real(&mat, [x[0] - y[0], x[1] - y[1], x[2] - y[2]]),
    ];
    let mut rows = polar_rows(&grid, &kernels);
    let s_rows = rows.pop().expect("two kernels");
    let k_rows = rows.pop().expect("two kernels");
    let k = project(&grid, &k_rows, &grid.param_weights);
    let single_layer = finish_single_layer(&grid, s_rows);
    Ok(NystromSystem { material: mat, grid, k_rows, k, single_layer })
}

/// Builds only the single-layer operator.
pub fn assemble_single_layer(
    surface: &Surface,
    material: &LameMaterial,
    config: NystromConfig,
) -> Result<SingleLayer, DiscretizationError> {
    let grid = NystromGrid::new(surface, config)?;
    let mat = *material;
    let kernel = move |x: [f64; 3], y: [f64; 3], _: [f64; 3]| kelvin_real(&mat, [x[0] - y[0], x[1] - y[1], x[2] - y[2]]);
    let rows = polar_rows(&grid, &[&kernel]).pop().expect("one kernel");
    Ok(finish_single_layer(&grid, rows))
}

fn finish_single_layer(grid: &NystromGrid, rows: HarmonicRows) -> SingleLayer {
    let operator = project(grid, &rows, &grid.param_weights);
    let raw = project(grid, &rows, &grid.weights);
    let n = raw.n();
    let diff = raw.sub(&raw.transpose()).frobenius();
    let raw_asymmetry = diff / raw.frobenius();
    let galerkin = DenseMatR::from_fn(n, |i, j| 0.5 * (raw[(i, j)] + raw[(j, i)]));
    SingleLayer { rows, operator, galerkin, raw_asymmetry }
}

/// Kernel `(x, y, ν_y) ↦ 3×3 block`.
type PointKernel = dyn Fn([f64; 3], [f64; 3], [f64; 3]) -> Block + Sync;

/// Target-centred polar quadrature of several kernels at once, returning
/// one set of harmonic rows per kernel.
fn polar_rows(
    grid: &NystromGrid,
    kernels: &[&PointKernel],
) -> Vec<HarmonicRows> {
    let cfg = grid.config;
    let nb = grid.basis_size();
    let cols = 3 * nb;
    let (t, w) = gauss_legendre(cfg.n_polar);
    let th: Vec<(f64, f64, f64)> = t
        .iter()
        .zip(&w)
        .map(|(t, w)| {
            let a = 0.5 * PI * (t + 1.0);
            (a.sin(), a.cos(), 0.5 * PI * w * a.sin())
        })
        .collect();
    let nphi = 2 * cfg.n_polar;
    let hphi = 2.0 * PI / nphi as f64;
    let ph: Vec<(f64, f64)> = (0..nphi)
        .map(|j| {
            let a = hphi * (j as f64 + 0.5);
            (a.cos(), a.sin())
        })
        .collect();
    let per_target: Vec<Vec<Vec<f64>>> = (0..grid.len())
        .into_par_iter()
        .map(|i| {
            let e3 = grid.params[i];
            let rho = (e3[0] * e3[0] + e3[1] * e3[1]).sqrt();
            let e1 = [-e3[1] / rho, e3[0] / rho, 0.0];
            let e2 = [e3[1] * e1[2] - e3[2] * e1[1], e3[2] * e1[0] - e3[0] * e1[2], e3[0] * e1[1] - e3[1] * e1[0]];
            let (x, _, _) = grid.map.eval(e3);
            let mut out = vec![vec![0.0; 3 * cols]; kernels.len()];
            let mut y = vec![0.0; nb];
            for &(st, ct, wt) in &th {
                for &(cp, sp) in &ph {
                    let s = [
                        st * (cp * e1[0] + sp * e2[0]) + ct * e3[0],
                        st * (cp * e1[1] + sp * e2[1]) + ct * e3[1],
                        st * (cp * e1[2] + sp * e2[2]) + ct * e3[2],
                    ];
                    let (py, nu, jac) = grid.map.eval(s);
                    real_harmonics(cfg.degree(), s, &mut y);
                    let scale = wt * hphi * jac;
                    for (kern, acc) in kernels.iter().zip(out.iter_mut()) {
                        let kb = kern(x, py, nu);
                        for a in 0..3 {
                            let kr = [kb[a][0] * scale, kb[a][1] * scale, kb[a][2] * scale];
                            let row = &mut acc[a * cols..(a + 1) * cols];
                            for (chunk, &yk) in row.chunks_exact_mut(3).zip(&y) {
                                chunk[0] += kr[0] * yk;
                                chunk[1] += kr[1] * yk;
                                chunk[2] += kr[2] * yk;
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    (0..kernels.len())
        .map(|kk| {
            let mut data = Vec::with_capacity(3 * grid.len() * cols);
            for t in &per_target {
                data.extend_from_slice(&t[kk]);
            }
            HarmonicRows { cols, data }
        })
        .collect()
}

/// Left-projects harmonic rows onto the harmonics with node weights `wts`:
/// entry `((3k + a), c) = Σ_j wts_j Y_k(s_j) rows((3j + a), c)`.
///
/// With parameter weights this is the hyperinterpolated operator on
/// coefficients; with surface weights it is the Galerkin matrix.
fn project(grid: &NystromGrid, rows: &HarmonicRows, wts: &[f64]) -> DenseMatR {
    let nb = grid.basis_size();
    let cols = rows.cols;
    let data: Vec<f64> = (0..3 * nb)
        .into_par_iter()
        .flat_map_iter(|r| {
            let (k, a) = (r / 3, r % 3);
            let mut acc = vec![0.0; cols];
            for j in 0..grid.len() {
                let c = wts[j] * grid.y(j, k);
                for (o, v) in acc.iter_mut().zip(rows.row(3 * j + a)) {
                    *o += c * v;
                }
            }
            acc
        })
        .collect();
    DenseMatR::from_row_major(3 * nb, data).expect("square by construction")
}

impl NystromSystem {
    /// Number of nodes `N`.
    pub fn nodes(&self) -> usize {
        self.grid.len()
    }

    /// Nodal double-layer matrix (`3N × 3N`): entry `((3i + a), (3j + b))`
    /// maps the `b`-component of the density at node `j` to the
    /// `a`-component of the result at node `i`.
    pub fn nodal_matrix(&self) -> DenseMatR {
        nodal(&self.grid, &self.k_rows)
    }

    /// Applies the nodal double-layer matrix to a nodal vector field
    /// (`3N` values, node-major).
    pub fn apply(&self, density: &[f64]) -> Vec<f64> {
        let coeffs = hyperinterpolate(&self.grid, density);
        (0..3 * self.nodes())
            .map(|r| self.k_rows.row(r).iter().zip(&coeffs).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Surface mass matrix of the harmonics, `M_kk′ = ⟨Y_k, Y_k′⟩_{L²(Γ)}`
    /// (scalar, `(L + 1)²` square).
    pub fn mass(&self) -> DenseMatR {
        let g = &self.grid;
        let nb = g.basis_size();
        DenseMatR::from_fn(nb, |k, l| (0..g.len()).map(|j| g.weights[j] * g.y(j, k) * g.y(j, l)).sum())
    }

    /// Symmetrizer residual `‖MKS − (MKS)ᵀ‖_F / ‖MKS‖_F` with `M` the mass
    /// matrix: zero exactly when `KS` is self-adjoint in `L²(Γ)`, i.e. when
    /// `S K* = K S`.
    pub fn symmetrizer_residual(&self) -> f64 {
        let ks = self.k.matmul(&self.single_layer.operator);
        let m = self.mass();
        let nb = m.n();
        let n3 = ks.n();
        let mks = DenseMatR::from_fn(n3, |r, c| {
            let (k, a) = (r / 3, r % 3);
            (0..nb).map(|l| m[(k, l)] * ks[(3 * l + a, c)]).sum()
        });
        mks.sub(&mks.transpose()).frobenius() / mks.frobenius()
    }
}

/// Hyperinterpolation coefficients (`3(L + 1)²`, ordered `3k + b`) of a nodal
/// vector field.
pub fn hyperinterpolate(grid: &NystromGrid, density: &[f64]) -> Vec<f64> {
    let nb = grid.basis_size();
    let mut c = vec![0.0; 3 * nb];
    for j in 0..grid.len() {
        for k in 0..nb {
            let w = grid.param_weights[j] * grid.y(j, k);
            for b in 0..3 {
                c[3 * k + b] += w * density[3 * j + b];
            }
        }
    }
    c
}

fn nodal(grid: &NystromGrid, rows: &HarmonicRows) -> DenseMatR {
    let n = grid.len();
    let nb = grid.basis_size();
    let data: Vec<f64> = (0..3 * n)
        .into_par_iter()
        .flat_map_iter(|r| {
            let row = rows.row(r);
            let mut out = vec![0.0; 3 * n];
            for j in 0..n {
                let w = grid.param_weights[j];
                for b in 0..3 {
                    let mut s = 0.0;
                    for k in 0..nb {
                        s += row[3 * k + b] * grid.y(j, k);
                    }
                    out[3 * j + b] = w * s;
                }
            }
            out
        })
        .collect();
    DenseMatR::from_row_major(3 * n, data).expect("square by construction")
}

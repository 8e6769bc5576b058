//! Parameter-sphere grid, ellipsoid map and harmonic basis tables.

use crate::harmonics::{harmonic_count, real_harmonics};
use crate::DiscretizationError;
use geometry::{surface_quadrature, Orientation, Primitive, Surface, SurfacePointData};
use std::f64::consts::PI;

/// Smallest accepted number of polar-angle nodes.
pub const MIN_N_THETA: usize = 4;

/// Largest accepted dense system size `3N`.
pub const MAX_SYSTEM_SIZE: usize = 6000;

/// Extra polar-angle nodes used by the target-centred quadrature beyond the
/// global grid's.
pub const POLAR_EXTRA: usize = 16;

/// Resolution of a discretization.
///
/// The global grid has `n_theta` Gauss–Legendre nodes in `cos θ` times
/// `2·n_theta` equispaced azimuths (`N = 2·n_theta²` nodes, none on a pole).
/// Densities are represented by real spherical harmonics of degree
/// `≤ n_theta − 1`, which the grid integrates exactly in pairs. Each target
/// uses its own polar grid with `n_polar` Gauss–Legendre angles and
/// `2·n_polar` azimuths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct NystromConfig {
    /// Global polar-angle nodes.
    pub n_theta: usize,
    /// Target-centred polar-angle nodes.
    pub n_polar: usize,
}

impl NystromConfig {
    /// Explicit resolution with the default polar grid.
    pub fn new(n_theta: usize) -> Self {
        NystromConfig { n_theta, n_polar: n_theta + POLAR_EXTRA }
    }

    /// The grid whose node count `2·n_theta²` is closest to `n`.
    pub fn for_nodes(n: usize) -> Self {
        let nt = ((n as f64 / 2.0).sqrt().round() as usize).max(MIN_N_THETA);
        Self::new(nt)
    }

    /// Number of collocation nodes `N`.
    pub fn nodes(&self) -> usize {
        2 * self.n_theta * self.n_theta
    }

    /// Highest harmonic degree `L = n_theta − 1`.
    pub fn degree(&self) -> usize {
        self.n_theta - 1
    }

    /// Number of harmonics `(L + 1)²`.
    pub fn basis_size(&self) -> usize {
        harmonic_count(self.degree())
    }

    /// Checks the minimum resolution and the dense budget.
    pub fn validate(&self) -> Result<(), DiscretizationError> {
        if self.n_theta < MIN_N_THETA {
            return Err(DiscretizationError::InvalidConfig(format!(
                "n_theta = {} is below the minimum {MIN_N_THETA}",
                self.n_theta
            )));
        }
        if self.n_polar < self.n_theta {
            return Err(DiscretizationError::InvalidConfig(format!(
                "n_polar = {} must be at least n_theta = {}",
                self.n_polar, self.n_theta
            )));
        }
        let size = 3 * self.nodes();
        if size > MAX_SYSTEM_SIZE {
            return Err(DiscretizationError::BudgetExceeded { size, max: MAX_SYSTEM_SIZE });
        }
        Ok(())
    }
}

/// Linear map `s ↦ diag(a, b, c)·s` from the unit sphere onto an ellipsoid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EllipsoidMap {
    /// Semi-axes `(a, b, c)`.
    pub semiaxes: [f64; 3],
}

impl EllipsoidMap {
    /// Surface point, outward unit normal and area scaling
    /// `J = abc·|diag(a, b, c)⁻¹ s|` at the unit vector `s`.
    #[inline]
    pub fn eval(&self, s: [f64; 3]) -> ([f64; 3], [f64; 3], f64) {
        let [a, b, c] = self.semiaxes;
        let x = [a * s[0], b * s[1], c * s[2]];
        let g = [s[0] / a, s[1] / b, s[2] / c];
        let len = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt();
        let nu = [g[0] / len, g[1] / len, g[2] / len];
        (x, nu, a * b * c * len)
    }
}

/// Global collocation grid with its harmonic table.
#[derive(Clone, Debug, PartialEq)]
pub struct NystromGrid {
    /// Resolution.
    pub config: NystromConfig,
    /// The surface map.
    pub map: EllipsoidMap,
    /// Node data (positions, normals, curvatures) in grid order:
    /// polar index major, azimuth minor.
    pub nodes: Vec<SurfacePointData>,
    /// Surface area weights, one per node.
    pub weights: Vec<f64>,
    /// Parameter-sphere points, one per node.
    pub params: Vec<[f64; 3]>,
    /// Parameter-sphere weights, one per node.
    pub param_weights: Vec<f64>,
    /// `Y_k(s_j)` stored row-major as `N × (L + 1)²`.
    pub basis: Vec<f64>,
}

impl NystromGrid {
    /// Builds the grid on a single closed outer ellipsoid (or sphere).
    pub fn new(surface: &Surface, config: NystromConfig) -> Result<Self, DiscretizationError> {
        config.validate()?;
        let map = ellipsoid_map(surface)?;
        let q = surface_quadrature(surface, config.n_theta)?;
        let nphi = 2 * config.n_theta;
        let hphi = 2.0 * PI / nphi as f64;
        let (_, gw) = numerics::gauss_legendre(config.n_theta);
        let nb = config.basis_size();
        let mut params = Vec::with_capacity(q.nodes.len());
        let mut param_weights = Vec::with_capacity(q.nodes.len());
        let mut basis = vec![0.0; q.nodes.len() * nb];
        for (j, p) in q.nodes.iter().enumerate() {
            let (theta, phi) = p.chart;
            let s = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
            real_harmonics(config.degree(), s, &mut basis[j * nb..(j + 1) * nb]);
            params.push(s);
            param_weights.push(gw[j / nphi] * hphi);
        }
        Ok(NystromGrid { config, map, nodes: q.nodes, weights: q.weights, params, param_weights, basis })
    }

    /// Number of nodes `N`.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Always false: grids have at least `2·MIN_N_THETA²` nodes.
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Number of harmonics.
    pub fn basis_size(&self) -> usize {
        self.config.basis_size()
    }

    /// `Y_k(s_j)`.
    #[inline]
    pub fn y(&self, j: usize, k: usize) -> f64 {
        self.basis[j * self.basis_size() + k]
    }

    /// Index of the node one azimuthal step further on the same latitude.
    pub fn azimuthal_successor(&self, j: usize) -> usize {
        let nphi = 2 * self.config.n_theta;
        (j / nphi) * nphi + (j % nphi + 1) % nphi
    }
}

fn ellipsoid_map(surface: &Surface) -> Result<EllipsoidMap, DiscretizationError> {
    match surface.components() {
        [c] if c.orientation == Orientation::Outer => match c.primitive {
            Primitive::Ellipsoid { semiaxes } => Ok(EllipsoidMap { semiaxes }),
            other => Err(DiscretizationError::UnsupportedSurface(format!(
                "only spheres and ellipsoids are discretized (got {other:?})"
            ))),
        },
        [_] => Err(DiscretizationError::UnsupportedSurface("a lone cavity component has no exterior body".into())),
        cs => Err(DiscretizationError::UnsupportedSurface(format!(
            "multi-component surfaces are not discretized ({} components)",
            cs.len()
        ))),
    }
}

use crate::surface::{Primitive, Surface, SurfacePointData};
use crate::vec3::{norm, sub};
use crate::{GeometryError, Orientation};
use numerics::{gauss_legendre, pairwise_sum};
use std::f64::consts::PI;

/// Smallest accepted quadrature resolution.
pub const MIN_RESOLUTION: usize = 4;

/// Tolerance for the Gauss–Bonnet integer check.
const EULER_TOL: f64 = 1e-6;

/// Product quadrature over all components.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceQuadrature {
    /// Node data.
    pub nodes: Vec<SurfacePointData>,
    /// Positive area weights, one per node.
    pub weights: Vec<f64>,
}

impl SurfaceQuadrature {
    /// `Σ w·f(node)` with a fixed summation order.
    pub fn integrate(&self, f: impl Fn(&SurfacePointData) -> f64) -> f64 {
        let terms: Vec<f64> = self.nodes.iter().zip(&self.weights).map(|(p, w)| w * f(p)).collect();
        pairwise_sum(&terms)
    }

    /// Total area.
    pub fn area(&self) -> f64 {
        pairwise_sum(&self.weights)
    }
}

/// Builds the product rule at resolution `n` (≥ [`MIN_RESOLUTION`]).
///
/// * ellipsoid: `n` Gauss–Legendre nodes in `cos θ` × `2n` trapezoid nodes in `φ`
///   (no node on a pole);
/// * torus: `n` trapezoid nodes in the tube angle × `2n` in the ring angle;
/// * cylinder patch: `2n` trapezoid nodes in `φ` × `n` Gauss–Legendre nodes in `z`.
pub fn surface_quadrature(surface: &Surface, n: usize) -> Result<SurfaceQuadrature, GeometryError> {
    if n < MIN_RESOLUTION {
        return Err(GeometryError::ResolutionTooLow { got: n, min: MIN_RESOLUTION });
    }
    let (gx, gw) = gauss_legendre(n);
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    let nphi = 2 * n;
    let hphi = 2.0 * PI / nphi as f64;
    for (ci, comp) in surface.components().iter().enumerate() {
        match comp.primitive {
            Primitive::Ellipsoid { .. } => {
                for (t, w) in gx.iter().zip(&gw) {
                    let theta = t.acos();
                    let sin_theta = (1.0 - t * t).sqrt();
                    for j in 0..nphi {
                        let p = surface.point_data(ci, theta, hphi * j as f64)?;
                        weights.push(w * hphi * p.area_element / sin_theta);
                        nodes.push(p);
                    }
                }
            }
            Primitive::Torus { .. } => {
                let ha = 2.0 * PI / n as f64;
                for i in 0..n {
                    for j in 0..nphi {
                        let p = surface.point_data(ci, ha * i as f64, hphi * j as f64)?;
                        weights.push(ha * hphi * p.area_element);
                        nodes.push(p);
                    }
                }
            }
            Primitive::CylinderPatch { length, .. } => {
                for j in 0..nphi {
                    for (t, w) in gx.iter().zip(&gw) {
                        let p = surface.point_data(ci, hphi * j as f64, 0.5 * length * t)?;
                        weights.push(0.5 * length * w * hphi * p.area_element);
                        nodes.push(p);
                    }
                }
            }
        }
    }
    Ok(SurfaceQuadrature { nodes, weights })
}

/// `∫ ((κ₁ + κ₂)/2)² dS` over all components.
pub fn willmore_energy(surface: &Surface, n: usize) -> Result<f64, GeometryError> {
    let q = surface_quadrature(surface, n)?;
    Ok(q.integrate(|p| {
        let h = 0.5 * (p.kappa1 + p.kappa2);
        h * h
    }))
}

/// Gauss–Bonnet Euler characteristic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EulerCharacteristic {
    /// `(2π)⁻¹ ∫ κ₁κ₂ dS`.
    pub value: f64,
    /// Nearest integer.
    pub integer: i64,
}

/// `(2π)⁻¹ ∫ κ₁κ₂ dS` summed over components; fails with a diagnostic
/// unless it is within 1e−6 of an integer.
pub fn euler_characteristic_gb(surface: &Surface, n: usize) -> Result<EulerCharacteristic, GeometryError> {
    if let Some(ci) = surface.components().iter().position(|c| !c.primitive.is_closed()) {
        return Err(GeometryError::OpenSurface { component: ci });
    }
    let q = surface_quadrature(surface, n)?;
    let value = q.integrate(|p| p.kappa1 * p.kappa2) / (2.0 * PI);
    let integer = value.round();
    let deviation = (value - integer).abs();
    if deviation > EULER_TOL {
        return Err(GeometryError::NonIntegerEuler { value, deviation });
    }
    Ok(EulerCharacteristic { value, integer: integer as i64 })
}

/// Result of the diameter/curvature probe.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConvexityReport {
    /// Largest node-to-node distance.
    pub diameter: f64,
    /// The two nodes realizing it.
    pub endpoints: [SurfacePointData; 2],
    /// The bound `−1/d` both principal curvatures must respect.
    pub bound: f64,
    /// Whether `κ₂ ≤ −1/d + tolerance` at both endpoints.
    pub holds: bool,
}

/// Finds the farthest pair of quadrature nodes and checks that both
/// principal curvatures at each endpoint are at most `−1/d`.
pub fn diameter_convexity_probe(surface: &Surface, n: usize) -> Result<ConvexityReport, GeometryError> {
    match surface.components() {
        [c] if c.primitive.is_closed() && c.orientation == Orientation::Outer => {}
        [_] => {
            return Err(GeometryError::NotSingleClosed { reason: "component is open or a cavity".into() })
        }
        cs => {
            return Err(GeometryError::NotSingleClosed { reason: format!("surface has {} components", cs.len()) })
        }
    }
    let q = surface_quadrature(surface, n)?;
    let mut best = (0.0, 0, 0);
    for i in 0..q.nodes.len() {
        for j in (i + 1)..q.nodes.len() {
            let d = norm(sub(q.nodes[i].position, q.nodes[j].position));
            if d > best.0 {
                best = (d, i, j);
            }
        }
    }
    let (diameter, i, j) = best;
    let bound = -1.0 / diameter;
    let tol = 1e-9 / diameter;
    let endpoints = [q.nodes[i], q.nodes[j]];
    let holds = endpoints.iter().all(|p| p.kappa1 <= bound + tol && p.kappa2 <= bound + tol);
    Ok(ConvexityReport { diameter, endpoints, bound, holds })
}

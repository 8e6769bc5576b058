use crate::spec::{Orientation, SurfaceSpec};
use crate::vec3::{add, cross, dot, norm, scale, sub, V3};
use crate::GeometryError;

/// A single smooth chart-parametrized surface.
///
/// Chart coordinates `(u, v)`:
/// * ellipsoid/sphere: `u = θ ∈ (0, π)` polar angle, `v = φ` azimuth;
/// * torus: `u = α` tube angle, `v = β` ring angle (both periodic);
/// * cylinder patch: `u = φ` azimuth, `v = z ∈ [−length/2, length/2]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Primitive {
    /// `(a sin θ cos φ, b sin θ sin φ, c cos θ)`; a sphere when `a = b = c`.
    Ellipsoid {
        /// Semi-axes.
        semiaxes: [f64; 3],
    },
    /// `((R + r cos α) cos β, (R + r cos α) sin β, r sin α)`.
    Torus {
        /// R.
        major: f64,
        /// r.
        minor: f64,
    },
    /// `(ρ cos φ, ρ sin φ, z)`.
    CylinderPatch {
        /// ρ.
        radius: f64,
        /// Axial length.
        length: f64,
    },
}

/// Position and first/second partial derivatives of a chart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChartDerivatives {
    /// r(u, v).
    pub r: V3,
    /// ∂r/∂u.
    pub r_u: V3,
    /// ∂r/∂v.
    pub r_v: V3,
    /// ∂²r/∂u².
    pub r_uu: V3,
    /// ∂²r/∂u∂v.
    pub r_uv: V3,
    /// ∂²r/∂v².
    pub r_vv: V3,
}

impl Primitive {
    /// Whether the primitive is a closed surface.
    pub fn is_closed(&self) -> bool {
        !matches!(self, Primitive::CylinderPatch { .. })
    }

    /// Sign that turns `r_u × r_v` into the geometric outward normal.
    fn chart_orientation(&self) -> f64 {
        match self {
            Primitive::Ellipsoid { .. } | Primitive::CylinderPatch { .. } => 1.0,
            Primitive::Torus { .. } => -1.0,
        }
    }

    /// Largest length scale, used to make tolerances relative.
    pub fn size(&self) -> f64 {
        match *self {
            Primitive::Ellipsoid { semiaxes } => semiaxes.iter().fold(0.0f64, |m, a| m.max(*a)),
            Primitive::Torus { major, minor } => major + minor,
            Primitive::CylinderPatch { radius, length } => radius.max(length),
        }
    }

    /// Whether `(u, v)` lies in the chart domain.
    pub fn in_domain(&self, u: f64, v: f64) -> bool {
        if !u.is_finite() || !v.is_finite() {
            return false;
        }
        match *self {
            Primitive::Ellipsoid { .. } => u > 0.0 && u < std::f64::consts::PI,
            Primitive::Torus { .. } => true,
            Primitive::CylinderPatch { length, .. } => v.abs() <= 0.5 * length,
        }
    }

    /// Analytic chart derivatives (no domain check).
    pub fn derivatives(&self, u: f64, v: f64) -> ChartDerivatives {
        match *self {
            Primitive::Ellipsoid { semiaxes: [a, b, c] } => {
                let (st, ct) = u.sin_cos();
                let (sp, cp) = v.sin_cos();
                ChartDerivatives {
                    r: [a * st * cp, b * st * sp, c * ct],
                    r_u: [a * ct * cp, b * ct * sp, -c * st],
                    r_v: [-a * st * sp, b * st * cp, 0.0],
                    r_uu: [-a * st * cp, -b * st * sp, -c * ct],
                    r_uv: [-a * ct * sp, b * ct * cp, 0.0],
                    r_vv: [-a * st * cp, -b * st * sp, 0.0],
                }
            }
            Primitive::Torus { major, minor } => {
                let (sa, ca) = u.sin_cos();
                let (sb, cb) = v.sin_cos();
                let w = major + minor * ca;
                ChartDerivatives {
                    r: [w * cb, w * sb, minor * sa],
                    r_u: [-minor * sa * cb, -minor * sa * sb, minor * ca],
                    r_v: [-w * sb, w * cb, 0.0],
                    r_uu: [-minor * ca * cb, -minor * ca * sb, -minor * sa],
                    r_uv: [minor * sa * sb, -minor * sa * cb, 0.0],
                    r_vv: [-w * cb, -w * sb, 0.0],
                }
            }
            Primitive::CylinderPatch { radius, .. } => {
                let (sp, cp) = u.sin_cos();
                ChartDerivatives {
                    r: [radius * cp, radius * sp, v],
                    r_u: [-radius * sp, radius * cp, 0.0],
                    r_v: [0.0, 0.0, 1.0],
                    r_uu: [-radius * cp, -radius * sp, 0.0],
                    r_uv: [0.0; 3],
                    r_vv: [0.0; 3],
                }
            }
        }
    }

    fn from_spec(spec: &SurfaceSpec) -> Option<Primitive> {
        match *spec {
            SurfaceSpec::Sphere { radius } => Some(Primitive::Ellipsoid { semiaxes: [radius; 3] }),
            SurfaceSpec::Ellipsoid { semiaxes } => Some(Primitive::Ellipsoid { semiaxes }),
            SurfaceSpec::Torus { major, minor } => Some(Primitive::Torus { major, minor }),
            SurfaceSpec::CylinderPatch { radius, length } => Some(Primitive::CylinderPatch { radius, length }),
            SurfaceSpec::Union { .. } => None,
        }
    }
}

/// A primitive together with the side the body lies on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Component {
    /// Geometry of the component.
    pub primitive: Primitive,
    /// Body side.
    pub orientation: Orientation,
}

/// Pointwise geometric data at a chart point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurfacePointData {
    /// Component the point belongs to.
    pub component: usize,
    /// Chart coordinates.
    pub chart: (f64, f64),
    /// Position in R³.
    pub position: V3,
    /// Unit normal pointing out of the elastic body.
    pub outward_normal: V3,
    /// Smaller principal curvature (w.r.t. `outward_normal`).
    pub kappa1: f64,
    /// Larger principal curvature.
    pub kappa2: f64,
    /// Orthonormal principal directions for `kappa1`, `kappa2`.
    pub principal_dirs: [V3; 2],
    /// `|r_u × r_v|`, the area element of the chart.
    pub area_element: f64,
}

/// A validated surface: one or more components with analytic charts.
///
/// Immutable after construction; evaluation is pure and thread-safe.
#[derive(Clone, Debug, PartialEq)]
pub struct Surface {
    spec: SurfaceSpec,
    components: Vec<Component>,
}

impl Surface {
    /// Validates `spec` and builds the charts.
    pub fn new(spec: SurfaceSpec) -> Result<Self, GeometryError> {
        spec.validate()?;
        let components = match &spec {
            SurfaceSpec::Union { components } => components
                .iter()
                .map(|c| Component {
                    primitive: Primitive::from_spec(&c.surface).expect("validated: no nested unions"),
                    orientation: c.orientation,
                })
                .collect(),
            single => vec![Component {
                primitive: Primitive::from_spec(single).expect("not a union"),
                orientation: Orientation::Outer,
            }],
        };
        Ok(Surface { spec, components })
    }

    /// Parses and validates the JSON form.
    pub fn from_json(text: &str) -> Result<Self, GeometryError> {
        Surface::new(SurfaceSpec::from_json(text)?)
    }

    /// The specification this surface was built from.
    pub fn spec(&self) -> &SurfaceSpec {
        &self.spec
    }

    /// All components.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    fn component(&self, index: usize) -> Result<&Component, GeometryError> {
        self.components.get(index).ok_or(GeometryError::NoSuchComponent {
            index,
            count: self.components.len(),
        })
    }

    /// Chart derivatives of component `index` at `(u, v)`.
    pub fn derivatives(&self, index: usize, u: f64, v: f64) -> Result<ChartDerivatives, GeometryError> {
        let c = self.component(index)?;
        if !c.primitive.in_domain(u, v) {
            return Err(GeometryError::ChartDomain { component: index, u, v });
        }
        Ok(c.primitive.derivatives(u, v))
    }

    /// Position of component `index` at `(u, v)`.
    pub fn position(&self, index: usize, u: f64, v: f64) -> Result<V3, GeometryError> {
        Ok(self.derivatives(index, u, v)?.r)
    }

    /// Normal, principal curvatures and directions at a chart point.
    ///
    /// The curvatures are the eigenvalues of the shape operator `I⁻¹ II`
    /// with `II` taken against the body-outward normal, sorted ascending.
    /// At umbilics the directions are `r_u/|r_u|` and its in-plane rotation.
    pub fn point_data(&self, index: usize, u: f64, v: f64) -> Result<SurfacePointData, GeometryError> {
        let comp = self.component(index)?;
        let d = self.derivatives(index, u, v)?;
        let e = dot(d.r_u, d.r_u);
        let f = dot(d.r_u, d.r_v);
        let g = dot(d.r_v, d.r_v);
        let det = e * g - f * f;
        let size = comp.primitive.size();
        if !(det > 1e-24 * size.powi(4)) {
            return Err(GeometryError::DegenerateMetric { det });
        }
        let cr = cross(d.r_u, d.r_v);
        let area_element = norm(cr);
        let mut n = scale(cr, comp.primitive.chart_orientation() / area_element);
        if comp.orientation == Orientation::Cavity {
            n = scale(n, -1.0);
        }
        let l = dot(d.r_uu, n);
        let m = dot(d.r_uv, n);
        let nn = dot(d.r_vv, n);

        // Orthonormal tangent frame and its chart coordinates.
        let e1 = scale(d.r_u, 1.0 / e.sqrt());
        let e2 = cross(n, e1);
        let coords = |t: V3| {
            let a = dot(t, d.r_u);
            let b = dot(t, d.r_v);
            [(g * a - f * b) / det, (e * b - f * a) / det]
        };
        let c1 = coords(e1);
        let c2 = coords(e2);
        let second = |x: [f64; 2], y: [f64; 2]| x[0] * (l * y[0] + m * y[1]) + x[1] * (m * y[0] + nn * y[1]);
        let w11 = second(c1, c1);
        let w12 = second(c1, c2);
        let w22 = second(c2, c2);

        let mean = 0.5 * (w11 + w22);
        let half = 0.5 * (w11 - w22);
        let rad = half.hypot(w12);
        let (kappa1, kappa2) = (mean - rad, mean + rad);
        let umbilic = rad <= 1e-13 * (w11.abs() + w22.abs() + w12.abs());
        let principal_dirs = if umbilic {
            [e1, e2]
        } else {
            let (s, c) = (0.5 * w12.atan2(half)).sin_cos();
            // (cos ψ, sin ψ) spans the κ₂ eigenspace; its rotation spans κ₁.
            [sub(scale(e2, c), scale(e1, s)), add(scale(e1, c), scale(e2, s))]
        };
        Ok(SurfacePointData {
            component: index,
            chart: (u, v),
            position: d.r,
            outward_normal: n,
            kappa1,
            kappa2,
            principal_dirs,
            area_element,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_sphere_curvatures() {
        let s = Surface::new(SurfaceSpec::Sphere { radius: 1.0 }).unwrap();
        for (u, v) in [(0.3, 0.1), (1.5, 4.0), (2.9, -1.0)] {
            let p = s.point_data(0, u, v).unwrap();
            assert!((p.kappa1 + 1.0).abs() < 1e-14 && (p.kappa2 + 1.0).abs() < 1e-14);
            assert!((dot(p.outward_normal, p.position) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn pole_is_rejected() {
        let s = Surface::new(SurfaceSpec::Sphere { radius: 1.0 }).unwrap();
        assert!(matches!(s.point_data(0, 0.0, 0.0), Err(GeometryError::ChartDomain { .. })));
        assert!(matches!(s.point_data(1, 1.0, 0.0), Err(GeometryError::NoSuchComponent { .. })));
    }
}

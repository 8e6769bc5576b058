//! Parametrized closed surfaces and their pointwise curvature data.
//!
//! * [`SurfaceSpec`] — JSON-serializable description: sphere, ellipsoid,
//!   torus, open cylinder patch, or a union of components, each either the
//!   outer boundary or a cavity.
//! * [`Surface`] — validated charts with analytic first and second
//!   derivatives. [`Surface::point_data`] computes the principal curvatures
//!   from the fundamental forms.
//! * [`surface_quadrature`], [`willmore_energy`], [`euler_characteristic_gb`],
//!   [`diameter_convexity_probe`] — integrals over the surface.
//!
//! Sign convention: curvatures are taken with respect to the normal that
//! points out of the elastic body, so they are negative where the body is
//! convex. On a cavity that normal points into the cavity.

mod error;
mod integrals;
mod spec;
mod surface;
mod vec3;

pub use error::GeometryError;
pub use integrals::{
    diameter_convexity_probe, euler_characteristic_gb, surface_quadrature, willmore_energy,
    ConvexityReport, EulerCharacteristic, SurfaceQuadrature, MIN_RESOLUTION,
};
pub use spec::{ComponentSpec, Orientation, SurfaceSpec};
pub use surface::{ChartDerivatives, Component, Primitive, Surface, SurfacePointData};

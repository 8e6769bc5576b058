use thiserror::Error;

/// Failures while building or evaluating surfaces.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    /// A size parameter violates its constraint.
    #[error("invalid surface parameter: {constraint}")]
    InvalidParameter {
        /// Human-readable constraint, e.g. `"torus requires R > r"`.
        constraint: String,
    },
    /// Chart coordinates outside the chart domain (e.g. at a pole).
    #[error("chart coordinates ({u}, {v}) are outside the domain of component {component}")]
    ChartDomain {
        /// Component index.
        component: usize,
        /// First chart coordinate.
        u: f64,
        /// Second chart coordinate.
        v: f64,
    },
    /// The first fundamental form is singular at the requested point.
    #[error("degenerate metric (det = {det:e})")]
    DegenerateMetric {
        /// Determinant of the first fundamental form.
        det: f64,
    },
    /// Component index out of range.
    #[error("component {index} does not exist (surface has {count})")]
    NoSuchComponent {
        /// Requested index.
        index: usize,
        /// Number of components.
        count: usize,
    },
    /// Quadrature resolution below the supported minimum.
    #[error("resolution {got} is below the minimum {min}")]
    ResolutionTooLow {
        /// Requested resolution.
        got: usize,
        /// Minimum resolution.
        min: usize,
    },
    /// The Gauss–Bonnet integral is not within tolerance of an integer.
    #[error("Gauss-Bonnet integral {value} is {deviation:e} from the nearest integer; quadrature too coarse")]
    NonIntegerEuler {
        /// Computed value.
        value: f64,
        /// Distance to the nearest integer.
        deviation: f64,
    },
    /// Operation requires a single closed component.
    #[error("operation requires a single closed component: {reason}")]
    NotSingleClosed {
        /// Why the surface is unsuitable.
        reason: String,
    },
    /// Operation needs closed components but the surface has an open one.
    #[error("component {component} is not a closed surface")]
    OpenSurface {
        /// Offending component.
        component: usize,
    },
    /// Malformed JSON description.
    #[error("surface JSON: {0}")]
    Json(String),
}

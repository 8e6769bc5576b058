use std::f64::consts::FRAC_PI_2;

/// Unit covector `ξ = (cos θ, sin θ)` in the tangent plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CircleDirection {
    /// Angle θ measured from the first coordinate axis.
    pub theta: f64,
    /// φ₁ = cos θ.
    pub phi1: f64,
    /// φ₂ = sin θ.
    pub phi2: f64,
}

impl CircleDirection {
    /// Direction at angle θ.
    pub fn new(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        CircleDirection { theta, phi1: c, phi2: s }
    }

    /// The mirrored direction θ̂ = π/2 − θ, i.e. (φ₁, φ₂) ↦ (φ₂, φ₁).
    pub fn swapped(&self) -> Self {
        CircleDirection { theta: FRAC_PI_2 - self.theta, phi1: self.phi2, phi2: self.phi1 }
    }

    /// `θ_k = 2πk/n`, the trapezoid nodes on the circle.
    pub fn uniform(n: usize) -> Vec<CircleDirection> {
        (0..n).map(|k| CircleDirection::new(2.0 * std::f64::consts::PI * k as f64 / n as f64)).collect()
    }
}

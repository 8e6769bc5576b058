use crate::ElasticError;
use std::f64::consts::PI;
use std::fmt;

/// Index ι ∈ {−1, 0, +1} of an essential-spectrum point ω_ι = ι·𝕜.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Iota {
    /// ω = −𝕜
    Minus,
    /// ω = 0
    Zero,
    /// ω = +𝕜
    Plus,
}

impl Iota {
    /// All three points, in ascending order of ω.
    pub const ALL: [Iota; 3] = [Iota::Minus, Iota::Zero, Iota::Plus];

    /// The integer ι.
    pub fn value(self) -> i32 {
        match self {
            Iota::Minus => -1,
            Iota::Zero => 0,
            Iota::Plus => 1,
        }
    }

    /// Parses −1, 0 or 1.
    pub fn from_value(v: i32) -> Option<Iota> {
        match v {
            -1 => Some(Iota::Minus),
            0 => Some(Iota::Zero),
            1 => Some(Iota::Plus),
            _ => None,
        }
    }
}

impl fmt::Display for Iota {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Homogeneous isotropic elastic material.
///
/// Stores the Lamé constants and the derived scalars:
/// * `kappa` 𝕜 = μ / (2(2μ+λ)),
/// * `em` 𝕞 = (λ+μ) / (2(λ+2μ)) = ½ − 𝕜,
/// * `lambda_prime` λ′ = (λ+3μ) / (4πμ(λ+2μ)),
/// * `mu_prime` μ′ = (λ+μ) / (4πμ(λ+2μ)).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LameMaterial {
    /// First Lamé constant λ.
    pub lambda: f64,
    /// Shear modulus μ.
    pub mu: f64,
    /// 𝕜
    pub kappa: f64,
    /// 𝕞
    pub em: f64,
    /// λ′
    pub lambda_prime: f64,
    /// μ′
    pub mu_prime: f64,
}

impl LameMaterial {
    /// Validates `μ > 0`, `λ + 2μ > 0` and derives all constants.
    pub fn new(lambda: f64, mu: f64) -> Result<Self, ElasticError> {
        if !lambda.is_finite() || !mu.is_finite() {
            return Err(ElasticError::NonFinite { lambda, mu });
        }
        if mu <= 0.0 {
            return Err(ElasticError::NonPositiveShear { mu });
        }
        let lp2m = lambda + 2.0 * mu;
        if lp2m <= 0.0 {
            return Err(ElasticError::NotElliptic { value: lp2m });
        }
        let kappa = mu / (2.0 * lp2m);
        Ok(LameMaterial {
            lambda,
            mu,
            kappa,
            em: 0.5 - kappa,
            lambda_prime: (lambda + 3.0 * mu) / (4.0 * PI * mu * lp2m),
            mu_prime: (lambda + mu) / (4.0 * PI * mu * lp2m),
        })
    }

    /// Essential-spectrum point ω_ι = ι·𝕜.
    pub fn omega(&self, iota: Iota) -> f64 {
        iota.value() as f64 * self.kappa
    }
}

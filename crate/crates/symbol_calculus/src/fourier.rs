//! Exact Fourier transforms of the homogeneous kernels `y₁^a y₂^b / (2π|y|^p)`.
//!
//! With the convention `F[f](ξ) = ∫ f(y) e^{+i y·ξ} dy` one has
//! `F[(2π)⁻¹|y|^{−p}] = c_p |ξ|^{p−2}` (`c₁ = 1`, `c₃ = −1`, `c₅ = 1/9`), and
//! multiplication by `y^α` becomes `(−i∂_ξ)^α`. Derivatives of `|ξ|^k` are
//! taken symbolically with rational coefficients and the result is reduced
//! to a single homogeneous polynomial over a power of `|ξ|`.

use crate::SymbolError;
use num_complex::Complex;
use num_rational::Rational64;
use std::collections::BTreeMap;
use std::fmt;

/// Complex number with rational parts.
pub type CRational = Complex<Rational64>;

fn rat(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn czero() -> CRational {
    Complex::new(rat(0), rat(0))
}

fn cis_power(k: u32, negative: bool) -> CRational {
    // (±i)^k
    let base = match k % 4 {
        0 => Complex::new(rat(1), rat(0)),
        1 => Complex::new(rat(0), rat(1)),
        2 => Complex::new(rat(-1), rat(0)),
        _ => Complex::new(rat(0), rat(-1)),
    };
    if negative && k % 2 == 1 {
        -base
    } else {
        base
    }
}

/// Homogeneous polynomial `Σ c_{ij} φ₁^i φ₂^j` with complex rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactPoly {
    terms: BTreeMap<(u32, u32), CRational>,
}

impl ExactPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        ExactPoly::default()
    }

    /// A single monomial `c φ₁^i φ₂^j`.
    pub fn monomial(c: CRational, i: u32, j: u32) -> Self {
        let mut p = ExactPoly::zero();
        p.add_term(c, i, j);
        p
    }

    fn add_term(&mut self, c: CRational, i: u32, j: u32) {
        let e = self.terms.entry((i, j)).or_insert_with(czero);
        *e += c;
        if *e == czero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Sum of two polynomials.
    pub fn plus(&self, other: &ExactPoly) -> ExactPoly {
        let mut out = self.clone();
        for (&(i, j), &c) in &other.terms {
            out.add_term(c, i, j);
        }
        out
    }

    /// Product with a scalar.
    pub fn scaled(&self, s: CRational) -> ExactPoly {
        let mut out = ExactPoly::zero();
        for (&(i, j), &c) in &self.terms {
            out.add_term(c * s, i, j);
        }
        out
    }

    /// Whether every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponents, coefficient)` pairs in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), CRational)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, *v))
    }

    /// Numerical value at `(φ₁, φ₂)`.
    pub fn eval(&self, phi1: f64, phi2: f64) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (&(i, j), c) in &self.terms {
            let m = phi1.powi(i as i32) * phi2.powi(j as i32);
            acc += num_complex::Complex64::new(r2f(c.re) * m, r2f(c.im) * m);
        }
        acc
    }
}

pub(crate) fn r2f(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn fmt_rational(r: Rational64) -> String {
    if *r.denom() == 1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats a complex rational coefficient, e.g. `-1/2`, `i`, `(1+2i)`.
pub fn fmt_crational(c: CRational) -> String {
    let zero = rat(0);
    match (c.re == zero, c.im == zero) {
        (_, true) => fmt_rational(c.re),
        (true, false) => {
            if c.im == rat(1) {
                "i".into()
            } else if c.im == rat(-1) {
                "-i".into()
            } else {
                format!("{}i", fmt_rational(c.im))
            }
        }
        (false, false) => format!("({}{:+}i)", fmt_rational(c.re), r2f(c.im)),
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), &c) in self.terms.iter().rev() {
            let mut coef = fmt_crational(c);
            let mono = {
                let mut s = String::new();
                for (e, name) in [(i, "φ1"), (j, "φ2")] {
                    match e {
                        0 => {}
                        1 => s.push_str(name),
                        _ => s.push_str(&format!("{name}^{e}")),
                    }
                }
                s
            };
            if !mono.is_empty() {
                if coef == "1" {
                    coef.clear();
                } else if coef == "-1" {
                    coef = "-".into();
                }
            }
            if !first && !coef.starts_with('-') {
                write!(f, " + ")?;
            } else if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{coef}{mono}")?;
        }
        Ok(())
    }
}

/// `F[y₁^a y₂^b / (2π|y|^p)] = poly(ξ) · |ξ|^{r_power}`, exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactFourier {
    /// Monomial exponents (a, b) and denominator power p.
    pub triple: (u32, u32, u32),
    /// Homogeneous numerator polynomial in (ξ₁, ξ₂).
    pub poly: ExactPoly,
    /// Power of |ξ| multiplying the polynomial.
    pub r_power: i32,
}

impl ExactFourier {
    /// Value on the unit circle.
    pub fn eval_unit(&self, phi1: f64, phi2: f64) -> num_complex::Complex64 {
        self.poly.eval(phi1, phi2)
    }

    /// Homogeneity degree `deg(poly) + r_power` (equals `a + b − p + 2`).
    pub fn degree(&self) -> i32 {
        let d = self.poly.terms().next().map(|((i, j), _)| (i + j) as i32).unwrap_or(0);
        d + self.r_power
    }
}

impl fmt::Display for ExactFourier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·|ξ|^{}", self.poly.to_string().replace('φ', "ξ"), self.r_power)
    }
}

/// Triples `(a, b, p)` supported by [`ft_homogeneous`].
pub const SUPPORTED_TRIPLES: [(u32, u32, u32); 9] =
    [(2, 0, 3), (1, 1, 3), (0, 2, 3), (1, 0, 3), (0, 1, 3), (4, 0, 5), (3, 1, 5), (2, 2, 5), (0, 0, 1)];

/// A term `c ξ₁^i ξ₂^j |ξ|^k` during symbolic differentiation.
#[derive(Clone, Copy)]
struct RTerm {
    c: CRational,
    i: u32,
    j: u32,
    k: i32,
}

fn differentiate(terms: &[RTerm], axis: usize) -> Vec<RTerm> {
    let mut out = Vec::new();
    for t in terms {
        let (e, other) = if axis == 0 { (t.i, t.j) } else { (t.j, t.i) };
        let build = |c: CRational, e_new: u32, k: i32| {
            if axis == 0 {
                RTerm { c, i: e_new, j: other, k }
            } else {
                RTerm { c, i: other, j: e_new, k }
            }
        };
        // ∂(ξ^e) · |ξ|^k
        if e > 0 {
            out.push(build(t.c * Complex::new(rat(e as i64), rat(0)), e - 1, t.k));
        }
        // ξ^e · ∂|ξ|^k = ξ^e · k ξ_axis |ξ|^{k−2}
        if t.k != 0 {
            out.push(build(t.c * Complex::new(rat(t.k as i64), rat(0)), e + 1, t.k - 2));
        }
    }
    out
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, m| acc * (n - m) as i64 / (m + 1) as i64)
}

/// Exact Fourier transform of `y₁^a y₂^b / (2π|y|^p)` as a distribution on R².
pub fn ft_homogeneous(a: u32, b: u32, p: u32) -> Result<ExactFourier, SymbolError> {
    if !SUPPORTED_TRIPLES.contains(&(a, b, p)) {
        return Err(SymbolError::UnsupportedMonomial { a, b, p });
    }
    let c_p = match p {
        1 => Rational64::from_integer(1),
        3 => Rational64::from_integer(-1),
        _ => Rational64::new(1, 9),
    };
    let mut terms = vec![RTerm { c: Complex::new(c_p, rat(0)), i: 0, j: 0, k: p as i32 - 2 }];
    for _ in 0..a {
        terms = differentiate(&terms, 0);
    }
    for _ in 0..b {
        terms = differentiate(&terms, 1);
    }
    let prefactor = cis_power(a + b, true);
    // Bring every term to the smallest power of |ξ| using |ξ|² = ξ₁² + ξ₂².
    let kmin = terms.iter().map(|t| t.k).min().unwrap_or(p as i32 - 2);
    let mut poly = ExactPoly::zero();
    for t in &terms {
        let m = ((t.k - kmin) / 2) as u32;
        for s in 0..=m {
            let c = t.c * prefactor * Complex::new(rat(binomial(m, s)), rat(0));
            poly.add_term(c, t.i + 2 * s, t.j + 2 * (m - s));
        }
    }
    Ok(ExactFourier { triple: (a, b, p), poly, r_power: kmin })
}

//! Comparison of re-derived symbols against alternative closed forms.
//!
//! Each comparison samples both forms on the unit circle, entry by entry and
//! per material scalar, and classifies the relation as agreement, a constant
//! factor (sign flips included), a term present on one side only, or a
//! different angular shape.

use crate::fourier::{ft_homogeneous, CRational, ExactPoly};
use crate::subsymbol::{derive_cylinder_symbol, ExactSymbolMatrix};
use crate::{k0, CircleDirection, SymbolError};
use elastic_core::LameMaterial;
use num_complex::Complex;
use num_rational::Rational64;
use numerics::Complex64;
use serde::Serialize;
use std::fmt;

/// Relation between a derived and a reference term.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FindingKind {
    /// Identical on the circle.
    Agrees,
    /// Reference equals −1 × derived.
    SignFlip,
    /// Reference equals `ratio` × derived for a real constant ratio ≠ ±1.
    Factor {
        /// Reference / derived.
        ratio: f64,
    },
    /// Reference equals a non-real constant multiple of derived.
    ComplexFactor {
        /// Real part of the ratio.
        re: f64,
        /// Imaginary part of the ratio.
        im: f64,
    },
    /// Present only in the reference.
    Spurious,
    /// Present only in the derived form.
    Missing,
    /// Not proportional.
    Shape,
}

impl FindingKind {
    /// Whether this finding is a discrepancy.
    pub fn is_mismatch(&self) -> bool {
        !matches!(self, FindingKind::Agrees)
    }
}

/// One compared term.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Finding {
    /// Entry and material part, e.g. `"(1,2) 𝕞"`.
    pub location: String,
    /// Classification.
    pub kind: FindingKind,
    /// Derived term (exact).
    pub derived: String,
    /// Reference term as written.
    pub reference: String,
}

/// A group of findings for one object.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditSection {
    /// Short identifier.
    pub name: String,
    /// What is being compared.
    pub description: String,
    /// Findings for every nonzero term on either side.
    pub findings: Vec<Finding>,
}

impl AuditSection {
    /// Number of discrepancies.
    pub fn mismatches(&self) -> usize {
        self.findings.iter().filter(|f| f.kind.is_mismatch()).count()
    }
}

/// Full audit.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AuditReport {
    /// All sections.
    pub sections: Vec<AuditSection>,
}

impl AuditReport {
    /// Total number of discrepancies.
    pub fn mismatches(&self) -> usize {
        self.sections.iter().map(|s| s.mismatches()).sum()
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sections {
            writeln!(f, "== {} — {} ({} mismatches)", s.name, s.description, s.mismatches())?;
            for x in &s.findings {
                let tag = match x.kind {
                    FindingKind::Agrees => "ok".to_string(),
                    FindingKind::SignFlip => "SIGN".to_string(),
                    FindingKind::Factor { ratio } => format!("FACTOR {ratio:.6}"),
                    FindingKind::ComplexFactor { re, im } => format!("FACTOR ({re}{im:+}i)"),
                    FindingKind::Spurious => "SPURIOUS".to_string(),
                    FindingKind::Missing => "MISSING".to_string(),
                    FindingKind::Shape => "SHAPE".to_string(),
                };
                writeln!(f, "  {:<10} {:<9} derived: {:<32} reference: {}", x.location, tag, x.derived, x.reference)?;
            }
        }
        Ok(())
    }
}

const SAMPLES: usize = 24;
const ZERO_TOL: f64 = 1e-13;

fn samples() -> Vec<CircleDirection> {
    (0..SAMPLES).map(|k| CircleDirection::new(0.1 + 2.0 * std::f64::consts::PI * k as f64 / SAMPLES as f64)).collect()
}

/// Classifies `reference` against `derived` from values on the circle.
pub fn classify(derived: &[Complex64], reference: &[Complex64]) -> FindingKind {
    let dmax = derived.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let rmax = reference.iter().map(|z| z.norm()).fold(0.0, f64::max);
    match (dmax <= ZERO_TOL, rmax <= ZERO_TOL) {
        (true, true) => return FindingKind::Agrees,
        (true, false) => return FindingKind::Spurious,
        (false, true) => return FindingKind::Missing,
        _ => {}
    }
    let k = (0..derived.len()).max_by(|&a, &b| derived[a].norm().total_cmp(&derived[b].norm())).unwrap_or(0);
    let ratio = reference[k] / derived[k];
    let fits = derived.iter().zip(reference).all(|(d, r)| (r - ratio * d).norm() <= 1e-10 * rmax.max(dmax));
    if !fits {
        return FindingKind::Shape;
    }
    if ratio.im.abs() > 1e-12 {
        FindingKind::ComplexFactor { re: ratio.re, im: ratio.im }
    } else if (ratio.re - 1.0).abs() < 1e-12 {
        FindingKind::Agrees
    } else if (ratio.re + 1.0).abs() < 1e-12 {
        FindingKind::SignFlip
    } else {
        FindingKind::Factor { ratio: ratio.re }
    }
}

fn compare_poly(location: String, derived: &ExactPoly, reference: &ExactPoly) -> Option<Finding> {
    if derived.is_zero() && reference.is_zero() {
        return None;
    }
    let dirs = samples();
    let d: Vec<Complex64> = dirs.iter().map(|x| derived.eval(x.phi1, x.phi2)).collect();
    let r: Vec<Complex64> = dirs.iter().map(|x| reference.eval(x.phi1, x.phi2)).collect();
    Some(Finding { location, kind: classify(&d, &r), derived: derived.to_string(), reference: reference.to_string() })
}

fn compare_matrices(derived: &ExactSymbolMatrix, reference: &ExactSymbolMatrix) -> Vec<Finding> {
    let mut out = Vec::new();
    for (part, dm, rm) in [("𝕜", &derived.kappa_part, &reference.kappa_part), ("𝕞", &derived.em_part, &reference.em_part)] {
        for p in 0..3 {
            for q in 0..3 {
                if let Some(f) = compare_poly(format!("({},{}) {part}", p + 1, q + 1), &dm[p][q], &rm[p][q]) {
                    out.push(f);
                }
            }
        }
    }
    out
}

fn c(re: (i64, i64), im: (i64, i64)) -> CRational {
    Complex::new(Rational64::new(re.0, re.1), Rational64::new(im.0, im.1))
}

fn real(n: i64, d: i64) -> CRational {
    c((n, d), (0, 1))
}

fn imag(n: i64, d: i64) -> CRational {
    c((0, 1), (n, d))
}

/// Builds a polynomial from `(coefficient, i, j)` triples.
fn poly(terms: &[(CRational, u32, u32)]) -> ExactPoly {
    terms.iter().fold(ExactPoly::zero(), |acc, &(k, i, j)| acc.plus(&ExactPoly::monomial(k, i, j)))
}

fn set(m: &mut [[ExactPoly; 3]; 3], p: usize, q: usize, v: ExactPoly) {
    m[p][q] = m[p][q].plus(&v);
}

/// Reference Fourier identities as written: triple → numerator on the unit circle.
fn reference_fourier() -> Vec<((u32, u32, u32), ExactPoly)> {
    vec![
        ((0, 0, 1), poly(&[(real(1, 1), 0, 0)])),
        ((1, 0, 3), poly(&[(imag(1, 1), 1, 0)])),
        ((0, 1, 3), poly(&[(imag(1, 1), 0, 1)])),
        ((3, 1, 5), poly(&[(real(1, 1), 1, 3)])),
        ((4, 0, 5), poly(&[(real(1, 1), 0, 4)])),
        ((2, 0, 3), poly(&[(real(1, 1), 0, 2)])),
        ((1, 1, 3), poly(&[(real(1, 1), 1, 1)])),
        ((0, 2, 3), poly(&[(real(1, 1), 2, 0)])),
    ]
}

/// Derived `∂ξ₁k₀/𝕜`: `i[[0,0,−φ₂²],[0,0,φ₁φ₂],[φ₂²,−φ₁φ₂,0]]`.
fn derived_dxi1() -> ExactSymbolMatrix {
    let mut m = ExactSymbolMatrix::default();
    set(&mut m.kappa_part, 0, 2, poly(&[(imag(-1, 1), 0, 2)]));
    set(&mut m.kappa_part, 1, 2, poly(&[(imag(1, 1), 1, 1)]));
    set(&mut m.kappa_part, 2, 0, poly(&[(imag(1, 1), 0, 2)]));
    set(&mut m.kappa_part, 2, 1, poly(&[(imag(-1, 1), 1, 1)]));
    m
}

fn reference_dxi1() -> ExactSymbolMatrix {
    let mut m = ExactSymbolMatrix::default();
    set(&mut m.kappa_part, 0, 2, poly(&[(imag(1, 1), 0, 2)]));
    set(&mut m.kappa_part, 1, 2, poly(&[(imag(1, 1), 1, 1)]));
    set(&mut m.kappa_part, 2, 0, poly(&[(imag(-1, 1), 0, 2)]));
    set(&mut m.kappa_part, 2, 1, poly(&[(imag(-1, 1), 1, 1)]));
    m
}

/// Derived ambient-frame `∂x₁k₀/(𝕜κ)` = `−iφ₂J`.
fn derived_dx1() -> ExactSymbolMatrix {
    let mut m = ExactSymbolMatrix::default();
    set(&mut m.kappa_part, 0, 1, poly(&[(imag(-1, 1), 0, 1)]));
    set(&mut m.kappa_part, 1, 0, poly(&[(imag(1, 1), 0, 1)]));
    m
}

/// Rotating-frame form `i·diag(φ₁, 0, φ₁)`.
fn reference_dx1() -> ExactSymbolMatrix {
    let mut m = ExactSymbolMatrix::default();
    set(&mut m.kappa_part, 0, 0, poly(&[(imag(1, 1), 1, 0)]));
    set(&mut m.kappa_part, 2, 2, poly(&[(imag(1, 1), 1, 0)]));
    m
}

/// Expanded subsymbol form per unit curvature:
/// `½𝕜φ₂²E + (3/2)𝕞φ₂²T + 𝕞·[[0, φ₁φ₂],[−φ₁φ₂, 0]]`, `T = [[φ₂², φ₁φ₂],[φ₁φ₂, φ₁²]]`.
fn reference_subsymbol_expanded() -> ExactSymbolMatrix {
    let mut m = ExactSymbolMatrix::default();
    for k in 0..3 {
        set(&mut m.kappa_part, k, k, poly(&[(real(1, 2), 0, 2)]));
    }
    set(&mut m.em_part, 0, 0, poly(&[(real(3, 2), 0, 4)]));
    set(&mut m.em_part, 0, 1, poly(&[(real(3, 2), 1, 3), (real(1, 1), 1, 1)]));
    set(&mut m.em_part, 1, 0, poly(&[(real(3, 2), 1, 3), (real(-1, 1), 1, 1)]));
    set(&mut m.em_part, 1, 1, poly(&[(real(3, 2), 2, 2)]));
    m
}

/// Collected subsymbol form per unit curvature:
/// `𝕜(−φ₂²E) + 𝕞(−½φ₂²T − (3/2)[[0, φ₁φ₂],[−φ₁φ₂, 0]])`.
fn reference_subsymbol_collected() -> ExactSymbolMatrix {
    let mut m = ExactSymbolMatrix::default();
    for k in 0..3 {
        set(&mut m.kappa_part, k, k, poly(&[(real(-1, 1), 0, 2)]));
    }
    set(&mut m.em_part, 0, 0, poly(&[(real(-1, 2), 0, 4)]));
    set(&mut m.em_part, 0, 1, poly(&[(real(-1, 2), 1, 3), (real(-3, 2), 1, 1)]));
    set(&mut m.em_part, 1, 0, poly(&[(real(-1, 2), 1, 3), (real(3, 2), 1, 1)]));
    set(&mut m.em_part, 1, 1, poly(&[(real(-1, 2), 2, 2)]));
    m
}

/// Runs every comparison.
pub fn audit_report() -> Result<AuditReport, SymbolError> {
    let mut sections = Vec::new();

    let mut fourier = Vec::new();
    for (triple, reference) in reference_fourier() {
        let ft = ft_homogeneous(triple.0, triple.1, triple.2)?;
        let loc = format!("{:?}", triple);
        if let Some(f) = compare_poly(loc, &ft.poly, &reference) {
            fourier.push(f);
        }
    }
    sections.push(AuditSection {
        name: "fourier".into(),
        description: "F[y1^a y2^b/(2π|y|^p)] on the unit circle".into(),
        findings: fourier,
    });

    sections.push(AuditSection {
        name: "dk0_dxi1".into(),
        description: "∂ξ1 k0 per unit 𝕜 (derived = exact derivative of k0)".into(),
        findings: compare_matrices(&derived_dxi1(), &reference_dxi1()),
    });
    sections.push(AuditSection {
        name: "dk0_dx1".into(),
        description: "∂x1 k0 per unit 𝕜κ (derived: fixed ambient frame; reference: frame rotating with the normal)".into(),
        findings: compare_matrices(&derived_dx1(), &reference_dx1()),
    });

    let derived = derive_cylinder_symbol()?.subsymbol;
    sections.push(AuditSection {
        name: "subsymbol_expanded".into(),
        description: "k₋₁ per unit κ vs the expanded two-line form".into(),
        findings: compare_matrices(&derived, &reference_subsymbol_expanded()),
    });
    sections.push(AuditSection {
        name: "subsymbol_collected".into(),
        description: "k₋₁ per unit κ vs the collected 𝕜u + 𝕞v form".into(),
        findings: compare_matrices(&derived, &reference_subsymbol_collected()),
    });

    // Null vector of k0: reference (φ₁, −φ₂, 0) against the computed kernel (−φ₂, φ₁, 0).
    let mat = LameMaterial::new(1.0, 1.0).expect("valid");
    let dirs = samples();
    let residual = |v: &dyn Fn(&CircleDirection) -> [Complex64; 3]| -> Vec<Complex64> {
        dirs.iter()
            .map(|d| {
                let r = k0(d, &mat).value.mul_vec(&v(d));
                Complex64::new((r[0].norm_sqr() + r[1].norm_sqr() + r[2].norm_sqr()).sqrt(), 0.0)
            })
            .collect()
    };
    let ours = residual(&|d| [Complex64::new(-d.phi2, 0.0), Complex64::new(d.phi1, 0.0), Complex64::new(0.0, 0.0)]);
    let theirs = residual(&|d| [Complex64::new(d.phi1, 0.0), Complex64::new(-d.phi2, 0.0), Complex64::new(0.0, 0.0)]);
    let max = |v: &[Complex64]| v.iter().map(|z| z.re).fold(0.0, f64::max);
    sections.push(AuditSection {
        name: "null_vector".into(),
        description: "‖k0·e0‖ on the unit circle for λ = μ = 1".into(),
        findings: vec![Finding {
            location: "e0".into(),
            kind: if max(&theirs) <= ZERO_TOL { FindingKind::Agrees } else { FindingKind::Shape },
            derived: format!("(-φ2, φ1, 0): max residual {:.3e}", max(&ours)),
            reference: format!("(φ1, -φ2, 0): max residual {:.3e}", max(&theirs)),
        }],
    });
    Ok(AuditReport { sections })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifier() {
        let d = vec![Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)];
        let neg: Vec<_> = d.iter().map(|z| -z).collect();
        let dbl: Vec<_> = d.iter().map(|z| z * 2.0).collect();
        assert_eq!(classify(&d, &d), FindingKind::Agrees);
        assert_eq!(classify(&d, &neg), FindingKind::SignFlip);
        assert_eq!(classify(&d, &dbl), FindingKind::Factor { ratio: 2.0 });
        assert_eq!(classify(&d, &[Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)]), FindingKind::Shape);
    }
}

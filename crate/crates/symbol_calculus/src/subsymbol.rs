use crate::fourier::{ft_homogeneous, CRational, ExactPoly};
use crate::principal::swap_involution;
use crate::{CircleDirection, Symbol3, SymbolError};
use elastic_core::{cylinder_kernel_monomials, LameMaterial};
use num_complex::Complex;
use numerics::Mat3C;
use std::sync::OnceLock;

/// Exact matrix of polynomials in (φ₁, φ₂), split by material scalar:
/// `value = 𝕜·kappa_part + 𝕞·em_part` (times a curvature power).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactSymbolMatrix {
    /// Coefficient matrix of 𝕜.
    pub kappa_part: [[ExactPoly; 3]; 3],
    /// Coefficient matrix of 𝕞.
    pub em_part: [[ExactPoly; 3]; 3],
}

impl ExactSymbolMatrix {
    /// Numerical value at a unit direction.
    pub fn eval(&self, mat: &LameMaterial, dir: &CircleDirection) -> Mat3C {
        Mat3C::from_fn(|p, q| {
            self.kappa_part[p][q].eval(dir.phi1, dir.phi2) * mat.kappa
                + self.em_part[p][q].eval(dir.phi1, dir.phi2) * mat.em
        })
    }
}

/// Exact symbols of the cylinder kernel expansion, derived term by term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCylinderSymbol {
    /// Degree-0 part (flat kernel): must reproduce `k₀`.
    pub principal: ExactSymbolMatrix,
    /// Degree −1 part per unit curvature: the subsymbol `k₋₁/κ`.
    pub subsymbol: ExactSymbolMatrix,
}

fn to_c(r: num_rational::Rational64) -> CRational {
    Complex::new(r, num_rational::Rational64::from_integer(0))
}

/// Maps every monomial of the cylinder kernel expansion through
/// [`ft_homogeneous`], keeping the rational coefficients exact.
pub fn derive_cylinder_symbol() -> Result<ExactCylinderSymbol, SymbolError> {
    let mut principal = ExactSymbolMatrix::default();
    let mut subsymbol = ExactSymbolMatrix::default();
    for m in cylinder_kernel_monomials() {
        let ft = ft_homogeneous(m.a, m.b, m.p)?;
        let target = match m.curvature_power {
            0 => &mut principal,
            1 => &mut subsymbol,
            k => return Err(SymbolError::UnexpectedCurvaturePower(k)),
        };
        let (p, q) = m.entry;
        target.kappa_part[p][q] = target.kappa_part[p][q].plus(&ft.poly.scaled(to_c(m.coeff_kappa)));
        target.em_part[p][q] = target.em_part[p][q].plus(&ft.poly.scaled(to_c(m.coeff_em)));
    }
    Ok(ExactCylinderSymbol { principal, subsymbol })
}

fn cached() -> &'static ExactCylinderSymbol {
    static CELL: OnceLock<ExactCylinderSymbol> = OnceLock::new();
    CELL.get_or_init(|| derive_cylinder_symbol().expect("the kernel table only uses supported monomials"))
}

/// Subsymbol `k₋₁` (degree −1) on a cylinder of curvature κ across `x₁`,
/// re-derived from the kernel expansion.
///
/// Closed form: `𝕜κφ₁φ₂J − ½𝕜κφ₂²E − (3/2)𝕞κφ₂²·[[φ₂², −φ₁φ₂],[−φ₁φ₂, φ₁²]] ⊕ 0`.
pub fn subsymbol_cylinder(dir: &CircleDirection, mat: &LameMaterial, kappa: f64) -> Result<Symbol3, SymbolError> {
    Ok(Symbol3 { value: cached().subsymbol.eval(mat, dir).scale(kappa), degree: -1.0 })
}

/// Subsymbol for principal curvatures `(κ₁, κ₂)` along the `x₁`, `x₂` axes:
/// `κ₁·c(θ) + κ₂·V c(θ̂) V` with `c` the unit-curvature cylinder subsymbol.
pub fn subsymbol_general(dir: &CircleDirection, mat: &LameMaterial, kappa1: f64, kappa2: f64) -> Symbol3 {
    let s = &cached().subsymbol;
    let v = swap_involution();
    let value = s.eval(mat, dir).scale(kappa1) + (v * s.eval(mat, &dir.swapped()) * v).scale(kappa2);
    Symbol3 { value, degree: -1.0 }
}

/// Principal symbol recomputed from the flat part of the kernel expansion.
pub fn principal_from_kernel(dir: &CircleDirection, mat: &LameMaterial) -> Mat3C {
    cached().principal.eval(mat, dir)
}

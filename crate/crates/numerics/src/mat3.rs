use num_complex::Complex64;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

/// A complex 3-vector.
pub type Vec3C = [Complex64; 3];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A 3×3 complex matrix stored row-major: `m[(p, q)]` is row `p`, column `q`.
///
/// This is the value type of every symbol in the crate family (principal
/// symbol, subsymbol, effective symbols, symmetrizer symbols, …).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat3C(pub [[Complex64; 3]; 3]);

impl Default for Mat3C {
    fn default() -> Self {
        Self::zeros()
    }
}

impl Mat3C {
    /// The zero matrix.
    pub const fn zeros() -> Self {
        Mat3C([[ZERO; 3]; 3])
    }

    /// The identity matrix `E`.
    pub const fn identity() -> Self {
        Mat3C([[ONE, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]])
    }

    /// Lifts a real matrix.
    pub fn from_real(a: [[f64; 3]; 3]) -> Self {
        let mut m = Self::zeros();
        for p in 0..3 {
            for q in 0..3 {
                m.0[p][q] = Complex64::new(a[p][q], 0.0);
            }
        }
        m
    }

    /// Builds a matrix entry-by-entry.
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros();
        for p in 0..3 {
            for q in 0..3 {
                m.0[p][q] = f(p, q);
            }
        }
        m
    }

    /// Diagonal matrix with real entries.
    pub fn diag_real(d: [f64; 3]) -> Self {
        let mut m = Self::zeros();
        for (k, v) in d.iter().enumerate() {
            m.0[k][k] = Complex64::new(*v, 0.0);
        }
        m
    }

    /// Outer product `a b*` (conjugating `b`).
    pub fn outer(a: &Vec3C, b: &Vec3C) -> Self {
        Self::from_fn(|p, q| a[p] * b[q].conj())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|p, q| self.0[q][p].conj())
    }

    /// Plain transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(|p, q| self.0[q][p])
    }

    /// Entry-wise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::from_fn(|p, q| self.0[p][q].conj())
    }

    /// Sum of the diagonal.
    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    /// Determinant by cofactor expansion.
    pub fn det(&self) -> Complex64 {
        let a = &self.0;
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|r| r.iter())
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|r| r.iter())
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Largest modulus of the imaginary parts.
    pub fn max_imag(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|r| r.iter())
            .map(|z| z.im.abs())
            .fold(0.0, f64::max)
    }

    /// `max |a_pq − conj(a_qp)|`, the Hermitian defect.
    pub fn hermitian_defect(&self) -> f64 {
        let mut d: f64 = 0.0;
        for p in 0..3 {
            for q in p..3 {
                d = d.max((self.0[p][q] - self.0[q][p].conj()).norm());
            }
        }
        d
    }

    /// Hermitian part `(a + a*)/2`.
    pub fn hermitian_part(&self) -> Self {
        (*self + self.adjoint()).scale(0.5)
    }

    /// Multiplies every entry by a real scalar.
    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(|p, q| self.0[p][q] * s)
    }

    /// Multiplies every entry by a complex scalar.
    pub fn scale_c(&self, s: Complex64) -> Self {
        Self::from_fn(|p, q| self.0[p][q] * s)
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &Vec3C) -> Vec3C {
        let mut out = [ZERO; 3];
        for (p, o) in out.iter_mut().enumerate() {
            *o = self.0[p][0] * v[0] + self.0[p][1] * v[1] + self.0[p][2] * v[2];
        }
        out
    }

    /// Real parts as a plain array.
    pub fn re(&self) -> [[f64; 3]; 3] {
        let mut r = [[0.0; 3]; 3];
        for p in 0..3 {
            for q in 0..3 {
                r[p][q] = self.0[p][q].re;
            }
        }
        r
    }

    /// Imaginary parts as a plain array.
    pub fn im(&self) -> [[f64; 3]; 3] {
        let mut r = [[0.0; 3]; 3];
        for p in 0..3 {
            for q in 0..3 {
                r[p][q] = self.0[p][q].im;
            }
        }
        r
    }

    /// Largest entry-wise distance to another matrix.
    pub fn max_diff(&self, other: &Mat3C) -> f64 {
        (*self - *other).max_abs()
    }

    /// True when all entries are finite.
    pub fn is_finite(&self) -> bool {
        self.0
            .iter()
            .flat_map(|r| r.iter())
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Index<(usize, usize)> for Mat3C {
    type Output = Complex64;
    fn index(&self, (p, q): (usize, usize)) -> &Complex64 {
        &self.0[p][q]
    }
}

impl IndexMut<(usize, usize)> for Mat3C {
    fn index_mut(&mut self, (p, q): (usize, usize)) -> &mut Complex64 {
        &mut self.0[p][q]
    }
}

impl Add for Mat3C {
    type Output = Mat3C;
    fn add(self, rhs: Mat3C) -> Mat3C {
        Mat3C::from_fn(|p, q| self.0[p][q] + rhs.0[p][q])
    }
}

impl AddAssign for Mat3C {
    fn add_assign(&mut self, rhs: Mat3C) {
        *self = *self + rhs;
    }
}

impl Sub for Mat3C {
    type Output = Mat3C;
    fn sub(self, rhs: Mat3C) -> Mat3C {
        Mat3C::from_fn(|p, q| self.0[p][q] - rhs.0[p][q])
    }
}

impl SubAssign for Mat3C {
    fn sub_assign(&mut self, rhs: Mat3C) {
        *self = *self - rhs;
    }
}

impl Neg for Mat3C {
    type Output = Mat3C;
    fn neg(self) -> Mat3C {
        self.scale(-1.0)
    }
}

impl Mul for Mat3C {
    type Output = Mat3C;
    fn mul(self, rhs: Mat3C) -> Mat3C {
        Mat3C::from_fn(|p, q| {
            self.0[p][0] * rhs.0[0][q] + self.0[p][1] * rhs.0[1][q] + self.0[p][2] * rhs.0[2][q]
        })
    }
}

impl Mul<f64> for Mat3C {
    type Output = Mat3C;
    fn mul(self, rhs: f64) -> Mat3C {
        self.scale(rhs)
    }
}

impl Mul<Complex64> for Mat3C {
    type Output = Mat3C;
    fn mul(self, rhs: Complex64) -> Mat3C {
        self.scale_c(rhs)
    }
}

use crate::NumericsError;

/// Dense real `n × n` matrix in row-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatR {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatR {
    /// Zero matrix of size `n` (`n ≥ 1`).
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "DenseMatR requires n >= 1");
        DenseMatR {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds a matrix entry-by-entry.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.data[i * n + j] = f(i, j);
            }
        }
        m
    }

    /// Wraps row-major data; fails unless `data.len() == n²`, `n ≥ 1` and all
    /// entries are finite.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self, NumericsError> {
        if n == 0 || data.len() != n * n {
            return Err(NumericsError::Dimension(format!(
                "expected {n}x{n} = {} entries, got {}",
                n * n,
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(NumericsError::NonFinite);
        }
        Ok(DenseMatR { n, data })
    }

    /// Matrix dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// Mutable row-major entries.
    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    /// Frobenius norm.
    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    /// Matrix product (cache-friendly i-k-j loop).
    pub fn matmul(&self, other: &DenseMatR) -> DenseMatR {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = DenseMatR::zeros(n);
        for i in 0..n {
            let orow = &mut out.data[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (o, b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    /// `max |a_ij − a_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                d = d.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        d
    }

    /// Entry-wise difference `self − other`.
    pub fn sub(&self, other: &DenseMatR) -> DenseMatR {
        assert_eq!(self.n, other.n, "dimension mismatch");
        DenseMatR {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    /// True when all entries are finite.
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatR {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatR {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

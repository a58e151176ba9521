//! Dense square complex matrices.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{NumradError, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense `n × n` complex matrix stored row-major.
///
/// Matrices built from external data go through [`ComplexMatrix::new`], which
/// rejects non-finite components. Arithmetic on validated matrices produces
/// matrices directly; overflow there is the caller's concern.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(n: usize, data: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(NumradError::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if data.len() != n * n {
            return Err(NumradError::DimensionMismatch {
                expected: n * n,
                found: data.len(),
            });
        }
        if let Some(pos) = data.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(NumradError::InvalidEntry(format!(
                "entry ({}, {}) is not finite",
                pos / n,
                pos % n
            )));
        }
        Ok(Self { n, data })
    }

    pub(crate) fn from_vec_unchecked(n: usize, data: Vec<Complex64>) -> Self {
        debug_assert_eq!(data.len(), n * n);
        Self { n, data }
    }

    /// Builds a matrix from real row-major entries.
    pub fn from_real(n: usize, entries: &[f64]) -> Result<Self> {
        Self::new(n, entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Builds a matrix from rows of complex entries.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(NumradError::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::new(n, data)
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_vec_unchecked(n, vec![ZERO; n * n])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        m
    }

    /// `V · diag(values) · V*`, the spectral-calculus reassembly.
    pub fn from_spectral(vectors: &ComplexMatrix, values: &[f64]) -> Self {
        let n = vectors.n;
        debug_assert_eq!(values.len(), n);
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for j in i..n {
                let mut acc = ZERO;
                for (k, &lam) in values.iter().enumerate() {
                    if lam != 0.0 {
                        acc += vectors[(i, k)] * vectors[(j, k)].conj() * lam;
                    }
                }
                out[i * n + j] = acc;
                out[j * n + i] = acc.conj();
            }
            out[i * n + i].im = 0.0;
        }
        Self::from_vec_unchecked(n, out)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.n).map(|i| self[(i, j)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        let n = self.n;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                out[j * n + i] = self.data[i * n + j].conj();
            }
        }
        Self::from_vec_unchecked(n, out)
    }

    /// `(T + T*) / 2`.
    pub fn real_part(&self) -> Self {
        let n = self.n;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (self.data[i * n + j] + self.data[j * n + i].conj()) * 0.5;
            }
        }
        Self::from_vec_unchecked(n, out)
    }

    /// `(T − T*) / (2i)`, so that `T = real_part(T) + i·imag_part(T)`.
    pub fn imag_part(&self) -> Self {
        let n = self.n;
        let half_over_i = Complex64::new(0.0, -0.5);
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (self.data[i * n + j] - self.data[j * n + i].conj()) * half_over_i;
            }
        }
        Self::from_vec_unchecked(n, out)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_vec_unchecked(self.n, self.data.iter().map(|z| z * s).collect())
    }

    pub fn scale_complex(&self, s: Complex64) -> Self {
        Self::from_vec_unchecked(self.n, self.data.iter().map(|z| z * s).collect())
    }

    /// `a·self + b·other` for real coefficients.
    pub fn combine(&self, a: f64, other: &Self, b: f64) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self::from_vec_unchecked(
            self.n,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x * a + y * b)
                .collect(),
        )
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            let row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == ZERO {
                    continue;
                }
                let other_row = &other.data[k * n..(k + 1) * n];
                for (o, b) in row.iter_mut().zip(other_row) {
                    *o += a * b;
                }
            }
        }
        Self::from_vec_unchecked(n, out)
    }

    /// `self* · self`, i.e. `|A|²`.
    pub fn gram(&self) -> Self {
        self.adjoint().matmul(self)
    }

    /// `self · self*`, i.e. `|A*|²`.
    pub fn cogram(&self) -> Self {
        self.matmul(&self.adjoint())
    }

    /// Integer power by repeated squaring; `pow(0)` is the identity.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::identity(self.n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.matmul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.matmul(&base);
            }
        }
        result
    }

    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        let n = self.n;
        (0..n)
            .map(|i| {
                self.data[i * n..(i + 1) * n]
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// `⟨Ax, x⟩ = x* A x`.
    pub fn quadratic_form(&self, x: &[Complex64]) -> Complex64 {
        inner(&self.mul_vec(x), x)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        // scaled accumulation avoids overflow for entries near f64::MAX.sqrt()
        let scale = self.max_abs();
        if scale == 0.0 || !scale.is_finite() {
            return scale;
        }
        let sum: f64 = self.data.iter().map(|z| (z / scale).norm_sqr()).sum();
        scale * sum.sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Frobenius norm of `self − self*`.
    pub fn skew_residual(&self) -> f64 {
        let n = self.n;
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                sum += (self.data[i * n + j] - self.data[j * n + i].conj()).norm_sqr();
            }
        }
        sum.sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// `⟨u, v⟩ = v* u`, linear in the first argument.
pub fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a * b.conj()).sum()
}

pub fn vec_norm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.combine(1.0, rhs, 1.0)
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.combine(1.0, rhs, -1.0)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs)
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale(-1.0)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            write!(f, "  [")?;
            for j in 0..self.n {
                let z = self[(i, j)];
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn example1() -> ComplexMatrix {
        ComplexMatrix::from_real(3, &[0.0, 2.0, 0.0, 0.0, 0.0, 3.0, 4.0, 0.0, 0.0]).unwrap()
    }

    #[test]
    fn identity_is_self_adjoint() {
        let id = ComplexMatrix::identity(2);
        assert_eq!(id.adjoint(), id);
    }

    #[test]
    fn adjoint_of_real_matrix_is_transpose() {
        let expected =
            ComplexMatrix::from_real(3, &[0.0, 0.0, 4.0, 2.0, 0.0, 0.0, 0.0, 3.0, 0.0]).unwrap();
        assert_eq!(example1().adjoint(), expected);
    }

    #[test]
    fn adjoint_conjugates_scalars() {
        let m = ComplexMatrix::new(1, vec![c(0.0, 1.0)]).unwrap();
        assert_eq!(m.adjoint()[(0, 0)], c(0.0, -1.0));
    }

    #[test]
    fn real_part_examples() {
        let h = ComplexMatrix::new(2, vec![c(1.0, 0.0), c(2.0, 1.0), c(2.0, -1.0), c(-3.0, 0.0)])
            .unwrap();
        assert_eq!(h.real_part(), h);

        let jordan = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        let expected = ComplexMatrix::from_real(2, &[0.0, 0.5, 0.5, 0.0]).unwrap();
        assert_eq!(jordan.real_part(), expected);

        let i = ComplexMatrix::new(1, vec![c(0.0, 1.0)]).unwrap();
        assert_eq!(i.real_part(), ComplexMatrix::zeros(1));
    }

    #[test]
    fn real_and_imag_parts_recompose() {
        let m = ComplexMatrix::new(2, vec![c(1.0, 2.0), c(-0.5, 3.0), c(4.0, 0.25), c(0.0, -1.0)])
            .unwrap();
        let back = &m.real_part() + &m.imag_part().scale_complex(c(0.0, 1.0));
        assert!(back.max_abs_diff(&m) < 1e-15);
    }

    #[test]
    fn rejects_bad_shapes_and_non_finite() {
        assert!(matches!(
            ComplexMatrix::new(2, vec![c(0.0, 0.0)]),
            Err(NumradError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            ComplexMatrix::new(1, vec![c(f64::NAN, 0.0)]),
            Err(NumradError::InvalidEntry(_))
        ));
        assert!(ComplexMatrix::new(0, vec![]).is_err());
    }

    #[test]
    fn example1_square_has_permutation_pattern() {
        let a2 = example1().pow(2);
        let expected =
            ComplexMatrix::from_real(3, &[0.0, 0.0, 6.0, 12.0, 0.0, 0.0, 0.0, 8.0, 0.0]).unwrap();
        assert_eq!(a2, expected);
    }

    #[test]
    fn quadratic_form_uses_conjugate_linear_second_slot() {
        let m = ComplexMatrix::new(1, vec![c(2.0, 0.0)]).unwrap();
        let x = [c(0.0, 1.0)];
        assert_eq!(m.quadratic_form(&x), c(2.0, 0.0));
    }
}

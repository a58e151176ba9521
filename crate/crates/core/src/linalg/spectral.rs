//! Spectral calculus on PSD matrices and the Gelfand spectral radius.

use super::eigen::hermitian_eigen_with;
use super::matrix::ComplexMatrix;
use crate::error::{NumradError, Result};
use crate::tolerance::Tolerances;

/// Default number of repeated squarings in [`spectral_radius`].
pub const GELFAND_SQUARINGS: u32 = 40;

/// Largest `ln(λ^r)` accepted by [`PsdFactor::power`]. Entries are later
/// squared inside norms, so the ceiling sits well below `ln(f64::MAX)`.
pub const MAX_LOG_POWER: f64 = 300.0;

/// Eigen-factored PSD matrix `P = V · diag(λ) · V*` with `λ ≥ 0`.
///
/// Factoring once and raising the spectrum many times is what makes the
/// weight sweeps over `t` affordable.
#[derive(Debug, Clone)]
pub struct PsdFactor {
    vectors: ComplexMatrix,
    values: Vec<f64>,
}

impl PsdFactor {
    /// Factor a Hermitian PSD matrix, clamping roundoff-negative eigenvalues.
    pub fn new(p: &ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        let eig = hermitian_eigen_with(p, tol)?;
        let scale = eig.min().abs().max(eig.max().abs());
        let limit = -tol.psd * scale;
        if eig.min() < limit {
            return Err(NumradError::NotPsd {
                eigenvalue: eig.min(),
                limit,
            });
        }
        Ok(Self {
            values: eig.eigenvalues.iter().map(|&l| l.max(0.0)).collect(),
            vectors: eig.vectors,
        })
    }

    /// Wrap an existing orthonormal eigenbasis. Negative values are clamped.
    pub fn from_parts(vectors: ComplexMatrix, values: Vec<f64>) -> Self {
        Self {
            vectors,
            values: values.into_iter().map(|l| l.max(0.0)).collect(),
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn vectors(&self) -> &ComplexMatrix {
        &self.vectors
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    pub fn matrix(&self) -> ComplexMatrix {
        ComplexMatrix::from_spectral(&self.vectors, &self.values)
    }

    /// Whether `P^r` stays inside the representable range.
    pub fn power_fits(&self, r: f64) -> bool {
        let top = self.max_value();
        top <= 0.0 || r * top.ln() <= MAX_LOG_POWER
    }

    /// `P^r` with `0^r = 0` for `r > 0`. At `r = 0` this is the projection
    /// onto the support of `P`.
    pub fn power(&self, r: f64) -> Result<ComplexMatrix> {
        if !(r.is_finite() && r >= 0.0) {
            return Err(NumradError::Domain(format!("exponent {r} must be a finite non-negative real")));
        }
        if !self.power_fits(r) {
            return Err(NumradError::Overflow(format!(
                "{}^{r} is not representable",
                self.max_value()
            )));
        }
        let values: Vec<f64> = self
            .values
            .iter()
            .map(|&l| if l > 0.0 { l.powf(r) } else { 0.0 })
            .collect();
        Ok(ComplexMatrix::from_spectral(&self.vectors, &values))
    }
}

/// `P^r` for a PSD matrix `P` and `r > 0`.
pub fn frac_power(p: &ComplexMatrix, r: f64) -> Result<ComplexMatrix> {
    frac_power_with(p, r, &Tolerances::default())
}

pub fn frac_power_with(p: &ComplexMatrix, r: f64, tol: &Tolerances) -> Result<ComplexMatrix> {
    if r == 0.0 {
        return Err(NumradError::Domain(
            "exponent 0 is ambiguous (identity versus support projection)".into(),
        ));
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(NumradError::Domain(format!("exponent {r} must be positive and finite")));
    }
    PsdFactor::new(p, tol)?.power(r)
}

/// Spectral radius by Gelfand's formula `r(A) = lim ‖A^k‖^{1/k}`, using
/// repeated squaring with Frobenius renormalisation at every step.
pub fn spectral_radius(a: &ComplexMatrix) -> Result<f64> {
    spectral_radius_with(a, GELFAND_SQUARINGS, Tolerances::default().rad)
}

pub fn spectral_radius_with(a: &ComplexMatrix, squarings: u32, rel_tol: f64) -> Result<f64> {
    let f = a.frobenius_norm();
    if f == 0.0 {
        return Ok(0.0);
    }
    // A^(2^k) = exp(log_scale) · b with ‖b‖_F = 1
    let mut b = a.scale(1.0 / f);
    let mut log_scale = f.ln();
    let mut previous = f;
    let mut current = f;
    for k in 1..=squarings {
        let sq = b.matmul(&b);
        let c = sq.frobenius_norm();
        if c == 0.0 {
            return Ok(0.0);
        }
        b = sq.scale(1.0 / c);
        log_scale = 2.0 * log_scale + c.ln();
        previous = current;
        current = (log_scale / 2f64.powi(k as i32)).exp();
    }
    if squarings > 1 && (current - previous).abs() > rel_tol * current.max(f64::MIN_POSITIVE) {
        return Err(NumradError::NoConvergence {
            routine: "gelfand spectral radius",
            budget: squarings as usize,
        });
    }
    Ok(current)
}

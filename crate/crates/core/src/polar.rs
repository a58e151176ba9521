//! Polar decomposition `A = U|A|` and the weighted Aluthge transform
//! `Ã_t = |A|^{1−t} U |A|^t`.

use crate::error::{NumradError, Result};
use crate::linalg::{svd, ComplexMatrix, PsdFactor, SingularDecomposition};
use crate::tolerance::{Tolerances, SIGMA_CUT};

/// `|A| = (A*A)^{1/2}`.
pub fn abs_value(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let d = svd(a)?;
    Ok(ComplexMatrix::from_spectral(&d.right, &d.sigma))
}

/// `A = U·P` with `U` a partial isometry vanishing on `ker P`.
///
/// Singular values at or below `SIGMA_CUT·σ₁` are treated as exact zeros in
/// both factors, so `U*U` is the projection onto `range(P)`.
#[derive(Debug, Clone)]
pub struct PolarDecomposition {
    pub isometry: ComplexMatrix,
    pub positive: ComplexMatrix,
    abs: PsdFactor,
    co_abs: PsdFactor,
    norm: f64,
}

impl PolarDecomposition {
    pub fn from_svd(d: &SingularDecomposition) -> Self {
        let n = d.sigma.len();
        let cut = SIGMA_CUT * d.sigma[0];
        let sigma: Vec<f64> = d
            .sigma
            .iter()
            .map(|&s| if s > cut { s } else { 0.0 })
            .collect();
        let mut isometry = ComplexMatrix::zeros(n);
        for (k, &s) in sigma.iter().enumerate() {
            if s == 0.0 {
                continue;
            }
            for i in 0..n {
                let u = d.left[(i, k)];
                for j in 0..n {
                    isometry[(i, j)] += u * d.right[(j, k)].conj();
                }
            }
        }
        let abs = PsdFactor::from_parts(d.right.clone(), sigma.clone());
        let co_abs = PsdFactor::from_parts(d.left.clone(), sigma);
        Self {
            isometry,
            positive: abs.matrix(),
            abs,
            co_abs,
            norm: d.sigma[0],
        }
    }

    /// Spectral factor of `|A|`.
    pub fn abs_factor(&self) -> &PsdFactor {
        &self.abs
    }

    /// Spectral factor of `|A*| = (AA*)^{1/2}`.
    pub fn co_abs_factor(&self) -> &PsdFactor {
        &self.co_abs
    }

    /// `‖A‖ = σ₁`.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn reconstruct(&self) -> ComplexMatrix {
        self.isometry.matmul(&self.positive)
    }

    /// `|A|^{1−t} U |A|^t` without a range check on `t`.
    pub(crate) fn transform(&self, t: f64) -> Result<ComplexMatrix> {
        let left = self.abs.power(1.0 - t)?;
        let right = self.abs.power(t)?;
        Ok(left.matmul(&self.isometry).matmul(&right))
    }
}

pub fn polar(a: &ComplexMatrix) -> Result<PolarDecomposition> {
    Ok(PolarDecomposition::from_svd(&svd(a)?))
}

#[derive(Debug, Clone)]
pub struct WeightedAluthge {
    pub t: f64,
    pub transform: ComplexMatrix,
}

pub fn check_weight(t: f64, tol: &Tolerances) -> Result<()> {
    let (min, max) = (tol.t_min, 1.0 - tol.t_min);
    if !(min..=max).contains(&t) {
        return Err(NumradError::WeightOutOfRange { t, min, max });
    }
    Ok(())
}

/// Weighted Aluthge transform `Ã_t` for `t ∈ [t_min, 1 − t_min]`.
pub fn aluthge(a: &ComplexMatrix, t: f64) -> Result<WeightedAluthge> {
    aluthge_of(&polar(a)?, t, &Tolerances::default())
}

pub fn aluthge_of(p: &PolarDecomposition, t: f64, tol: &Tolerances) -> Result<WeightedAluthge> {
    check_weight(t, tol)?;
    Ok(WeightedAluthge {
        t,
        transform: p.transform(t)?,
    })
}

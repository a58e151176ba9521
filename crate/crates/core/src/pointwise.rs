//! Vector-level forms of the scalar-product lemmas.
//!
//! Each check returns both sides and `margin = rhs − lhs`; the inequality
//! holds when the margin is nonnegative up to roundoff.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::ensemble::unit_vector;
use crate::error::{NumradError, Result};
use crate::linalg::{
    inner, spectral_norm, spectral_radius, vec_norm, ComplexMatrix, PsdFactor,
};
use crate::polar::{check_weight, polar};
use crate::radius::numerical_radius;
use crate::tolerance::Tolerances;

/// Unit vector; the constructor normalizes.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector(Vec<Complex64>);

impl UnitVector {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        let norm = vec_norm(&entries);
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(NumradError::Domain("cannot normalize a zero or non-finite vector".into()));
        }
        Ok(Self(entries.into_iter().map(|z| z / norm).collect()))
    }

    pub fn from_real(entries: &[f64]) -> Result<Self> {
        Self::new(entries.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// `k`-th standard basis vector of length `n`.
    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        v[k] = Complex64::new(1.0, 0.0);
        Self(v)
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Self(unit_vector(n, rng))
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

impl InequalityCheck {
    pub fn new(lhs: f64, rhs: f64) -> Self {
        Self {
            lhs,
            rhs,
            margin: rhs - lhs,
        }
    }

    pub fn holds(&self, tol: f64) -> bool {
        self.margin >= -tol
    }
}

fn same_dim(n: usize, found: usize) -> Result<()> {
    if n != found {
        return Err(NumradError::DimensionMismatch { expected: n, found });
    }
    Ok(())
}

/// `⟨Px, x⟩` for Hermitian `P`, as a real number.
fn form(p: &ComplexMatrix, x: &[Complex64]) -> f64 {
    p.quadratic_form(x).re
}

/// `|⟨Ax,y⟩|² ≤ ⟨|A|^{2(1−t)}x,x⟩⟨|A*|^{2t}y,y⟩`.
pub fn kato(a: &ComplexMatrix, x: &UnitVector, y: &UnitVector, t: f64) -> Result<InequalityCheck> {
    check_weight(t, &Tolerances::default())?;
    same_dim(a.dim(), x.dim())?;
    same_dim(a.dim(), y.dim())?;
    let p = polar(a)?;
    let lhs = inner(&a.mul_vec(x.as_slice()), y.as_slice()).norm_sqr();
    let left = form(&p.abs_factor().power(2.0 * (1.0 - t))?, x.as_slice());
    let right = form(&p.co_abs_factor().power(2.0 * t)?, y.as_slice());
    Ok(InequalityCheck::new(lhs, left * right))
}

/// Power-mean inequality for a PSD matrix.
///
/// For `r ≥ 1` this is `⟨Px,x⟩^r ≤ ⟨P^r x,x⟩`; for `0 < r < 1` the sides are
/// swapped so the margin is nonnegative in both regimes.
pub fn mccarthy(p: &ComplexMatrix, x: &UnitVector, r: f64) -> Result<InequalityCheck> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(NumradError::Domain(format!("exponent must be positive, got {r}")));
    }
    same_dim(p.dim(), x.dim())?;
    let factor = PsdFactor::new(p, &Tolerances::default())?;
    let powered = form(&factor.power(r)?, x.as_slice()).max(0.0);
    let plain = form(&factor.matrix(), x.as_slice()).max(0.0).powf(r);
    Ok(if r >= 1.0 {
        InequalityCheck::new(plain, powered)
    } else {
        InequalityCheck::new(powered, plain)
    })
}

/// `|⟨B*Ax,x⟩ − ⟨B*x,x⟩⟨Ax,x⟩| ≤ (⟨|A|²x,x⟩⟨|B|²x,x⟩)^{1/2} − |⟨Ax,x⟩||⟨Bx,x⟩|`.
pub fn schwarz_covariance(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    x: &UnitVector,
) -> Result<InequalityCheck> {
    same_dim(a.dim(), b.dim())?;
    same_dim(a.dim(), x.dim())?;
    let x = x.as_slice();
    let ax = a.mul_vec(x);
    let bx = b.mul_vec(x);
    let b_adj = b.adjoint();
    let ax_x = inner(&ax, x);
    let bx_x = inner(&bx, x);
    let bstar_a = inner(&b_adj.mul_vec(&ax), x);
    let bstar = inner(&b_adj.mul_vec(x), x);
    let lhs = (bstar_a - bstar * ax_x).norm();
    let rhs = (vec_norm(&ax) * vec_norm(&bx)) - ax_x.norm() * bx_x.norm();
    Ok(InequalityCheck::new(lhs, rhs))
}

/// The `B* = A` case:
/// `|⟨Ax,x⟩|² + |⟨A²x,x⟩ − ⟨Ax,x⟩²| ≤ (⟨|A|²x,x⟩⟨|A*|²x,x⟩)^{1/2}`.
pub fn schwarz_square(a: &ComplexMatrix, x: &UnitVector) -> Result<InequalityCheck> {
    same_dim(a.dim(), x.dim())?;
    let x = x.as_slice();
    let ax = a.mul_vec(x);
    let ax_x = inner(&ax, x);
    let a2x_x = inner(&a.mul_vec(&ax), x);
    let lhs = ax_x.norm_sqr() + (a2x_x - ax_x * ax_x).norm();
    let rhs = vec_norm(&ax) * vec_norm(&a.adjoint().mul_vec(x));
    Ok(InequalityCheck::new(lhs, rhs))
}

/// `|⟨B*x,x⟩⟨Ax,x⟩| ≤ ((⟨|A|²x,x⟩⟨|B|²x,x⟩)^{1/2} + |⟨B*Ax,x⟩|)/2`.
pub fn cs_refinement(a: &ComplexMatrix, b: &ComplexMatrix, x: &UnitVector) -> Result<InequalityCheck> {
    same_dim(a.dim(), b.dim())?;
    same_dim(a.dim(), x.dim())?;
    let x = x.as_slice();
    let ax = a.mul_vec(x);
    let bx = b.mul_vec(x);
    let b_adj = b.adjoint();
    let lhs = (inner(&b_adj.mul_vec(x), x) * inner(&ax, x)).norm();
    let rhs = 0.5 * (vec_norm(&ax) * vec_norm(&bx) + inner(&b_adj.mul_vec(&ax), x).norm());
    Ok(InequalityCheck::new(lhs, rhs))
}

/// `r(AB + CD) ≤ ½(ω(BA) + ω(DC) + ((ω(BA) − ω(DC))² + 4‖BC‖‖DA‖)^{1/2})`.
///
/// The spectral radius comes from the Gelfand iteration, so margins are only
/// reliable to about `1e-5`.
pub fn amer_bound(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    c: &ComplexMatrix,
    d: &ComplexMatrix,
) -> Result<InequalityCheck> {
    let n = a.dim();
    for m in [b, c, d] {
        same_dim(n, m.dim())?;
    }
    let lhs = spectral_radius(&(&a.matmul(b) + &c.matmul(d)))?;
    let w_ba = numerical_radius(&b.matmul(a))?;
    let w_dc = numerical_radius(&d.matmul(c))?;
    let cross = spectral_norm(&b.matmul(c))? * spectral_norm(&d.matmul(a))?;
    let rhs = 0.5 * (w_ba + w_dc + ((w_ba - w_dc).powi(2) + 4.0 * cross).sqrt());
    Ok(InequalityCheck::new(lhs, rhs))
}

/// `‖P^t Q^t‖` for PSD `P`, `Q` and `t ∈ [0, 1]`; `t = 0` gives the product
/// of the support projections.
pub fn power_product_norm(p: &PsdFactor, q: &PsdFactor, t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(NumradError::Domain(format!("t must lie in [0, 1], got {t}")));
    }
    spectral_norm(&p.power(t)?.matmul(&q.power(t)?))
}

/// `‖P^t Q^t‖ ≤ ‖PQ‖^t`.
pub fn log_convexity(p: &ComplexMatrix, q: &ComplexMatrix, t: f64) -> Result<InequalityCheck> {
    same_dim(p.dim(), q.dim())?;
    let tol = Tolerances::default();
    let (pf, qf) = (PsdFactor::new(p, &tol)?, PsdFactor::new(q, &tol)?);
    let lhs = power_product_norm(&pf, &qf, t)?;
    let rhs = spectral_norm(&p.matmul(q))?.powf(t);
    Ok(InequalityCheck::new(lhs, rhs))
}

/// `f((s+u)/2)² ≤ f(s)·f(u)` for `f(t) = ‖P^t Q^t‖`.
pub fn log_convexity_midpoint(
    p: &ComplexMatrix,
    q: &ComplexMatrix,
    s: f64,
    u: f64,
) -> Result<InequalityCheck> {
    same_dim(p.dim(), q.dim())?;
    let tol = Tolerances::default();
    let (pf, qf) = (PsdFactor::new(p, &tol)?, PsdFactor::new(q, &tol)?);
    let mid = power_product_norm(&pf, &qf, 0.5 * (s + u))?;
    let ends = power_product_norm(&pf, &qf, s)? * power_product_norm(&pf, &qf, u)?;
    Ok(InequalityCheck::new(mid * mid, ends))
}

/// [`log_convexity`] on `points` equally spaced `t ∈ [0, 1]`.
pub fn log_convexity_grid(
    p: &ComplexMatrix,
    q: &ComplexMatrix,
    points: usize,
) -> Result<Vec<InequalityCheck>> {
    let steps = points.max(2) - 1;
    (0..=steps)
        .map(|k| log_convexity(p, q, k as f64 / steps as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::{ginibre, psd, trial_rng};

    fn jordan() -> ComplexMatrix {
        ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap()
    }

    #[test]
    fn unit_vector_normalizes() {
        let v = UnitVector::from_real(&[3.0, 4.0]).unwrap();
        assert!((vec_norm(v.as_slice()) - 1.0).abs() < 1e-15);
        assert!(UnitVector::from_real(&[0.0, 0.0]).is_err());
    }

    #[test]
    fn kato_identity_is_tight() {
        let x = UnitVector::from_real(&[1.0, 2.0]).unwrap();
        let c = kato(&ComplexMatrix::identity(2), &x, &x, 0.3).unwrap();
        assert!((c.lhs - 1.0).abs() < 1e-14 && (c.rhs - 1.0).abs() < 1e-14);
    }

    #[test]
    fn kato_orthogonal_vectors() {
        let c = kato(&jordan(), &UnitVector::basis(2, 0), &UnitVector::basis(2, 0), 0.5).unwrap();
        assert_eq!(c.lhs, 0.0);
        assert!(c.holds(1e-12));
    }

    #[test]
    fn kato_at_half_matches_modulus_forms() {
        let mut rng = trial_rng(9, 0);
        let a = ginibre(4, &mut rng);
        let x = UnitVector::random(4, &mut rng);
        let c = kato(&a, &x, &x, 0.5).unwrap();
        let p = polar(&a).unwrap();
        let expect = form(&p.abs_factor().matrix(), x.as_slice())
            * form(&p.co_abs_factor().matrix(), x.as_slice());
        assert!((c.rhs - expect).abs() < 1e-12);
    }

    #[test]
    fn mccarthy_hand_values() {
        let p = ComplexMatrix::from_diagonal(&[1.0, 4.0]);
        let x = UnitVector::from_real(&[1.0, 1.0]).unwrap();
        let c = mccarthy(&p, &x, 2.0).unwrap();
        assert!((c.lhs - 6.25).abs() < 1e-13 && (c.rhs - 8.5).abs() < 1e-13);
        let c = mccarthy(&p, &x, 0.5).unwrap();
        assert!((c.lhs - 1.5).abs() < 1e-13 && (c.rhs - 2.5f64.sqrt()).abs() < 1e-13);
        let c = mccarthy(&p, &x, 1.0).unwrap();
        assert!(c.margin.abs() < 1e-13);
        assert!(mccarthy(&p, &x, 0.0).is_err());
    }

    #[test]
    fn schwarz_examples() {
        let id = ComplexMatrix::identity(3);
        let x = UnitVector::from_real(&[1.0, -1.0, 2.0]).unwrap();
        let c = schwarz_covariance(&id, &id, &x).unwrap();
        assert!(c.lhs.abs() < 1e-14 && c.rhs.abs() < 1e-14);
        let c = schwarz_covariance(&jordan(), &jordan(), &UnitVector::basis(2, 0)).unwrap();
        assert_eq!((c.lhs, c.rhs), (0.0, 0.0));
    }

    #[test]
    fn schwarz_square_matches_covariance_with_adjoint() {
        let mut rng = trial_rng(12, 0);
        let a = ginibre(3, &mut rng);
        let x = UnitVector::random(3, &mut rng);
        let special = schwarz_square(&a, &x).unwrap();
        let general = schwarz_covariance(&a, &a.adjoint(), &x).unwrap();
        let shift = inner(&a.mul_vec(x.as_slice()), x.as_slice()).norm_sqr();
        assert!((special.lhs - general.lhs - shift).abs() < 1e-12);
        assert!((special.rhs - general.rhs - shift).abs() < 1e-12);
        assert!(special.holds(1e-9));
    }

    #[test]
    fn cs_refinement_identity() {
        let id = ComplexMatrix::identity(2);
        let x = UnitVector::from_real(&[0.6, 0.8]).unwrap();
        let c = cs_refinement(&id, &id, &x).unwrap();
        assert!((c.lhs - 1.0).abs() < 1e-14 && (c.rhs - 1.0).abs() < 1e-14);
    }

    #[test]
    fn amer_examples() {
        let id = ComplexMatrix::identity(2);
        let c = amer_bound(&id, &id, &id, &id).unwrap();
        assert!((c.lhs - 2.0).abs() < 1e-9 && (c.rhs - 2.0).abs() < 1e-9);
        let mut rng = trial_rng(13, 0);
        let (a, b) = (ginibre(3, &mut rng), ginibre(3, &mut rng));
        let z = ComplexMatrix::zeros(3);
        let c = amer_bound(&a, &b, &z, &z).unwrap();
        assert!((c.rhs - numerical_radius(&b.matmul(&a)).unwrap()).abs() < 1e-12);
        assert!(c.holds(1e-5));
    }

    #[test]
    fn log_convexity_on_random_psd() {
        let mut rng = trial_rng(14, 0);
        let (p, q) = (psd(4, &mut rng), psd(4, &mut rng));
        for c in log_convexity_grid(&p, &q, 21).unwrap() {
            assert!(c.holds(1e-9), "{c:?}");
        }
        assert!(log_convexity_midpoint(&p, &q, 0.1, 0.9).unwrap().holds(1e-9));
        let c = log_convexity(&p, &q, 1.0).unwrap();
        assert!(c.margin.abs() < 1e-9 * c.rhs.max(1.0));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let x = UnitVector::basis(3, 0);
        assert!(matches!(
            schwarz_square(&jordan(), &x),
            Err(NumradError::DimensionMismatch { expected: 2, found: 3 })
        ));
    }
}

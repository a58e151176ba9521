//! Numerical radius `ω(A) = sup_{‖x‖=1} |⟨Ax, x⟩|`.
//!
//! The primary route is the angle sweep `ω(A) = sup_θ λ_max(Re(e^{iθ}A))`
//! over a uniform grid followed by golden-section refinement. An independent
//! Rayleigh-quotient sampler ([`radius_oracle`]) provides a lower estimate
//! that never touches an eigensolver.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::ensemble::{trial_rng, unit_vector};
use crate::error::{NumradError, Result};
use crate::linalg::{eigenvalues_unchecked, vec_norm, ComplexMatrix};
use crate::optimize::golden_maximize;

pub const DEFAULT_GRID_POINTS: usize = 720;
pub const DEFAULT_THETA_TOL: f64 = 1e-10;

pub const ASCENT_STEPS: usize = 50;
pub const ASCENT_DECAY: f64 = 0.7;
pub const ASCENT_INITIAL_STEP: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusEstimate {
    pub value: f64,
    /// Maximising angle in `[0, 2π)`.
    pub theta_star: f64,
    pub grid_points: usize,
    /// Width of the final golden-section bracket.
    pub refine_width: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleEstimate {
    pub value: f64,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepOptions {
    pub grid_points: usize,
    pub theta_tol: f64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            grid_points: DEFAULT_GRID_POINTS,
            theta_tol: DEFAULT_THETA_TOL,
        }
    }
}

/// `θ ↦ Re(e^{iθ}A) = cos θ · Re A − sin θ · Im A`.
struct RealPartPencil {
    re: ComplexMatrix,
    im: ComplexMatrix,
}

impl RealPartPencil {
    fn new(a: &ComplexMatrix) -> Self {
        Self {
            re: a.real_part(),
            im: a.imag_part(),
        }
    }

    fn spectrum(&self, theta: f64) -> Result<Vec<f64>> {
        let h = self.re.combine(theta.cos(), &self.im, -theta.sin());
        eigenvalues_unchecked(&h)
    }

    fn top(&self, theta: f64) -> Result<f64> {
        Ok(*self.spectrum(theta)?.last().expect("non-empty"))
    }
}

pub fn numerical_radius(a: &ComplexMatrix) -> Result<f64> {
    Ok(radius_sweep_with(a, &SweepOptions::default())?.value)
}

pub fn radius_sweep(a: &ComplexMatrix, grid_points: usize, theta_tol: f64) -> Result<RadiusEstimate> {
    radius_sweep_with(
        a,
        &SweepOptions {
            grid_points,
            theta_tol,
        },
    )
}

pub fn radius_sweep_with(a: &ComplexMatrix, opts: &SweepOptions) -> Result<RadiusEstimate> {
    let n_grid = opts.grid_points;
    if n_grid < 8 {
        return Err(NumradError::Domain(format!(
            "angle grid needs at least 8 points, got {n_grid}"
        )));
    }
    if opts.theta_tol.is_nan() || opts.theta_tol <= 0.0 {
        return Err(NumradError::Domain("theta tolerance must be positive".into()));
    }
    let pencil = RealPartPencil::new(a);
    let step = TAU / n_grid as f64;
    let mut g = vec![f64::NEG_INFINITY; n_grid];
    if n_grid.is_multiple_of(2) {
        // λ_max at θ + π is −λ_min at θ
        let half = n_grid / 2;
        for j in 0..half {
            let ev = pencil.spectrum(j as f64 * step)?;
            g[j] = ev[ev.len() - 1];
            g[j + half] = -ev[0];
        }
    } else {
        for (j, slot) in g.iter_mut().enumerate() {
            *slot = pencil.top(j as f64 * step)?;
        }
    }
    let (best_j, best_g) = g
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (j, v)| if v > acc.1 { (j, v) } else { acc });

    let center = best_j as f64 * step;
    let refined = golden_maximize(|th| pencil.top(th), center - step, center + step, opts.theta_tol)?;
    let (theta, value) = if refined.value > best_g {
        (refined.x, refined.value)
    } else {
        (center, best_g)
    };
    Ok(RadiusEstimate {
        value: value.max(0.0),
        theta_star: theta.rem_euclid(TAU),
        grid_points: n_grid,
        refine_width: refined.width,
    })
}

/// Lower estimate of `ω(A)` from sampled unit vectors, each polished by a
/// short ascent on `|⟨Ax, x⟩|`.
///
/// Deterministic in `(trials, seed)`: trial `i` uses its own stream and the
/// reduction is a maximum, so scheduling cannot change the result.
pub fn radius_oracle(a: &ComplexMatrix, trials: usize, seed: u64) -> Result<OracleEstimate> {
    if trials == 0 {
        return Err(NumradError::Domain("oracle needs at least one trial".into()));
    }
    let adj = a.adjoint();
    let value = (0..trials as u64)
        .into_par_iter()
        .map(|i| oracle_trial(a, &adj, seed, i))
        .reduce(|| 0.0, f64::max);
    Ok(OracleEstimate {
        value,
        trials,
        seed,
    })
}

fn normalized(v: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let norm = vec_norm(&v);
    (norm > 0.0 && norm.is_finite()).then(|| v.into_iter().map(|z| z / norm).collect())
}

fn oracle_trial(a: &ComplexMatrix, adj: &ComplexMatrix, seed: u64, index: u64) -> f64 {
    let n = a.dim();
    let mut rng = trial_rng(seed, index);
    let mut x = unit_vector(n, &mut rng);
    let mut ax = a.mul_vec(&x);
    let mut z: Complex64 = ax.iter().zip(&x).map(|(p, q)| p * q.conj()).sum();
    let mut best = z.norm();
    let mut step = ASCENT_INITIAL_STEP;
    for _ in 0..ASCENT_STEPS {
        // |⟨Ax,x⟩| = ⟨H x, x⟩ for H = Re(ē^{iφ} A), φ = arg⟨Ax,x⟩; ascend its Rayleigh quotient
        let phase = if best > 0.0 { z / best } else { Complex64::new(1.0, 0.0) };
        let adj_x = adj.mul_vec(&x);
        let direction: Vec<Complex64> = (0..n)
            .map(|i| (phase.conj() * ax[i] + phase * adj_x[i]) * 0.5 - x[i] * best)
            .collect();
        let Some(direction) = normalized(direction) else {
            break;
        };
        let candidate: Vec<Complex64> = x.iter().zip(&direction).map(|(p, d)| p + d * step).collect();
        let Some(candidate) = normalized(candidate) else {
            break;
        };
        let a_cand = a.mul_vec(&candidate);
        let z_cand: Complex64 = a_cand.iter().zip(&candidate).map(|(p, q)| p * q.conj()).sum();
        if z_cand.norm() > best {
            x = candidate;
            ax = a_cand;
            z = z_cand;
            best = z.norm();
        } else {
            step *= ASCENT_DECAY;
        }
    }
    best
}

/// `(ω(A^k), ω(A)^k)`; the power inequality says the first never exceeds the second.
pub fn power_check(a: &ComplexMatrix, k: u32) -> Result<(f64, f64)> {
    if k == 0 {
        return Err(NumradError::Domain("power must be at least 1".into()));
    }
    let lhs = numerical_radius(&a.pow(k))?;
    let rhs = numerical_radius(a)?.powi(k as i32);
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::{ginibre, haar_unitary};
    use crate::linalg::spectral_norm;

    fn jordan() -> ComplexMatrix {
        ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap()
    }

    #[test]
    fn identity_radius() {
        let est = radius_sweep(&ComplexMatrix::identity(2), 720, 1e-10).unwrap();
        assert!((est.value - 1.0).abs() < 1e-14);
        assert!(est.refine_width <= 1e-10);
    }

    #[test]
    fn jordan_block_radius_is_half() {
        let est = radius_sweep(&jordan(), 720, 1e-10).unwrap();
        assert!((est.value - 0.5).abs() < 1e-14);
    }

    #[test]
    fn hermitian_radius_is_spectral_radius() {
        let d = ComplexMatrix::from_diagonal(&[2.0, -3.0]);
        let est = radius_sweep(&d, 720, 1e-10).unwrap();
        assert!((est.value - 3.0).abs() < 1e-14);
        assert!((est.theta_star - std::f64::consts::PI).abs() < 1e-6);
    }

    #[test]
    fn odd_grid_agrees_with_even_grid() {
        let mut rng = trial_rng(4, 0);
        let a = ginibre(5, &mut rng);
        let even = radius_sweep(&a, 720, 1e-10).unwrap().value;
        let odd = radius_sweep(&a, 721, 1e-10).unwrap().value;
        assert!((even - odd).abs() < 1e-9);
    }

    #[test]
    fn tiny_grid_rejected() {
        assert!(matches!(
            radius_sweep(&jordan(), 4, 1e-10),
            Err(NumradError::Domain(_))
        ));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(radius_oracle(&ComplexMatrix::zeros(3), 10, 1).unwrap().value, 0.0);
        let five = ComplexMatrix::from_real(1, &[5.0]).unwrap();
        assert!((radius_oracle(&five, 3, 1).unwrap().value - 5.0).abs() < 1e-14);
        assert!(radius_oracle(&five, 0, 1).is_err());
    }

    #[test]
    fn oracle_is_deterministic_and_below_sweep() {
        let mut rng = trial_rng(6, 0);
        let a = ginibre(4, &mut rng);
        let first = radius_oracle(&a, 200, 42).unwrap();
        let second = radius_oracle(&a, 200, 42).unwrap();
        assert_eq!(first.value.to_bits(), second.value.to_bits());
        let sweep = numerical_radius(&a).unwrap();
        assert!(first.value <= sweep + 1e-6);
        assert!(first.value >= 0.95 * sweep);
    }

    #[test]
    fn power_check_examples() {
        let a = ComplexMatrix::from_real(2, &[1.0, 2.0, -0.5, 0.3]).unwrap();
        let (l, r) = power_check(&a, 1).unwrap();
        assert_eq!(l, r);
        let (l, r) = power_check(&jordan(), 2).unwrap();
        assert_eq!(l, 0.0);
        assert!((r - 0.25).abs() < 1e-14);
        let mut rng = trial_rng(2, 0);
        let q = haar_unitary(3, &mut rng);
        let (l, r) = power_check(&q, 3).unwrap();
        assert!((l - 1.0).abs() < 1e-9 && (r - 1.0).abs() < 1e-9);
    }

    #[test]
    fn envelope_holds_on_random_matrices() {
        let mut rng = trial_rng(10, 0);
        for n in 1..=6 {
            let a = ginibre(n, &mut rng);
            let w = numerical_radius(&a).unwrap();
            let norm = spectral_norm(&a).unwrap();
            assert!(w <= norm + 1e-8 && w >= norm / 2.0 - 1e-8);
        }
    }
}

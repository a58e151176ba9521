use serde::{Deserialize, Serialize};

use super::{
    BoundContext, BoundFailure, BoundId, BoundReport, BoundValue, WeightParams, DEFAULT_T_GRID,
    DEFAULT_T_REFINE_TOL,
};
use crate::error::{NumradError, Result};
use crate::linalg::ComplexMatrix;
use crate::optimize::golden_minimize;
use crate::radius::{radius_sweep_with, SweepOptions};
use crate::tolerance::Tolerances;

/// Result of minimising a weighted bound over `t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TMinimum {
    pub t_star: f64,
    /// Minimum of the ω-comparable value.
    pub value: f64,
    /// Minimum of the squared-form quantity, when the bound has one.
    pub inner: Option<f64>,
    pub bound: BoundValue,
}

/// Settings for [`compare_all_with`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompareOptions {
    pub t_grid: usize,
    pub refine_tol: f64,
    pub sweep: SweepOptions,
    /// The weighted Aluthge bound needs two radius sweeps per `t`, so it is
    /// searched on its own coarser grid with a cheaper sweep and then
    /// re-evaluated at the chosen `t` with `sweep`.
    pub aluthge_t_grid: usize,
    pub aluthge_refine_tol: f64,
    pub aluthge_sweep: SweepOptions,
    pub tol: Tolerances,
}

impl Default for CompareOptions {
    fn default() -> Self {
        Self {
            t_grid: DEFAULT_T_GRID,
            refine_tol: DEFAULT_T_REFINE_TOL,
            sweep: SweepOptions::default(),
            aluthge_t_grid: 11,
            aluthge_refine_tol: 1e-3,
            aluthge_sweep: SweepOptions {
                grid_points: 64,
                theta_tol: 1e-6,
            },
            tol: Tolerances::default(),
        }
    }
}

/// Grid search on `[t_min, 1 − t_min]` followed by golden-section refinement
/// around the best node. `+∞` evaluations are skipped; NaN is an error.
pub fn minimize_over_t(
    id: BoundId,
    a: &ComplexMatrix,
    grid_points: usize,
    refine_tol: f64,
) -> Result<TMinimum> {
    let ctx = BoundContext::new(a)?;
    minimize_in(&ctx, id, grid_points, refine_tol)
}

pub(crate) fn minimize_in(
    ctx: &BoundContext,
    id: BoundId,
    grid_points: usize,
    refine_tol: f64,
) -> Result<TMinimum> {
    search(ctx, id, grid_points, refine_tol, |w| ctx.evaluate(id, w))
}

fn search(
    ctx: &BoundContext,
    id: BoundId,
    grid_points: usize,
    refine_tol: f64,
    mut eval: impl FnMut(WeightParams) -> Result<BoundValue>,
) -> Result<TMinimum> {
    if !id.is_weighted() {
        return Err(NumradError::Domain(format!("{id} does not depend on t")));
    }
    if grid_points < 2 {
        return Err(NumradError::Domain("t grid needs at least 2 points".into()));
    }
    let tol = ctx.tolerances();
    let (lo, hi) = (tol.t_min, 1.0 - tol.t_min);
    let step = (hi - lo) / (grid_points - 1) as f64;
    let weight = |t: f64| WeightParams::with_tolerances(t.clamp(lo, hi), tol);

    let mut eval_checked = |t: f64| -> Result<BoundValue> {
        let b = eval(weight(t)?)?;
        if b.value.is_nan() {
            return Err(NumradError::NonFinite { t });
        }
        Ok(b)
    };

    let mut best: Option<BoundValue> = None;
    for k in 0..grid_points {
        let t = if k + 1 == grid_points { hi } else { lo + k as f64 * step };
        let b = eval_checked(t)?;
        if b.value.is_finite() && best.as_ref().is_none_or(|c| b.value < c.value) {
            best = Some(b);
        }
    }
    let Some(mut best) = best else {
        return Err(NumradError::NonFinite { t: 0.5 });
    };

    let center = best.t_used.expect("weighted");
    let (a, b) = ((center - step).max(lo), (center + step).min(hi));
    if b - a > refine_tol {
        let refined = golden_minimize(|t| eval_checked(t).map(|v| v.value), a, b, refine_tol)?;
        if refined.value < best.value {
            best = eval_checked(refined.x)?;
        }
    }
    Ok(TMinimum {
        t_star: best.t_used.expect("weighted"),
        value: best.value,
        inner: best.inner,
        bound: best,
    })
}

/// [`compare_all_with`] under default options.
pub fn compare_all(a: &ComplexMatrix) -> Result<BoundReport> {
    compare_all_with(a, &BoundId::ALL, &CompareOptions::default())
}

/// `ω(A)` and the requested bounds, weighted ones minimised over `t`.
///
/// A bound that fails is listed under `failures`; only a failure of the
/// polar decomposition or of `ω(A)` itself aborts the report.
pub fn compare_all_with(
    a: &ComplexMatrix,
    ids: &[BoundId],
    opts: &CompareOptions,
) -> Result<BoundReport> {
    let omega = radius_sweep_with(a, &opts.sweep)?;
    let ctx = BoundContext::with_options(a, opts.sweep, opts.tol)?;
    let mut bounds = Vec::new();
    let mut failures = Vec::new();
    for &id in ids {
        match evaluate_best(&ctx, id, opts) {
            Ok(b) => bounds.push(b),
            Err(e) => failures.push(BoundFailure {
                id,
                message: e.to_string(),
            }),
        }
    }
    bounds.sort_by(|x, y| x.value.total_cmp(&y.value).then(x.id.cmp(&y.id)));
    let slacks = bounds.iter().map(|b| b.value - omega.value).collect();
    Ok(BoundReport {
        omega,
        bounds,
        slacks,
        failures,
    })
}

fn evaluate_best(ctx: &BoundContext, id: BoundId, opts: &CompareOptions) -> Result<BoundValue> {
    if !id.is_weighted() {
        return ctx.evaluate(id, WeightParams::half());
    }
    if id == BoundId::AluthgeT {
        let coarse = search(ctx, id, opts.aluthge_t_grid, opts.aluthge_refine_tol, |w| {
            ctx.aluthge_t_with(w, &opts.aluthge_sweep)
        })?;
        let w = WeightParams::with_tolerances(coarse.t_star, ctx.tolerances())?;
        return ctx.aluthge_t(w);
    }
    Ok(minimize_in(ctx, id, opts.t_grid, opts.refine_tol)?.bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::{cyclic_shift, ginibre, hermitian, trial_rng};

    #[test]
    fn example1_weighted_power_minimum() {
        let m = minimize_over_t(BoundId::WeightedPower, &cyclic_shift(&[2.0, 3.0, 4.0]), 1001, 1e-8)
            .unwrap();
        let inner = m.inner.unwrap();
        assert!((inner - 12.002).abs() < 5e-3, "{inner}");
        assert!(m.value < 3.5);
    }

    #[test]
    fn example2_fourth_power_minimum() {
        // diagonal operand; branches (81^{1-t}+256^t)/4+(9+7t)/2 and (256^{1-t}+16^t)/4+(16-12t)/2 cross here
        let m = minimize_over_t(BoundId::FourthPower, &cyclic_shift(&[3.0, 4.0, 2.0]), 1001, 1e-8)
            .unwrap();
        assert!((m.inner.unwrap() - 11.8287).abs() < 1e-4, "{}", m.inner.unwrap());
        assert!((m.t_star - 0.43876).abs() < 1e-4);
        assert!(m.value < 3.5);
    }

    #[test]
    fn hermitian_minimizer_is_half() {
        let mut rng = trial_rng(3, 0);
        let h = hermitian(3, &mut rng);
        let m = minimize_over_t(BoundId::WeightedR, &h, 101, 1e-8).unwrap();
        let norm = crate::linalg::hermitian_norm(&h).unwrap();
        assert!((m.value - norm).abs() < 1e-9);
    }

    #[test]
    fn minimum_beats_every_grid_node() {
        let mut rng = trial_rng(5, 0);
        let a = ginibre(4, &mut rng);
        let ctx = BoundContext::new(&a).unwrap();
        let m = minimize_in(&ctx, BoundId::Product, 51, 1e-8).unwrap();
        for k in 0..51 {
            let t = 1e-3 + k as f64 * (1.0 - 2e-3) / 50.0;
            let v = ctx.product(WeightParams::new(t.min(1.0 - 1e-3)).unwrap()).unwrap();
            assert!(m.value <= v.value);
        }
    }

    #[test]
    fn unweighted_bound_rejected() {
        assert!(minimize_over_t(BoundId::KittSum, &ComplexMatrix::identity(2), 11, 1e-8).is_err());
    }

    #[test]
    fn zero_matrix_report_is_all_zero() {
        let r = compare_all(&ComplexMatrix::zeros(3)).unwrap();
        assert!(r.failures.is_empty());
        assert_eq!(r.bounds.len(), 14);
        for b in &r.bounds {
            assert_eq!(b.value, 0.0, "{}", b.id);
        }
    }

    #[test]
    fn example1_report_ordering() {
        let r = compare_all(&cyclic_shift(&[2.0, 3.0, 4.0])).unwrap();
        let get = |id| r.get(id).unwrap().value;
        assert!(get(BoundId::WeightedPower) < get(BoundId::KittSum));
        assert!(get(BoundId::KittSum) < get(BoundId::KittSquare));
        assert!(r.min_slack() >= -1e-7);
        assert!(r.bounds.windows(2).all(|w| w[0].value <= w[1].value));
    }
}

use std::sync::OnceLock;

use super::{BoundId, BoundValue, WeightParams};
use crate::error::Result;
use crate::linalg::{eigenvalues_unchecked, spectral_norm, ComplexMatrix, PsdFactor};
use crate::polar::{polar, PolarDecomposition};
use crate::radius::{radius_sweep_with, SweepOptions};
use crate::tolerance::Tolerances;

/// Midpoint nodes used to cross-check the closed-form integral.
pub const QUADRATURE_POINTS: usize = 1000;

/// Everything the catalog needs about one matrix, computed once.
///
/// Holds the polar data (`X = |A|`, `Y = |A*|` in factored form) and lazily
/// caches the numerical radii that several bounds share.
pub struct BoundContext {
    a: ComplexMatrix,
    polar: PolarDecomposition,
    x: ComplexMatrix,
    y: ComplexMatrix,
    x2: ComplexMatrix,
    y2: ComplexMatrix,
    /// `V_X* V_Y`, the change of basis between the eigenbases of `X` and `Y`.
    cross: ComplexMatrix,
    sweep: SweepOptions,
    tol: Tolerances,
    omega_a: OnceLock<f64>,
    omega_a2: OnceLock<f64>,
    aluthge_half: OnceLock<HalfTransform>,
}

struct HalfTransform {
    transform: ComplexMatrix,
    norm: f64,
    omega: f64,
    omega_sq: f64,
}

/// Norm of a Hermitian matrix assembled from Hermitian pieces.
fn herm_norm(h: &ComplexMatrix) -> Result<f64> {
    let ev = eigenvalues_unchecked(h)?;
    Ok(ev[0].abs().max(ev[ev.len() - 1].abs()))
}

/// `‖M‖ = λ_max(M*M)^{1/2}`.
fn gram_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(herm_norm(&m.gram())?.sqrt())
}

impl BoundContext {
    pub fn new(a: &ComplexMatrix) -> Result<Self> {
        Self::with_options(a, SweepOptions::default(), Tolerances::default())
    }

    pub fn with_options(a: &ComplexMatrix, sweep: SweepOptions, tol: Tolerances) -> Result<Self> {
        let polar = polar(a)?;
        let x = polar.abs_factor().matrix();
        let y = polar.co_abs_factor().matrix();
        let x2 = polar.abs_factor().power(2.0)?;
        let y2 = polar.co_abs_factor().power(2.0)?;
        let cross = polar
            .abs_factor()
            .vectors()
            .adjoint()
            .matmul(polar.co_abs_factor().vectors());
        Ok(Self {
            a: a.clone(),
            polar,
            x,
            y,
            x2,
            y2,
            cross,
            sweep,
            tol,
            omega_a: OnceLock::new(),
            omega_a2: OnceLock::new(),
            aluthge_half: OnceLock::new(),
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.a
    }

    pub fn polar(&self) -> &PolarDecomposition {
        &self.polar
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }

    pub fn sweep_options(&self) -> &SweepOptions {
        &self.sweep
    }

    pub fn norm(&self) -> f64 {
        self.polar.norm()
    }

    fn abs(&self) -> &PsdFactor {
        self.polar.abs_factor()
    }

    fn co_abs(&self) -> &PsdFactor {
        self.polar.co_abs_factor()
    }

    fn radius(&self, m: &ComplexMatrix) -> Result<f64> {
        Ok(radius_sweep_with(m, &self.sweep)?.value)
    }

    /// `‖Ã‖`.
    pub fn aluthge_norm(&self) -> Result<f64> {
        Ok(self.half()?.norm)
    }

    fn cached(&self, cell: &OnceLock<f64>, f: impl FnOnce() -> Result<f64>) -> Result<f64> {
        if let Some(&v) = cell.get() {
            return Ok(v);
        }
        let v = f()?;
        Ok(*cell.get_or_init(|| v))
    }

    /// `ω(A)` from the angle sweep.
    pub fn omega(&self) -> Result<f64> {
        self.cached(&self.omega_a, || self.radius(&self.a))
    }

    /// `ω(A²)`.
    pub fn omega_of_square(&self) -> Result<f64> {
        self.cached(&self.omega_a2, || self.radius(&self.a.pow(2)))
    }

    fn half(&self) -> Result<&HalfTransform> {
        if let Some(h) = self.aluthge_half.get() {
            return Ok(h);
        }
        let transform = self.polar.transform(0.5)?;
        let omega = self.radius(&transform)?;
        let omega_sq = self.radius(&transform.pow(2))?;
        let norm = spectral_norm(&transform)?;
        Ok(self.aluthge_half.get_or_init(|| HalfTransform {
            transform,
            norm,
            omega,
            omega_sq,
        }))
    }

    /// `Ã = Ã_{1/2}`.
    pub fn aluthge_transform(&self) -> Result<ComplexMatrix> {
        Ok(self.half()?.transform.clone())
    }

    pub fn evaluate(&self, id: BoundId, w: WeightParams) -> Result<BoundValue> {
        match id {
            BoundId::Classic => self.classic(),
            BoundId::KittSum => self.kitt_sum(),
            BoundId::KittSquare => self.kitt_square(),
            BoundId::KittMixed => self.kitt_mixed(),
            BoundId::Integral => self.integral(),
            BoundId::IntegralRefined => self.integral_refined(),
            BoundId::Yamazaki => self.yamazaki(),
            BoundId::AluthgeT => self.aluthge_t(w),
            BoundId::AluthgeHalf => self.aluthge_half(),
            BoundId::WeightedPower => self.weighted_power(w),
            BoundId::WeightedR => self.weighted_r(w),
            BoundId::Product => self.product(w),
            BoundId::FourthPower => self.fourth_power(w),
            BoundId::SchwarzRadius => self.schwarz_radius(w),
        }
    }

    pub fn classic(&self) -> Result<BoundValue> {
        Ok(BoundValue::new(BoundId::Classic, None, self.norm()).with("lower", self.norm() / 2.0))
    }

    pub fn kitt_sum(&self) -> Result<BoundValue> {
        let n = herm_norm(&(&self.x + &self.y))?;
        Ok(BoundValue::new(BoundId::KittSum, None, n / 2.0).with("norm_x_plus_y", n))
    }

    pub fn kitt_square(&self) -> Result<BoundValue> {
        let n = herm_norm(&(&self.x2 + &self.y2))?;
        Ok(BoundValue::squared(BoundId::KittSquare, None, n / 2.0).with("norm_x2_plus_y2", n))
    }

    pub fn kitt_mixed(&self) -> Result<BoundValue> {
        let sq = spectral_norm(&self.a.pow(2))?;
        Ok(
            BoundValue::new(BoundId::KittMixed, None, (self.norm() + sq.sqrt()) / 2.0)
                .with("norm_a", self.norm())
                .with("norm_a_squared", sq),
        )
    }

    /// `(X² + Y²)/3 + (XY + YX)/6 = ∫₀¹((1−t)X + tY)² dt`.
    fn integral_operand(&self) -> ComplexMatrix {
        let xy = self.x.matmul(&self.y);
        let cross = &xy + &xy.adjoint();
        (&self.x2 + &self.y2).combine(1.0 / 3.0, &cross, 1.0 / 6.0)
    }

    /// Norm of the midpoint-rule approximation of `∫₀¹((1−t)X + tY)² dt`.
    pub fn integral_quadrature(&self, points: usize) -> Result<f64> {
        let n = self.a.dim();
        let mut acc = ComplexMatrix::zeros(n);
        let h = 1.0 / points as f64;
        for k in 0..points {
            let t = (k as f64 + 0.5) * h;
            let m = self.x.combine(1.0 - t, &self.y, t);
            acc = acc.combine(1.0, &m.matmul(&m), h);
        }
        herm_norm(&acc)
    }

    pub fn integral(&self) -> Result<BoundValue> {
        let inner = herm_norm(&self.integral_operand())?;
        let quad = self.integral_quadrature(QUADRATURE_POINTS)?;
        Ok(BoundValue::squared(BoundId::Integral, None, inner)
            .with("quadrature_inner", quad)
            .with("quadrature_gap", (quad - inner).abs()))
    }

    pub fn integral_refined(&self) -> Result<BoundValue> {
        let diff = &self.x - &self.y;
        let correction = diff.matmul(&diff);
        let operand = self.integral_operand().combine(1.0, &correction, -1.0 / 48.0);
        let inner = herm_norm(&operand)?;
        Ok(BoundValue::squared(BoundId::IntegralRefined, None, inner)
            .with("norm_correction", herm_norm(&correction)? / 48.0))
    }

    pub fn yamazaki(&self) -> Result<BoundValue> {
        let half = self.half()?;
        Ok(
            BoundValue::new(BoundId::Yamazaki, None, (self.norm() + half.omega) / 2.0)
                .with("omega_aluthge", half.omega),
        )
    }

    /// Weighted Aluthge bound; its five summands are recorded in `detail`.
    pub fn aluthge_t(&self, w: WeightParams) -> Result<BoundValue> {
        self.aluthge_t_with(w, &self.sweep)
    }

    /// [`Self::aluthge_t`] with its two radii taken from a different sweep.
    pub fn aluthge_t_with(&self, w: WeightParams, sweep: &SweepOptions) -> Result<BoundValue> {
        let t = w.t();
        let abs = self.abs();
        let transform = self.polar.transform(t)?;
        let (omega, omega_sq) = if t == 0.5 && *sweep == self.sweep {
            let half = self.half()?;
            (half.omega, half.omega_sq)
        } else {
            (
                radius_sweep_with(&transform, sweep)?.value,
                radius_sweep_with(&transform.pow(2), sweep)?.value,
            )
        };
        let quartic = herm_norm(&(&abs.power(4.0 * t)? + &abs.power(4.0 * (1.0 - t))?))?;
        let quadratic = herm_norm(&(&abs.power(2.0 * t)? + &abs.power(2.0 * (1.0 - t))?))?;
        let moduli = herm_norm(&(&transform.gram() + &transform.cogram()))?;
        let terms = [
            quartic / 4.0,
            self.norm() * self.norm() / 2.0,
            moduli / 4.0,
            omega_sq / 2.0,
            quadratic * omega,
        ];
        let sum: f64 = terms.iter().sum();
        Ok(BoundValue::new(BoundId::AluthgeT, Some(t), 0.5 * sum.sqrt())
            .with("term_quartic", terms[0])
            .with("term_norm", terms[1])
            .with("term_moduli", terms[2])
            .with("term_omega_square", terms[3])
            .with("term_cross", terms[4]))
    }

    pub fn aluthge_half(&self) -> Result<BoundValue> {
        let half = self.half()?;
        let t = &half.transform;
        let moduli = herm_norm(&(&t.gram() + &t.cogram()))?;
        let norm = self.norm();
        let sum = norm * norm + moduli / 4.0 + half.omega_sq / 2.0 + 2.0 * norm * half.omega;
        Ok(BoundValue::new(BoundId::AluthgeHalf, None, 0.5 * sum.sqrt())
            .with("omega_aluthge", half.omega)
            .with("norm_aluthge", half.norm)
            .with("omega_aluthge_squared", half.omega_sq)
            .with("norm_moduli", moduli))
    }

    pub fn weighted_power(&self, w: WeightParams) -> Result<BoundValue> {
        let t = w.t();
        let (ex, ey) = (1.0 / (1.0 - t), 1.0 / t);
        if !self.abs().power_fits(ex) || !self.co_abs().power_fits(ey) {
            return Ok(diverged(BoundId::WeightedPower, t));
        }
        let operand = self
            .abs()
            .power(ex)?
            .combine(1.0 - t, &self.co_abs().power(ey)?, t);
        Ok(BoundValue::squared(BoundId::WeightedPower, Some(t), herm_norm(&operand)?))
    }

    pub fn weighted_r(&self, w: WeightParams) -> Result<BoundValue> {
        let t = w.t();
        let c = t * (1.0 - t) / w.r_cap();
        let diff = &self.x - &self.y;
        let operand = (&self.x2 + &self.y2).combine(1.0, &diff.matmul(&diff), -c);
        Ok(BoundValue::squared(BoundId::WeightedR, Some(t), herm_norm(&operand)? / 2.0)
            .with("r_cap", w.r_cap()))
    }

    /// `‖X^r Y^r‖ = ‖diag(σ^r) · V_X*V_Y · diag(σ^r)‖`.
    fn power_product_norm(&self, r: f64) -> Result<f64> {
        let pow = |l: f64| if l > 0.0 { l.powf(r) } else { 0.0 };
        let dx: Vec<f64> = self.abs().values().iter().map(|&l| pow(l)).collect();
        let dy: Vec<f64> = self.co_abs().values().iter().map(|&l| pow(l)).collect();
        let mut m = self.cross.clone();
        let n = m.dim();
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] *= dx[i] * dy[j];
            }
        }
        gram_norm(&m)
    }

    pub fn product(&self, w: WeightParams) -> Result<BoundValue> {
        let t = w.t();
        let first = self.power_product_norm(t)?;
        let second = self.power_product_norm(1.0 - t)?;
        let value = 0.5 * (self.norm() + (first * second).sqrt());
        Ok(BoundValue::new(BoundId::Product, Some(t), value)
            .with("norm_t", first)
            .with("norm_one_minus_t", second))
    }

    pub fn fourth_power(&self, w: WeightParams) -> Result<BoundValue> {
        let t = w.t();
        let quartic = &self.abs().power(4.0 * (1.0 - t))? + &self.co_abs().power(4.0 * t)?;
        let mixed = self.x2.combine(1.0 - t, &self.y2, t);
        let operand = quartic.combine(0.25, &mixed, 0.5);
        Ok(BoundValue::squared(BoundId::FourthPower, Some(t), herm_norm(&operand)?))
    }

    pub fn schwarz_radius(&self, w: WeightParams) -> Result<BoundValue> {
        let t = w.t();
        let (ex, ey) = (2.0 / t, 2.0 / (1.0 - t));
        if !self.abs().power_fits(ex) || !self.co_abs().power_fits(ey) {
            return Ok(diverged(BoundId::SchwarzRadius, t));
        }
        let operand = self
            .abs()
            .power(ex)?
            .combine(t, &self.co_abs().power(ey)?, 1.0 - t);
        let norm = herm_norm(&operand)?;
        let omega_sq = self.omega_of_square()?;
        Ok(
            BoundValue::squared(BoundId::SchwarzRadius, Some(t), 0.5 * (norm.sqrt() + omega_sq))
                .with("norm_weighted", norm)
                .with("omega_a_squared", omega_sq),
        )
    }
}

fn diverged(id: BoundId, t: f64) -> BoundValue {
    BoundValue {
        inner: Some(f64::INFINITY),
        ..BoundValue::new(id, Some(t), f64::INFINITY)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensemble::{cyclic_shift, ginibre, haar_unitary, hermitian, trial_rng};
    use crate::linalg::hermitian_norm;

    fn jordan() -> ComplexMatrix {
        ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0]).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn jordan_block_hand_values() {
        let ctx = BoundContext::new(&jordan()).unwrap();
        let half = WeightParams::half();
        assert!(close(ctx.kitt_sum().unwrap().value, 0.5, 1e-15));
        assert!(close(ctx.kitt_square().unwrap().value, 0.5f64.sqrt(), 1e-15));
        assert!(close(ctx.kitt_mixed().unwrap().value, 0.5, 1e-15));
        assert!(close(ctx.integral().unwrap().value, (1.0f64 / 3.0).sqrt(), 1e-15));
        assert!(close(ctx.integral_refined().unwrap().value, (5.0f64 / 16.0).sqrt(), 1e-15));
        assert!(close(ctx.yamazaki().unwrap().value, 0.5, 1e-15));
        assert!(close(ctx.aluthge_half().unwrap().value, 0.5, 1e-15));
        assert!(close(ctx.product(half).unwrap().value, 0.5, 1e-15));
        let schwarz = ctx.schwarz_radius(half).unwrap().value;
        assert!(close(schwarz, (0.5 * 0.5f64.sqrt()).sqrt(), 1e-14));
        // Ã = 0, X^{2} + X^{2} = 2·diag(0,1), X⁴ likewise: ½·sqrt(¼·2 + ½ + 2·0)
        let t1 = ctx.aluthge_t(half).unwrap();
        assert!(close(t1.value, 0.5 * (0.5f64 + 0.5).sqrt(), 1e-15));
    }

    #[test]
    fn example1_hand_values() {
        let ctx = BoundContext::new(&cyclic_shift(&[2.0, 3.0, 4.0])).unwrap();
        assert!(close(ctx.kitt_sum().unwrap().value, 3.5, 1e-12));
        assert!(close(ctx.kitt_square().unwrap().inner.unwrap(), 12.5, 1e-12));
        assert!(close(ctx.kitt_mixed().unwrap().value, (4.0 + 12f64.sqrt()) / 2.0, 1e-12));
        let yam = ctx.yamazaki().unwrap().value;
        assert!(yam <= ctx.kitt_mixed().unwrap().value + 1e-8);
    }

    #[test]
    fn example2_kitt_sum() {
        let ctx = BoundContext::new(&cyclic_shift(&[3.0, 4.0, 2.0])).unwrap();
        assert!(close(ctx.kitt_sum().unwrap().value, 3.5, 1e-12));
    }

    #[test]
    fn normal_matrices() {
        let mut rng = trial_rng(31, 0);
        let q = haar_unitary(3, &mut rng);
        let ctx = BoundContext::new(&q).unwrap();
        assert!(close(ctx.kitt_square().unwrap().value, 1.0, 1e-12));
        assert!(close(ctx.kitt_mixed().unwrap().value, 1.0, 1e-12));
        assert!(close(ctx.aluthge_half().unwrap().value, 1.0, 1e-9));
        assert!(close(ctx.yamazaki().unwrap().value, 1.0, 1e-9));
        let h = hermitian(4, &mut rng);
        let norm = hermitian_norm(&h).unwrap();
        let ctx = BoundContext::new(&h).unwrap();
        assert!(close(ctx.integral().unwrap().value, norm, 1e-10));
        assert!(close(ctx.integral_refined().unwrap().value, norm, 1e-10));
        assert!(close(ctx.weighted_r(WeightParams::new(0.3).unwrap()).unwrap().value, norm, 1e-10));
    }

    #[test]
    fn product_matches_direct_norms() {
        let mut rng = trial_rng(32, 0);
        let a = ginibre(5, &mut rng);
        let ctx = BoundContext::new(&a).unwrap();
        let p = ctx.polar();
        for t in [0.1, 0.5, 0.83] {
            let direct = spectral_norm(&p.abs_factor().power(t).unwrap().matmul(&p.co_abs_factor().power(t).unwrap())).unwrap();
            let b = ctx.product(WeightParams::new(t).unwrap()).unwrap();
            assert!(close(b.detail["norm_t"], direct, 1e-10 * direct.max(1.0)));
        }
    }

    #[test]
    fn half_weight_specializations() {
        let mut rng = trial_rng(33, 0);
        for n in 2..=6 {
            let ctx = BoundContext::new(&ginibre(n, &mut rng)).unwrap();
            let half = WeightParams::half();
            let square = ctx.kitt_square().unwrap().value;
            assert!(close(ctx.weighted_power(half).unwrap().value, square, 1e-10));
            assert!(close(ctx.fourth_power(half).unwrap().value, square, 1e-10));
            assert!(close(ctx.weighted_r(half).unwrap().value, ctx.kitt_sum().unwrap().value, 1e-10));
            assert!(close(ctx.aluthge_t(half).unwrap().value, ctx.aluthge_half().unwrap().value, 1e-10));
        }
    }

    #[test]
    fn integral_quadrature_agrees() {
        let mut rng = trial_rng(34, 0);
        let ctx = BoundContext::new(&ginibre(4, &mut rng)).unwrap();
        let b = ctx.integral().unwrap();
        let inner = b.inner.unwrap();
        assert!(b.detail["quadrature_gap"] <= 1e-6 * inner.max(1.0));
    }

    #[test]
    fn large_weights_diverge_instead_of_overflowing() {
        let a = ComplexMatrix::from_diagonal(&[1e3, 2.0]);
        let ctx = BoundContext::new(&a).unwrap();
        let b = ctx.weighted_power(WeightParams::new(0.01).unwrap()).unwrap();
        assert!(b.value.is_infinite());
        assert!(ctx.weighted_power(WeightParams::half()).unwrap().value.is_finite());
    }
}

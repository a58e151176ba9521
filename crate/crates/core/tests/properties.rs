use proptest::prelude::*;

use numrad::bounds::{minimize_over_t, BoundContext, BoundId, WeightParams};
use numrad::ensemble::{psd, trial_rng, Ensemble};
use numrad::io::{parse_matrix, to_json};
use numrad::linalg::{frac_power, spectral_norm, svd};
use numrad::pointwise::{kato, mccarthy, UnitVector};
use numrad::polar::{aluthge, polar};
use numrad::radius::{numerical_radius, radius_oracle};
use numrad::{Complex64, ComplexMatrix};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

prop_compose! {
    fn any_matrix(max_n: usize)(seed in any::<u64>(), n in 2..=max_n, e in 0..5usize) -> ComplexMatrix {
        Ensemble::ALL[e].sample(n, &mut trial_rng(seed, 0))
    }
}

prop_compose! {
    fn entries(max_n: usize)(n in 1..=max_n)(
        n in Just(n),
        v in prop::collection::vec((-1e6..1e6f64, -1e6..1e6f64), n * n),
    ) -> ComplexMatrix {
        ComplexMatrix::new(n, v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect()).unwrap()
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn every_bound_dominates_the_radius(a in any_matrix(6), t in 0.01..0.99f64) {
        let ctx = BoundContext::new(&a).unwrap();
        let omega = ctx.omega().unwrap();
        let w = WeightParams::new(t).unwrap();
        for id in BoundId::ALL {
            let b = ctx.evaluate(id, w).unwrap();
            prop_assert!(b.value >= omega - 1e-7, "{id}: {} < {omega}", b.value);
        }
    }

    #[test]
    fn radius_lies_in_the_norm_envelope(a in any_matrix(8)) {
        let omega = numerical_radius(&a).unwrap();
        let norm = spectral_norm(&a).unwrap();
        prop_assert!(omega <= norm + 1e-8);
        prop_assert!(omega >= norm / 2.0 - 1e-8);
    }

    #[test]
    fn radius_is_rotation_invariant(a in any_matrix(6), phi in 0.0..std::f64::consts::TAU) {
        let rotated = a.scale_complex(Complex64::from_polar(1.0, phi));
        let (w0, w1) = (numerical_radius(&a).unwrap(), numerical_radius(&rotated).unwrap());
        prop_assert!((w0 - w1).abs() <= 1e-9 * w0.max(1.0));
    }

    #[test]
    fn oracle_never_exceeds_sweep(a in any_matrix(5), seed in any::<u64>()) {
        let oracle = radius_oracle(&a, 200, seed).unwrap().value;
        prop_assert!(oracle <= numerical_radius(&a).unwrap() + 1e-6);
    }

    #[test]
    fn polar_factors_reconstruct(a in any_matrix(8)) {
        let p = polar(&a).unwrap();
        let scale = spectral_norm(&a).unwrap().max(1.0);
        prop_assert!(p.reconstruct().max_abs_diff(&a) <= 1e-9 * scale);
    }

    #[test]
    fn aluthge_norm_is_dominated(a in any_matrix(6), t in 0.001..0.999f64) {
        let w = aluthge(&a, t).unwrap();
        let norm = spectral_norm(&a).unwrap();
        prop_assert!(spectral_norm(&w.transform).unwrap() <= norm + 1e-9 * norm.max(1.0));
    }

    #[test]
    fn half_weight_specializations(a in any_matrix(6)) {
        let ctx = BoundContext::new(&a).unwrap();
        let h = WeightParams::half();
        let square = ctx.kitt_square().unwrap().value;
        prop_assert!((ctx.weighted_power(h).unwrap().value - square).abs() <= 1e-10);
        prop_assert!((ctx.fourth_power(h).unwrap().value - square).abs() <= 1e-10);
        prop_assert!((ctx.weighted_r(h).unwrap().value - ctx.kitt_sum().unwrap().value).abs() <= 1e-10);
    }

    #[test]
    fn refinement_chain(a in any_matrix(8)) {
        let ctx = BoundContext::new(&a).unwrap();
        let square = ctx.kitt_square().unwrap().value;
        let integral = ctx.integral().unwrap().value;
        prop_assert!(ctx.integral_refined().unwrap().value <= integral + 1e-10);
        prop_assert!(integral <= square + 1e-9);
        prop_assert!(ctx.kitt_sum().unwrap().value <= square + 1e-9);
        prop_assert!(ctx.yamazaki().unwrap().value <= ctx.kitt_mixed().unwrap().value + 1e-8);
    }

    #[test]
    fn hermitian_objectives_are_symmetric(seed in any::<u64>(), n in 2..6usize, t in 0.01..0.99f64) {
        let a = Ensemble::Hermitian.sample(n, &mut trial_rng(seed, 1));
        let ctx = BoundContext::new(&a).unwrap();
        let (w, v) = (WeightParams::new(t).unwrap(), WeightParams::new(1.0 - t).unwrap());
        for id in [BoundId::WeightedPower, BoundId::WeightedR, BoundId::Product, BoundId::FourthPower] {
            let (p, q) = (ctx.evaluate(id, w).unwrap().value, ctx.evaluate(id, v).unwrap().value);
            prop_assert!((p - q).abs() <= 1e-10 * p.max(1.0), "{id}: {p} vs {q}");
        }
    }

    #[test]
    fn frac_powers_compose(seed in any::<u64>(), n in 1..6usize) {
        let p = psd(n, &mut trial_rng(seed, 2));
        for (a, b) in [(0.5, 2.0), (2.0, 1.0 / 3.0), (1.0 / 3.0, 0.5)] {
            let lhs = frac_power(&frac_power(&p, a).unwrap(), b).unwrap();
            let rhs = frac_power(&p, a * b).unwrap();
            prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-9 * rhs.max_abs().max(1.0));
        }
    }

    #[test]
    fn singular_values_are_adjoint_invariant(a in any_matrix(8)) {
        let s = svd(&a).unwrap();
        let norm = spectral_norm(&a.adjoint()).unwrap();
        prop_assert!((s.sigma[0] - norm).abs() <= 1e-12 * norm.max(1.0));
    }

    #[test]
    fn json_round_trip_is_exact(a in entries(5)) {
        let back = parse_matrix(to_json(&a, None).as_bytes()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn kato_margin_nonnegative(a in any_matrix(6), seed in any::<u64>(), t in 0.001..0.999f64) {
        let mut rng = trial_rng(seed, 3);
        let (x, y) = (UnitVector::random(a.dim(), &mut rng), UnitVector::random(a.dim(), &mut rng));
        prop_assert!(kato(&a, &x, &y, t).unwrap().holds(1e-9));
    }

    #[test]
    fn mccarthy_margin_nonnegative(seed in any::<u64>(), n in 1..6usize, r in 0.05..5.0f64) {
        let mut rng = trial_rng(seed, 4);
        let p = psd(n, &mut rng);
        let x = UnitVector::random(n, &mut rng);
        prop_assert!(mccarthy(&p, &x, r).unwrap().holds(1e-9));
    }
}

proptest! {
    #![proptest_config(config(6))]

    #[test]
    fn minimum_is_no_worse_than_any_node(a in any_matrix(4)) {
        for id in [BoundId::WeightedPower, BoundId::FourthPower, BoundId::Product] {
            let m = minimize_over_t(id, &a, 41, 1e-8).unwrap();
            let ctx = BoundContext::new(&a).unwrap();
            prop_assert!((ctx.evaluate(id, WeightParams::new(m.t_star).unwrap()).unwrap().value - m.value).abs() <= 1e-12 * m.value.max(1.0));
            for k in 0..41 {
                let t = 1e-3 + (1.0 - 2e-3) * k as f64 / 40.0;
                let v = ctx.evaluate(id, WeightParams::new(t).unwrap()).unwrap().value;
                prop_assert!(m.value <= v + 1e-12 * v.max(1.0));
            }
        }
    }
}

//! Minimising a weighted bound over `t` and tracing its objective.

use numrad::bounds::{minimize_over_t, BoundContext, BoundId, WeightParams};
use numrad::ensemble::cyclic_shift;

fn main() -> numrad::Result<()> {
    let a = cyclic_shift(&[2.0, 3.0, 4.0]);
    let ctx = BoundContext::new(&a)?;
    println!("ω(A) = {:.6}", ctx.omega()?);

    for id in [BoundId::WeightedPower, BoundId::FourthPower, BoundId::WeightedR, BoundId::Product] {
        let m = minimize_over_t(id, &a, 1001, 1e-8)?;
        match m.inner {
            Some(inner) => println!("{id:>15}: min {:.6} (squared {inner:.6}) at t = {:.6}", m.value, m.t_star),
            None => println!("{id:>15}: min {:.6} at t = {:.6}", m.value, m.t_star),
        }
    }

    println!("\nweighted-power objective");
    for k in 1..10 {
        let t = k as f64 / 10.0;
        let b = ctx.weighted_power(WeightParams::new(t)?)?;
        println!("  t = {t:.1}  {:.6}", b.inner.unwrap_or(f64::NAN));
    }
    Ok(())
}

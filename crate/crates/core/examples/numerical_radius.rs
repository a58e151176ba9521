//! Numerical radius by angle sweep, checked against random sampling and the
//! norm envelope.
//!
//! ```text
//! cargo run --example numerical_radius
//! ```

use numrad::ensemble::{cyclic_shift, trial_rng, Ensemble};
use numrad::linalg::spectral_norm;
use numrad::radius::{power_check, radius_oracle, radius_sweep};

fn main() -> numrad::Result<()> {
    let a = cyclic_shift(&[2.0, 3.0, 4.0]);
    let sweep = radius_sweep(&a, 720, 1e-10)?;
    let oracle = radius_oracle(&a, 10_000, 1)?;
    let norm = spectral_norm(&a)?;
    println!("weighted shift (2, 3, 4)");
    println!("  ω (sweep)    {:.12}  at θ = {:.6}", sweep.value, sweep.theta_star);
    println!("  ω (sampled)  {:.12}  from {} starts", oracle.value, oracle.trials);
    println!("  ‖A‖/2 = {:.6} ≤ ω ≤ ‖A‖ = {:.6}", norm / 2.0, norm);

    let (lhs, rhs) = power_check(&a, 3)?;
    println!("  ω(A³) = {lhs:.6} ≤ ω(A)³ = {rhs:.6}");

    let mut rng = trial_rng(42, 0);
    for ensemble in Ensemble::ALL {
        let m = ensemble.sample(5, &mut rng);
        let w = radius_sweep(&m, 720, 1e-10)?.value;
        println!("{ensemble:>22}: ω = {w:.6}, ‖A‖ = {:.6}", spectral_norm(&m)?);
    }
    Ok(())
}

//! Polar decomposition `A = U|A|` and the weighted Aluthge transform
//! `|A|^{1−t} U |A|^t`.

use numrad::ensemble::{ginibre, trial_rng};
use numrad::linalg::spectral_norm;
use numrad::polar::{aluthge, polar};
use numrad::radius::numerical_radius;
use numrad::ComplexMatrix;

fn main() -> numrad::Result<()> {
    let a = ginibre(4, &mut trial_rng(7, 0));
    let p = polar(&a)?;
    println!("reconstruction error  {:.2e}", p.reconstruct().max_abs_diff(&a));
    println!("‖A‖ = {:.6}", p.norm());

    for t in [0.1, 0.25, 0.5, 0.75, 0.9] {
        let w = aluthge(&a, t)?;
        println!(
            "t = {t:<4}  ‖Ã_t‖ = {:.6}  ω(Ã_t) = {:.6}",
            spectral_norm(&w.transform)?,
            numerical_radius(&w.transform)?
        );
    }

    // Singular input: U vanishes on the kernel of |A|.
    let j = ComplexMatrix::from_real(2, &[0.0, 1.0, 0.0, 0.0])?;
    let pj = polar(&j)?;
    println!("\nJordan block");
    println!("  |A|  = {:?}", pj.positive.as_slice().iter().map(|z| z.re).collect::<Vec<_>>());
    println!("  Ã    = {:?}", aluthge(&j, 0.5)?.transform.as_slice().iter().map(|z| z.re).collect::<Vec<_>>());
    Ok(())
}

//! Hermitian eigen, SVD, fractional powers and the Gelfand spectral radius.

use numrad::ensemble::{ginibre, psd, trial_rng};
use numrad::linalg::{frac_power, hermitian_eigen, spectral_norm, spectral_radius, svd, PsdFactor};
use numrad::tolerance::Tolerances;

fn main() -> numrad::Result<()> {
    let mut rng = trial_rng(5, 0);
    let p = psd(4, &mut rng);
    let eig = hermitian_eigen(&p)?;
    println!("eigenvalues of P      {:?}", eig.eigenvalues);

    let root = frac_power(&p, 0.5)?;
    println!("‖(P^½)² − P‖          {:.2e}", root.matmul(&root).max_abs_diff(&p));
    let f = PsdFactor::new(&p, &Tolerances::default())?;
    println!("‖P^{{1/3}}·P^{{2/3}} − P‖ {:.2e}", f.power(1.0 / 3.0)?.matmul(&f.power(2.0 / 3.0)?).max_abs_diff(&p));

    let a = ginibre(4, &mut rng);
    let s = svd(&a)?;
    println!("singular values of A  {:?}", s.sigma);
    println!("reconstruction error  {:.2e}", s.reconstruct().max_abs_diff(&a));
    println!("r(A) = {:.6} ≤ ‖A‖ = {:.6}", spectral_radius(&a)?, spectral_norm(&a)?);
    Ok(())
}

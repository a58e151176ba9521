//! Vector inequalities underlying the bounds, evaluated on random data.

use numrad::ensemble::{ginibre, psd, trial_rng};
use numrad::pointwise::{
    amer_bound, cs_refinement, kato, log_convexity_grid, mccarthy, schwarz_covariance,
    schwarz_square, InequalityCheck, UnitVector,
};

fn show(name: &str, c: InequalityCheck) {
    println!("{name:>20}: {:>12.6} ≤ {:>12.6}  margin {:.3e}", c.lhs, c.rhs, c.margin);
}

fn main() -> numrad::Result<()> {
    let mut rng = trial_rng(3, 0);
    let n = 4;
    let (a, b) = (ginibre(n, &mut rng), ginibre(n, &mut rng));
    let (c, d) = (ginibre(n, &mut rng), ginibre(n, &mut rng));
    let p = psd(n, &mut rng);
    let (x, y) = (UnitVector::random(n, &mut rng), UnitVector::random(n, &mut rng));

    show("kato t=0.3", kato(&a, &x, &y, 0.3)?);
    show("mccarthy r=2.5", mccarthy(&p, &x, 2.5)?);
    show("mccarthy r=0.4", mccarthy(&p, &x, 0.4)?);
    show("schwarz covariance", schwarz_covariance(&a, &b, &x)?);
    show("schwarz square", schwarz_square(&a, &x)?);
    show("cs refinement", cs_refinement(&a, &b, &x)?);
    show("spectral radius", amer_bound(&a, &b, &c, &d)?);

    let q = psd(n, &mut rng);
    let worst = log_convexity_grid(&p, &q, 21)?
        .iter()
        .map(|c| c.margin)
        .fold(f64::INFINITY, f64::min);
    println!("{:>20}: smallest margin over 21 weights {worst:.3e}", "log-convexity");
    Ok(())
}

//! Every catalog bound next to `ω(A)`, sorted from tightest to loosest.

use numrad::bounds::compare_all;
use numrad::ensemble::cyclic_shift;
use numrad::report::{render_bounds, Format};

fn main() -> numrad::Result<()> {
    for weights in [[2.0, 3.0, 4.0], [3.0, 4.0, 2.0]] {
        let a = cyclic_shift(&weights);
        let report = compare_all(&a)?;
        println!("weighted shift {weights:?}");
        print!("{}", render_bounds(&report, Format::Table));
        println!("min slack {:.3e}\n", report.min_slack());
    }
    Ok(())
}

//! A small seeded soundness campaign written as CSV to standard output.

use numrad::bounds::CompareOptions;
use numrad::campaign::{campaign_exit_code, run_campaign, write_csv, CampaignConfig};
use numrad::ensemble::Ensemble;

fn main() -> numrad::Result<()> {
    let config = CampaignConfig::new(Ensemble::WeightedCyclicShift, "2-5".parse().unwrap(), 10, 99);
    let rows = run_campaign(&config, &CompareOptions::default(), 1)?;
    write_csv(&rows, std::io::stdout().lock())?;
    let worst = rows.iter().map(|r| r.min_slack).fold(f64::INFINITY, f64::min);
    eprintln!("{} trials, smallest slack {worst:.3e}, exit code {}", rows.len(), campaign_exit_code(&rows));
    Ok(())
}

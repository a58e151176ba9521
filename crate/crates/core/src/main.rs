use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use numrad::bounds::{BoundId, CompareOptions, DEFAULT_T_GRID};
use numrad::campaign::{campaign_exit_code, run_campaign, write_csv, CampaignConfig, DimRange};
use numrad::ensemble::Ensemble;
use numrad::io::read_matrix;
use numrad::radius::{SweepOptions, DEFAULT_GRID_POINTS};
use numrad::report::{bounds_command, radius_report, render_radius, reproduce_command, Format};
use numrad::tolerance::Tolerances;

#[derive(Parser)]
#[command(name = "numrad", version, about = "Numerical radius and its upper bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate upper bounds on ω(A) for a matrix file (JSON document or real CSV).
    Bounds(BoundsArgs),
    /// Numerical radius by angle sweep, optionally cross-checked by sampling.
    Radius(RadiusArgs),
    /// Recompute the reference figures for the two 3×3 weighted cyclic shifts.
    ReproduceExamples,
    /// Seeded soundness campaign over a random ensemble.
    ///
    /// Writes CSV with columns: trial, seed, dim, omega, one column per bound
    /// (classic, kitt-sum, kitt-square, kitt-mixed, integral, integral-refined,
    /// yamazaki, aluthge-t, aluthge-half, weighted-power, weighted-r, product,
    /// fourth-power, schwarz-radius), min_slack, violations (`;`-separated).
    Fuzz(FuzzArgs),
}

#[derive(Args)]
struct TolArgs {
    #[arg(long)]
    tol_herm: Option<f64>,
    #[arg(long)]
    tol_psd: Option<f64>,
    #[arg(long)]
    tol_slack: Option<f64>,
    #[arg(long)]
    tol_pointwise: Option<f64>,
    /// Weight window is [t_min, 1 − t_min].
    #[arg(long)]
    tol_t_min: Option<f64>,
}

impl TolArgs {
    fn apply(&self) -> Tolerances {
        let mut t = Tolerances::default();
        if let Some(v) = self.tol_herm {
            t.herm = v;
        }
        if let Some(v) = self.tol_psd {
            t.psd = v;
        }
        if let Some(v) = self.tol_slack {
            t.slack = v;
        }
        if let Some(v) = self.tol_pointwise {
            t.pointwise = v;
        }
        if let Some(v) = self.tol_t_min {
            t.t_min = v;
        }
        t
    }
}

#[derive(Args)]
struct BoundsArgs {
    file: PathBuf,
    /// Bound identifier, or `all`.
    #[arg(long, default_value = "all")]
    bound: String,
    #[arg(long, default_value_t = DEFAULT_T_GRID)]
    t_grid: usize,
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    theta_grid: usize,
    #[arg(long, default_value = "table")]
    format: Format,
    #[command(flatten)]
    tol: TolArgs,
}

#[derive(Args)]
struct RadiusArgs {
    file: PathBuf,
    #[arg(long, default_value_t = DEFAULT_GRID_POINTS)]
    theta_grid: usize,
    /// Sampled trials for the independent lower estimate; 0 skips it.
    #[arg(long, default_value_t = 0)]
    oracle_trials: usize,
    #[arg(long, env = "NUMRAD_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long)]
    ensemble: Ensemble,
    /// Matrix size, or an inclusive range such as `2-8`.
    #[arg(long)]
    dim: DimRange,
    #[arg(long)]
    trials: usize,
    #[arg(long, env = "NUMRAD_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output file; standard output when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[command(flatten)]
    tol: TolArgs,
}

fn bounds(args: BoundsArgs) -> i32 {
    let ids: Vec<BoundId> = if args.bound == "all" {
        BoundId::ALL.to_vec()
    } else {
        match args.bound.parse() {
            Ok(id) => vec![id],
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        }
    };
    let a = match read_matrix(&args.file) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let opts = CompareOptions {
        t_grid: args.t_grid,
        sweep: SweepOptions {
            grid_points: args.theta_grid,
            ..SweepOptions::default()
        },
        tol: args.tol.apply(),
        ..CompareOptions::default()
    };
    let (out, code) = bounds_command(&a, &ids, &opts, args.format);
    if code == 0 {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    code
}

fn radius(args: RadiusArgs) -> i32 {
    let sweep = SweepOptions {
        grid_points: args.theta_grid,
        ..SweepOptions::default()
    };
    match read_matrix(&args.file).and_then(|a| radius_report(&a, &sweep, args.oracle_trials, args.seed)) {
        Ok(r) => {
            print!("{}", render_radius(&r, args.format));
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn fuzz(args: FuzzArgs) -> i32 {
    let config = CampaignConfig {
        tolerances: args.tol.apply(),
        ..CampaignConfig::new(args.ensemble, args.dim, args.trials, args.seed)
    };
    let opts = CompareOptions {
        tol: config.tolerances,
        ..CompareOptions::default()
    };
    let rows = match run_campaign(&config, &opts, args.jobs) {
        Ok(rows) => rows,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let written = match &args.output {
        Some(path) => std::fs::File::create(path)
            .map_err(numrad::NumradError::from)
            .and_then(|f| write_csv(&rows, std::io::BufWriter::new(f))),
        None => write_csv(&rows, std::io::stdout().lock()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 2;
    }
    campaign_exit_code(&rows)
}

fn main() -> ExitCode {
    let code = match Cli::parse().command {
        Command::Bounds(args) => bounds(args),
        Command::Radius(args) => radius(args),
        Command::ReproduceExamples => {
            let (out, code) = reproduce_command();
            print!("{out}");
            code
        }
        Command::Fuzz(args) => fuzz(args),
    };
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}

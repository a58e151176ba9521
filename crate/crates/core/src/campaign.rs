//! Seeded fuzz campaigns: sample matrices, compare every bound with `ω(A)`,
//! run the pointwise suite, and emit one CSV row per trial.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{compare_all_with, BoundId, CompareOptions};
use crate::ensemble::{ginibre, psd, splitmix, Ensemble};
use crate::error::{NumradError, Result};
use crate::linalg::ComplexMatrix;
use crate::pointwise::{
    amer_bound, cs_refinement, kato, log_convexity, log_convexity_midpoint, mccarthy,
    schwarz_covariance, schwarz_square, InequalityCheck, UnitVector,
};
use crate::polar::polar;
use crate::tolerance::Tolerances;

/// Allowed negative margin for the spectral-radius lemma.
pub const AMER_TOL: f64 = 1e-5;

/// Inclusive range of matrix sizes; a single size is `min == max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRange {
    pub min: usize,
    pub max: usize,
}

impl DimRange {
    pub fn fixed(n: usize) -> Self {
        Self { min: n, max: n }
    }
}

impl fmt::Display for DimRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.min == self.max {
            write!(f, "{}", self.min)
        } else {
            write!(f, "{}-{}", self.min, self.max)
        }
    }
}

impl FromStr for DimRange {
    type Err = String;

    /// `4` or `2-8`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |v: &str| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid dimension `{v}`"))
        };
        let range = match s.split_once('-') {
            Some((lo, hi)) => Self {
                min: parse(lo)?,
                max: parse(hi)?,
            },
            None => Self::fixed(parse(s)?),
        };
        if range.min == 0 || range.min > range.max {
            return Err(format!("dimension range `{s}` must satisfy 1 ≤ min ≤ max"));
        }
        Ok(range)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub ensemble: Ensemble,
    pub dim: DimRange,
    pub trials: usize,
    pub seed: u64,
    pub tolerances: Tolerances,
}

impl CampaignConfig {
    pub fn new(ensemble: Ensemble, dim: DimRange, trials: usize, seed: u64) -> Self {
        Self {
            ensemble,
            dim,
            trials,
            seed,
            tolerances: Tolerances::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(NumradError::Domain("a campaign needs at least one trial".into()));
        }
        if self.dim.min == 0 || self.dim.min > self.dim.max {
            return Err(NumradError::Domain(format!("invalid dimension range {}", self.dim)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRow {
    pub trial: usize,
    /// Seed of this trial's generator, `splitmix(seed, trial)`.
    pub seed: u64,
    pub dim: usize,
    pub omega: f64,
    /// Bound values in [`BoundId::ALL`] order; `None` when evaluation failed.
    pub bounds: Vec<Option<f64>>,
    pub min_slack: f64,
    /// Names of violated inequalities; empty when everything held.
    pub violations: Vec<String>,
}

impl TrialRow {
    pub fn bound(&self, id: BoundId) -> Option<f64> {
        let k = BoundId::ALL.iter().position(|&b| b == id)?;
        self.bounds[k]
    }
}

/// Column names, in order.
pub fn csv_header() -> Vec<String> {
    let mut cols: Vec<String> = ["trial", "seed", "dim", "omega"].map(String::from).to_vec();
    cols.extend(BoundId::ALL.iter().map(|id| id.name().to_string()));
    cols.push("min_slack".into());
    cols.push("violations".into());
    cols
}

/// Matrix sampled by trial `index` (its size is drawn first from the same stream).
pub fn trial_matrix(config: &CampaignConfig, index: usize) -> (ComplexMatrix, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix(config.seed, index as u64));
    let dim = rng.gen_range(config.dim.min..=config.dim.max);
    let a = config.ensemble.sample(dim, &mut rng);
    (a, rng)
}

pub fn run_trial(config: &CampaignConfig, index: usize, opts: &CompareOptions) -> TrialRow {
    let (a, mut rng) = trial_matrix(config, index);
    let n = a.dim();
    let tol = &config.tolerances;
    let mut violations = Vec::new();
    let mut bounds = vec![None; BoundId::ALL.len()];
    let (omega, min_slack) = match compare_all_with(&a, &BoundId::ALL, opts) {
        Ok(report) => {
            for b in &report.bounds {
                let k = BoundId::ALL.iter().position(|&id| id == b.id).expect("catalog id");
                bounds[k] = Some(b.value);
            }
            for id in report.violations(tol.slack) {
                violations.push(id.name().to_string());
            }
            for f in &report.failures {
                violations.push(format!("{}:failed", f.id));
            }
            (report.omega.value, report.min_slack())
        }
        Err(_) => {
            violations.push("omega:failed".into());
            (f64::NAN, f64::NAN)
        }
    };
    for (name, check, limit) in pointwise_suite(&a, &mut rng, tol) {
        match check {
            Ok(c) if c.holds(limit) => {}
            Ok(_) => violations.push(name.to_string()),
            Err(_) => violations.push(format!("{name}:failed")),
        }
    }
    TrialRow {
        trial: index,
        seed: splitmix(config.seed, index as u64),
        dim: n,
        omega,
        bounds,
        min_slack,
        violations,
    }
}

type SuiteEntry = (&'static str, Result<InequalityCheck>, f64);

/// One sample of each pointwise lemma, drawn around the trial matrix.
pub fn pointwise_suite(a: &ComplexMatrix, rng: &mut ChaCha8Rng, tol: &Tolerances) -> Vec<SuiteEntry> {
    let n = a.dim();
    let x = UnitVector::random(n, rng);
    let y = UnitVector::random(n, rng);
    let t = rng.gen_range(tol.t_min..=1.0 - tol.t_min);
    let r = rng.gen_range(0.1..3.0);
    let s = rng.gen_range(0.0..=1.0);
    let u = rng.gen_range(0.0..=1.0);
    let b = ginibre(n, rng);
    let c = ginibre(n, rng);
    let d = ginibre(n, rng);
    let p = psd(n, rng);
    let abs = polar(a).map(|pd| pd.positive);
    let pt = tol.pointwise;
    let mut out: Vec<SuiteEntry> = vec![
        ("kato", kato(a, &x, &y, t), pt),
        ("schwarz-covariance", schwarz_covariance(a, &b, &x), pt),
        ("schwarz-square", schwarz_square(a, &x), pt),
        ("cs-refinement", cs_refinement(a, &b, &x), pt),
        ("amer", amer_bound(a, &b, &c, &d), AMER_TOL),
    ];
    match abs {
        Ok(abs) => {
            out.push(("mccarthy", mccarthy(&abs, &x, r), pt));
            out.push(("log-convexity", log_convexity(&abs, &p, s), pt));
            out.push(("log-convexity-midpoint", log_convexity_midpoint(&abs, &p, s, u), pt));
        }
        Err(e) => out.push(("polar", Err(e), pt)),
    }
    out
}

/// Trials in index order. With `jobs > 1` they run on a dedicated pool; the
/// result is identical either way.
pub fn run_campaign(config: &CampaignConfig, opts: &CompareOptions, jobs: usize) -> Result<Vec<TrialRow>> {
    config.validate()?;
    let run = || -> Vec<TrialRow> {
        (0..config.trials)
            .into_par_iter()
            .map(|i| run_trial(config, i, opts))
            .collect()
    };
    if jobs <= 1 {
        return Ok((0..config.trials).map(|i| run_trial(config, i, opts)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| NumradError::Io(e.to_string()))?;
    Ok(pool.install(run))
}

fn num(v: f64) -> String {
    if v.is_nan() {
        String::new()
    } else {
        format!("{v}")
    }
}

pub fn write_csv<W: Write>(rows: &[TrialRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| NumradError::Io(e.to_string());
    w.write_record(csv_header()).map_err(io)?;
    for row in rows {
        let mut rec = vec![row.trial.to_string(), row.seed.to_string(), row.dim.to_string(), num(row.omega)];
        rec.extend(row.bounds.iter().map(|b| b.map_or(String::new(), num)));
        rec.push(num(row.min_slack));
        rec.push(row.violations.join(";"));
        w.write_record(&rec).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

/// Exit status of a campaign: 1 when any row lists a violation.
pub fn campaign_exit_code(rows: &[TrialRow]) -> i32 {
    i32::from(rows.iter().any(|r| !r.violations.is_empty()))
}

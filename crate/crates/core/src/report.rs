//! Rendering of bound and radius reports, and the built-in example checks.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::{compare_all_with, minimize_over_t, BoundContext, BoundId, BoundReport, CompareOptions};
use crate::ensemble::cyclic_shift;
use crate::error::{NumradError, Result};
use crate::linalg::{spectral_norm, ComplexMatrix};
use crate::radius::{radius_oracle, radius_sweep_with, OracleEstimate, RadiusEstimate, SweepOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            _ => Err(format!("unknown format `{s}` (expected json, csv or table)")),
        }
    }
}

/// Fixed-point with trailing zeros removed: `3.5`, `12.0007`, `inf`.
pub fn format_number(v: f64, decimals: usize) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{v:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

const TABLE_DECIMALS: usize = 10;

pub fn render_bounds(report: &BoundReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("serializable report") + "\n",
        Format::Csv => bounds_csv(report),
        Format::Table => bounds_table(report),
    }
}

fn bounds_csv(report: &BoundReport) -> String {
    let mut out = String::from("bound,value,inner,t,slack\n");
    let opt = |v: Option<f64>| v.map_or(String::new(), |x| format!("{x}"));
    writeln!(out, "omega,{},,,", report.omega.value).unwrap();
    for (b, s) in report.bounds.iter().zip(&report.slacks) {
        writeln!(out, "{},{},{},{},{}", b.id, b.value, opt(b.inner), opt(b.t_used), s).unwrap();
    }
    for f in &report.failures {
        writeln!(out, "{},,,,", f.id).unwrap();
    }
    out
}

fn bounds_table(report: &BoundReport) -> String {
    let f = |v: f64| format_number(v, TABLE_DECIMALS);
    let opt = |v: Option<f64>| v.map_or("-".to_string(), f);
    let mut rows = vec![[
        "bound".to_string(),
        "value".into(),
        "inner".into(),
        "t".into(),
        "slack".into(),
    ]];
    rows.push(["omega".into(), f(report.omega.value), "-".into(), "-".into(), "-".into()]);
    for (b, s) in report.bounds.iter().zip(&report.slacks) {
        rows.push([b.id.to_string(), f(b.value), opt(b.inner), opt(b.t_used), f(*s)]);
    }
    let mut widths = [0usize; 5];
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    for fail in &report.failures {
        writeln!(out, "{}  FAILED: {}", fail.id, fail.message).unwrap();
    }
    out
}

/// Runs the requested bounds and renders them. Exit code 0 when `ω` and at
/// least one bound were computed, 2 otherwise.
pub fn bounds_command(
    a: &ComplexMatrix,
    ids: &[BoundId],
    opts: &CompareOptions,
    format: Format,
) -> (String, i32) {
    match compare_all_with(a, ids, opts) {
        Ok(report) => {
            let code = if report.bounds.is_empty() { 2 } else { 0 };
            (render_bounds(&report, format), code)
        }
        Err(e) => (format!("error: {e}\n"), 2),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusReport {
    pub sweep: RadiusEstimate,
    pub oracle: Option<OracleEstimate>,
    pub norm: f64,
    pub lower_envelope: f64,
}

pub fn radius_report(
    a: &ComplexMatrix,
    sweep: &SweepOptions,
    oracle_trials: usize,
    seed: u64,
) -> Result<RadiusReport> {
    let norm = spectral_norm(a)?;
    Ok(RadiusReport {
        sweep: radius_sweep_with(a, sweep)?,
        oracle: if oracle_trials > 0 {
            Some(radius_oracle(a, oracle_trials, seed)?)
        } else {
            None
        },
        norm,
        lower_envelope: norm / 2.0,
    })
}

pub fn render_radius(r: &RadiusReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("serializable report") + "\n",
        Format::Csv => {
            let oracle = r.oracle.map_or(String::new(), |o| format!("{}", o.value));
            format!(
                "omega,theta_star,norm,half_norm,oracle\n{},{},{},{},{}\n",
                r.sweep.value, r.sweep.theta_star, r.norm, r.lower_envelope, oracle
            )
        }
        Format::Table => {
            let f = |v: f64| format_number(v, TABLE_DECIMALS);
            let mut out = format!(
                "omega       {}\ntheta_star  {}\nnorm        {}\nhalf_norm   {}\n",
                f(r.sweep.value),
                f(r.sweep.theta_star),
                f(r.norm),
                f(r.lower_envelope)
            );
            if let Some(o) = r.oracle {
                writeln!(out, "oracle      {}  ({} trials, seed {})", f(o.value), o.trials, o.seed).unwrap();
            }
            out
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Expectation {
    Near { target: f64, tol: f64 },
    Below { limit: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExampleCheck {
    pub key: String,
    pub value: f64,
    pub expected: Expectation,
    pub pass: bool,
}

impl ExampleCheck {
    fn new(key: &str, value: f64, expected: Expectation) -> Self {
        let pass = match expected {
            Expectation::Near { target, tol } => (value - target).abs() <= tol,
            Expectation::Below { limit } => value < limit,
        };
        Self {
            key: key.to_string(),
            value,
            expected,
            pass,
        }
    }

    /// `example1.kitt-sum = 3.5 PASS  (expected 3.5 ± 1e-9)`.
    pub fn line(&self) -> String {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        let v = format_number(self.value, 4);
        match self.expected {
            Expectation::Near { target, tol } => {
                format!("{} = {v} {verdict}  (expected {target} ± {tol:e})", self.key)
            }
            Expectation::Below { limit } => format!("{} = {v} < {limit} {verdict}", self.key),
        }
    }
}

/// The two 3×3 weighted cyclic shifts and their reference figures.
pub fn reproduce_examples() -> Result<Vec<ExampleCheck>> {
    let near = |target, tol| Expectation::Near { target, tol };
    let below = |limit| Expectation::Below { limit };
    let mut checks = Vec::new();

    let a1 = cyclic_shift(&[2.0, 3.0, 4.0]);
    let ctx1 = BoundContext::new(&a1)?;
    let wp = minimize_over_t(BoundId::WeightedPower, &a1, crate::bounds::DEFAULT_T_GRID, crate::bounds::DEFAULT_T_REFINE_TOL)?;
    let wp_inner = wp.inner.ok_or_else(|| NumradError::Domain("missing inner value".into()))?;
    checks.push(ExampleCheck::new("example1.weighted-power.inner", wp_inner, near(12.002, 5e-3)));
    checks.push(ExampleCheck::new(
        "example1.kitt-square.inner",
        ctx1.kitt_square()?.inner.unwrap_or(f64::NAN),
        near(12.5, 1e-9),
    ));
    checks.push(ExampleCheck::new("example1.kitt-sum", ctx1.kitt_sum()?.value, near(3.5, 1e-9)));
    checks.push(ExampleCheck::new("example1.weighted-power.sqrt", wp.value, below(3.5)));

    let a2 = cyclic_shift(&[3.0, 4.0, 2.0]);
    let ctx2 = BoundContext::new(&a2)?;
    let fp = minimize_over_t(BoundId::FourthPower, &a2, crate::bounds::DEFAULT_T_GRID, crate::bounds::DEFAULT_T_REFINE_TOL)?;
    let fp_inner = fp.inner.ok_or_else(|| NumradError::Domain("missing inner value".into()))?;
    checks.push(ExampleCheck::new("example2.fourth-power.inner", fp_inner, near(9.32, 2e-2)));
    checks.push(ExampleCheck::new("example2.kitt-sum", ctx2.kitt_sum()?.value, near(3.5, 1e-9)));
    checks.push(ExampleCheck::new("example2.fourth-power.sqrt", fp.value, below(3.5)));
    Ok(checks)
}

/// Rendered checks and exit code (0 iff all pass, 1 otherwise).
pub fn reproduce_command() -> (String, i32) {
    match reproduce_examples() {
        Ok(checks) => {
            let mut out = String::new();
            for c in &checks {
                writeln!(out, "{}", c.line()).unwrap();
            }
            (out, i32::from(!checks.iter().all(|c| c.pass)))
        }
        Err(e) => (format!("error: {e}\n"), 1),
    }
}

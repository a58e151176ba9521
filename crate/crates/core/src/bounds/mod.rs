//! Catalog of upper bounds on the numerical radius.
//!
//! Throughout, `X = |A|` and `Y = |A*|`. Bounds stated for `ω(A)²` carry the
//! squared quantity in [`BoundValue::inner`] and its square root in
//! [`BoundValue::value`], so every `value` is directly comparable with `ω(A)`.

mod context;
mod search;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{NumradError, Result};
use crate::linalg::ComplexMatrix;
use crate::polar::check_weight;
use crate::radius::RadiusEstimate;
use crate::tolerance::Tolerances;

pub use context::BoundContext;
pub use search::{compare_all, compare_all_with, minimize_over_t, CompareOptions, TMinimum};

/// Default number of weight grid points on `[t_min, 1 − t_min]`.
pub const DEFAULT_T_GRID: usize = 1001;
/// Default golden-section bracket width for the weight search.
pub const DEFAULT_T_REFINE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundId {
    /// `‖A‖`, the upper half of `½‖A‖ ≤ ω(A) ≤ ‖A‖`.
    Classic,
    /// `½‖X + Y‖`.
    KittSum,
    /// `ω² ≤ ½‖X² + Y²‖`.
    KittSquare,
    /// `½(‖A‖ + ‖A²‖^{1/2})`.
    KittMixed,
    /// `ω² ≤ ‖∫₀¹((1−t)X + tY)² dt‖`.
    Integral,
    /// The integral bound with `(X − Y)²/48` removed.
    IntegralRefined,
    /// `½(‖A‖ + ω(Ã))`.
    Yamazaki,
    /// Weighted Aluthge bound at weight `t`.
    AluthgeT,
    /// The weighted Aluthge bound at `t = ½`.
    AluthgeHalf,
    /// `ω² ≤ ‖(1−t)X^{1/(1−t)} + tY^{1/t}‖`.
    WeightedPower,
    /// `ω² ≤ ½‖X² + Y² − (t(1−t)/R)(X − Y)²‖`, `R = max(t, 1−t)`.
    WeightedR,
    /// `½(‖A‖ + (‖X^tY^t‖·‖X^{1−t}Y^{1−t}‖)^{1/2})`.
    Product,
    /// `ω² ≤ ‖(X^{4(1−t)} + Y^{4t})/4 + ((1−t)X² + tY²)/2‖`.
    FourthPower,
    /// `ω² ≤ ½(‖tX^{2/t} + (1−t)Y^{2/(1−t)}‖^{1/2} + ω(A²))`.
    SchwarzRadius,
}

impl BoundId {
    pub const ALL: [BoundId; 14] = [
        BoundId::Classic,
        BoundId::KittSum,
        BoundId::KittSquare,
        BoundId::KittMixed,
        BoundId::Integral,
        BoundId::IntegralRefined,
        BoundId::Yamazaki,
        BoundId::AluthgeT,
        BoundId::AluthgeHalf,
        BoundId::WeightedPower,
        BoundId::WeightedR,
        BoundId::Product,
        BoundId::FourthPower,
        BoundId::SchwarzRadius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Classic => "classic",
            BoundId::KittSum => "kitt-sum",
            BoundId::KittSquare => "kitt-square",
            BoundId::KittMixed => "kitt-mixed",
            BoundId::Integral => "integral",
            BoundId::IntegralRefined => "integral-refined",
            BoundId::Yamazaki => "yamazaki",
            BoundId::AluthgeT => "aluthge-t",
            BoundId::AluthgeHalf => "aluthge-half",
            BoundId::WeightedPower => "weighted-power",
            BoundId::WeightedR => "weighted-r",
            BoundId::Product => "product",
            BoundId::FourthPower => "fourth-power",
            BoundId::SchwarzRadius => "schwarz-radius",
        }
    }

    /// Whether the bound depends on a weight `t`.
    pub fn is_weighted(self) -> bool {
        matches!(
            self,
            BoundId::AluthgeT
                | BoundId::WeightedPower
                | BoundId::WeightedR
                | BoundId::Product
                | BoundId::FourthPower
                | BoundId::SchwarzRadius
        )
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for BoundId {
    type Err = NumradError;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| NumradError::UnknownBound(s.to_string()))
    }
}

/// Weight `t ∈ [t_min, 1 − t_min]` with `r_cap = max(t, 1 − t)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightParams {
    t: f64,
    r_cap: f64,
}

impl WeightParams {
    pub fn new(t: f64) -> Result<Self> {
        Self::with_tolerances(t, &Tolerances::default())
    }

    pub fn with_tolerances(t: f64, tol: &Tolerances) -> Result<Self> {
        check_weight(t, tol)?;
        Ok(Self {
            t,
            r_cap: t.max(1.0 - t),
        })
    }

    pub fn half() -> Self {
        Self { t: 0.5, r_cap: 0.5 }
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn r_cap(&self) -> f64 {
        self.r_cap
    }
}

/// One evaluated bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundValue {
    pub id: BoundId,
    /// Weight used; absent for weight-free bounds.
    pub t_used: Option<f64>,
    /// Upper estimate of `ω(A)`. `+∞` when a weighted objective diverges.
    pub value: f64,
    /// Quantity bounding `ω(A)²` for the squared-form bounds.
    pub inner: Option<f64>,
    /// Intermediate norms, keyed by name.
    pub detail: BTreeMap<String, f64>,
}

impl BoundValue {
    pub(crate) fn new(id: BoundId, t_used: Option<f64>, value: f64) -> Self {
        Self {
            id,
            t_used,
            value,
            inner: None,
            detail: BTreeMap::new(),
        }
    }

    pub(crate) fn squared(id: BoundId, t_used: Option<f64>, inner: f64) -> Self {
        Self {
            inner: Some(inner),
            ..Self::new(id, t_used, inner.max(0.0).sqrt())
        }
    }

    pub(crate) fn with(mut self, key: &str, value: f64) -> Self {
        self.detail.insert(key.to_string(), value);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundFailure {
    pub id: BoundId,
    pub message: String,
}

/// `ω(A)` next to every requested bound, sorted ascending by value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub omega: RadiusEstimate,
    pub bounds: Vec<BoundValue>,
    /// `bounds[i].value − omega.value`.
    pub slacks: Vec<f64>,
    pub failures: Vec<BoundFailure>,
}

impl BoundReport {
    pub fn get(&self, id: BoundId) -> Option<&BoundValue> {
        self.bounds.iter().find(|b| b.id == id)
    }

    pub fn min_slack(&self) -> f64 {
        self.slacks.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Bounds whose slack is below `−tol`.
    pub fn violations(&self, tol: f64) -> Vec<BoundId> {
        self.bounds
            .iter()
            .zip(&self.slacks)
            .filter(|(_, &s)| s < -tol)
            .map(|(b, _)| b.id)
            .collect()
    }
}

/// `(½‖A‖, ‖A‖)`.
pub fn classic_envelope(a: &ComplexMatrix) -> Result<(f64, f64)> {
    let norm = crate::linalg::spectral_norm(a)?;
    Ok((norm / 2.0, norm))
}

macro_rules! plain_bound {
    ($(#[$doc:meta])* $name:ident => $method:ident) => {
        $(#[$doc])*
        pub fn $name(a: &ComplexMatrix) -> Result<BoundValue> {
            BoundContext::new(a)?.$method()
        }
    };
}

macro_rules! weighted_bound {
    ($(#[$doc:meta])* $name:ident => $method:ident) => {
        $(#[$doc])*
        pub fn $name(a: &ComplexMatrix, w: WeightParams) -> Result<BoundValue> {
            BoundContext::new(a)?.$method(w)
        }
    };
}

plain_bound!(
    /// `½‖|A| + |A*|‖`.
    kittaneh_sum => kitt_sum
);
plain_bound!(
    /// `(½‖|A|² + |A*|²‖)^{1/2}`.
    kittaneh_square => kitt_square
);
plain_bound!(
    /// `½(‖A‖ + ‖A²‖^{1/2})`.
    kittaneh_mixed => kitt_mixed
);
plain_bound!(
    /// Closed form `(X² + Y²)/3 + (XY + YX)/6` of the integral bound.
    integral_bound => integral
);
plain_bound!(integral_refined => integral_refined);
plain_bound!(yamazaki => yamazaki);
plain_bound!(aluthge_half => aluthge_half);
weighted_bound!(aluthge_weighted => aluthge_t);
weighted_bound!(weighted_power => weighted_power);
weighted_bound!(weighted_r => weighted_r);
weighted_bound!(product_bound => product);
weighted_bound!(fourth_power => fourth_power);
weighted_bound!(schwarz_radius => schwarz_radius);

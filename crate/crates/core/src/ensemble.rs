//! Seeded random matrix ensembles and per-trial seed derivation.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::linalg::{inner, vec_norm, ComplexMatrix};

/// SplitMix64 output for stream position `index` of a generator seeded with `seed`.
///
/// Trial `i` of any campaign draws from `ChaCha8Rng::seed_from_u64(splitmix(seed, i))`,
/// so results do not depend on the order in which trials execute.
pub fn splitmix(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix(seed, index))
}

/// Standard complex Gaussian: `E|z|² = 1`.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    (0..n).map(|_| complex_gaussian(rng)).collect()
}

/// Uniformly distributed unit vector in `ℂⁿ`.
pub fn unit_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let v = gaussian_vector(n, rng);
        let norm = vec_norm(&v);
        if norm > 1e-12 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

pub fn ginibre<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_vec_unchecked(n, gaussian_vector(n * n, rng))
}

/// `(G + G*) / 2` for Ginibre `G`.
pub fn hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    ginibre(n, rng).real_part()
}

/// `G G*`, almost surely positive definite.
pub fn psd<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let g = ginibre(n, rng);
    let mut p = g.cogram();
    for i in 0..n {
        p[(i, i)].im = 0.0;
    }
    p
}

/// Haar unitary from Gram-Schmidt on Ginibre columns.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    loop {
        let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
        let mut degenerate = false;
        for _ in 0..n {
            let mut v = gaussian_vector(n, rng);
            for _ in 0..2 {
                for q in &cols {
                    let proj = inner(&v, q);
                    for (vi, qi) in v.iter_mut().zip(q) {
                        *vi -= proj * qi;
                    }
                }
            }
            let norm = vec_norm(&v);
            if norm < 1e-8 {
                degenerate = true;
                break;
            }
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
        if degenerate {
            continue;
        }
        let mut q = ComplexMatrix::zeros(n);
        for (j, col) in cols.iter().enumerate() {
            for (i, &z) in col.iter().enumerate() {
                q[(i, j)] = z;
            }
        }
        return q;
    }
}

/// Haar unitary times a uniform scale in `[0.1, 3]`.
pub fn unitary_scaled<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let q = haar_unitary(n, rng);
    q.scale(rng.gen_range(0.1..=3.0))
}

/// Strictly upper triangular with Gaussian entries.
pub fn nilpotent<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n);
    for i in 0..n {
        for j in (i + 1)..n {
            m[(i, j)] = complex_gaussian(rng);
        }
    }
    m
}

/// `A[i][(i+1) mod n] = weights[i]`, zero elsewhere.
pub fn cyclic_shift(weights: &[f64]) -> ComplexMatrix {
    let n = weights.len();
    let mut m = ComplexMatrix::zeros(n);
    for (i, &w) in weights.iter().enumerate() {
        m[(i, (i + 1) % n)] = Complex64::new(w, 0.0);
    }
    m
}

/// Cyclic shift with log-uniform weights in `[0.5, 5]`.
pub fn weighted_cyclic_shift<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let (lo, hi) = (0.5f64.ln(), 5.0f64.ln());
    let weights: Vec<f64> = (0..n).map(|_| rng.gen_range(lo..=hi).exp()).collect();
    cyclic_shift(&weights)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ensemble {
    Ginibre,
    Hermitian,
    UnitaryScaled,
    Nilpotent,
    WeightedCyclicShift,
}

impl Ensemble {
    pub const ALL: [Ensemble; 5] = [
        Ensemble::Ginibre,
        Ensemble::Hermitian,
        Ensemble::UnitaryScaled,
        Ensemble::Nilpotent,
        Ensemble::WeightedCyclicShift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Ensemble::Ginibre => "ginibre",
            Ensemble::Hermitian => "hermitian",
            Ensemble::UnitaryScaled => "unitary-scaled",
            Ensemble::Nilpotent => "nilpotent",
            Ensemble::WeightedCyclicShift => "weighted-cyclic-shift",
        }
    }

    pub fn sample<R: Rng + ?Sized>(self, n: usize, rng: &mut R) -> ComplexMatrix {
        match self {
            Ensemble::Ginibre => ginibre(n, rng),
            Ensemble::Hermitian => hermitian(n, rng),
            Ensemble::UnitaryScaled => unitary_scaled(n, rng),
            Ensemble::Nilpotent => nilpotent(n, rng),
            Ensemble::WeightedCyclicShift => weighted_cyclic_shift(n, rng),
        }
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Ensemble {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ensemble::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Ensemble::ALL.iter().map(|e| e.name()).collect();
                format!("unknown ensemble `{s}` (expected one of {})", names.join(", "))
            })
    }
}

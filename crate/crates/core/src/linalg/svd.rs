//! One-sided (Hestenes) Jacobi SVD for dense complex square matrices.

use num_complex::Complex64;

use super::eigen::rotation;
use super::matrix::{inner, ComplexMatrix};
use crate::error::{NumradError, Result};
use crate::tolerance::JACOBI_SWEEPS;

/// `A = left · diag(sigma) · right*`, `sigma` descending.
#[derive(Debug, Clone)]
pub struct SingularDecomposition {
    pub left: ComplexMatrix,
    pub sigma: Vec<f64>,
    pub right: ComplexMatrix,
}

impl SingularDecomposition {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.sigma.len();
        let mut scaled = self.left.clone();
        for i in 0..n {
            for j in 0..n {
                scaled[(i, j)] *= self.sigma[j];
            }
        }
        scaled.matmul(&self.right.adjoint())
    }
}

pub fn svd(a: &ComplexMatrix) -> Result<SingularDecomposition> {
    let n = a.dim();
    let scale = a.max_abs();
    if scale == 0.0 {
        return Ok(SingularDecomposition {
            left: ComplexMatrix::identity(n),
            sigma: vec![0.0; n],
            right: ComplexMatrix::identity(n),
        });
    }
    // column-major working copy of A / scale
    let mut w: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| a[(i, j)] / scale).collect())
        .collect();
    let mut v: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            let mut e = vec![Complex64::new(0.0, 0.0); n];
            e[j] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();
    orthogonalize_columns(&mut w, Some(&mut v))?;

    let mut norms: Vec<f64> = w.iter().map(|col| col_norm(col)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));
    let w: Vec<Vec<Complex64>> = order.iter().map(|&k| w[k].clone()).collect();
    let v: Vec<Vec<Complex64>> = order.iter().map(|&k| v[k].clone()).collect();
    norms = order.iter().map(|&k| norms[k]).collect();

    let mut left_cols: Vec<Option<Vec<Complex64>>> = w
        .iter()
        .zip(&norms)
        .map(|(col, &s)| (s > 1e-300).then(|| col.iter().map(|z| z / s).collect()))
        .collect();
    complete_basis(&mut left_cols, n);

    let mut left = ComplexMatrix::zeros(n);
    let mut right = ComplexMatrix::zeros(n);
    for j in 0..n {
        let u = left_cols[j].as_ref().expect("completed basis");
        for i in 0..n {
            left[(i, j)] = u[i];
            right[(i, j)] = v[j][i];
        }
    }
    Ok(SingularDecomposition {
        left,
        sigma: norms.iter().map(|s| s * scale).collect(),
        right,
    })
}

/// Singular values only, descending.
pub fn singular_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    let n = a.dim();
    let scale = a.max_abs();
    if scale == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let mut w: Vec<Vec<Complex64>> = (0..n)
        .map(|j| (0..n).map(|i| a[(i, j)] / scale).collect())
        .collect();
    orthogonalize_columns(&mut w, None)?;
    let mut sigma: Vec<f64> = w.iter().map(|col| col_norm(col) * scale).collect();
    sigma.sort_by(|a, b| b.total_cmp(a));
    Ok(sigma)
}

/// Largest singular value `σ₁ = ‖A‖`.
pub fn spectral_norm(a: &ComplexMatrix) -> Result<f64> {
    Ok(singular_values(a)?[0])
}

fn col_norm(col: &[Complex64]) -> f64 {
    col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn orthogonalize_columns(
    w: &mut [Vec<Complex64>],
    mut v: Option<&mut Vec<Vec<Complex64>>>,
) -> Result<()> {
    let n = w.len();
    if n == 1 {
        return Ok(());
    }
    let tiny = f64::MIN_POSITIVE / f64::EPSILON;
    for _ in 0..JACOBI_SWEEPS {
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let alpha: f64 = w[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = w[q].iter().map(|z| z.norm_sqr()).sum();
                // Gram entry (p, q) = w_p* w_q
                let gamma = inner(&w[q], &w[p]);
                let mag = gamma.norm();
                if mag <= tiny || mag <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let (c, se) = rotation(alpha, beta, gamma);
                rotate_pair(w, p, q, c, se);
                if let Some(v) = v.as_deref_mut() {
                    rotate_pair(v, p, q, c, se);
                }
            }
        }
        if !rotated {
            return Ok(());
        }
    }
    Err(NumradError::NoConvergence {
        routine: "one-sided jacobi svd",
        budget: JACOBI_SWEEPS,
    })
}

fn rotate_pair(cols: &mut [Vec<Complex64>], p: usize, q: usize, c: f64, se: Complex64) {
    let se_conj = se.conj();
    let (lo, hi) = cols.split_at_mut(q);
    let (cp, cq) = (&mut lo[p], &mut hi[0]);
    for (xp, xq) in cp.iter_mut().zip(cq.iter_mut()) {
        let a = *xp;
        let b = *xq;
        *xp = a * c - b * se_conj;
        *xq = a * se + b * c;
    }
}

/// Fill missing columns with unit vectors orthogonal to the present ones.
fn complete_basis(cols: &mut [Option<Vec<Complex64>>], n: usize) {
    for j in 0..n {
        if cols[j].is_some() {
            continue;
        }
        let mut best: Option<(f64, Vec<Complex64>)> = None;
        for k in 0..n {
            let mut e = vec![Complex64::new(0.0, 0.0); n];
            e[k] = Complex64::new(1.0, 0.0);
            for _ in 0..2 {
                for u in cols.iter().flatten() {
                    let proj = inner(&e, u);
                    for (ei, ui) in e.iter_mut().zip(u) {
                        *ei -= proj * ui;
                    }
                }
            }
            let norm = col_norm(&e);
            if best.as_ref().is_none_or(|(b, _)| norm > *b) {
                best = Some((norm, e));
            }
        }
        let (norm, e) = best.expect("n > 0");
        cols[j] = Some(e.into_iter().map(|z| z / norm).collect());
    }
}

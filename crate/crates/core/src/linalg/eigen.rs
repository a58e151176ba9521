//! Hermitian eigendecomposition by cyclic complex Jacobi rotations.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{NumradError, Result};
use crate::tolerance::{Tolerances, JACOBI_SWEEPS};

/// Eigenpairs of a Hermitian matrix: `H = V · diag(λ) · V*`, `λ` ascending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the unit eigenvector for `eigenvalues[k]`.
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Reassemble `V · diag(f(λ)) · V*`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let values: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        ComplexMatrix::from_spectral(&self.vectors, &values)
    }
}

pub fn check_hermitian(h: &ComplexMatrix, tol: &Tolerances) -> Result<()> {
    let residual = h.skew_residual();
    let limit = tol.herm * h.frobenius_norm().max(1.0);
    if residual > limit {
        return Err(NumradError::NotHermitian { residual, limit });
    }
    Ok(())
}

pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<HermitianEigen> {
    hermitian_eigen_with(h, &Tolerances::default())
}

pub fn hermitian_eigen_with(h: &ComplexMatrix, tol: &Tolerances) -> Result<HermitianEigen> {
    check_hermitian(h, tol)?;
    let n = h.dim();
    let mut a = symmetrized(h);
    let mut v = ComplexMatrix::identity(n).as_slice().to_vec();
    jacobi(&mut a, n, Some(&mut v))?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let eigenvalues = order.iter().map(|&k| a[k * n + k].re).collect();
    let mut sorted = vec![Complex64::new(0.0, 0.0); n * n];
    for (col, &k) in order.iter().enumerate() {
        for row in 0..n {
            sorted[row * n + col] = v[row * n + k];
        }
    }
    Ok(HermitianEigen {
        eigenvalues,
        vectors: ComplexMatrix::from_vec_unchecked(n, sorted),
    })
}

/// Eigenvalues only, ascending. Skips eigenvector accumulation.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    hermitian_eigenvalues_with(h, &Tolerances::default())
}

pub fn hermitian_eigenvalues_with(h: &ComplexMatrix, tol: &Tolerances) -> Result<Vec<f64>> {
    check_hermitian(h, tol)?;
    eigenvalues_unchecked(h)
}

/// Spectral norm of a Hermitian matrix, `max |λ|`.
pub fn hermitian_norm(h: &ComplexMatrix) -> Result<f64> {
    let ev = hermitian_eigenvalues(h)?;
    Ok(ev[0].abs().max(ev[ev.len() - 1].abs()))
}

/// Caller guarantees `h` is Hermitian up to roundoff; the strictly lower
/// triangle is ignored.
///
/// Householder reduction to real tridiagonal form followed by implicit QL,
/// which is several times cheaper than Jacobi when no vectors are needed.
pub(crate) fn eigenvalues_unchecked(h: &ComplexMatrix) -> Result<Vec<f64>> {
    let n = h.dim();
    let scale = h.max_abs();
    if scale == 0.0 || n == 1 {
        let mut ev: Vec<f64> = (0..n).map(|i| h[(i, i)].re).collect();
        ev.sort_by(f64::total_cmp);
        return Ok(ev);
    }
    let mut a = symmetrized(h);
    a.iter_mut().for_each(|z| *z /= scale);
    let (mut d, mut e) = tridiagonalize(&mut a, n);
    implicit_ql(&mut d, &mut e)?;
    let mut ev: Vec<f64> = d.into_iter().map(|v| v * scale).collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Unitary similarity to a real symmetric tridiagonal matrix. Returns the
/// diagonal and the moduli of the subdiagonal (`e[n − 1] = 0`).
fn tridiagonalize(a: &mut [Complex64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let zero = Complex64::new(0.0, 0.0);
    let mut v = vec![zero; n];
    let mut p = vec![zero; n];
    for k in 0..n.saturating_sub(2) {
        d[k] = a[k * n + k].re;
        let m = k + 1;
        let x0 = a[m * n + k];
        let tail = (m + 1..n).fold(0.0f64, |acc, i| acc.max(a[i * n + k].norm()));
        if tail == 0.0 {
            e[k] = x0.norm();
            continue;
        }
        let sc = tail.max(x0.norm());
        for i in m..n {
            v[i] = a[i * n + k] / sc;
        }
        let alpha = (m..n).map(|i| v[i].norm_sqr()).sum::<f64>().sqrt();
        let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { Complex64::new(1.0, 0.0) };
        v[m] += phase * alpha;
        let vv: f64 = (m..n).map(|i| v[i].norm_sqr()).sum();
        let tau = 2.0 / vv;
        for i in m..n {
            let mut acc = zero;
            for j in m..n {
                acc += a[i * n + j] * v[j];
            }
            p[i] = acc * tau;
        }
        let vp: f64 = (m..n).map(|i| (v[i].conj() * p[i]).re).sum();
        let half = 0.5 * tau * vp;
        for i in m..n {
            p[i] -= v[i] * half;
        }
        for i in m..n {
            for j in m..n {
                a[i * n + j] -= v[i] * p[j].conj() + p[i] * v[j].conj();
            }
        }
        e[k] = alpha * sc;
    }
    if n >= 2 {
        d[n - 2] = a[(n - 2) * n + n - 2].re;
        e[n - 2] = a[(n - 1) * n + n - 2].norm();
    }
    d[n - 1] = a[(n - 1) * n + n - 1].re;
    (d, e)
}

/// Eigenvalues of the symmetric tridiagonal `(d, e)` by QL with implicit
/// Wilkinson shifts; `d` is overwritten.
fn implicit_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    const BUDGET: usize = 60;
    let tiny = f64::MIN_POSITIVE / f64::EPSILON;
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd || e[m].abs() <= tiny {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > BUDGET {
                return Err(NumradError::NoConvergence {
                    routine: "tridiagonal QL",
                    budget: BUDGET,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

fn symmetrized(h: &ComplexMatrix) -> Vec<Complex64> {
    let n = h.dim();
    let mut a = h.as_slice().to_vec();
    for i in 0..n {
        a[i * n + i].im = 0.0;
        for j in (i + 1)..n {
            a[j * n + i] = a[i * n + j].conj();
        }
    }
    a
}

fn off_diagonal_norm(a: &[Complex64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            sum += a[i * n + j].norm_sqr();
        }
    }
    (2.0 * sum).sqrt()
}

/// Complex 2×2 Jacobi rotation zeroing the `(p, q)` entry of a Hermitian
/// matrix with diagonal `app`, `aqq` and off-diagonal `apq`.
///
/// Returns `(c, s·e)` where the unitary acts on columns as
/// `[[c, s·e], [−s·ē, c]]`.
pub(crate) fn rotation(app: f64, aqq: f64, apq: Complex64) -> (f64, Complex64) {
    let mag = apq.norm();
    let phase = apq / mag;
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, phase * (t * c))
}

fn jacobi(a: &mut [Complex64], n: usize, mut v: Option<&mut Vec<Complex64>>) -> Result<()> {
    let norm = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 || n == 1 {
        return Ok(());
    }
    let tiny = f64::MIN_POSITIVE / f64::EPSILON;
    for _ in 0..JACOBI_SWEEPS {
        if off_diagonal_norm(a, n) <= f64::EPSILON * norm {
            return Ok(());
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.norm() <= tiny {
                    continue;
                }
                let (c, se) = rotation(a[p * n + p].re, a[q * n + q].re, apq);
                let se_conj = se.conj();
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * c - akq * se_conj;
                    a[k * n + q] = akp * se + akq * c;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = apk * c - aqk * se;
                    a[q * n + k] = apk * se_conj + aqk * c;
                }
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);
                a[p * n + p].im = 0.0;
                a[q * n + q].im = 0.0;
                if let Some(v) = v.as_deref_mut() {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = vkp * c - vkq * se_conj;
                        v[k * n + q] = vkp * se + vkq * c;
                    }
                }
            }
        }
    }
    Err(NumradError::NoConvergence {
        routine: "hermitian jacobi",
        budget: JACOBI_SWEEPS,
    })
}

//! Golden-section search on a bracket.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Best point seen during a golden-section search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenResult {
    pub x: f64,
    pub value: f64,
    /// Width of the final bracket.
    pub width: f64,
    pub evaluations: usize,
}

/// Maximise `f` on `[lo, hi]` until the bracket is narrower than `tol`.
///
/// Assumes `f` is unimodal on the bracket; for anything else the result is the
/// best sampled point, never worse than the two interior probes.
pub fn golden_maximize<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<GoldenResult, E> {
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    let mut evaluations = 2;
    let mut best = if fc >= fd { (c, fc) } else { (d, fd) };
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
            if fc > best.1 {
                best = (c, fc);
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
            if fd > best.1 {
                best = (d, fd);
            }
        }
        evaluations += 1;
        if evaluations > 10_000 {
            break;
        }
    }
    Ok(GoldenResult {
        x: best.0,
        value: best.1,
        width: b - a,
        evaluations,
    })
}

/// Minimise `f` on `[lo, hi]`; see [`golden_maximize`].
pub fn golden_minimize<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<GoldenResult, E> {
    let r = golden_maximize(|x| f(x).map(|v| -v), lo, hi, tol)?;
    Ok(GoldenResult {
        value: -r.value,
        ..r
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::convert::Infallible;

    #[test]
    fn finds_parabola_vertex() {
        let r = golden_minimize(|x| Ok::<_, Infallible>((x - 0.3) * (x - 0.3) + 1.0), 0.0, 1.0, 1e-10)
            .unwrap();
        assert!((r.x - 0.3).abs() < 1e-7);
        assert!((r.value - 1.0).abs() < 1e-15);
        assert!(r.width <= 1e-10);
    }

    #[test]
    fn finds_kink_of_max_of_lines() {
        let r = golden_minimize(|x: f64| Ok::<_, Infallible>((2.0 * x).max(1.0 - x)), 0.0, 1.0, 1e-12)
            .unwrap();
        assert!((r.x - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn maximize_cosine() {
        let r = golden_maximize(|x: f64| Ok::<_, Infallible>(x.cos()), -1.0, 2.0, 1e-10).unwrap();
        assert!(r.x.abs() < 1e-8);
    }

    #[test]
    fn tolerates_infinite_values() {
        let r = golden_minimize(
            |x: f64| Ok::<_, Infallible>(if x < 0.1 { f64::INFINITY } else { (x - 0.5).abs() }),
            0.0,
            1.0,
            1e-9,
        )
        .unwrap();
        assert!((r.x - 0.5).abs() < 1e-8);
    }

    #[test]
    fn propagates_errors() {
        let r = golden_minimize(|_| Err::<f64, _>("boom"), 0.0, 1.0, 1e-3);
        assert_eq!(r.unwrap_err(), "boom");
    }
}

use serde::{Deserialize, Serialize};

/// Numerical tolerances shared by every module.
///
/// All values are relative unless the field name says otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Hermitian-ness check: `‖H − H*‖ ≤ herm · max(1, ‖H‖)`.
    pub herm: f64,
    /// Residual bound for eigen and singular value decompositions.
    pub eig: f64,
    /// Negative eigenvalues of nominally PSD input above `−psd·‖P‖` are clamped to zero.
    pub psd: f64,
    /// Relative accuracy of the Gelfand spectral radius estimate.
    pub rad: f64,
    /// Allowed negative slack of an upper bound against the swept radius.
    pub slack: f64,
    /// Allowed negative margin of a pointwise inequality.
    pub pointwise: f64,
    /// Weight window is `[t_min, 1 − t_min]`.
    pub t_min: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            herm: 1e-10,
            eig: 1e-9,
            psd: 1e-10,
            rad: 1e-6,
            slack: 1e-7,
            pointwise: 1e-9,
            t_min: 1e-3,
        }
    }
}

/// Singular values at or below `SIGMA_CUT · σ₁` span the kernel of `|A|`.
pub const SIGMA_CUT: f64 = 1e-12;

/// Sweep budget shared by the Jacobi eigen and SVD routines.
pub const JACOBI_SWEEPS: usize = 64;

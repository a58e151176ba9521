//! Dense complex linear algebra: matrices, Hermitian eigen, SVD, spectral calculus.

mod eigen;
mod matrix;
mod spectral;
mod svd;

pub use eigen::{
    check_hermitian, hermitian_eigen, hermitian_eigen_with, hermitian_eigenvalues,
    hermitian_eigenvalues_with, hermitian_norm, HermitianEigen,
};
pub(crate) use eigen::eigenvalues_unchecked;
pub use matrix::{inner, vec_norm, ComplexMatrix};
pub use spectral::{
    frac_power, frac_power_with, spectral_radius, spectral_radius_with, PsdFactor,
    GELFAND_SQUARINGS, MAX_LOG_POWER,
};
pub use svd::{singular_values, spectral_norm, svd, SingularDecomposition};

pub use num_complex::Complex64;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, NumradError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumradError {
    #[error("matrix is not Hermitian: skew residual {residual:e} exceeds {limit:e}")]
    NotHermitian { residual: f64, limit: f64 },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:e} below {limit:e}")]
    NotPsd { eigenvalue: f64, limit: f64 },

    #[error("{routine} did not converge within {budget} iterations")]
    NoConvergence { routine: &'static str, budget: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("weight t = {t} outside [{min}, {max}]")]
    WeightOutOfRange { t: f64, min: f64, max: f64 },

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("non-finite evaluation at t = {t}")]
    NonFinite { t: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid matrix entry: {0}")]
    InvalidEntry(String),

    #[error("parse error at line {line}, field {field}: {message}")]
    Parse {
        line: usize,
        field: usize,
        message: String,
    },

    #[error("unknown bound identifier `{0}`")]
    UnknownBound(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for NumradError {
    fn from(err: std::io::Error) -> Self {
        NumradError::Io(err.to_string())
    }
}

//! Numerical radius of dense complex matrices and a catalog of upper bounds
//! built from `|A|`, `|A*|` and the weighted Aluthge transform.
//!
//! ```
//! use numrad::ensemble::cyclic_shift;
//! use numrad::radius::numerical_radius;
//! use numrad::bounds::kittaneh_sum;
//!
//! let a = cyclic_shift(&[2.0, 3.0, 4.0]);
//! let omega = numerical_radius(&a).unwrap();
//! let bound = kittaneh_sum(&a).unwrap();
//! assert!(omega <= bound.value + 1e-9);
//! assert!((bound.value - 3.5).abs() < 1e-12);
//! ```

pub mod bounds;
pub mod campaign;
pub mod ensemble;
pub mod error;
pub mod io;
pub mod linalg;
pub mod optimize;
pub mod pointwise;
pub mod polar;
pub mod radius;
pub mod report;
pub mod tolerance;

pub use error::{NumradError, Result};
pub use linalg::{Complex64, ComplexMatrix};

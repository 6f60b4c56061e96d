//! Finite-difference weights on arbitrary distinct grids.
//!
//! Three interchangeable weight algorithms sit behind [`weights::WeightAlgorithm`]:
//! partial products (the default), the modified Lagrange formula and
//! Fornberg's recurrences. On top of them the crate builds spectral
//! differentiation matrices, detects boosted order of accuracy, and measures
//! rounding error against an extended-precision reference.

pub mod error;
pub mod format;
pub mod grid;
pub mod numkernel;
pub mod oracle;
pub mod spectral;
pub mod superconv;
pub mod weights;

pub use error::{FdError, Result};
pub use grid::Grid;
pub use numkernel::Ordering;
pub use spectral::DiffMatrix;
pub use superconv::AccuracyReport;
pub use weights::{AlgorithmRegistry, WeightAlgorithm, WeightTable};

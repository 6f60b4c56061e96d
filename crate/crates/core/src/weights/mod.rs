//! Finite-difference weight algorithms.
//!
//! Every algorithm implements [`WeightAlgorithm`] and is looked up by name
//! in an [`AlgorithmRegistry`]; the CLI and the spectral builders select
//! among them at runtime.

mod fornberg;
mod mlagrange;
mod partial;
mod table;

use std::fmt;

pub use fornberg::{fornberg_weights, Fornberg};
pub use mlagrange::{
    all_weights_mlagrange, find_c, find_ckm, scale_weights, ModifiedLagrange, StarCoeffs,
};
pub use partial::{all_weights_partial, FdWeights, PartialProducts};
pub use table::WeightTable;

use crate::error::{FdError, Result};
use crate::grid::Grid;
use crate::spectral::DiffMatrix;

pub trait WeightAlgorithm: Send + Sync {
    /// Registry key.
    fn name(&self) -> &'static str;

    fn summary(&self) -> &'static str;

    /// Weights for orders `0..=max_order` of the derivative at `center`.
    fn weights(&self, grid: &Grid, max_order: usize, center: f64) -> Result<WeightTable>;

    /// `order`-th differentiation matrix on `grid`, nodes in grid order.
    ///
    /// The default computes each row independently, centered at its node.
    fn diff_matrix(&self, grid: &Grid, order: usize) -> Result<DiffMatrix> {
        check_order(grid, order)?;
        let rows = grid
            .points()
            .iter()
            .map(|&zi| Ok(self.weights(grid, order, zi)?.order(order)))
            .collect::<Result<Vec<_>>>()?;
        DiffMatrix::from_rows(grid.clone(), order, rows)
    }
}

impl fmt::Debug for dyn WeightAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightAlgorithm({})", self.name())
    }
}

/// Named collection of weight algorithms.
pub struct AlgorithmRegistry {
    entries: Vec<Box<dyn WeightAlgorithm>>,
}

impl AlgorithmRegistry {
    pub const DEFAULT: &'static str = "partial";

    pub fn empty() -> Self {
        AlgorithmRegistry {
            entries: Vec::new(),
        }
    }

    /// Registry holding `partial`, `mlagrange` and `fornberg`.
    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(PartialProducts));
        r.register(Box::new(ModifiedLagrange));
        r.register(Box::new(Fornberg));
        r
    }

    /// Adds an algorithm, replacing any existing entry with the same name.
    pub fn register(&mut self, algorithm: Box<dyn WeightAlgorithm>) {
        match self
            .entries
            .iter()
            .position(|a| a.name() == algorithm.name())
        {
            Some(i) => self.entries[i] = algorithm,
            None => self.entries.push(algorithm),
        }
    }

    pub fn get(&self, name: &str) -> Result<&dyn WeightAlgorithm> {
        self.entries
            .iter()
            .find(|a| a.name() == name)
            .map(|a| a.as_ref())
            .ok_or_else(|| {
                FdError::arg(format!(
                    "unknown algorithm '{name}' (available: {})",
                    self.names().join(", ")
                ))
            })
    }

    pub fn default_algorithm(&self) -> Result<&dyn WeightAlgorithm> {
        self.get(Self::DEFAULT)
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|a| a.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn WeightAlgorithm> {
        self.entries.iter().map(|a| a.as_ref())
    }
}

impl Default for AlgorithmRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

pub(crate) fn check_order(grid: &Grid, max_order: usize) -> Result<()> {
    if max_order >= grid.len() {
        return Err(FdError::arg(format!(
            "derivative order {max_order} needs at least {} grid points, got {}",
            max_order + 1,
            grid.len()
        )));
    }
    Ok(())
}

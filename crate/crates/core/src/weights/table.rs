use serde::Serialize;

use crate::error::{FdError, Result};
use crate::numkernel::Scalar;

/// Finite-difference weights `w[k][m]` for nodes `k = 0..n` and derivative
/// orders `m = 0..=max_order` at a fixed expansion center.
///
/// Storage is node-major and contiguous in `m`, i.e. `data[k * (max_order + 1) + m]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WeightTable<T = f64> {
    n: usize,
    max_order: usize,
    center: T,
    data: Vec<T>,
}

impl<T: Scalar> WeightTable<T> {
    pub fn from_data(n: usize, max_order: usize, center: T, data: Vec<T>) -> Result<Self> {
        if data.len() != n * (max_order + 1) {
            return Err(FdError::arg(format!(
                "weight data has {} entries, expected {} x {}",
                data.len(),
                n,
                max_order + 1
            )));
        }
        Ok(WeightTable {
            n,
            max_order,
            center,
            data,
        })
    }

    /// Builds a table from per-node rows `rows[k][m]`.
    pub fn from_rows(rows: Vec<Vec<T>>, center: T) -> Result<Self> {
        let n = rows.len();
        let width = rows.first().map_or(0, Vec::len);
        if width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(FdError::arg(
                "weight rows must be non-empty and of equal length",
            ));
        }
        WeightTable::from_data(n, width - 1, center, rows.into_iter().flatten().collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn center(&self) -> &T {
        &self.center
    }

    pub fn get(&self, k: usize, m: usize) -> &T {
        assert!(
            k < self.n && m <= self.max_order,
            "weight index ({k}, {m}) out of range"
        );
        &self.data[k * (self.max_order + 1) + m]
    }

    /// Weights of node `k` for orders `0..=max_order`.
    pub fn node(&self, k: usize) -> &[T] {
        let w = self.max_order + 1;
        &self.data[k * w..(k + 1) * w]
    }

    /// Weights of order `m` across all nodes.
    pub fn order(&self, m: usize) -> Vec<T> {
        assert!(
            m <= self.max_order,
            "order {m} exceeds table order {}",
            self.max_order
        );
        (0..self.n).map(|k| self.get(k, m).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.n).map(|k| self.node(k).to_vec()).collect()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn same_shape<U>(&self, other: &WeightTable<U>) -> bool {
        self.n == other.n && self.max_order == other.max_order
    }

    /// Maps a table computed on the grid dilated by `factor` (points `factor * z`,
    /// center `factor * zeta`) back to the original grid:
    /// `w_m(z) = factor^m * w_m(factor * z)`. Order-0 weights are unchanged.
    pub fn undilate(&self, factor: T) -> Result<Self> {
        if factor.is_zero() {
            return Err(FdError::arg("dilation factor must be nonzero"));
        }
        let mut data = self.data.clone();
        let mut power = T::one();
        for m in 0..=self.max_order {
            if m > 0 {
                power = power * factor.clone();
            }
            for k in 0..self.n {
                let slot = &mut data[k * (self.max_order + 1) + m];
                *slot = slot.clone() * power.clone();
            }
        }
        Ok(WeightTable {
            n: self.n,
            max_order: self.max_order,
            center: self.center.clone() / factor,
            data,
        })
    }
}

impl WeightTable<f64> {
    /// Largest scaled residual of the moment conditions
    /// `sum_k w[k][m] (z_k - center)^n = m! delta_{nm}`, `n = 0..N-1`, over all orders.
    ///
    /// Each residual is divided by `max(m!, sum_k |w[k][m] (z_k - center)^n|)`,
    /// the magnitude of the terms being cancelled.
    pub fn max_moment_residual(&self, points: &[f64]) -> f64 {
        assert_eq!(points.len(), self.n);
        let mut worst = 0.0f64;
        let mut factorial = 1.0;
        for m in 0..=self.max_order {
            if m > 0 {
                factorial *= m as f64;
            }
            let mut powers = vec![1.0; self.n];
            for n in 0..self.n {
                let (mut sum, mut mag) = (0.0, 0.0);
                for (k, p) in powers.iter().enumerate() {
                    let term = self.get(k, m) * p;
                    sum += term;
                    mag += term.abs();
                }
                let target = if n == m { factorial } else { 0.0 };
                worst = worst.max((sum - target).abs() / mag.max(factorial));
                for (p, z) in powers.iter_mut().zip(points) {
                    *p *= z - self.center;
                }
            }
        }
        worst
    }
}

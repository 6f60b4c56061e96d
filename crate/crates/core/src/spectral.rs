//! Spectral differentiation matrices and Chebyshev grids.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{FdError, Result};
use crate::format::fmt_f64;
use crate::grid::Grid;
use crate::numkernel::Ordering;
use crate::weights::{WeightAlgorithm, WeightTable};

/// `N x N` matrix with `f^(order)(z_i) ~ sum_j entries[i][j] f(z_j)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffMatrix {
    n: usize,
    order: usize,
    grid: Grid,
    entries: Vec<Vec<f64>>,
}

impl DiffMatrix {
    pub fn from_rows(grid: Grid, order: usize, entries: Vec<Vec<f64>>) -> Result<Self> {
        let n = grid.len();
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(FdError::arg(format!(
                "differentiation matrix must be {n} x {n}"
            )));
        }
        Ok(DiffMatrix {
            n,
            order,
            grid,
            entries,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn entries(&self) -> &[Vec<f64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    pub fn apply(&self, values: &[f64]) -> Vec<f64> {
        assert_eq!(values.len(), self.n);
        self.entries
            .iter()
            .map(|row| row.iter().zip(values).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Row-major CSV, one matrix row per line, shortest round-trip decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|&x| fmt_f64(x)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let m: DiffMatrix =
            serde_json::from_str(s).map_err(|e| FdError::arg(format!("bad matrix JSON: {e}")))?;
        DiffMatrix::from_rows(m.grid, m.order, m.entries)
    }
}

/// Parses the row-major CSV written by [`DiffMatrix::to_csv`].
pub fn parse_csv_rows(s: &str) -> Result<Vec<Vec<f64>>> {
    s.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<f64>()
                        .map_err(|e| FdError::arg(format!("bad CSV value '{t}': {e}")))
                })
                .collect()
        })
        .collect()
}

/// Chebyshev extreme points `cos((k-1) pi/(N-1))`, `k = 1..N`, evaluated as
/// `sin(pi (N - 2k + 1) / (2(N-1)))` so the set is exactly symmetric about 0,
/// then permuted by `ordering`.
pub fn chebyshev_grid(n: usize, ordering: Ordering) -> Result<Grid> {
    let natural = chebyshev_points(n)?;
    let perm = ordering.permutation(&natural);
    Grid::new(perm.apply(&natural))
}

fn chebyshev_points(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(FdError::arg(format!(
            "Chebyshev grid needs N >= 2, got {n}"
        )));
    }
    let denom = 2.0 * (n - 1) as f64;
    Ok((1..=n)
        .map(|k| {
            let num = n as f64 - 2.0 * k as f64 + 1.0;
            // keep the midpoint an exact zero
            if num == 0.0 {
                0.0
            } else {
                (PI * num / denom).sin()
            }
        })
        .collect())
}

pub fn diff_matrix(
    grid: &Grid,
    order: usize,
    algorithm: &dyn WeightAlgorithm,
) -> Result<DiffMatrix> {
    algorithm.diff_matrix(grid, order)
}

/// How a differentiation matrix is computed internally. The result is always
/// reported in the caller's node order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BuildOptions {
    /// Order in which nodes enter the binomial products.
    pub ordering: Ordering,
    /// Nodes are multiplied by this factor before computing; the weights are
    /// rescaled afterwards. Powers of two keep this exact.
    pub dilation: f64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            ordering: Ordering::Natural,
            dilation: 1.0,
        }
    }
}

impl BuildOptions {
    /// Bit reversal (or Leja for non-power-of-two sizes) with dilation by 2,
    /// which brings the capacity of `[-1, 1]` to 1 and keeps the Lagrange
    /// weights away from underflow.
    pub fn chebyshev(n: usize) -> Self {
        BuildOptions {
            ordering: Ordering::preferred_for(n),
            dilation: 2.0,
        }
    }
}

pub fn diff_matrix_with(
    grid: &Grid,
    order: usize,
    algorithm: &dyn WeightAlgorithm,
    options: BuildOptions,
) -> Result<DiffMatrix> {
    let perm = options.ordering.permutation(grid.points());
    let work = grid.permuted(&perm.indices)?;
    let work = if options.dilation == 1.0 {
        work
    } else {
        work.dilated(options.dilation)?
    };
    let computed = algorithm.diff_matrix(&work, order)?;
    let scale = options.dilation.powi(order as i32);
    let inv = perm.inverse();
    let n = grid.len();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| computed.get(inv[i], inv[j]) * scale)
                .collect()
        })
        .collect();
    DiffMatrix::from_rows(grid.clone(), order, entries)
}

/// Weight table computed with the nodes reordered and dilated per `options`,
/// reported for the caller's node order and scale.
pub fn weights_with(
    grid: &Grid,
    max_order: usize,
    center: f64,
    algorithm: &dyn WeightAlgorithm,
    options: BuildOptions,
) -> Result<WeightTable> {
    let perm = options.ordering.permutation(grid.points());
    let work = grid.permuted(&perm.indices)?;
    let table = if options.dilation == 1.0 {
        algorithm.weights(&work, max_order, center)?
    } else {
        let dilated = work.dilated(options.dilation)?;
        algorithm
            .weights(&dilated, max_order, center * options.dilation)?
            .undilate(options.dilation)?
    };
    let inv = perm.inverse();
    let rows = (0..grid.len())
        .map(|k| table.node(inv[k]).to_vec())
        .collect();
    WeightTable::from_rows(rows, center)
}

/// Chebyshev differentiation matrix in natural node order, built with
/// [`BuildOptions::chebyshev`].
pub fn chebyshev_diff_matrix(
    n: usize,
    order: usize,
    algorithm: &dyn WeightAlgorithm,
) -> Result<DiffMatrix> {
    let grid = chebyshev_grid(n, Ordering::Natural)?;
    diff_matrix_with(&grid, order, algorithm, BuildOptions::chebyshev(n))
}

/// Converts a table computed on the grid dilated by `c` into the table for
/// the original grid: the order-`m` weights are multiplied by `c^m`.
pub fn rescale_weights(table: &WeightTable, c: f64) -> Result<WeightTable> {
    table.undilate(c)
}

use serde::Serialize;

use crate::error::{FdError, Result};
use crate::grid::Grid;

/// `S_p`, the sum of all products of `p` distinct points, and `T_p`, the
/// same sum taken over absolute values of the products.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SymmetricSums {
    pub p: usize,
    pub s: f64,
    pub t: f64,
}

pub fn elementary_symmetric(grid: &Grid, p: usize) -> Result<SymmetricSums> {
    if p > grid.len() {
        return Err(FdError::arg(format!(
            "symmetric function order {p} exceeds grid size {}",
            grid.len()
        )));
    }
    let s = symmetric_upto(grid.points().iter().copied(), p)[p];
    let t = symmetric_upto(grid.points().iter().map(|z| z.abs()), p)[p];
    Ok(SymmetricSums { p, s, t })
}

/// `S_0..=S_p` through the coefficient recursion `S_j <- S_j + z S_{j-1}`,
/// O(N p) work.
pub(crate) fn symmetric_upto(points: impl Iterator<Item = f64>, p: usize) -> Vec<f64> {
    let mut e = vec![0.0; p + 1];
    e[0] = 1.0;
    for z in points {
        for j in (1..=p).rev() {
            e[j] += z * e[j - 1];
        }
    }
    e
}

//! Fornberg's recurrences, building weights for the partial grids
//! `z_1..z_k` as `k` grows. Serves as the classical baseline.

use super::{check_order, WeightAlgorithm, WeightTable};
use crate::error::Result;
use crate::grid::Grid;

pub fn fornberg_weights(grid: &Grid, max_order: usize, center: f64) -> Result<WeightTable> {
    check_order(grid, max_order)?;
    let x = grid.points();
    let n = x.len();
    let width = max_order + 1;
    // c[j * width + m]: weight of node j for order m on the current partial grid
    let mut c = vec![0.0; n * width];
    c[0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = x[0] - center;
    for i in 1..n {
        let mn = i.min(max_order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - center;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for m in (1..=mn).rev() {
                    c[i * width + m] = c1
                        * (m as f64 * c[(i - 1) * width + m - 1] - c5 * c[(i - 1) * width + m])
                        / c2;
                }
                c[i * width] = -c1 * c5 * c[(i - 1) * width] / c2;
            }
            for m in (1..=mn).rev() {
                c[j * width + m] = (c4 * c[j * width + m] - m as f64 * c[j * width + m - 1]) / c3;
            }
            c[j * width] = c4 * c[j * width] / c3;
        }
        c1 = c2;
    }
    WeightTable::from_data(n, max_order, center, c)
}

#[derive(Debug, Default, Clone, Copy)]
pub struct Fornberg;

impl WeightAlgorithm for Fornberg {
    fn name(&self) -> &'static str {
        "fornberg"
    }

    fn summary(&self) -> &'static str {
        "Fornberg's partial-grid recurrences (classical baseline)"
    }

    fn weights(&self, grid: &Grid, max_order: usize, center: f64) -> Result<WeightTable> {
        fornberg_weights(grid, max_order, center)
    }
}

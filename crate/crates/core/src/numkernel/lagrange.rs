use std::cell::Cell;

use serde::Serialize;

use super::Scalar;
use crate::grid::Grid;

/// Lagrange (barycentric) weights `w_k = 1 / prod_{j != k} (z_k - z_j)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct LagrangeWeights(Vec<f64>);

impl LagrangeWeights {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Index<usize> for LagrangeWeights {
    type Output = f64;

    fn index(&self, k: usize) -> &f64 {
        &self.0[k]
    }
}

thread_local! {
    static EVALUATIONS: Cell<usize> = const { Cell::new(0) };
}

/// Number of Lagrange-weight computations performed on the current thread.
pub fn lagrange_evaluations() -> usize {
    EVALUATIONS.with(Cell::get)
}

pub fn lagrange_weights(grid: &Grid) -> LagrangeWeights {
    LagrangeWeights(lagrange_weights_of(grid.points()))
}

/// Uses N divisions; the points must be pairwise distinct.
pub(crate) fn lagrange_weights_of<T: Scalar>(points: &[T]) -> Vec<T> {
    EVALUATIONS.with(|c| c.set(c.get() + 1));
    points
        .iter()
        .enumerate()
        .map(|(k, zk)| {
            let prod = points
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .fold(T::one(), |acc, (_, zj)| acc * (zk.clone() - zj.clone()));
            T::one() / prod
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(p: &[f64]) -> Grid {
        Grid::new(p.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            lagrange_weights(&grid(&[-1.0, 0.0, 1.0])).as_slice(),
            &[0.5, -1.0, 0.5]
        );
        assert_eq!(
            lagrange_weights(&grid(&[0.0, 1.0])).as_slice(),
            &[-1.0, 1.0]
        );
        assert_eq!(lagrange_weights(&grid(&[5.0])).as_slice(), &[1.0]);
    }

    #[test]
    fn weights_are_nonzero_and_sum_to_zero() {
        // sum_k w_k = leading coefficient of the interpolant of a constant = 0 for N >= 2
        let w = lagrange_weights(&grid(&[-0.9, -0.3, 0.1, 0.45, 0.8, 1.3]));
        assert!(w.as_slice().iter().all(|x| *x != 0.0));
        let sum: f64 = w.as_slice().iter().sum();
        let scale: f64 = w.as_slice().iter().map(|x| x.abs()).sum();
        assert!(sum.abs() < 1e-14 * scale);
    }

    #[test]
    fn counts_evaluations_on_this_thread() {
        let before = lagrange_evaluations();
        lagrange_weights(&grid(&[1.0, 2.0]));
        assert_eq!(lagrange_evaluations(), before + 1);
    }
}

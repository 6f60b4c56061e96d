//! Weights from left and right partial products.
//!
//! With `l_k = prod_{j<=k} (z - z_j)` and `r_k = prod_{j>=k} (z - z_j)`, the
//! cardinal polynomial is `pi_k = l_{k-1} r_{k+1}`, so its low-order
//! coefficients come from a truncated convolution. Only binomial
//! multiplications and convolutions are involved: no back substitution, and
//! no division at all once the Lagrange weights are known.

use super::{check_order, WeightAlgorithm, WeightTable};
use crate::error::{FdError, Result};
use crate::grid::Grid;
use crate::numkernel::lagrange::lagrange_weights_of;
use crate::numkernel::poly::convolve_into;
use crate::numkernel::{multbinom_into, Scalar};
use crate::spectral::DiffMatrix;

/// Re-centerable weight state. Lagrange weights are computed once at
/// construction; moving the expansion center only redoes the partial
/// products (`+`, `-`, `*` only).
///
/// Node indices are 0-based.
#[derive(Debug, Clone)]
pub struct FdWeights<T: Scalar = f64> {
    points: Vec<T>,
    max_order: usize,
    lagrange: Vec<T>,
    center: T,
    /// Rows `0..=N+1` of `L_{k,m}` and `R_{k,m}`, each `max_order + 1` wide.
    left: Vec<T>,
    right: Vec<T>,
    shifted: Vec<T>,
    /// `w[k][m]` at `k * (max_order + 1) + m`.
    table: Vec<T>,
}

impl FdWeights<f64> {
    /// State centered at 0.
    pub fn new(grid: &Grid, max_order: usize) -> Result<Self> {
        check_order(grid, max_order)?;
        Ok(Self::from_points(grid.points().to_vec(), max_order))
    }

    pub fn grid_points(&self) -> &[f64] {
        &self.points
    }
}

impl<T: Scalar> FdWeights<T> {
    /// The points must be pairwise distinct and `max_order < points.len()`.
    pub(crate) fn from_points(points: Vec<T>, max_order: usize) -> Self {
        let n = points.len();
        let width = max_order + 1;
        let lagrange = lagrange_weights_of(&points);
        let mut state = FdWeights {
            points,
            max_order,
            lagrange,
            center: T::zero(),
            left: vec![T::zero(); (n + 2) * width],
            right: vec![T::zero(); (n + 2) * width],
            shifted: vec![T::zero(); n],
            table: vec![T::zero(); n * width],
        };
        state.left[0] = T::one();
        state.right[(n + 1) * width] = T::one();
        state.set_center(T::zero());
        state
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn center(&self) -> &T {
        &self.center
    }

    pub fn lagrange_weights(&self) -> &[T] {
        &self.lagrange
    }

    /// Moves the expansion center to `zeta` and recomputes all weights.
    pub fn set_center(&mut self, zeta: T) {
        for (s, z) in self.shifted.iter_mut().zip(&self.points) {
            *s = z.clone() - zeta.clone();
        }
        self.center = zeta;
        self.rebuild();
    }

    /// Centers at node `k`; the shifted node is exactly zero.
    pub fn set_center_node(&mut self, k: usize) -> Result<()> {
        if k >= self.len() {
            return Err(FdError::arg(format!(
                "node index {k} out of range for {} points",
                self.len()
            )));
        }
        self.set_center(self.points[k].clone());
        Ok(())
    }

    fn rebuild(&mut self) {
        let n = self.points.len();
        let width = self.max_order + 1;

        // l_k = l_{k-1} (z - zeta_k), k ascending; row 0 is the constant 1.
        for k in 1..=n {
            let (done, rest) = self.left.split_at_mut(k * width);
            multbinom_into(
                &done[(k - 1) * width..],
                &self.shifted[k - 1],
                &mut rest[..width],
            );
        }
        // r_k = r_{k+1} (z - zeta_k), k descending; row N+1 is the constant 1.
        for k in (1..=n).rev() {
            let (head, tail) = self.right.split_at_mut((k + 1) * width);
            multbinom_into(&tail[..width], &self.shifted[k - 1], &mut head[k * width..]);
        }

        let mut conv = vec![T::zero(); width];
        for k in 1..=n {
            let l = &self.left[(k - 1) * width..k * width];
            let r = &self.right[(k + 1) * width..(k + 2) * width];
            convolve_into(l, r, &mut conv);
            let mut f = self.lagrange[k - 1].clone();
            let out = &mut self.table[(k - 1) * width..k * width];
            for (m, (slot, c)) in out.iter_mut().zip(&conv).enumerate() {
                *slot = f.clone() * c.clone();
                f = f.scale_by(m + 1);
            }
        }
    }

    /// Weight of node `k` for the derivative of order `m` at the current center.
    pub fn weight(&self, m: usize, k: usize) -> Result<T> {
        if m > self.max_order || k >= self.len() {
            return Err(FdError::arg(format!(
                "weight index (m={m}, k={k}) out of range (max order {}, {} nodes)",
                self.max_order,
                self.len()
            )));
        }
        Ok(self.table[k * (self.max_order + 1) + m].clone())
    }

    /// Weights of the top order `max_order` across all nodes.
    pub fn top_order(&self) -> Vec<T> {
        let width = self.max_order + 1;
        self.table
            .iter()
            .skip(self.max_order)
            .step_by(width)
            .cloned()
            .collect()
    }

    pub fn table(&self) -> WeightTable<T> {
        WeightTable::from_data(
            self.len(),
            self.max_order,
            self.center.clone(),
            self.table.clone(),
        )
        .expect("state table has consistent shape")
    }

    /// Order-`max_order` differentiation matrix, re-centering at each node in turn.
    pub fn diff_rows(&mut self) -> Vec<Vec<T>> {
        (0..self.len())
            .map(|i| {
                self.set_center(self.points[i].clone());
                self.top_order()
            })
            .collect()
    }

    /// Coefficients of `pi_k` up to `z^max_order` at the current center.
    pub fn cardinal_coeffs(&self, k: usize) -> Vec<T> {
        let width = self.max_order + 1;
        let mut conv = vec![T::zero(); width];
        convolve_into(
            &self.left[k * width..(k + 1) * width],
            &self.right[(k + 2) * width..(k + 3) * width],
            &mut conv,
        );
        conv
    }
}

pub fn all_weights_partial(grid: &Grid, max_order: usize, center: f64) -> Result<WeightTable> {
    let mut state = FdWeights::new(grid, max_order)?;
    if center != 0.0 {
        state.set_center(center);
    }
    Ok(state.table())
}

#[derive(Debug, Default, Clone, Copy)]
pub struct PartialProducts;

impl WeightAlgorithm for PartialProducts {
    fn name(&self) -> &'static str {
        "partial"
    }

    fn summary(&self) -> &'static str {
        "left/right partial products and truncated convolution (recommended)"
    }

    fn weights(&self, grid: &Grid, max_order: usize, center: f64) -> Result<WeightTable> {
        all_weights_partial(grid, max_order, center)
    }

    fn diff_matrix(&self, grid: &Grid, order: usize) -> Result<DiffMatrix> {
        let mut state = FdWeights::new(grid, order)?;
        DiffMatrix::from_rows(grid.clone(), order, state.diff_rows())
    }
}

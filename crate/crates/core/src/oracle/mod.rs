//! Extended-precision reference weights and rounding-error measurement.
//!
//! The reference replays the partial-products algorithm with every operation
//! carried out at the requested decimal precision. Grid points enter as the
//! exact values of their doubles: the double grid is the problem instance.

mod bigscalar;
pub mod rational;

use num_traits::Zero;
use serde::Serialize;

pub use bigscalar::{bits_for_digits, BigScalar};

use crate::error::{FdError, Result};
use crate::grid::Grid;
use crate::spectral::DiffMatrix;
use crate::weights::{check_order, FdWeights, WeightTable};

pub const DEFAULT_DIGITS: u32 = 50;
pub const MIN_DIGITS: u32 = 30;

fn check_digits(digits: u32) -> Result<()> {
    if digits < MIN_DIGITS {
        return Err(FdError::arg(format!(
            "oracle precision must be at least {MIN_DIGITS} digits, got {digits}"
        )));
    }
    Ok(())
}

fn big_state(grid: &Grid, max_order: usize, digits: u32) -> Result<FdWeights<BigScalar>> {
    check_digits(digits)?;
    check_order(grid, max_order)?;
    let points = grid
        .points()
        .iter()
        .map(|&z| BigScalar::from_f64(z, digits))
        .collect();
    Ok(FdWeights::from_points(points, max_order))
}

pub fn exact_weights(
    grid: &Grid,
    max_order: usize,
    center: f64,
    digits: u32,
) -> Result<WeightTable<BigScalar>> {
    let mut state = big_state(grid, max_order, digits)?;
    if center != 0.0 {
        state.set_center(BigScalar::from_f64(center, digits));
    }
    Ok(state.table())
}

/// Reference differentiation matrix in the grid's node order.
#[derive(Debug, Clone)]
pub struct ReferenceMatrix {
    pub order: usize,
    pub digits: u32,
    pub entries: Vec<Vec<BigScalar>>,
}

pub fn exact_diff_matrix(grid: &Grid, order: usize, digits: u32) -> Result<ReferenceMatrix> {
    let mut state = big_state(grid, order, digits)?;
    Ok(ReferenceMatrix {
        order,
        digits,
        entries: state.diff_rows(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntryError {
    /// Node `k` for weight tables, row `i` for matrices.
    pub row: usize,
    /// Order `m` for weight tables, column `j` for matrices.
    pub col: usize,
    pub rel_error: f64,
    pub digits_lost: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorMap {
    pub entries: Vec<EntryError>,
    pub max_rel_error: f64,
    pub max_digits_lost: f64,
}

impl ErrorMap {
    /// CSV with header `<row_label>,<col_label>,rel_error,digits_lost`.
    pub fn to_csv(&self, row_label: &str, col_label: &str) -> String {
        let mut out = format!("{row_label},{col_label},rel_error,digits_lost\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{:.1}\n",
                e.row,
                e.col,
                crate::format::fmt_f64(e.rel_error),
                e.digits_lost
            ));
        }
        out
    }
}

/// Decimal digits lost relative to full double precision:
/// `max(0, log10(rel) + 16)`, to one decimal.
pub fn digits_from_rel(rel: f64) -> f64 {
    if rel == 0.0 {
        return 0.0;
    }
    ((rel.log10() + 16.0).max(0.0) * 10.0).round() / 10.0
}

/// Scores `approx` against `reference`, both given as `rows x cols`
/// row-major slices.
///
/// Entries whose reference magnitude is below `10^-digits` of the largest
/// reference magnitude (in practice exact zeros) are scored by absolute error
/// against that largest magnitude.
pub fn score(
    approx: &[f64],
    reference: &[BigScalar],
    cols: usize,
    digits: u32,
) -> Result<ErrorMap> {
    if approx.len() != reference.len() || cols == 0 || !approx.len().is_multiple_of(cols) {
        return Err(FdError::arg(format!(
            "cannot compare {} entries against {} reference entries",
            approx.len(),
            reference.len()
        )));
    }
    let largest = reference
        .iter()
        .max_by(|a, b| a.partial_cmp_abs(b).unwrap_or(std::cmp::Ordering::Equal))
        .map(|x| x.abs());
    let floor = largest
        .clone()
        .map(|l| l * BigScalar::from_f64(10f64.powi(-(digits as i32)), digits));

    let mut entries = Vec::with_capacity(approx.len());
    let (mut max_rel, mut max_digits) = (0.0f64, 0.0f64);
    for (idx, (a, r)) in approx.iter().zip(reference).enumerate() {
        let diff = (BigScalar::from_f64(*a, digits) - r.clone()).abs();
        let tiny = floor
            .as_ref()
            .is_none_or(|f| r.partial_cmp_abs(f) != Some(std::cmp::Ordering::Greater));
        let rel = if diff.is_zero() {
            0.0
        } else if tiny {
            match &largest {
                Some(l) if !l.is_zero() => (diff / l.clone()).to_f64(),
                _ => diff.to_f64(),
            }
        } else {
            (diff / r.abs()).to_f64()
        };
        let d = digits_from_rel(rel);
        max_rel = max_rel.max(rel);
        max_digits = max_digits.max(d);
        entries.push(EntryError {
            row: idx / cols,
            col: idx % cols,
            rel_error: rel,
            digits_lost: d,
        });
    }
    Ok(ErrorMap {
        entries,
        max_rel_error: max_rel,
        max_digits_lost: max_digits,
    })
}

/// Per-entry rounding error of a double-precision table.
pub fn digits_lost(approx: &WeightTable, reference: &WeightTable<BigScalar>) -> Result<ErrorMap> {
    if !approx.same_shape(reference) {
        return Err(FdError::arg(format!(
            "table shapes differ: {}x{} vs {}x{}",
            approx.n(),
            approx.max_order() + 1,
            reference.n(),
            reference.max_order() + 1
        )));
    }
    let digits = reference
        .as_slice()
        .first()
        .map_or(DEFAULT_DIGITS, BigScalar::digits);
    score(
        approx.as_slice(),
        reference.as_slice(),
        approx.max_order() + 1,
        digits,
    )
}

/// Per-entry rounding error of a differentiation matrix.
pub fn matrix_digits_lost(approx: &DiffMatrix, reference: &ReferenceMatrix) -> Result<ErrorMap> {
    if approx.n() != reference.entries.len() || approx.order() != reference.order {
        return Err(FdError::arg(
            "matrix shape or order differs from the reference",
        ));
    }
    let flat: Vec<f64> = approx.entries().iter().flatten().copied().collect();
    let refs: Vec<BigScalar> = reference.entries.iter().flatten().cloned().collect();
    score(&flat, &refs, approx.n(), reference.digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{all_weights_partial, WeightTable};

    fn grid(p: &[f64]) -> Grid {
        Grid::new(p.to_vec()).unwrap()
    }

    #[test]
    fn exact_integer_stencil() {
        let t = exact_weights(&grid(&[-1.0, 0.0, 1.0]), 2, 0.0, 50).unwrap();
        let col: Vec<f64> = t.order(2).iter().map(BigScalar::to_f64).collect();
        assert_eq!(col, vec![1.0, -2.0, 1.0]);
        assert_eq!(t.order(2)[1], BigScalar::from_f64(-2.0, 50));
    }

    #[test]
    fn fifty_digit_one_sided_stencil() {
        let t = exact_weights(&grid(&[0.0, 1.0, 2.0, 3.0]), 1, 0.0, 50).unwrap();
        let big = |x: f64| BigScalar::from_f64(x, 50);
        let exact = [
            big(-11.0) / big(6.0),
            big(3.0),
            big(-3.0) / big(2.0),
            big(1.0) / big(3.0),
        ];
        for (w, e) in t.order(1).iter().zip(exact) {
            let rel = ((w.clone() - e.clone()) / e).abs().to_f64();
            assert!(rel < 1e-49, "{w} rel {rel}");
        }
    }

    #[test]
    fn rejects_low_precision() {
        assert!(exact_weights(&grid(&[0.0, 1.0]), 1, 0.0, 20).is_err());
    }

    #[test]
    fn identical_tables_lose_nothing() {
        let g = grid(&[-0.9, -0.2, 0.3, 1.1]);
        let approx = all_weights_partial(&g, 3, 0.0).unwrap();
        let exact = WeightTable::from_data(
            4,
            3,
            BigScalar::from_f64(0.0, 50),
            approx
                .as_slice()
                .iter()
                .map(|&x| BigScalar::from_f64(x, 50))
                .collect(),
        )
        .unwrap();
        let map = digits_lost(&approx, &exact).unwrap();
        assert_eq!(map.max_digits_lost, 0.0);
        assert!(map.entries.iter().all(|e| e.rel_error == 0.0));
    }

    #[test]
    fn perturbation_of_1e_13_loses_about_3_digits() {
        let approx = [1.0 + 1e-13, 2.0 * (1.0 + 1e-13)];
        let refs = [BigScalar::from_f64(1.0, 50), BigScalar::from_f64(2.0, 50)];
        let map = score(&approx, &refs, 2, 50).unwrap();
        assert!(
            (map.max_digits_lost - 3.0).abs() <= 0.1,
            "{}",
            map.max_digits_lost
        );
        assert!(score(&approx, &refs[..1], 1, 50).is_err());
    }

    #[test]
    fn zero_reference_scored_against_table_max() {
        let approx = [1e-17, 4.0];
        let refs = [BigScalar::from_f64(0.0, 50), BigScalar::from_f64(4.0, 50)];
        let map = score(&approx, &refs, 2, 50).unwrap();
        assert!((map.entries[0].rel_error - 2.5e-18).abs() < 1e-30);
        assert_eq!(map.entries[0].digits_lost, 0.0);
    }

    #[test]
    fn digits_formula() {
        assert_eq!(digits_from_rel(0.0), 0.0);
        assert_eq!(digits_from_rel(1e-17), 0.0);
        assert_eq!(digits_from_rel(1e-9), 7.0);
    }

    #[test]
    fn error_map_csv() {
        let approx = [1.0, 2.0];
        let refs = [BigScalar::from_f64(1.0, 50), BigScalar::from_f64(2.0, 50)];
        let csv = score(&approx, &refs, 1, 50).unwrap().to_csv("i", "j");
        assert_eq!(csv, "i,j,rel_error,digits_lost\n0,0,0.0,0.0\n1,0,0.0,0.0\n");
    }
}

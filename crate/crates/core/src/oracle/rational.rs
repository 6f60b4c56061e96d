//! Exact weights for small rational grids by direct solution of the moment
//! system `sum_k w[k][m] (z_k - c)^n = m! delta_{nm}`, `n = 0..N-1`.
//!
//! Independent of the binomial-product algorithms; used as a cross-check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{FdError, Result};

/// Exact rational value of a finite double.
pub fn rational_from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or(FdError::NonFinite { index: 0, value: x })
}

/// `w[k][m]` for `m = 0..=max_order` by Gauss-Jordan elimination in exact
/// arithmetic. Cost grows quickly with `N`; meant for `N <= 8` or so.
pub fn solve_moment_system(
    points: &[BigRational],
    center: &BigRational,
    max_order: usize,
) -> Result<Vec<Vec<BigRational>>> {
    let n = points.len();
    if n == 0 || max_order >= n {
        return Err(FdError::arg(format!(
            "need 0 <= M < N, got M = {max_order}, N = {n}"
        )));
    }
    let x: Vec<BigRational> = points.iter().map(|z| z - center).collect();
    let width = n + max_order + 1;
    // augmented rows: [x_0^p .. x_{N-1}^p | m! delta_{pm} for m = 0..=M]
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|p| {
            let mut row: Vec<BigRational> = x.iter().map(|xk| pow(xk, p)).collect();
            let mut fact = BigRational::one();
            for m in 0..=max_order {
                if m > 0 {
                    fact *= BigRational::from_integer(BigInt::from(m));
                }
                row.push(if m == p {
                    fact.clone()
                } else {
                    BigRational::zero()
                });
            }
            row
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| FdError::arg("moment system is singular (repeated points?)"))?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row).take(width) {
                    *v -= &f * p;
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

fn pow(x: &BigRational, p: usize) -> BigRational {
    (0..p).fold(BigRational::one(), |acc, _| acc * x)
}

/// Relative distance `|approx - exact| / |exact|` (absolute when `exact` is 0).
pub fn rational_rel_error(approx: f64, exact: &BigRational) -> f64 {
    let a = match BigRational::from_float(approx) {
        Some(a) => a,
        None => return f64::INFINITY,
    };
    let diff = (a - exact).abs();
    let scaled = if exact.is_zero() {
        diff
    } else {
        diff / exact.abs()
    };
    ratio_to_f64(&scaled)
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::INFINITY)
}

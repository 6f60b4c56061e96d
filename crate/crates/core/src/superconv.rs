//! Superconvergence detection and leading error terms.
//!
//! A formula for `f^(m)(0)` on `N` points is generically of order `N - m`.
//! It is boosted by `b` exactly when the elementary symmetric functions
//! `S_{N-m}, ..., S_{N-m+b-1}` of the (centered) grid all vanish; `b <= m`
//! always, and `b <= 1` when the grid is real.

use serde::Serialize;

use crate::error::{FdError, Result};
use crate::grid::Grid;
use crate::numkernel::symmetric::symmetric_upto;
use crate::numkernel::SymmetricSums;
use crate::weights::WeightTable;

/// `1000 * f64::EPSILON`.
pub const DEFAULT_TOLERANCE: f64 = 1e3 * f64::EPSILON;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoostDetection {
    /// Reported boost, at most 1 for a real grid.
    pub boost: usize,
    /// Number of leading symmetric functions that passed the zero test,
    /// before the real-grid cap is applied.
    pub raw_boost: usize,
    /// The inspected `S_{N-m}..=S_{N-m+boost}` (as far as they exist).
    pub s_values: Vec<SymmetricSums>,
    pub diagnostic: Option<String>,
}

pub fn detect_boost(grid: &Grid, m: usize, tolerance: f64) -> Result<BoostDetection> {
    let n = grid.len();
    if m == 0 || m >= n {
        return Err(FdError::arg(format!(
            "boost detection needs 1 <= m <= N-1 (m = {m}, N = {n}); interpolation is not analyzed"
        )));
    }
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(FdError::arg(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let s = symmetric_upto(grid.points().iter().copied(), n);
    let t = symmetric_upto(grid.points().iter().map(|z| z.abs()), n);
    let base = n - m;

    let raw_boost = (0..m)
        .take_while(|&i| s[base + i].abs() < tolerance * t[base + i])
        .count();
    let (boost, diagnostic) = if raw_boost >= 2 {
        (
            1,
            Some(format!(
                "zero test passed for {raw_boost} consecutive symmetric functions; a real grid \
                 cannot be boosted by more than 1, so the tolerance {tolerance:e} is too loose"
            )),
        )
    } else {
        (raw_boost, None)
    };
    let s_values = (base..=(base + boost).min(n))
        .map(|p| SymmetricSums {
            p,
            s: s[p],
            t: t[p],
        })
        .collect();
    Ok(BoostDetection {
        boost,
        raw_boost,
        s_values,
        diagnostic,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeadingTerm {
    /// `C / (r + m)!`
    pub coefficient: f64,
    /// Order `r + m` of the derivative of `f` in the term.
    pub derivative: usize,
    /// Power `r` of the step `h`.
    pub h_power: usize,
    pub expression: String,
    pub remark: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AccuracyReport {
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub base_order: usize,
    pub boost: usize,
    pub order: usize,
    pub error_constant: f64,
    pub leading_term: LeadingTerm,
    pub tolerance: f64,
    pub s_values: Vec<SymmetricSums>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

/// Order of accuracy and error constant of the order-`m` weights in `weights`.
///
/// Grid points are taken relative to the table's center. The constant is
/// `C = sum_k w[k][m] z_k^(r+m)` and the leading error term is
/// `C f^(r+m)(0) / (r+m)! h^r`.
pub fn analyze(
    grid: &Grid,
    m: usize,
    weights: &WeightTable,
    tolerance: f64,
) -> Result<AccuracyReport> {
    let n = grid.len();
    if weights.n() != n || weights.max_order() < m {
        return Err(FdError::arg(format!(
            "weights cover {} nodes up to order {}, need {n} nodes and order {m}",
            weights.n(),
            weights.max_order()
        )));
    }
    let center = *weights.center();
    let local = if center == 0.0 {
        grid.clone()
    } else {
        grid.shifted(center)?
    };
    let detection = detect_boost(&local, m, tolerance)?;
    let order = n - m + detection.boost;
    let power = order + m;

    let (mut constant, mut scale) = (0.0, 0.0);
    for (k, z) in local.points().iter().enumerate() {
        let term = weights.get(k, m) * z.powi(power as i32);
        constant += term;
        scale += term.abs();
    }
    if constant.abs() < tolerance * scale || constant == 0.0 {
        return Err(FdError::DegenerateConstant {
            constant,
            scale,
            order,
            candidates: [order, order + 1],
        });
    }

    let factorial: f64 = (1..=power).map(|i| i as f64).product();
    let leading_term = LeadingTerm {
        coefficient: constant / factorial,
        derivative: power,
        h_power: order,
        expression: format!("{constant} * f^({power})(0) / {power}! * h^{order}"),
        remark: format!(
            "conjecture: the error equals {constant} * f^({power})(xi) / {power}! * h^{order} \
             for some xi in the smallest interval containing 0 and the grid"
        ),
    };
    Ok(AccuracyReport {
        m,
        n,
        base_order: n - m,
        boost: detection.boost,
        order,
        error_constant: constant,
        leading_term,
        tolerance,
        s_values: detection.s_values,
        diagnostic: detection.diagnostic,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentResiduals {
    /// `|sum_k w[k][m] z_k^n - m! delta_{nm}|` for `n = 0..N-1`.
    pub residuals: Vec<f64>,
    /// `sum_k w[k][m] z_k^(N-1+beta)` for `beta = 1..=m+1`.
    pub probes: Vec<f64>,
}

pub fn moment_residuals(grid: &Grid, weights: &WeightTable, m: usize) -> Result<MomentResiduals> {
    let n = grid.len();
    if weights.n() != n || weights.max_order() < m {
        return Err(FdError::arg(format!(
            "weights cover {} nodes up to order {}, need {n} nodes and order {m}",
            weights.n(),
            weights.max_order()
        )));
    }
    let center = *weights.center();
    let w = weights.order(m);
    let factorial: f64 = (1..=m).map(|i| i as f64).product();
    let mut powers = vec![1.0; n];
    let mut residuals = Vec::with_capacity(n);
    let mut probes = Vec::with_capacity(m + 1);
    for p in 0..n + m + 1 {
        let sum: f64 = w.iter().zip(&powers).map(|(a, b)| a * b).sum();
        if p < n {
            let target = if p == m { factorial } else { 0.0 };
            residuals.push((sum - target).abs());
        } else {
            probes.push(sum);
        }
        for (pw, z) in powers.iter_mut().zip(grid.points()) {
            *pw *= z - center;
        }
    }
    Ok(MomentResiduals { residuals, probes })
}

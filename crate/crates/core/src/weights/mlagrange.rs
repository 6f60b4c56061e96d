//! Weights from the modified Lagrange formula.
//!
//! The low-order coefficients of `pi*(z) = prod (z - z_k)` are built once;
//! the coefficients of each cardinal polynomial `pi_k = pi* / (z - z_k)` are
//! then recovered by forward substitution and scaled by `m! w_k`. Cheap
//! (`2N^2 + 6MN` flops) but the substitution step loses accuracy quickly
//! once the derivative order exceeds about 4.

use super::{check_order, WeightAlgorithm, WeightTable};
use crate::error::Result;
use crate::grid::Grid;
use crate::numkernel::{lagrange_weights, multbinom_into, TruncatedPoly};

/// Coefficients `C_0..=C_{M+1}` of `prod (z - z_k)`.
pub type StarCoeffs = TruncatedPoly<f64>;

pub fn find_c(grid: &Grid, max_order: usize) -> Result<StarCoeffs> {
    check_order(grid, max_order)?;
    Ok(star_coeffs(grid.points(), max_order))
}

fn star_coeffs(points: &[f64], max_order: usize) -> StarCoeffs {
    let mut c = TruncatedPoly::<f64>::one(max_order + 1).into_coeffs();
    let mut t = c.clone();
    for z in points {
        multbinom_into(&c, z, &mut t);
        std::mem::swap(&mut c, &mut t);
    }
    TruncatedPoly::new(c)
}

/// Coefficients `c_{k,0..=M}` of `pi_k(z) = pi*(z) / (z - z_k)`.
pub fn find_ckm(zk: f64, star: &StarCoeffs) -> Vec<f64> {
    let c = star.coeffs();
    let max_order = star.degree_cap() - 1;
    if zk == 0.0 {
        return c[1..=max_order + 1].to_vec();
    }
    let inv = 1.0 / zk;
    let mut out = Vec::with_capacity(max_order + 1);
    let mut prev = -inv * c[0];
    out.push(prev);
    for cm in &c[1..=max_order] {
        prev = inv * (prev - cm);
        out.push(prev);
    }
    out
}

/// `w_{k,m} = m! w_k c_{k,m}` with a running factorial.
pub fn scale_weights(ck: &[f64], wk: f64) -> Vec<f64> {
    let mut f = wk;
    ck.iter()
        .enumerate()
        .map(|(m, c)| {
            let w = f * c;
            f *= (m + 1) as f64;
            w
        })
        .collect()
}

pub fn all_weights_mlagrange(grid: &Grid, max_order: usize, center: f64) -> Result<WeightTable> {
    check_order(grid, max_order)?;
    let shifted = if center == 0.0 {
        grid.clone()
    } else {
        grid.shifted(center)?
    };
    let lagrange = lagrange_weights(&shifted);
    let star = star_coeffs(shifted.points(), max_order);
    let mut data = Vec::with_capacity(grid.len() * (max_order + 1));
    for (k, &zk) in shifted.points().iter().enumerate() {
        data.extend(scale_weights(&find_ckm(zk, &star), lagrange[k]));
    }
    WeightTable::from_data(grid.len(), max_order, center, data)
}

#[derive(Debug, Default, Clone, Copy)]
pub struct ModifiedLagrange;

impl WeightAlgorithm for ModifiedLagrange {
    fn name(&self) -> &'static str {
        "mlagrange"
    }

    fn summary(&self) -> &'static str {
        "modified Lagrange formula with forward substitution (accurate for orders up to about 4)"
    }

    fn weights(&self, grid: &Grid, max_order: usize, center: f64) -> Result<WeightTable> {
        all_weights_mlagrange(grid, max_order, center)
    }
}

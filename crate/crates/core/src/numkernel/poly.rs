use serde::{Deserialize, Serialize};

use super::Scalar;

/// Coefficients `c_0..=c_D` of a polynomial truncated at `z^D`; index `j`
/// holds the coefficient of `z^j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TruncatedPoly<T = f64> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedPoly<T> {
    /// Panics if `coeffs` is empty: a truncated polynomial always has degree cap >= 0.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "truncated polynomial needs at least one coefficient"
        );
        TruncatedPoly { coeffs }
    }

    /// The constant polynomial `1` with room for coefficients up to `z^cap`.
    pub fn one(cap: usize) -> Self {
        let mut coeffs = vec![T::zero(); cap + 1];
        coeffs[0] = T::one();
        TruncatedPoly { coeffs }
    }

    pub fn degree_cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn truncated(&self, cap: usize) -> Self {
        assert!(cap <= self.degree_cap());
        TruncatedPoly {
            coeffs: self.coeffs[..=cap].to_vec(),
        }
    }
}

impl<T> std::ops::Index<usize> for TruncatedPoly<T> {
    type Output = T;

    fn index(&self, j: usize) -> &T {
        &self.coeffs[j]
    }
}

/// Writes the coefficients of `(z - zeta) * a` truncated at the length of `a` into `out`.
///
/// `b_0 = -zeta a_0`, `b_j = -zeta a_j + a_{j-1}`.
pub fn multbinom_into<T: Scalar>(a: &[T], zeta: &T, out: &mut [T]) {
    debug_assert_eq!(a.len(), out.len());
    if a.is_empty() {
        return;
    }
    out[0] = -(zeta.clone() * a[0].clone());
    for j in 1..a.len() {
        out[j] = a[j - 1].clone() - zeta.clone() * a[j].clone();
    }
}

pub fn multbinom<T: Scalar>(a: &TruncatedPoly<T>, zeta: T) -> TruncatedPoly<T> {
    let mut out = vec![T::zero(); a.coeffs.len()];
    multbinom_into(&a.coeffs, &zeta, &mut out);
    TruncatedPoly { coeffs: out }
}

/// Inverse of [`multbinom`]: the coefficients of `b / (z - zeta)` by forward
/// substitution, `a_0 = -b_0/zeta`, `a_j = (a_{j-1} - b_j)/zeta`.
///
/// Requires `zeta != 0`. This is the back substitution that makes the
/// modified Lagrange route lose accuracy at high derivative order.
pub fn divbinom<T: Scalar>(b: &TruncatedPoly<T>, zeta: T) -> TruncatedPoly<T> {
    let inv = T::one() / zeta;
    let mut out = Vec::with_capacity(b.coeffs.len());
    let mut prev = -(inv.clone() * b.coeffs[0].clone());
    out.push(prev.clone());
    for bj in &b.coeffs[1..] {
        prev = inv.clone() * (prev - bj.clone());
        out.push(prev.clone());
    }
    TruncatedPoly { coeffs: out }
}

/// `c_m = sum_{s=0}^{m} a_{m-s} b_s` for `m = 0..=cap`.
pub fn convolve_trunc<T: Scalar>(
    a: &TruncatedPoly<T>,
    b: &TruncatedPoly<T>,
    cap: usize,
) -> TruncatedPoly<T> {
    assert!(
        a.degree_cap() >= cap && b.degree_cap() >= cap,
        "convolution cap {cap} exceeds input degree caps"
    );
    let mut out = vec![T::zero(); cap + 1];
    convolve_into(&a.coeffs, &b.coeffs, &mut out);
    TruncatedPoly { coeffs: out }
}

pub(crate) fn convolve_into<T: Scalar>(a: &[T], b: &[T], out: &mut [T]) {
    for (m, slot) in out.iter_mut().enumerate() {
        let mut acc = T::zero();
        for s in 0..=m {
            acc = acc + a[m - s].clone() * b[s].clone();
        }
        *slot = acc;
    }
}

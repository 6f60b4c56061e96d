//! Scalar, grid and polynomial primitives shared by the weight algorithms.

pub(crate) mod lagrange;
mod ordering;
pub(crate) mod poly;
mod roots;
pub(crate) mod symmetric;

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

#[doc(hidden)]
pub use lagrange::lagrange_evaluations;
pub use lagrange::{lagrange_weights, LagrangeWeights};
pub use ordering::{order_bit_reversed, order_leja, Ordering, Permutation};
pub use poly::{convolve_trunc, divbinom, multbinom, multbinom_into, TruncatedPoly};
pub use roots::{coeffs_via_newton_identities, poly_from_roots, Cap};
pub use symmetric::{elementary_symmetric, SymmetricSums};

/// Field element the polynomial kernels run over: `f64`, `Complex64`, or the
/// extended-precision oracle scalar.
pub trait Scalar:
    Clone
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplication by a small nonnegative integer (factorial scaling).
    fn scale_by(&self, n: usize) -> Self;
}

impl Scalar for f64 {
    fn scale_by(&self, n: usize) -> Self {
        self * n as f64
    }
}

impl Scalar for Complex64 {
    fn scale_by(&self, n: usize) -> Self {
        self * n as f64
    }
}

/// Modulus used by the Leja ordering.
pub trait Magnitude {
    fn magnitude(&self) -> f64;
}

impl Magnitude for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Magnitude for Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

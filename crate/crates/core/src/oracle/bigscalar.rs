use std::cmp::Ordering as CmpOrdering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, RoundingMode, Sign};
use num_traits::{One, Zero};

use crate::numkernel::Scalar;

const RM: RoundingMode = RoundingMode::ToEven;

/// Binary precision (bits) that carries at least `digits` decimal digits.
pub fn bits_for_digits(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 8
}

/// Extended-precision real with its working precision recorded alongside.
///
/// Binary operations run at the larger precision of the operands. Constants
/// created through [`Zero`]/[`One`] carry precision 0 and adopt the
/// precision of whatever they are combined with.
#[derive(Clone)]
pub struct BigScalar {
    value: BigFloat,
    bits: usize,
}

impl BigScalar {
    /// Exact image of `x` carried at `digits` decimal digits.
    pub fn from_f64(x: f64, digits: u32) -> Self {
        let bits = bits_for_digits(digits);
        BigScalar {
            value: BigFloat::from_f64(x, bits.max(64)),
            bits,
        }
    }

    fn constant(word: u64) -> Self {
        BigScalar {
            value: BigFloat::from_word(word, 64),
            bits: 0,
        }
    }

    /// Precision in bits; 0 for exact constants.
    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn digits(&self) -> u32 {
        (self.bits.saturating_sub(8) as f64 / std::f64::consts::LOG2_10).floor() as u32
    }

    pub fn abs(&self) -> Self {
        BigScalar {
            value: self.value.abs(),
            bits: self.bits,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self.value.sign(), Some(Sign::Neg)) && !self.value.is_zero()
    }

    /// Nearest-ish `f64` (truncated to the top 64 mantissa bits, then rounded once).
    pub fn to_f64(&self) -> f64 {
        if self.value.is_nan() {
            return f64::NAN;
        }
        if self.value.is_inf() {
            return if self.value.is_inf_neg() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
        let Some((words, _, sign, exponent, _)) = self.value.as_raw_parts() else {
            return f64::NAN;
        };
        let Some(&top) = words.last() else { return 0.0 };
        if top == 0 {
            return 0.0;
        }
        // value = 0.b1b2... * 2^exponent with the top word holding the leading bits
        let mag = scale_pow2(top as f64 / 2f64.powi(64), exponent);
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    pub fn partial_cmp_abs(&self, other: &Self) -> Option<CmpOrdering> {
        self.value.abs_cmp(&other.value).map(|c| c.cmp(&0))
    }

    fn prec(&self, other: &Self) -> usize {
        match self.bits.max(other.bits) {
            0 => 128,
            p => p,
        }
    }

    fn combine(self, other: Self, op: impl Fn(&BigFloat, &BigFloat, usize) -> BigFloat) -> Self {
        let bits = self.bits.max(other.bits);
        let p = self.prec(&other);
        BigScalar {
            value: op(&self.value, &other.value, p),
            bits,
        }
    }
}

fn scale_pow2(mut x: f64, mut e: i32) -> f64 {
    while e > 1000 {
        x *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= 2f64.powi(-1000);
        e += 1000;
    }
    x * 2f64.powi(e)
}

impl fmt::Debug for BigScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for BigScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl PartialEq for BigScalar {
    fn eq(&self, other: &Self) -> bool {
        self.value.cmp(&other.value) == Some(0)
    }
}

impl Add for BigScalar {
    type Output = BigScalar;
    fn add(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b, p| a.add(b, p, RM))
    }
}

impl Sub for BigScalar {
    type Output = BigScalar;
    fn sub(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b, p| a.sub(b, p, RM))
    }
}

impl Mul for BigScalar {
    type Output = BigScalar;
    fn mul(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b, p| a.mul(b, p, RM))
    }
}

impl Div for BigScalar {
    type Output = BigScalar;
    fn div(self, rhs: Self) -> Self {
        self.combine(rhs, |a, b, p| a.div(b, p, RM))
    }
}

impl Neg for BigScalar {
    type Output = BigScalar;
    fn neg(self) -> Self {
        BigScalar {
            value: self.value.neg(),
            bits: self.bits,
        }
    }
}

impl Zero for BigScalar {
    fn zero() -> Self {
        BigScalar::constant(0)
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl One for BigScalar {
    fn one() -> Self {
        BigScalar::constant(1)
    }
}

impl Scalar for BigScalar {
    fn scale_by(&self, n: usize) -> Self {
        self.clone() * BigScalar::constant(n as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_round_trip() {
        for x in [
            1.0,
            -0.75,
            3.0,
            1e-300,
            -2.5e17,
            0.1,
            std::f64::consts::PI,
            0.0,
        ] {
            assert_eq!(BigScalar::from_f64(x, 50).to_f64(), x, "{x}");
        }
    }

    #[test]
    fn arithmetic_beyond_double_precision() {
        let third = BigScalar::one() / BigScalar::from_f64(3.0, 50);
        let back = third.clone() * BigScalar::from_f64(3.0, 50) - BigScalar::one();
        assert!(back.to_f64().abs() < 1e-50);
        // 1 + 2^-80 is representable at 50 digits but not in double precision
        let tiny = BigScalar::from_f64(2f64.powi(-80), 50);
        let sum = BigScalar::one() + tiny.clone() - BigScalar::one();
        assert_eq!(sum, tiny);
        assert_eq!(third.bits(), bits_for_digits(50));
        assert!(third.digits() >= 50);
    }

    #[test]
    fn constants_adopt_precision() {
        let x = BigScalar::from_f64(2.0, 40);
        let y = BigScalar::one().scale_by(6) * x;
        assert_eq!(y.to_f64(), 12.0);
        assert_eq!(y.bits(), bits_for_digits(40));
        assert!(BigScalar::zero().is_zero());
        assert!((-BigScalar::one()).is_negative());
    }
}

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Magnitude, Scalar};
use crate::error::FdError;

/// How points (roots or grid nodes) are ordered before binomials are multiplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ordering {
    #[default]
    Natural,
    BitReversed,
    Leja,
}

impl Ordering {
    pub const ALL: [Ordering; 3] = [Ordering::Natural, Ordering::BitReversed, Ordering::Leja];

    pub fn name(self) -> &'static str {
        match self {
            Ordering::Natural => "natural",
            Ordering::BitReversed => "bit_reversed",
            Ordering::Leja => "leja",
        }
    }

    /// Bit reversal when `n` is a power of two, Leja otherwise.
    pub fn preferred_for(n: usize) -> Ordering {
        if n.is_power_of_two() {
            Ordering::BitReversed
        } else {
            Ordering::Leja
        }
    }

    pub fn permutation<T: Scalar + Magnitude>(self, points: &[T]) -> Permutation {
        match self {
            Ordering::Natural => Permutation {
                indices: (0..points.len()).collect(),
                fell_back_to_leja: false,
            },
            Ordering::BitReversed => match order_bit_reversed(points.len()) {
                Some(indices) => Permutation {
                    indices,
                    fell_back_to_leja: false,
                },
                None => Permutation {
                    indices: order_leja(points),
                    fell_back_to_leja: true,
                },
            },
            Ordering::Leja => Permutation {
                indices: order_leja(points),
                fell_back_to_leja: false,
            },
        }
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Ordering {
    type Err = FdError;

    fn from_str(s: &str) -> Result<Self, FdError> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "natural" => Ok(Ordering::Natural),
            "bit_reversed" | "bitrev" => Ok(Ordering::BitReversed),
            "leja" => Ok(Ordering::Leja),
            other => Err(FdError::arg(format!(
                "unknown ordering '{other}' (expected natural, bit_reversed or leja)"
            ))),
        }
    }
}

/// A reordering: position `i` takes the element originally at `indices[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Permutation {
    pub indices: Vec<usize>,
    /// Set when bit reversal was requested for a length that is not a power of two.
    pub fell_back_to_leja: bool,
}

impl Permutation {
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.indices.len()];
        for (pos, &orig) in self.indices.iter().enumerate() {
            inv[orig] = pos;
        }
        inv
    }

    pub fn apply<T: Clone>(&self, items: &[T]) -> Vec<T> {
        self.indices.iter().map(|&i| items[i].clone()).collect()
    }
}

/// Bit-reversal permutation of `0..n`; `None` unless `n` is a power of two.
pub fn order_bit_reversed(n: usize) -> Option<Vec<usize>> {
    if !n.is_power_of_two() {
        return None;
    }
    let bits = n.trailing_zeros();
    if bits == 0 {
        return Some(vec![0]);
    }
    Some(
        (0..n)
            .map(|i| i.reverse_bits() >> (usize::BITS - bits))
            .collect(),
    )
}

/// Leja ordering: start from the point of largest modulus, then repeatedly
/// take the point maximizing the product of distances to those already
/// chosen. Ties go to the lowest original index.
pub fn order_leja<T: Scalar + Magnitude>(points: &[T]) -> Vec<usize> {
    let n = points.len();
    let mut order = Vec::with_capacity(n);
    let mut remaining: Vec<usize> = (0..n).collect();
    // Log of the distance product, kept per candidate.
    let mut score = vec![0.0f64; n];

    let mut first = match remaining.first() {
        Some(&i) => i,
        None => return order,
    };
    for &i in &remaining {
        if points[i].magnitude() > points[first].magnitude() {
            first = i;
        }
    }
    let mut last = first;
    remaining.retain(|&i| i != first);
    order.push(first);

    while !remaining.is_empty() {
        for &i in &remaining {
            score[i] += (points[i].clone() - points[last].clone()).magnitude().ln();
        }
        let mut best = remaining[0];
        for &i in &remaining[1..] {
            if score[i] > score[best] {
                best = i;
            }
        }
        remaining.retain(|&i| i != best);
        order.push(best);
        last = best;
    }
    order
}

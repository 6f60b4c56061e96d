#![allow(dead_code)]

use fdkit::Grid;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` points uniform in `[lo, hi]`, redrawn until every pair is at least
/// `min_sep` apart.
pub fn random_grid(rng: &mut impl Rng, n: usize, lo: f64, hi: f64, min_sep: f64) -> Grid {
    let mut points: Vec<f64> = Vec::with_capacity(n);
    while points.len() < n {
        let z = rng.gen_range(lo..=hi);
        if points.iter().all(|p| (p - z).abs() >= min_sep) {
            points.push(z);
        }
    }
    Grid::new(points).unwrap()
}

/// Max entrywise difference of two order-`m` weight vectors relative to the
/// largest reference magnitude of that order.
pub fn rel_diff(a: &[f64], b: &[f64]) -> f64 {
    let scale = b.iter().fold(0.0f64, |s, x| s.max(x.abs()));
    let diff = a
        .iter()
        .zip(b)
        .fold(0.0f64, |s, (x, y)| s.max((x - y).abs()));
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// `p! / (p - m)!`, zero when `m > p`.
pub fn falling(p: usize, m: usize) -> f64 {
    if m > p {
        0.0
    } else {
        ((p - m + 1)..=p).map(|i| i as f64).product()
    }
}

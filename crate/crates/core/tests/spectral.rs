mod common;

use fdkit::numkernel::{lagrange_evaluations, Ordering};
use fdkit::spectral::{
    chebyshev_diff_matrix, chebyshev_grid, diff_matrix, diff_matrix_with, BuildOptions,
};
use fdkit::{AlgorithmRegistry, DiffMatrix, Grid};
use proptest::prelude::*;

fn max_rel(a: &DiffMatrix, b: &DiffMatrix) -> f64 {
    let mut worst = 0.0f64;
    for (ra, rb) in a.entries().iter().zip(b.entries()) {
        let scale = rb.iter().fold(0.0f64, |s, x| s.max(x.abs()));
        for (x, y) in ra.iter().zip(rb) {
            // Entries that vanish by symmetry are judged against the row.
            let r = if y.abs() > 1e-12 * scale {
                ((x - y) / y).abs()
            } else {
                (x - y).abs() / scale
            };
            worst = worst.max(r);
        }
    }
    worst
}

#[test]
fn chebyshev_partial_matches_fornberg() {
    let reg = AlgorithmRegistry::with_builtins();
    for n in [4, 8, 12, 16, 32, 64] {
        for order in [1, 2, 4, 8] {
            if order >= n {
                continue;
            }
            let a = chebyshev_diff_matrix(n, order, reg.get("partial").unwrap()).unwrap();
            let b = chebyshev_diff_matrix(n, order, reg.get("fornberg").unwrap()).unwrap();
            let r = max_rel(&a, &b);
            assert!(r <= 1e-9, "N={n} M={order}: {r:e}");
        }
    }
}

#[test]
fn chebyshev_first_derivative_closed_form() {
    // Off-diagonal entries of the classical Chebyshev matrix:
    // D_ij = (c_i / c_j) (-1)^(i+j) / (x_i - x_j).
    let n = 17;
    let g = chebyshev_grid(n, Ordering::Natural).unwrap();
    let d = chebyshev_diff_matrix(
        n,
        1,
        AlgorithmRegistry::with_builtins()
            .default_algorithm()
            .unwrap(),
    )
    .unwrap();
    let x = g.points();
    let c = |i: usize| if i == 0 || i == n - 1 { 2.0 } else { 1.0 };
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            let exact = c(i) / c(j) * sign / (x[i] - x[j]);
            assert!(((d.get(i, j) - exact) / exact).abs() < 1e-12, "({i},{j})");
        }
    }
    let corner = (2.0 * (n as f64 - 1.0).powi(2) + 1.0) / 6.0;
    assert!((d.get(0, 0) - corner).abs() < 1e-11 * corner);
}

#[test]
fn partial_evaluates_lagrange_weights_once_per_matrix() {
    let reg = AlgorithmRegistry::with_builtins();
    let partial = reg.get("partial").unwrap();
    let grid = chebyshev_grid(24, Ordering::Natural).unwrap();
    let before = lagrange_evaluations();
    diff_matrix(&grid, 3, partial).unwrap();
    assert_eq!(lagrange_evaluations(), before + 1);
    let before = lagrange_evaluations();
    diff_matrix_with(&grid, 3, partial, BuildOptions::chebyshev(24)).unwrap();
    assert_eq!(lagrange_evaluations(), before + 1);
}

#[test]
fn reordering_and_dilation_do_not_change_the_matrix() {
    let reg = AlgorithmRegistry::with_builtins();
    let alg = reg.default_algorithm().unwrap();
    let grid = Grid::new(vec![-1.0, -0.6, -0.1, 0.3, 0.45, 0.9, 1.0]).unwrap();
    let plain = diff_matrix(&grid, 2, alg).unwrap();
    for ordering in Ordering::ALL {
        for dilation in [1.0, 2.0, 0.5] {
            let opts = BuildOptions { ordering, dilation };
            let d = diff_matrix_with(&grid, 2, alg, opts).unwrap();
            assert!(max_rel(&d, &plain) <= 1e-12, "{ordering} x{dilation}");
        }
    }
}

#[test]
fn csv_and_json_round_trip_bit_exactly() {
    let d = chebyshev_diff_matrix(
        9,
        2,
        AlgorithmRegistry::with_builtins()
            .default_algorithm()
            .unwrap(),
    )
    .unwrap();
    let back = DiffMatrix::from_json(&d.to_json()).unwrap();
    assert_eq!(back, d);
    let rows = fdkit::spectral::parse_csv_rows(&d.to_csv()).unwrap();
    for (r, e) in rows.iter().zip(d.entries()) {
        for (x, y) in r.iter().zip(e) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rows_annihilate_constants(seed in any::<u64>(), n in 2usize..=12) {
        let mut rng = common::rng(seed);
        let grid = common::random_grid(&mut rng, n, -1.0, 1.0, 0.5 / n as f64);
        let order = 1 + (seed as usize) % (n - 1).min(4);
        let d = diff_matrix(&grid, order, AlgorithmRegistry::with_builtins().default_algorithm().unwrap()).unwrap();
        for row in d.entries() {
            let sum: f64 = row.iter().sum();
            let magnitude: f64 = row.iter().map(|x| x.abs()).sum();
            prop_assert!(sum.abs() <= 64.0 * f64::EPSILON * magnitude);
        }
    }
}

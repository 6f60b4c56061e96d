//! Digits lost by each weight algorithm on Chebyshev differentiation
//! matrices, measured against a 50-digit reference.
//!
//! `cargo run --release --example chebyshev_accuracy [N ...]`

use fdkit::numkernel::Ordering;
use fdkit::oracle::{exact_diff_matrix, matrix_digits_lost, DEFAULT_DIGITS};
use fdkit::spectral::{chebyshev_diff_matrix, chebyshev_grid};
use fdkit::AlgorithmRegistry;

fn main() -> fdkit::Result<()> {
    let sizes: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let sizes = if sizes.is_empty() {
        vec![16, 32, 64]
    } else {
        sizes
    };
    let registry = AlgorithmRegistry::with_builtins();

    print!("{:>5} {:>3}", "N", "M");
    for name in registry.names() {
        print!(" {name:>10}");
    }
    println!();
    for n in sizes {
        let grid = chebyshev_grid(n, Ordering::Natural)?;
        for order in [2, 4, 8, 16].into_iter().filter(|&m| m < n) {
            let reference = exact_diff_matrix(&grid, order, DEFAULT_DIGITS)?;
            print!("{n:>5} {order:>3}");
            for alg in registry.iter() {
                let d = chebyshev_diff_matrix(n, order, alg)?;
                print!(
                    " {:>10.1}",
                    matrix_digits_lost(&d, &reference)?.max_digits_lost
                );
            }
            println!();
        }
    }
    Ok(())
}

use super::{multbinom_into, Magnitude, Ordering, Scalar, TruncatedPoly};
use crate::error::{FdError, Result};

/// Highest coefficient to keep when expanding a product of binomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cap {
    Full,
    Degree(usize),
}

impl Cap {
    fn resolve(self, n: usize) -> Result<usize> {
        match self {
            Cap::Full => Ok(n),
            Cap::Degree(d) if d <= n => Ok(d),
            Cap::Degree(d) => Err(FdError::arg(format!(
                "cap {d} exceeds the number of roots {n}"
            ))),
        }
    }
}

/// Coefficients of `prod (z - alpha_k)` by repeated binomial multiplication
/// after reordering the roots.
pub fn poly_from_roots<T: Scalar + Magnitude>(
    roots: &[T],
    ordering: Ordering,
    cap: Cap,
) -> Result<TruncatedPoly<T>> {
    let cap = cap.resolve(roots.len())?;
    let perm = ordering.permutation(roots);
    let mut acc = TruncatedPoly::<T>::one(cap).into_coeffs();
    let mut next = acc.clone();
    for &i in &perm.indices {
        multbinom_into(&acc, &roots[i], &mut next);
        std::mem::swap(&mut acc, &mut next);
    }
    Ok(TruncatedPoly::new(acc))
}

/// Low-order coefficients of `prod (z - alpha_k)` from inverse power sums.
///
/// Power sums `P_r = sum alpha_k^{-r}` are accumulated with compensated
/// summation, the elementary symmetric functions `E_r` of the reciprocals
/// follow from the Newton identities, and `c_r = (-1)^{N+r} E_r prod alpha_k`.
pub fn coeffs_via_newton_identities<T: Scalar>(
    roots: &[T],
    cap: usize,
) -> Result<TruncatedPoly<T>> {
    let n = roots.len();
    if cap > n {
        return Err(FdError::arg(format!(
            "cap {cap} exceeds the number of roots {n}"
        )));
    }
    if let Some(index) = roots.iter().position(|a| a.is_zero()) {
        return Err(FdError::ZeroRoot { index });
    }

    let inverses: Vec<T> = roots.iter().map(|a| T::one() / a.clone()).collect();
    let mut powers = inverses.clone();
    let mut power_sums = Vec::with_capacity(cap);
    for r in 1..=cap {
        if r > 1 {
            for (p, inv) in powers.iter_mut().zip(&inverses) {
                *p = p.clone() * inv.clone();
            }
        }
        power_sums.push(kahan_sum(&powers));
    }

    // r E_r = E_{r-1} P_1 - E_{r-2} P_2 + ... +- E_0 P_r
    let mut elementary: Vec<T> = Vec::with_capacity(cap + 1);
    elementary.push(T::one());
    for r in 1..=cap {
        let mut acc = T::zero();
        for i in 1..=r {
            let term = elementary[r - i].clone() * power_sums[i - 1].clone();
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        elementary.push(acc / T::one().scale_by(r));
    }

    let product = roots.iter().fold(T::one(), |acc, a| acc * a.clone());
    let coeffs = elementary
        .into_iter()
        .enumerate()
        .map(|(r, e)| {
            let c = e * product.clone();
            if (n + r).is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .collect();
    Ok(TruncatedPoly::new(coeffs))
}

fn kahan_sum<T: Scalar>(terms: &[T]) -> T {
    let mut sum = T::zero();
    let mut comp = T::zero();
    for t in terms {
        let y = t.clone() - comp.clone();
        let s = sum.clone() + y.clone();
        comp = (s.clone() - sum) - y;
        sum = s;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    /// Exact expansion of prod (z - r_k) over the integers, all N+1 coefficients.
    fn expand_exact(roots: &[i64]) -> Vec<i128> {
        let mut c = vec![1i128];
        for &r in roots {
            let mut next = vec![0i128; c.len() + 1];
            for (j, &cj) in c.iter().enumerate() {
                next[j] -= cj * r as i128;
                next[j + 1] += cj;
            }
            c = next;
        }
        c
    }

    fn roots_of_unity(n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64))
            .collect()
    }

    fn error_vs_z_n_minus_1(c: &[Complex64]) -> f64 {
        let n = c.len() - 1;
        c.iter()
            .enumerate()
            .map(|(j, cj)| {
                let exact = if j == 0 {
                    -1.0
                } else if j == n {
                    1.0
                } else {
                    0.0
                };
                (cj - exact).norm()
            })
            .fold(0.0, f64::max)
    }

    #[test]
    fn small_products() {
        let c = poly_from_roots(&[1.0, 2.0, 3.0], Ordering::Natural, Cap::Full).unwrap();
        assert_eq!(c.coeffs(), &[-6.0, 11.0, -6.0, 1.0]);
        let c = poly_from_roots::<f64>(&[], Ordering::Leja, Cap::Full).unwrap();
        assert_eq!(c.coeffs(), &[1.0]);
        assert!(poly_from_roots(&[1.0], Ordering::Natural, Cap::Degree(2)).is_err());
        let c = poly_from_roots(&[1.0, 2.0, 3.0], Ordering::Leja, Cap::Degree(1)).unwrap();
        assert_eq!(c.coeffs(), &[-6.0, 11.0]);
    }

    #[test]
    fn newton_identity_sign_matches_direct_expansion() {
        // {1,2}: (z-1)(z-2) = 2 - 3z + z^2; {1,2,3}: -6 + 11z - 6z^2 + z^3
        assert_eq!(expand_exact(&[1, 2]), vec![2, -3, 1]);
        assert_eq!(expand_exact(&[1, 2, 3]), vec![-6, 11, -6, 1]);
        let c = coeffs_via_newton_identities(&[1.0, 2.0], 2).unwrap();
        assert_eq!(c.coeffs(), &[2.0, -3.0, 1.0]);
        let c = coeffs_via_newton_identities(&[1.0, 2.0, 3.0], 3).unwrap();
        for (x, y) in c.coeffs().iter().zip([-6.0, 11.0, -6.0, 1.0]) {
            assert!((x - y).abs() < 1e-13, "{x} vs {y}");
        }
        let c = coeffs_via_newton_identities(&[3.0], 1).unwrap();
        assert_eq!(c.coeffs(), &[-3.0, 1.0]);
    }

    #[test]
    fn newton_identities_reject_zero_root() {
        assert_eq!(
            coeffs_via_newton_identities(&[1.0, 0.0], 1).unwrap_err(),
            FdError::ZeroRoot { index: 1 }
        );
    }

    #[test]
    fn roots_of_unity_ordering_matters() {
        let roots = roots_of_unity(128);
        let natural = poly_from_roots(&roots, Ordering::Natural, Cap::Full).unwrap();
        let bitrev = poly_from_roots(&roots, Ordering::BitReversed, Cap::Full).unwrap();
        let leja = poly_from_roots(&roots, Ordering::Leja, Cap::Full).unwrap();
        let newton = coeffs_via_newton_identities(&roots, 128).unwrap();
        assert!(error_vs_z_n_minus_1(natural.coeffs()) > 1e6);
        assert!(error_vs_z_n_minus_1(bitrev.coeffs()) <= 1e-8);
        assert!(error_vs_z_n_minus_1(leja.coeffs()) <= 1e-8);
        assert!(error_vs_z_n_minus_1(newton.coeffs()) <= 1e-10);
    }

    proptest! {
        #[test]
        fn integer_roots_expand_exactly(roots in prop::collection::vec(-6i64..=6, 0..=8)) {
            let exact = expand_exact(&roots);
            let as_f64: Vec<f64> = roots.iter().map(|&r| r as f64).collect();
            for ordering in Ordering::ALL {
                let c = poly_from_roots(&as_f64, ordering, Cap::Full).unwrap();
                let expect: Vec<f64> = exact.iter().map(|&x| x as f64).collect();
                prop_assert_eq!(c.coeffs(), &expect[..]);
            }
        }
    }
}

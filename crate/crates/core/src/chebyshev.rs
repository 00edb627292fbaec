//! The rescaled Chebyshev polynomials J_k(x) = U_k(x/2).
//!
//! Seeds J_{-1} = 0, J_0 = 1 and the recurrence J_{k+1} = x*J_k - J_{k-1}.
//! Every closed-form family polynomial in this crate is generated from these,
//! so this is the single trusted base. At x = 2 they satisfy J_k(2) = k + 1
//! and J_k'(2) = k(k+1)(k+2)/6.

use std::sync::Mutex;

use num_bigint::BigInt;

use crate::poly::IntPolynomial;

static CACHE: Mutex<Vec<IntPolynomial>> = Mutex::new(Vec::new());

/// J_k for k >= -1. Values are memoized; the cache is shared across threads
/// with construct-on-miss semantics.
pub fn chebyshev_j(k: i64) -> IntPolynomial {
    assert!(k >= -1, "chebyshev_j is defined for k >= -1, got {k}");
    if k == -1 {
        return IntPolynomial::zero();
    }
    let k = k as usize;
    let mut cache = CACHE.lock().expect("chebyshev cache poisoned");
    if cache.is_empty() {
        cache.push(IntPolynomial::one());
        cache.push(IntPolynomial::x());
    }
    let x = IntPolynomial::x();
    while cache.len() <= k {
        let next = &(&x * &cache[cache.len() - 1]) - &cache[cache.len() - 2];
        cache.push(next);
    }
    cache[k].clone()
}

/// J_k(2) = k + 1.
pub fn j_value_at_two(k: i64) -> BigInt {
    assert!(k >= -1);
    BigInt::from(k + 1)
}

/// J_k'(2) = k(k+1)(k+2)/6.
pub fn j_derivative_at_two(k: i64) -> BigInt {
    assert!(k >= -1);
    let k = BigInt::from(k);
    (&k * (&k + 1) * (&k + 2)) / 6
}

/// Checks the explicit power form: [[x, -1], [1, 0]]^(k+1) must equal
/// [[J_{k+1}, -J_k], [J_k, -J_{k-1}]] entrywise.
pub fn matrix_power_identity_holds(k: i64) -> bool {
    assert!(k >= 0);
    let base = [
        [IntPolynomial::x(), IntPolynomial::constant(-1)],
        [IntPolynomial::one(), IntPolynomial::zero()],
    ];
    let mut acc = base.clone();
    for _ in 0..k {
        acc = mat2_mul(&acc, &base);
    }
    acc[0][0] == chebyshev_j(k + 1)
        && acc[0][1] == -&chebyshev_j(k)
        && acc[1][0] == chebyshev_j(k)
        && acc[1][1] == -&chebyshev_j(k - 1)
}

fn mat2_mul(a: &[[IntPolynomial; 2]; 2], b: &[[IntPolynomial; 2]; 2]) -> [[IntPolynomial; 2]; 2] {
    let entry = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_and_small_values() {
        assert!(chebyshev_j(-1).is_zero());
        assert_eq!(chebyshev_j(0), IntPolynomial::one());
        assert_eq!(chebyshev_j(1), IntPolynomial::x());
        assert_eq!(chebyshev_j(2), IntPolynomial::from_coeffs([-1, 0, 1]));
        assert_eq!(chebyshev_j(4), IntPolynomial::from_coeffs([1, 0, -3, 0, 1]));
    }

    #[test]
    fn recurrence_holds_up_to_50() {
        let x = IntPolynomial::x();
        for k in 0..=50 {
            let lhs = chebyshev_j(k + 1);
            let rhs = &(&x * &chebyshev_j(k)) - &chebyshev_j(k - 1);
            assert_eq!(lhs, rhs, "recurrence failed at k={k}");
        }
    }

    #[test]
    fn values_at_two() {
        for k in 0..=50 {
            let (v, d) = chebyshev_j(k).eval_and_derivative_at(2);
            assert_eq!(v, j_value_at_two(k), "J_{k}(2)");
            assert_eq!(d, j_derivative_at_two(k), "J_{k}'(2)");
        }
        // spot value from the derivative formula: 3*4*5/6 = 10
        assert_eq!(j_derivative_at_two(3), 10.into());
    }

    #[test]
    fn matrix_power_identity() {
        for k in 0..=20 {
            assert!(matrix_power_identity_holds(k), "matrix identity failed at k={k}");
        }
    }

    #[test]
    fn concurrent_cache_access() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || chebyshev_j(30 + i % 3)))
            .collect();
        for h in handles {
            let p = h.join().unwrap();
            assert!(p.degree() >= 30);
        }
    }
}

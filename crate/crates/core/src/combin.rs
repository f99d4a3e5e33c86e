//! Exact combinatorial numbers: Stirling numbers of the second kind,
//! Eulerian numbers and polynomials, rising factorials.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::IntPolynomial;

/// Row `n` of the Stirling triangle: `S(n, k)` for `k = 0..=n`.
pub fn stirling2_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for i in 1..=n {
        let mut next = vec![BigUint::zero(); i + 1];
        for k in 1..=i {
            let keep = row.get(k).map_or_else(BigUint::zero, |s| s * BigUint::from(k));
            next[k] = keep + &row[k - 1];
        }
        row = next;
    }
    row
}

/// Stirling number of the second kind `S(n, k)`, zero for `k > n`.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    stirling2_row(n).swap_remove(k)
}

/// Eulerian number `A(n, m)`, the number of permutations of `n` objects
/// with `m - 1` rises, by the alternating sum
/// `sum_{l=0}^{m} (-1)^l C(n+1, l) (m-l)^n`.
pub fn eulerian_number(n: usize, m: usize) -> Result<BigUint> {
    if n == 0 || m == 0 || m > n {
        return Err(Error::OutOfRange {
            what: "Eulerian number index",
            detail: format!("A({n}, {m}) needs 1 <= m <= n"),
        });
    }
    let mut sum = BigInt::zero();
    let mut binom = BigInt::one();
    for l in 0..=m {
        let term = &binom * num_traits::pow(BigInt::from(m - l), n);
        if l % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        binom = binom * BigInt::from(n + 1 - l) / BigInt::from(l + 1);
    }
    Ok(sum.to_biguint().expect("Eulerian numbers are nonnegative"))
}

/// `A_n(t) = sum_{j=0}^{n-1} A(n, j+1) t^j`, so that
/// `Li_{-n}(t) = t A_n(t) / (1 - t)^{n+1}`.
pub fn eulerian_polynomial(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "Eulerian polynomial degree",
            detail: "n must be at least 1".into(),
        });
    }
    (1..=n)
        .map(|m| eulerian_number(n, m).map(BigInt::from))
        .collect::<Result<Vec<_>>>()
        .map(IntPolynomial::new)
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: &BigRational, k: usize) -> BigRational {
    let one = BigRational::one();
    let mut term = a.clone();
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= &term;
        term += &one;
    }
    acc
}

/// `(a)_k` for a natural number `a`.
pub fn rising_factorial(a: u64, k: usize) -> BigUint {
    (0..k as u64).fold(BigUint::one(), |acc, i| acc * BigUint::from(a + i))
}

pub fn factorial(n: u64) -> BigUint {
    rising_factorial(1, n as usize)
}

//! Three independent constructions of `A_{n,m}`: the derivative recurrence,
//! the Stirling closed form, and the Taylor series of `d^m/dt^m Li_{-n}`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::AnmIndex;
use crate::combin::{eulerian_polynomial, factorial, rising_factorial, stirling2_row};
use crate::error::{Error, Result};
use crate::exactalg::IntPolynomial;

/// One step `A_{n,m+1} = (n+m+1) A_{n,m} + (1-t) A_{n,m}'`.
pub fn recurrence_step(a: &IntPolynomial, idx: AnmIndex) -> IntPolynomial {
    let factor = BigInt::from(idx.n + idx.m + 1);
    &a.scale(&factor) + &(&IntPolynomial::one_minus_t() * &a.derivative())
}

/// `A_{n,m}` from `A_{n,1} = A_{n+1}` (the Eulerian polynomial) and the
/// derivative recurrence.
pub fn anm_recurrence(idx: AnmIndex) -> IntPolynomial {
    anm_row(idx.n, idx.m).pop().expect("row has m >= 1 entries")
}

/// `[A_{n,1}, ..., A_{n,m_max}]`.
pub fn anm_row(n: u32, m_max: u32) -> Vec<IntPolynomial> {
    let mut row = Vec::with_capacity(m_max as usize);
    let mut current = eulerian_polynomial(n as usize + 1).expect("n + 1 >= 1");
    for m in 1..=m_max {
        if m > 1 {
            current = recurrence_step(&current, AnmIndex::unchecked(n, m - 1));
        }
        row.push(current.clone());
    }
    row
}

/// `A_{n,m} = m! sum_{j=0}^{n} (-1)^{n+j} (m+1)_j S(n+1, j+1) (1-t)^{n-j}`.
pub fn anm_closed(idx: AnmIndex) -> IntPolynomial {
    let (n, m) = (idx.n as usize, idx.m as usize);
    let stirling = stirling2_row(n + 1);
    let one_minus_t = IntPolynomial::one_minus_t();
    let mut sum = IntPolynomial::zero();
    for j in 0..=n {
        let mut c = BigInt::from(rising_factorial(m as u64 + 1, j) * &stirling[j + 1]);
        if (n + j) % 2 == 1 {
            c = -c;
        }
        let term = one_minus_t.pow((n - j) as u32).scale(&c);
        sum = &sum + &term;
    }
    sum.scale(&BigInt::from(factorial(m as u64)))
}

/// First `num_terms` Taylor coefficients of `d^m/dt^m Li_{-n}(t)`, i.e.
/// `(k+1)_m (k+m)^n` for `k = 0, 1, ...`.
pub fn anm_series_oracle(idx: AnmIndex, num_terms: usize) -> Result<Vec<BigUint>> {
    if num_terms < idx.n as usize + 1 {
        return Err(Error::OutOfRange {
            what: "series length",
            detail: format!("{num_terms} terms requested, need at least n + 1 = {}", idx.n + 1),
        });
    }
    Ok((0..num_terms as u64)
        .map(|k| {
            rising_factorial(k + 1, idx.m as usize)
                * num_traits::pow(BigUint::from(k + idx.m as u64), idx.n as usize)
        })
        .collect())
}

/// First `num_terms` Taylor coefficients of `p(t) / (1 - t)^power`:
/// `c_k = sum_i p_i C(k - i + power - 1, power - 1)`.
pub fn quotient_taylor(p: &IntPolynomial, power: u32, num_terms: usize) -> Vec<BigInt> {
    // binom[j] = C(j + power - 1, power - 1), the coefficients of (1-t)^-power
    let mut binom = Vec::with_capacity(num_terms);
    let mut b = BigInt::one();
    for j in 0..num_terms {
        binom.push(b.clone());
        if power == 0 {
            b = BigInt::zero();
        } else {
            b = b * BigInt::from(j as u64 + power as u64) / BigInt::from(j as u64 + 1);
        }
    }
    (0..num_terms)
        .map(|k| {
            p.coeffs()
                .iter()
                .take(k + 1)
                .enumerate()
                .map(|(i, c)| c * &binom[k - i])
                .sum()
        })
        .collect()
}

/// `A_{n+1,m} = t A_{n,m+1} + m (1-t) A_{n,m}` for the given polynomials.
pub fn cross_recurrence_holds(
    idx: AnmIndex,
    a_nm: &IntPolynomial,
    a_n_next_m: &IntPolynomial,
    a_next_n: &IntPolynomial,
) -> bool {
    let t = IntPolynomial::monomial(1, 1);
    let rhs = &(&t * a_n_next_m)
        + &(&IntPolynomial::one_minus_t() * a_nm).scale(&BigInt::from(idx.m));
    &rhs == a_next_n
}

/// Checks `A_{n+1,m} = t A_{n,m+1} + m (1-t) A_{n,m}` with exact polynomials.
pub fn cross_recurrence_check(n: u32, m: u32) -> Result<bool> {
    let idx = AnmIndex::new(n, m)?;
    Ok(cross_recurrence_holds(
        idx,
        &anm_recurrence(idx),
        &anm_recurrence(idx.next_m()),
        &anm_recurrence(idx.next_n()),
    ))
}

/// Where the structural checks get their `A_{n,m}` from. The checks compare
/// the source against independent constructions, so a faulty source shows up
/// as violations.
pub trait AnmSource: Sync {
    fn anm(&self, idx: AnmIndex) -> IntPolynomial;
}

/// The recurrence construction.
#[derive(Clone, Copy, Debug, Default)]
pub struct Exact;

impl AnmSource for Exact {
    fn anm(&self, idx: AnmIndex) -> IntPolynomial {
        anm_recurrence(idx)
    }
}

/// The recurrence construction with one coefficient of one polynomial shifted
/// by `delta`. Used as a negative control for the verification suites.
#[derive(Clone, Debug)]
pub struct Perturbed {
    pub target: AnmIndex,
    pub coeff: usize,
    pub delta: BigInt,
}

impl AnmSource for Perturbed {
    fn anm(&self, idx: AnmIndex) -> IntPolynomial {
        let exact = anm_recurrence(idx);
        if idx != self.target {
            return exact;
        }
        let mut coeffs = exact.into_coeffs();
        if coeffs.len() <= self.coeff {
            coeffs.resize(self.coeff + 1, BigInt::zero());
        }
        coeffs[self.coeff] += &self.delta;
        IntPolynomial::new(coeffs)
    }
}

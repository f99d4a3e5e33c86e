//! Sturm sequences over the integers.
//!
//! Each remainder is a positive multiple of the classical negated Euclidean
//! remainder, reduced to its primitive part. Positive rescaling keeps every
//! sign the classical chain would produce, so variation counts are unchanged.

use num_bigint::Sign;
use num_rational::BigRational;

use super::interval::RationalInterval;
use super::poly::IntPolynomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<IntPolynomial>,
}

impl SturmChain {
    /// Builds the chain of a nonzero square-free polynomial.
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = vec![p.clone()];
        let mut current = p.derivative().primitive_part();
        while !current.is_zero() {
            let prev = polys.last().unwrap();
            let next = -prev.positive_pseudo_rem(&current).primitive_part();
            polys.push(current);
            current = next;
        }
        let last = polys.last().unwrap();
        if !last.is_constant() {
            return Err(Error::NotSquareFree(last.degree().unwrap_or(0)));
        }
        Ok(Self { polys })
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }

    pub fn input(&self) -> &IntPolynomial {
        &self.polys[0]
    }

    /// Sign variations of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &BigRational) -> usize {
        count_variations(self.polys.iter().map(|p| p.sign_at(x)))
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    ///
    /// Fails with [`Error::EndpointRoot`] if either endpoint is a root, and
    /// returns zero for a degenerate interval.
    pub fn count(&self, interval: &RationalInterval) -> Result<usize> {
        let p = self.input();
        for x in [interval.lo(), interval.hi()] {
            if p.sign_at(x) == Sign::NoSign {
                return Err(Error::EndpointRoot(x.to_string()));
            }
        }
        if interval.is_point() {
            return Ok(0);
        }
        let at_lo = self.variations(interval.lo());
        let at_hi = self.variations(interval.hi());
        debug_assert!(at_lo >= at_hi);
        Ok(at_lo - at_hi)
    }

    /// Number of distinct real roots in the half-open interval `(lo, hi]`.
    /// Unlike [`SturmChain::count`], endpoints may be roots: at a root `a`
    /// the dropped leading entry takes the sign of the derivative just to the
    /// right of `a`, so `V(a) = V(a+)`.
    pub fn count_half_open(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations(lo) - self.variations(hi)
    }
}

fn count_variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::NoSign;
    let mut changes = 0;
    for s in signs.filter(|s| *s != Sign::NoSign) {
        if last != Sign::NoSign && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Distinct real roots of `p` in the open interval. `p` must be square-free
/// and nonzero at both endpoints.
pub fn sturm_count(p: &IntPolynomial, interval: &RationalInterval) -> Result<usize> {
    SturmChain::new(p)?.count(interval)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn iv(lo: i64, hi: i64) -> RationalInterval {
        RationalInterval::from_ints(lo, hi).unwrap()
    }

    #[test]
    fn chain_shape() {
        let chain = SturmChain::new(&p(&[1, 4, 1])).unwrap();
        assert_eq!(chain.polys()[0], p(&[1, 4, 1]));
        assert_eq!(chain.polys()[1], p(&[2, 1]));
        assert!(chain.polys().last().unwrap().is_constant());
    }

    #[test]
    fn counts_quadratic_roots() {
        // roots -2 +- sqrt(3): one in (-1, 0), both in (-10, 10)
        assert_eq!(sturm_count(&p(&[1, 4, 1]), &iv(-1, 0)).unwrap(), 1);
        assert_eq!(sturm_count(&p(&[1, 4, 1]), &iv(-10, 10)).unwrap(), 2);
        assert_eq!(sturm_count(&p(&[1, 4, 1]), &iv(0, 10)).unwrap(), 0);
    }

    #[test]
    fn open_interval_excludes_endpoint_root() {
        assert_eq!(sturm_count(&p(&[1, 1]), &iv(-1, 0)), Err(Error::EndpointRoot("-1".into())));
        assert_eq!(sturm_count(&p(&[1, 1]), &iv(-3, -2)).unwrap(), 0);
    }

    #[test]
    fn rejects_repeated_roots() {
        assert_eq!(
            sturm_count(&p(&[1, 2, 1]), &iv(-5, 5)),
            Err(Error::NotSquareFree(1))
        );
        assert_eq!(sturm_count(&IntPolynomial::zero(), &iv(0, 1)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn half_open_counts_root_endpoints() {
        let q = |n: i64| BigRational::from_integer(n.into());
        // roots -1, 0, 1
        let chain = SturmChain::new(&p(&[0, -1, 0, 1])).unwrap();
        assert_eq!(chain.count_half_open(&q(-1), &q(1)), 2);
        assert_eq!(chain.count_half_open(&q(-2), &q(-1)), 1);
        assert_eq!(chain.count_half_open(&q(-1), &q(0)), 1);
        assert_eq!(chain.count_half_open(&q(0), &q(0)), 0);
    }

    #[test]
    fn constant_has_no_roots() {
        assert_eq!(sturm_count(&p(&[5]), &iv(-5, 5)).unwrap(), 0);
    }

    #[test]
    fn negative_leading_coefficient() {
        // -(t - 1)(t - 2)(t + 3)
        let q = -(&(&p(&[-1, 1]) * &p(&[-2, 1])) * &p(&[3, 1]));
        assert_eq!(sturm_count(&q, &iv(-4, 4)).unwrap(), 3);
        assert_eq!(sturm_count(&q, &iv(0, 4)).unwrap(), 2);
    }
}

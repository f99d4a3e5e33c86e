//! Real-root isolation on a bounded interval by Descartes' rule of signs
//! with bisection (Vincent-Collins-Akritas).
//!
//! For `(a, b)` the roots of `p` correspond to the positive roots of
//! `(1+x)^d p((a + b x)/(1 + x))`. Zero sign variations there means no root
//! in `(a, b)` and one variation means exactly one simple root, regardless
//! of whether `p` is square-free; anything else is bisected. Only Taylor
//! shifts and rescalings are needed, which is much cheaper than a Sturm
//! chain for high degrees with large coefficients.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::interval::RationalInterval;
use super::poly::IntPolynomial;
use crate::error::{Error, Result};

/// Bisection depth after which isolation gives up. A repeated root inside
/// the interval always hits it; so can a cluster of very close simple roots,
/// and callers then fall back to Sturm chains.
pub const MAX_DEPTH: usize = 256;

/// `sum c_i D^(d-i) (a + w y)^i` for `lo = a/D`, `hi = b/D`, `w = b - a`,
/// i.e. `D^d p(lo + (hi - lo) y)`.
fn to_unit_interval(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Vec<BigInt> {
    let den = lo.denom() * hi.denom();
    let a = lo.numer() * hi.denom();
    let w = hi.numer() * lo.denom() - &a;
    let inner = IntPolynomial::new(vec![a, w]);
    let coeffs = p.coeffs();
    let d = coeffs.len() - 1;
    let mut den_pow = BigInt::one();
    let mut acc = IntPolynomial::zero();
    for (k, c) in coeffs.iter().rev().enumerate() {
        acc = &(&acc * &inner) + &IntPolynomial::constant(c * &den_pow);
        if k < d {
            den_pow *= &den;
        }
    }
    acc.into_coeffs()
}

/// In-place `q(y) -> q(y + 1)`.
fn taylor_shift_one(c: &mut [BigInt]) {
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let next = c[j + 1].clone();
            c[j] += next;
        }
    }
}

fn sign_variations(c: &[BigInt]) -> usize {
    let mut last = Sign::NoSign;
    let mut count = 0;
    for s in c.iter().map(BigInt::sign).filter(|s| *s != Sign::NoSign) {
        if last != Sign::NoSign && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Sign variations bounding the roots of `q` in `(0, 1)`.
fn unit_variations(q: &[BigInt]) -> usize {
    let mut r: Vec<BigInt> = q.iter().rev().cloned().collect();
    taylor_shift_one(&mut r);
    sign_variations(&r)
}

/// `2^d q(y/2)`, the left half of `(0, 1)` rescaled to `(0, 1)`.
fn left_half(q: &[BigInt]) -> Vec<BigInt> {
    let d = q.len() - 1;
    q.iter().enumerate().map(|(i, c)| c << (d - i)).collect()
}

/// Shrinks `(lo, hi)`, known to hold exactly one simple root, until both
/// endpoints are non-roots of opposite sign. May return the root exactly.
fn with_sign_change(p: &IntPolynomial, lo: BigRational, hi: BigRational) -> Result<RationalInterval> {
    let (mut lo, mut hi) = (lo, hi);
    loop {
        let (sl, sh) = (p.sign_at(&lo), p.sign_at(&hi));
        if sl != Sign::NoSign && sh != Sign::NoSign {
            debug_assert_ne!(sl, sh);
            return RationalInterval::new(lo, hi);
        }
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        let sm = p.sign_at(&mid);
        if sm == Sign::NoSign {
            return Ok(RationalInterval::point(mid));
        }
        // compare against whichever endpoint has a sign
        let go_left = if sl == Sign::NoSign && sh == Sign::NoSign {
            unit_variations(&to_unit_interval(p, &lo, &mid)) == 1
        } else if sh != Sign::NoSign {
            sh == sm
        } else {
            sl != sm
        };
        if go_left {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Roots of `p` in the open interval `(lo, hi)`, ascending. Non-point
/// intervals isolate one simple root and have endpoints of opposite sign;
/// point intervals are exact rational roots.
///
/// Fails with [`Error::DepthExceeded`] when bisection passes [`MAX_DEPTH`].
pub fn isolate_in_open(
    p: &IntPolynomial,
    lo: &BigRational,
    hi: &BigRational,
) -> Result<Vec<RationalInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(Error::InvalidInterval { lo: lo.to_string(), hi: hi.to_string() });
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    // (p mapped onto (0, 1), lo, hi, depth)
    let mut stack = vec![(to_unit_interval(p, lo, hi), lo.clone(), hi.clone(), 0usize)];
    let two = BigRational::from_integer(2.into());
    while let Some((q, a, b, depth)) = stack.pop() {
        match unit_variations(&q) {
            0 => {}
            1 => found.push(with_sign_change(p, a, b)?),
            _ => {
                if depth >= MAX_DEPTH {
                    return Err(Error::DepthExceeded(MAX_DEPTH));
                }
                let mid = (&a + &b) / &two;
                let left = left_half(&q);
                let mut right = left.clone();
                taylor_shift_one(&mut right);
                if right[0].is_zero() {
                    found.push(RationalInterval::point(mid.clone()));
                }
                stack.push((left, a, mid.clone(), depth + 1));
                stack.push((right, mid, b, depth + 1));
            }
        }
    }
    found.sort_by(|x, y| x.lo().cmp(y.lo()));
    Ok(found)
}

/// Largest real root of `p` without a Sturm chain, `None` if there is no
/// real root. Searches `(0, B)`, then `0`, then `(-1, 0)`, then the shells
/// `(-2^(k+1), -2^k)` down to the Cauchy bound `B`.
pub fn largest_root_descartes(p: &IntPolynomial) -> Result<Option<RationalInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(None);
    }
    let zero = BigRational::zero();
    let bound = BigRational::from_integer(super::roots::cauchy_bound(p)?);
    if let Some(iv) = isolate_in_open(p, &zero, &bound)?.pop() {
        return Ok(Some(iv));
    }
    if p.sign_at_zero() == Sign::NoSign {
        return Ok(Some(RationalInterval::point(zero)));
    }
    let mut hi = -BigRational::one();
    if let Some(iv) = isolate_in_open(p, &hi, &zero)?.pop() {
        return Ok(Some(iv));
    }
    let two = BigRational::from_integer(2.into());
    loop {
        if p.sign_at(&hi) == Sign::NoSign {
            return Ok(Some(RationalInterval::point(hi)));
        }
        if hi <= -&bound {
            return Ok(None);
        }
        let lo = &hi * &two;
        if let Some(iv) = isolate_in_open(p, &lo, &hi)?.pop() {
            return Ok(Some(iv));
        }
        hi = lo;
    }
}

/// Isolating intervals of the roots in `(-1, 0)`.
pub fn roots_in_unit_interval(p: &IntPolynomial) -> Result<Vec<RationalInterval>> {
    isolate_in_open(p, &-BigRational::one(), &BigRational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn shift() {
        // (y + 1)^2 = 1 + 2y + y^2
        let mut c = vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)];
        taylor_shift_one(&mut c);
        assert_eq!(c, vec![BigInt::from(1), BigInt::from(2), BigInt::from(1)]);
    }

    #[test]
    fn isolates_in_interval() {
        // roots -3/4, -1/2, -1/4, 2
        let f = &(&(&p(&[3, 4]) * &p(&[1, 2])) * &p(&[1, 4])) * &p(&[-2, 1]);
        let v = isolate_in_open(&f, &q(-1, 1), &q(0, 1)).unwrap();
        assert_eq!(v.len(), 3);
        for (iv, r) in v.iter().zip([q(-3, 4), q(-1, 2), q(-1, 4)]) {
            assert!(iv.contains(&r));
            if !iv.is_point() {
                assert_ne!(f.sign_at(iv.lo()), f.sign_at(iv.hi()));
                assert_ne!(f.sign_at(iv.lo()), Sign::NoSign);
            }
        }
        // the midpoint -1/2 is hit exactly
        assert!(v[1].is_point());
        // roots on the endpoints are excluded
        let g = &p(&[1, 1]) * &p(&[1, 3]);
        let v = isolate_in_open(&g, &q(-1, 1), &q(0, 1)).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v[0].contains(&q(-1, 3)));
        let h = &p(&[1, 1]) * &p(&[2, 3]);
        let v = isolate_in_open(&h, &q(-1, 1), &q(-1, 2)).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v[0].contains(&q(-2, 3)));
        assert_ne!(h.sign_at(v[0].lo()), Sign::NoSign);
    }

    #[test]
    fn repeated_root_gives_up() {
        let f = &p(&[1, 3]) * &p(&[1, 3]);
        assert_eq!(isolate_in_open(&f, &q(-1, 1), &q(0, 1)), Err(Error::DepthExceeded(MAX_DEPTH)));
        assert_eq!(largest_root_descartes(&f), Err(Error::DepthExceeded(MAX_DEPTH)));
    }

    #[test]
    fn largest() {
        assert!(largest_root_descartes(&p(&[1, 1])).unwrap().unwrap().contains(&q(-1, 1)));
        assert!(largest_root_descartes(&p(&[4, 2])).unwrap().unwrap().contains(&q(-2, 1)));
        assert!(largest_root_descartes(&p(&[-3, 1])).unwrap().unwrap().contains(&q(3, 1)));
        assert!(largest_root_descartes(&p(&[0, 1])).unwrap().unwrap().contains(&q(0, 1)));
        let iv = largest_root_descartes(&p(&[1, 4, 1])).unwrap().unwrap();
        assert!(iv.lo_f64() < -2.0 + 3f64.sqrt() && -2.0 + 3f64.sqrt() < iv.hi_f64());
        assert_eq!(largest_root_descartes(&p(&[1, 0, 1])).unwrap(), None);
        assert!(largest_root_descartes(&p(&[700, 1])).unwrap().unwrap().contains(&q(-700, 1)));
    }
}

//! Certified real-root isolation, refinement and coefficient bounds.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::interval::RationalInterval;
use super::poly::IntPolynomial;
use super::sturm::SturmChain;
use crate::error::{Error, Result};

/// Integer `B` with every real root strictly inside `(-B, B)`:
/// `1 + ceil(max_i |a_i| / |a_d|)`.
pub fn cauchy_bound(p: &IntPolynomial) -> Result<BigInt> {
    let lead = p.leading_coeff().ok_or(Error::ZeroPolynomial)?.abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_default();
    Ok(BigInt::one() + Integer::div_ceil(&max, &lead))
}

fn int(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Isolating intervals for every real root of a square-free polynomial,
/// ascending and pairwise disjoint. Degenerate intervals mark roots hit
/// exactly by a bisection point.
pub fn isolate_real_roots(p: &IntPolynomial) -> Result<Vec<RationalInterval>> {
    let chain = SturmChain::new(p)?;
    isolate_with_chain(&chain)
}

fn isolate_with_chain(chain: &SturmChain) -> Result<Vec<RationalInterval>> {
    let p = chain.input();
    if p.is_constant() {
        return Ok(Vec::new());
    }
    let bound = int(&cauchy_bound(p)?);
    let mut out: Vec<RationalInterval> = Vec::new();
    // Depth-first with the left half on top of the stack: output is ascending.
    let mut stack = vec![RationalInterval::new(-bound.clone(), bound)?];
    while let Some(iv) = stack.pop() {
        match chain.count(&iv)? {
            0 => {}
            1 => {
                let mut iv = iv;
                // Neighbours may share a (non-root) endpoint; shrink until apart.
                if let Some(prev) = out.last_mut() {
                    while !prev.precedes(&iv) {
                        if prev.width() >= iv.width() {
                            *prev = bisect_once(p, prev)?;
                        } else {
                            iv = bisect_once(p, &iv)?;
                        }
                    }
                }
                out.push(iv);
            }
            _ => {
                let split = non_root_split(p, &iv);
                stack.push(RationalInterval::new(split.clone(), iv.hi().clone())?);
                stack.push(RationalInterval::new(iv.lo().clone(), split)?);
            }
        }
    }
    Ok(out)
}

/// One bisection step on an isolating interval.
fn bisect_once(p: &IntPolynomial, iv: &RationalInterval) -> Result<RationalInterval> {
    let half = iv.width() / BigRational::from_integer(2.into());
    refine_root(p, iv, &half)
}

/// Isolating interval of the largest real root, or `None` if there is none.
pub fn isolate_largest_root(p: &IntPolynomial) -> Result<Option<RationalInterval>> {
    let chain = SturmChain::new(p)?;
    largest_with_chain(&chain)
}

pub(crate) fn largest_with_chain(chain: &SturmChain) -> Result<Option<RationalInterval>> {
    let p = chain.input();
    if p.is_constant() {
        return Ok(None);
    }
    let bound = int(&cauchy_bound(p)?);
    let mut iv = RationalInterval::new(-bound.clone(), bound)?;
    // Invariant: no root in [hi, B), at least one in (lo, hi).
    let mut count = chain.count(&iv)?;
    if count == 0 {
        return Ok(None);
    }
    while count > 1 {
        let split = non_root_split(p, &iv);
        let upper = RationalInterval::new(split.clone(), iv.hi().clone())?;
        let above = chain.count(&upper)?;
        if above >= 1 {
            iv = upper;
            count = above;
        } else {
            iv = RationalInterval::new(iv.lo().clone(), split)?;
            count = chain.count(&iv)?;
        }
    }
    Ok(Some(iv))
}

/// A point strictly inside `iv` that is not a root of `p`, preferring the
/// midpoint and falling back to other simple fractions of the width.
fn non_root_split(p: &IntPolynomial, iv: &RationalInterval) -> BigRational {
    let width = iv.width();
    for den in 2i64.. {
        for num in 1..den {
            if num.gcd(&den) != 1 {
                continue;
            }
            let x = iv.lo() + &width * BigRational::new(num.into(), den.into());
            if p.sign_at(&x) != Sign::NoSign {
                return x;
            }
        }
    }
    unreachable!("a nonzero polynomial has finitely many roots")
}

/// Shrinks an isolating interval of a simple root to width at most `width`
/// by exact bisection. Returns `iv` unchanged if it is already narrow enough.
pub fn refine_root(
    p: &IntPolynomial,
    iv: &RationalInterval,
    width: &BigRational,
) -> Result<RationalInterval> {
    if !width.is_positive() {
        return Err(Error::NonPositiveWidth);
    }
    if iv.is_point() || &iv.width() <= width {
        return Ok(iv.clone());
    }
    let lo_sign = p.sign_at(iv.lo());
    let hi_sign = p.sign_at(iv.hi());
    if lo_sign == Sign::NoSign {
        return Ok(RationalInterval::point(iv.lo().clone()));
    }
    if hi_sign == Sign::NoSign {
        return Ok(RationalInterval::point(iv.hi().clone()));
    }
    if lo_sign == hi_sign {
        return Err(Error::NotIsolating {
            lo: iv.lo().to_string(),
            hi: iv.hi().to_string(),
        });
    }
    let mut cur = iv.clone();
    while &cur.width() > width {
        let mid = cur.midpoint();
        let s = p.sign_at(&mid);
        if s == Sign::NoSign {
            return Ok(RationalInterval::point(mid));
        }
        cur = if s == lo_sign {
            RationalInterval::new(mid, cur.hi().clone())?
        } else {
            RationalInterval::new(cur.lo().clone(), mid)?
        };
    }
    Ok(cur)
}

/// `(min_i a_i/a_{i+1}, max_i a_i/a_{i+1})` for a polynomial with strictly
/// positive coefficients. Every complex root has modulus within these bounds.
pub fn annulus_bounds(p: &IntPolynomial) -> Result<(BigRational, BigRational)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(index) = p.coeffs().iter().position(|c| !c.is_positive()) {
        return Err(Error::NonPositiveCoefficient { index });
    }
    let ratios: Vec<BigRational> = p
        .coeffs()
        .windows(2)
        .map(|w| BigRational::new(w[0].clone(), w[1].clone()))
        .collect();
    let min = ratios.iter().min().cloned().ok_or(Error::ConstantPolynomial)?;
    let max = ratios.iter().max().cloned().ok_or(Error::ConstantPolynomial)?;
    Ok((min, max))
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
    fn cauchy_bound_values() {
        assert_eq!(cauchy_bound(&p(&[1, 4, 1])).unwrap(), BigInt::from(5));
        assert_eq!(cauchy_bound(&p(&[1, 3])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn isolates_quadratic() {
        let roots = isolate_real_roots(&p(&[1, 4, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].precedes(&roots[1]));
        let lower = -2.0 - 3f64.sqrt();
        let upper = -2.0 + 3f64.sqrt();
        assert!(roots[0].lo_f64() < lower && lower < roots[0].hi_f64());
        assert!(roots[1].lo_f64() < upper && upper < roots[1].hi_f64());
    }

    #[test]
    fn linear_and_constant() {
        let roots = isolate_real_roots(&p(&[1, 1])).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].contains(&q(-1, 1)));
        assert!(isolate_real_roots(&p(&[5])).unwrap().is_empty());
        assert!(isolate_real_roots(&p(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn dyadic_roots_stay_isolated() {
        // roots -1, 0, 1 sit on natural bisection points of (-B, B)
        let cubic = p(&[0, -1, 0, 1]);
        let roots = isolate_real_roots(&cubic).unwrap();
        assert_eq!(roots.len(), 3);
        for (iv, r) in roots.iter().zip([-1, 0, 1]) {
            assert!(iv.contains(&q(r, 1)), "{iv} should contain {r}");
        }
        assert!(roots.windows(2).all(|w| w[0].precedes(&w[1])));
    }

    #[test]
    fn largest_root() {
        let iv = isolate_largest_root(&p(&[1, 4, 1])).unwrap().unwrap();
        assert!(iv.contains(&q(-26795, 100000)) || iv.lo_f64() < -0.2679);
        let r = -2.0 + 3f64.sqrt();
        assert!(iv.lo_f64() < r && r < iv.hi_f64());
        assert_eq!(isolate_largest_root(&p(&[1, 0, 1])).unwrap(), None);
        let cubic = p(&[0, -1, 0, 1]);
        assert!(isolate_largest_root(&cubic).unwrap().unwrap().contains(&q(1, 1)));
        // 0 is hit exactly and is the largest root of t^3 + t^2 - 0t
        let lin = p(&[0, 1, 1]);
        let top = isolate_largest_root(&lin).unwrap().unwrap();
        assert!(top.contains(&q(0, 1)));
        assert!(!top.contains(&q(-1, 1)));
    }

    #[test]
    fn refinement() {
        let f = p(&[1, 4, 1]);
        let iv = RationalInterval::new(q(-1, 1), q(0, 1)).unwrap();
        let w = q(1, 1_000_000);
        let r = refine_root(&f, &iv, &w).unwrap();
        assert!(r.width() <= w);
        assert!(iv.contains_interval(&r));
        let exact = -2.0 + 3f64.sqrt();
        assert!(r.lo_f64() <= exact && exact <= r.hi_f64());
        assert!((r.midpoint_f64() - -0.267_949_19).abs() < 1e-6);

        let lin = p(&[1, 1]);
        let r = refine_root(&lin, &RationalInterval::from_ints(-2, 0).unwrap(), &q(1, 4)).unwrap();
        assert!(r.contains(&q(-1, 1)) && r.width() <= q(1, 4));

        let wide = refine_root(&f, &iv, &q(2, 1)).unwrap();
        assert_eq!(wide, iv);
    }

    #[test]
    fn refinement_errors() {
        let f = p(&[1, 4, 1]);
        let iv = RationalInterval::from_ints(1, 2).unwrap();
        assert!(matches!(refine_root(&f, &iv, &q(1, 10)), Err(Error::NotIsolating { .. })));
        assert_eq!(refine_root(&f, &iv, &q(0, 1)), Err(Error::NonPositiveWidth));
    }

    #[test]
    fn annulus() {
        assert_eq!(annulus_bounds(&p(&[1, 4, 1])).unwrap(), (q(1, 4), q(4, 1)));
        assert_eq!(annulus_bounds(&p(&[1, 1])).unwrap(), (q(1, 1), q(1, 1)));
        assert_eq!(annulus_bounds(&p(&[2, 2, 2])).unwrap(), (q(1, 1), q(1, 1)));
        assert_eq!(
            annulus_bounds(&p(&[1, 0, 1])),
            Err(Error::NonPositiveCoefficient { index: 1 })
        );
        assert_eq!(annulus_bounds(&p(&[3])), Err(Error::ConstantPolynomial));
    }
}

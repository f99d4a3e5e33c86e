//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial `c_0 + c_1 t + ... + c_d t^d` over the integers.
///
/// Coefficients are stored in ascending order and the leading coefficient is
/// never zero. The zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * t^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::new(coeffs)
    }

    /// `1 - t`
    pub fn one_minus_t() -> Self {
        Self::from_i64s(&[1, -1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Coefficients in reverse order: `t^d p(1/t)`. Its roots are the
    /// reciprocals of the nonzero roots of `self`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Horner evaluation at an integer.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let (num, den) = (x.numer(), x.denom());
        BigRational::new(self.eval_homogeneous(num, den), pow_int(den, self.degree().unwrap_or(0)))
    }

    /// `sum c_i num^i den^(d-i)`, i.e. `den^d p(num/den)`. Its sign matches
    /// `p(num/den)` for positive `den`.
    fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    /// Sign of `p(x)` without forming the rational value.
    pub fn sign_at(&self, x: &BigRational) -> Sign {
        // BigRational keeps a positive denominator.
        self.eval_homogeneous(x.numer(), x.denom()).sign()
    }

    pub fn sign_at_zero(&self) -> Sign {
        self.coeffs.first().map_or(Sign::NoSign, BigInt::sign)
    }

    /// Substitute `t -> alpha t + beta`.
    pub fn compose_affine(&self, alpha: &BigInt, beta: &BigInt) -> Self {
        let inner = Self::new(vec![beta.clone(), alpha.clone()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &inner) + &Self::constant(c.clone()))
    }

    /// `p^k`
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::constant(1);
        for _ in 0..k {
            result = &result * self;
        }
        result
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping the sign of every coefficient.
    pub fn primitive_part(&self) -> Self {
        let content = self.content();
        if content.is_zero() || content.is_one() {
            return self.clone();
        }
        Self {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        }
    }

    /// Pseudo-remainder scaled by a positive factor: returns `r` with
    /// `|lc(d)|^(k) * self = q * d + r` and `deg r < deg d`.
    ///
    /// Panics if `divisor` is zero.
    pub fn positive_pseudo_rem(&self, divisor: &Self) -> Self {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading_coeff().unwrap();
        let lead_abs = lead.abs();
        let lead_sign = lead.signum();
        let mut rem = self.coeffs.clone();
        while rem.len() > d_deg && !rem.is_empty() {
            let r_deg = rem.len() - 1;
            let r_lead = rem[r_deg].clone();
            let shift = r_deg - d_deg;
            for c in rem.iter_mut() {
                *c *= &lead_abs;
            }
            let factor = &r_lead * &lead_sign;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + shift] -= &factor * dc;
            }
            debug_assert!(rem[r_deg].is_zero());
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Self::new(rem)
    }

    /// Primitive gcd with positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            let r = a.positive_pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            Some(lc) if lc.is_negative() => -a,
            _ => a,
        }
    }

    /// Exact division when `divisor` divides `self` over the integers.
    /// Returns `None` if the division is not exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d_deg = divisor.degree()?;
        let lead = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return rem.is_empty().then(Self::zero);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d_deg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + d_deg];
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + shift] -= &q * dc;
            }
            quot[shift] = q;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    /// True iff `gcd(p, p')` is constant.
    pub fn is_square_free(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.gcd(&self.derivative()).is_constant())
    }

    /// `p / gcd(p, p')`, with positive leading coefficient.
    pub fn square_free_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let part = self.div_exact(&g).expect("gcd divides its argument").primitive_part();
        Ok(match part.leading_coeff() {
            Some(lc) if lc.is_negative() => -part,
            _ => part,
        })
    }

    pub fn all_coeffs_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(Signed::is_positive)
    }
}

pub(crate) fn pow_int(base: &BigInt, exp: usize) -> BigInt {
    num_traits::pow(base.clone(), exp)
}

impl From<Vec<BigInt>> for IntPolynomial {
    fn from(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs)
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
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
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn derivative_power_rule() {
        assert_eq!(p(&[1, 4, 1]).derivative(), p(&[4, 2]));
        assert!(p(&[7]).derivative().is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 4, 1]).eval(&q(-1, 1)), q(-2, 1));
        assert_eq!(p(&[1, 4, 1]).eval(&q(1, 2)), q(13, 4));
        assert_eq!(p(&[1, 4, 1]).eval_int(&BigInt::from(-1)), BigInt::from(-2));
        assert_eq!(p(&[1, 4, 1]).sign_at(&q(-1, 3)), Sign::Minus);
        assert_eq!(p(&[1, 1]).sign_at(&q(-1, 1)), Sign::NoSign);
        assert_eq!(IntPolynomial::zero().eval(&q(3, 7)), q(0, 1));
    }

    #[test]
    fn compose_shift() {
        let one = BigInt::one();
        assert_eq!(p(&[1, 1]).compose_affine(&one, &one), p(&[2, 1]));
        // (1 + 4t + t^2) at 1 - t
        assert_eq!(
            p(&[1, 4, 1]).compose_affine(&-BigInt::one(), &one),
            p(&[6, -6, 1])
        );
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(&p(&[1, 2, 3]) - &p(&[1, 2, 3]), IntPolynomial::zero());
        assert_eq!(&p(&[1, 2]) + &p(&[0, -2, 5]), p(&[1, 0, 5]));
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[2, 4]).scale(&BigInt::from(-3)), p(&[-6, -12]));
    }

    #[test]
    fn gcd_and_square_freeness() {
        assert!(p(&[1, 4, 1]).is_square_free().unwrap());
        assert!(!p(&[1, 2, 1]).is_square_free().unwrap());
        assert!(p(&[1, 1]).is_square_free().unwrap());
        assert_eq!(IntPolynomial::zero().is_square_free(), Err(Error::ZeroPolynomial));

        let a = &p(&[1, 1]) * &p(&[-2, 3]);
        let b = &p(&[1, 1]) * &p(&[5, 0, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        let sq = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[-3, 2]);
        assert_eq!(sq.square_free_part().unwrap(), p(&[-3, -1, 2]));
    }

    #[test]
    fn exact_division() {
        let a = &p(&[1, 1]) * &p(&[-2, 3]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[-2, 3])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])), None);
    }

    #[test]
    fn pseudo_remainder_is_positive_multiple() {
        // t^2 + 1 divided by -2t + 1: true remainder 5/4
        let r = p(&[1, 0, 1]).positive_pseudo_rem(&p(&[1, -2]));
        assert_eq!(r.degree(), Some(0));
        assert!(r.coeff(0).is_positive());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 4, 1]).to_string(), "1 + 4t + t^2");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-t + 3t^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}

//! Floating-point evaluation of the Bergman kernel of
//! `D_{n,m} = {(z, zeta) : |zeta|^2 < exp(-mu |z|^2)}`:
//!
//! `K((z,zeta),(z',zeta')) = mu^n / pi^(n+m) * exp(m mu <z,z'>) * F_{n,m}(t)`
//! with `t = exp(mu <z,z'>) <zeta,zeta'>` and
//! `F_{n,m}(t) = d^m/dt^m Li_{-n}(t) = A_{n,m}(t) / (1-t)^(n+m+1)
//!             = sum_k (k+1)_m (k+m)^n t^k`.
//!
//! For two points of the domain, Cauchy-Schwarz gives `|t| < 1`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

use crate::combin::rising_factorial;
use crate::error::{Error, Result};
use crate::lukeng::{anm_recurrence, AnmIndex};
use crate::par;

/// A point `(z, zeta)` of `C^n x C^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct FbhPoint {
    pub z: Vec<Complex64>,
    pub zeta: Vec<Complex64>,
}

impl FbhPoint {
    pub fn new(z: Vec<Complex64>, zeta: Vec<Complex64>) -> Self {
        Self { z, zeta }
    }

    pub fn origin(index: AnmIndex) -> Self {
        Self {
            z: vec![Complex64::zero(); index.n as usize],
            zeta: vec![Complex64::zero(); index.m as usize],
        }
    }

    fn check_dims(&self, index: AnmIndex, which: &str) -> Result<()> {
        if self.z.len() != index.n as usize || self.zeta.len() != index.m as usize {
            return Err(Error::DimensionMismatch(format!(
                "{which}: z has {} and zeta has {} coordinates, expected n = {} and m = {}",
                self.z.len(),
                self.zeta.len(),
                index.n,
                index.m
            )));
        }
        Ok(())
    }
}

/// A pair of points of `D_{n,m}` together with the weight `mu`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelPoint {
    pub index: AnmIndex,
    pub mu: f64,
    pub p: FbhPoint,
    pub q: FbhPoint,
}

/// `<a, b> = sum a_i conj(b_i)`
pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
}

fn norm_sqr(a: &[Complex64]) -> f64 {
    a.iter().map(Complex64::norm_sqr).sum()
}

fn check_mu(mu: f64) -> Result<()> {
    if mu.is_finite() && mu > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidMu(mu))
    }
}

/// `|zeta|^2 < exp(-mu |z|^2)`, compared strictly in double precision.
pub fn is_member(index: AnmIndex, mu: f64, p: &FbhPoint) -> Result<bool> {
    check_mu(mu)?;
    p.check_dims(index, "point")?;
    Ok(norm_sqr(&p.zeta) < (-mu * norm_sqr(&p.z)).exp())
}

fn require_member(index: AnmIndex, mu: f64, p: &FbhPoint, which: &'static str) -> Result<()> {
    p.check_dims(index, which)?;
    let lhs = norm_sqr(&p.zeta);
    let rhs = (-mu * norm_sqr(&p.z)).exp();
    if lhs < rhs {
        Ok(())
    } else {
        Err(Error::NotMember { which, lhs, rhs })
    }
}

/// Evaluates `K` for many point pairs of one `D_{n,m}` and one `mu`, with
/// the coefficients of `A_{n,m}` converted once.
#[derive(Clone, Debug)]
pub struct KernelEvaluator {
    index: AnmIndex,
    mu: f64,
    coeffs: Vec<f64>,
    prefactor: f64,
}

impl KernelEvaluator {
    pub fn new(index: AnmIndex, mu: f64) -> Result<Self> {
        check_mu(mu)?;
        let coeffs = anm_recurrence(index)
            .coeffs()
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect();
        let prefactor = mu.powi(index.n as i32) / PI.powi((index.n + index.m) as i32);
        Ok(Self { index, mu, coeffs, prefactor })
    }

    pub fn index(&self) -> AnmIndex {
        self.index
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Validates both points and returns `(t, exp(m mu <z,z'>))`.
    pub fn argument(&self, p: &FbhPoint, q: &FbhPoint) -> Result<(Complex64, Complex64)> {
        require_member(self.index, self.mu, p, "p")?;
        require_member(self.index, self.mu, q, "q")?;
        let e = (inner(&p.z, &q.z) * self.mu).exp();
        let t = e * inner(&p.zeta, &q.zeta);
        if t.norm() >= 1.0 {
            return Err(Error::Domain(t.norm()));
        }
        Ok((t, e.powu(self.index.m)))
    }

    /// `F_{n,m}(t) = A_{n,m}(t) / (1-t)^(n+m+1)` by Horner's scheme.
    pub fn closed_form(&self, t: Complex64) -> Complex64 {
        let numer = self
            .coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &c| acc * t + c);
        numer / (Complex64::new(1.0, 0.0) - t).powu(self.index.n + self.index.m + 1)
    }

    /// Partial sum `sum_{k < num_terms} (k+1)_m (k+m)^n t^k`.
    ///
    /// Accumulated in 256-bit fixed point with exact integer coefficients, so
    /// the only rounding is the final conversion; on the negative axis the
    /// terms alternate and a double-precision sum would cancel badly.
    pub fn series(&self, t: Complex64, num_terms: usize) -> Complex64 {
        let (n, m) = (self.index.n as usize, u64::from(self.index.m));
        let one = BigInt::one() << FIXED_BITS;
        let (t_re, t_im) = (to_fixed(t.re), to_fixed(t.im));
        let (mut p_re, mut p_im) = (one, BigInt::zero());
        let (mut s_re, mut s_im) = (BigInt::zero(), BigInt::zero());
        for k in 0..num_terms as u64 {
            let c = BigInt::from(rising_factorial(k + 1, m as usize))
                * num_traits::pow(BigInt::from(k + m), n);
            s_re += &c * &p_re;
            s_im += &c * &p_im;
            let re = (&p_re * &t_re - &p_im * &t_im) >> FIXED_BITS;
            let im = (&p_re * &t_im + &p_im * &t_re) >> FIXED_BITS;
            p_re = re;
            p_im = im;
        }
        Complex64::new(from_fixed(&s_re), from_fixed(&s_im))
    }

    pub fn eval(&self, p: &FbhPoint, q: &FbhPoint) -> Result<Complex64> {
        let (t, e) = self.argument(p, q)?;
        Ok(self.closed_form(t) * e * self.prefactor)
    }

    pub fn eval_series(&self, p: &FbhPoint, q: &FbhPoint, num_terms: usize) -> Result<Complex64> {
        let (t, e) = self.argument(p, q)?;
        Ok(self.series(t, num_terms) * e * self.prefactor)
    }

    /// Magnitude scale of the closed form at `(p, q)`:
    /// `mu^n / pi^(n+m) |exp(m mu <z,z'>)| sum_i a_i |t|^i / |1-t|^(n+m+1)`.
    /// A computed kernel value that is tiny relative to this is zero to
    /// working precision.
    pub fn scale(&self, p: &FbhPoint, q: &FbhPoint) -> Result<f64> {
        let (t, e) = self.argument(p, q)?;
        let r = t.norm();
        let numer = self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c);
        let denom = (Complex64::new(1.0, 0.0) - t).norm().powi((self.index.n + self.index.m + 1) as i32);
        Ok(self.prefactor * e.norm() * numer / denom)
    }
}

const FIXED_BITS: usize = 256;

fn to_fixed(x: f64) -> BigInt {
    // scaling by a power of two is exact, and |x| < 1 keeps it finite
    BigInt::from_f64(x * 2f64.powi(FIXED_BITS as i32)).expect("finite")
}

fn from_fixed(x: &BigInt) -> f64 {
    let bits = x.bits() as i64;
    let shift = (bits - 64).max(0);
    let top = (x >> shift as usize).to_f64().expect("fits after shift");
    top * 2f64.powi((shift - FIXED_BITS as i64) as i32)
}

/// Number of series terms after which the tail of
/// `sum (k+1)_m (k+m)^n r^k` is below `rel_tol` times its largest term.
///
/// Terms grow while the ratio `((k+1+m)/(k+1)) ((k+1+m)/(k+m))^n r` exceeds
/// one and then decay geometrically; the tail past `K` is bounded by
/// `term_K / (1 - ratio_K)`.
pub fn series_terms_for(index: AnmIndex, abs_t: f64, rel_tol: f64) -> usize {
    if abs_t == 0.0 {
        return 1;
    }
    let (n, m) = (f64::from(index.n), f64::from(index.m));
    let mut log_term = n * m.ln() + (1..=index.m).map(|i| f64::from(i).ln()).sum::<f64>();
    let mut log_max = log_term;
    let log_r = abs_t.ln();
    let mut k = 0usize;
    loop {
        let kf = k as f64;
        let log_ratio = ((kf + 1.0 + m) / (kf + 1.0)).ln() + n * ((kf + 1.0 + m) / (kf + m)).ln() + log_r;
        log_term += log_ratio;
        k += 1;
        log_max = log_max.max(log_term);
        if log_ratio < 0.0 {
            let ratio = log_ratio.exp();
            let tail = log_term - (1.0 - ratio).ln();
            if tail - log_max < rel_tol.ln() {
                return k + 1;
            }
        }
        if k > 1_000_000 {
            return k;
        }
    }
}

pub fn kernel_eval(kp: &KernelPoint) -> Result<Complex64> {
    KernelEvaluator::new(kp.index, kp.mu)?.eval(&kp.p, &kp.q)
}

/// Kernel value from the partial sum of the power series, an oracle
/// independent of `A_{n,m}`.
pub fn kernel_series_eval(kp: &KernelPoint, num_terms: usize) -> Result<Complex64> {
    KernelEvaluator::new(kp.index, kp.mu)?.eval_series(&kp.p, &kp.q, num_terms)
}

/// Kernel values for a batch of point pairs, in input order.
pub fn kernel_eval_batch(points: &[KernelPoint]) -> Vec<Result<Complex64>> {
    par::map(points, kernel_eval)
}

/// A pair of points on which `K` vanishes, given a root `r` of `A_{n,m}`
/// in `(-1, 0)`: `z = z' = 0`, `zeta = (s, 0, ...)`, `zeta' = (r/s, 0, ...)`
/// with `s = sqrt((1 + |r|) / 2)`, so `t = r` and both points are interior.
pub fn zero_witness_pair(index: AnmIndex, mu: f64, root: f64) -> Result<KernelPoint> {
    check_mu(mu)?;
    if !(root > -1.0 && root < 0.0) {
        return Err(Error::OutOfRange {
            what: "witness root",
            detail: format!("{root} is not in (-1, 0)"),
        });
    }
    let s = ((1.0 + root.abs()) / 2.0).sqrt();
    let mut p = FbhPoint::origin(index);
    let mut q = FbhPoint::origin(index);
    p.zeta[0] = Complex64::new(s, 0.0);
    q.zeta[0] = Complex64::new(root / s, 0.0);
    Ok(KernelPoint { index, mu, p, q })
}

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::anm::{anm_recurrence, recurrence_step, AnmSource};
use super::AnmIndex;
use crate::combin::eulerian_polynomial;
use crate::error::{Error, Result};
use crate::exactalg::{
    isolate_real_roots, largest_root_descartes, largest_with_chain, refine_root,
    roots_in_unit_interval, IntPolynomial, RationalInterval, SturmChain,
};
use crate::par;

/// Exact Lu Qi-Keng decision for one `D_{n,m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LuQiKengVerdict {
    pub index: AnmIndex,
    pub is_lu_qi_keng: bool,
    /// Distinct roots of `A_{n,m}` in the open interval `(-1, 0)`.
    pub roots_in_unit_interval: usize,
    /// Enclosure of `r_{n,m}`, the largest root.
    pub largest_root: RationalInterval,
    /// `A_{n,m}(-1) = 0` exactly.
    pub root_at_minus_one: bool,
}

/// Certificate for `m_0(n)`: every `m < m_0` fails, `m_0` succeeds, and the
/// strict decrease of `r_{n,m}` in `m` carries success to all larger `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct M0Certificate {
    pub n: u32,
    pub m0: u32,
    pub below: Vec<LuQiKengVerdict>,
    pub at: LuQiKengVerdict,
}

impl M0Certificate {
    /// `r_{n,m_0}` and, when `m_0 > 1`, `r_{n,m_0-1}`.
    pub fn bracketing_roots(&self) -> (&RationalInterval, Option<&RationalInterval>) {
        (&self.at.largest_root, self.below.last().map(|v| &v.largest_root))
    }
}

/// `10^-6`, the enclosure width used in reports.
pub fn default_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000))
}

/// `ceil(4 (n+1) ln(n+1) + 16)`, generously above the observed `m_0(n)`.
pub fn default_m_cap(n: u32) -> u32 {
    let x = f64::from(n + 1);
    (4.0 * x * x.ln() + 16.0).ceil() as u32
}

/// Decides the Lu Qi-Keng property of `D_{n,m}` from `poly = A_{n,m}`.
///
/// The roots of `A_{n,m}` are real and negative, so its roots in the unit
/// disk are exactly its roots in `(-1, 0)`. A root exactly at `-1` is on the
/// boundary and does not count. Roots are isolated by Descartes bisection;
/// if that gives up, a Sturm chain decides instead.
pub fn verdict_for(
    index: AnmIndex,
    poly: &IntPolynomial,
    width: &BigRational,
) -> Result<LuQiKengVerdict> {
    match verdict_descartes(index, poly, width) {
        Err(Error::DepthExceeded(_)) => verdict_sturm(index, poly, width),
        other => other,
    }
}

fn no_real_root(index: AnmIndex) -> Error {
    Error::OutOfRange { what: "real roots", detail: format!("{index} has no real root") }
}

fn verdict_descartes(
    index: AnmIndex,
    poly: &IntPolynomial,
    width: &BigRational,
) -> Result<LuQiKengVerdict> {
    let root_at_minus_one = poly.sign_at(&-BigRational::one()) == Sign::NoSign;
    let roots_in_unit_interval = roots_in_unit_interval(poly)?.len();
    let largest = largest_root_descartes(poly)?.ok_or_else(|| no_real_root(index))?;
    Ok(LuQiKengVerdict {
        index,
        is_lu_qi_keng: roots_in_unit_interval == 0,
        roots_in_unit_interval,
        largest_root: refine_root(poly, &largest, width)?,
        root_at_minus_one,
    })
}

/// The same decision from a Sturm chain, which also rejects polynomials
/// that are not square-free.
pub fn verdict_sturm(
    index: AnmIndex,
    poly: &IntPolynomial,
    width: &BigRational,
) -> Result<LuQiKengVerdict> {
    let minus_one = -BigRational::one();
    let zero = BigRational::zero();
    let chain = SturmChain::new(poly)?;
    let root_at_minus_one = poly.sign_at(&minus_one) == Sign::NoSign;
    let unit = RationalInterval::new(minus_one.clone(), zero.clone())?;
    let roots_in_unit_interval = if root_at_minus_one {
        // A square-free polynomial stays square-free after removing (1 + t),
        // and the quotient no longer vanishes at -1.
        let deflated = poly
            .div_exact(&IntPolynomial::from_i64s(&[1, 1]))
            .expect("(1 + t) divides a polynomial vanishing at -1");
        SturmChain::new(&deflated)?.count(&unit)?
    } else {
        chain.count(&unit)?
    };
    let largest = largest_with_chain(&chain)?.ok_or_else(|| no_real_root(index))?;
    let largest_root = refine_root(poly, &largest, width)?;
    Ok(LuQiKengVerdict {
        index,
        is_lu_qi_keng: roots_in_unit_interval == 0,
        roots_in_unit_interval,
        largest_root,
        root_at_minus_one,
    })
}

pub fn is_lu_qi_keng(index: AnmIndex) -> Result<LuQiKengVerdict> {
    verdict_for(index, &anm_recurrence(index), &default_width())
}

/// Enclosure of `r_{n,m}` of width at most `width`.
pub fn largest_root(index: AnmIndex, width: &BigRational) -> Result<RationalInterval> {
    let poly = anm_recurrence(index);
    let iv = match largest_root_descartes(&poly) {
        Err(Error::DepthExceeded(_)) => largest_with_chain(&SturmChain::new(&poly)?)?,
        other => other?,
    };
    refine_root(&poly, &iv.ok_or_else(|| no_real_root(index))?, width)
}

/// Ascends `m = 1, 2, ...` and stops at the first Lu Qi-Keng verdict.
pub fn compute_m0(n: u32, m_cap: u32) -> Result<M0Certificate> {
    compute_m0_to_width(n, m_cap, &default_width())
}

/// [`compute_m0`] with root enclosures of width at most `width`.
pub fn compute_m0_to_width(n: u32, m_cap: u32, width: &BigRational) -> Result<M0Certificate> {
    AnmIndex::new(n, 1)?;
    let mut poly = eulerian_polynomial(n as usize + 1)?;
    let mut below = Vec::new();
    for m in 1..=m_cap {
        let index = AnmIndex::unchecked(n, m);
        if m > 1 {
            poly = recurrence_step(&poly, AnmIndex::unchecked(n, m - 1));
        }
        let verdict = verdict_for(index, &poly, width)?;
        if verdict.is_lu_qi_keng {
            return Ok(M0Certificate { n, m0: m, below, at: verdict });
        }
        below.push(verdict);
    }
    Err(Error::CapExceeded { n, cap: m_cap })
}

/// [`compute_m0`] over an arbitrary polynomial source.
pub fn compute_m0_with(source: &dyn AnmSource, n: u32, m_cap: u32) -> Result<M0Certificate> {
    AnmIndex::new(n, 1)?;
    let width = default_width();
    let mut below = Vec::new();
    for m in 1..=m_cap {
        let index = AnmIndex::unchecked(n, m);
        let verdict = verdict_for(index, &source.anm(index), &width)?;
        if verdict.is_lu_qi_keng {
            return Ok(M0Certificate { n, m0: m, below, at: verdict });
        }
        below.push(verdict);
    }
    Err(Error::CapExceeded { n, cap: m_cap })
}

/// `m_0(n)` certificates for each `n`, computed in parallel, in input order.
/// `cap` overrides [`default_m_cap`].
pub fn m0_table(ns: &[u32], cap: Option<u32>) -> Vec<Result<M0Certificate>> {
    m0_table_to_width(ns, cap, &default_width())
}

pub fn m0_table_to_width(
    ns: &[u32],
    cap: Option<u32>,
    width: &BigRational,
) -> Vec<Result<M0Certificate>> {
    par::map(ns, |&n| compute_m0_to_width(n, cap.unwrap_or_else(|| default_m_cap(n)), width))
}

/// One real root of `A_{n,m}` with its certified enclosure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEnclosure {
    pub interval: RationalInterval,
    /// The enclosure is a single point, i.e. the root is that rational.
    pub exact: bool,
    /// The root lies in the open interval `(-1, 0)`.
    pub in_unit_interval: bool,
}

/// Every real root of `A_{n,m}`, ascending, refined to `width`.
pub fn all_roots(index: AnmIndex, width: &BigRational) -> Result<Vec<RootEnclosure>> {
    let poly = anm_recurrence(index);
    let chain = SturmChain::new(&poly)?;
    let minus_one = -BigRational::one();
    let zero = BigRational::zero();
    isolate_real_roots(&poly)?
        .iter()
        .map(|iv| {
            let interval = refine_root(&poly, iv, width)?;
            let in_unit_interval = if interval.is_point() {
                interval.lo() > &minus_one && interval.lo() < &zero
            } else {
                // A_{n,m}(0) > 0, so a closed right end at 0 adds nothing
                let lo = interval.lo().max(&minus_one);
                let hi = interval.hi().min(&zero);
                lo < hi && chain.count_half_open(lo, hi) == 1
            };
            Ok(RootEnclosure { exact: interval.is_point(), in_unit_interval, interval })
        })
        .collect()
}

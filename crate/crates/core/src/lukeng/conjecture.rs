//! Empirical probes of the open questions around `m_0(n)`: comparison with
//! `f(n) = [(n+1) ln(n+1)]` (nearest integer), strictness of the increments
//! of `m_0`, and the trend of `r_{n,m}` as `n` grows with `m` fixed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::verdict::{largest_root, m0_table};
use super::AnmIndex;
use crate::error::Result;
use crate::par;

/// Rational enclosure `[lo, hi]` of `ln k` using `terms` terms of each
/// `atanh` series.
///
/// `k = 2^e r` with `1 <= r < 2`, and `ln x = 2 atanh((x-1)/(x+1))`, so both
/// `ln 2` and `ln r` use series arguments at most `1/3`. Partial sums of
/// `atanh y = sum y^(2j+1)/(2j+1)` are lower bounds; the tail after `J` terms
/// is below `y^(2J+1) / ((2J+1)(1-y^2))`.
pub fn ln_enclosure(k: u64, terms: usize) -> (BigRational, BigRational) {
    assert!(k >= 1, "ln is taken of a positive integer");
    let e = 63 - k.leading_zeros();
    let pow = 1u64 << e;
    let (ln2_lo, ln2_hi) = two_atanh(&BigRational::new(1.into(), 3.into()), terms);
    let (r_lo, r_hi) = if k == pow {
        (BigRational::zero(), BigRational::zero())
    } else {
        two_atanh(&BigRational::new(BigInt::from(k - pow), BigInt::from(k + pow)), terms)
    };
    let e = BigRational::from_integer(e.into());
    (&e * ln2_lo + r_lo, &e * ln2_hi + r_hi)
}

fn two_atanh(y: &BigRational, terms: usize) -> (BigRational, BigRational) {
    let y2 = y * y;
    let mut power = y.clone();
    let mut sum = BigRational::zero();
    for j in 0..terms {
        sum += &power / BigRational::from_integer(BigInt::from(2 * j + 1));
        power *= &y2;
    }
    let tail = &power
        / (BigRational::from_integer(BigInt::from(2 * terms + 1)) * (BigRational::one() - &y2));
    let two = BigRational::from_integer(2.into());
    (&two * &sum, &two * (sum + tail))
}

/// Certified nearest integer of `(n+1) ln(n+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NearestInteger {
    Value {
        value: i64,
        enclosure: (BigRational, BigRational),
    },
    /// The narrowest enclosure reached still contains a half-integer.
    Tie {
        enclosure: (BigRational, BigRational),
    },
}

impl NearestInteger {
    pub fn value(&self) -> Option<i64> {
        match self {
            NearestInteger::Value { value, .. } => Some(*value),
            NearestInteger::Tie { .. } => None,
        }
    }

    pub fn enclosure(&self) -> &(BigRational, BigRational) {
        match self {
            NearestInteger::Value { enclosure, .. } | NearestInteger::Tie { enclosure } => enclosure,
        }
    }
}

/// `f(n) = [(n+1) ln(n+1)]`, decided once an enclosure of `(n+1) ln(n+1)`
/// excludes every half-integer; the enclosure is narrowed by doubling the
/// series length up to 512 terms.
pub fn nearest_int_n_log_n(n: u32) -> NearestInteger {
    let k = u64::from(n) + 1;
    let scale = BigRational::from_integer(k.into());
    let half = BigRational::new(1.into(), 2.into());
    let mut terms = 4;
    loop {
        let (lo, hi) = ln_enclosure(k, terms);
        let (lo, hi) = (&lo * &scale, &hi * &scale);
        let a = (&lo + &half).floor();
        let b = (&hi + &half).floor();
        // lo + 1/2 == a would put the tie point a - 1/2 at the lower end.
        if a == b && &lo + &half > a {
            let value = a.to_integer().to_string().parse().expect("fits in i64");
            return NearestInteger::Value { value, enclosure: (lo, hi) };
        }
        if terms >= 512 {
            return NearestInteger::Tie { enclosure: (lo, hi) };
        }
        terms *= 2;
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureRow {
    pub n: u32,
    pub m0: u32,
    pub f: NearestInteger,
    /// `m_0(n) - f(n)` when `f(n)` is decided.
    pub diff: Option<i64>,
    /// `m_0(n) > m_0(n-1)`; `None` for the first row.
    pub strict_increase: Option<bool>,
    /// Midpoints of `r_{n,m}` enclosures for `m` in `ConjectureReport::fixed_m`.
    pub r_fixed_m: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjectureReport {
    pub rows: Vec<ConjectureRow>,
    pub fixed_m: Vec<u32>,
    /// `m_0(n) <= f(n)` on every row.
    pub bound_holds: bool,
    /// `m_0(n) = f(n)` exactly for `n <= 10` and `m_0(n) < f(n)` beyond.
    pub equality_exactly_up_to_10: bool,
    /// Every increment of `m_0` in the range is positive.
    pub strictly_increasing: bool,
    pub ties: Vec<u32>,
}

/// Tabulates the probes for `n = 1..=n_max`; `cap` overrides the default
/// search cap for `m_0`.
pub fn conjecture_probe(n_max: u32, cap: Option<u32>) -> Result<ConjectureReport> {
    let fixed_m = vec![1, 2, 3];
    let ns: Vec<u32> = (1..=n_max).collect();
    let certs = m0_table(&ns, cap).into_iter().collect::<Result<Vec<_>>>()?;
    let fs = par::map(&ns, |&n| nearest_int_n_log_n(n));
    let width = BigRational::new(1.into(), BigInt::from(10).pow(9));
    let grid: Vec<AnmIndex> = ns
        .iter()
        .flat_map(|&n| fixed_m.iter().map(move |&m| AnmIndex::unchecked(n, m)))
        .collect();
    let roots = par::map(&grid, |&idx| largest_root(idx, &width).map(|iv| iv.midpoint_f64()))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let mut rows = Vec::with_capacity(ns.len());
    for (i, (cert, f)) in certs.iter().zip(fs).enumerate() {
        let diff = f.value().map(|v| i64::from(cert.m0) - v);
        let strict_increase = i.checked_sub(1).map(|j| cert.m0 > certs[j].m0);
        let r_fixed_m = roots[i * fixed_m.len()..(i + 1) * fixed_m.len()].to_vec();
        rows.push(ConjectureRow { n: cert.n, m0: cert.m0, f, diff, strict_increase, r_fixed_m });
    }
    let bound_holds = rows.iter().all(|r| r.diff.is_some_and(|d| d <= 0));
    let equality_exactly_up_to_10 = rows.iter().all(|r| match r.diff {
        Some(d) if r.n <= 10 => d == 0,
        Some(d) => d < 0,
        None => false,
    });
    let strictly_increasing = rows.iter().all(|r| r.strict_increase != Some(false));
    let ties = rows.iter().filter(|r| r.f.value().is_none()).map(|r| r.n).collect();
    Ok(ConjectureReport {
        rows,
        fixed_m,
        bound_holds,
        equality_exactly_up_to_10,
        strictly_increasing,
        ties,
    })
}

//! Exhaustive verification of the structural facts about `A_{n,m}` over a
//! finite grid. Violations are collected as report content with a witness;
//! nothing here fails through `Err`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::anm::{anm_closed, anm_series_oracle, cross_recurrence_holds, quotient_taylor, AnmSource};
use super::interlace::{verify_interlacing, Relation};
use super::verdict::{compute_m0_with, default_m_cap};
use super::AnmIndex;
use crate::combin::{eulerian_polynomial, factorial};
use crate::exactalg::{
    annulus_bounds, cauchy_bound, largest_with_chain, refine_root, IntPolynomial,
    RationalInterval, SturmChain,
};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    RecurrenceEqualsClosedForm,
    SeriesOracle,
    ValueAtOne,
    CrossRecurrence,
    EulerianInitialCondition,
    Degree,
    PositiveCoefficients,
    SquareFree,
    RootsRealNegative,
    AnnulusContainment,
    AlternatesInM,
    InterlacesInN,
    LargestRootDecreasingInM,
    LargestRootIncreasingInN,
    M0Nondecreasing,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::RecurrenceEqualsClosedForm => "recurrence equals closed form",
            Check::SeriesOracle => "Taylor expansion matches series oracle",
            Check::ValueAtOne => "A_{n,m}(1) = (n+m)!",
            Check::CrossRecurrence => "A_{n+1,m} = t A_{n,m+1} + m(1-t) A_{n,m}",
            Check::EulerianInitialCondition => "A_{n,1} = A_{n+1}",
            Check::Degree => "deg A_{n,m} = n",
            Check::PositiveCoefficients => "all coefficients positive",
            Check::SquareFree => "square-free",
            Check::RootsRealNegative => "n real roots, all negative",
            Check::AnnulusContainment => "roots inside coefficient-ratio annulus",
            Check::AlternatesInM => "A_{n,m+1} strictly alternates A_{n,m}",
            Check::InterlacesInN => "A_{n,m} strictly interlaces A_{n+1,m}",
            Check::LargestRootDecreasingInM => "r_{n,m} > r_{n,m+1}",
            Check::LargestRootIncreasingInN => "r_{n,m} < r_{n+1,m}",
            Check::M0Nondecreasing => "m_0(n) <= m_0(n+1)",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: Check,
    pub index: AnmIndex,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at (n={}, m={}): {}", self.check, self.index.n, self.index.m, self.witness)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub n_max: u32,
    pub m_max: u32,
    /// Number of instances evaluated per check.
    pub checks_run: BTreeMap<Check, usize>,
    pub violations: Vec<Violation>,
    /// `m_0(n)` for `n = 1..=n_max` when the theorem suite ran.
    pub m0: Vec<(u32, Option<u32>)>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn tally(&mut self, check: Check, count: usize) {
        *self.checks_run.entry(check).or_default() += count;
    }

    fn merge(&mut self, other: SuiteReport) {
        for (check, count) in other.checks_run {
            self.tally(check, count);
        }
        self.violations.extend(other.violations);
        if !other.m0.is_empty() {
            self.m0 = other.m0;
        }
    }
}

fn grid(n_max: u32, m_max: u32) -> Vec<AnmIndex> {
    (1..=n_max)
        .flat_map(|n| (1..=m_max).map(move |m| AnmIndex::unchecked(n, m)))
        .collect()
}

/// Three-way construction equality, value at one, cross recurrence and the
/// Eulerian initial condition for `1 <= n <= n_max`, `1 <= m <= m_max`.
pub fn construction_suite(source: &dyn AnmSource, n_max: u32, m_max: u32) -> SuiteReport {
    let cells = grid(n_max, m_max);
    let found: Vec<Vec<Violation>> = par::map(&cells, |&idx| {
        let mut out = Vec::new();
        let mut fail = |check, witness: String| out.push(Violation { check, index: idx, witness });
        let a = source.anm(idx);

        let closed = anm_closed(idx);
        if a != closed {
            fail(Check::RecurrenceEqualsClosedForm, format!("{a} != {closed}"));
        }

        let terms = (idx.n + idx.m + 5) as usize;
        let expanded = quotient_taylor(&a, idx.n + idx.m + 1, terms);
        let oracle = anm_series_oracle(idx, terms).expect("terms >= n + 1");
        if let Some(k) = (0..terms).find(|&k| expanded[k] != BigInt::from(oracle[k].clone())) {
            fail(
                Check::SeriesOracle,
                format!("coefficient of t^{k}: expansion {} != oracle {}", expanded[k], oracle[k]),
            );
        }

        let at_one: BigInt = a.coeffs().iter().sum();
        let expected = BigInt::from(factorial(u64::from(idx.n + idx.m)));
        if at_one != expected {
            fail(Check::ValueAtOne, format!("A(1) = {at_one}, (n+m)! = {expected}"));
        }

        let next_m = source.anm(idx.next_m());
        let next_n = source.anm(idx.next_n());
        if !cross_recurrence_holds(idx, &a, &next_m, &next_n) {
            fail(Check::CrossRecurrence, format!("identity fails for A_{{{},{}}} = {next_n}", idx.n + 1, idx.m));
        }

        if idx.m == 1 {
            let eulerian = eulerian_polynomial(idx.n as usize + 1).expect("n + 1 >= 1");
            if a != eulerian {
                fail(Check::EulerianInitialCondition, format!("{a} != {eulerian}"));
            }
        }
        out
    });

    let mut report = SuiteReport { n_max, m_max, ..Default::default() };
    let count = cells.len();
    for check in [
        Check::RecurrenceEqualsClosedForm,
        Check::SeriesOracle,
        Check::ValueAtOne,
        Check::CrossRecurrence,
    ] {
        report.tally(check, count);
    }
    report.tally(Check::EulerianInitialCondition, n_max as usize);
    report.violations = found.into_iter().flatten().collect();
    report
}

struct CellFacts {
    violations: Vec<Violation>,
    largest: Option<RationalInterval>,
}

fn cell_facts(idx: AnmIndex, a: &IntPolynomial, report: bool) -> CellFacts {
    let mut violations = Vec::new();
    let mut fail = |check, witness: String| {
        if report {
            violations.push(Violation { check, index: idx, witness });
        }
    };
    if a.degree() != Some(idx.n as usize) {
        fail(Check::Degree, format!("degree {:?}", a.degree()));
    }
    if let Some(i) = a.coeffs().iter().position(|c| !c.is_positive()) {
        fail(Check::PositiveCoefficients, format!("coefficient of t^{i} is {}", a.coeff(i)));
    }
    if a.is_zero() {
        fail(Check::SquareFree, "zero polynomial".into());
        return CellFacts { violations, largest: None };
    }
    let chain = match SturmChain::new(a) {
        Ok(chain) => chain,
        Err(e) => {
            fail(Check::SquareFree, e.to_string());
            return CellFacts { violations, largest: None };
        }
    };

    let zero = BigRational::zero();
    let bound = BigRational::from_integer(cauchy_bound(a).expect("nonzero"));
    let negative = if a.sign_at_zero() == Sign::NoSign {
        None
    } else {
        RationalInterval::new(-bound.clone(), zero.clone())
            .ok()
            .and_then(|iv| chain.count(&iv).ok())
    };
    if negative != a.degree() {
        fail(
            Check::RootsRealNegative,
            format!("{} negative roots for degree {:?}", negative.unwrap_or(0), a.degree()),
        );
    }

    if let Ok((min, max)) = annulus_bounds(a) {
        let total = chain.count_half_open(&-bound.clone(), &bound);
        let at = |x: &BigRational| usize::from(a.sign_at(x) == Sign::NoSign);
        let inner = chain.count_half_open(&-min.clone(), &min) - at(&min);
        let within_max = chain.count_half_open(&-max.clone(), &max) + at(&-max.clone());
        let outer = total - within_max;
        if inner > 0 || outer > 0 {
            fail(
                Check::AnnulusContainment,
                format!("{inner} roots with |t| < {min}, {outer} roots with |t| > {max}"),
            );
        }
    }

    let largest = largest_with_chain(&chain).ok().flatten();
    CellFacts { violations, largest }
}

/// Orders two roots given by isolating intervals of different polynomials,
/// refining until the enclosures separate. `None` if they could not be
/// separated within the budget (equal or extremely close roots).
fn compare_roots(
    p: &IntPolynomial,
    ip: &RationalInterval,
    q: &IntPolynomial,
    iq: &RationalInterval,
) -> Option<std::cmp::Ordering> {
    use std::cmp::Ordering;
    let mut ip = ip.clone();
    let mut iq = iq.clone();
    for _ in 0..400 {
        if ip.precedes(&iq) {
            return Some(Ordering::Less);
        }
        if iq.precedes(&ip) {
            return Some(Ordering::Greater);
        }
        if ip.is_point() && iq.is_point() {
            return Some(Ordering::Equal);
        }
        let target = |iv: &RationalInterval| iv.width() / BigRational::from_integer(2.into());
        if ip.width() >= iq.width() {
            ip = refine_root(p, &ip, &target(&ip)).ok()?;
        } else {
            iq = refine_root(q, &iq, &target(&iq)).ok()?;
        }
    }
    None
}

/// Strict alternation in `m`, strict interlacing in `n`, strict monotonicity
/// of `r_{n,m}` in both indices, per-polynomial structure, and monotonicity
/// of `m_0`, for `1 <= n <= n_max`, `1 <= m <= m_max`.
pub fn theorem_suite(source: &dyn AnmSource, n_max: u32, m_max: u32) -> SuiteReport {
    use std::cmp::Ordering;

    let extended = grid(n_max + 1, m_max + 1);
    let polys: HashMap<AnmIndex, IntPolynomial> =
        extended.iter().copied().zip(par::map(&extended, |&idx| source.anm(idx))).collect();
    let facts: HashMap<AnmIndex, CellFacts> = extended
        .iter()
        .copied()
        .zip(par::map(&extended, |idx| {
            cell_facts(*idx, &polys[idx], idx.n <= n_max && idx.m <= m_max)
        }))
        .collect();

    let cells = grid(n_max, m_max);
    let pairwise: Vec<Vec<Violation>> = par::map(&cells, |&idx| {
        let mut out = Vec::new();
        let mut fail = |check, witness: String| out.push(Violation { check, index: idx, witness });
        let a = &polys[&idx];
        for (check, f, g, want) in [
            (Check::AlternatesInM, a, &polys[&idx.next_m()], Relation::StrictlyAlternates),
            (Check::InterlacesInN, &polys[&idx.next_n()], a, Relation::StrictlyInterlaces),
        ] {
            match verify_interlacing(f, g) {
                Ok(r) if r.relation == want => {}
                Ok(r) => fail(
                    check,
                    format!("relation {}{}", r.relation, r.reason.map(|s| format!(" ({s})")).unwrap_or_default()),
                ),
                Err(e) => fail(check, e.to_string()),
            }
        }
        for (check, other, want) in [
            (Check::LargestRootDecreasingInM, idx.next_m(), Ordering::Greater),
            (Check::LargestRootIncreasingInN, idx.next_n(), Ordering::Less),
        ] {
            let ordering = match (&facts[&idx].largest, &facts[&other].largest) {
                (Some(r0), Some(r1)) => compare_roots(a, r0, &polys[&other], r1),
                _ => None,
            };
            if ordering != Some(want) {
                fail(check, format!("r_{{{},{}}} vs r_{{{},{}}}: {ordering:?}", idx.n, idx.m, other.n, other.m));
            }
        }
        out
    });

    let ns: Vec<u32> = (1..=n_max).collect();
    let m0: Vec<(u32, Option<u32>)> = ns
        .iter()
        .copied()
        .zip(par::map(&ns, |&n| compute_m0_with(source, n, default_m_cap(n)).ok().map(|c| c.m0)))
        .collect();

    let mut report = SuiteReport { n_max, m_max, ..Default::default() };
    for &idx in &cells {
        report.violations.extend(facts[&idx].violations.iter().cloned());
    }
    report.violations.extend(pairwise.into_iter().flatten());
    for &(n, value) in &m0 {
        if value.is_none() {
            report.violations.push(Violation {
                check: Check::M0Nondecreasing,
                index: AnmIndex::unchecked(n, 1),
                witness: format!("m_0({n}) could not be determined"),
            });
        }
    }
    for pair in m0.windows(2) {
        if let ((n, Some(a)), (_, Some(b))) = (pair[0], pair[1]) {
            if a > b {
                report.violations.push(Violation {
                    check: Check::M0Nondecreasing,
                    index: AnmIndex::unchecked(n, a),
                    witness: format!("m_0({n}) = {a} > m_0({}) = {b}", n + 1),
                });
            }
        }
    }
    let count = cells.len();
    for check in [
        Check::Degree,
        Check::PositiveCoefficients,
        Check::SquareFree,
        Check::RootsRealNegative,
        Check::AnnulusContainment,
        Check::AlternatesInM,
        Check::InterlacesInN,
        Check::LargestRootDecreasingInM,
        Check::LargestRootIncreasingInN,
    ] {
        report.tally(check, count);
    }
    report.tally(Check::M0Nondecreasing, m0.len().saturating_sub(1));
    report.m0 = m0;
    report
}

/// Both suites, violations ordered construction first.
pub fn verify_all(source: &dyn AnmSource, n_max: u32, m_max: u32) -> SuiteReport {
    let mut report = construction_suite(source, n_max, m_max);
    report.merge(theorem_suite(source, n_max, m_max));
    report
}

#[cfg(test)]
mod tests {
    use super::super::anm::{Exact, Perturbed};
    use super::*;

    #[test]
    fn small_grid_passes() {
        let r = verify_all(&Exact, 3, 3);
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.m0, vec![(1, Some(1)), (2, Some(3)), (3, Some(6))]);
        assert_eq!(r.checks_run[&Check::AlternatesInM], 9);
    }

    #[test]
    fn smallest_grid() {
        let r = verify_all(&Exact, 1, 1);
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn corrupted_coefficient_is_caught() {
        let src = Perturbed {
            target: AnmIndex::unchecked(2, 2),
            coeff: 1,
            delta: BigInt::from(1),
        };
        let r = verify_all(&src, 3, 3);
        assert!(!r.passed());
        assert!(r
            .violations
            .iter()
            .any(|v| v.check == Check::RecurrenceEqualsClosedForm && v.index == src.target));
    }
}

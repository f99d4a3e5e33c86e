//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use luqikeng_core::combin::eulerian_polynomial;
use luqikeng_core::exactalg::SturmChain;
use luqikeng_core::kernel::{
    is_member, kernel_eval, kernel_series_eval, series_terms_for, zero_witness_pair, FbhPoint,
    KernelEvaluator, KernelPoint,
};
use luqikeng_core::lukeng::{
    anm_closed, anm_recurrence, anm_series_oracle, conjecture_probe, largest_root, m0_table,
    nearest_int_n_log_n, quotient_taylor, verify_all, AnmIndex, Check, Perturbed,
};
use luqikeng_core::IntPolynomial;
use num_bigint::{BigInt, BigUint, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const TABLE1: [u32; 15] = [1, 3, 6, 8, 11, 14, 17, 20, 23, 26, 29, 32, 35, 38, 42];
const F: [i64; 15] = [1, 3, 6, 8, 11, 14, 17, 20, 23, 26, 30, 33, 37, 41, 44];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_luqikeng"))
        .args(args)
        .env_remove("LUQIKENG_MCAP")
        .output()
        .expect("binary runs")
}

fn idx(n: u32, m: u32) -> AnmIndex {
    AnmIndex::new(n, m).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table1_from_cli() -> Outcome {
    let start = Instant::now();
    let out = cli(&["m0", "--n-from", "1", "--n-to", "15", "--format", "csv"]);
    let elapsed = start.elapsed();
    ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let got: Vec<u32> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap_or("").parse().unwrap_or(0))
        .collect();
    ensure(got == TABLE1, || format!("got {got:?}"))?;
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("m0(1..15) = {got:?} in {elapsed:.2?}"))
}

fn nearest_integers() -> Outcome {
    let got: Vec<Option<i64>> = (1..=15).map(|n| nearest_int_n_log_n(n).value()).collect();
    ensure(got.iter().all(Option::is_some), || format!("undecided: {got:?}"))?;
    let got: Vec<i64> = got.into_iter().flatten().collect();
    ensure(got == F, || format!("got {got:?}"))?;
    Ok(format!("f(1..15) = {got:?}, every value certified"))
}

fn conjecture_comparison() -> Outcome {
    let start = Instant::now();
    let first = conjecture_probe(15, None).map_err(|e| e.to_string())?;
    for row in &first.rows {
        let f = row.f.value().ok_or_else(|| format!("f({}) undecided", row.n))?;
        let m0 = i64::from(row.m0);
        let ok = if row.n <= 10 { m0 == f } else { m0 < f };
        ensure(ok, || format!("n = {}: m0 = {m0}, f = {f}", row.n))?;
    }
    let wide = conjecture_probe(40, None).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    let last = wide.rows.last().unwrap();
    ensure(wide.bound_holds, || {
        let bad: Vec<u32> = wide.rows.iter().filter(|r| r.diff.is_none_or(|d| d > 0)).map(|r| r.n).collect();
        format!("m0 <= f fails or is undecided at n = {bad:?}")
    })?;
    Ok(format!(
        "m0 = f for n <= 10, m0 < f for 11..15; m0 <= f observed for n <= 40 (m0(40) = {}, f(40) = {}) in {elapsed:.2?}",
        last.m0,
        last.f.value().unwrap()
    ))
}

fn eulerian_numerators() -> Outcome {
    let expected: [&[i64]; 4] = [&[0, 1], &[0, 1, 1], &[0, 1, 4, 1], &[0, 1, 11, 11, 1]];
    for (n, want) in (1..=4).zip(expected) {
        let got = &eulerian_polynomial(n).map_err(|e| e.to_string())? * &IntPolynomial::from_i64s(&[0, 1]);
        ensure(got == IntPolynomial::from_i64s(want), || format!("n = {n}: got {:?}", got.coeffs()))?;
    }
    Ok("t, t^2+t, t^3+4t^2+t, t^4+11t^3+11t^2+t".into())
}

fn constructions_agree() -> Outcome {
    let mut count = 0;
    for n in 1..=10 {
        for m in 1..=10 {
            let i = idx(n, m);
            let rec = anm_recurrence(i);
            ensure(rec == anm_closed(i), || format!("{i}: recurrence and closed form differ"))?;
            let terms = (n + m + 5) as usize;
            let oracle: Vec<BigInt> =
                anm_series_oracle(i, terms).map_err(|e| e.to_string())?.into_iter().map(BigInt::from).collect();
            ensure(quotient_taylor(&rec, n + m + 1, terms) == oracle, || format!("{i}: series mismatch"))?;
            count += 1;
        }
    }
    Ok(format!("{count} instances, each to n+m+5 series terms"))
}

fn theorem_suite() -> Outcome {
    let report = verify_all(&luqikeng_core::lukeng::Exact, 10, 10);
    ensure(report.passed(), || format!("{} violations, first: {}", report.violations.len(), report.violations[0]))?;
    let out = cli(&["verify", "--n-max", "10", "--m-max", "10"]);
    ensure(out.status.code() == Some(0), || format!("verify exited {:?}", out.status.code()))?;
    let total: usize = report.checks_run.values().sum();
    Ok(format!("{} checks over {total} instances; CLI verify exit 0", report.checks_run.len()))
}

fn value_at_one() -> Outcome {
    for n in 1..=8u32 {
        for m in 1..=8u32 {
            let fact: BigUint = (1..=u64::from(n + m)).map(BigUint::from).product();
            let got = anm_recurrence(idx(n, m)).eval_int(&BigInt::one());
            ensure(got == BigInt::from(fact.clone()), || format!("({n}, {m}): {got} != {fact}"))?;
        }
    }
    Ok("A_{n,m}(1) = (n+m)! for 1 <= n, m <= 8".into())
}

fn random_point(rng: &mut StdRng, index: AnmIndex, mu: f64) -> FbhPoint {
    let mut c = |s: f64| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)) * s;
    let z: Vec<Complex64> = (0..index.n).map(|_| c(0.6)).collect();
    let mut zeta: Vec<Complex64> = (0..index.m).map(|_| c(1.0)).collect();
    let bound = (-mu * z.iter().map(|x| x.norm_sqr()).sum::<f64>()).exp().sqrt();
    let norm = zeta.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let radius = bound * rng.random_range(0.0..0.999);
    for x in &mut zeta {
        *x *= radius / norm;
    }
    FbhPoint::new(z, zeta)
}

fn kernel_checks() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    let (mut pairs, mut worst, mut worst_sym) = (0, 0f64, 0f64);
    while pairs < 1000 {
        let index = idx(rng.random_range(1..=6), rng.random_range(1..=6));
        let mu = rng.random_range(0.2..2.0);
        let p = random_point(&mut rng, index, mu);
        let q = random_point(&mut rng, index, mu);
        let (t, _) = KernelEvaluator::new(index, mu).unwrap().argument(&p, &q).unwrap();
        if t.norm() > 0.9 {
            continue;
        }
        pairs += 1;
        ensure(is_member(index, mu, &p).unwrap() && is_member(index, mu, &q).unwrap(), || "non-member drawn".into())?;
        let kp = KernelPoint { index, mu, p, q };
        let k = kernel_eval(&kp).map_err(|e| e.to_string())?;
        let s = kernel_series_eval(&kp, series_terms_for(index, t.norm(), 1e-30)).map_err(|e| e.to_string())?;
        worst = worst.max((k - s).norm() / k.norm());
        let diag = kernel_eval(&KernelPoint { q: kp.p.clone(), ..kp.clone() }).map_err(|e| e.to_string())?;
        ensure(diag.re > 0.0 && diag.im.abs() <= 1e-12 * diag.re, || format!("{index}: diagonal {diag}"))?;
        let swapped = kernel_eval(&KernelPoint { p: kp.q.clone(), q: kp.p.clone(), ..kp }).map_err(|e| e.to_string())?;
        worst_sym = worst_sym.max((k - swapped.conj()).norm() / k.norm());
    }
    ensure(worst <= 1e-9, || format!("closed form vs series relative {worst:e}"))?;
    ensure(worst_sym <= 1e-12, || format!("Hermitian defect {worst_sym:e}"))?;
    Ok(format!("1000 pairs, worst relative {worst:.1e}, Hermitian defect {worst_sym:.1e}"))
}

fn zero_witness() -> Outcome {
    let width = BigRational::new(BigInt::one(), BigInt::one() << 60);
    let m0s: Vec<u32> = m0_table(&(1..=10).collect::<Vec<_>>(), None)
        .into_iter()
        .map(|c| c.map(|c| c.m0).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let grid: Vec<BigRational> = (1..=1000).map(|k| BigRational::new(BigInt::from(-k), BigInt::from(1001))).collect();
    let (mut witnesses, mut worst, mut clean) = (0, 0f64, 0);
    for (n, &m0) in (1..=10).zip(&m0s) {
        for m in 1..m0 {
            let i = idx(n, m);
            let root = largest_root(i, &width).map_err(|e| e.to_string())?;
            let r = (root.lo_f64() + root.hi_f64()) / 2.0;
            let kp = zero_witness_pair(i, 1.0, r).map_err(|e| e.to_string())?;
            let k = kernel_eval(&kp).map_err(|e| e.to_string())?;
            let scale = KernelEvaluator::new(i, 1.0).unwrap().scale(&kp.p, &kp.q).unwrap();
            let rel = k.norm() / scale;
            ensure(rel <= 1e-9, || format!("{i}: |K| / scale = {rel:e}"))?;
            worst = worst.max(rel);
            witnesses += 1;
        }
        for m in m0..=m0 + 5 {
            let a = anm_recurrence(idx(n, m));
            let signs: Vec<Sign> = grid.iter().map(|x| a.sign_at(x)).collect();
            ensure(signs.iter().all(|s| *s == signs[0] && *s != Sign::NoSign), || {
                format!("({n}, {m}): sign change on the grid")
            })?;
            // (-1, 0] equals (-1, 0) here since A(0) > 0
            let roots = SturmChain::new(&a).map_err(|e| e.to_string())?.count_half_open(&-BigRational::one(), &BigRational::zero());
            ensure(a.sign_at(&BigRational::zero()) == Sign::Plus && roots == 0, || format!("({n}, {m}): {roots} roots"))?;
            clean += 1;
        }
    }
    Ok(format!("{witnesses} witnesses, worst |K|/scale {worst:.1e}; {clean} Lu Qi-Keng cases root-free on grid and by Sturm"))
}

fn corruption_detected() -> Outcome {
    let source = Perturbed { target: idx(3, 2), coeff: 1, delta: BigInt::from(1) };
    let report = verify_all(&source, 4, 4);
    ensure(!report.passed(), || "library suite missed the corruption".into())?;
    ensure(report.violations.iter().any(|v| v.check == Check::RecurrenceEqualsClosedForm), || "no identity named".into())?;
    let out = cli(&["verify", "--n-max", "4", "--m-max", "4", "--corrupt", "3:2:1"]);
    ensure(out.status.code() == Some(1), || format!("verify exited {:?}", out.status.code()))?;
    let text = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = text.lines().filter(|l| l.contains("violation:")).collect();
    let line = lines
        .iter()
        .find(|l| l.contains("recurrence equals closed form at (n=3, m=2)"))
        .ok_or_else(|| format!("no witness names the corrupted instance: {lines:?}"))?;
    Ok(format!("exit 1, {} witnesses, e.g. {}", lines.len(), line.trim()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("m0 table for n = 1..15", table1_from_cli),
        ("certified nearest integers f(n)", nearest_integers),
        ("m0 against f", conjecture_comparison),
        ("Eulerian numerators", eulerian_numerators),
        ("recurrence, closed form, series oracle", constructions_agree),
        ("theorem suite and verify", theorem_suite),
        ("value at t = 1", value_at_one),
        ("kernel closed form against series", kernel_checks),
        ("zero witnesses and root-free cases", zero_witness),
        ("corrupted coefficient detected", corruption_detected),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

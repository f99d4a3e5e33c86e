use luqikeng_core::lukeng::{verify_all, AnmIndex, AnmSource, Exact, Perturbed};
use num_bigint::BigInt;
use serde_json::json;

use crate::args::VerifyArgs;
use crate::error::{CliError, Result};
use crate::inputs;
use crate::output::{Output, Table};

/// `n:m:i[:delta]`, delta defaulting to 1.
fn parse_corruption(s: &str) -> Result<Perturbed> {
    let bad = || CliError::Usage(format!("expected n:m:i[:delta], got {s:?}"));
    let parts: Vec<&str> = s.split(':').collect();
    if !(3..=4).contains(&parts.len()) {
        return Err(bad());
    }
    let n = parts[0].parse().map_err(|_| bad())?;
    let m = parts[1].parse().map_err(|_| bad())?;
    let coeff = parts[2].parse().map_err(|_| bad())?;
    let delta = match parts.get(3) {
        Some(d) => d.parse::<BigInt>().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    Ok(Perturbed { target: AnmIndex::new(n, m).map_err(|_| bad())?, coeff, delta })
}

pub fn verify(args: &VerifyArgs) -> Result<Output> {
    let corrupted = args.corrupt.as_deref().map(parse_corruption).transpose()?;
    let source: &dyn AnmSource = match &corrupted {
        Some(p) => p,
        None => &Exact,
    };
    let report = verify_all(source, args.n_max, args.m_max);
    let checks: Vec<_> = report
        .checks_run
        .iter()
        .map(|(check, count)| {
            let failed = report.violations.iter().filter(|v| v.check == *check).count();
            json!({ "check": check.name(), "instances": count, "violations": failed })
        })
        .collect();
    let violations: Vec<_> = report
        .violations
        .iter()
        .map(|v| json!({ "check": v.check.name(), "n": v.index.n, "m": v.index.m, "witness": v.witness }))
        .collect();
    let mut inputs = inputs! { "n_max" => args.n_max, "m_max" => args.m_max };
    if let Some(c) = &args.corrupt {
        inputs.insert("corrupt".into(), json!(c));
    }
    let mut out = Output::new(
        "verify",
        inputs,
        json!({
            "passed": report.passed(),
            "checks": checks,
            "violations": violations,
            "m0": report.m0.iter().map(|(n, m0)| json!({ "n": n, "m0": m0 })).collect::<Vec<_>>(),
        }),
    );

    let mut plain = String::new();
    out.table = Table::new(["check", "instances", "violations"]);
    for (check, count) in &report.checks_run {
        let failed = report.violations.iter().filter(|v| v.check == *check).count();
        let mark = if failed == 0 { "ok  " } else { "FAIL" };
        plain.push_str(&format!("{mark} {check} ({count} instances)\n"));
        out.table.push(vec![check.name().to_string(), count.to_string(), failed.to_string()]);
    }
    for v in &report.violations {
        plain.push_str(&format!("violation: {v}\n"));
    }
    plain.push_str(if report.passed() { "all checks passed\n" } else { "verification FAILED\n" });
    out.plain = plain;
    out.status = u8::from(!report.passed());
    Ok(out)
}

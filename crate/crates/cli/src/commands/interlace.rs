use luqikeng_core::exactalg::IntPolynomial;
use luqikeng_core::lukeng::{anm_recurrence, verify_interlacing, Relation};
use num_bigint::BigInt;
use serde_json::json;

use super::parse_index;
use crate::args::InterlaceArgs;
use crate::error::{CliError, Result};
use crate::inputs;
use crate::output::{Output, Table};
use crate::record::{interval_json, rational_str};

/// `n:m` for `A_{n,m}`, otherwise comma-separated coefficients, lowest first.
fn operand(s: &str) -> Result<IntPolynomial> {
    if s.contains(':') {
        return Ok(anm_recurrence(parse_index(s)?));
    }
    let coeffs = s
        .split(',')
        .map(|c| c.trim().parse::<BigInt>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("expected n:m or integer coefficients c0,c1,..., got {s:?}")))?;
    Ok(IntPolynomial::new(coeffs))
}

pub fn interlace(args: &InterlaceArgs) -> Result<Output> {
    let f = operand(&args.f)?;
    let g = operand(&args.g)?;
    let report = verify_interlacing(&f, &g)?;
    let witness: Vec<_> = report
        .witness
        .iter()
        .map(|w| {
            let mut v = interval_json(&w.interval);
            v["owner"] = json!(w.owner.as_str());
            v
        })
        .collect();
    let mut out = Output::new(
        "interlace",
        inputs! { "f" => args.f, "g" => args.g },
        json!({
            "f": f.to_string(),
            "g": g.to_string(),
            "relation": report.relation.as_str(),
            "strict": report.relation.is_strict(),
            "witness": witness,
            "reason": report.reason,
        }),
    );
    let mut plain = format!("f = {f}\ng = {g}\nrelation: {}\n", report.relation);
    if let Some(reason) = &report.reason {
        plain.push_str(&format!("reason: {reason}\n"));
    }
    out.table = Table::new(["k", "owner", "lo", "hi", "approx"]);
    for (k, w) in report.witness.iter().enumerate() {
        plain.push_str(&format!(
            "  {:<3} [{}, {}] ~ {:.9}\n",
            w.owner.as_str(),
            w.interval.lo(),
            w.interval.hi(),
            w.interval.midpoint_f64()
        ));
        out.table.push(vec![
            (k + 1).to_string(),
            w.owner.as_str().to_string(),
            rational_str(w.interval.lo()),
            rational_str(w.interval.hi()),
            w.interval.midpoint_f64().to_string(),
        ]);
    }
    out.plain = plain;
    out.status = u8::from(report.relation == Relation::Fails);
    Ok(out)
}

use luqikeng_core::lukeng::{conjecture_probe, NearestInteger};
use serde_json::json;

use crate::args::ConjecturesArgs;
use crate::error::Result;
use crate::inputs;
use crate::output::{Output, Table};
use crate::record::rational_str;
use crate::Context;

pub fn conjectures(args: &ConjecturesArgs, ctx: &Context) -> Result<Output> {
    let report = conjecture_probe(args.n_max, ctx.m_cap)?;
    let rows: Vec<_> = report
        .rows
        .iter()
        .map(|r| {
            let (lo, hi) = r.f.enclosure();
            json!({
                "n": r.n,
                "m0": r.m0,
                "f": r.f.value(),
                "f_tie": matches!(r.f, NearestInteger::Tie { .. }),
                "f_enclosure": { "lo": rational_str(lo), "hi": rational_str(hi) },
                "diff": r.diff,
                "strict_increase": r.strict_increase,
                "r_fixed_m": r.r_fixed_m,
            })
        })
        .collect();
    let mut out = Output::new(
        "conjectures",
        inputs! { "n_max" => args.n_max, "m_cap" => ctx.m_cap },
        json!({
            "fixed_m": report.fixed_m,
            "rows": rows,
            "bound_holds": report.bound_holds,
            "equality_exactly_up_to_10": report.equality_exactly_up_to_10,
            "strictly_increasing": report.strictly_increasing,
            "ties": report.ties,
        }),
    );

    let r_headers: Vec<String> = report.fixed_m.iter().map(|m| format!("r_n_{m}")).collect();
    let mut header = vec!["n".to_string(), "m0".into(), "f".into(), "diff".into(), "strict_increase".into()];
    header.extend(r_headers.iter().cloned());
    out.table = Table::new(header);
    let mut plain = format!("{:>4} {:>5} {:>5} {:>5} {:>7}", "n", "m0", "f", "diff", "strict");
    for h in &r_headers {
        plain.push_str(&format!(" {h:>12}"));
    }
    plain.push('\n');
    for r in &report.rows {
        let f = r.f.value().map_or("tie".to_string(), |v| v.to_string());
        let diff = r.diff.map_or("-".to_string(), |d| d.to_string());
        let strict = r.strict_increase.map_or("-".to_string(), |s| if s { "yes" } else { "no" }.to_string());
        plain.push_str(&format!("{:>4} {:>5} {:>5} {:>5} {:>7}", r.n, r.m0, f, diff, strict));
        for x in &r.r_fixed_m {
            plain.push_str(&format!(" {x:>12.4e}"));
        }
        plain.push('\n');
        let mut row = vec![
            r.n.to_string(),
            r.m0.to_string(),
            f,
            r.diff.map(|d| d.to_string()).unwrap_or_default(),
            r.strict_increase.map(|s| s.to_string()).unwrap_or_default(),
        ];
        row.extend(r.r_fixed_m.iter().map(f64::to_string));
        out.table.push(row);
    }
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    plain.push_str(&format!("m_0(n) <= f(n) on every row: {}\n", yes_no(report.bound_holds)));
    plain.push_str(&format!(
        "m_0(n) = f(n) exactly for n <= 10 and < f(n) beyond: {}\n",
        yes_no(report.equality_exactly_up_to_10)
    ));
    plain.push_str(&format!("m_0 strictly increasing: {}\n", yes_no(report.strictly_increasing)));
    if !report.ties.is_empty() {
        plain.push_str(&format!("undecided nearest integer (tie) at n = {:?}\n", report.ties));
    }
    out.plain = plain;
    Ok(out)
}

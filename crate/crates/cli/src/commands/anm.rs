use luqikeng_core::lukeng::{all_roots, anm_recurrence, AnmIndex};
use serde_json::json;

use crate::error::Result;
use crate::inputs;
use crate::output::{Output, Table};
use crate::record::{interval_json, rational_str};
use crate::Context;

pub fn anm(index: AnmIndex) -> Result<Output> {
    let poly = anm_recurrence(index);
    let coeffs: Vec<String> = poly.coeffs().iter().map(ToString::to_string).collect();
    let mut out = Output::new(
        "anm",
        inputs! { "n" => index.n, "m" => index.m },
        json!({
            "coefficients": coeffs,
            "degree": poly.degree(),
            "polynomial": poly.to_string(),
        }),
    );
    out.plain = coeffs.join(" ") + "\n";
    out.table = Table::new(["power", "coefficient"]);
    for (i, c) in coeffs.iter().enumerate() {
        out.table.push(vec![i.to_string(), c.clone()]);
    }
    Ok(out)
}

pub fn roots(index: AnmIndex, ctx: &Context) -> Result<Output> {
    let roots = all_roots(index, &ctx.width)?;
    let in_unit = roots.iter().filter(|r| r.in_unit_interval).count();
    let rows: Vec<_> = roots
        .iter()
        .map(|r| {
            let mut v = interval_json(&r.interval);
            v["in_unit_interval"] = json!(r.in_unit_interval);
            v
        })
        .collect();
    let mut out = Output::new(
        "roots",
        inputs! { "n" => index.n, "m" => index.m, "width" => rational_str(&ctx.width) },
        json!({
            "polynomial": anm_recurrence(index).to_string(),
            "roots": rows,
            "roots_in_unit_interval": in_unit,
            "lu_qi_keng": in_unit == 0,
        }),
    );
    let mut plain = format!("{index} = {}\n", anm_recurrence(index));
    out.table = Table::new(["k", "lo", "hi", "lo_approx", "hi_approx", "exact", "in_unit_interval"]);
    for (k, r) in roots.iter().enumerate() {
        let iv = &r.interval;
        let mut line = if r.exact {
            format!("root {}: {} (exact)", k + 1, rational_str(iv.lo()))
        } else {
            format!("root {}: [{}, {}] ~ {:.9}", k + 1, iv.lo(), iv.hi(), iv.midpoint_f64())
        };
        if r.in_unit_interval {
            line.push_str("  in (-1, 0)");
        }
        plain.push_str(&line);
        plain.push('\n');
        out.table.push(vec![
            (k + 1).to_string(),
            rational_str(iv.lo()),
            rational_str(iv.hi()),
            iv.lo_f64().to_string(),
            iv.hi_f64().to_string(),
            r.exact.to_string(),
            r.in_unit_interval.to_string(),
        ]);
    }
    plain.push_str(&format!(
        "{in_unit} of {} roots in (-1, 0): D_{{{},{}}} is {}Lu Qi-Keng\n",
        roots.len(),
        index.n,
        index.m,
        if in_unit == 0 { "" } else { "not " }
    ));
    out.plain = plain;
    Ok(out)
}

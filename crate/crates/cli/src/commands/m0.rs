use luqikeng_core::exactalg::RationalInterval;
use luqikeng_core::lukeng::{m0_table_to_width, LuQiKengVerdict, M0Certificate};
use serde_json::{json, Value};

use crate::args::M0Args;
use crate::error::{CliError, Result};
use crate::inputs;
use crate::output::{Output, Table};
use crate::record::{interval_json, rational_str};
use crate::Context;

fn certificates(n_from: u32, n_to: u32, ctx: &Context) -> Result<Vec<M0Certificate>> {
    if n_from > n_to {
        return Err(CliError::Usage(format!("--n-from {n_from} exceeds --n-to {n_to}")));
    }
    let ns: Vec<u32> = (n_from..=n_to).collect();
    m0_table_to_width(&ns, ctx.m_cap, &ctx.width)
        .into_iter()
        .collect::<Result<_, _>>()
        .map_err(CliError::from)
}

fn verdict_json(v: &LuQiKengVerdict) -> Value {
    json!({
        "m": v.index.m,
        "lu_qi_keng": v.is_lu_qi_keng,
        "roots_in_unit_interval": v.roots_in_unit_interval,
        "root_at_minus_one": v.root_at_minus_one,
        "largest_root": interval_json(&v.largest_root),
    })
}

fn enclosure_text(iv: &RationalInterval) -> String {
    if iv.is_point() {
        format!("{} (exact)", iv.lo())
    } else {
        format!("[{}, {}] ~ {:.9}", iv.lo(), iv.hi(), iv.midpoint_f64())
    }
}

pub fn m0(args: &M0Args, ctx: &Context) -> Result<Output> {
    let certs = certificates(args.n_from, args.n_to, ctx)?;
    let rows: Vec<Value> = certs
        .iter()
        .map(|c| {
            let (at, below) = c.bracketing_roots();
            let mut row = json!({
                "n": c.n,
                "m0": c.m0,
                "r_at_m0": interval_json(at),
                "r_below_m0": below.map(interval_json),
            });
            if args.certify {
                row["certificate"] = json!({
                    "below": c.below.iter().map(verdict_json).collect::<Vec<_>>(),
                    "at": verdict_json(&c.at),
                });
            }
            row
        })
        .collect();
    let mut out = Output::new(
        "m0",
        inputs! {
            "n_from" => args.n_from,
            "n_to" => args.n_to,
            "certify" => args.certify,
            "width" => rational_str(&ctx.width),
            "m_cap" => ctx.m_cap,
        },
        json!({ "rows": rows }),
    );

    let mut plain = String::new();
    for c in &certs {
        let (at, below) = c.bracketing_roots();
        plain.push_str(&format!("n = {}: m_0 = {}\n", c.n, c.m0));
        plain.push_str(&format!("  r_{{{},{}}} in {}\n", c.n, c.m0, enclosure_text(at)));
        if let Some(b) = below {
            plain.push_str(&format!("  r_{{{},{}}} in {}\n", c.n, c.m0 - 1, enclosure_text(b)));
        }
        if args.certify {
            for v in c.below.iter().chain([&c.at]) {
                plain.push_str(&format!(
                    "    m = {}: {} root(s) in (-1, 0){}\n",
                    v.index.m,
                    v.roots_in_unit_interval,
                    if v.root_at_minus_one { ", root at -1" } else { "" }
                ));
            }
        }
    }
    out.plain = plain;

    out.table = Table::new([
        "n", "m0", "r_at_m0_lo", "r_at_m0_hi", "r_at_m0_approx", "r_below_lo", "r_below_hi", "r_below_approx",
    ]);
    for c in &certs {
        let (at, below) = c.bracketing_roots();
        let mut row = vec![
            c.n.to_string(),
            c.m0.to_string(),
            rational_str(at.lo()),
            rational_str(at.hi()),
            at.midpoint_f64().to_string(),
        ];
        match below {
            Some(b) => row.extend([rational_str(b.lo()), rational_str(b.hi()), b.midpoint_f64().to_string()]),
            None => row.extend([String::new(), String::new(), String::new()]),
        }
        out.table.push(row);
    }
    Ok(out)
}

/// The two-row layout of the published table: `n` across the top and
/// `m_0(n)` beneath.
pub fn table1(ctx: &Context) -> Result<Output> {
    let certs = certificates(1, 15, ctx)?;
    let mut out = Output::new(
        "table1",
        inputs! { "n_from" => 1, "n_to" => 15 },
        json!({
            "n": certs.iter().map(|c| c.n).collect::<Vec<_>>(),
            "m0": certs.iter().map(|c| c.m0).collect::<Vec<_>>(),
        }),
    );
    let mut table = Table::new(std::iter::once("n".to_string()).chain(certs.iter().map(|c| c.n.to_string())));
    table.push(std::iter::once("m_0(n)".to_string()).chain(certs.iter().map(|c| c.m0.to_string())).collect());
    out.plain = table.to_csv()?;
    out.table = table;
    Ok(out)
}

use luqikeng_core::kernel::{series_terms_for, zero_witness_pair, FbhPoint, KernelEvaluator, KernelPoint};
use luqikeng_core::lukeng::{all_roots, AnmIndex};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::args::KernelArgs;
use crate::error::{CliError, Result};
use crate::inputs;
use crate::output::{Output, Table};

/// `--oracle` succeeds when `|K - series|` is within this fraction of the
/// closed-form scale, which stays meaningful where `K` itself vanishes.
const ORACLE_TOL: f64 = 1e-9;
/// `|K|` relative to the closed-form scale below which a witness counts as a zero.
const ZERO_TOL: f64 = 1e-9;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairSpec {
    mu: Option<f64>,
    z: Vec<[f64; 2]>,
    zeta: Vec<[f64; 2]>,
    z_prime: Vec<[f64; 2]>,
    zeta_prime: Vec<[f64; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PairInput {
    One(PairSpec),
    Many(Vec<PairSpec>),
}

fn complexes(v: &[[f64; 2]]) -> Vec<Complex64> {
    v.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
}

fn parse_pairs(text: &str, index: AnmIndex, default_mu: f64) -> Result<Vec<KernelPoint>> {
    let specs = match serde_json::from_str::<PairInput>(text)? {
        PairInput::One(p) => vec![p],
        PairInput::Many(v) => v,
    };
    if specs.is_empty() {
        return Err(CliError::Usage("no point pairs given".into()));
    }
    Ok(specs
        .into_iter()
        .map(|s| KernelPoint {
            index,
            mu: s.mu.unwrap_or(default_mu),
            p: FbhPoint::new(complexes(&s.z), complexes(&s.zeta)),
            q: FbhPoint::new(complexes(&s.z_prime), complexes(&s.zeta_prime)),
        })
        .collect())
}

fn complex_json(c: Complex64) -> Value {
    json!([c.re, c.im])
}

fn real_text(x: f64) -> String {
    if x == 0.0 || (1e-4..1e6).contains(&x.abs()) {
        x.to_string()
    } else {
        format!("{x:e}")
    }
}

fn complex_text(c: Complex64) -> String {
    let sign = if c.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {sign} {}i", real_text(c.re), real_text(c.im.abs()))
}

pub fn kernel_eval(args: &KernelArgs) -> Result<Output> {
    let index = AnmIndex::new(args.index.n, args.index.m)?;
    let mut witness_root = None;
    let pairs = if let Some(path) = &args.points {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { context: format!("reading {}", path.display()), source })?;
        parse_pairs(&text, index, args.mu)?
    } else if let Some(text) = &args.pair {
        parse_pairs(text, index, args.mu)?
    } else if args.zero_witness {
        let width = BigRational::new(BigInt::from(1), BigInt::from(10).pow(15));
        let root = all_roots(index, &width)?
            .into_iter()
            .rev()
            .find(|r| r.in_unit_interval)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "{index} has no root in (-1, 0), so D_{{{},{}}} is Lu Qi-Keng and no zero exists",
                    index.n, index.m
                ))
            })?;
        let r = root.interval.midpoint_f64();
        witness_root = Some(r);
        vec![zero_witness_pair(index, args.mu, r)?]
    } else {
        vec![KernelPoint { index, mu: args.mu, p: FbhPoint::origin(index), q: FbhPoint::origin(index) }]
    };

    let mut results = Vec::with_capacity(pairs.len());
    let mut plain = String::new();
    let mut header = vec!["pair", "mu", "t_re", "t_im", "k_re", "k_im", "k_abs", "scale"];
    if args.oracle {
        header.extend(["series_re", "series_im", "series_terms", "rel_diff"]);
    }
    let mut table = Table::new(header);
    let mut status = 0;
    for (i, kp) in pairs.iter().enumerate() {
        let ev = KernelEvaluator::new(index, kp.mu)?;
        let (t, _) = ev.argument(&kp.p, &kp.q)?;
        let k = ev.eval(&kp.p, &kp.q)?;
        let scale = ev.scale(&kp.p, &kp.q)?;
        let mut row = json!({
            "mu": kp.mu,
            "t": complex_json(t),
            "value": complex_json(k),
            "abs": k.norm(),
            "scale": scale,
            "relative_to_scale": k.norm() / scale,
        });
        if pairs.len() > 1 {
            plain.push_str(&format!("pair {}\n", i + 1));
        }
        plain.push_str(&format!("t = {}\nK = {}\n|K| = {}\n", complex_text(t), complex_text(k), real_text(k.norm())));
        let mut csv_row = vec![
            (i + 1).to_string(),
            kp.mu.to_string(),
            t.re.to_string(),
            t.im.to_string(),
            k.re.to_string(),
            k.im.to_string(),
            k.norm().to_string(),
            scale.to_string(),
        ];
        if args.oracle {
            let terms = series_terms_for(index, t.norm(), 1e-30);
            let s = ev.eval_series(&kp.p, &kp.q, terms)?;
            let diff = (k - s).norm();
            let rel = if diff == 0.0 { 0.0 } else { diff / k.norm() };
            let agree = diff <= ORACLE_TOL * scale;
            if !agree {
                status = 1;
            }
            row["oracle"] = json!({
                "value": complex_json(s),
                "terms": terms,
                "relative_difference": rel,
                "difference_to_scale": diff / scale,
                "agree": agree,
            });
            plain.push_str(&format!(
                "series ({terms} terms) = {}\nrelative difference = {rel:e}, to scale = {:e} ({})\n",
                complex_text(s),
                diff / scale,
                if agree { "agree" } else { "DISAGREE" }
            ));
            csv_row.extend([s.re.to_string(), s.im.to_string(), terms.to_string(), rel.to_string()]);
        }
        if let Some(r) = witness_root {
            let vanishes = k.norm() <= ZERO_TOL * scale;
            if !vanishes {
                status = 1;
            }
            row["witness"] = json!({ "root": r, "vanishes": vanishes });
            plain.push_str(&format!(
                "witness from root {r}: |K| / scale = {:e} ({})\n",
                k.norm() / scale,
                if vanishes { "zero" } else { "NOT zero" }
            ));
        }
        results.push(row);
        table.push(csv_row);
    }

    let mut inputs = inputs! { "n" => index.n, "m" => index.m, "oracle" => args.oracle, "zero_witness" => args.zero_witness };
    if let Some(path) = &args.points {
        inputs.insert("points".into(), json!(path.display().to_string()));
    } else if let Some(p) = &args.pair {
        inputs.insert("pair".into(), json!(p));
    }
    if args.points.is_none() && args.pair.is_none() {
        inputs.insert("mu".into(), json!(args.mu));
    }
    let mut out = Output::new("kernel-eval", inputs, json!({ "pairs": results }));
    out.plain = plain;
    out.table = table;
    out.status = status;
    Ok(out)
}

//! The JSON envelope shared by all subcommands. Exact integers and rationals
//! travel as decimal strings (`"p/q"` for non-integers) so that parsing a
//! record gives back the identical values.

use std::collections::BTreeMap;
use std::str::FromStr;

use luqikeng_core::RationalInterval;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    /// Unix seconds; absent under `--no-timestamp`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub inputs: BTreeMap<String, Value>,
    pub results: Value,
}

impl OutputRecord {
    pub fn new(command: &str, inputs: BTreeMap<String, Value>, results: Value) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            generated_at: None,
            inputs,
            results,
        }
    }
}

pub fn rational_str(x: &BigRational) -> String {
    x.to_string()
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let x = BigRational::from_str(s).ok()?;
    // only the canonical spelling round-trips
    (x.to_string() == s).then_some(x)
}

pub fn integer_str(x: &BigInt) -> String {
    x.to_string()
}

pub fn approx(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `{"lo": "p/q", "hi": "p/q", "lo_approx": .., "hi_approx": .., "exact": ..}`
pub fn interval_json(iv: &RationalInterval) -> Value {
    json!({
        "lo": rational_str(iv.lo()),
        "hi": rational_str(iv.hi()),
        "lo_approx": approx(iv.lo()),
        "hi_approx": approx(iv.hi()),
        "exact": iv.is_point(),
    })
}

pub fn parse_interval(v: &Value) -> Option<RationalInterval> {
    let lo = parse_rational(v.get("lo")?.as_str()?)?;
    let hi = parse_rational(v.get("hi")?.as_str()?)?;
    RationalInterval::new(lo, hi).ok()
}

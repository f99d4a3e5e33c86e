//! Command-line front end: reproduces the threshold tables, runs the
//! verification suites and evaluates the kernel, with plain, JSON and CSV
//! renderings of every result.

pub mod args;
pub mod commands;
pub mod error;
pub mod output;
pub mod record;

use std::str::FromStr;
use std::time::{SystemTime, UNIX_EPOCH};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

pub use args::{Cli, Command, Format};
pub use error::{CliError, Result};
pub use output::{Output, Table};
pub use record::OutputRecord;

/// Settings shared by every subcommand.
#[derive(Clone, Debug)]
pub struct Context {
    pub width: BigRational,
    pub m_cap: Option<u32>,
}

/// `p/q`, an integer, or a decimal with optional exponent (`0.001`, `1e-9`).
pub fn parse_width(s: &str) -> Result<BigRational> {
    let x = BigRational::from_str(s).ok().or_else(|| parse_decimal(s));
    match x {
        Some(x) if x.is_positive() => Ok(x),
        _ => Err(CliError::Usage(format!("--width must be a positive number, got {s:?}"))),
    }
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((a, b)) => (a, b.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits = format!("{int}{frac}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return None;
    }
    let value = BigRational::from_integer(BigInt::from_str(&digits).ok()?);
    let shift = exp - frac.len() as i32;
    let ten = BigRational::from_integer(10.into());
    Some(if shift >= 0 { value * num_traits::pow(ten, shift as usize) } else { value / num_traits::pow(ten, (-shift) as usize) })
}

/// Runs one parsed invocation.
pub fn run(cli: &Cli) -> Result<Output> {
    let ctx = Context { width: parse_width(&cli.global.width)?, m_cap: cli.global.m_cap };
    if ctx.m_cap == Some(0) {
        return Err(CliError::Usage("the m cap must be at least 1".into()));
    }
    let jobs = cli.global.jobs.map(usize::from);
    let mut out = luqikeng_core::par::with_jobs(jobs, || commands::dispatch(&cli.command, &ctx))?;
    if !cli.global.no_timestamp {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        out.record.generated_at = Some(now);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn widths() {
        assert_eq!(parse_width("1/1000").unwrap(), q(1, 1000));
        assert_eq!(parse_width("0.001").unwrap(), q(1, 1000));
        assert_eq!(parse_width("1e-9").unwrap(), q(1, 1_000_000_000));
        assert_eq!(parse_width("2.5E1").unwrap(), q(25, 1));
        assert_eq!(parse_width("3").unwrap(), q(3, 1));
        for bad in ["0", "-1/2", "abc", "", "1e", "."] {
            assert!(parse_width(bad).is_err(), "{bad}");
        }
    }
}

mod anm;
mod conjectures;
mod interlace;
mod kernel;
mod m0;
mod verify;

use luqikeng_core::lukeng::AnmIndex;

use crate::args::Command;
use crate::error::{CliError, Result};
use crate::output::Output;
use crate::Context;

pub fn dispatch(command: &Command, ctx: &Context) -> Result<Output> {
    match command {
        Command::Anm(a) => anm::anm(index(a.n, a.m)?),
        Command::Roots(a) => anm::roots(index(a.n, a.m)?, ctx),
        Command::M0(a) => m0::m0(a, ctx),
        Command::Table1 => m0::table1(ctx),
        Command::Interlace(a) => interlace::interlace(a),
        Command::Verify(a) => verify::verify(a),
        Command::Conjectures(a) => conjectures::conjectures(a, ctx),
        Command::KernelEval(a) => kernel::kernel_eval(a),
    }
}

fn index(n: u32, m: u32) -> Result<AnmIndex> {
    Ok(AnmIndex::new(n, m)?)
}

/// `n:m` as an index.
pub(crate) fn parse_index(s: &str) -> Result<AnmIndex> {
    let bad = || CliError::Usage(format!("expected n:m with n, m >= 1, got {s:?}"));
    let (n, m) = s.split_once(':').ok_or_else(bad)?;
    let n = n.trim().parse().map_err(|_| bad())?;
    let m = m.trim().parse().map_err(|_| bad())?;
    AnmIndex::new(n, m).map_err(|_| bad())
}

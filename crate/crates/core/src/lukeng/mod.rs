//! The polynomials `A_{n,m}(t)` defined by
//! `d^m/dt^m Li_{-n}(t) = A_{n,m}(t) / (1 - t)^{n+m+1}`, their structural
//! properties, and the Lu Qi-Keng decision for `D_{n,m}`.
//!
//! `D_{n,m}` is Lu Qi-Keng iff `A_{n,m}` has no root in `(-1, 0)`; its roots
//! are real, negative and simple, and the largest one `r_{n,m}` decreases
//! strictly in `m`, so `m_0(n) = min { m : r_{n,m} <= -1 }` is a threshold.

mod anm;
mod conjecture;
mod interlace;
mod suite;
mod verdict;

use std::fmt;

use crate::error::{Error, Result};

pub use anm::{
    anm_closed, anm_recurrence, anm_row, anm_series_oracle, cross_recurrence_check,
    cross_recurrence_holds, quotient_taylor, recurrence_step, AnmSource, Exact, Perturbed,
};
pub use conjecture::{
    conjecture_probe, ln_enclosure, nearest_int_n_log_n, ConjectureReport, ConjectureRow,
    NearestInteger,
};
pub use interlace::{verify_interlacing, InterlacingReport, Owner, Relation, WitnessRoot};
pub use suite::{construction_suite, theorem_suite, verify_all, Check, SuiteReport, Violation};
pub use verdict::{
    all_roots, compute_m0, compute_m0_to_width, compute_m0_with, default_m_cap, default_width,
    is_lu_qi_keng, largest_root, m0_table, m0_table_to_width, verdict_for, verdict_sturm,
    LuQiKengVerdict,
    M0Certificate, RootEnclosure,
};

/// Indices `(n, m)` of `D_{n,m}`: base dimension `n`, fiber dimension `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnmIndex {
    pub n: u32,
    pub m: u32,
}

impl AnmIndex {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::OutOfRange {
                what: "index",
                detail: format!("(n, m) = ({n}, {m}); both must be at least 1"),
            });
        }
        Ok(Self { n, m })
    }

    pub(crate) fn unchecked(n: u32, m: u32) -> Self {
        debug_assert!(n >= 1 && m >= 1);
        Self { n, m }
    }

    pub fn next_m(self) -> Self {
        Self { n: self.n, m: self.m + 1 }
    }

    pub fn next_n(self) -> Self {
        Self { n: self.n + 1, m: self.m }
    }
}

impl fmt::Display for AnmIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{{{},{}}}", self.n, self.m)
    }
}

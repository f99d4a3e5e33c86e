//! Certified computations around the zeros of the Bergman kernel of the
//! Fock-Bargmann-Hartogs domain
//! `D_{n,m} = {(z, zeta) in C^n x C^m : |zeta|^2 < exp(-mu |z|^2)}`.
//!
//! The kernel vanishes somewhere on `D_{n,m} x D_{n,m}` exactly when the
//! numerator polynomial `A_{n,m}(t)` of `d^m/dt^m Li_{-n}(t)` has a root in
//! `(-1, 0)`. Everything deciding that question is exact; only [`kernel`]
//! works in floating point.

pub mod combin;
mod error;
pub mod exactalg;
pub mod kernel;
pub mod lukeng;
pub mod par;

pub use error::{Error, Result};
pub use exactalg::{IntPolynomial, RationalInterval};

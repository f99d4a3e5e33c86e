use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not square-free (gcd with its derivative has degree {0})")]
    NotSquareFree(usize),

    #[error("interval endpoint {0} is a root of the polynomial")]
    EndpointRoot(String),

    #[error("invalid interval: lo = {lo} exceeds hi = {hi}")]
    InvalidInterval { lo: String, hi: String },

    #[error("interval [{lo}, {hi}] does not isolate a simple root (no sign change)")]
    NotIsolating { lo: String, hi: String },

    #[error("Descartes bisection passed depth {0} without separating the roots")]
    DepthExceeded(usize),

    #[error("refinement width must be positive")]
    NonPositiveWidth,

    #[error("coefficient of t^{index} is not strictly positive")]
    NonPositiveCoefficient { index: usize },

    #[error("annulus bound needs degree at least 1")]
    ConstantPolynomial,

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("m cap {cap} reached for n = {n} without a Lu Qi-Keng verdict")]
    CapExceeded { n: u32, cap: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("point {which} is not in the domain: |zeta|^2 = {lhs:e} is not < exp(-mu |z|^2) = {rhs:e}")]
    NotMember { which: &'static str, lhs: f64, rhs: f64 },

    #[error("kernel argument |t| = {0} is not < 1")]
    Domain(f64),

    #[error("mu must be a positive finite number, got {0}")]
    InvalidMu(f64),
}

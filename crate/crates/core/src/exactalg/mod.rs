//! Exact polynomial arithmetic over the integers and certified real-root
//! machinery: Sturm chains, isolation, counting and bisection refinement.

mod descartes;
mod interval;
mod poly;
mod roots;
mod sturm;

pub use descartes::{isolate_in_open, largest_root_descartes, roots_in_unit_interval};
pub use interval::RationalInterval;
pub use poly::IntPolynomial;
pub use roots::{
    annulus_bounds, cauchy_bound, isolate_largest_root, isolate_real_roots, refine_root,
};
pub(crate) use roots::largest_with_chain;
pub use sturm::{sturm_count, SturmChain};

/// True iff `gcd(p, p')` is constant. Rejects the zero polynomial.
pub fn is_square_free(p: &IntPolynomial) -> crate::Result<bool> {
    p.is_square_free()
}

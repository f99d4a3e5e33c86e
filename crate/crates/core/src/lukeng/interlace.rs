//! Root-ordering relations between real-rooted polynomials.
//!
//! With roots `a_1 <= ... <= a_k` of `f` and `b_1 <= ...` of `g`:
//! `g` alternates `f` when `deg f = deg g` and `b_1 <= a_1 <= b_2 <= ... <= b_k <= a_k`;
//! `g` interlaces `f` when `deg f = deg g + 1` and `a_1 <= b_1 <= a_2 <= ... <= b_{k-1} <= a_k`.
//! Strict variants forbid equalities. `g ≺ f` is the strict relation,
//! `f ≻ g` the same statement with the arguments swapped.

use std::fmt;

use num_bigint::Sign;

use crate::error::{Error, Result};
use crate::exactalg::{isolate_real_roots, IntPolynomial, RationalInterval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    StrictlyAlternates,
    StrictlyInterlaces,
    Alternates,
    Interlaces,
    Fails,
}

impl Relation {
    pub fn is_strict(self) -> bool {
        matches!(self, Relation::StrictlyAlternates | Relation::StrictlyInterlaces)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::StrictlyAlternates => "strictly_alternates",
            Relation::StrictlyInterlaces => "strictly_interlaces",
            Relation::Alternates => "alternates",
            Relation::Interlaces => "interlaces",
            Relation::Fails => "fails",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which polynomial a witness root belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Owner {
    F,
    G,
    Both,
}

impl Owner {
    pub fn as_str(self) -> &'static str {
        match self {
            Owner::F => "f",
            Owner::G => "g",
            Owner::Both => "f,g",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRoot {
    pub owner: Owner,
    pub interval: RationalInterval,
}

/// Classification of `g` relative to `f`, with the merged ascending list
/// of isolated roots that certifies it. Intervals are pairwise disjoint;
/// a root shared by `f` and `g` appears once with owner [`Owner::Both`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacingReport {
    pub relation: Relation,
    pub witness: Vec<WitnessRoot>,
    /// Why the relation fails, when it does.
    pub reason: Option<String>,
}

/// Tests `g ≼ f`: isolates the roots of `lcm(f, g)`, assigns each to `f`,
/// `g` or both by exact sign tests, and checks the ordering chain.
///
/// Both inputs must be nonzero and square-free. Shared roots are found
/// exactly through `gcd(f, g)`, so no refinement budget is involved.
pub fn verify_interlacing(f: &IntPolynomial, g: &IntPolynomial) -> Result<InterlacingReport> {
    for p in [f, g] {
        if !p.is_square_free()? {
            let d = p.gcd(&p.derivative()).degree().unwrap_or(0);
            return Err(Error::NotSquareFree(d));
        }
    }
    let common = f.gcd(g);
    let lcm = (f * g).div_exact(&common).expect("gcd divides the product");
    let witness: Vec<WitnessRoot> = isolate_real_roots(&lcm)?
        .into_iter()
        .map(|interval| {
            let in_f = has_root(f, &interval);
            let in_g = has_root(g, &interval);
            let owner = match (in_f, in_g) {
                (true, true) => Owner::Both,
                (true, false) => Owner::F,
                (false, true) => Owner::G,
                (false, false) => unreachable!("every root of lcm(f, g) is a root of f or g"),
            };
            WitnessRoot { owner, interval }
        })
        .collect();

    let f_ranks: Vec<usize> = ranks(&witness, Owner::F);
    let g_ranks: Vec<usize> = ranks(&witness, Owner::G);
    let deg_f = f.degree().unwrap_or(0);
    let deg_g = g.degree().unwrap_or(0);

    let fail = |reason: String| InterlacingReport {
        relation: Relation::Fails,
        witness: witness.clone(),
        reason: Some(reason),
    };
    if f_ranks.len() != deg_f {
        return Ok(fail(format!("f has {} real roots but degree {deg_f}", f_ranks.len())));
    }
    if g_ranks.len() != deg_g {
        return Ok(fail(format!("g has {} real roots but degree {deg_g}", g_ranks.len())));
    }

    // Build the required chain as a sequence of (rank, label).
    let (chain, alternation): (Vec<(usize, String)>, bool) = if deg_f == deg_g {
        let mut c = Vec::with_capacity(2 * deg_f);
        for i in 0..deg_f {
            c.push((g_ranks[i], format!("b_{}", i + 1)));
            c.push((f_ranks[i], format!("a_{}", i + 1)));
        }
        (c, true)
    } else if deg_f == deg_g + 1 {
        let mut c = Vec::with_capacity(2 * deg_f);
        for i in 0..deg_f {
            c.push((f_ranks[i], format!("a_{}", i + 1)));
            if i < deg_g {
                c.push((g_ranks[i], format!("b_{}", i + 1)));
            }
        }
        (c, false)
    } else {
        return Ok(fail(format!(
            "degree condition: deg f = {deg_f}, deg g = {deg_g}; need equal or deg f = deg g + 1"
        )));
    };

    let mut strict = true;
    for pair in chain.windows(2) {
        let ((r0, l0), (r1, l1)) = (&pair[0], &pair[1]);
        if r0 > r1 {
            return Ok(fail(format!("ordering violated: {l0} > {l1}")));
        }
        if r0 == r1 {
            strict = false;
        }
    }
    let relation = match (alternation, strict) {
        (true, true) => Relation::StrictlyAlternates,
        (true, false) => Relation::Alternates,
        (false, true) => Relation::StrictlyInterlaces,
        (false, false) => Relation::Interlaces,
    };
    Ok(InterlacingReport { relation, witness, reason: None })
}

/// Positions in the merged list of the roots owned by `who` (shared roots
/// count for both).
fn ranks(witness: &[WitnessRoot], who: Owner) -> Vec<usize> {
    witness
        .iter()
        .enumerate()
        .filter(|(_, w)| w.owner == who || w.owner == Owner::Both)
        .map(|(i, _)| i)
        .collect()
}

/// Whether `p` has a root in an isolating interval of a multiple of `p`.
/// Endpoints of a non-degenerate isolating interval are not roots of the
/// multiple, hence not of `p`, and `p` has at most one simple root inside.
fn has_root(p: &IntPolynomial, iv: &RationalInterval) -> bool {
    if iv.is_point() {
        return p.sign_at(iv.lo()) == Sign::NoSign;
    }
    p.sign_at(iv.lo()) != p.sign_at(iv.hi())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn strict_interlacing_of_linear_in_quadratic() {
        // roots 1, 2 and 3/2
        let r = verify_interlacing(&p(&[2, -3, 1]), &p(&[-3, 2])).unwrap();
        assert_eq!(r.relation, Relation::StrictlyInterlaces);
        let owners: Vec<Owner> = r.witness.iter().map(|w| w.owner).collect();
        assert_eq!(owners, vec![Owner::F, Owner::G, Owner::F]);
    }

    #[test]
    fn alternation_violated() {
        let r = verify_interlacing(&p(&[-1, 0, 1]), &p(&[-4, 0, 1])).unwrap();
        assert_eq!(r.relation, Relation::Fails);
        assert!(r.reason.unwrap().contains("ordering"));
    }

    #[test]
    fn derivative_interlaces() {
        let f = &(&p(&[1, 1]) * &p(&[2, 1])) * &p(&[-5, 1]);
        let r = verify_interlacing(&f, &f.derivative()).unwrap();
        assert_eq!(r.relation, Relation::StrictlyInterlaces);
    }

    #[test]
    fn shared_root_gives_weak_relation() {
        // f roots -1, 2 ; g roots -1, 1: b1 = a1 < b2 < a2
        let f = &p(&[1, 1]) * &p(&[-2, 1]);
        let g = &p(&[1, 1]) * &p(&[-1, 1]);
        let r = verify_interlacing(&f, &g).unwrap();
        assert_eq!(r.relation, Relation::Alternates);
        assert_eq!(r.witness[0].owner, Owner::Both);
        // identical polynomials alternate weakly
        assert_eq!(verify_interlacing(&f, &f).unwrap().relation, Relation::Alternates);
    }

    #[test]
    fn degree_and_reality_conditions() {
        let r = verify_interlacing(&p(&[1, 0, 0, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(r.relation, Relation::Fails);
        let r = verify_interlacing(&p(&[1, 0, 1]), &p(&[0, 1])).unwrap();
        assert!(r.reason.unwrap().contains("real roots"));
        assert!(verify_interlacing(&p(&[1, 2, 1]), &p(&[1])).is_err());
        assert!(verify_interlacing(&IntPolynomial::zero(), &p(&[1])).is_err());
    }

    #[test]
    fn orientation() {
        // 5 + 3t (root -5/3) alternates 1 + t (root -1)
        assert_eq!(
            verify_interlacing(&p(&[1, 1]), &p(&[5, 3])).unwrap().relation,
            Relation::StrictlyAlternates
        );
        assert_eq!(
            verify_interlacing(&p(&[5, 3]), &p(&[1, 1])).unwrap().relation,
            Relation::Fails
        );
    }
}

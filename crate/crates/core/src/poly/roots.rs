//! Rational roots of univariate polynomials by divisor enumeration.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use super::rational::Rational;
use super::uni::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRoots {
    /// Distinct rational roots, ascending.
    pub roots: Vec<Rational>,
    /// Square-free part with all rational linear factors removed; constant 1
    /// when every root is rational.
    pub residual: UniPoly,
}

impl RationalRoots {
    pub fn is_complete(&self) -> bool {
        self.residual.degree().unwrap_or(0) == 0
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mag = n.magnitude();
    if mag.is_one() {
        return vec![BigInt::one()];
    }
    let factors = num_prime::nt_funcs::factorize(mag.clone());
    let mut divs: Vec<BigUint> = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    divs.into_iter()
        .map(|d| BigInt::from_biguint(Sign::Plus, d))
        .collect()
}

/// All rational roots of a nonzero polynomial.
///
/// Works on the square-free part with integer coefficients: a root `r/s` in
/// lowest terms has `r` dividing the trailing and `s` the leading coefficient.
pub fn rational_roots(u: &UniPoly) -> Result<RationalRoots> {
    if u.is_zero() {
        return Err(Error::ZeroPolynomial("rational_roots"));
    }
    let mut work = u.squarefree_part();
    let mut roots = BTreeSet::new();

    if work.coeffs()[0].is_zero() {
        roots.insert(Rational::zero());
        work = work.div_rem(&UniPoly::from_ints(u.var(), &[0, 1])).0;
    }
    if work.degree().unwrap_or(0) > 0 {
        let ints = work.primitive_integer();
        let lead = ints.last().unwrap().clone();
        let trail = ints[0].clone();
        let nums = divisors(&trail);
        let dens = divisors(&lead);
        for d in &dens {
            for n in &nums {
                for s in [n.clone(), -n.clone()] {
                    let r = Rational::new(s, d.clone());
                    if roots.contains(&r) {
                        continue;
                    }
                    if work.eval(&r).is_zero() {
                        roots.insert(r);
                    }
                }
            }
        }
        for r in roots.iter().filter(|r| !r.is_zero()) {
            let lin = UniPoly::new(u.var(), vec![-r.clone(), Rational::one()]);
            let (q, rem) = work.div_rem(&lin);
            debug_assert!(rem.is_zero());
            work = q;
        }
    }
    Ok(RationalRoots {
        roots: roots.into_iter().collect(),
        residual: work.monic(),
    })
}

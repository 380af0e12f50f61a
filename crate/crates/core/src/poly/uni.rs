//! Dense univariate polynomials over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::multi::MultiPoly;
use super::rational::{lcm_of_denominators, Rational};
use crate::error::{Error, Result};

/// Coefficients lowest power first; the last one is nonzero, or the list is
/// empty for the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(var: impl Into<String>, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly {
            var: var.into(),
            coeffs,
        }
    }

    pub fn from_ints(var: impl Into<String>, coeffs: &[i64]) -> Self {
        Self::new(
            var,
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Views a polynomial that involves at most one variable as univariate in
    /// `var`.
    pub fn from_multi(p: &MultiPoly, var: &str) -> Result<Self> {
        let i = p.var_index(var)?;
        for (j, v) in p.vars().iter().enumerate() {
            if j != i && p.involves(j) {
                return Err(Error::Invalid(format!(
                    "polynomial {p} involves `{v}`, expected only `{var}`"
                )));
            }
        }
        let n = p.degree_in(i).map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); n];
        for (m, c) in p.terms() {
            coeffs[m.exponents()[i] as usize] = c.clone();
        }
        Ok(Self::new(var, coeffs))
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        UniPoly::new(self.var.clone(), coeffs)
    }

    pub fn monic(&self) -> UniPoly {
        let lc = self.leading_coefficient();
        if lc.is_zero() {
            return self.clone();
        }
        UniPoly::new(
            self.var.clone(),
            self.coeffs.iter().map(|c| c / &lc).collect(),
        )
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = lcm_of_denominators(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
        let sign = if ints.last().unwrap().is_negative() {
            -1
        } else {
            1
        };
        ints.into_iter().map(|c| c * sign / &g).collect()
    }

    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.coeffs.len() - 1;
        let lc = d.leading_coefficient();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::new(self.var.clone(), Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (
            UniPoly::new(self.var.clone(), quot),
            UniPoly::new(self.var.clone(), rem),
        )
    }

    /// Monic gcd over the rationals.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(self.var.clone(), Vec::new());
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(self.var.clone(), out)
    }

    pub fn to_multi(&self) -> MultiPoly {
        let vars = [self.var.clone()];
        MultiPoly::from_terms(
            &vars,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![i as u32], c.clone())),
        )
        .expect("single variable ring")
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multi())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::rat;

    #[test]
    fn gcd_and_squarefree() {
        let a = UniPoly::from_ints("t", &[0, -1, 0, 1]); // t^3 - t
        let b = UniPoly::from_ints("t", &[-1, 1]); // t - 1
        assert_eq!(a.gcd(&b), b);
        let sq = UniPoly::from_ints("t", &[1, 2, 1]).mul(&UniPoly::from_ints("t", &[0, 1]));
        assert_eq!(sq.squarefree_part(), UniPoly::from_ints("t", &[0, 1, 1]));
    }

    #[test]
    fn division() {
        let a = UniPoly::from_ints("t", &[1, 0, 0, 1]);
        let (q, r) = a.div_rem(&UniPoly::from_ints("t", &[1, 1]));
        assert_eq!(q, UniPoly::from_ints("t", &[1, -1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.eval(&rat(2)), rat(9));
    }
}

//! Sparse multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors ordered graded
//! lexicographically with respect to the declared variable order, so the
//! canonical form is unique and the leading term is the last entry.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{gcd_of_numerators, lcm_of_denominators, Rational};
use crate::error::{Error, Result};

/// Exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in an ordered list of named variables with rational
/// coefficients. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::zero_in(vars.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub(crate) fn zero_in(vars: Arc<[String]>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::zero(vars).constant_like(Rational::one())
    }

    /// Constant polynomial living in the same ring as `self`.
    pub fn constant_like(&self, c: Rational) -> Self {
        let mut out = Self::zero_in(self.vars.clone());
        if !c.is_zero() {
            out.terms.insert(Monomial::one(self.nvars()), c);
        }
        out
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Rational) -> Self {
        Self::zero(vars).constant_like(c)
    }

    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self> {
        let z = Self::zero(vars);
        let i = z.var_index(name)?;
        Ok(z.var_at(i))
    }

    /// The ring variable with index `i`, as a polynomial.
    pub fn var_at(&self, i: usize) -> Self {
        let mut e = vec![0; self.nvars()];
        e[i] = 1;
        self.monomial_like(Monomial(e), Rational::one())
    }

    pub fn monomial_like(&self, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.0.len(), self.nvars());
        let mut out = Self::zero_in(self.vars.clone());
        if !c.is_zero() {
            out.terms.insert(m, c);
        }
        out
    }

    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != out.nvars() {
                return Err(Error::Invalid(format!(
                    "exponent vector of length {} in a ring with {} variables",
                    e.len(),
                    out.nvars()
                )));
            }
            out.add_term(Monomial(e), c);
        }
        Ok(out)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.nvars()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Lowest total degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    /// Whether variable `i` occurs in some term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.join(","),
                right: other.vars.join(","),
            })
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_ring(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_ring(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_ring(other)?;
        Ok(self * other)
    }

    pub fn pow(&self, mut n: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = self.constant_like(Rational::one());
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero_in(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero_in(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = Self::zero_in(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[i] -= 1;
            out.add_term(d, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn partial_derivative(&self, var: &str) -> Result<MultiPoly> {
        Ok(self.derivative(self.var_index(var)?))
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        (0..self.nvars()).map(|i| self.derivative(i)).collect()
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars(), "evaluation point dimension");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Re-expresses the polynomial in a ring whose variable list contains all
    /// of the current variables.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<MultiPoly> {
        let target: Arc<[String]> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        self.embed(&target)
    }

    pub(crate) fn embed(&self, target: &Arc<[String]>) -> Result<MultiPoly> {
        if *target == self.vars {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.nvars());
        for v in self.vars.iter() {
            match target.iter().position(|t| t == v) {
                Some(j) => map.push(j),
                None if !self.involves(self.var_index(v)?) => map.push(usize::MAX),
                None => return Err(Error::UnknownVariable(v.clone())),
            }
        }
        let mut out = Self::zero_in(target.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &j) in map.iter().enumerate() {
                if j != usize::MAX {
                    e[j] = m.0[i];
                }
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Simultaneous substitution of variables by polynomials.
    ///
    /// The result lives over the retained variables (in their original order)
    /// followed by any new variables introduced by the replacements.
    pub fn substitute(&self, bindings: &[(&str, MultiPoly)]) -> Result<MultiPoly> {
        let mut bound: Vec<Option<&MultiPoly>> = vec![None; self.nvars()];
        for (name, val) in bindings {
            let i = self.var_index(name)?;
            bound[i] = Some(val);
        }
        let mut out_vars: Vec<String> = self
            .vars
            .iter()
            .zip(&bound)
            .filter(|(_, b)| b.is_none())
            .map(|(v, _)| v.clone())
            .collect();
        for (_, val) in bindings {
            for v in val.vars.iter() {
                let vi = val.var_index(v)?;
                if val.involves(vi) && !out_vars.contains(v) {
                    out_vars.push(v.clone());
                }
            }
        }
        // keep the original ring when nothing new was introduced
        let target: Arc<[String]> = if out_vars.iter().all(|v| self.vars.contains(v)) {
            self.vars.clone()
        } else {
            out_vars.into()
        };
        let mut images: Vec<MultiPoly> = Vec::with_capacity(self.nvars());
        for (i, b) in bound.iter().enumerate() {
            let img = match b {
                Some(val) => val.embed(&target)?,
                None => {
                    let j = target.iter().position(|t| *t == self.vars[i]).unwrap();
                    MultiPoly::zero_in(target.clone()).var_at(j)
                }
            };
            images.push(img);
        }
        let mut power_cache: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|img| vec![img.constant_like(Rational::one()), img.clone()])
            .collect();
        let mut out = Self::zero_in(target.clone());
        for (m, c) in &self.terms {
            let mut t = out.constant_like(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut power_cache[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &images[i];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitutes rational values for some variables, keeping the ring.
    pub fn specialize(&self, bindings: &[(&str, Rational)]) -> Result<MultiPoly> {
        let mut vals: Vec<Option<&Rational>> = vec![None; self.nvars()];
        for (name, v) in bindings {
            vals[self.var_index(name)?] = Some(v);
        }
        let mut out = Self::zero_in(self.vars.clone());
        for (m, c) in &self.terms {
            let mut c = c.clone();
            let mut e = m.clone();
            for (i, v) in vals.iter().enumerate() {
                if let Some(v) = v {
                    c *= num_traits::pow((*v).clone(), e.0[i] as usize);
                    e.0[i] = 0;
                }
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// `P(x + point)`: moves `point` to the origin.
    pub fn translate(&self, point: &[Rational]) -> MultiPoly {
        assert_eq!(point.len(), self.nvars());
        if point.iter().all(Zero::is_zero) {
            return self.clone();
        }
        let shifted: Vec<(String, MultiPoly)> = self
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| {
                (
                    v.clone(),
                    &self.var_at(i) + &self.constant_like(point[i].clone()),
                )
            })
            .collect();
        let b: Vec<(&str, MultiPoly)> = shifted
            .iter()
            .map(|(v, p)| (v.as_str(), p.clone()))
            .collect();
        self.substitute(&b).expect("translation stays in the ring")
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficients with respect to variable `i`, lowest power first. Each
    /// coefficient lives in the same ring and does not involve variable `i`.
    pub fn coeffs_in(&self, i: usize) -> Vec<MultiPoly> {
        let deg = match self.degree_in(i) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![Self::zero_in(self.vars.clone()); deg + 1];
        for (m, c) in &self.terms {
            let mut k = m.clone();
            let e = k.0[i] as usize;
            k.0[i] = 0;
            out[e].terms.insert(k, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(vars: &Arc<[String]>, i: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = Self::zero_in(vars.clone());
        for (e, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut k = m.clone();
                k.0[i] += e as u32;
                out.add_term(k, a.clone());
            }
        }
        out
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.vars, d.vars, "div_exact across rings");
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        if d.num_terms() == 1 {
            let mut out = Self::zero_in(self.vars.clone());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                out.terms.insert(dm.quotient_of(m), c / &dc);
            }
            return Some(out);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero_in(self.vars.clone());
        while let Some((rm, rc)) = rem.leading_term() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.quotient_of(rm);
            let qc = rc / &dc;
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// Scales to integer coefficients with content 1 and a positive leading
    /// coefficient (graded lex). Zero stays zero.
    pub fn normalized(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = lcm_of_denominators(self.terms.values());
        let scaled: Vec<BigInt> = self
            .terms
            .values()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = scaled
            .iter()
            .fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
        let mut factor = Rational::new(l, g);
        if self.leading_coefficient().is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Integer content of the normalized form: `self = c * self.normalized()`.
    pub fn rational_content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let l = lcm_of_denominators(self.terms.values());
        let n = gcd_of_numerators(
            self.terms
                .values()
                .map(|c| c * Rational::from_integer(l.clone()))
                .collect::<Vec<_>>()
                .iter(),
        );
        let c = Rational::new(n, l);
        if self.leading_coefficient().is_negative() {
            -c
        } else {
            c
        }
    }

    /// Keeps only the terms of total degree below `k`.
    pub fn truncate_below(&self, k: u32) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Linear change of coordinates `x_i := x_i + c * x_j`.
    pub fn shear(&self, i: usize, j: usize, c: &Rational) -> MultiPoly {
        let img = &self.var_at(i) + &self.var_at(j).scale(c);
        let name = self.vars[i].clone();
        self.substitute(&[(name.as_str(), img)])
            .expect("shear stays in the ring")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.degree() == 0 {
                factors.push(if a.is_integer() {
                    a.numer().to_string()
                } else {
                    format!("{}/{}", a.numer(), a.denom())
                });
            }
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "polynomials live in different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "polynomials live in different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "polynomials live in different rings");
        let mut out = MultiPoly::zero_in(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

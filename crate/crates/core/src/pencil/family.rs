use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::rational::to_fraction_string;
use crate::poly::{is_squarefree, multivariate_gcd, squarefree_part, MultiPoly, Rational};

/// A point of a two-variable chart.
pub type Point = [Rational; 2];

pub fn format_point(p: &Point) -> String {
    format!("({}, {})", p[0], p[1])
}

pub fn point_strings(p: &Point) -> [String; 2] {
    [to_fraction_string(&p[0]), to_fraction_string(&p[1])]
}

pub(crate) fn check_plane_pair(p: &MultiPoly, q: &MultiPoly) -> Result<()> {
    p.checked_sub(q)?;
    if p.nvars() != 2 {
        return Err(Error::Invalid(format!(
            "pencil charts need exactly 2 variables, got [{}]",
            p.vars().join(",")
        )));
    }
    Ok(())
}

/// The family of curves `p - t*q = 0` near a base point, with the base point
/// moved to the origin.
#[derive(Clone, PartialEq, Eq)]
pub struct PlaneGermFamily {
    p: MultiPoly,
    q: MultiPoly,
    base_point: Point,
}

impl PlaneGermFamily {
    /// Checks that `point` lies on `p = q = 0` and that `p/q` is reduced.
    pub fn new(p: &MultiPoly, q: &MultiPoly, point: Point) -> Result<Self> {
        check_plane_pair(p, q)?;
        let g = multivariate_gcd(p, q)?;
        if !g.is_constant() {
            return Err(Error::NotReduced(g.to_string()));
        }
        let fam = Self::unchecked(p, q, point);
        if !fam.p.constant_term().is_zero() || !fam.q.constant_term().is_zero() {
            return Err(Error::Invalid(format!(
                "{} is not a base point: p and q must both vanish there",
                format_point(&fam.base_point)
            )));
        }
        Ok(fam)
    }

    /// No reducedness check; used for unit twists `(p*u, q*u)`.
    pub(crate) fn unchecked(p: &MultiPoly, q: &MultiPoly, point: Point) -> Self {
        PlaneGermFamily {
            p: p.translate(&point),
            q: q.translate(&point),
            base_point: point,
        }
    }

    /// `p` in coordinates centred at the base point.
    pub fn p(&self) -> &MultiPoly {
        &self.p
    }

    pub fn q(&self) -> &MultiPoly {
        &self.q
    }

    pub fn base_point(&self) -> &Point {
        &self.base_point
    }

    pub fn vars(&self) -> &[String] {
        self.p.vars()
    }

    /// `p - a*q`, centred at the base point.
    pub fn fiber(&self, a: &Rational) -> MultiPoly {
        &self.p - &self.q.scale(a)
    }
}

impl fmt::Debug for PlaneGermFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PlaneGermFamily {{ p: {}, q: {}, at {} }}",
            self.p,
            self.q,
            format_point(&self.base_point)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFraction {
    pub p: MultiPoly,
    pub q: MultiPoly,
    pub warning: Option<String>,
}

/// Divides out `gcd(p, q)`.
pub fn reduce_fraction(p: &MultiPoly, q: &MultiPoly) -> Result<ReducedFraction> {
    p.checked_sub(q)?;
    if q.is_zero() {
        return Err(Error::ZeroPolynomial("denominator q"));
    }
    if p.is_zero() {
        return Ok(ReducedFraction {
            p: p.clone(),
            q: q.clone(),
            warning: Some("zero numerator".into()),
        });
    }
    let g = multivariate_gcd(p, q)?;
    if g.is_constant() {
        return Ok(ReducedFraction {
            p: p.clone(),
            q: q.clone(),
            warning: None,
        });
    }
    let div = |a: &MultiPoly| a.div_exact(&g).expect("gcd divides its arguments");
    Ok(ReducedFraction {
        p: div(p),
        q: div(q),
        warning: Some(format!("removed common factor {g} from p and q")),
    })
}

/// Whether the fiber `p - a*q = 0` is reduced, i.e. its equation square-free.
pub fn fiber_reducedness(p: &MultiPoly, q: &MultiPoly, a: &Rational) -> Result<bool> {
    p.checked_sub(q)?;
    let f = p - &q.scale(a);
    if f.is_zero() {
        return Ok(false);
    }
    is_squarefree(&f)
}

/// Repeatedly divides `e` by its gcd with `by` until they are coprime.
/// Returns the saturated polynomial and the removed factors.
pub(crate) fn saturate(e: &MultiPoly, by: &MultiPoly) -> Result<(MultiPoly, Vec<MultiPoly>)> {
    let mut cur = e.clone();
    let mut removed = Vec::new();
    if cur.is_zero() {
        return Ok((cur, removed));
    }
    loop {
        let g = multivariate_gcd(&cur, by)?;
        if g.is_constant() {
            return Ok((cur, removed));
        }
        cur = cur.div_exact(&g).expect("gcd divides its argument");
        removed.push(g);
    }
}

/// The reduced pole equation.
pub(crate) fn pole_radical(q: &MultiPoly) -> Result<MultiPoly> {
    squarefree_part(q)
}

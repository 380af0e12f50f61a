//! Elimination toolkit: contents, subresultant gcd and resultant, square-free
//! parts.
//!
//! A polynomial is viewed as univariate in one variable with coefficients in
//! the polynomial ring of the others. Coefficients keep the full variable list
//! and simply do not involve the main variable.

use num_traits::One;

use super::multi::{Monomial, MultiPoly};
use super::rational::Rational;
use crate::error::{Error, Result};

fn deg(p: &MultiPoly, i: usize) -> u32 {
    p.degree_in(i).unwrap_or(0)
}

/// Leading coefficient with respect to variable `i`.
pub fn lc_in(p: &MultiPoly, i: usize) -> MultiPoly {
    p.coeffs_in(i)
        .pop()
        .unwrap_or_else(|| p.constant_like(Rational::from_integer(0.into())))
}

fn x_pow(p: &MultiPoly, i: usize, k: u32) -> Monomial {
    let mut e = vec![0; p.nvars()];
    e[i] = k;
    Monomial(e)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` in variable `i`.
pub fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, i: usize) -> MultiPoly {
    let db = deg(b, i);
    let lcb = lc_in(b, i);
    let mut r = a.clone();
    let mut e = (deg(a, i) + 1).saturating_sub(db);
    while !r.is_zero() && deg(&r, i) >= db {
        let dr = deg(&r, i);
        let lcr = lc_in(&r, i);
        let shift = x_pow(&r, i, dr - db);
        let t = lcr.mul_monomial(&shift, &Rational::one());
        r = &(&lcb * &r) - &(&t * b);
        e -= 1;
    }
    &r * &lcb.pow(e)
}

fn div(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    a.div_exact(b)
        .unwrap_or_else(|| panic!("inexact division of {a} by {b}"))
}

/// Gcd of the coefficients with respect to variable `i`, normalized.
pub fn content_in(p: &MultiPoly, i: usize) -> MultiPoly {
    let mut acc = p.constant_like(Rational::from_integer(0.into()));
    for c in p.coeffs_in(i) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_inner(&acc, &c);
        if acc.is_constant() {
            return p.constant_like(Rational::one());
        }
    }
    acc
}

/// `p / content_in(p, i)`, normalized.
pub fn primitive_part_in(p: &MultiPoly, i: usize) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    div(p, &content_in(p, i)).normalized()
}

fn subresultant_gcd(mut a: MultiPoly, mut b: MultiPoly, i: usize) -> MultiPoly {
    if deg(&a, i) < deg(&b, i) {
        std::mem::swap(&mut a, &mut b);
    }
    let one = a.constant_like(Rational::one());
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let delta = deg(&a, i) - deg(&b, i);
        let r = pseudo_remainder(&a, &b, i);
        if r.is_zero() {
            return primitive_part_in(&b, i);
        }
        if deg(&r, i) == 0 {
            return one;
        }
        a = b;
        b = div(&r, &(&g * &h.pow(delta)));
        g = lc_in(&a, i);
        if delta > 0 {
            h = div(&g.pow(delta), &h.pow(delta - 1));
        }
    }
}

fn gcd_inner(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    if p.is_constant() || q.is_constant() {
        return p.constant_like(Rational::one());
    }
    let i = (0..p.nvars())
        .find(|&i| p.involves(i) || q.involves(i))
        .expect("nonconstant polynomial involves some variable");
    if !p.involves(i) {
        return gcd_inner(p, &content_in(q, i));
    }
    if !q.involves(i) {
        return gcd_inner(&content_in(p, i), q);
    }
    let cp = content_in(p, i);
    let cq = content_in(q, i);
    let c = gcd_inner(&cp, &cq);
    let g = subresultant_gcd(div(p, &cp), div(q, &cq), i);
    (&c * &g).normalized()
}

/// Greatest common divisor, normalized to integer coefficients with content 1
/// and positive graded-lex leading coefficient. `gcd(0, 0) = 0`.
pub fn multivariate_gcd(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly> {
    p.checked_sub(q)?;
    Ok(gcd_inner(p, q))
}

/// Resultant with respect to `var`, by the subresultant PRS.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly> {
    p.checked_sub(q)?;
    let i = p.var_index(var)?;
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial("resultant"));
    }
    let (dp, dq) = (deg(p, i), deg(q, i));
    match (dp, dq) {
        (0, 0) => return Err(Error::ConstantInVariable(var.to_string())),
        (0, _) => return Ok(p.pow(dq)),
        (_, 0) => return Ok(q.pow(dp)),
        _ => {}
    }
    let ca = content_in(p, i);
    let cb = content_in(q, i);
    let mut a = div(p, &ca);
    let mut b = div(q, &cb);
    let t = &ca.pow(dq) * &cb.pow(dp);
    let mut negate = false;
    if dp < dq {
        std::mem::swap(&mut a, &mut b);
        if dp % 2 == 1 && dq % 2 == 1 {
            negate = true;
        }
    }
    let one = a.constant_like(Rational::one());
    let mut g = one.clone();
    let mut h = one;
    loop {
        let (da, db) = (deg(&a, i), deg(&b, i));
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = pseudo_remainder(&a, &b, i);
        a = b;
        b = div(&r, &(&g * &h.pow(delta)));
        g = lc_in(&a, i);
        if delta > 0 {
            h = div(&g.pow(delta), &h.pow(delta - 1));
        }
        if b.is_zero() {
            return Ok(b);
        }
        if deg(&b, i) == 0 {
            break;
        }
    }
    let da = deg(&a, i);
    let h = div(&b.pow(da), &h.pow(da - 1));
    let res = &t * &h;
    Ok(if negate { -&res } else { res })
}

/// Product of the distinct irreducible factors, normalized.
pub fn squarefree_part(p: &MultiPoly) -> Result<MultiPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_part"));
    }
    let mut g = p.clone();
    for d in p.gradient() {
        if g.is_constant() {
            break;
        }
        g = gcd_inner(&g, &d);
    }
    Ok(div(p, &g).normalized())
}

/// Whether `p` has no repeated factor.
pub fn is_squarefree(p: &MultiPoly) -> Result<bool> {
    let s = squarefree_part(p)?;
    Ok(s.degree() == p.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_expression;

    fn p(s: &str) -> MultiPoly {
        parse_expression(s, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(
            resultant(&p("x^2 + y"), &p("x + 1"), "x").unwrap(),
            p("y + 1")
        );
        let r = resultant(&p("x - y"), &p("x - z"), "x").unwrap();
        assert!(r == p("y - z") || r == p("z - y"));
        assert!(resultant(&p("x*y"), &p("x*(y+1)"), "x").unwrap().is_zero());
        assert!(matches!(
            resultant(&p("y"), &p("z"), "x"),
            Err(Error::ConstantInVariable(_))
        ));
        assert_eq!(resultant(&p("y"), &p("x^3"), "x").unwrap(), p("y^3"));
    }

    #[test]
    fn resultant_sign_convention() {
        // Res(x - a, x - b) = a - b
        assert_eq!(
            resultant(&p("x - y"), &p("x - z"), "x").unwrap(),
            p("y - z")
        );
        // Res(A, B) = (-1)^(deg A deg B) Res(B, A)
        let a = p("x^3 + y*x + 1");
        let b = p("x^2 - z");
        let ab = resultant(&a, &b, "x").unwrap();
        let ba = resultant(&b, &a, "x").unwrap();
        assert_eq!(ab, ba);
        let c = p("x + y");
        assert_eq!(
            resultant(&a, &c, "x").unwrap(),
            -&resultant(&c, &a, "x").unwrap()
        );
    }

    #[test]
    fn gcd_examples() {
        let vars = ["x", "z"];
        let q = |s: &str| parse_expression(s, &vars).unwrap();
        assert_eq!(
            multivariate_gcd(&q("x^2*z^3*(z^2+2*x)"), &q("z^3")).unwrap(),
            q("z^3")
        );
        assert_eq!(
            multivariate_gcd(&q("-2*x - 4*z"), &q("0")).unwrap(),
            q("x + 2*z")
        );
        assert!(multivariate_gcd(&q("x+1"), &q("z+1")).unwrap().is_one());
        assert!(multivariate_gcd(&q("0"), &q("0")).unwrap().is_zero());
        let g = multivariate_gcd(&q("(x+z)^2*(x-1)"), &q("(x+z)*(x-1)^3*(z+2)")).unwrap();
        assert_eq!(g, q("(x+z)*(x-1)"));
    }

    #[test]
    fn squarefree_examples() {
        let vars = ["x", "z"];
        let q = |s: &str| parse_expression(s, &vars).unwrap();
        let s = squarefree_part(&q("x^2*(z^2+x)")).unwrap();
        assert_eq!(s, q("x*(z^2+x)"));
        assert!(is_squarefree(&s).unwrap());
        assert_eq!(squarefree_part(&q("x*z - 1")).unwrap(), q("x*z - 1"));
        assert_eq!(squarefree_part(&q("(x+z)^3")).unwrap(), q("x+z"));
        assert!(squarefree_part(&q("0")).is_err());
    }
}

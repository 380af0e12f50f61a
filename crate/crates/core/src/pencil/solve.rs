//! Rational solutions of a zero-dimensional system `a = b = 0` in two
//! variables.
//!
//! A shear `x := x + c*z` makes both leading coefficients in `z` nonzero
//! constants, so the roots of `Res_z(a, b)` are exactly the `x`-coordinates
//! of the common zeros. Rational ones are lifted through a univariate gcd in
//! `z`; anything irrational is kept as a symbolic residual and the result is
//! marked incomplete.

use num_traits::Zero;

use super::family::Point;
use crate::error::{Error, Result};
use crate::poly::elim::lc_in;
use crate::poly::rational::rat;
use crate::poly::{multivariate_gcd, rational_roots, resultant, MultiPoly, Rational, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneSolutions {
    /// Rational common zeros, sorted.
    pub points: Vec<Point>,
    /// False when some common zero has an irrational coordinate.
    pub complete: bool,
    /// Symbolic description of the unresolved solutions.
    pub unresolved: Vec<String>,
}

fn shear_candidates() -> impl Iterator<Item = i64> {
    (0..=40).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] })
}

/// Finds the rational common zeros of `a` and `b`.
///
/// Fails with `NonIsolated` when the two curves share a component.
pub fn solve_rational_points(a: &MultiPoly, b: &MultiPoly) -> Result<PlaneSolutions> {
    super::family::check_plane_pair(a, b)?;
    let none = || {
        Ok(PlaneSolutions {
            points: Vec::new(),
            complete: true,
            unresolved: Vec::new(),
        })
    };
    if a.is_zero() && b.is_zero() {
        return Err(Error::Degenerate(
            "both equations vanish identically".into(),
        ));
    }
    for (u, v) in [(a, b), (b, a)] {
        if u.is_zero() {
            return if v.is_constant() {
                none()
            } else {
                Err(Error::NonIsolated(format!("solution curve {v} = 0")))
            };
        }
    }
    if a.is_constant() || b.is_constant() {
        return none();
    }
    let g = multivariate_gcd(a, b)?;
    if !g.is_constant() {
        return Err(Error::NonIsolated(format!("common component {g} = 0")));
    }

    let (xi, zi) = (0usize, 1usize);
    let (c, sa, sb) = shear_candidates()
        .map(|c| {
            let c = rat(c);
            (c.clone(), a.shear(xi, zi, &c), b.shear(xi, zi, &c))
        })
        .find(|(_, sa, sb)| lc_in(sa, zi).is_constant() && lc_in(sb, zi).is_constant())
        .ok_or_else(|| Error::Degenerate("no shear puts the system in general position".into()))?;

    let xname = a.vars()[xi].clone();
    let zname = a.vars()[zi].clone();
    let res = resultant(&sa, &sb, &zname)?;
    let ux = UniPoly::from_multi(&res, &xname)?;
    let xroots = rational_roots(&ux)?;

    let mut out = PlaneSolutions {
        points: Vec::new(),
        complete: true,
        unresolved: Vec::new(),
    };
    let shear_note = if c.is_zero() {
        String::new()
    } else {
        format!(" after {xname} -> {xname} + {c}*{zname}")
    };
    if !xroots.is_complete() {
        out.complete = false;
        out.unresolved.push(format!(
            "solutions with {xname} a root of {}{shear_note}",
            xroots.residual
        ));
    }
    for x0 in &xroots.roots {
        let ea = UniPoly::from_multi(&sa.specialize(&[(&xname, x0.clone())])?, &zname)?;
        let eb = UniPoly::from_multi(&sb.specialize(&[(&xname, x0.clone())])?, &zname)?;
        let g = ea.gcd(&eb);
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let zroots = rational_roots(&g)?;
        if !zroots.is_complete() {
            out.complete = false;
            out.unresolved.push(format!(
                "solutions with {xname} = {x0} and {zname} a root of {}{shear_note}",
                zroots.residual
            ));
        }
        for z0 in zroots.roots {
            let x = x0 + &c * &z0;
            debug_assert!(a.eval(&[x.clone(), z0.clone()]).is_zero());
            debug_assert!(b.eval(&[x.clone(), z0.clone()]).is_zero());
            out.points.push([x, z0]);
        }
    }
    out.points.sort();
    out.points.dedup();
    Ok(out)
}

/// Evaluates at a point of the chart.
pub(crate) fn eval_at(p: &MultiPoly, pt: &Point) -> Rational {
    p.eval(&[pt[0].clone(), pt[1].clone()])
}

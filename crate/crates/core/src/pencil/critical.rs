//! Singular points of the fibers away from the pole locus.

use num_traits::Zero;

use super::family::{check_plane_pair, pole_radical, saturate, Point};
use super::solve::{eval_at, solve_rational_points};
use crate::error::{Error, Result};
use crate::local::{classify_plane_germ, milnor_number, Germ, GermClass, MilnorResult};
use crate::poly::{MultiPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPoint {
    pub point: Point,
    /// `p/q` at the point.
    pub value: Rational,
    pub milnor: MilnorResult,
    pub class: GermClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalAnalysis {
    pub points: Vec<CriticalPoint>,
    pub complete: bool,
    pub unresolved: Vec<String>,
}

/// `q p_x - p q_x` and `q p_z - p q_z`, each with its factors on `q = 0`
/// divided out.
pub fn critical_system(p: &MultiPoly, q: &MultiPoly) -> Result<[MultiPoly; 2]> {
    check_plane_pair(p, q)?;
    let rad = pole_radical(q)?;
    let mut out = Vec::with_capacity(2);
    for i in 0..2 {
        let e = &(q * &p.derivative(i)) - &(p * &q.derivative(i));
        out.push(saturate(&e, &rad)?.0);
    }
    Ok([out[0].clone(), out[1].clone()])
}

pub fn critical_analysis(p: &MultiPoly, q: &MultiPoly, cap: u32) -> Result<CriticalAnalysis> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial("denominator q"));
    }
    let [e1, e2] = critical_system(p, q)?;
    let sols = solve_rational_points(&e1, &e2).map_err(|e| match e {
        Error::NonIsolated(m) => {
            Error::NonIsolated(format!("the critical locus off the poles is a curve: {m}"))
        }
        Error::Degenerate(_) => Error::NonIsolated(
            "the critical locus off the poles is two-dimensional (p/q is constant)".into(),
        ),
        e => e,
    })?;
    let mut points = Vec::new();
    for pt in sols.points {
        let qv = eval_at(q, &pt);
        if qv.is_zero() {
            continue;
        }
        let value = eval_at(p, &pt) / qv;
        let fiber = p - &q.scale(&value);
        let germ = Germ::at(&fiber, &pt);
        let milnor = milnor_number(&germ, cap)?;
        let class = classify_plane_germ(&germ, cap)?;
        points.push(CriticalPoint {
            point: pt,
            value,
            milnor,
            class,
        });
    }
    Ok(CriticalAnalysis {
        points,
        complete: sols.complete,
        unresolved: sols.unresolved,
    })
}

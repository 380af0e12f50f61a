//! Exact polynomial arithmetic over the rationals and the elimination tools
//! built on it.

pub mod elim;
pub mod multi;
pub mod parse;
pub mod rational;
pub mod roots;
pub mod uni;

pub use elim::{is_squarefree, multivariate_gcd, resultant, squarefree_part};
pub use multi::{Monomial, MultiPoly};
pub use parse::parse_expression;
pub use rational::Rational;
pub use roots::{rational_roots, RationalRoots};
pub use uni::UniPoly;

use crate::error::{Error, Result};

/// Binary operations of the arithmetic contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn arith(op: ArithOp, a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

pub fn pow(a: &MultiPoly, exponent: i64) -> Result<MultiPoly> {
    let e = u32::try_from(exponent).map_err(|_| Error::BadExponent {
        pos: 0,
        msg: format!("exponent {exponent} must be a nonnegative 32-bit integer"),
    })?;
    Ok(a.pow(e))
}

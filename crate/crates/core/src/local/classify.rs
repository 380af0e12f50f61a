//! ADE recognition for plane-curve germs.
//!
//! Corank at most 1 gives `A_mu`. In two variables corank 2 means a vanishing
//! 2-jet, so the cubic part decides: three distinct linear factors give `D_4`,
//! a double and a simple factor give `D_mu`, a cube (or no cubic part) gives
//! `E_6`, `E_7`, `E_8` when `mu` matches and is left unclassified otherwise.

use std::fmt;
use std::str::FromStr;

use super::milnor::{hessian_corank, milnor_number, Germ};
use crate::error::{Error, Result};
use crate::poly::squarefree_part;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GermLabel {
    Smooth,
    A(u32),
    D(u32),
    E6,
    E7,
    E8,
    Unclassified,
}

impl fmt::Display for GermLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GermLabel::Smooth => write!(f, "smooth"),
            GermLabel::A(k) => write!(f, "A_{k}"),
            GermLabel::D(k) => write!(f, "D_{k}"),
            GermLabel::E6 => write!(f, "E_6"),
            GermLabel::E7 => write!(f, "E_7"),
            GermLabel::E8 => write!(f, "E_8"),
            GermLabel::Unclassified => write!(f, "unclassified"),
        }
    }
}

impl FromStr for GermLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("unknown germ label `{s}`"));
        Ok(match s {
            "smooth" => GermLabel::Smooth,
            "unclassified" => GermLabel::Unclassified,
            "E_6" => GermLabel::E6,
            "E_7" => GermLabel::E7,
            "E_8" => GermLabel::E8,
            _ => {
                let (kind, k) = s.split_once('_').ok_or_else(bad)?;
                let k: u32 = k.parse().map_err(|_| bad())?;
                match kind {
                    "A" if k >= 1 => GermLabel::A(k),
                    "D" if k >= 4 => GermLabel::D(k),
                    _ => return Err(bad()),
                }
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GermClass {
    pub label: GermLabel,
    pub mu: usize,
    pub corank: usize,
}

impl fmt::Display for GermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (mu = {}, corank = {})",
            self.label, self.mu, self.corank
        )
    }
}

fn e_series(mu: usize) -> GermLabel {
    match mu {
        6 => GermLabel::E6,
        7 => GermLabel::E7,
        8 => GermLabel::E8,
        _ => GermLabel::Unclassified,
    }
}

pub fn classify_plane_germ(g: &Germ, cap: u32) -> Result<GermClass> {
    if g.poly().nvars() != 2 {
        return Err(Error::Invalid(format!(
            "classification needs a germ in exactly 2 variables, got {}",
            g.poly().nvars()
        )));
    }
    let mu = milnor_number(g, cap)?.mu;
    if mu == 0 {
        return Ok(GermClass {
            label: GermLabel::Smooth,
            mu,
            corank: 0,
        });
    }
    let corank = hessian_corank(g)?;
    let label = if corank <= 1 {
        GermLabel::A(mu as u32)
    } else {
        let cubic = g.poly().homogeneous_part(3);
        if cubic.is_zero() {
            e_series(mu)
        } else {
            match squarefree_part(&cubic)?.degree() {
                Some(3) | Some(2) => GermLabel::D(mu as u32),
                _ => e_series(mu),
            }
        }
    };
    Ok(GermClass { label, mu, corank })
}

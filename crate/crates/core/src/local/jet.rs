//! Truncated-jet linear algebra for local quotient dimensions.
//!
//! For an ideal `I = (g_1, ..., g_r)` with all generators vanishing at the
//! origin, `d_k = dim Q[x] / (I + m^k)` is computed as the codimension in the
//! space of polynomials of degree `< k` of the span of the truncated products
//! `m * g_i`. The sequence `d_k` is nondecreasing; the first `k` with
//! `d_{k+1} = d_k` gives `m^k ⊂ I + m^(k+1)`, hence `m^k ⊂ I` locally by
//! Nakayama, and `d_k` is the dimension of the local quotient.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, Rational};

pub const DEFAULT_JET_CAP: u32 = 64;

/// Stabilized local quotient dimension with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetQuotient {
    pub dim: usize,
    /// First `k` with `d_k = d_(k+1)`.
    pub stabilization_degree: u32,
    /// Monomials (exponent vectors) spanning the quotient at the stable order.
    pub basis: Vec<Vec<u32>>,
}

type SparseRow = Vec<(usize, BigInt)>;

fn make_primitive(row: &mut SparseRow) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
    let neg = row.first().is_some_and(|(_, c)| c.is_negative());
    if g > BigInt::from(1) || neg {
        let g = if neg { -g } else { g };
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `b * row - a * pivot` where `a`, `b` are the leading entries.
fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let a = &row[0].1;
    let b = &pivot[0].1;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, val) = if ci < cj {
            i += 1;
            (ci, b * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(a * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, b * &row[i - 1].1 - a * &pivot[j - 1].1)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

/// Fraction-free echelon reduction keyed by leading column.
///
/// Rows are reduced on their leading entry only, in the order given; the
/// result is deterministic.
#[derive(Default)]
pub(crate) struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, c)| !c.is_zero());
        row.sort_by_key(|e| e.0);
        while let Some(&(lead, _)) = row.first() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    row = eliminate(&row, p);
                    make_primitive(&mut row);
                }
                None => {
                    make_primitive(&mut row);
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }
}

/// Exact rank of a dense rational matrix.
pub(crate) fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut ech = Echelon::default();
    for r in rows {
        let l = crate::poly::rational::lcm_of_denominators(r);
        let row: SparseRow = r
            .iter()
            .enumerate()
            .map(|(j, c)| (j, (c * Rational::from_integer(l.clone())).to_integer()))
            .collect();
        ech.insert(row);
    }
    ech.rank()
}

/// Exponent vectors of total degree `< k` in `n` variables, by degree then
/// lexicographically.
fn monomials_below(n: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for d in 0..k {
        let mut cur = vec![0u32; n];
        fill(&mut out, &mut cur, 0, d);
    }
    out
}

fn fill(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, i: usize, left: u32) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(cur.clone());
        return;
    }
    if cur.is_empty() {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(out, cur, i + 1, left - e);
    }
}

struct IntGenerator {
    order: u32,
    terms: Vec<(Vec<u32>, BigInt)>,
}

fn quotient_at(gens: &[IntGenerator], n: usize, k: u32) -> (usize, Vec<Vec<u32>>) {
    let monos = monomials_below(n, k);
    let index: HashMap<&[u32], usize> = monos
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let mut ech = Echelon::default();
    for g in gens {
        if g.order >= k {
            continue;
        }
        for m in monos.iter().filter(|m| m.iter().sum::<u32>() + g.order < k) {
            let mut row: SparseRow = Vec::with_capacity(g.terms.len());
            for (e, c) in &g.terms {
                let prod: Vec<u32> = e.iter().zip(m).map(|(a, b)| a + b).collect();
                if prod.iter().sum::<u32>() < k {
                    row.push((index[prod.as_slice()], c.clone()));
                }
            }
            ech.insert(row);
        }
    }
    let basis: Vec<Vec<u32>> = monos
        .iter()
        .enumerate()
        .filter(|(i, _)| !ech.is_pivot(*i))
        .map(|(_, m)| m.clone())
        .collect();
    (monos.len() - ech.rank(), basis)
}

/// Dimension of the local quotient `Q[x]_(x) / (generators)` at the origin.
///
/// Errors with `NonIsolated` when `d_k` has not stabilized by `k = cap`.
pub fn local_quotient(generators: &[MultiPoly], cap: u32) -> Result<JetQuotient> {
    let n = generators.first().map_or(0, MultiPoly::nvars);
    let gens: Vec<IntGenerator> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let g = g.normalized();
            IntGenerator {
                order: g.order().unwrap(),
                terms: g
                    .terms()
                    .map(|(m, c)| (m.exponents().to_vec(), c.to_integer()))
                    .collect(),
            }
        })
        .collect();
    if gens.iter().any(|g| g.order == 0) {
        return Ok(JetQuotient {
            dim: 0,
            stabilization_degree: 1,
            basis: Vec::new(),
        });
    }
    let (mut prev, mut prev_basis) = quotient_at(&gens, n, 1);
    for k in 1..=cap {
        let (next, next_basis) = quotient_at(&gens, n, k + 1);
        if next == prev {
            return Ok(JetQuotient {
                dim: prev,
                stabilization_degree: k,
                basis: prev_basis,
            });
        }
        prev = next;
        prev_basis = next_basis;
    }
    Err(Error::NonIsolated(format!(
        "local quotient dimension did not stabilize by jet order {cap} (not isolated or cap too low)"
    )))
}

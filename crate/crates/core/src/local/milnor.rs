use num_traits::Zero;

use super::jet::{local_quotient, rational_rank};
use crate::error::{Error, Result};
use crate::poly::{multivariate_gcd, MultiPoly, Rational};

/// A polynomial germ at the origin of its chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Germ(MultiPoly);

impl Germ {
    pub fn new(poly: MultiPoly) -> Self {
        Germ(poly)
    }

    /// The germ of `poly` at `point`, moved to the origin.
    pub fn at(poly: &MultiPoly, point: &[Rational]) -> Self {
        Germ(poly.translate(point))
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn vanishes(&self) -> bool {
        self.0.constant_term().is_zero()
    }

    pub fn has_linear_part(&self) -> bool {
        !self.0.homogeneous_part(1).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorResult {
    pub mu: usize,
    pub stabilization_degree: u32,
    pub basis_monomials: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Intersection {
    Finite(usize),
    Infinite,
}

impl Intersection {
    pub fn finite(self) -> Option<usize> {
        match self {
            Intersection::Finite(n) => Some(n),
            Intersection::Infinite => None,
        }
    }
}

/// Whether `u` and `v` share a curve component through the origin.
fn common_component_at_origin(u: &MultiPoly, v: &MultiPoly) -> Result<Option<MultiPoly>> {
    let g = multivariate_gcd(u, v)?;
    if !g.is_constant() && g.constant_term().is_zero() {
        Ok(Some(g))
    } else {
        Ok(None)
    }
}

/// Milnor number: the dimension of the local Jacobian algebra at the origin.
pub fn milnor_number(g: &Germ, cap: u32) -> Result<MilnorResult> {
    if !g.vanishes() {
        return Err(Error::NotVanishing);
    }
    let grad = g.poly().gradient();
    if grad.len() == 2 {
        if let Some(common) = common_component_at_origin(&grad[0], &grad[1])? {
            return Err(Error::NonIsolated(format!(
                "the partials of {} share the factor {} through the origin",
                g.poly(),
                common
            )));
        }
    }
    let q = local_quotient(&grad, cap)?;
    Ok(MilnorResult {
        mu: q.dim,
        stabilization_degree: q.stabilization_degree,
        basis_monomials: q.basis,
    })
}

/// Local intersection multiplicity `dim O/(u, v)` at the origin.
pub fn local_intersection_multiplicity(u: &Germ, v: &Germ, cap: u32) -> Result<Intersection> {
    if !u.vanishes() || !v.vanishes() {
        return Err(Error::NotVanishing);
    }
    if common_component_at_origin(u.poly(), v.poly())?.is_some() {
        return Ok(Intersection::Infinite);
    }
    let q = local_quotient(&[u.poly().clone(), v.poly().clone()], cap)?;
    Ok(Intersection::Finite(q.dim))
}

/// `n` minus the rank of the Hessian at the origin.
pub fn hessian_corank(g: &Germ) -> Result<usize> {
    if !g.vanishes() {
        return Err(Error::NotVanishing);
    }
    if g.has_linear_part() {
        return Err(Error::NonzeroLinearPart);
    }
    let n = g.poly().nvars();
    let origin = vec![Rational::zero(); n];
    let grad = g.poly().gradient();
    let hess: Vec<Vec<Rational>> = grad
        .iter()
        .map(|d| (0..n).map(|j| d.derivative(j).eval(&origin)).collect())
        .collect();
    Ok(n - rational_rank(&hess))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::DEFAULT_JET_CAP as CAP;
    use crate::poly::parse_expression;

    fn g(s: &str) -> Germ {
        Germ::new(parse_expression(s, &["x", "z"]).unwrap())
    }

    #[test]
    fn milnor_examples() {
        assert_eq!(milnor_number(&g("x^2 + z^2"), CAP).unwrap().mu, 1);
        assert_eq!(milnor_number(&g("x^2 + x*z^2"), CAP).unwrap().mu, 3);
        assert_eq!(
            milnor_number(&g("x*z^2 - x^4 + x^2*z^2"), CAP).unwrap().mu,
            5
        );
        assert_eq!(milnor_number(&g("x + z^5"), CAP).unwrap().mu, 0);
    }

    #[test]
    fn milnor_certificate_shape() {
        let r = milnor_number(&g("x^3 + z^4"), CAP).unwrap();
        assert_eq!(r.mu, 6);
        assert_eq!(r.basis_monomials.len(), r.mu);
    }

    #[test]
    fn milnor_errors() {
        assert!(matches!(
            milnor_number(&g("x^2 + 1"), CAP),
            Err(Error::NotVanishing)
        ));
        assert!(matches!(
            milnor_number(&g("x^2*z"), CAP),
            Err(Error::NonIsolated(_))
        ));
        assert!(matches!(
            milnor_number(&g("x^2"), CAP),
            Err(Error::NonIsolated(_))
        ));
    }

    #[test]
    fn milnor_three_variables() {
        let germ = Germ::new(parse_expression("x^2 + y^3 + z^4", &["x", "y", "z"]).unwrap());
        assert_eq!(milnor_number(&germ, CAP).unwrap().mu, 6);
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(
            local_intersection_multiplicity(&g("x"), &g("z"), CAP).unwrap(),
            Intersection::Finite(1)
        );
        assert_eq!(
            local_intersection_multiplicity(&g("z^2 + 2*x"), &g("x*z^2 + x^2"), CAP).unwrap(),
            Intersection::Finite(4)
        );
        assert_eq!(
            local_intersection_multiplicity(&g("x"), &g("x*z"), CAP).unwrap(),
            Intersection::Infinite
        );
        // a common component away from the origin does not matter
        assert_eq!(
            local_intersection_multiplicity(&g("x*(z-1)"), &g("z*(z-1)"), CAP).unwrap(),
            Intersection::Finite(1)
        );
        assert!(matches!(
            local_intersection_multiplicity(&g("x + 1"), &g("z"), CAP),
            Err(Error::NotVanishing)
        ));
    }

    #[test]
    fn corank_examples() {
        assert_eq!(hessian_corank(&g("x^2 + z^2")).unwrap(), 0);
        assert_eq!(hessian_corank(&g("x^2 + x*z^2")).unwrap(), 1);
        assert_eq!(hessian_corank(&g("x*z^2 - x^4")).unwrap(), 2);
        assert_eq!(hessian_corank(&g("x*z")).unwrap(), 0);
        assert!(matches!(
            hessian_corank(&g("x + z^2")),
            Err(Error::NonzeroLinearPart)
        ));
    }
}

//! Polar curve of the pair (fiber map, pole equation) and the special-value
//! candidates it produces.

use num_traits::Zero;

use super::family::{pole_radical, saturate, PlaneGermFamily};
use crate::error::{Error, Result};
use crate::local::{local_intersection_multiplicity, Germ, Intersection};
use crate::poly::elim::lc_in;
use crate::poly::rational::rat;
use crate::poly::{rational_roots, resultant, MultiPoly, Rational, UniPoly};

/// `J = p_x q_z - p_z q_x` with every factor supported on `q = 0` divided out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarCurve {
    /// Normalized equation of the saturated curve.
    pub equation: MultiPoly,
    /// Factors removed during saturation, in removal order.
    pub removed_factors: Vec<MultiPoly>,
    pub jacobian: MultiPoly,
}

impl PolarCurve {
    /// The germ at the base point is empty.
    pub fn is_void(&self) -> bool {
        !self.equation.constant_term().is_zero()
    }
}

pub fn polar_curve(fam: &PlaneGermFamily) -> Result<PolarCurve> {
    let (p, q) = (fam.p(), fam.q());
    let jac = &(&p.derivative(0) * &q.derivative(1)) - &(&p.derivative(1) * &q.derivative(0));
    if jac.is_zero() {
        return Err(Error::Degenerate(format!(
            "p = {p} and q = {q} are functionally dependent (zero Jacobian)"
        )));
    }
    let (eq, removed) = saturate(&jac, &pole_radical(q)?)?;
    Ok(PolarCurve {
        equation: eq.normalized(),
        removed_factors: removed,
        jacobian: jac,
    })
}

/// `i_0(polar curve, p - a*q)`; zero when the polar germ is void.
pub fn polar_intersection(
    fam: &PlaneGermFamily,
    polar: &PolarCurve,
    a: &Rational,
    cap: u32,
) -> Result<usize> {
    if polar.is_void() {
        return Ok(0);
    }
    let fiber = fam.fiber(a);
    match local_intersection_multiplicity(
        &Germ::new(polar.equation.clone()),
        &Germ::new(fiber.clone()),
        cap,
    )? {
        Intersection::Finite(n) => Ok(n),
        Intersection::Infinite => Err(Error::NonIsolated(format!(
            "the polar curve {} shares a component with the fiber {fiber} = 0 at t = {a}",
            polar.equation
        ))),
    }
}

/// Rational values of the parameter at which the polar intersection may jump.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidates {
    pub values: Vec<Rational>,
    /// False when the eliminant has irrational roots that were not analyzed.
    pub complete: bool,
    pub note: Option<String>,
}

fn parameter_name(vars: &[String]) -> String {
    std::iter::once("t".to_string())
        .chain((0..).map(|i| format!("t{i}")))
        .find(|n| !vars.contains(n))
        .unwrap()
}

/// Candidate special values: rational roots of the lowest nonvanishing
/// `z`-coefficient of `Res_x(polar, p - t*q)`.
pub fn special_value_candidates(fam: &PlaneGermFamily, polar: &PolarCurve) -> Result<Candidates> {
    if polar.is_void() {
        return Ok(Candidates {
            values: Vec::new(),
            complete: true,
            note: None,
        });
    }
    let (xi, zi) = (0usize, 1usize);
    let gamma = &polar.equation;
    // regular in x: z := z + c*x until the leading x-coefficient is constant
    let c = (0i64..)
        .take(200)
        .map(rat)
        .find(|c| lc_in(&gamma.shear(zi, xi, c), xi).is_constant())
        .ok_or_else(|| Error::Degenerate("no shear makes the polar curve regular".into()))?;
    let vars = fam.vars();
    let t = parameter_name(vars);
    let ring = [vars[0].clone(), vars[1].clone(), t.clone()];
    let lift = |m: &MultiPoly| -> Result<MultiPoly> { m.shear(zi, xi, &c).with_vars(&ring) };
    let g3 = lift(gamma)?;
    let tvar = MultiPoly::var(&ring, &t)?;
    let family = &lift(fam.p())? - &(&tvar * &lift(fam.q())?);
    let r = resultant(&g3, &family, &vars[0])?;
    let lowest = r
        .coeffs_in(zi)
        .into_iter()
        .find(|c| !c.is_zero())
        .expect("resultant is nonzero for a reduced fraction");
    let ct = UniPoly::from_multi(&lowest, &t)?;
    let roots = rational_roots(&ct)?;
    let note = (!roots.is_complete()).then(|| {
        format!(
            "candidate special values include the irrational roots of {}",
            roots.residual
        )
    });
    Ok(Candidates {
        complete: roots.is_complete(),
        values: roots.roots,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::DEFAULT_JET_CAP as CAP;
    use crate::poly::parse_expression;

    fn fam(p: &str, q: &str) -> PlaneGermFamily {
        let v = ["x", "z"];
        PlaneGermFamily::new(
            &parse_expression(p, &v).unwrap(),
            &parse_expression(q, &v).unwrap(),
            [rat(0), rat(0)],
        )
        .unwrap()
    }

    fn xz(s: &str) -> MultiPoly {
        parse_expression(s, &["x", "z"]).unwrap()
    }

    #[test]
    fn polar_curve_examples() {
        let pc = polar_curve(&fam("x^2 + x*z^2", "z^3")).unwrap();
        assert_eq!(pc.jacobian, xz("3*z^2*(z^2 + 2*x)"));
        assert_eq!(pc.equation, xz("z^2 + 2*x"));
        let removed = pc.removed_factors.iter().fold(xz("1"), |acc, f| &acc * f);
        assert_eq!(removed, xz("z^2"));

        let pc = polar_curve(&fam("x^2 + x*z^2", "z^2")).unwrap();
        assert_eq!(pc.jacobian, xz("2*z*(2*x + z^2)"));
        assert_eq!(pc.equation, xz("2*x + z^2"));

        let pc = polar_curve(&fam("x", "z")).unwrap();
        assert!(pc.equation.is_one());
        assert!(pc.is_void());
    }

    #[test]
    fn degenerate_pair() {
        // q = p^2 gives a zero Jacobian
        let v = ["x", "z"];
        let f = PlaneGermFamily::unchecked(
            &parse_expression("x", &v).unwrap(),
            &parse_expression("x^2", &v).unwrap(),
            [rat(0), rat(0)],
        );
        assert!(matches!(polar_curve(&f), Err(Error::Degenerate(_))));
    }

    #[test]
    fn intersections_along_the_polar_curve() {
        let f = fam("x^2 + x*z^2", "z^3");
        let pc = polar_curve(&f).unwrap();
        assert_eq!(polar_intersection(&f, &pc, &rat(0), CAP).unwrap(), 4);
        assert_eq!(polar_intersection(&f, &pc, &rat(5), CAP).unwrap(), 3);
    }

    #[test]
    fn candidate_examples() {
        let f = fam("x^2 + x*z^2", "z^3");
        let c = special_value_candidates(&f, &polar_curve(&f).unwrap()).unwrap();
        assert_eq!(c.values, vec![rat(0)]);
        assert!(c.complete);

        let f = fam("x^2 + x*z^2", "z^2");
        let c = special_value_candidates(&f, &polar_curve(&f).unwrap()).unwrap();
        assert_eq!(c.values, vec![rat(0)]);

        let f = fam("x", "z");
        let c = special_value_candidates(&f, &polar_curve(&f).unwrap()).unwrap();
        assert!(c.values.is_empty());
    }

    #[test]
    fn polar_curve_tangent_to_the_x_axis_gets_sheared() {
        // polar curve z = 0 direction: p = z - x^2, q = x
        let f = fam("z - x^2", "x");
        let pc = polar_curve(&f).unwrap();
        let c = special_value_candidates(&f, &pc).unwrap();
        assert!(c.complete);
        for a in &c.values {
            assert!(polar_intersection(&f, &pc, a, CAP).is_ok());
        }
    }
}

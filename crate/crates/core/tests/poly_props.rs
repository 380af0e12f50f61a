use polar_milnor::poly::rational::{rat, ratio};
use polar_milnor::poly::{
    multivariate_gcd, parse_expression, rational_roots, resultant, squarefree_part, MultiPoly,
    Rational, UniPoly,
};
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn poly_strategy(nvars: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), -6i64..=6),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        MultiPoly::from_terms(&VARS[..nvars], terms.into_iter().map(|(e, c)| (e, rat(c)))).unwrap()
    })
}

fn point_strategy(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-7i64..=7, 1i64..=4), n)
        .prop_map(|v| v.into_iter().map(|(a, b)| ratio(a, b)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(3, 5, 3), b in poly_strategy(3, 5, 3), c in poly_strategy(3, 5, 3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        let one = MultiPoly::one(&VARS);
        prop_assert_eq!(&a * &one, a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_strategy(3, 5, 3), b in poly_strategy(3, 5, 3), pt in point_strategy(3)) {
        prop_assert_eq!((&a + &b).eval(&pt), a.eval(&pt) + b.eval(&pt));
        prop_assert_eq!((&a * &b).eval(&pt), a.eval(&pt) * b.eval(&pt));
    }

    #[test]
    fn leibniz_rule(a in poly_strategy(3, 5, 3), b in poly_strategy(3, 5, 3), i in 0usize..3) {
        let lhs = (&a * &b).derivative(i);
        let rhs = &(&a.derivative(i) * &b) + &(&a * &b.derivative(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_reparses(a in poly_strategy(3, 6, 4)) {
        let back = parse_expression(&a.to_string(), &VARS).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn resultant_vanishes_at_common_roots(
        r1 in (-4i64..=4), r2 in (-4i64..=4),
        f in poly_strategy(2, 3, 2), g in poly_strategy(2, 3, 2),
    ) {
        // both vanish on x = r1 + r2*y, so Res_x is zero
        let v = ["x", "y"];
        let lin = parse_expression(&format!("x - ({r1}) - ({r2})*y"), &v).unwrap();
        let one = MultiPoly::one(&v);
        let a = &lin * &(&f + &one);
        let b = &lin * &(&g + &one.scale(&rat(2)));
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert!(resultant(&a, &b, "x").unwrap().is_zero());
    }

    #[test]
    fn resultant_matches_root_product(
        rs in prop::collection::vec(-5i64..=5, 1..4),
        g in prop::collection::vec(-5i64..=5, 1..4),
    ) {
        // Res(prod (x - r_i), g) = prod g(r_i)
        let v = ["x"];
        let mut f = MultiPoly::one(&v);
        for r in &rs {
            f = &f * &parse_expression(&format!("x - ({r})"), &v).unwrap();
        }
        let gp = UniPoly::new("x", g.iter().map(|c| rat(*c)).collect()).to_multi();
        prop_assume!(!gp.is_zero());
        let expected: Rational = rs
            .iter()
            .map(|r| gp.eval(&[rat(*r)]))
            .fold(rat(1), |acc, v| acc * v);
        let got = resultant(&f, &gp, "x").unwrap();
        prop_assert_eq!(got.constant_term(), expected);
    }

    #[test]
    fn squarefree_part_ignores_multiplicity(p in poly_strategy(2, 3, 2), q in poly_strategy(2, 3, 2)) {
        prop_assume!(!p.is_constant() && !q.is_zero());
        let p2q = &(&p * &p) * &q;
        let pq = &p * &q;
        prop_assert_eq!(squarefree_part(&p2q).unwrap(), squarefree_part(&pq).unwrap());
    }

    #[test]
    fn gcd_divides_both(p in poly_strategy(2, 3, 2), q in poly_strategy(2, 3, 2), c in poly_strategy(2, 2, 2)) {
        prop_assume!(!c.is_zero());
        let a = &p * &c;
        let b = &q * &c;
        let g = multivariate_gcd(&a, &b).unwrap();
        if !a.is_zero() {
            prop_assert!(a.div_exact(&g).is_some());
        }
        if !b.is_zero() {
            prop_assert!(b.div_exact(&g).is_some());
        }
        if !a.is_zero() && !b.is_zero() {
            prop_assert!(g.div_exact(&c.normalized()).is_some());
        }
    }

    #[test]
    fn rational_roots_are_found(
        roots in prop::collection::vec((-9i64..=9, 1i64..=5), 1..5),
        extra in 0u32..2,
    ) {
        let mut u = UniPoly::from_ints("t", &[1]);
        for (a, b) in &roots {
            u = u.mul(&UniPoly::from_ints("t", &[-*a, *b]));
        }
        if extra == 1 {
            u = u.mul(&UniPoly::from_ints("t", &[-2, 0, 1]));
        }
        let got = rational_roots(&u).unwrap();
        let mut want: Vec<Rational> = roots.iter().map(|(a, b)| ratio(*a, *b)).collect();
        want.sort();
        want.dedup();
        prop_assert_eq!(&got.roots, &want);
        prop_assert_eq!(got.is_complete(), extra == 0);
    }
}

#[test]
fn resultant_of_textbook_pair() {
    let v = ["x", "y"];
    let f = parse_expression("x^2 + y^2 - 1", &v).unwrap();
    let g = parse_expression("x - y", &v).unwrap();
    let r = resultant(&f, &g, "x").unwrap();
    assert_eq!(r, parse_expression("2*y^2 - 1", &v).unwrap());
}

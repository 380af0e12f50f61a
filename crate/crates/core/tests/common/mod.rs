#![allow(dead_code)]

use polar_milnor::pencil::{ChartSpec, PlaneGermFamily};
use polar_milnor::poly::rational::rat;
use polar_milnor::poly::{parse_expression, MultiPoly};

pub const TUPLES: [(u32, u32, u32, u32); 4] =
    [(1, 1, 1, 2), (1, 2, 2, 2), (2, 1, 1, 3), (2, 2, 2, 3)];

/// A family at the origin of a chart, with its expected invariants.
pub struct Item {
    pub name: String,
    pub vars: [&'static str; 2],
    pub p: String,
    pub q: String,
    pub mu_generic: usize,
    /// `(a, mu(a), lambda)` at the special value, if any.
    pub special: Option<(i64, usize, usize)>,
}

impl Item {
    pub fn p(&self) -> MultiPoly {
        parse_expression(&self.p, &self.vars).unwrap()
    }

    pub fn q(&self) -> MultiPoly {
        parse_expression(&self.q, &self.vars).unwrap()
    }

    pub fn family(&self) -> PlaneGermFamily {
        PlaneGermFamily::new(&self.p(), &self.q(), [rat(0), rat(0)]).unwrap()
    }

    pub fn chart(&self) -> ChartSpec {
        ChartSpec {
            name: self.name.clone(),
            p: self.p(),
            q: self.q(),
            base_points: None,
        }
    }
}

pub fn jump_family(t: (u32, u32, u32, u32)) -> [Item; 3] {
    let (a, b, r, s) = t;
    let (au, bu) = (a as usize, b as usize);
    [
        Item {
            name: format!("y=1 {t:?}"),
            vars: ["x", "z"],
            p: format!("x^{} + x*z^{}", a + 1, a + b),
            q: format!("z^{s}"),
            mu_generic: au * (s as usize - 1),
            special: Some((0, au * au + au * bu + bu, (b + a * r) as usize)),
        },
        Item {
            name: format!("x=1 {t:?}"),
            vars: ["y", "z"],
            p: format!("z^{} + y^{b}", a + b),
            q: format!("y^{r}*z^{s}"),
            mu_generic: (bu - 1) * (au + bu - 1),
            special: None,
        },
        Item {
            name: format!("z=1 {t:?}"),
            vars: ["x", "y"],
            p: format!("x*(1 + x^{a}*y^{b})"),
            q: format!("y^{r}"),
            mu_generic: 0,
            special: None,
        },
    ]
}

pub fn quartic_pencil() -> [Item; 2] {
    [
        Item {
            name: "y=1".into(),
            vars: ["x", "z"],
            p: "x^2 + x*z^2".into(),
            q: "z^3".into(),
            mu_generic: 2,
            special: Some((0, 3, 1)),
        },
        Item {
            name: "w=1".into(),
            vars: ["x", "z"],
            p: "x*z^2 + x^2*z^2 - x^4".into(),
            q: "z^3".into(),
            mu_generic: 5,
            special: None,
        },
    ]
}

pub fn corpus() -> Vec<Item> {
    let mut v: Vec<Item> = TUPLES.iter().flat_map(|t| jump_family(*t)).collect();
    v.extend(quartic_pencil());
    v
}

pub fn jump_family_atlas(t: (u32, u32, u32, u32)) -> Vec<ChartSpec> {
    jump_family(t).iter().map(Item::chart).collect()
}

pub fn quartic_pencil_atlas() -> Vec<ChartSpec> {
    quartic_pencil().iter().map(Item::chart).collect()
}

/// The unit twists, written in the chart's own variables.
pub fn units(vars: [&str; 2]) -> Vec<MultiPoly> {
    let [u, v] = vars;
    [
        "2".to_string(),
        format!("1 + {u}"),
        format!("1 + {v}"),
        format!("3 + {u} + {v}"),
    ]
    .iter()
    .map(|s| parse_expression(s, &vars).unwrap())
    .collect()
}

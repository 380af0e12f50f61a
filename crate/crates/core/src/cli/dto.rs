//! Serializable report shapes. Rationals are `"num/den"` strings and field
//! order is the emitted key order.

use serde::{Deserialize, Serialize};

use crate::local::{GermClass, MilnorResult};
use crate::pencil::{
    point_strings, ChartReport, CriticalPoint, GermReport, PencilReport, SpecialValueRecord,
};
use crate::poly::rational::to_fraction_string;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilJson {
    pub charts: Vec<ChartJson>,
    pub atypical_values: Vec<String>,
    pub per_value: Vec<ValueJson>,
    pub totals: TotalsJson,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartJson {
    pub p: String,
    pub q: String,
    pub critical_points: Vec<CriticalJson>,
    pub base_points: Vec<BasePointJson>,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalJson {
    pub point: [String; 2],
    pub value: String,
    pub mu: usize,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasePointJson {
    pub point: [String; 2],
    pub generic_mu: usize,
    pub class_generic: String,
    pub specials: Vec<SpecialJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialJson {
    pub a: String,
    pub mu_special: usize,
    pub mu_generic: usize,
    pub lambda_polar: usize,
    pub lambda_jump: usize,
    pub splitting: bool,
    pub mu_nearby_sum: usize,
    pub class_special: String,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueJson {
    pub a: String,
    pub mu_a: usize,
    pub lambda_a: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalsJson {
    pub mu: usize,
    pub lambda: usize,
    pub b2: usize,
    pub chi_rel: i64,
}

/// Output of the `germ` subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GermJson {
    pub point: [String; 2],
    pub polar_curve: String,
    pub generic_samples: Vec<String>,
    pub generic_mu: usize,
    pub class_generic: String,
    pub specials: Vec<SpecialJson>,
    pub complete: bool,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuJson {
    pub point: Vec<String>,
    pub mu: usize,
    pub stabilization_degree: u32,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub point: Vec<String>,
    pub class: String,
    pub mu: usize,
    pub corank: usize,
}

fn label(c: &GermClass) -> String {
    c.label.to_string()
}

impl From<&SpecialValueRecord> for SpecialJson {
    fn from(r: &SpecialValueRecord) -> Self {
        SpecialJson {
            a: to_fraction_string(&r.a),
            mu_special: r.mu_special,
            mu_generic: r.mu_generic,
            lambda_polar: r.lambda_polar,
            lambda_jump: r.lambda_jump,
            splitting: r.splitting_detected,
            mu_nearby_sum: r.mu_nearby_sum,
            class_special: label(&r.class_special),
            trivial: r.trivial,
        }
    }
}

impl From<&CriticalPoint> for CriticalJson {
    fn from(c: &CriticalPoint) -> Self {
        CriticalJson {
            point: point_strings(&c.point),
            value: to_fraction_string(&c.value),
            mu: c.milnor.mu,
            class: label(&c.class),
        }
    }
}

impl From<&GermReport> for BasePointJson {
    fn from(g: &GermReport) -> Self {
        BasePointJson {
            point: point_strings(&g.base_point),
            generic_mu: g.generic.mu,
            class_generic: label(&g.generic.class),
            specials: g.specials.iter().map(SpecialJson::from).collect(),
        }
    }
}

impl From<&GermReport> for GermJson {
    fn from(g: &GermReport) -> Self {
        GermJson {
            point: point_strings(&g.base_point),
            polar_curve: g.polar.equation.to_string(),
            generic_samples: g.generic.samples.iter().map(to_fraction_string).collect(),
            generic_mu: g.generic.mu,
            class_generic: label(&g.generic.class),
            specials: g.specials.iter().map(SpecialJson::from).collect(),
            complete: g.complete,
            warnings: g.warnings.clone(),
        }
    }
}

impl From<&ChartReport> for ChartJson {
    fn from(c: &ChartReport) -> Self {
        ChartJson {
            p: c.p.to_string(),
            q: c.q.to_string(),
            critical_points: c.critical_points.iter().map(CriticalJson::from).collect(),
            base_points: c.base_points.iter().map(BasePointJson::from).collect(),
            complete: c.complete,
        }
    }
}

impl From<&PencilReport> for PencilJson {
    fn from(r: &PencilReport) -> Self {
        PencilJson {
            charts: r.charts.iter().map(ChartJson::from).collect(),
            atypical_values: r.atypical_values.iter().map(to_fraction_string).collect(),
            per_value: r
                .per_value
                .iter()
                .map(|v| ValueJson {
                    a: to_fraction_string(&v.a),
                    mu_a: v.mu_a,
                    lambda_a: v.lambda_a,
                })
                .collect(),
            totals: TotalsJson {
                mu: r.mu,
                lambda: r.lambda,
                b2: r.b2,
                chi_rel: r.chi_rel,
            },
            warnings: r.warnings.clone(),
        }
    }
}

pub fn monomial_string(exps: &[u32], vars: &[String]) -> String {
    let parts: Vec<String> = exps
        .iter()
        .zip(vars)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| {
            if *e == 1 {
                v.clone()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl MuJson {
    pub fn new(point: &[crate::poly::Rational], m: &MilnorResult, vars: &[String]) -> Self {
        MuJson {
            point: point.iter().map(to_fraction_string).collect(),
            mu: m.mu,
            stabilization_degree: m.stabilization_degree,
            basis: m
                .basis_monomials
                .iter()
                .map(|e| monomial_string(e, vars))
                .collect(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_round_trips() {
        let r = PencilJson {
            charts: vec![],
            atypical_values: vec![],
            per_value: vec![],
            totals: TotalsJson {
                mu: 0,
                lambda: 0,
                b2: 0,
                chi_rel: 0,
            },
            warnings: vec![],
        };
        let s = to_json(&r);
        let back: PencilJson = serde_json::from_str(&s).unwrap();
        assert_eq!(to_json(&back), s);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["totals"]["b2"], 0);
    }

    #[test]
    fn monomials() {
        let v = vec!["x".to_string(), "z".to_string()];
        assert_eq!(monomial_string(&[0, 0], &v), "1");
        assert_eq!(monomial_string(&[2, 1], &v), "x^2*z");
    }
}

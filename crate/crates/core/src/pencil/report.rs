//! Global analysis over a declared chart atlas.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rayon::prelude::*;

use super::critical::{critical_analysis, CriticalAnalysis, CriticalPoint};
use super::family::{format_point, reduce_fraction, PlaneGermFamily, Point};
use super::germ::{analyze_germ, AnalysisOptions, GermReport};
use super::sampler::derive_seed;
use super::solve::{eval_at, solve_rational_points, PlaneSolutions};
use crate::error::{Error, Result};
use crate::local::DEFAULT_JET_CAP;
use crate::poly::{MultiPoly, Rational};

/// Common zeros of `p` and `q` with rational coordinates.
pub fn base_points(p: &MultiPoly, q: &MultiPoly) -> Result<PlaneSolutions> {
    solve_rational_points(p, q).map_err(|e| match e {
        Error::NonIsolated(m) => Error::NotReduced(m),
        e => e,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartSpec {
    pub name: String,
    pub p: MultiPoly,
    pub q: MultiPoly,
    /// Analyze only these base points instead of enumerating them.
    pub base_points: Option<Vec<Point>>,
}

/// A declared chart transition: a point of `from` maps to the point of `to`
/// whose coordinates are `coords[i] / den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapMap {
    pub from: String,
    pub to: String,
    pub den: MultiPoly,
    pub coords: Vec<MultiPoly>,
}

impl OverlapMap {
    /// Image of `pt`, or `None` off the overlap.
    pub fn apply(&self, pt: &Point) -> Option<Point> {
        let d = eval_at(&self.den, pt);
        if d.is_zero() || self.coords.len() != 2 {
            return None;
        }
        Some([
            eval_at(&self.coords[0], pt) / &d,
            eval_at(&self.coords[1], pt) / &d,
        ])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilConfig {
    pub seed: u64,
    pub jet_cap: u32,
    pub candidate_overrides: Vec<Rational>,
    pub parallelism: usize,
}

impl Default for PencilConfig {
    fn default() -> Self {
        PencilConfig {
            seed: 0,
            jet_cap: DEFAULT_JET_CAP,
            candidate_overrides: Vec::new(),
            parallelism: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartReport {
    pub name: String,
    /// The reduced fraction actually analyzed.
    pub p: MultiPoly,
    pub q: MultiPoly,
    pub critical_points: Vec<CriticalPoint>,
    pub base_points: Vec<GermReport>,
    pub complete: bool,
    pub unresolved: Vec<String>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueSummary {
    pub a: Rational,
    pub mu_a: usize,
    pub lambda_a: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilReport {
    pub charts: Vec<ChartReport>,
    pub atypical_values: Vec<Rational>,
    pub per_value: Vec<ValueSummary>,
    pub mu: usize,
    pub lambda: usize,
    pub b2: usize,
    pub chi_rel: i64,
    pub warnings: Vec<String>,
}

fn in_chart(name: &str, e: Error) -> Error {
    let tag = |m: String| format!("chart {name}: {m}");
    match e {
        Error::NonIsolated(m) => Error::NonIsolated(tag(m)),
        Error::GenericityFailure(m) => Error::GenericityFailure(tag(m)),
        Error::Degenerate(m) => Error::Degenerate(tag(m)),
        Error::NotReduced(m) => Error::NotReduced(tag(m)),
        Error::Incomplete(m) => Error::Incomplete(tag(m)),
        Error::Invalid(m) => Error::Invalid(tag(m)),
        e => e,
    }
}

pub fn analyze_chart(spec: &ChartSpec, index: usize, config: &PencilConfig) -> Result<ChartReport> {
    let mut warnings = Vec::new();
    let red = reduce_fraction(&spec.p, &spec.q)?;
    if let Some(w) = red.warning {
        warnings.push(w);
    }
    let (p, q) = (red.p, red.q);
    let CriticalAnalysis {
        points: critical_points,
        complete: crit_complete,
        mut unresolved,
    } = critical_analysis(&p, &q, config.jet_cap)?;

    let (points, bp_complete) = match &spec.base_points {
        Some(pts) => (pts.clone(), true),
        None => {
            let s = base_points(&p, &q)?;
            unresolved.extend(s.unresolved.iter().map(|u| format!("base points: {u}")));
            (s.points, s.complete)
        }
    };
    let critical_values: BTreeSet<Rational> =
        critical_points.iter().map(|c| c.value.clone()).collect();
    let germs = points
        .par_iter()
        .enumerate()
        .map(|(j, pt)| {
            let fam = PlaneGermFamily::new(&p, &q, pt.clone())?;
            let opts = AnalysisOptions {
                jet_cap: config.jet_cap,
                seed: derive_seed(config.seed, index, j),
                overrides: config.candidate_overrides.clone(),
                extra_candidates: critical_values.iter().cloned().collect(),
            };
            analyze_germ(fam, &opts)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut complete = crit_complete && bp_complete;
    for g in &germs {
        complete &= g.complete;
        warnings.extend(g.warnings.iter().cloned());
    }
    Ok(ChartReport {
        name: spec.name.clone(),
        p,
        q,
        critical_points,
        base_points: germs,
        complete,
        unresolved,
        warnings,
    })
}

fn point_list(pts: &[&Point]) -> String {
    if pts.is_empty() {
        "none".into()
    } else {
        pts.iter()
            .map(|p| format_point(p))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Drops critical points of later charts that a declared overlap identifies
/// with a critical point of an earlier chart.
fn dedup_overlaps(charts: &mut [ChartReport], overlaps: &[OverlapMap]) -> Vec<String> {
    let mut notes = Vec::new();
    let index: BTreeMap<&str, usize> = charts
        .iter()
        .enumerate()
        .map(|(i, c)| (c.name.as_str(), i))
        .collect();
    let mut drop: BTreeSet<(usize, usize)> = BTreeSet::new();
    for ov in overlaps {
        let (Some(&a), Some(&b)) = (index.get(ov.from.as_str()), index.get(ov.to.as_str())) else {
            continue;
        };
        if a == b {
            continue;
        }
        for (ia, cpa) in charts[a].critical_points.iter().enumerate() {
            let Some(img) = ov.apply(&cpa.point) else {
                continue;
            };
            for (ib, cpb) in charts[b].critical_points.iter().enumerate() {
                if cpb.point != img {
                    continue;
                }
                // keep the copy in the earlier chart
                let (later, li, earlier, ep) = if a < b {
                    (b, ib, a, &cpa.point)
                } else {
                    (a, ia, b, &cpb.point)
                };
                if drop.insert((later, li)) {
                    let lp = &charts[later].critical_points[li].point;
                    notes.push(format!(
                        "critical point {} of chart {} is {} of chart {}; counted once",
                        format_point(lp),
                        charts[later].name,
                        format_point(ep),
                        charts[earlier].name
                    ));
                }
            }
        }
    }
    for (ci, c) in charts.iter_mut().enumerate() {
        let mut k = 0;
        c.critical_points.retain(|_| {
            k += 1;
            !drop.contains(&(ci, k - 1))
        });
    }
    notes
}

pub fn analyze_pencil(
    charts: &[ChartSpec],
    overlaps: &[OverlapMap],
    config: &PencilConfig,
) -> Result<PencilReport> {
    if config.parallelism == 0 {
        return Err(Error::Invalid("parallelism must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| Error::Invalid(format!("thread pool: {e}")))?;
    let results: Vec<Result<ChartReport>> = pool.install(|| {
        charts
            .par_iter()
            .enumerate()
            .map(|(i, c)| analyze_chart(c, i, config).map_err(|e| in_chart(&c.name, e)))
            .collect()
    });
    let mut reports = results.into_iter().collect::<Result<Vec<_>>>()?;

    let incomplete: Vec<String> = reports
        .iter()
        .filter(|c| !c.complete)
        .map(|c| format!("chart {}: {}", c.name, c.unresolved.join("; ")))
        .collect();
    if !incomplete.is_empty() {
        return Err(Error::Incomplete(format!(
            "solutions with irrational coordinates or values were not analyzed ({})",
            incomplete.join(" | ")
        )));
    }

    let mut warnings: Vec<String> = reports
        .iter()
        .flat_map(|c| {
            c.warnings
                .iter()
                .map(move |w| format!("chart {}: {w}", c.name))
        })
        .collect();
    warnings.extend(dedup_overlaps(&mut reports, overlaps));
    if reports.len() > 1 {
        for c in &reports {
            let bps: Vec<&Point> = c.base_points.iter().map(|g| &g.base_point).collect();
            let cps: Vec<&Point> = c.critical_points.iter().map(|p| &p.point).collect();
            warnings.push(format!(
                "chart {} contributes base points [{}] and critical points [{}]; \
                 points shared between charts are merged only through declared overlaps",
                c.name,
                point_list(&bps),
                point_list(&cps)
            ));
        }
    }

    let mut per: BTreeMap<Rational, (usize, usize)> = BTreeMap::new();
    for a in &config.candidate_overrides {
        per.entry(a.clone()).or_default();
    }
    for c in &reports {
        for cp in &c.critical_points {
            per.entry(cp.value.clone()).or_default().0 += cp.milnor.mu;
        }
        for g in &c.base_points {
            for r in &g.specials {
                per.entry(r.a.clone()).or_default().1 += r.lambda_polar;
            }
        }
    }
    let per_value: Vec<ValueSummary> = per
        .into_iter()
        .map(|(a, (mu_a, lambda_a))| ValueSummary { a, mu_a, lambda_a })
        .collect();
    let atypical_values = per_value
        .iter()
        .filter(|v| v.mu_a + v.lambda_a > 0)
        .map(|v| v.a.clone())
        .collect();
    let mu: usize = per_value.iter().map(|v| v.mu_a).sum();
    let lambda: usize = per_value.iter().map(|v| v.lambda_a).sum();
    Ok(PencilReport {
        charts: reports,
        atypical_values,
        per_value,
        mu,
        lambda,
        b2: mu + lambda,
        chi_rel: (mu + lambda) as i64,
        warnings,
    })
}

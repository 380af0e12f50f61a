//! Analysis of the family `p - t*q` at one base point: generic and special
//! Milnor numbers and the polar Milnor number computed two ways.

use std::collections::BTreeSet;

use super::family::{fiber_reducedness, format_point, PlaneGermFamily};
use super::polar::{
    polar_curve, polar_intersection, special_value_candidates, Candidates, PolarCurve,
};
use super::sampler::GenericSampler;
use crate::error::{Error, Result};
use crate::local::{classify_plane_germ, Germ, GermClass, DEFAULT_JET_CAP};
use crate::poly::rational::rat;
use crate::poly::{MultiPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub jet_cap: u32,
    pub seed: u64,
    /// Values analyzed and reported whether or not they turn out special.
    pub overrides: Vec<Rational>,
    /// Further values to test, e.g. critical values of the chart.
    pub extra_candidates: Vec<Rational>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            jet_cap: DEFAULT_JET_CAP,
            seed: 0,
            overrides: Vec::new(),
            extra_candidates: Vec::new(),
        }
    }
}

/// Invariants of the fiber germ at a generic parameter value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericData {
    /// The sampled values that agreed.
    pub samples: Vec<Rational>,
    pub mu: usize,
    pub class: GermClass,
    /// `i_0(polar curve, p - s*q)` for generic `s`.
    pub polar_intersection: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialValueRecord {
    pub a: Rational,
    pub mu_special: usize,
    pub mu_generic: usize,
    pub lambda_polar: usize,
    pub lambda_jump: usize,
    pub splitting_detected: bool,
    /// `mu_special - lambda_polar`, the Milnor numbers of the nearby fiber.
    pub mu_nearby_sum: usize,
    pub class_generic: GermClass,
    pub class_special: GermClass,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermReport {
    pub base_point: super::family::Point,
    pub polar: PolarCurve,
    pub candidates: Candidates,
    pub generic: GenericData,
    /// Candidates with a positive jump, plus every override.
    pub specials: Vec<SpecialValueRecord>,
    pub complete: bool,
    pub warnings: Vec<String>,
}

impl GermReport {
    pub fn lambda_at(&self, a: &Rational) -> usize {
        self.specials
            .iter()
            .filter(|r| &r.a == a)
            .map(|r| r.lambda_polar)
            .sum()
    }
}

fn sample_generic(
    fam: &PlaneGermFamily,
    polar: &PolarCurve,
    sampler: &mut GenericSampler,
    avoid: &BTreeSet<Rational>,
    cap: u32,
) -> Result<std::result::Result<GenericData, String>> {
    let mut runs = Vec::new();
    for _ in 0..2 {
        let s = sampler.draw(avoid);
        if !fiber_reducedness(fam.p(), fam.q(), &s)? {
            return Err(Error::NonIsolated(format!(
                "the generic fiber {} = 0 is not reduced",
                fam.fiber(&s)
            )));
        }
        let germ = Germ::new(fam.fiber(&s));
        let class = classify_plane_germ(&germ, cap)?;
        let i0 = polar_intersection(fam, polar, &s, cap)?;
        runs.push((s, class, i0));
    }
    let (s1, c1, i1) = runs[0].clone();
    let (s2, c2, i2) = runs[1].clone();
    if c1.mu != c2.mu || i1 != i2 {
        return Ok(Err(format!(
            "t = {s1}: mu = {}, i_0 = {i1}; t = {s2}: mu = {}, i_0 = {i2}",
            c1.mu, c2.mu
        )));
    }
    Ok(Ok(GenericData {
        samples: vec![s1, s2],
        mu: c1.mu,
        class: c1,
        polar_intersection: i1,
    }))
}

/// Generic data from two agreeing samples, resampling once before giving up.
fn generic_data(
    fam: &PlaneGermFamily,
    polar: &PolarCurve,
    avoid: &BTreeSet<Rational>,
    seed: u64,
    cap: u32,
) -> Result<GenericData> {
    let mut sampler = GenericSampler::new(seed);
    let mut diag = Vec::new();
    for _ in 0..2 {
        match sample_generic(fam, polar, &mut sampler, avoid, cap)? {
            Ok(g) => return Ok(g),
            Err(d) => diag.push(d),
        }
    }
    Err(Error::GenericityFailure(format!(
        "at {}: samples disagree ({})",
        format_point(fam.base_point()),
        diag.join("; ")
    )))
}

/// Generic Milnor number and class of the fiber germ, avoiding `avoid`.
pub fn generic_mu(
    fam: &PlaneGermFamily,
    avoid: &BTreeSet<Rational>,
    seed: u64,
    cap: u32,
) -> Result<(usize, GermClass)> {
    let polar = polar_curve(fam)?;
    let g = generic_data(fam, &polar, avoid, seed, cap)?;
    Ok((g.mu, g.class))
}

pub struct GermAnalyzer {
    fam: PlaneGermFamily,
    polar: PolarCurve,
    candidates: Candidates,
    generic: GenericData,
    cap: u32,
}

impl GermAnalyzer {
    pub fn new(fam: PlaneGermFamily, opts: &AnalysisOptions) -> Result<Self> {
        let polar = polar_curve(&fam)?;
        let candidates = special_value_candidates(&fam, &polar)?;
        Self::with_candidates(fam, polar, candidates, opts)
    }

    fn with_candidates(
        fam: PlaneGermFamily,
        polar: PolarCurve,
        candidates: Candidates,
        opts: &AnalysisOptions,
    ) -> Result<Self> {
        let avoid: BTreeSet<Rational> = candidates
            .values
            .iter()
            .chain(&opts.overrides)
            .chain(&opts.extra_candidates)
            .cloned()
            .collect();
        let generic = generic_data(&fam, &polar, &avoid, opts.seed, opts.jet_cap)?;
        Ok(GermAnalyzer {
            fam,
            polar,
            candidates,
            generic,
            cap: opts.jet_cap,
        })
    }

    pub fn family(&self) -> &PlaneGermFamily {
        &self.fam
    }

    pub fn polar(&self) -> &PolarCurve {
        &self.polar
    }

    pub fn candidates(&self) -> &Candidates {
        &self.candidates
    }

    pub fn generic(&self) -> &GenericData {
        &self.generic
    }

    /// `i_0(polar, p - a*q) - i_0(polar, p - s*q)` for generic `s`.
    pub fn polar_lambda(&self, a: &Rational) -> Result<usize> {
        let here = polar_intersection(&self.fam, &self.polar, a, self.cap)?;
        here.checked_sub(self.generic.polar_intersection)
            .ok_or_else(|| {
                Error::GenericityFailure(format!(
                    "polar intersection at t = {a} ({here}) is below the generic value ({})",
                    self.generic.polar_intersection
                ))
            })
    }

    /// `(mu(a) - mu_generic, mu(a), class at a)`.
    pub fn jump_lambda(&self, a: &Rational) -> Result<(usize, usize, GermClass)> {
        if !fiber_reducedness(self.fam.p(), self.fam.q(), a)? {
            return Err(Error::NonIsolated(format!(
                "the fiber {} = 0 at t = {a} is not reduced",
                self.fam.fiber(a)
            )));
        }
        let class = classify_plane_germ(&Germ::new(self.fam.fiber(a)), self.cap)?;
        let jump = class.mu.checked_sub(self.generic.mu).ok_or_else(|| {
            Error::GenericityFailure(format!(
                "mu at t = {a} ({}) is below the generic value ({})",
                class.mu, self.generic.mu
            ))
        })?;
        Ok((jump, class.mu, class))
    }

    pub fn record(&self, a: &Rational) -> Result<SpecialValueRecord> {
        let lambda_polar = self.polar_lambda(a)?;
        let (lambda_jump, mu_special, class_special) = self.jump_lambda(a)?;
        Ok(SpecialValueRecord {
            a: a.clone(),
            mu_special,
            mu_generic: self.generic.mu,
            lambda_polar,
            lambda_jump,
            splitting_detected: lambda_polar != lambda_jump,
            mu_nearby_sum: mu_special.saturating_sub(lambda_polar),
            class_generic: self.generic.class,
            class_special,
            trivial: lambda_polar == 0,
        })
    }

    pub fn report(&self, opts: &AnalysisOptions) -> Result<GermReport> {
        let overrides: BTreeSet<&Rational> = opts.overrides.iter().collect();
        let to_check: BTreeSet<&Rational> = self
            .candidates
            .values
            .iter()
            .chain(&opts.overrides)
            .chain(&opts.extra_candidates)
            .collect();
        let mut specials = Vec::new();
        for a in to_check {
            let r = self.record(a)?;
            if overrides.contains(a) || r.lambda_polar > 0 || r.lambda_jump > 0 {
                specials.push(r);
            }
        }
        let mut warnings = Vec::new();
        if let Some(n) = &self.candidates.note {
            warnings.push(format!("at {}: {n}", format_point(self.fam.base_point())));
        }
        Ok(GermReport {
            base_point: self.fam.base_point().clone(),
            polar: self.polar.clone(),
            candidates: self.candidates.clone(),
            generic: self.generic.clone(),
            specials,
            complete: self.candidates.complete,
            warnings,
        })
    }
}

pub fn analyze_germ(fam: PlaneGermFamily, opts: &AnalysisOptions) -> Result<GermReport> {
    GermAnalyzer::new(fam, opts)?.report(opts)
}

/// Whether the polar Milnor number at `a` survives replacing `(p, q)` by
/// `(p*u, q*u)` for a unit `u` at the base point. `u` is in coordinates
/// centred at the base point.
pub fn unit_twist_check(
    fam: &PlaneGermFamily,
    u: &MultiPoly,
    a: &Rational,
    opts: &AnalysisOptions,
) -> Result<bool> {
    if u.constant_term() == rat(0) {
        return Err(Error::Invalid(format!(
            "{u} is not a unit at the base point"
        )));
    }
    let origin = [rat(0), rat(0)];
    let twisted = PlaneGermFamily::unchecked(&(fam.p() * u), &(fam.q() * u), origin);
    let plain = GermAnalyzer::new(fam.clone(), opts)?;
    let before = plain.polar_lambda(a)?;
    let polar = polar_curve(&twisted)?;
    let after = GermAnalyzer::with_candidates(twisted, polar, plain.candidates.clone(), opts)?
        .polar_lambda(a)?;
    Ok(before == after)
}

//! Plain-text chart atlas files.
//!
//! ```text
//! # Example: two charts of one pencil
//! [chart y=1]
//! vars = x, z
//! p = x^2 + x*z^2
//! q = z^3
//! base_points = 0,0
//!
//! [chart w=1]
//! vars = x, z
//! p = x*z^2 + x^2*z^2 - x^4
//! q = z^3
//!
//! [overlap w=1 -> y=1]
//! den = x
//! x = 1
//! z = z
//! ```
//!
//! `base_points` is optional and takes `;`-separated points. An overlap maps a
//! point of the first chart to the point of the second whose coordinate named
//! `v` is `(expression for v) / den`, everything written in the first chart's
//! variables. `den` defaults to 1. Lines starting with `#` are comments.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pencil::{ChartSpec, OverlapMap, Point};
use crate::poly::rational::parse_rational;
use crate::poly::{parse_expression, MultiPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Atlas {
    pub charts: Vec<ChartSpec>,
    pub overlaps: Vec<OverlapMap>,
}

enum Section {
    Chart(String),
    Overlap(String, String),
}

struct RawSection {
    kind: Section,
    line: usize,
    entries: Vec<(String, String, usize)>,
}

fn bad(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Invalid(format!("atlas line {line}: {msg}"))
}

pub fn parse_variables(text: &str) -> Result<Vec<String>> {
    let vars: Vec<String> = text
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if vars.is_empty() {
        return Err(Error::Invalid("empty variable list".into()));
    }
    for v in &vars {
        let mut cs = v.chars();
        let ok = cs
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && cs.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::Invalid(format!("bad variable name `{v}`")));
        }
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(Error::Invalid(format!("variable `{v}` listed twice")));
        }
    }
    Ok(vars)
}

/// Parses `a,b` with rational coordinates.
pub fn parse_point(text: &str, dim: usize) -> Result<Vec<crate::poly::Rational>> {
    let t = text.trim().trim_start_matches('(').trim_end_matches(')');
    let coords = t
        .split(',')
        .map(|c| {
            parse_rational(c)
                .ok_or_else(|| Error::Invalid(format!("bad coordinate `{}`", c.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != dim {
        return Err(Error::Invalid(format!(
            "point `{text}` has {} coordinates, expected {dim}",
            coords.len()
        )));
    }
    Ok(coords)
}

fn split_sections(text: &str) -> Result<Vec<RawSection>> {
    let mut out: Vec<RawSection> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(head) = line.strip_prefix('[') {
            let head = head
                .strip_suffix(']')
                .ok_or_else(|| bad(n, "unterminated section header"))?
                .trim();
            let kind = if let Some(name) = head.strip_prefix("chart ") {
                let name = name.trim();
                if name.is_empty() {
                    return Err(bad(n, "chart without a name"));
                }
                Section::Chart(name.to_string())
            } else if let Some(rest) = head.strip_prefix("overlap ") {
                let (a, b) = rest
                    .split_once("->")
                    .ok_or_else(|| bad(n, "overlap header must read `overlap A -> B`"))?;
                Section::Overlap(a.trim().to_string(), b.trim().to_string())
            } else {
                return Err(bad(n, format!("unknown section `{head}`")));
            };
            out.push(RawSection {
                kind,
                line: n,
                entries: Vec::new(),
            });
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| bad(n, "expected `key = value`"))?;
        let sec = out
            .last_mut()
            .ok_or_else(|| bad(n, "entry outside any section"))?;
        let k = k.trim().to_string();
        if sec.entries.iter().any(|(e, _, _)| *e == k) {
            return Err(bad(n, format!("duplicate key `{k}`")));
        }
        sec.entries.push((k, v.trim().to_string(), n));
    }
    Ok(out)
}

fn expr(text: &str, vars: &[String], line: usize) -> Result<MultiPoly> {
    parse_expression(text, vars).map_err(|e| bad(line, e))
}

fn parse_chart(name: String, sec: &RawSection) -> Result<(ChartSpec, Vec<String>)> {
    let get = |k: &str| sec.entries.iter().find(|(e, _, _)| e == k);
    for (k, _, n) in &sec.entries {
        if !matches!(k.as_str(), "vars" | "p" | "q" | "base_points") {
            return Err(bad(*n, format!("unknown chart key `{k}`")));
        }
    }
    let need = |k: &str| get(k).ok_or_else(|| bad(sec.line, format!("chart {name} lacks `{k}`")));
    let (_, vtext, vline) = need("vars")?;
    let vars = parse_variables(vtext).map_err(|e| bad(*vline, e))?;
    if vars.len() != 2 {
        return Err(bad(*vline, "charts need exactly 2 variables"));
    }
    let (_, ptext, pline) = need("p")?;
    let (_, qtext, qline) = need("q")?;
    let p = expr(ptext, &vars, *pline)?;
    let q = expr(qtext, &vars, *qline)?;
    let base_points = match get("base_points") {
        None => None,
        Some((_, t, n)) => Some(
            t.split(';')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    let c = parse_point(s, 2).map_err(|e| bad(*n, e))?;
                    Ok::<Point, Error>([c[0].clone(), c[1].clone()])
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    Ok((
        ChartSpec {
            name,
            p,
            q,
            base_points,
        },
        vars,
    ))
}

pub fn parse_atlas(text: &str) -> Result<Atlas> {
    let sections = split_sections(text)?;
    let mut charts = Vec::new();
    let mut vars_of: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for sec in &sections {
        if let Section::Chart(name) = &sec.kind {
            if vars_of.contains_key(name) {
                return Err(bad(sec.line, format!("chart {name} declared twice")));
            }
            let (c, vars) = parse_chart(name.clone(), sec)?;
            vars_of.insert(name.clone(), vars);
            charts.push(c);
        }
    }
    let mut overlaps = Vec::new();
    for sec in &sections {
        let Section::Overlap(from, to) = &sec.kind else {
            continue;
        };
        let find = |c: &str| {
            vars_of
                .get(c)
                .ok_or_else(|| bad(sec.line, format!("overlap names unknown chart {c}")))
        };
        let src = find(from)?;
        let dst = find(to)?;
        let mut den = MultiPoly::one(src);
        let mut coords: Vec<Option<MultiPoly>> = vec![None; dst.len()];
        for (k, v, n) in &sec.entries {
            if k == "den" {
                den = expr(v, src, *n)?;
                if den.is_zero() {
                    return Err(bad(*n, "zero denominator"));
                }
            } else if let Some(i) = dst.iter().position(|d| d == k) {
                coords[i] = Some(expr(v, src, *n)?);
            } else {
                return Err(bad(*n, format!("`{k}` is not a variable of chart {to}")));
            }
        }
        let coords = coords
            .into_iter()
            .zip(dst)
            .map(|(c, d)| c.ok_or_else(|| bad(sec.line, format!("overlap lacks `{d}`"))))
            .collect::<Result<Vec<_>>>()?;
        overlaps.push(OverlapMap {
            from: from.clone(),
            to: to.clone(),
            den,
            coords,
        });
    }
    if charts.is_empty() {
        return Err(Error::Invalid("atlas declares no charts".into()));
    }
    Ok(Atlas { charts, overlaps })
}

//! Human-readable tables.

use std::fmt::Write;

use crate::pencil::{format_point, ChartReport, GermReport, PencilReport, SpecialValueRecord};

/// Right-aligned columns, two spaces apart.
fn table(header: &[&str], rows: &[Vec<String>], indent: &str) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let s: Vec<String> = cells
            .iter()
            .zip(&width)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        format!("{indent}{}\n", s.join("  "))
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for r in rows {
        out += &line(r.clone());
    }
    out
}

fn special_rows(specials: &[SpecialValueRecord]) -> Vec<Vec<String>> {
    specials
        .iter()
        .map(|r| {
            vec![
                r.a.to_string(),
                r.mu_special.to_string(),
                r.mu_generic.to_string(),
                r.lambda_polar.to_string(),
                r.lambda_jump.to_string(),
                if r.splitting_detected { "yes" } else { "no" }.into(),
                r.mu_nearby_sum.to_string(),
                format!("{} <- {}", r.class_special.label, r.class_generic.label),
            ]
        })
        .collect()
}

const SPECIAL_HEADER: [&str; 8] = [
    "a",
    "mu(a)",
    "mu_gen",
    "lambda",
    "jump",
    "split",
    "sum mu_i(s)",
    "class",
];

pub fn germ_text(g: &GermReport, indent: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{indent}base point {}", format_point(&g.base_point));
    let _ = writeln!(out, "{indent}  polar curve: {} = 0", g.polar.equation);
    let samples: Vec<String> = g.generic.samples.iter().map(|s| s.to_string()).collect();
    let _ = writeln!(
        out,
        "{indent}  generic fiber: {}, mu_gen = {} (t = {})",
        g.generic.class.label,
        g.generic.mu,
        samples.join(", ")
    );
    if g.specials.is_empty() {
        let _ = writeln!(out, "{indent}  special values: none");
    } else {
        let _ = writeln!(out, "{indent}  special values:");
        out += &table(
            &SPECIAL_HEADER,
            &special_rows(&g.specials),
            &format!("{indent}    "),
        );
    }
    if !g.complete {
        let _ = writeln!(
            out,
            "{indent}  incomplete: irrational candidates not analyzed"
        );
    }
    for w in &g.warnings {
        let _ = writeln!(out, "{indent}  warning: {w}");
    }
    out
}

fn chart_text(c: &ChartReport) -> String {
    let mut out = format!("chart {}: p = {}, q = {}\n", c.name, c.p, c.q);
    if c.critical_points.is_empty() {
        out += "  critical points off the poles: none\n";
    } else {
        out += "  critical points off the poles:\n";
        let rows: Vec<Vec<String>> = c
            .critical_points
            .iter()
            .map(|p| {
                vec![
                    format_point(&p.point),
                    p.value.to_string(),
                    p.milnor.mu.to_string(),
                    p.class.label.to_string(),
                ]
            })
            .collect();
        out += &table(&["point", "value", "mu", "class"], &rows, "    ");
    }
    if c.base_points.is_empty() {
        out += "  base points: none\n";
    }
    for g in &c.base_points {
        out += &germ_text(g, "  ");
    }
    out
}

pub fn pencil_text(r: &PencilReport) -> String {
    let mut out = String::new();
    for c in &r.charts {
        out += &chart_text(c);
        out.push('\n');
    }
    let vals: Vec<String> = r.atypical_values.iter().map(|a| a.to_string()).collect();
    let _ = writeln!(out, "atypical values: {{{}}}", vals.join(", "));
    if !r.per_value.is_empty() {
        let rows: Vec<Vec<String>> = r
            .per_value
            .iter()
            .map(|v| vec![v.a.to_string(), v.mu_a.to_string(), v.lambda_a.to_string()])
            .collect();
        out += &table(&["a", "mu_a", "lambda_a"], &rows, "  ");
    }
    let _ = writeln!(out, "mu = {}", r.mu);
    let _ = writeln!(out, "lambda = {}", r.lambda);
    let _ = writeln!(out, "b_2(X,F) = mu + lambda = {}", r.b2);
    let _ = writeln!(out, "chi(X,F) = {}", r.chi_rel);
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_line_up() {
        let t = table(&["a", "mu"], &[vec!["-1/2".into(), "3".into()]], "");
        assert_eq!(t, "   a  mu\n-1/2   3\n");
    }
}

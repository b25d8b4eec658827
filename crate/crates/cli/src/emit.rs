//! Byte-stable CSV and JSON serialization.
//!
//! Numbers carry twelve digits after the leading one. Values with decimal
//! exponent in `[-4, 12)` are written in fixed notation, everything else in
//! scientific notation. Columns and keys always come out in the same order and
//! every document ends with a newline.

use std::fmt::Write as _;

use dce_core::genform::DeltaReport;
use dce_core::params::{CircuitParams, ValidationReport};
use dce_core::sweep::{Maximum, PeakReport, SweepResult};
use dce_core::{ReferencePoint, Spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Formats `x` with twelve digits of mantissa precision.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        return format!("{:.12}", 0.0);
    }
    let exp = x.abs().log10().floor() as i32;
    // Rounding can carry into the next decade (9.9999…e2 → 1.0e3).
    let sci = format!("{x:.12e}");
    let exp = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse::<i32>().ok())
        .unwrap_or(exp);
    if (-4..12).contains(&exp) {
        let decimals = (12 - exp) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

fn string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn array(values: &[f64]) -> String {
    let items: Vec<String> = values.iter().map(|v| num(*v)).collect();
    format!("[{}]", items.join(","))
}

/// Minimal ordered JSON object builder.
struct Object(Vec<(String, String)>);

impl Object {
    fn new() -> Self {
        Object(Vec::new())
    }

    fn raw(mut self, key: &str, value: String) -> Self {
        self.0.push((key.to_string(), value));
        self
    }

    fn num(self, key: &str, value: f64) -> Self {
        self.raw(key, num(value))
    }

    fn str(self, key: &str, value: &str) -> Self {
        self.raw(key, string(value))
    }

    fn render(&self) -> String {
        let fields: Vec<String> = self
            .0
            .iter()
            .map(|(k, v)| format!("{}:{}", string(k), v))
            .collect();
        format!("{{{}}}", fields.join(","))
    }
}

fn document(obj: Object) -> String {
    let mut s = obj.render();
    s.push('\n');
    s
}

fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn reference_json(r: &ReferencePoint) -> String {
    Object::new()
        .num("gamma0_m", r.gamma0)
        .num("alpha0_s2_per_m", r.alpha0)
        .num("omega0_rad_per_s", r.omega0)
        .num("epsilon", r.epsilon)
        .num("v_m_per_s", r.v)
        .render()
}

pub fn spectrum(s: &Spectrum, format: Format) -> String {
    match format {
        Format::Csv => csv(
            &["omega_frac", "density"],
            s.omega_frac
                .iter()
                .zip(&s.density)
                .map(|(w, n)| vec![num(*w), num(*n)]),
        ),
        Format::Json => document(
            Object::new()
                .num("xi", s.groups.xi)
                .num("zeta", s.groups.zeta)
                .num("A", s.groups.a)
                .num("g", s.groups.g)
                .num("epsilon", s.epsilon)
                .raw("omega_frac", array(&s.omega_frac))
                .raw("density", array(&s.density)),
        ),
    }
}

pub fn sweep(r: &SweepResult, format: Format) -> String {
    match format {
        Format::Csv => {
            let header = ["xi", "zeta", r.quantity.as_str()];
            let rows = r.xi_grid.iter().enumerate().flat_map(|(i, xi)| {
                r.zeta_grid
                    .iter()
                    .enumerate()
                    .map(move |(j, zeta)| vec![num(*xi), num(*zeta), num(r.values[i][j])])
            });
            csv(&header, rows)
        }
        Format::Json => {
            let rows: Vec<String> = r.values.iter().map(|row| array(row)).collect();
            let generated = match r.metadata.generated_at {
                Some(t) => t.to_string(),
                None => "null".to_string(),
            };
            let metadata = Object::new()
                .raw("reference", reference_json(&r.metadata.reference))
                .num("epsilon", r.metadata.epsilon)
                .raw("generated_at", generated)
                .render();
            document(
                Object::new()
                    .str("quantity", r.quantity.as_str())
                    .raw("xi_grid", array(&r.xi_grid))
                    .raw("zeta_grid", array(&r.zeta_grid))
                    .raw("values", format!("[{}]", rows.join(",")))
                    .raw("metadata", metadata),
            )
        }
    }
}

pub fn peaks(p: &PeakReport, format: Format) -> String {
    match format {
        Format::Csv => csv(
            &["peak", "omega_frac", "density", "shape"],
            p.peak_positions
                .iter()
                .zip(&p.peak_heights)
                .enumerate()
                .map(|(i, (w, h))| {
                    vec![(i + 1).to_string(), num(*w), num(*h), p.shape.to_string()]
                }),
        ),
        Format::Json => document(
            Object::new()
                .raw("n_peaks", p.n_peaks.to_string())
                .raw("peak_positions", array(&p.peak_positions))
                .raw("peak_heights", array(&p.peak_heights))
                .str("shape", p.shape.as_str()),
        ),
    }
}

/// Named scalars at one `(ξ, ζ)` point; `None` format prints only the
/// primary (first) value.
pub fn scalars(fields: &[(&str, f64)], format: Option<Format>) -> String {
    match format {
        None => format!("{}\n", num(fields[0].1)),
        Some(Format::Csv) => {
            let header: Vec<&str> = fields.iter().map(|f| f.0).collect();
            csv(&header, [fields.iter().map(|f| num(f.1)).collect()])
        }
        Some(Format::Json) => document(
            fields
                .iter()
                .fold(Object::new(), |obj, (k, v)| obj.num(k, *v)),
        ),
    }
}

pub fn maximum(xi: f64, quantity: &str, m: &Maximum, format: Format) -> String {
    match format {
        Format::Csv => csv(
            &["xi", "quantity", "zeta_star", "value"],
            [vec![
                num(xi),
                quantity.to_string(),
                num(m.zeta_star),
                num(m.value),
            ]],
        ),
        Format::Json => document(
            Object::new()
                .num("xi", xi)
                .str("quantity", quantity)
                .num("zeta_star", m.zeta_star)
                .num("value", m.value),
        ),
    }
}

pub fn delta(r: &DeltaReport, format: Format) -> String {
    match format {
        Format::Csv => csv(
            &[
                "omega_frac",
                "general",
                "closed_form",
                "rel_deviation",
                "pass",
            ],
            r.probes.iter().map(|p| {
                vec![
                    num(p.omega_frac),
                    num(p.general),
                    num(p.closed_form),
                    num(p.rel_deviation),
                    p.pass.to_string(),
                ]
            }),
        ),
        Format::Json => {
            let probes: Vec<String> = r
                .probes
                .iter()
                .map(|p| {
                    Object::new()
                        .num("omega_frac", p.omega_frac)
                        .num("general", p.general)
                        .num("closed_form", p.closed_form)
                        .num("rel_deviation", p.rel_deviation)
                        .raw("pass", p.pass.to_string())
                        .render()
                })
                .collect();
            document(
                Object::new()
                    .num("omega0_tau", r.omega0_tau)
                    .num("tol", r.tol)
                    .raw("passed", r.passed().to_string())
                    .num("max_deviation", r.max_deviation())
                    .raw("probes", format!("[{}]", probes.join(","))),
            )
        }
    }
}

pub fn validation(p: &CircuitParams, r: &ValidationReport, format: Format) -> String {
    let violations: Vec<String> = r.violations.iter().map(|v| v.to_string()).collect();
    let advisories: Vec<String> = r.advisories.iter().map(|a| a.to_string()).collect();
    match format {
        Format::Csv => csv(
            &["kind", "message"],
            violations
                .iter()
                .map(|m| vec!["violation".to_string(), string(m)])
                .chain(
                    advisories
                        .iter()
                        .map(|m| vec!["advisory".to_string(), string(m)]),
                ),
        ),
        Format::Json => {
            let list = |items: &[String]| {
                format!(
                    "[{}]",
                    items
                        .iter()
                        .map(|s| string(s))
                        .collect::<Vec<_>>()
                        .join(",")
                )
            };
            let params = Object::new()
                .num("gamma0_m", p.gamma0)
                .num("alpha0_s2_per_m", p.alpha0)
                .num("omega0_rad_per_s", p.omega0)
                .num("epsilon", p.epsilon)
                .num("v_m_per_s", p.v)
                .render();
            document(
                Object::new()
                    .raw("valid", r.is_valid().to_string())
                    .raw("params", params)
                    .raw("violations", list(&violations))
                    .raw("advisories", list(&advisories)),
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format() {
        assert_eq!(num(1.0), "1.000000000000");
        assert_eq!(num(0.0), "0.000000000000");
        assert_eq!(num(4812.508120943265), "4812.508120943");
        assert_eq!(num(-0.5), "-0.5000000000000");
        assert_eq!(num(1.4680271113271892e-4), "0.0001468027111327");
        assert_eq!(num(3.3e-9), "3.300000000000e-9");
        assert_eq!(num(9.9999999999999e11), "1.000000000000e12");
    }

    #[test]
    fn numbers_round_trip_at_twelve_digits() {
        for x in [1.0 / 3.0, 2.0e-7, 6.47e10, -7.5556306438e-2, 123456.789] {
            let back: f64 = num(x).parse().unwrap();
            assert!(((back - x) / x).abs() < 1e-12, "{x} -> {}", num(x));
        }
    }

    #[test]
    fn string_escaping() {
        assert_eq!(string("a\"b\\c\n"), "\"a\\\"b\\\\c\\n\"");
        assert_eq!(string("γ₀"), "\"γ₀\"");
    }
}

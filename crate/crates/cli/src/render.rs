//! Text, JSON and b-file renderings of a [`Report`].
//!
//! JSON key order is fixed: `problem`, `gf`, `terms`, `asymptotic`,
//! `evaluations`. Inside `gf`: `numerator`, `denominator` (ascending
//! coefficient strings of the reduced, monic-denominator form), `expanded`,
//! then `factored` with `unit`, `numerator`, `factors` and `text`. The
//! generating function is `factored.numerator / ((1-t)^{e_1} · ∏_{d>1} Φ_d^{e_d})`
//! and `denominator = unit · (1-t)^{e_1} · ∏_{d>1} Φ_d^{e_d}`.

use std::fmt::Write as _;

use ctgf::cyclotomic;
use ctgf::{Poly, Rational};
use serde::Serialize;

use crate::report::{Asymptotic, Problem, Report};

/// Integers as plain decimals, everything else as `p/q`.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

fn coefficient_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(rational_string).collect()
}

/// Cyclotomic factor in display form; `Φ_1` appears as `1-t`.
fn factor_base(d: u64) -> String {
    if d == 1 {
        "1-t".into()
    } else {
        cyclotomic(d).display_in("t")
    }
}

/// Numerator divided by the display unit, so that the displayed denominator
/// is a bare product of `(1-t)` and cyclotomic factors.
fn display_numerator(report: &Report) -> Poly {
    report
        .gf
        .num()
        .scale(&report.factorization.display_unit().recip())
}

/// `(num)/((1-t)^7*(t+1)^5*...)`
pub fn factored_text(report: &Report) -> String {
    let factors: Vec<String> = report
        .factorization
        .factors()
        .iter()
        .map(|(&d, &e)| {
            let base = format!("({})", factor_base(d));
            if e == 1 {
                base
            } else {
                format!("{base}^{e}")
            }
        })
        .collect();
    let num = display_numerator(report).display_in("t");
    if factors.is_empty() {
        num
    } else {
        format!("({num})/({})", factors.join("*"))
    }
}

fn asymptotic_text(a: &Asymptotic) -> String {
    match a {
        Asymptotic::Term(t) if t.degree == 0 => {
            format!("{} + o(1)", rational_string(&t.coefficient))
        }
        Asymptotic::Term(t) => {
            let power = if t.degree == 1 {
                "n".to_string()
            } else {
                format!("n^{}", t.degree)
            };
            let rest = match t.degree {
                1 => "O(1)".to_string(),
                2 => "O(n)".to_string(),
                k => format!("O(n^{})", k - 1),
            };
            format!("{}*{power} + {rest}", rational_string(&t.coefficient))
        }
        Asymptotic::Unavailable(e) => format!("unavailable ({}: {e})", e.name()),
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "problem: {}", report.problem.describe());
    let _ = writeln!(out, "generating function:");
    let _ = writeln!(out, "  {}", report.gf);
    let _ = writeln!(out, "factored:");
    let _ = writeln!(out, "  {}", factored_text(report));
    let terms: Vec<String> = report.terms.iter().map(rational_string).collect();
    let _ = writeln!(out, "first {} terms:", terms.len());
    let _ = writeln!(out, "  {}", terms.join(", "));
    let _ = writeln!(out, "asymptotic: {}", asymptotic_text(&report.asymptotic));
    for (n, v) in &report.evaluations {
        let _ = writeln!(out, "a({n}) = {}", rational_string(v));
    }
    out
}

#[derive(Serialize)]
struct JsonReport<'a> {
    problem: &'a Problem,
    gf: JsonGf,
    terms: Vec<String>,
    asymptotic: Option<JsonAsymptotic>,
    evaluations: Vec<JsonEvaluation>,
}

#[derive(Serialize)]
struct JsonGf {
    numerator: Vec<String>,
    denominator: Vec<String>,
    expanded: String,
    factored: JsonFactored,
}

#[derive(Serialize)]
struct JsonFactored {
    unit: String,
    numerator: Vec<String>,
    factors: Vec<JsonFactor>,
    text: String,
}

#[derive(Serialize)]
struct JsonFactor {
    d: u64,
    e: u32,
}

#[derive(Serialize)]
struct JsonAsymptotic {
    degree: u32,
    coefficient: String,
}

#[derive(Serialize)]
struct JsonEvaluation {
    n: String,
    value: String,
}

pub fn render_json(report: &Report) -> String {
    let json = JsonReport {
        problem: &report.problem,
        gf: JsonGf {
            numerator: coefficient_strings(report.gf.num()),
            denominator: coefficient_strings(report.gf.den()),
            expanded: report.gf.to_string(),
            factored: JsonFactored {
                unit: rational_string(&report.factorization.display_unit()),
                numerator: coefficient_strings(&display_numerator(report)),
                factors: report
                    .factorization
                    .factors()
                    .iter()
                    .map(|(&d, &e)| JsonFactor { d, e })
                    .collect(),
                text: factored_text(report),
            },
        },
        terms: report.terms.iter().map(rational_string).collect(),
        asymptotic: match &report.asymptotic {
            Asymptotic::Term(t) => Some(JsonAsymptotic {
                degree: t.degree,
                coefficient: rational_string(&t.coefficient),
            }),
            Asymptotic::Unavailable(_) => None,
        },
        evaluations: report
            .evaluations
            .iter()
            .map(|(n, v)| JsonEvaluation {
                n: n.to_string(),
                value: rational_string(v),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&json).expect("report serializes");
    s.push('\n');
    s
}

/// `n a(n)` per line from index 0, newline terminated.
pub fn render_bfile(terms: &[Rational]) -> String {
    let mut out = String::new();
    for (n, v) in terms.iter().enumerate() {
        let _ = writeln!(out, "{n} {}", rational_string(v));
    }
    out
}

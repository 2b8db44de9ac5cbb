use std::fmt::Write as _;

use invdeg_core::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Latex,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Everything a command produces, renderable in each output format.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub results: Value,
    pub checks: Vec<Check>,
    /// Header row first.
    pub csv: Vec<Vec<String>>,
    pub latex: String,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
            .collect();
        json!({
            "command": self.command,
            "params": Value::Object(self.params.clone()),
            "results": self.results,
            "checks": checks,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = String::new();
                for row in &self.csv {
                    s.push_str(&row.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
                    s.push('\n');
                }
                s
            }
            Format::Latex => self.latex.clone(),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn int_strings(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// `Σ c_k t₁^{deg−k} t₂^k` in LaTeX, with `coeffs[k]` the coefficient of t₂^k.
pub fn latex_bivariate(coeffs: &[BigInt]) -> String {
    let deg = coeffs.len().saturating_sub(1);
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(if c < &BigInt::zero() { " - " } else { " + " });
        } else if c < &BigInt::zero() {
            out.push('-');
        }
        let mag = if c < &BigInt::zero() { -c } else { c.clone() };
        let power = |var: &str, e: usize| match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{{{e}}}"),
        };
        let mono = format!("{}{}", power("t_1", deg - k), power("t_2", k));
        if mono.is_empty() {
            let _ = write!(out, "{mag}");
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{mag}{mono}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bivariate_rendering() {
        assert_eq!(
            latex_bivariate(&ints(&[1, 2, 2, 1])),
            "t_1^{3} + 2t_1^{2}t_2 + 2t_1t_2^{2} + t_2^{3}"
        );
        assert_eq!(latex_bivariate(&ints(&[1, 1])), "t_1 + t_2");
        assert_eq!(latex_bivariate(&ints(&[5])), "5");
        assert_eq!(latex_bivariate(&ints(&[0, -3])), "-3t_2");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("plain"), "plain");
    }
}

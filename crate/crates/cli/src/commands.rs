use std::fmt::Write as _;

use invdeg_core::mldegree::{finite_difference_check, ml_polynomial, ml_table};
use invdeg_core::multidegree::MultidegreeTable;
use invdeg_core::psi::PsiTable;
use invdeg_core::symbolic::{
    adjugate_sym, check_witness, det_sym, generators_swap_symmetric, generic_sym_matrix,
    j_plus_b_spans_i1xy, mat_mul, verify_adjugate_numeric, verify_graph_vanishing, Side,
    SymbolicMatrix, VerifyMode,
};
use invdeg_core::{BigInt, Result};
use serde_json::{json, Map, Value};

use crate::report::{int_strings, latex_bivariate, Check, Report};

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn row(label: impl Into<String>, values: &[BigInt]) -> Vec<String> {
    let mut out = vec![label.into()];
    out.extend(values.iter().map(BigInt::to_string));
    out
}

fn pass_fail(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

pub fn psi(n: usize) -> Result<Report> {
    let table = PsiTable::new(n);
    let singles: Vec<BigInt> = (1..=n).map(|i| table.single(i).clone()).collect();
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((i, j, table.pair(i, j).clone()));
        }
    }
    let pair_values: Vec<BigInt> = pairs.iter().map(|(_, _, v)| v.clone()).collect();

    let results = json!({
        "singles": singles.iter().enumerate()
            .map(|(k, v)| json!({"i": k + 1, "value": v.to_string()}))
            .collect::<Vec<_>>(),
        "pairs": pairs.iter()
            .map(|(i, j, v)| json!({"i": i, "j": j, "value": v.to_string()}))
            .collect::<Vec<_>>(),
    });

    let csv = vec![
        vec!["kind".to_string(), "values".to_string()],
        row("single", &singles),
        row("pair", &pair_values),
    ];

    let mut latex = String::from("\\begin{tabular}{rrr}\n$i$ & $j$ & $\\psi$ \\\\\n\\hline\n");
    for (k, v) in singles.iter().enumerate() {
        let _ = writeln!(latex, "{} & & {v} \\\\", k + 1);
    }
    for (i, j, v) in &pairs {
        let _ = writeln!(latex, "{i} & {j} & {v} \\\\");
    }
    latex.push_str("\\end{tabular}\n");

    Ok(Report {
        command: "psi",
        params: params(&[("n", json!(n))]),
        results,
        checks: Vec::new(),
        csv,
        latex,
    })
}

pub fn multidegree(n: usize) -> Result<Report> {
    let table = MultidegreeTable::compute(n)?;
    let identity = table.verify_identity();
    let gamma_poly = table.gamma_poly();
    let rank_rows: Vec<(usize, Vec<BigInt>)> = (1..n)
        .map(|r| {
            let row = (0..=table.m).map(|d| table.delta(d as i64, r as i64)).collect();
            (r, row)
        })
        .collect();

    let results = json!({
        "m": table.m,
        "beta": int_strings(&table.beta),
        "sigma": int_strings(&table.sigma_coeffs),
        "gamma": int_strings(&table.gamma_degs),
        "delta": rank_rows.iter()
            .map(|(r, v)| json!({"r": r, "values": int_strings(v)}))
            .collect::<Vec<_>>(),
        "identity": {
            "lhs": int_strings(&identity.lhs),
            "rhs": int_strings(&identity.rhs),
        },
    });
    let check = Check::new(
        "identity",
        identity.all_match(),
        format!(
            "(t1+t2)*C(Gamma) vs t1^{m} + t2^{m} + C(Sigma): {} of {} coefficients agree",
            identity.coefficient_matches().iter().filter(|b| **b).count(),
            identity.lhs.len().max(identity.rhs.len()),
            m = table.m,
        ),
    );

    let mut csv = vec![
        vec!["series".to_string(), "coefficients".to_string()],
        row("beta", &table.beta),
        row("sigma", &table.sigma_coeffs),
        row("gamma", &table.gamma_degs),
    ];
    for (r, v) in &rank_rows {
        csv.push(row(format!("delta_r{r}"), v));
    }
    csv.push(row("identity_lhs", &identity.lhs));
    csv.push(row("identity_rhs", &identity.rhs));
    csv.push(vec!["identity".to_string(), pass_fail(check.pass).to_string()]);

    let mut latex = String::from("\\begin{tabular}{rrrr}\n$d$ & $\\beta(n,d)$ & $C(\\Sigma)$ & $C(\\Gamma)$ \\\\\n\\hline\n");
    for d in 0..=table.m {
        let sigma = d
            .checked_sub(1)
            .and_then(|k| table.sigma_coeffs.get(k))
            .map(BigInt::to_string)
            .unwrap_or_default();
        let gamma = table.gamma_degs.get(d).map(BigInt::to_string).unwrap_or_default();
        let _ = writeln!(latex, "{d} & {} & {sigma} & {gamma} \\\\", table.beta[d]);
    }
    latex.push_str("\\end{tabular}\n");
    let _ = writeln!(latex, "\\[ C(\\Gamma) = {} \\]", latex_bivariate(&gamma_poly));
    let _ = writeln!(
        latex,
        "\\[ (t_1 + t_2)\\,C(\\Gamma) = {} \\]",
        latex_bivariate(&identity.lhs)
    );
    let _ = writeln!(
        latex,
        "\\[ t_1^{{{m}}} + t_2^{{{m}}} + C(\\Sigma) = {} \\]",
        latex_bivariate(&identity.rhs),
        m = table.m
    );

    Ok(Report {
        command: "multidegree",
        params: params(&[("n", json!(n))]),
        results,
        checks: vec![check],
        csv,
        latex,
    })
}

pub fn ml_rows(n_max: usize) -> Result<Report> {
    let rows = ml_table(n_max)?;
    let results = json!({
        "rows": rows.iter().enumerate()
            .map(|(k, v)| json!({"n": k + 1, "phi": int_strings(v)}))
            .collect::<Vec<_>>(),
    });
    let mut csv = vec![vec!["n".to_string(), "phi".to_string()]];
    let mut latex = String::from("\\begin{tabular}{rl}\n$n$ & $\\phi(n,1), \\dots, \\phi(n,m)$ \\\\\n\\hline\n");
    for (k, v) in rows.iter().enumerate() {
        csv.push(row((k + 1).to_string(), v));
        let joined: Vec<String> = v.iter().map(BigInt::to_string).collect();
        let _ = writeln!(latex, "{} & {} \\\\", k + 1, joined.join(", "));
    }
    latex.push_str("\\end{tabular}\n");
    Ok(Report {
        command: "mldeg",
        params: params(&[("n_max", json!(n_max))]),
        results,
        checks: Vec::new(),
        csv,
        latex,
    })
}

pub fn ml_single_dimension(d: usize, poly: bool, window: usize) -> Result<Report> {
    let fd = finite_difference_check(d, window)?;
    let fd_check = Check::new(
        "finite_differences",
        fd.all_vanish(),
        format!(
            "order-{d} forward differences of phi(n,{d}) over n = {}..{} are {}",
            fd.start,
            fd.start + fd.values.len() - 1,
            fd.differences.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", "),
        ),
    );

    let mut results = Map::new();
    results.insert("d".into(), json!(d));
    results.insert(
        "samples".into(),
        Value::Array(
            fd.values
                .iter()
                .enumerate()
                .map(|(k, v)| json!({"n": fd.start + k, "phi": v.to_string()}))
                .collect(),
        ),
    );
    results.insert("differences".into(), int_strings(&fd.differences));

    let mut checks = Vec::new();
    let mut csv;
    let mut latex = String::new();
    if poly {
        let p = ml_polynomial(d)?;
        let coeffs: Vec<String> = p.coeffs.iter().map(ToString::to_string).collect();
        results.insert(
            "polynomial".into(),
            json!({
                "display": p.to_string(),
                "coefficients": coeffs,
                "fit_range": [p.sample_range.start(), p.sample_range.end()],
                "validated": p.validated.iter()
                    .map(|(n, v)| json!({"n": n, "phi": v.to_string()}))
                    .collect::<Vec<_>>(),
            }),
        );
        let degree_ok = p.degree() == Some(d - 1);
        checks.push(Check::new(
            "interpolation",
            true,
            format!(
                "fit on n = {}..{}, reproduces n = {}",
                p.sample_range.start(),
                p.sample_range.end(),
                p.validated.iter().map(|(n, _)| n.to_string()).collect::<Vec<_>>().join(", "),
            ),
        ));
        checks.push(Check::new(
            "degree",
            degree_ok,
            match p.degree() {
                Some(k) => format!("degree {k}, expected {}", d - 1),
                None => format!("zero polynomial, expected degree {}", d - 1),
            },
        ));
        csv = vec![vec!["power".to_string(), "coefficient".to_string()]];
        for (k, c) in coeffs.iter().enumerate() {
            csv.push(vec![k.to_string(), c.clone()]);
        }
        let _ = writeln!(latex, "\\[ \\phi(n,{d}) = {} \\]", latex_polynomial_in_n(&p.coeffs));
    } else {
        csv = vec![vec!["n".to_string(), "phi".to_string()]];
        latex.push_str("\\begin{tabular}{rr}\n$n$ & $\\phi(n,d)$ \\\\\n\\hline\n");
        for (k, v) in fd.values.iter().enumerate() {
            csv.push(vec![(fd.start + k).to_string(), v.to_string()]);
            let _ = writeln!(latex, "{} & {v} \\\\", fd.start + k);
        }
        latex.push_str("\\end{tabular}\n");
    }
    checks.push(fd_check);

    Ok(Report {
        command: "mldeg",
        params: params(&[("d", json!(d)), ("poly", json!(poly)), ("window", json!(window))]),
        results: Value::Object(results),
        checks,
        csv,
        latex,
    })
}

fn latex_polynomial_in_n(coeffs: &[invdeg_core::BigRational]) -> String {
    use num_traits::{One, Signed, Zero};
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        } else if c.is_negative() {
            out.push('-');
        }
        let mag = c.abs();
        let number = if mag.is_integer() {
            mag.to_integer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
        };
        let power = match k {
            0 => String::new(),
            1 => "n".to_string(),
            _ => format!("n^{{{k}}}"),
        };
        if power.is_empty() {
            out.push_str(&number);
        } else if mag.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&number);
            out.push_str(&power);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Symbolic `X · adj(X) = det(X) · Id` for the generic symmetric matrix.
fn symbolic_adjugate_identity(n: usize) -> Result<bool> {
    let x = generic_sym_matrix(n, Side::X);
    let product = mat_mul(&x, &adjugate_sym(&x))?;
    Ok(product == SymbolicMatrix::scalar(n, &det_sym(&x)))
}

pub struct VerifyParams {
    pub n: usize,
    pub mode: VerifyMode,
    pub trials: usize,
    pub seed: u64,
    pub symbolic_cap: usize,
}

pub fn verify(p: &VerifyParams) -> Result<Report> {
    let mode_name = match p.mode {
        VerifyMode::Symbolic => "symbolic",
        VerifyMode::Numeric => "numeric",
    };
    let mut checks = Vec::new();

    checks.push(match verify_graph_vanishing(p.n, p.mode, p.trials, p.seed, p.symbolic_cap) {
        Ok(r) => Check::new(
            "graph_vanishing",
            true,
            format!("{} generators vanish, {mode_name}, {} point(s)", r.generators, r.trials),
        ),
        Err(e @ invdeg_core::Error::NonzeroResidual { .. }) => {
            Check::new("graph_vanishing", false, e.to_string())
        }
        Err(e) => return Err(e),
    });

    checks.push(if p.n <= p.symbolic_cap {
        let ok = symbolic_adjugate_identity(p.n)?;
        Check::new("adjugate_identity", ok, "symbolic X*adj(X) = det(X)*Id")
    } else {
        let ok = verify_adjugate_numeric(p.n, p.trials, p.seed);
        Check::new(
            "adjugate_identity",
            ok,
            format!("numeric M*adj(M) = det(M)*Id at {} points, seed {}", p.trials, p.seed),
        )
    });

    let swap = generators_swap_symmetric(p.n);
    checks.push(Check::new(
        "swap_symmetry",
        swap,
        "X <-> Y permutes the generators up to sign",
    ));

    let span = j_plus_b_spans_i1xy(p.n);
    checks.push(Check::new(
        "j_plus_b_span",
        span,
        "J + (b) and I1(XY) have equal spans in bidegree (1,1)",
    ));

    for r in 0..=p.n {
        let w = check_witness(p.n, r, p.seed)?;
        checks.push(Check::new(
            format!("witness_r{r}"),
            w.passed(),
            format!(
                "XY vanishes: {}, rank M = {} (want {r}), rank N = {} (want {}), seed {}",
                w.generators_vanish,
                w.rank_m,
                w.rank_n,
                p.n - r,
                p.seed
            ),
        ));
    }

    let results = json!({
        "passed": checks.iter().filter(|c| c.pass).count(),
        "total": checks.len(),
    });
    let mut csv = vec![vec!["name".to_string(), "pass".to_string(), "detail".to_string()]];
    let mut latex = String::from("\\begin{tabular}{ll}\ncheck & result \\\\\n\\hline\n");
    for c in &checks {
        csv.push(vec![c.name.clone(), pass_fail(c.pass).to_string(), c.detail.clone()]);
        let _ = writeln!(latex, "\\verb|{}| & {} \\\\", c.name, pass_fail(c.pass));
    }
    latex.push_str("\\end{tabular}\n");

    Ok(Report {
        command: "verify",
        params: params(&[
            ("n", json!(p.n)),
            ("mode", json!(mode_name)),
            ("trials", json!(p.trials)),
            ("seed", json!(p.seed.to_string())),
            ("symbolic_cap", json!(p.symbolic_cap)),
        ]),
        results,
        checks,
        csv,
        latex,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjugate_identity_small_sizes() {
        for n in 1..=3 {
            assert!(symbolic_adjugate_identity(n).unwrap());
        }
    }

    #[test]
    fn polynomial_latex() {
        use invdeg_core::BigRational;
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(latex_polynomial_in_n(&[q(-1, 1), q(1, 1)]), "n - 1");
        assert_eq!(latex_polynomial_in_n(&[q(0, 1), q(-1, 2), q(1, 1)]), "n^{2} - \\frac{1}{2}n");
    }
}

use gw3ca_core::conformal::{print_lambda, print_lambda2, Engine};
use serde_json::json;

use crate::report::{CliError, Report};

pub fn ope(preset: &str, a: &str, b: &str) -> Result<Report, CliError> {
    let e = Engine::builtin(preset)?;
    let x = e.parse_expr(a)?;
    let y = e.parse_expr(b)?;
    let text = print_lambda(e.preset(), &e.bracket(&x, &y));
    let js = json!({"preset": preset, "a": a, "b": b, "bracket": text});
    Ok(Report::new(text, js, true))
}

/// Triples whose residual is known to be nonzero.
fn expected_nonzero(preset: &str) -> &'static [[&'static str; 3]] {
    match preset {
        "gw3_nogo" => &[["W", "W", "M"]],
        _ => &[],
    }
}

pub fn jacobi(preset: &str) -> Result<Report, CliError> {
    let e = Engine::builtin(preset)?;
    let p = e.preset();
    let n = p.num_generators() as u16;
    let mut triples = Vec::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                triples.push((a, b, c));
            }
        }
    }
    let expected = expected_nonzero(preset);
    let rows: Vec<([String; 3], String)> = {
        use rayon::prelude::*;
        triples
            .par_iter()
            .map(|&(a, b, c)| {
                let names = [a, b, c].map(|g| p.gen_name(g).to_string());
                (names, print_lambda2(p, &e.jacobi_residual(a, b, c)))
            })
            .collect()
    };
    let mut text = String::new();
    let mut zero = 0;
    let mut ok = true;
    let mut confirmed = Vec::new();
    for (names, res) in &rows {
        let is_zero = res == "0";
        let flagged = expected.iter().any(|t| t.iter().zip(names).all(|(x, y)| *x == y));
        if is_zero {
            zero += 1;
        }
        let status = match (is_zero, flagged) {
            (true, false) => "0".to_string(),
            (false, true) => {
                confirmed.push(names.join(" "));
                format!("nonzero (expected): {}", res)
            }
            (true, true) => {
                ok = false;
                "0 (nonzero expected)".to_string()
            }
            (false, false) => {
                if expected.is_empty() {
                    ok = false;
                }
                format!("nonzero: {}", res)
            }
        };
        text.push_str(&format!("{} {} {}  {}\n", names[0], names[1], names[2], status));
    }
    text.push_str(&format!("{}/{} zero residuals", zero, rows.len()));
    if !expected.is_empty() {
        text.push_str(if confirmed.len() == expected.len() { "\nexpected_nonzero: confirmed" } else { "\nexpected_nonzero: missing" });
    }
    let js = json!({
        "preset": preset,
        "triples": rows.iter().map(|(n, r)| json!({"triple": n, "residual": r})).collect::<Vec<_>>(),
        "zero": zero,
        "total": rows.len(),
        "expected_nonzero_confirmed": confirmed,
    });
    Ok(Report::new(text, js, ok))
}

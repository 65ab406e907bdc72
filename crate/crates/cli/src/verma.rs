use gw3ca_core::modes::{ModeAlgebra, Params};
use gw3ca_core::scalars::ScalarFn;
use gw3ca_core::verma::{
    character as verma_character, det_dn, dn_vacuum_quoted, gram, singular_vectors, FVector, Pairing,
};
use serde_json::json;

use crate::params::{ModuleArgs, Sampler};
use crate::report::{CliError, Report};

/// Number of random points behind a vanishing certificate.
const SAMPLES: usize = 20;

fn is_symbolic(p: &Params) -> bool {
    [&p.c_l, &p.c_m, &p.h_l, &p.h_w, &p.h_m, &p.h_v].iter().any(|x| !x.is_constant())
}

pub fn det(level: u32, args: &ModuleArgs, seed: u64) -> Result<Report, CliError> {
    let params = args.params()?;
    let conv = args.pairing()?;
    if level >= 4 && is_symbolic(&params) {
        let mut sampler = Sampler::new(seed);
        let mut values = Vec::new();
        while values.len() < SAMPLES {
            let at = sampler.point(&params);
            let Ok(p) = (|| -> Result<Params, gw3ca_core::scalars::ScalarError> {
                let f = |x: &ScalarFn| x.substitute(&at);
                Ok(Params { c_l: f(&params.c_l)?, c_m: f(&params.c_m)?, h_l: f(&params.h_l)?, h_w: f(&params.h_w)?, h_m: f(&params.h_m)?, h_v: f(&params.h_v)? })
            })() else {
                continue;
            };
            if p.c_m.is_zero() {
                continue;
            }
            values.push(gram(&ModeAlgebra::new(p), level, conv).det());
        }
        let zeros = values.iter().filter(|d| d.is_zero()).count();
        let text = format!(
            "level {}: determinant sampled at {} points (seed {})\nvanishes at {}/{}",
            level, SAMPLES, seed, zeros, SAMPLES
        );
        let js = json!({"level": level, "seed": seed, "samples": SAMPLES, "vanishing": zeros,
            "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>()});
        return Ok(Report::new(text, js, true));
    }
    let g = gram(&ModeAlgebra::new(params), level, conv);
    let d = g.det();
    let text = format!(
        "level {}: dim {}\nblock vanishing: {}\ndet = {}",
        level,
        g.rows.len(),
        g.block_vanishing_holds(),
        d
    );
    let js = json!({"level": level, "dim": g.rows.len(), "block_vanishing": g.block_vanishing_holds(), "det": d.to_string()});
    Ok(Report::new(text, js, g.block_vanishing_holds()))
}

pub fn dn(n: u32, args: &ModuleArgs) -> Result<Report, CliError> {
    let params = args.params()?;
    let conv = args.pairing()?;
    let r = det_dn(&ModeAlgebra::new(params.clone()), n, conv);
    // the signed adjoints of the contragredient form flip the W row
    let sign = if conv == Pairing::Contragredient { -ScalarFn::one() } else { ScalarFn::one() };
    let want = &sign * &r.closed_form;
    let matches = r.by_action == want;
    let mut text = format!(
        "D_{} by action = {}\nclosed form = {}\nsign of the pairing = {}\nmatches: {}",
        n, r.by_action, r.closed_form, sign, matches
    );
    let mut js = json!({"n": n, "by_action": r.by_action.to_string(), "closed_form": r.closed_form.to_string(),
        "sign": sign.to_string(), "matches": matches});
    let mut ok = matches;
    let h_zero = [&params.h_l, &params.h_w, &params.h_m, &params.h_v].iter().all(|x| x.is_zero());
    if h_zero {
        let q = dn_vacuum_quoted(&params.c_m, n as i64);
        let m = q == &r.by_action * &sign;
        text.push_str(&format!("\nn(n^2-1)^2(n^2-4)c_M^2/4320 = {}\nmatches at h = 0: {}", q, m));
        js["vacuum_quoted"] = json!(q.to_string());
        js["vacuum_matches"] = json!(m);
        ok &= m;
    }
    Ok(Report::new(text, js, ok))
}

fn vector_text(v: &FVector<ScalarFn>) -> String {
    let parts: Vec<String> = v.iter().map(|(m, c)| format!("({})*{}", c, m)).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

pub fn singular(level: u32, args: &ModuleArgs) -> Result<Report, CliError> {
    let alg = ModeAlgebra::new(args.params()?);
    let vs = singular_vectors(&alg, level, |x: &ScalarFn| x.clone());
    let mut text = format!("level {}: {} independent vectors killed by positive modes", level, vs.len());
    for v in &vs {
        text.push('\n');
        text.push_str(&vector_text(v));
    }
    let js = json!({"level": level, "vectors": vs.iter().map(vector_text).collect::<Vec<_>>()});
    Ok(Report::new(text, js, true))
}

fn row(xs: &[i64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn character(n_max: u32, module: &str) -> Result<Report, CliError> {
    let c = verma_character(n_max);
    let (text, js, ok) = match module {
        "verma" => (
            format!("enumerated: {}\nprod (1-q^n)^-4: {}\nmatches: {}", row(&c.verma), row(&c.verma_series), c.verma_matches()),
            json!({"module": "verma", "dims": c.verma, "series": c.verma_series, "matches": c.verma_matches()}),
            c.verma_matches(),
        ),
        "vacuum" => (
            format!(
                "enumerated: {}\n(1-q^2)^-2 prod_(n>=3) (1-q^n)^-4: {}\nmatches: {}\nnote: the displayed exponent (1-q^2)^2 gives {} (matches: {})",
                row(&c.vacuum),
                row(&c.vacuum_series),
                c.vacuum_matches(),
                row(&c.corollary_display_series),
                c.corollary_display_matches()
            ),
            json!({"module": "vacuum", "dims": c.vacuum, "series": c.vacuum_series, "matches": c.vacuum_matches(),
                "display_series": c.corollary_display_series, "display_matches": c.corollary_display_matches()}),
            c.vacuum_matches(),
        ),
        other => return Err(CliError::Parse(format!("unknown module {:?}; use verma or vacuum", other))),
    };
    Ok(Report::new(text, js, ok))
}

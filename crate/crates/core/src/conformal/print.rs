//! Stable text form of bracket values.
//!
//! `l` and `m` stand for the bracket variables, `D` for the derivation.
//! Single fields are grouped under a polynomial in `D` and `l`, as in
//! `(D + 3*l)W`; longer words print as juxtaposed factors, as in `V(DM)`.
//! The output parses back with [`Preset::parse_raw`](super::Preset::parse_raw).

use std::collections::BTreeMap;

use crate::scalars::ScalarFn;

use super::expr::{DGen, Lambda2Poly, LambdaPoly, VAExpr, Word};
use super::preset::Preset;

/// Splits a coefficient into sign and body; the body is parenthesised when
/// it would not bind as a single factor.
fn coef_parts(c: &ScalarFn) -> (bool, String) {
    let t = c.to_text();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
        _ => (false, t),
    };
    if body.contains(' ') && !(body.starts_with('(') && body.ends_with(')') && balanced_inner(&body)) {
        (neg, format!("({})", body))
    } else {
        (neg, body)
    }
}

/// True when the outer parentheses of `s` enclose the whole string.
fn balanced_inner(s: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i != s.len() - 1 {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

fn var_pow(v: &str, n: u32) -> Option<String> {
    match n {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{}^{}", v, n)),
    }
}

/// `c * l^n * m^k * D^j` as (negative, text); `None` body when it is `1`.
fn monomial(c: &ScalarFn, vars: &[(&str, u32)]) -> (bool, Option<String>) {
    let (neg, body) = coef_parts(c);
    let mut parts: Vec<String> = Vec::new();
    if body != "1" {
        parts.push(body);
    }
    for (v, n) in vars {
        if let Some(p) = var_pow(v, *n) {
            parts.push(p);
        }
    }
    if parts.is_empty() {
        (neg, None)
    } else {
        (neg, Some(parts.join("*")))
    }
}

fn factor_text(p: &Preset, x: DGen) -> String {
    match x.d {
        0 => p.gen_name(x.gen).to_string(),
        1 => format!("D{}", p.gen_name(x.gen)),
        d => format!("D^{}{}", d, p.gen_name(x.gen)),
    }
}

fn word_text(p: &Preset, w: &Word) -> String {
    if w.len() == 1 {
        return factor_text(p, w.0[0]);
    }
    w.factors()
        .iter()
        .map(|x| if x.d == 0 { factor_text(p, *x) } else { format!("({})", factor_text(p, *x)) })
        .collect()
}

fn join_signed(items: Vec<(bool, String)>) -> String {
    if items.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (neg, body)) in items.into_iter().enumerate() {
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum GroupKey {
    Scalar,
    Gen(u16),
    Word(Word),
}

/// Prints `sum l^n m^k * word` with terms given as ((n, k), word, coef).
fn print_terms(p: &Preset, terms: Vec<((u32, u32), Word, ScalarFn)>) -> String {
    // each group member: (D power, l power, m power, coef)
    let mut groups: BTreeMap<GroupKey, Vec<(u32, u32, u32, ScalarFn)>> = BTreeMap::new();
    for ((n, k), w, c) in terms {
        let (key, d) = if w.is_vacuum() {
            (GroupKey::Scalar, 0)
        } else if w.len() == 1 {
            (GroupKey::Gen(w.0[0].gen), w.0[0].d)
        } else {
            (GroupKey::Word(w), 0)
        };
        groups.entry(key).or_default().push((d, n, k, c));
    }
    let mut items = Vec::new();
    for (key, mut members) in groups {
        members.sort_by(|a, b| (b.0, b.1, b.2).cmp(&(a.0, a.1, a.2)));
        let field = match &key {
            GroupKey::Scalar => None,
            GroupKey::Gen(g) => Some(p.gen_name(*g).to_string()),
            GroupKey::Word(w) => Some(word_text(p, w)),
        };
        let mono = |(d, n, k, c): &(u32, u32, u32, ScalarFn)| monomial(c, &[("l", *n), ("m", *k), ("D", *d)]);
        match (&field, members.len()) {
            (None, _) => {
                for m in &members {
                    let (neg, body) = mono(m);
                    items.push((neg, body.unwrap_or_else(|| "1".into())));
                }
            }
            (Some(f), 1) => {
                let (d, n, k, c) = &members[0];
                let (neg, body) = monomial(c, &[("l", *n), ("m", *k)]);
                let dpart = var_pow("D", *d).unwrap_or_default();
                let text = match body {
                    None => format!("{}{}", dpart, f),
                    Some(b) => format!("{}*{}{}", b, dpart, f),
                };
                items.push((neg, text));
            }
            (Some(f), _) => {
                let inner: Vec<(bool, String)> =
                    members.iter().map(|m| { let (neg, b) = mono(m); (neg, b.unwrap_or_else(|| "1".into())) }).collect();
                items.push((false, format!("({}){}", join_signed(inner), f)));
            }
        }
    }
    join_signed(items)
}

pub fn print_lambda(p: &Preset, x: &LambdaPoly) -> String {
    let mut terms = Vec::new();
    for (n, e) in x.terms() {
        for (w, c) in e.terms() {
            terms.push(((n, 0), w.clone(), c.clone()));
        }
    }
    print_terms(p, terms)
}

pub fn print_expr(p: &Preset, x: &VAExpr) -> String {
    print_lambda(p, &LambdaPoly::constant(x.clone()))
}

pub fn print_lambda2(p: &Preset, x: &Lambda2Poly) -> String {
    let mut terms = Vec::new();
    for ((n, k), e) in x.terms() {
        for (w, c) in e.terms() {
            terms.push(((n, k), w.clone(), c.clone()));
        }
    }
    print_terms(p, terms)
}

use std::collections::HashMap;

use crate::conformal::{ConformalError, DGen, Engine, VAExpr};
use crate::scalars::{sym, ScalarFn, Symbol};

use super::algebra::ModeAlgebra;
use super::mode::{Field, Mode};
use super::pbw::{HWVector, PBWMonomial};

fn falling(m: i64, k: u32) -> i64 {
    (0..k as i64).map(|t| m - t).product()
}

fn field_of(engine: &Engine, g: u16) -> Field {
    let name = engine.preset().gen_name(g);
    Field::parse(name).unwrap_or_else(|| panic!("generator {} has no modes", name))
}

fn word_weight(engine: &Engine, w: &[DGen]) -> i64 {
    w.iter().map(|x| (engine.preset().weight(x.gen) + x.d) as i64).sum()
}

fn word_act(engine: &Engine, alg: &ModeAlgebra, w: &[DGen], j: i64, u: &HWVector) -> HWVector {
    if u.is_zero() {
        return HWVector::zero();
    }
    match w {
        [] => {
            if j == -1 {
                u.clone()
            } else {
                HWVector::zero()
            }
        }
        [x] => {
            // (D^k a)_(j) = (-1)^k j(j-1)..(j-k+1) a_(j-k)
            let c = falling(j, x.d) * if x.d % 2 == 0 { 1 } else { -1 };
            if c == 0 {
                return HWVector::zero();
            }
            let f = field_of(engine, x.gen);
            let mode = Mode::new(f, j - x.d as i64 - f.weight() + 1);
            alg.act(mode, u).scale(&ScalarFn::from_int(c))
        }
        [x, rest @ ..] => {
            let d = u.level() as i64;
            let dx = word_weight(engine, std::slice::from_ref(x));
            let dr = word_weight(engine, rest);
            let head = std::slice::from_ref(x);
            let mut out = HWVector::zero();
            for i in (j - d - dr)..0 {
                let r = word_act(engine, alg, rest, j - i - 1, u);
                out.add_assign(&word_act(engine, alg, head, i, &r));
            }
            for i in 0..(d + dx) {
                let r = word_act(engine, alg, head, i, u);
                out.add_assign(&word_act(engine, alg, rest, j - i - 1, &r));
            }
            out
        }
    }
}

/// `X_(j) u` for a state `X` of the enveloping algebra, with
/// `X_(j) = X(j - Δ + 1)` on homogeneous words.
pub fn field_mode_act(engine: &Engine, alg: &ModeAlgebra, x: &VAExpr, j: i64, u: &HWVector) -> HWVector {
    let bind = central_bindings(alg);
    let mut out = HWVector::zero();
    for (w, c) in x.terms() {
        let c = c.substitute_fn(&bind).expect("central charges are admissible");
        out.add_scaled(&word_act(engine, alg, w.factors(), j, u), &c);
    }
    out
}

fn central_bindings(alg: &ModeAlgebra) -> HashMap<Symbol, ScalarFn> {
    let p = alg.params();
    HashMap::from([(sym::CL, p.c_l.clone()), (sym::CM, p.c_m.clone())])
}

#[derive(Clone, Debug, Default)]
pub struct StateFieldReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl StateFieldReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares `[A_(m), B_(n)]` computed by the mode action with the commutator
/// formula built from the λ-bracket of `A` and `B`, on all PBW vectors up to
/// `level` and mode indices `A(p), B(q)` with `|p|, |q| <= 2`.
pub fn state_field_check(
    engine: &Engine,
    alg: &ModeAlgebra,
    a: &str,
    b: &str,
    level: u32,
) -> Result<StateFieldReport, ConformalError> {
    let (xa, xb) = (engine.parse_expr(a)?, engine.parse_expr(b)?);
    let wt = |x: &VAExpr| -> Result<i64, ConformalError> {
        let mut ws = x.terms().map(|(w, _)| engine.weight(w) as i64);
        let first = ws.next().ok_or_else(|| ConformalError::Parse("zero field".into()))?;
        if ws.any(|w| w != first) {
            return Err(ConformalError::Parse("field is not homogeneous".into()));
        }
        Ok(first)
    };
    let (da, db) = (wt(&xa)?, wt(&xb)?);
    let br = engine.bracket(&xa, &xb);
    let mut report = StateFieldReport::default();
    for lv in 0..=level {
        for mono in PBWMonomial::all_of_level(lv) {
            let u = HWVector::mono(mono.clone());
            for p in -2..=2i64 {
                for q in -2..=2i64 {
                    let (m, n) = (p + da - 1, q + db - 1);
                    let lhs = field_mode_act(engine, alg, &xa, m, &field_mode_act(engine, alg, &xb, n, &u))
                        .sub(&field_mode_act(engine, alg, &xb, n, &field_mode_act(engine, alg, &xa, m, &u)));
                    let mut rhs = HWVector::zero();
                    for (k, c) in br.terms() {
                        let f = falling(m, k);
                        if f != 0 {
                            let r = field_mode_act(engine, alg, c, m + n - k as i64, &u);
                            rhs.add_scaled(&r, &ScalarFn::from_int(f));
                        }
                    }
                    report.checked += 1;
                    if lhs != rhs {
                        report.failures.push(format!("[{}({}), {}({})] on {}", a, p, b, q, mono));
                    }
                }
            }
        }
    }
    Ok(report)
}

//! The lambda-bracket engine on the universal enveloping vertex algebra.
//!
//! Elements are kept in the normal form of [`Word`]. Reordering uses
//! `:x:yY:: = :y:xY:: + :(int_{-D}^0 [x_l y] dl) Y:`, re-association uses
//! quasi-associativity, and brackets with composite words use the left and
//! right Wick formulas. Every intermediate result is memoised.

use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use crate::scalars::ScalarFn;

use super::expr::{DGen, Lambda2Poly, LambdaPoly, VAExpr, Word};
use super::preset::{Preset, RawTerm};
use super::ConformalError;

pub struct Engine {
    preset: Arc<Preset>,
    table: Vec<OnceLock<LambdaPoly>>,
    bracket_memo: DashMap<(Word, Word), LambdaPoly>,
    nogen_memo: DashMap<(DGen, Word), VAExpr>,
    nord_memo: DashMap<(Word, Word), VAExpr>,
}

fn binom(n: u32, k: u32) -> ScalarFn {
    let mut r: i64 = 1;
    for i in 0..k as i64 {
        r = r * (n as i64 - i) / (i + 1);
    }
    ScalarFn::from_int(r)
}

fn factorial(n: u32) -> ScalarFn {
    ScalarFn::from_int((1..=n as i64).product())
}

impl Engine {
    pub fn new(preset: Preset) -> Engine {
        let n = preset.num_generators();
        Engine {
            preset: Arc::new(preset),
            table: (0..n * n).map(|_| OnceLock::new()).collect(),
            bracket_memo: DashMap::new(),
            nogen_memo: DashMap::new(),
            nord_memo: DashMap::new(),
        }
    }

    pub fn builtin(name: &str) -> Result<Engine, ConformalError> {
        Ok(Engine::new(Preset::builtin(name)?))
    }

    pub fn preset(&self) -> &Preset {
        &self.preset
    }

    /// Index of a generator, by name.
    pub fn gen(&self, name: &str) -> Result<u16, ConformalError> {
        self.preset.gen_index(name).ok_or_else(|| ConformalError::UnknownGenerator(name.to_string()))
    }

    /// Conformal weight of a word.
    pub fn weight(&self, w: &Word) -> u32 {
        w.factors().iter().map(|x| self.preset.weight(x.gen) + x.d).sum()
    }

    /// Normal form of a raw (written-order) expression.
    pub fn normalize_raw(&self, terms: &[RawTerm]) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for t in terms {
            out.add_at_scaled(t.lam, &self.normalize_word(&t.word), &t.coef);
        }
        out
    }

    /// Parses an expression in the preset syntax and normalises it.
    pub fn parse(&self, s: &str) -> Result<LambdaPoly, ConformalError> {
        Ok(self.normalize_raw(&self.preset.parse_raw(s)?))
    }

    /// Parses an expression that must not involve the bracket variable.
    pub fn parse_expr(&self, s: &str) -> Result<VAExpr, ConformalError> {
        let p = self.parse(s)?;
        if p.degree().unwrap_or(0) > 0 {
            return Err(ConformalError::Parse(format!("{:?} contains the bracket variable", s)));
        }
        Ok(p.coeff(0))
    }

    /// `:f1 :f2 ( ... fk)::` for factors in arbitrary order.
    pub fn normalize_word(&self, factors: &[DGen]) -> VAExpr {
        let w = Word(factors.to_vec());
        if w.is_normal() {
            return VAExpr::word(w);
        }
        let mut acc = VAExpr::vacuum();
        for x in factors.iter().rev() {
            acc = self.no_gen_expr(*x, &acc);
        }
        acc
    }

    /// Table entry `[a_l b]` for generators, completed by skew-symmetry.
    pub fn table(&self, a: u16, b: u16) -> LambdaPoly {
        let n = self.preset.num_generators();
        self.table[a as usize * n + b as usize]
            .get_or_init(|| {
                if let Some(raw) = self.preset.entries.get(&(a, b)) {
                    self.normalize_raw(raw)
                } else if let Some(raw) = self.preset.entries.get(&(b, a)) {
                    self.skew(&self.normalize_raw(raw))
                } else {
                    LambdaPoly::zero()
                }
            })
            .clone()
    }

    /// `-sum_n (-l - D)^n P_n`, the right-hand side of skew-symmetry.
    pub fn skew(&self, p: &LambdaPoly) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (n, pn) in p.terms() {
            let mut dk = pn.clone();
            for k in 0..=n {
                let sign = if n % 2 == 0 { -1 } else { 1 };
                let c = &binom(n, k) * &ScalarFn::from_int(sign);
                out.add_at_scaled(n - k, &dk, &c);
                dk = self.apply_d(&dk);
            }
        }
        out
    }

    // ---------------------------------------------------------------- D

    pub fn apply_d_word(&self, w: &Word) -> VAExpr {
        let mut out = VAExpr::zero();
        for i in 0..w.len() {
            let mut f = w.0.clone();
            f[i] = f[i].derive(1);
            let nw = Word(f);
            if nw.is_normal() {
                out.add_term(nw, ScalarFn::one());
            } else {
                out.add_assign(&self.normalize_word(&nw.0));
            }
        }
        out
    }

    pub fn apply_d(&self, e: &VAExpr) -> VAExpr {
        let mut out = VAExpr::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.apply_d_word(w), c);
        }
        out
    }

    pub fn apply_d_pow(&self, e: &VAExpr, k: u32) -> VAExpr {
        let mut r = e.clone();
        for _ in 0..k {
            r = self.apply_d(&r);
        }
        r
    }

    // ---------------------------------------------------------------- normal ordering

    /// `:x w:` for a single factor and a normal-form word.
    pub fn no_gen(&self, x: DGen, w: &Word) -> VAExpr {
        match w.0.first() {
            None => return VAExpr::word(Word::single(x)),
            Some(y) if x >= *y => return VAExpr::word(w.prepend(x)),
            _ => {}
        }
        let key = (x, w.clone());
        if let Some(r) = self.nogen_memo.get(&key) {
            return r.clone();
        }
        let (y, rest) = w.split_first().unwrap();
        let mut out = self.no_gen_expr(y, &self.no_gen(x, &rest));
        // :(int_{-D}^0 [x_l y] dl) rest:
        let p = self.base(x, y);
        let mut corr = VAExpr::zero();
        for (n, pn) in p.terms() {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let c = ScalarFn::from_frac(sign, n as i64 + 1);
            corr.add_scaled(&self.apply_d_pow(pn, n + 1), &c);
        }
        out.add_assign(&self.normal_order_expr(&corr, &VAExpr::word(rest)));
        self.nogen_memo.insert(key, out.clone());
        out
    }

    pub fn no_gen_expr(&self, x: DGen, e: &VAExpr) -> VAExpr {
        let mut out = VAExpr::zero();
        for (w, c) in e.terms() {
            out.add_scaled(&self.no_gen(x, w), c);
        }
        out
    }

    /// `:A B:` for normal-form words.
    pub fn normal_order_words(&self, a: &Word, b: &Word) -> VAExpr {
        if a.is_vacuum() {
            return VAExpr::word(b.clone());
        }
        if b.is_vacuum() {
            return VAExpr::word(a.clone());
        }
        if a.len() == 1 {
            return self.no_gen(a.0[0], b);
        }
        let key = (a.clone(), b.clone());
        if let Some(r) = self.nord_memo.get(&key) {
            return r.clone();
        }
        let (x, rest) = a.split_first().unwrap();
        let mut out = self.no_gen_expr(x, &self.normal_order_words(&rest, b));
        // quasi-associativity corrections
        let p = self.bracket_words(&rest, b);
        for (n, pn) in p.terms() {
            let c = ScalarFn::from_frac(1, n as i64 + 1);
            out.add_scaled(&self.no_gen_expr(x.derive(n + 1), pn), &c);
        }
        let q = self.bracket_words(&Word::single(x), b);
        for (n, qn) in q.terms() {
            let c = ScalarFn::from_frac(1, n as i64 + 1);
            let dr = self.apply_d_pow(&VAExpr::word(rest.clone()), n + 1);
            out.add_scaled(&self.normal_order_expr(&dr, qn), &c);
        }
        self.nord_memo.insert(key, out.clone());
        out
    }

    /// `:A B:` extended bilinearly.
    pub fn normal_order_expr(&self, a: &VAExpr, b: &VAExpr) -> VAExpr {
        let mut out = VAExpr::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                out.add_scaled(&self.normal_order_words(wa, wb), &(ca * cb));
            }
        }
        out
    }

    /// Alias of [`Engine::normal_order_expr`].
    pub fn normal_order(&self, a: &VAExpr, b: &VAExpr) -> VAExpr {
        self.normal_order_expr(a, b)
    }

    // ---------------------------------------------------------------- brackets

    /// `[D^j a _l D^k b] = (-l)^j (l + D)^k [a_l b]`.
    fn base(&self, x: DGen, y: DGen) -> LambdaPoly {
        let t = self.table(x.gen, y.gen);
        if x.d == 0 && y.d == 0 {
            return t;
        }
        let mut out = LambdaPoly::zero();
        let sign = ScalarFn::from_int(if x.d % 2 == 0 { 1 } else { -1 });
        for (n, tn) in t.terms() {
            let mut di = tn.clone();
            for i in 0..=y.d {
                let c = &binom(y.d, i) * &sign;
                out.add_at_scaled(n + x.d + y.d - i, &di, &c);
                if i < y.d {
                    di = self.apply_d(&di);
                }
            }
        }
        out
    }

    pub fn bracket_words(&self, a: &Word, b: &Word) -> LambdaPoly {
        if a.is_vacuum() || b.is_vacuum() {
            return LambdaPoly::zero();
        }
        if a.len() == 1 && b.len() == 1 {
            return self.base(a.0[0], b.0[0]);
        }
        let key = (a.clone(), b.clone());
        if let Some(r) = self.bracket_memo.get(&key) {
            return r.clone();
        }
        let out = if a.len() == 1 {
            self.left_wick(a, b)
        } else {
            self.right_wick(a, b)
        };
        self.bracket_memo.insert(key, out.clone());
        out
    }

    /// `[a_l :y Y:] = :[a_l y] Y: + :y [a_l Y]: + int_0^l [[a_l y]_m Y] dm`.
    fn left_wick(&self, a: &Word, b: &Word) -> LambdaPoly {
        let (y, rest) = b.split_first().unwrap();
        let rest_e = VAExpr::word(rest.clone());
        let mut out = LambdaPoly::zero();
        let p = self.bracket_words(a, &Word::single(y));
        for (n, pn) in p.terms() {
            out.add_at(n, &self.normal_order_expr(pn, &rest_e));
            let r = self.bracket_expr(pn, &rest_e);
            for (m, rm) in r.terms() {
                out.add_at_scaled(n + m + 1, rm, &ScalarFn::from_frac(1, m as i64 + 1));
            }
        }
        let q = self.bracket_words(a, &rest);
        for (n, qn) in q.terms() {
            out.add_at(n, &self.no_gen_expr(y, qn));
        }
        out
    }

    /// `[:x X:_l Y] = :(e^{D d_l} x)[X_l Y]: + :(e^{D d_l} X)[x_l Y]:
    ///  + int_0^l [X_m [x_{l-m} Y]] dm`.
    fn right_wick(&self, a: &Word, b: &Word) -> LambdaPoly {
        let (x, rest) = a.split_first().unwrap();
        let rest_e = VAExpr::word(rest.clone());
        let mut out = LambdaPoly::zero();
        let p = self.bracket_words(&rest, b);
        for (n, pn) in p.terms() {
            for k in 0..=n {
                out.add_at_scaled(n - k, &self.no_gen_expr(x.derive(k), pn), &binom(n, k));
            }
        }
        let q = self.bracket_words(&Word::single(x), b);
        let mut drest = rest_e.clone();
        let qdeg = q.degree().unwrap_or(0);
        let mut drest_pows = Vec::with_capacity(qdeg as usize + 1);
        for _ in 0..=qdeg {
            drest_pows.push(drest.clone());
            drest = self.apply_d(&drest);
        }
        for (n, qn) in q.terms() {
            for k in 0..=n {
                out.add_at_scaled(n - k, &self.normal_order_expr(&drest_pows[k as usize], qn), &binom(n, k));
            }
            let c = self.bracket_expr(&rest_e, qn);
            for (m, cm) in c.terms() {
                let beta = &(&factorial(n) * &factorial(m)) / &factorial(n + m + 1);
                out.add_at_scaled(n + m + 1, cm, &beta);
            }
        }
        out
    }

    /// The lambda-bracket, extended bilinearly.
    pub fn bracket_expr(&self, a: &VAExpr, b: &VAExpr) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                out.add_scaled(&self.bracket_words(wa, wb), &(ca * cb));
            }
        }
        out
    }

    /// Alias of [`Engine::bracket_expr`].
    pub fn bracket(&self, a: &VAExpr, b: &VAExpr) -> LambdaPoly {
        self.bracket_expr(a, b)
    }

    /// `[a_l [b_m c]] - [b_m [a_l c]] - [[a_l b]_{l+m} c]` in normal form.
    pub fn jacobi_residual_expr(&self, a: &VAExpr, b: &VAExpr, c: &VAExpr) -> Lambda2Poly {
        let mut out = Lambda2Poly::zero();
        let one = ScalarFn::one();
        let minus = ScalarFn::from_int(-1);
        for (m, bc) in self.bracket_expr(b, c).terms() {
            for (n, t) in self.bracket_expr(a, bc).terms() {
                out.add_at_scaled(n, m, t, &one);
            }
        }
        for (n, ac) in self.bracket_expr(a, c).terms() {
            for (m, t) in self.bracket_expr(b, ac).terms() {
                out.add_at_scaled(n, m, t, &minus);
            }
        }
        for (n, ab) in self.bracket_expr(a, b).terms() {
            for (k, t) in self.bracket_expr(ab, c).terms() {
                // (l + m)^k
                for i in 0..=k {
                    out.add_at_scaled(n + i, k - i, t, &(&binom(k, i) * &minus));
                }
            }
        }
        out
    }

    pub fn jacobi_residual(&self, a: u16, b: u16, c: u16) -> Lambda2Poly {
        self.jacobi_residual_expr(&VAExpr::gen(a), &VAExpr::gen(b), &VAExpr::gen(c))
    }

    /// `Lambda = :LM: - (3/10) D^2 M` and `Theta = :MM:`.
    pub fn composite_fields(&self) -> Result<(VAExpr, VAExpr), ConformalError> {
        let l = VAExpr::gen(self.gen("L")?);
        let m = VAExpr::gen(self.gen("M")?);
        let lam = self.normal_order(&l, &m).sub(&self.apply_d_pow(&m, 2).scale(&ScalarFn::from_frac(3, 10)));
        let theta = self.normal_order(&m, &m);
        Ok((lam, theta))
    }
}

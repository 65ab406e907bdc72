//! Words, vertex-algebra elements and polynomials in the bracket variables.

use std::collections::BTreeMap;

use crate::scalars::ScalarFn;

/// `D^d` applied to the generator with index `gen`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DGen {
    pub gen: u16,
    pub d: u32,
}

impl DGen {
    pub fn new(gen: u16, d: u32) -> DGen {
        DGen { gen, d }
    }

    pub fn derive(self, k: u32) -> DGen {
        DGen { gen: self.gen, d: self.d + k }
    }
}

/// Right-nested normally ordered product `:a1 :a2 ( ... an):` of factors.
/// The empty word is the vacuum.
///
/// Normal form: factors non-increasing in `(gen, d)`, so the largest
/// generator stands leftmost and, within a generator, higher `d` first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(pub Vec<DGen>);

impl Word {
    pub fn vacuum() -> Word {
        Word(Vec::new())
    }

    pub fn gen(g: u16) -> Word {
        Word(vec![DGen::new(g, 0)])
    }

    pub fn single(x: DGen) -> Word {
        Word(vec![x])
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[DGen] {
        &self.0
    }

    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// First factor and the remaining word.
    pub fn split_first(&self) -> Option<(DGen, Word)> {
        let (x, rest) = self.0.split_first()?;
        Some((*x, Word(rest.to_vec())))
    }

    /// Total D-order.
    pub fn d_order(&self) -> u32 {
        self.0.iter().map(|x| x.d).sum()
    }

    pub fn prepend(&self, x: DGen) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(x);
        v.extend_from_slice(&self.0);
        Word(v)
    }
}

/// Finite linear combination of words.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct VAExpr {
    terms: BTreeMap<Word, ScalarFn>,
}

impl VAExpr {
    pub fn zero() -> VAExpr {
        VAExpr::default()
    }

    pub fn vacuum() -> VAExpr {
        VAExpr::word(Word::vacuum())
    }

    pub fn scalar(c: ScalarFn) -> VAExpr {
        VAExpr::term(Word::vacuum(), c)
    }

    pub fn word(w: Word) -> VAExpr {
        VAExpr::term(w, ScalarFn::one())
    }

    pub fn gen(g: u16) -> VAExpr {
        VAExpr::word(Word::gen(g))
    }

    pub fn term(w: Word, c: ScalarFn) -> VAExpr {
        let mut e = VAExpr::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ScalarFn)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> ScalarFn {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Word, c: ScalarFn) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, o: &VAExpr, c: &ScalarFn) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &o.terms {
            self.add_term(w.clone(), if c.is_one() { a.clone() } else { a * c });
        }
    }

    pub fn add_assign(&mut self, o: &VAExpr) {
        self.add_scaled(o, &ScalarFn::one());
    }

    pub fn add(&self, o: &VAExpr) -> VAExpr {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &VAExpr) -> VAExpr {
        let mut r = self.clone();
        r.add_scaled(o, &ScalarFn::from_int(-1));
        r
    }

    pub fn scale(&self, c: &ScalarFn) -> VAExpr {
        let mut r = VAExpr::zero();
        r.add_scaled(self, c);
        r
    }

    pub fn neg(&self) -> VAExpr {
        self.scale(&ScalarFn::from_int(-1))
    }

    /// Applies `f` to every coefficient; zero results are dropped.
    pub fn map_coeffs(&self, f: impl Fn(&ScalarFn) -> ScalarFn) -> VAExpr {
        let mut r = VAExpr::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), f(c));
        }
        r
    }

    /// The coefficient of the vacuum.
    pub fn scalar_part(&self) -> ScalarFn {
        self.coeff(&Word::vacuum())
    }
}

/// `sum_n lambda^n A_n`, dense in the exponent.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct LambdaPoly {
    coeffs: Vec<VAExpr>,
}

impl LambdaPoly {
    pub fn zero() -> LambdaPoly {
        LambdaPoly::default()
    }

    pub fn constant(a: VAExpr) -> LambdaPoly {
        LambdaPoly::monomial(0, a)
    }

    pub fn monomial(n: u32, a: VAExpr) -> LambdaPoly {
        let mut p = LambdaPoly::zero();
        p.add_at(n, &a);
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in lambda; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() as u32 - 1)
        }
    }

    pub fn coeff(&self, n: u32) -> VAExpr {
        self.coeffs.get(n as usize).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients with their exponents.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &VAExpr)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(n, c)| (n as u32, c))
    }

    pub fn add_at_scaled(&mut self, n: u32, a: &VAExpr, c: &ScalarFn) {
        if a.is_zero() || c.is_zero() {
            return;
        }
        let n = n as usize;
        if self.coeffs.len() <= n {
            self.coeffs.resize(n + 1, VAExpr::zero());
        }
        self.coeffs[n].add_scaled(a, c);
        self.trim();
    }

    pub fn add_at(&mut self, n: u32, a: &VAExpr) {
        self.add_at_scaled(n, a, &ScalarFn::one());
    }

    pub fn add_scaled(&mut self, o: &LambdaPoly, c: &ScalarFn) {
        for (n, a) in o.terms() {
            self.add_at_scaled(n, a, c);
        }
    }

    pub fn add(&self, o: &LambdaPoly) -> LambdaPoly {
        let mut r = self.clone();
        r.add_scaled(o, &ScalarFn::one());
        r
    }

    pub fn sub(&self, o: &LambdaPoly) -> LambdaPoly {
        let mut r = self.clone();
        r.add_scaled(o, &ScalarFn::from_int(-1));
        r
    }

    pub fn scale(&self, c: &ScalarFn) -> LambdaPoly {
        let mut r = LambdaPoly::zero();
        r.add_scaled(self, c);
        r
    }

    /// Multiplies by `lambda^k`.
    pub fn shift(&self, k: u32) -> LambdaPoly {
        let mut r = LambdaPoly::zero();
        for (n, a) in self.terms() {
            r.add_at(n + k, a);
        }
        r
    }

    pub fn map(&self, f: impl Fn(&VAExpr) -> VAExpr) -> LambdaPoly {
        let mut r = LambdaPoly::zero();
        for (n, a) in self.terms() {
            r.add_at(n, &f(a));
        }
        r
    }
}

/// `sum lambda^n mu^m A_{n,m}`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Lambda2Poly {
    coeffs: BTreeMap<(u32, u32), VAExpr>,
}

impl Lambda2Poly {
    pub fn zero() -> Lambda2Poly {
        Lambda2Poly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: u32, m: u32) -> VAExpr {
        self.coeffs.get(&(n, m)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &VAExpr)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn add_at_scaled(&mut self, n: u32, m: u32, a: &VAExpr, c: &ScalarFn) {
        if a.is_zero() || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((n, m)).or_default();
        e.add_scaled(a, c);
        if e.is_zero() {
            self.coeffs.remove(&(n, m));
        }
    }

    /// All words occurring in any coefficient.
    pub fn words(&self) -> Vec<Word> {
        let mut ws: Vec<Word> = self.coeffs.values().flat_map(|e| e.terms().map(|(w, _)| w.clone())).collect();
        ws.sort();
        ws.dedup();
        ws
    }
}

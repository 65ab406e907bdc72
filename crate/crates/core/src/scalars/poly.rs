//! Sparse multivariate polynomials over the Gaussian rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::gauss::GaussRat;
use super::symbol::Symbol;

/// Exponent vector indexed by symbol position, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(pub(crate) Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol, e: u32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        let mut v = vec![0; s.index() + 1];
        v[s.index()] = e;
        Monomial(v)
    }

    fn trim(mut v: Vec<u32>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, s: Symbol) -> u32 {
        self.0.get(s.index()).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= o.0.len() { (self, o) } else { (o, self) };
        let mut v = long.0.clone();
        for (i, e) in short.0.iter().enumerate() {
            v[i] += e;
        }
        Monomial(v)
    }

    /// `self / o` if `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        if o.0.len() > self.0.len() {
            return None;
        }
        let mut v = self.0.clone();
        for (i, e) in o.0.iter().enumerate() {
            if v[i] < *e {
                return None;
            }
            v[i] -= e;
        }
        Some(Monomial::trim(v))
    }

    /// Componentwise minimum.
    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let v = self.0.iter().zip(o.0.iter()).map(|(a, b)| *a.min(b)).collect();
        Monomial::trim(v)
    }

    pub fn without(&self, s: Symbol) -> Monomial {
        let mut v = self.0.clone();
        if s.index() < v.len() {
            v[s.index()] = 0;
        }
        Monomial::trim(v)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (Symbol, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| (Symbol(i as u16), *e))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the earliest symbol wins.
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| {
            let n = self.0.len().max(o.0.len());
            for i in 0..n {
                let a = self.0.get(i).copied().unwrap_or(0);
                let b = o.0.get(i).copied().unwrap_or(0);
                match a.cmp(&b) {
                    Ordering::Equal => continue,
                    c => return c,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Polynomial as a map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct MultiPoly {
    pub(crate) terms: BTreeMap<Monomial, GaussRat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        MultiPoly::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn var(s: Symbol) -> Self {
        MultiPoly::term(Monomial::var(s, 1), GaussRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.is_constant() && self.terms.values().next().unwrap().is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    /// Constant coefficient (zero if absent).
    pub fn constant_term(&self) -> GaussRat {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<(&Monomial, &GaussRat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.terms.keys().map(|m| m.exp(s)).max().unwrap_or(0)
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.terms.keys().any(|m| m.exp(s) > 0)
    }

    /// Symbols that occur with positive exponent.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut n = 0;
        for m in self.terms.keys() {
            n = n.max(m.0.len());
        }
        (0..n)
            .map(|i| Symbol(i as u16))
            .filter(|s| self.contains(*s))
            .collect()
    }

    /// Monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    fn add_term(&mut self, m: Monomial, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn scale(&self, c: &GaussRat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.clone())).collect(),
        }
    }

    /// Divides every monomial by `mono`; panics if one is not divisible.
    pub fn div_monomial(&self, mono: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.div(mono).expect("monomial does not divide"), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = d.leading()?;
        if d.is_monomial() {
            let inv = lc.inv()?;
            let mut out = BTreeMap::new();
            for (m, a) in &self.terms {
                out.insert(m.div(lm)?, a * &inv);
            }
            return Some(MultiPoly { terms: out });
        }
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(lm)?;
            let qc = rc * &lc_inv;
            for (m, a) in &d.terms {
                rem.add_term(m.mul(&qm), -(a * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficients with respect to `s`: `self = sum_k coeff[k] * s^k`.
    pub fn coefficients_in(&self, s: Symbol) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, a) in &self.terms {
            out.entry(m.exp(s))
                .or_default()
                .add_term(m.without(s), a.clone());
        }
        out
    }

    pub fn from_coefficients_in(s: Symbol, coeffs: &BTreeMap<u32, MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (k, c) in coeffs {
            let mk = Monomial::var(s, *k);
            for (m, a) in &c.terms {
                out.add_term(m.mul(&mk), a.clone());
            }
        }
        out
    }

    /// Replaces symbols by constants; unbound symbols stay.
    pub fn eval_partial(&self, value: &dyn Fn(Symbol) -> Option<GaussRat>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, a) in &self.terms {
            let mut coef = a.clone();
            let mut rest = m.clone();
            for (s, e) in m.symbols() {
                if let Some(v) = value(s) {
                    coef = &coef * &v.pow(e);
                    rest = rest.without(s);
                }
            }
            out.add_term(rest, coef);
        }
        out
    }
}

impl<'a, 'b> Add<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &'b MultiPoly) -> MultiPoly {
        let (mut big, small) = if self.len() >= o.len() { (self.clone(), o) } else { (o.clone(), self) };
        for (m, a) in &small.terms {
            big.add_term(m.clone(), a.clone());
        }
        big
    }
}

impl<'a, 'b> Sub<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &'b MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, a) in &o.terms {
            out.add_term(m.clone(), -a);
        }
        out
    }
}

impl<'a, 'b> Mul<&'b MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &'b MultiPoly) -> MultiPoly {
        if self.is_zero() || o.is_zero() {
            return MultiPoly::zero();
        }
        let mut out = MultiPoly::zero();
        for (m1, a1) in &self.terms {
            for (m2, a2) in &o.terms {
                out.add_term(m1.mul(m2), a1 * a2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), -a)).collect(),
        }
    }
}

//! Canonical rational functions over Q(i).

use std::collections::HashMap;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::field::Field;
use super::gauss::GaussRat;
use super::gcd::gcd;
use super::poly::MultiPoly;
use super::symbol::Symbol;
use super::ScalarError;

/// `num / den` with `gcd(num, den) = 1` and `den` monic in graded-lex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarFn {
    num: MultiPoly,
    den: MultiPoly,
}

impl Default for ScalarFn {
    fn default() -> Self {
        ScalarFn::zero()
    }
}

impl ScalarFn {
    /// Builds and canonicalises `num / den`.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<ScalarFn, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: MultiPoly, den: MultiPoly) -> ScalarFn {
        if num.is_zero() {
            return ScalarFn::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        let lc = den.leading().unwrap().1.clone();
        if lc.is_one() {
            ScalarFn { num, den }
        } else {
            let s = lc.inv().unwrap();
            ScalarFn { num: num.scale(&s), den: den.scale(&s) }
        }
    }

    pub fn zero() -> ScalarFn {
        ScalarFn { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> ScalarFn {
        ScalarFn::from_int(1)
    }

    pub fn i() -> ScalarFn {
        ScalarFn::constant(GaussRat::i())
    }

    pub fn constant(c: GaussRat) -> ScalarFn {
        ScalarFn { num: MultiPoly::constant(c), den: MultiPoly::one() }
    }

    pub fn from_int(n: i64) -> ScalarFn {
        ScalarFn::constant(GaussRat::from_int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> ScalarFn {
        ScalarFn::constant(GaussRat::from_frac(n, d))
    }

    pub fn var(s: Symbol) -> ScalarFn {
        ScalarFn::from_poly(MultiPoly::var(s))
    }

    pub fn from_poly(p: MultiPoly) -> ScalarFn {
        ScalarFn { num: p, den: MultiPoly::one() }
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_constant() {
            Some(self.num.constant_term())
        } else {
            None
        }
    }

    /// Symbols occurring in numerator or denominator, in registry order.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut s = self.num.symbols();
        s.extend(self.den.symbols());
        s.sort();
        s.dedup();
        s
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.num.contains(s) || self.den.contains(s)
    }

    pub fn scale(&self, c: &GaussRat) -> ScalarFn {
        if c.is_zero() {
            return ScalarFn::zero();
        }
        ScalarFn { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<ScalarFn, ScalarError> {
        ScalarFn::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &ScalarFn) -> Result<ScalarFn, ScalarError> {
        if o.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<ScalarFn, ScalarError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = e as u32;
        Ok(ScalarFn { num: self.num.pow(e), den: self.den.pow(e) })
    }

    /// Replaces bound symbols by Gaussian rationals.
    pub fn substitute(&self, bindings: &HashMap<Symbol, GaussRat>) -> Result<ScalarFn, ScalarError> {
        if !self.symbols().iter().any(|s| bindings.contains_key(s)) {
            return Ok(self.clone());
        }
        let f = |s: Symbol| bindings.get(&s).cloned();
        let num = self.num.eval_partial(&f);
        let den = self.den.eval_partial(&f);
        if den.is_zero() {
            return Err(ScalarError::PoleHit);
        }
        Ok(Self::canonical(num, den))
    }

    /// Replaces bound symbols by rational functions.
    pub fn substitute_fn(&self, bindings: &HashMap<Symbol, ScalarFn>) -> Result<ScalarFn, ScalarError> {
        if !self.symbols().iter().any(|s| bindings.contains_key(s)) {
            return Ok(self.clone());
        }
        self.eval_in(&|s| bindings.get(&s).cloned().unwrap_or_else(|| ScalarFn::var(s)))
    }

    /// Evaluates in an arbitrary field, every symbol mapped by `value`.
    pub fn eval_in<F: Field>(&self, value: &dyn Fn(Symbol) -> F) -> Result<F, ScalarError> {
        let mut cache: HashMap<Symbol, Vec<F>> = HashMap::new();
        let num = eval_poly(&self.num, value, &mut cache);
        let den = eval_poly(&self.den, value, &mut cache);
        if den.is_zero() {
            return Err(ScalarError::PoleHit);
        }
        Ok(num.mul(&den.inv().unwrap()))
    }
}

fn eval_poly<F: Field>(
    p: &MultiPoly,
    value: &dyn Fn(Symbol) -> F,
    cache: &mut HashMap<Symbol, Vec<F>>,
) -> F {
    let mut acc = F::zero();
    for (m, c) in p.terms() {
        let mut t = F::from_scalar(&ScalarFn::constant(c.clone()));
        for (s, e) in m.symbols() {
            let powers = cache.entry(s).or_insert_with(|| vec![F::one(), value(s)]);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().mul(&powers[1]);
                powers.push(next);
            }
            t = t.mul(&powers[e as usize]);
        }
        acc = acc.add(&t);
    }
    acc
}

impl From<i64> for ScalarFn {
    fn from(n: i64) -> Self {
        ScalarFn::from_int(n)
    }
}

impl From<GaussRat> for ScalarFn {
    fn from(c: GaussRat) -> Self {
        ScalarFn::constant(c)
    }
}

impl From<Symbol> for ScalarFn {
    fn from(s: Symbol) -> Self {
        ScalarFn::var(s)
    }
}

fn add_impl(a: &ScalarFn, b: &ScalarFn, negate_b: bool) -> ScalarFn {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let bn = if negate_b { -&b.num } else { b.num.clone() };
    if a.den == b.den {
        let num = &a.num + &bn;
        if a.den.is_one() {
            return ScalarFn { num, den: a.den.clone() };
        }
        return ScalarFn::canonical(num, a.den.clone());
    }
    if a.den.is_one() {
        return ScalarFn { num: &(&a.num * &b.den) + &bn, den: b.den.clone() };
    }
    if b.den.is_one() {
        return ScalarFn { num: &a.num + &(&bn * &a.den), den: a.den.clone() };
    }
    let g = gcd(&a.den, &b.den);
    let ad = a.den.div_exact(&g).unwrap();
    let bd = b.den.div_exact(&g).unwrap();
    let num = &(&a.num * &bd) + &(&bn * &ad);
    let den = &a.den * &bd;
    ScalarFn::canonical(num, den)
}

fn mul_impl(a: &ScalarFn, b: &ScalarFn) -> ScalarFn {
    if a.is_zero() || b.is_zero() {
        return ScalarFn::zero();
    }
    if a.is_constant() {
        return b.scale(&a.num.constant_term());
    }
    if b.is_constant() {
        return a.scale(&b.num.constant_term());
    }
    if a.den.is_one() && b.den.is_one() {
        return ScalarFn::from_poly(&a.num * &b.num);
    }
    // cross-cancel so the product needs no further gcd
    let g1 = gcd(&a.num, &b.den);
    let g2 = gcd(&b.num, &a.den);
    let an = a.num.div_exact(&g1).unwrap();
    let bd = b.den.div_exact(&g1).unwrap();
    let bn = b.num.div_exact(&g2).unwrap();
    let ad = a.den.div_exact(&g2).unwrap();
    let num = &an * &bn;
    let den = &ad * &bd;
    let lc = den.leading().unwrap().1.clone();
    if lc.is_one() {
        ScalarFn { num, den }
    } else {
        let s = lc.inv().unwrap();
        ScalarFn { num: num.scale(&s), den: den.scale(&s) }
    }
}

impl<'a, 'b> Add<&'b ScalarFn> for &'a ScalarFn {
    type Output = ScalarFn;
    fn add(self, o: &'b ScalarFn) -> ScalarFn {
        add_impl(self, o, false)
    }
}

impl<'a, 'b> Sub<&'b ScalarFn> for &'a ScalarFn {
    type Output = ScalarFn;
    fn sub(self, o: &'b ScalarFn) -> ScalarFn {
        add_impl(self, o, true)
    }
}

impl<'a, 'b> Mul<&'b ScalarFn> for &'a ScalarFn {
    type Output = ScalarFn;
    fn mul(self, o: &'b ScalarFn) -> ScalarFn {
        mul_impl(self, o)
    }
}

impl<'a, 'b> Div<&'b ScalarFn> for &'a ScalarFn {
    type Output = ScalarFn;
    /// Panics on division by zero; see [`ScalarFn::checked_div`].
    fn div(self, o: &'b ScalarFn) -> ScalarFn {
        self.checked_div(o).expect("ScalarFn division by zero")
    }
}

impl Neg for &ScalarFn {
    type Output = ScalarFn;
    fn neg(self) -> ScalarFn {
        ScalarFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for ScalarFn {
    type Output = ScalarFn;
    fn neg(self) -> ScalarFn {
        -&self
    }
}

macro_rules! owned_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<ScalarFn> for ScalarFn {
            type Output = ScalarFn;
            fn $method(self, o: ScalarFn) -> ScalarFn {
                <&ScalarFn as $imp<&ScalarFn>>::$method(&self, &o)
            }
        }
        impl<'a> $imp<&'a ScalarFn> for ScalarFn {
            type Output = ScalarFn;
            fn $method(self, o: &'a ScalarFn) -> ScalarFn {
                <&ScalarFn as $imp<&ScalarFn>>::$method(&self, o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl std::iter::Sum for ScalarFn {
    fn sum<I: Iterator<Item = ScalarFn>>(iter: I) -> ScalarFn {
        iter.fold(ScalarFn::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for ScalarFn {
    fn product<I: Iterator<Item = ScalarFn>>(iter: I) -> ScalarFn {
        iter.fold(ScalarFn::one(), |a, b| &a * &b)
    }
}

impl Field for ScalarFn {
    fn zero() -> Self {
        ScalarFn::zero()
    }
    fn one() -> Self {
        ScalarFn::one()
    }
    fn is_zero(&self) -> bool {
        ScalarFn::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        ScalarFn::inv(self).ok()
    }
    fn from_scalar(c: &ScalarFn) -> Self {
        c.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::symbol::sym;

    fn v(s: Symbol) -> ScalarFn {
        ScalarFn::var(s)
    }

    #[test]
    fn rational_sum() {
        let x = &ScalarFn::from_frac(1, 2) + &ScalarFn::from_frac(1, 3);
        assert_eq!(x, ScalarFn::from_frac(5, 6));
    }

    #[test]
    fn i_times_i() {
        assert_eq!(&ScalarFn::i() * &ScalarFn::i(), ScalarFn::from_int(-1));
    }

    #[test]
    fn division_canonical() {
        let x = ScalarFn::from_int(16).checked_div(&(&ScalarFn::from_int(5) * &v(sym::CM))).unwrap();
        let y = &(&ScalarFn::from_int(32) / &(&ScalarFn::from_int(5) * &v(sym::CM))) * &ScalarFn::from_frac(1, 2);
        assert_eq!(x, y);
        assert!(x.den().leading().unwrap().1.is_one());
        assert_eq!(ScalarFn::one().checked_div(&ScalarFn::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn cancellation_is_zero() {
        let cm = v(sym::CM);
        let x = &(&(&cm * &cm) - &(&cm * &cm)) / &cm;
        assert!(x.is_zero());
        let hm = v(sym::HM);
        let hv = v(sym::HV);
        let y = &(&(&ScalarFn::from_int(64) * &hm.pow(3).unwrap()) / &(&ScalarFn::from_int(45) * &cm))
            - &(&ScalarFn::from_int(9) * &(&hv * &hv));
        assert!(!y.is_zero());
    }

    #[test]
    fn substitution() {
        let cm = v(sym::CM);
        let x = &cm / &ScalarFn::from_int(24);
        let b: HashMap<_, _> = [(sym::CM, GaussRat::from_int(24))].into();
        assert!(x.substitute(&b).unwrap().is_one());

        let lam = v(sym::LAM);
        let mu = v(sym::MU);
        let cl = &ScalarFn::from_int(4) - &(&ScalarFn::from_int(24) * &(&(&lam * &lam) + &(&mu * &mu)));
        let b: HashMap<_, _> = [(sym::LAM, GaussRat::zero()), (sym::MU, GaussRat::zero())].into();
        assert_eq!(cl.substitute(&b).unwrap(), ScalarFn::from_int(4));

        let inv = cm.inv().unwrap();
        let b: HashMap<_, _> = [(sym::CM, GaussRat::zero())].into();
        assert_eq!(inv.substitute(&b), Err(ScalarError::PoleHit));
    }

    #[test]
    fn substitute_by_functions() {
        let cl = v(sym::CL);
        let lam = v(sym::LAM);
        let b: HashMap<_, _> = [(sym::CL, &lam * &lam)].into();
        let x = (&cl + &ScalarFn::one()).inv().unwrap();
        let y = x.substitute_fn(&b).unwrap();
        assert_eq!(y, (&(&lam * &lam) + &ScalarFn::one()).inv().unwrap());
    }

    #[test]
    fn equal_paths_equal_forms() {
        let a = v(sym::HL);
        let b = v(sym::HM);
        let lhs = &(&a / &b) + &(&b / &a);
        let rhs = &(&(&a * &a) + &(&b * &b)) / &(&a * &b);
        assert_eq!(lhs, rhs);
        let r = &(&a - &b) / &(&(&a * &a) - &(&b * &b));
        assert_eq!(r, (&a + &b).inv().unwrap());
    }
}

//! The field interface used by generic linear algebra, and quadratic extensions.

use std::fmt;
use std::marker::PhantomData;

use super::gauss::GaussRat;
use super::ratfn::ScalarFn;

pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// Embeds a rational function.
    fn from_scalar(c: &ScalarFn) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_scalar(&ScalarFn::from_int(n))
    }
}

impl Field for GaussRat {
    fn zero() -> Self {
        GaussRat::zero()
    }
    fn one() -> Self {
        GaussRat::one()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
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
        GaussRat::inv(self)
    }
    /// Panics unless `c` is constant.
    fn from_scalar(c: &ScalarFn) -> Self {
        c.as_constant().unwrap_or_else(|| panic!("{} is not a constant", c))
    }
    fn from_int(n: i64) -> Self {
        GaussRat::from_int(n)
    }
}

/// Fixes the square class `d` of a quadratic extension `F(t)`, `t^2 = d`.
pub trait Radicand: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn d() -> ScalarFn;
    fn name() -> &'static str;
}

/// `t = i / sqrt(10)`, so `t^2 = -1/10`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ITenth;

impl Radicand for ITenth {
    fn d() -> ScalarFn {
        ScalarFn::from_frac(-1, 10)
    }
    fn name() -> &'static str {
        "t"
    }
}

/// `t = sqrt(10)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Sqrt10;

impl Radicand for Sqrt10 {
    fn d() -> ScalarFn {
        ScalarFn::from_int(10)
    }
    fn name() -> &'static str {
        "s10"
    }
}

/// `x + y t` over [`ScalarFn`].
#[derive(Clone, PartialEq, Eq)]
pub struct QuadExt<R: Radicand> {
    pub x: ScalarFn,
    pub y: ScalarFn,
    _r: PhantomData<R>,
}

impl<R: Radicand> QuadExt<R> {
    pub fn new(x: ScalarFn, y: ScalarFn) -> Self {
        QuadExt { x, y, _r: PhantomData }
    }

    /// The generator `t`.
    pub fn t() -> Self {
        QuadExt::new(ScalarFn::zero(), ScalarFn::one())
    }

    pub fn conj(&self) -> Self {
        QuadExt::new(self.x.clone(), -&self.y)
    }

    /// `x^2 - d y^2`.
    pub fn norm(&self) -> ScalarFn {
        &(&self.x * &self.x) - &(&R::d() * &(&self.y * &self.y))
    }
}

impl<R: Radicand> fmt::Debug for QuadExt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})*{}", self.x, self.y, R::name())
    }
}

impl<R: Radicand> fmt::Display for QuadExt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<R: Radicand> Field for QuadExt<R> {
    fn zero() -> Self {
        QuadExt::new(ScalarFn::zero(), ScalarFn::zero())
    }
    fn one() -> Self {
        QuadExt::new(ScalarFn::one(), ScalarFn::zero())
    }
    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        QuadExt::new(&self.x + &o.x, &self.y + &o.y)
    }
    fn sub(&self, o: &Self) -> Self {
        QuadExt::new(&self.x - &o.x, &self.y - &o.y)
    }
    fn mul(&self, o: &Self) -> Self {
        let xx = &self.x * &o.x;
        let yy = &self.y * &o.y;
        let x = &xx + &(&R::d() * &yy);
        let y = &(&self.x * &o.y) + &(&self.y * &o.x);
        QuadExt::new(x, y)
    }
    fn neg(&self) -> Self {
        QuadExt::new(-&self.x, -&self.y)
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // the norm of a nonzero element vanishes only if d is a square
        let n = self.norm().inv().ok()?;
        Some(QuadExt::new(&self.x * &n, -&(&self.y * &n)))
    }
    fn from_scalar(c: &ScalarFn) -> Self {
        QuadExt::new(c.clone(), ScalarFn::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = QuadExt<ITenth>;

    #[test]
    fn t_squared() {
        let t = Q::t();
        assert_eq!(t.mul(&t), Q::from_scalar(&ScalarFn::from_frac(-1, 10)));
    }

    #[test]
    fn inverse_roundtrip() {
        let z = Q::new(ScalarFn::from_int(3), ScalarFn::from_int(2));
        assert_eq!(z.mul(&z.inv().unwrap()), Q::one());
    }
}

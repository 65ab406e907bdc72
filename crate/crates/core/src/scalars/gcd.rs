//! Multivariate gcd over Q(i) by content / primitive-part recursion.
//!
//! Results are monic with respect to the graded-lex leading term, which fixes
//! the unit ambiguity of a gcd over a field of coefficients.

use std::collections::BTreeMap;

use super::gauss::GaussRat;
use super::poly::{Monomial, MultiPoly};
use super::symbol::Symbol;

/// Divides by the leading coefficient.
pub fn monic(p: &MultiPoly) -> MultiPoly {
    match p.leading() {
        None => MultiPoly::zero(),
        Some((_, c)) if c.is_one() => p.clone(),
        Some((_, c)) => p.scale(&c.inv().unwrap()),
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    let a1 = if ma.is_one() { a.clone() } else { a.div_monomial(&ma) };
    let b1 = if mb.is_one() { b.clone() } else { b.div_monomial(&mb) };
    let g = gcd_no_monomial(&a1, &b1);
    monic(&g.mul_monomial(&mg))
}

fn gcd_no_monomial(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    if a == b {
        return monic(a);
    }
    // cheap trial divisions catch the common "one divides the other" case
    if a.len() >= b.len() {
        if a.div_exact(b).is_some() {
            return monic(b);
        }
    } else if b.div_exact(a).is_some() {
        return monic(a);
    }

    let sa = a.symbols();
    let sb = b.symbols();
    if let Some(x) = sa.iter().find(|s| !sb.contains(s)) {
        return gcd(&content(a, *x), b);
    }
    if let Some(x) = sb.iter().find(|s| !sa.contains(s)) {
        return gcd(a, &content(b, *x));
    }

    // a variable absent from the gcd can be eliminated through contents
    for &x in &sa {
        if image_gcd_degree(a, b, x) == Some(0) {
            return gcd(&content(a, x), &content(b, x));
        }
    }

    // same symbol set; recurse on the one of lowest degree
    let x = *sa
        .iter()
        .min_by_key(|s| a.degree_in(**s).min(b.degree_in(**s)))
        .unwrap();
    let ca = content(a, x);
    let cb = content(b, x);
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(x) < q.degree_in(x) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = prem(&p, &q, x);
        if r.is_zero() {
            break;
        }
        if r.degree_in(x) == 0 {
            q = MultiPoly::one();
            break;
        }
        p = q;
        q = primitive_part(&r, x);
    }
    let g = primitive_part(&q, x);
    monic(&(&g * &c))
}

/// Degree in `x` of the gcd of univariate images of `a` and `b` at a point
/// where neither leading coefficient vanishes. This bounds the degree of the
/// true gcd in `x` from above.
fn image_gcd_degree(a: &MultiPoly, b: &MultiPoly, x: Symbol) -> Option<u32> {
    const POINTS: [i64; 12] = [3, -5, 7, 2, -11, 13, 4, -17, 19, 6, -23, 29];
    let da = a.degree_in(x);
    let db = b.degree_in(x);
    for attempt in 0..3 {
        let val = |s: Symbol| {
            if s == x {
                None
            } else {
                let k = (s.index() * 5 + attempt * 7) % POINTS.len();
                Some(GaussRat::from_int(POINTS[k] + attempt as i64))
            }
        };
        let ua = univariate(&a.eval_partial(&val), x);
        let ub = univariate(&b.eval_partial(&val), x);
        if ua.len() != da as usize + 1 || ub.len() != db as usize + 1 {
            continue;
        }
        return Some(univariate_gcd(ua, ub).len() as u32 - 1);
    }
    None
}

/// Dense coefficients (constant first); trailing zeros trimmed.
fn univariate(p: &MultiPoly, x: Symbol) -> Vec<GaussRat> {
    let mut v = vec![GaussRat::zero(); p.degree_in(x) as usize + 1];
    for (m, c) in p.terms() {
        v[m.exp(x) as usize] = c.clone();
    }
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    v
}

fn univariate_gcd(mut a: Vec<GaussRat>, mut b: Vec<GaussRat>) -> Vec<GaussRat> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !(b.len() == 1 && b[0].is_zero()) {
        let inv = b.last().unwrap().inv().unwrap();
        while a.len() >= b.len() && !(a.len() == 1 && a[0].is_zero()) {
            let f = a.last().unwrap() * &inv;
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[i + shift] = &a[i + shift] - &(c * &f);
            }
            a.pop();
            while a.len() > 1 && a.last().unwrap().is_zero() {
                a.pop();
            }
            if a.is_empty() {
                a.push(GaussRat::zero());
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `x`.
pub fn content(p: &MultiPoly, x: Symbol) -> MultiPoly {
    let coeffs = p.coefficients_in(x);
    let mut g = MultiPoly::zero();
    for c in coeffs.values() {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub fn primitive_part(p: &MultiPoly, x: Symbol) -> MultiPoly {
    if p.is_zero() {
        return MultiPoly::zero();
    }
    let c = content(p, x);
    monic(&p.div_exact(&c).expect("content divides"))
}

/// Pseudo-remainder of `a` by `b` in the variable `x`.
fn prem(a: &MultiPoly, b: &MultiPoly, x: Symbol) -> MultiPoly {
    let db = b.degree_in(x);
    let bc: BTreeMap<u32, MultiPoly> = b.coefficients_in(x);
    let lcb = bc.get(&db).cloned().unwrap_or_default();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(x) >= db {
        let dr = r.degree_in(x);
        let lcr = r.coefficients_in(x).remove(&dr).unwrap();
        let shift = Monomial::var(x, dr - db);
        r = &(&lcb * &r) - &(&lcr * &b.mul_monomial(&shift));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::symbol::sym;

    fn v(s: Symbol) -> MultiPoly {
        MultiPoly::var(s)
    }
    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(GaussRat::from_int(n))
    }

    #[test]
    fn univariate() {
        let x = v(sym::CL);
        let a = &(&x - &c(1)) * &(&x + &c(2));
        let b = &(&x - &c(1)) * &(&x + &c(3));
        assert_eq!(gcd(&a, &b), &x - &c(1));
    }

    #[test]
    fn bivariate_common_factor() {
        let x = v(sym::LAM);
        let y = v(sym::MU);
        let i = MultiPoly::constant(GaussRat::i());
        let lbar = &x + &(&i * &y);
        let a = &(&lbar * &lbar) * &(&x - &y);
        let b = &lbar * &(&(&x * &y) + &c(1));
        assert_eq!(gcd(&a, &b), monic(&lbar));
    }

    #[test]
    fn coprime() {
        let x = v(sym::CL);
        let y = v(sym::CM);
        let a = &(&x * &x) + &y;
        let b = &(&y * &y) + &x;
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn trivariate() {
        let x = v(sym::HL);
        let y = v(sym::HM);
        let z = v(sym::CM);
        let f = &(&(&x * &y) + &z) + &c(3);
        let a = &(&f * &f) * &(&x + &z);
        let b = &f * &(&(&y * &z) - &x);
        assert_eq!(gcd(&a, &b), monic(&f));
    }

    #[test]
    fn monomial_factors() {
        let x = v(sym::CM);
        let y = v(sym::HM);
        let a = &(&x * &x) * &y;
        let b = &(&x * &y) * &(&y + &c(1));
        assert_eq!(gcd(&a, &b), &x * &y);
    }
}

//! Fock modules `M(1) e^k` and the action of modes of composite fields.

use std::collections::BTreeMap;
use std::fmt;

use crate::conformal::{VAExpr, Word};
use crate::scalars::ScalarFn;

use super::lattice::{Lattice4, LABELS};

/// A product of creation operators `h_x(-n)`, stored as sorted `(x, n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FockMonomial(pub Vec<(u16, u32)>);

impl FockMonomial {
    pub fn level(&self) -> u32 {
        self.0.iter().map(|(_, n)| n).sum()
    }

    fn with(&self, x: u16, n: u32) -> FockMonomial {
        let mut v = self.0.clone();
        let pos = v.partition_point(|e| *e < (x, n));
        v.insert(pos, (x, n));
        FockMonomial(v)
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, n) in self.0.iter().rev() {
            write!(f, "{}(-{})", LABELS.get(*x as usize).copied().unwrap_or("?"), n)?;
        }
        write!(f, "e")
    }
}

/// A vector of `M(1) e^k` for a fixed momentum.
pub type FockVector = BTreeMap<FockMonomial, ScalarFn>;

pub fn highest(k: ScalarFn) -> FockVector {
    FockVector::from([(FockMonomial::default(), k)])
}

fn add_to(v: &mut FockVector, m: FockMonomial, c: ScalarFn) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&m) {
        Some(x) => {
            *x = &*x + &c;
            if x.is_zero() {
                v.remove(&m);
            }
        }
        None => {
            v.insert(m, c);
        }
    }
}

pub fn scale(v: &FockVector, c: &ScalarFn) -> FockVector {
    if c.is_zero() {
        return FockVector::new();
    }
    v.iter().map(|(m, x)| (m.clone(), x * c)).collect()
}

pub fn add(a: &FockVector, b: &FockVector) -> FockVector {
    let mut out = a.clone();
    for (m, c) in b {
        add_to(&mut out, m.clone(), c.clone());
    }
    out
}

pub fn level_of(v: &FockVector) -> Option<u32> {
    v.keys().next().map(|m| m.level())
}

/// The Heisenberg algebra of a lattice acting on `M(1) e^k`.
#[derive(Clone, Debug)]
pub struct Fock {
    pub gram: Vec<Vec<i64>>,
    /// `<k|x>` for each generator `x`.
    pub zero: Vec<ScalarFn>,
}

impl Fock {
    pub fn rank4(lattice: &Lattice4, k: &[ScalarFn; 4]) -> Fock {
        Fock {
            gram: lattice.gram.iter().map(|r| r.to_vec()).collect(),
            zero: (0..4).map(|x| lattice.pair_basis(k, x)).collect(),
        }
    }

    /// `h_x(m)` on a monomial.
    fn mode_mono(&self, x: u16, m: i64, mono: &FockMonomial) -> FockVector {
        let mut out = FockVector::new();
        match m {
            0 => add_to(&mut out, mono.clone(), self.zero[x as usize].clone()),
            m if m < 0 => add_to(&mut out, mono.with(x, (-m) as u32), ScalarFn::one()),
            m => {
                let mut seen = None;
                for (j, &(y, n)) in mono.0.iter().enumerate() {
                    if n as i64 != m || seen == Some((y, n)) {
                        continue;
                    }
                    seen = Some((y, n));
                    let g = self.gram[x as usize][y as usize];
                    if g == 0 {
                        continue;
                    }
                    let mult = mono.0.iter().filter(|e| **e == (y, n)).count() as i64;
                    let mut rest = mono.0.clone();
                    rest.remove(j);
                    add_to(&mut out, FockMonomial(rest), ScalarFn::from_int(m * g * mult));
                }
            }
        }
        out
    }

    pub fn mode(&self, x: u16, m: i64, v: &FockVector) -> FockVector {
        let mut out = FockVector::new();
        for (mono, c) in v {
            for (r, d) in self.mode_mono(x, m, mono) {
                add_to(&mut out, r, c * &d);
            }
        }
        out
    }

    /// Mode `Y_n` (weight grading, `Y(z) = sum Y_n z^(-n-wt)`) of a normally
    /// ordered word of Heisenberg generators.
    fn word_mode(&self, w: &Word, n: i64, v: &FockVector) -> FockVector {
        let Some(lv) = level_of(v) else { return FockVector::new() };
        let target = lv as i64 - n;
        if target < 0 {
            return FockVector::new();
        }
        let f = w.factors();
        if f.is_empty() {
            return if n == 0 { v.clone() } else { FockVector::new() };
        }
        // mode tuples (m_1..m_k) with sum n, each in [-target, lv]
        let mut out = FockVector::new();
        let mut ms = vec![0i64; f.len()];
        self.tuples(f.len(), 0, n, -target, lv as i64, &mut ms, &mut |ms| {
            let mut coef = ScalarFn::one();
            for (x, m) in f.iter().zip(ms) {
                // d^k x(z) = sum (-1)^k (m+1)...(m+k) x(m) z^(-m-1-k)
                let mut c = 1i64;
                for j in 1..=x.d as i64 {
                    c *= -(m + j);
                }
                if c == 0 {
                    return;
                }
                coef = &coef * &ScalarFn::from_int(c);
            }
            // annihilators, then zero modes, then creators
            let mut order: Vec<usize> = (0..f.len()).collect();
            order.sort_by_key(|&i| std::cmp::Reverse(ms[i]));
            let mut cur = v.clone();
            for i in order {
                cur = self.mode(f[i].gen, ms[i], &cur);
                if cur.is_empty() {
                    return;
                }
            }
            for (m, c) in cur {
                add_to(&mut out, m, &c * &coef);
            }
        });
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn tuples(&self, k: usize, i: usize, rem: i64, lo: i64, hi: i64, ms: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if i + 1 == k {
            if (lo..=hi).contains(&rem) {
                ms[i] = rem;
                f(ms);
            }
            return;
        }
        for m in lo..=hi {
            ms[i] = m;
            self.tuples(k, i + 1, rem - m, lo, hi, ms, f);
        }
    }

    /// `Y_n v` for a field of homogeneous weight.
    pub fn act(&self, field: &VAExpr, n: i64, v: &FockVector) -> FockVector {
        let mut out = FockVector::new();
        for (w, c) in field.terms() {
            for (m, x) in self.word_mode(w, n, v) {
                add_to(&mut out, m, &x * c);
            }
        }
        out
    }
}

/// `Y_n v` with `Y` a composite field over `heisenberg4` and `v` in the Fock
/// module of momentum `k`.
pub fn fock_act(field: &VAExpr, n: i64, k: &[ScalarFn; 4], v: &FockVector) -> FockVector {
    Fock::rank4(&Lattice4::default(), k).act(field, n, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conformal::Engine;
    use crate::scalars::sf;

    fn k() -> [ScalarFn; 4] {
        [sf("1/2"), sf("-1"), sf("3"), sf("2/3")]
    }

    #[test]
    fn heisenberg_commutator() {
        let f = Fock::rank4(&Lattice4::default(), &k());
        let v = highest(ScalarFn::one());
        let lhs = f.mode(0, 2, &f.mode(1, -2, &v));
        assert_eq!(lhs, highest(sf("-2")));
    }

    #[test]
    fn zero_mode_of_generator() {
        let e = Engine::builtin("heisenberg4").unwrap();
        let a = VAExpr::gen(e.gen("a").unwrap());
        let f = Fock::rank4(&Lattice4::default(), &k());
        // <k|a> = 2*(1/2) - (-1) = 2
        assert_eq!(f.act(&a, 0, &highest(ScalarFn::one())), highest(sf("2")));
    }

    #[test]
    fn derivative_modes() {
        let e = Engine::builtin("heisenberg4").unwrap();
        let da = e.apply_d(&VAExpr::gen(e.gen("a").unwrap()));
        let f = Fock::rank4(&Lattice4::default(), &k());
        let v = highest(ScalarFn::one());
        // (Da)_n = -(n+1) a(n)
        let r = f.act(&da, -2, &v);
        assert_eq!(r, FockVector::from([(FockMonomial(vec![(0, 2)]), sf("1"))]));
        assert!(f.act(&da, -1, &v).is_empty());
        assert_eq!(f.act(&da, 0, &v), highest(sf("-2")));
    }
}

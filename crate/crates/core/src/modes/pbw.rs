use std::collections::BTreeMap;
use std::fmt;

use crate::scalars::ScalarFn;

use super::mode::{Field, Mode};

/// `V(-i..)M(-j..)W(-k..)L(-n..) v_h`, stored as the list of creation modes
/// left to right. Within a field the most negative mode comes first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PBWMonomial(Vec<Mode>);

impl PBWMonomial {
    pub fn vacuum() -> PBWMonomial {
        PBWMonomial(Vec::new())
    }

    /// From the positive index lists of V, M, W, L, each in any order.
    pub fn from_parts(v: &[u32], m: &[u32], w: &[u32], l: &[u32]) -> PBWMonomial {
        let mut modes = Vec::new();
        for (f, idx) in [(Field::V, v), (Field::M, m), (Field::W, w), (Field::L, l)] {
            assert!(idx.iter().all(|&i| i > 0), "PBW indices must be positive");
            let mut s: Vec<u32> = idx.to_vec();
            s.sort_unstable_by(|a, b| b.cmp(a));
            modes.extend(s.into_iter().map(|i| Mode::new(f, -(i as i64))));
        }
        PBWMonomial(modes)
    }

    /// Accepts any list of creation modes, reordered into PBW order. Only for
    /// modes that commute with each other; use the action otherwise.
    #[cfg(test)]
    pub(crate) fn from_sorted(modes: Vec<Mode>) -> PBWMonomial {
        debug_assert!(modes.windows(2).all(|w| w[0].key() <= w[1].key()));
        PBWMonomial(modes)
    }

    pub fn modes(&self) -> &[Mode] {
        &self.0
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn level(&self) -> u32 {
        self.0.iter().map(|m| (-m.n) as u32).sum()
    }

    /// Positive indices of one field, non-increasing.
    pub fn part(&self, f: Field) -> Vec<u32> {
        self.0.iter().filter(|m| m.field == f).map(|m| (-m.n) as u32).collect()
    }

    /// Total index carried by M and V factors.
    pub fn commutative_degree(&self) -> u32 {
        self.0.iter().filter(|m| matches!(m.field, Field::M | Field::V)).map(|m| (-m.n) as u32).sum()
    }

    pub(crate) fn split_first(&self) -> Option<(Mode, PBWMonomial)> {
        let (first, rest) = self.0.split_first()?;
        Some((*first, PBWMonomial(rest.to_vec())))
    }

    /// `x` placed in front, if that keeps PBW order.
    pub(crate) fn try_prepend(&self, x: Mode) -> Option<PBWMonomial> {
        if x.n >= 0 {
            return None;
        }
        match self.0.first() {
            Some(y) if x.key() > y.key() => None,
            _ => {
                let mut v = Vec::with_capacity(self.0.len() + 1);
                v.push(x);
                v.extend_from_slice(&self.0);
                Some(PBWMonomial(v))
            }
        }
    }

    /// All PBW monomials of a given level, in a fixed order.
    pub fn all_of_level(n: u32) -> Vec<PBWMonomial> {
        let mut out = Vec::new();
        for nv in 0..=n {
            for nm in 0..=n - nv {
                for nw in 0..=n - nv - nm {
                    let nl = n - nv - nm - nw;
                    for v in partitions(nv) {
                        for m in partitions(nm) {
                            for w in partitions(nw) {
                                for l in partitions(nl) {
                                    out.push(PBWMonomial::from_parts(&v, &m, &w, &l));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Exponent lists `[v, m, w, l]`.
    pub fn exponent_lists(&self) -> [Vec<u32>; 4] {
        [self.part(Field::V), self.part(Field::M), self.part(Field::W), self.part(Field::L)]
    }
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.0 {
            write!(f, "{}", m)?;
        }
        write!(f, "v")
    }
}

/// Partitions of `n` as non-increasing lists.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A vector of a highest weight module in the PBW basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HWVector(BTreeMap<PBWMonomial, ScalarFn>);

impl HWVector {
    pub fn zero() -> HWVector {
        HWVector(BTreeMap::new())
    }

    pub fn vacuum() -> HWVector {
        HWVector::mono(PBWMonomial::vacuum())
    }

    pub fn mono(m: PBWMonomial) -> HWVector {
        HWVector::term(m, ScalarFn::one())
    }

    pub fn term(m: PBWMonomial, c: ScalarFn) -> HWVector {
        let mut v = HWVector::zero();
        v.add_term(m, c);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PBWMonomial, &ScalarFn)> {
        self.0.iter()
    }

    pub fn coeff(&self, m: &PBWMonomial) -> ScalarFn {
        self.0.get(m).cloned().unwrap_or_else(ScalarFn::zero)
    }

    /// Largest level among the terms.
    pub fn level(&self) -> u32 {
        self.0.keys().map(|m| m.level()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: PBWMonomial, c: ScalarFn) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&m) {
            Some(x) => {
                let s = &*x + &c;
                if s.is_zero() {
                    self.0.remove(&m);
                } else {
                    *x = s;
                }
            }
            None => {
                self.0.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &HWVector, c: &ScalarFn) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &o.0 {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add_assign(&mut self, o: &HWVector) {
        for (m, x) in &o.0 {
            self.add_term(m.clone(), x.clone());
        }
    }

    pub fn add(&self, o: &HWVector) -> HWVector {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }

    pub fn sub(&self, o: &HWVector) -> HWVector {
        let mut r = self.clone();
        r.add_scaled(o, &ScalarFn::from_int(-1));
        r
    }

    pub fn scale(&self, c: &ScalarFn) -> HWVector {
        let mut r = HWVector::zero();
        r.add_scaled(self, c);
        r
    }

    pub fn map_coeffs(&self, f: impl Fn(&ScalarFn) -> ScalarFn) -> HWVector {
        let mut r = HWVector::zero();
        for (m, x) in &self.0 {
            r.add_term(m.clone(), f(x));
        }
        r
    }

    /// `{"[[v..],[m..],[w..],[l..]]": "coefficient"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (m, c) in &self.0 {
            let key = serde_json::to_string(&m.exponent_lists()).expect("lists serialise");
            map.insert(key, serde_json::Value::String(c.to_text()));
        }
        serde_json::Value::Object(map)
    }
}

impl fmt::Display for HWVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}){}", c, m)?;
        }
        Ok(())
    }
}

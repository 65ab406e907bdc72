use std::cmp::Ordering;
use std::fmt;

use crate::modes::{partitions, Field, HWVector, Mode, ModeAlgebra};

/// An element of `B_n`: `V(-n)^{v_n} M(-n)^{m_n} .. V(-1)^{v_1} M(-1)^{m_1}
/// W(-n)^{w_n} L(-n)^{l_n} .. W(-1)^{w_1} L(-1)^{l_1} v_h`.
/// Exponent vectors are indexed from mode 1 at position 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisMonomial {
    pub v: Vec<u32>,
    pub m: Vec<u32>,
    pub w: Vec<u32>,
    pub l: Vec<u32>,
}

fn exps(parts: &[u32], n: usize) -> Vec<u32> {
    let mut e = vec![0; n];
    for &p in parts {
        e[p as usize - 1] += 1;
    }
    e
}

fn weighted(e: &[u32]) -> u32 {
    e.iter().enumerate().map(|(i, k)| (i as u32 + 1) * k).sum()
}

fn add(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// The order on exponent vectors: compare from the top index down, larger
/// entry first.
pub fn type_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for i in (0..a.len().max(b.len())).rev() {
        let (x, y) = (a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

impl BasisMonomial {
    /// Builds from per-field exponent vectors, padded to a common length.
    pub fn new(v: &[u32], m: &[u32], w: &[u32], l: &[u32]) -> BasisMonomial {
        let n = v.len().max(m.len()).max(w.len()).max(l.len());
        let pad = |e: &[u32]| {
            let mut x = e.to_vec();
            x.resize(n, 0);
            x
        };
        BasisMonomial { v: pad(v), m: pad(m), w: pad(w), l: pad(l) }
    }

    pub fn vacuum() -> BasisMonomial {
        BasisMonomial::new(&[], &[], &[], &[])
    }

    pub fn level(&self) -> u32 {
        weighted(&self.v) + weighted(&self.m) + weighted(&self.w) + weighted(&self.l)
    }

    pub fn commutative_degree(&self) -> u32 {
        weighted(&self.v) + weighted(&self.m)
    }

    /// `(t, k)` of the commutative part `[VM](v, m)`.
    pub fn comm_type(&self) -> (Vec<u32>, Vec<u32>) {
        (add(&self.v, &self.m), self.v.clone())
    }

    /// `(t, k)` of the non-commutative part `[WL](w, l)`.
    pub fn noncomm_type(&self) -> (Vec<u32>, Vec<u32>) {
        (add(&self.w, &self.l), self.w.clone())
    }

    /// The creation modes, left to right.
    pub fn word(&self) -> Vec<Mode> {
        let n = self.v.len();
        let mut out = Vec::new();
        let rep = |out: &mut Vec<Mode>, f: Field, i: usize, k: u32| {
            out.extend(std::iter::repeat(Mode::new(f, -(i as i64 + 1))).take(k as usize))
        };
        for i in (0..n).rev() {
            rep(&mut out, Field::V, i, self.v[i]);
            rep(&mut out, Field::M, i, self.m[i]);
        }
        for i in (0..n).rev() {
            rep(&mut out, Field::W, i, self.w[i]);
            rep(&mut out, Field::L, i, self.l[i]);
        }
        out
    }

    /// The commutative factor `x^c` alone.
    pub fn comm_part(&self) -> BasisMonomial {
        let z = vec![0; self.v.len()];
        BasisMonomial { v: self.v.clone(), m: self.m.clone(), w: z.clone(), l: z }
    }

    /// The non-commutative factor `x^{nc}` alone.
    pub fn noncomm_part(&self) -> BasisMonomial {
        let z = vec![0; self.v.len()];
        BasisMonomial { v: z.clone(), m: z, w: self.w.clone(), l: self.l.clone() }
    }

    pub fn vector(&self, alg: &ModeAlgebra) -> HWVector {
        alg.act_word(&self.word(), &HWVector::vacuum())
    }

    /// Member of the vacuum spanning set `B'`.
    pub fn in_vacuum_basis(&self) -> bool {
        let at = |e: &Vec<u32>, i: usize| e.get(i).copied().unwrap_or(0);
        at(&self.v, 0) + at(&self.m, 0) + at(&self.w, 0) + at(&self.l, 0) + at(&self.v, 1) + at(&self.w, 1) == 0
    }

    pub fn exponent_lists(&self) -> [Vec<u32>; 4] {
        [self.v.clone(), self.m.clone(), self.w.clone(), self.l.clone()]
    }

    fn order_cmp(&self, o: &BasisMonomial) -> Ordering {
        let (tn, kn) = self.noncomm_type();
        let (tc, kc) = self.comm_type();
        let (otn, okn) = o.noncomm_type();
        let (otc, okc) = o.comm_type();
        self.commutative_degree()
            .cmp(&o.commutative_degree())
            .then_with(|| type_cmp(&tn, &otn))
            .then_with(|| type_cmp(&kn, &okn))
            .then_with(|| type_cmp(&tc, &otc))
            .then_with(|| type_cmp(&kc, &okc))
            .then_with(|| self.exponent_lists().cmp(&o.exponent_lists()))
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.word();
        let mut k = 0;
        while k < word.len() {
            let mut r = 1;
            while k + r < word.len() && word[k + r] == word[k] {
                r += 1;
            }
            if r == 1 {
                write!(f, "{}", word[k])?;
            } else {
                write!(f, "{}^{}", word[k], r)?;
            }
            k += r;
        }
        write!(f, "v")
    }
}

/// The ordered basis `B_n`.
#[derive(Clone, Debug)]
pub struct LevelBasis {
    pub level: u32,
    pub elements: Vec<BasisMonomial>,
}

impl LevelBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.elements.iter().map(|x| x.commutative_degree()).collect()
    }

    /// Elements of a given commutative degree.
    pub fn stratum(&self, k: u32) -> Vec<BasisMonomial> {
        self.elements.iter().filter(|x| x.commutative_degree() == k).cloned().collect()
    }
}

pub fn basis(n: u32) -> LevelBasis {
    let len = n.max(1) as usize;
    let mut elements = Vec::new();
    for nv in 0..=n {
        for nm in 0..=n - nv {
            for nw in 0..=n - nv - nm {
                let nl = n - nv - nm - nw;
                for v in partitions(nv) {
                    for m in partitions(nm) {
                        for w in partitions(nw) {
                            for l in partitions(nl) {
                                elements.push(BasisMonomial {
                                    v: exps(&v, len),
                                    m: exps(&m, len),
                                    w: exps(&w, len),
                                    l: exps(&l, len),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    elements.sort_by(|a, b| a.order_cmp(b));
    LevelBasis { level: n, elements }
}

/// The part of `B_n` in `B'`.
pub fn vacuum_basis(n: u32) -> LevelBasis {
    let b = basis(n);
    LevelBasis { level: n, elements: b.elements.into_iter().filter(|x| x.in_vacuum_basis()).collect() }
}

/// Coefficients of `prod_n (1 - q^n)^{-e(n)}` up to `q^{n_max}`.
pub fn product_series(n_max: u32, e: impl Fn(u32) -> i64) -> Vec<i64> {
    let len = n_max as usize + 1;
    let mut s = vec![0i64; len];
    s[0] = 1;
    for n in 1..=n_max {
        let k = e(n);
        let step = n as usize;
        if k > 0 {
            for _ in 0..k {
                // multiply by 1/(1 - q^n)
                for i in step..len {
                    s[i] += s[i - step];
                }
            }
        } else {
            for _ in 0..(-k) {
                for i in (step..len).rev() {
                    s[i] -= s[i - step];
                }
            }
        }
    }
    s
}

/// Level dimensions from enumeration next to the product formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub verma: Vec<i64>,
    pub verma_series: Vec<i64>,
    pub vacuum: Vec<i64>,
    pub vacuum_series: Vec<i64>,
    /// The series with `(1 - q^2)^{+2}` as displayed in the Corollary.
    pub corollary_display_series: Vec<i64>,
}

impl Character {
    pub fn verma_matches(&self) -> bool {
        self.verma == self.verma_series
    }

    pub fn vacuum_matches(&self) -> bool {
        self.vacuum == self.vacuum_series
    }

    pub fn corollary_display_matches(&self) -> bool {
        self.vacuum == self.corollary_display_series
    }
}

pub fn character(n_max: u32) -> Character {
    let verma = (0..=n_max).map(|n| basis(n).len() as i64).collect();
    let vacuum = (0..=n_max).map(|n| vacuum_basis(n).len() as i64).collect();
    let vacuum_exp = |n: u32| match n {
        1 => 0,
        2 => 2,
        _ => 4,
    };
    let display_exp = |n: u32| match n {
        1 => 0,
        2 => -2,
        _ => 4,
    };
    Character {
        verma,
        verma_series: product_series(n_max, |_| 4),
        vacuum,
        vacuum_series: product_series(n_max, vacuum_exp),
        corollary_display_series: product_series(n_max, display_exp),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels() {
        assert_eq!(basis(0).elements, vec![BasisMonomial { v: vec![0], m: vec![0], w: vec![0], l: vec![0] }]);
        let b1 = basis(1);
        let names: Vec<String> = b1.elements.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, vec!["W(-1)v", "L(-1)v", "V(-1)v", "M(-1)v"]);
        assert_eq!(b1.degrees(), vec![0, 0, 1, 1]);
        assert_eq!(basis(3).len(), 40);
    }

    #[test]
    fn word_layout() {
        let x = BasisMonomial::new(&[1, 0], &[0, 1], &[1, 0], &[0, 1]);
        assert_eq!(x.to_string(), "M(-2)V(-1)L(-2)W(-1)v");
        assert_eq!(x.level(), 6);
        assert_eq!(x.commutative_degree(), 3);
    }

    #[test]
    fn type_order() {
        // (0, 1) precedes (2, 0): the top index decides
        assert_eq!(type_cmp(&[0, 1], &[2, 0]), Ordering::Less);
        assert_eq!(type_cmp(&[1, 1], &[0, 1]), Ordering::Less);
        assert_eq!(type_cmp(&[1, 1], &[1, 1]), Ordering::Equal);
    }

    #[test]
    fn characters() {
        let c = character(5);
        assert_eq!(c.verma, vec![1, 4, 14, 40, 105, 252]);
        assert!(c.verma_matches());
        assert_eq!(c.vacuum, vec![1, 0, 2, 4, 7, 12]);
        assert!(c.vacuum_matches());
        assert!(!c.corollary_display_matches());
    }
}

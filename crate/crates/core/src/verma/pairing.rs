use rayon::prelude::*;

use crate::modes::{adjoint, HWVector, Mode, ModeAlgebra, PBWMonomial};
use crate::scalars::{Field, ScalarFn};

use super::basis::{basis, BasisMonomial};
use super::linalg::det;

/// How `x*` is formed from the word `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Pairing {
    /// The adjoint table of the contragredient module, with signs on W and V.
    #[default]
    Contragredient,
    /// `X(n)* = X(-n)` for all four fields.
    Symmetric,
}

/// Reversed word of adjoint modes and the product of their signs.
pub fn adjoint_word(word: &[Mode], conv: Pairing) -> (i64, Vec<Mode>) {
    let mut sign = 1;
    let mut out = Vec::with_capacity(word.len());
    for m in word.iter().rev() {
        let (s, a) = adjoint(*m);
        if conv == Pairing::Contragredient {
            sign *= s;
        }
        out.push(a);
    }
    (sign, out)
}

/// `<x v | u>` for a word `x` and a vector `u`.
pub fn pair_word_vector(alg: &ModeAlgebra, x: &[Mode], u: &HWVector, conv: Pairing) -> ScalarFn {
    let (sign, xs) = adjoint_word(x, conv);
    let r = alg.act_word(&xs, u);
    let c = r.coeff(&PBWMonomial::vacuum());
    if sign < 0 {
        -c
    } else {
        c
    }
}

pub fn pairing_words(alg: &ModeAlgebra, x: &[Mode], y: &[Mode], conv: Pairing) -> ScalarFn {
    let u = alg.act_word(y, &HWVector::vacuum());
    pair_word_vector(alg, x, &u, conv)
}

pub fn pairing(alg: &ModeAlgebra, x: &BasisMonomial, y: &BasisMonomial, conv: Pairing) -> ScalarFn {
    if x.level() != y.level() {
        return ScalarFn::zero();
    }
    pairing_words(alg, &x.word(), &y.word(), conv)
}

#[derive(Clone, Debug)]
pub struct GramBlock {
    pub rows: Vec<BasisMonomial>,
    pub cols: Vec<BasisMonomial>,
    pub entries: Vec<Vec<ScalarFn>>,
}

impl GramBlock {
    pub fn det(&self) -> ScalarFn {
        det(&self.entries)
    }

    /// Determinant after mapping every entry into `F`.
    pub fn det_in<F: Field>(&self, eval: impl Fn(&ScalarFn) -> F) -> F {
        let m: Vec<Vec<F>> = self.entries.iter().map(|r| r.iter().map(&eval).collect()).collect();
        det(&m)
    }

    /// Entries with `deg_c(x) + deg_c(y) > n` all vanish.
    pub fn block_vanishing_holds(&self) -> bool {
        let n = self.rows.first().map_or(0, |x| x.level());
        self.rows.iter().zip(&self.entries).all(|(x, row)| {
            self.cols.iter().zip(row).all(|(y, e)| x.commutative_degree() + y.commutative_degree() <= n || e.is_zero())
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let lists = |b: &[BasisMonomial]| -> Vec<serde_json::Value> {
            b.iter().map(|x| serde_json::json!(x.exponent_lists())).collect()
        };
        let entries: Vec<Vec<String>> = self.entries.iter().map(|r| r.iter().map(|e| e.to_text()).collect()).collect();
        serde_json::json!({
            "level": self.rows.first().map_or(0, |x| x.level()),
            "basis": lists(&self.rows),
            "entries": entries,
        })
    }
}

pub fn gram_on(alg: &ModeAlgebra, rows: &[BasisMonomial], cols: &[BasisMonomial], conv: Pairing) -> GramBlock {
    let vecs: Vec<HWVector> = cols.par_iter().map(|y| y.vector(alg)).collect();
    let entries = rows
        .par_iter()
        .map(|x| {
            let w = x.word();
            cols.iter()
                .zip(&vecs)
                .map(|(y, u)| if x.level() == y.level() { pair_word_vector(alg, &w, u, conv) } else { ScalarFn::zero() })
                .collect()
        })
        .collect();
    GramBlock { rows: rows.to_vec(), cols: cols.to_vec(), entries }
}

/// The full Gram matrix of level `n` in `B_n` order.
pub fn gram(alg: &ModeAlgebra, n: u32, conv: Pairing) -> GramBlock {
    let b = basis(n).elements;
    gram_on(alg, &b, &b, conv)
}

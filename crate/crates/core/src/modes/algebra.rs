use std::sync::Arc;

use dashmap::DashMap;

use crate::scalars::{sf, ScalarFn};

use super::mode::{commutator, Field, Mode, ModeSum, Variant};
use super::pbw::{HWVector, PBWMonomial};

/// Central charges and highest weights; any of them may stay symbolic.
#[derive(Clone, Debug, PartialEq)]
pub struct Params {
    pub c_l: ScalarFn,
    pub c_m: ScalarFn,
    pub h_l: ScalarFn,
    pub h_w: ScalarFn,
    pub h_m: ScalarFn,
    pub h_v: ScalarFn,
}

impl Params {
    /// Everything symbolic: `cL, cM, hL, hW, hM, hV`.
    pub fn symbolic() -> Params {
        Params { c_l: sf("cL"), c_m: sf("cM"), h_l: sf("hL"), h_w: sf("hW"), h_m: sf("hM"), h_v: sf("hV") }
    }

    /// Symbolic central charges, zero highest weight.
    pub fn vacuum() -> Params {
        let z = ScalarFn::zero();
        Params { h_l: z.clone(), h_w: z.clone(), h_m: z.clone(), h_v: z, ..Params::symbolic() }
    }

    /// Random small rationals with `c_M != 0`.
    pub fn random(rng: &mut impl rand::Rng) -> Params {
        let mut q = |nonzero: bool| loop {
            let x = ScalarFn::from_frac(rng.gen_range(-30..=30), rng.gen_range(1..=7));
            if !nonzero || !x.is_zero() {
                break x;
            }
        };
        Params { c_l: q(false), c_m: q(true), h_l: q(false), h_w: q(false), h_m: q(false), h_v: q(false) }
    }

    pub fn eigenvalue(&self, f: Field) -> &ScalarFn {
        match f {
            Field::L => &self.h_l,
            Field::W => &self.h_w,
            Field::M => &self.h_m,
            Field::V => &self.h_v,
            _ => panic!("no eigenvalue for composite field"),
        }
    }

    pub fn map(&self, f: impl Fn(&ScalarFn) -> ScalarFn) -> Params {
        Params {
            c_l: f(&self.c_l),
            c_m: f(&self.c_m),
            h_l: f(&self.h_l),
            h_w: f(&self.h_w),
            h_m: f(&self.h_m),
            h_v: f(&self.h_v),
        }
    }
}

/// Mode action on the Verma module `V(c, h)`.
pub struct ModeAlgebra {
    params: Params,
    variant: Variant,
    memo: DashMap<(Mode, PBWMonomial), Arc<HWVector>>,
}

impl ModeAlgebra {
    pub fn new(params: Params) -> ModeAlgebra {
        ModeAlgebra::with_variant(params, Variant::Generic)
    }

    /// The `c_M = 0` algebra; `params.c_m` is ignored.
    pub fn cm_zero(params: Params) -> ModeAlgebra {
        ModeAlgebra::with_variant(Params { c_m: ScalarFn::zero(), ..params }, Variant::CmZero)
    }

    pub fn with_variant(params: Params, variant: Variant) -> ModeAlgebra {
        ModeAlgebra { params, variant, memo: DashMap::new() }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn commutator(&self, x: Mode, y: Mode) -> ModeSum {
        commutator(x, y, &self.params.c_l, &self.params.c_m, self.variant)
    }

    pub fn act(&self, m: Mode, v: &HWVector) -> HWVector {
        self.act_window(m, v, 0)
    }

    /// As [`act`](Self::act), with the composite-mode sums widened by `slack`.
    pub fn act_window(&self, m: Mode, v: &HWVector, slack: i64) -> HWVector {
        let mut out = HWVector::zero();
        for (mono, c) in v.terms() {
            let r = match m.field {
                Field::Lam => self.lam(m.n, mono, slack),
                Field::Theta => self.theta(m.n, mono, slack),
                _ => (*self.act_mono(m, mono)).clone(),
            };
            out.add_scaled(&r, c);
        }
        out
    }

    /// Applies modes right to left: `act_word([a, b], v) = a(b(v))`.
    pub fn act_word(&self, word: &[Mode], v: &HWVector) -> HWVector {
        word.iter().rev().fold(v.clone(), |acc, m| self.act(*m, &acc))
    }

    pub fn act_sum(&self, s: &ModeSum, v: &HWVector) -> HWVector {
        let mut out = HWVector::zero();
        for (m, c) in s {
            match m {
                None => out.add_scaled(v, c),
                Some(m) => out.add_scaled(&self.act(*m, v), c),
            }
        }
        out
    }

    fn act_mono(&self, x: Mode, mono: &PBWMonomial) -> Arc<HWVector> {
        let key = (x, mono.clone());
        if let Some(r) = self.memo.get(&key) {
            return r.clone();
        }
        let r = Arc::new(self.act_mono_uncached(x, mono));
        self.memo.insert(key, r.clone());
        r
    }

    fn act_mono_uncached(&self, x: Mode, mono: &PBWMonomial) -> HWVector {
        if let Some(p) = mono.try_prepend(x) {
            return HWVector::mono(p);
        }
        let Some((y, rest)) = mono.split_first() else {
            return match x.n {
                0 => HWVector::term(PBWMonomial::vacuum(), self.params.eigenvalue(x.field).clone()),
                _ => HWVector::zero(),
            };
        };
        // x y rest = y (x rest) + [x, y] rest
        let mut out = HWVector::zero();
        for (m, c) in self.act_mono(x, &rest).terms() {
            out.add_scaled(&self.act_mono(y, m), c);
        }
        let rest_v = HWVector::mono(rest);
        out.add_assign(&self.act_sum(&self.commutator(x, y), &rest_v));
        out
    }

    fn lam(&self, k: i64, mono: &PBWMonomial, slack: i64) -> HWVector {
        let d = mono.level() as i64;
        let u = HWVector::mono(mono.clone());
        let mut out = HWVector::zero();
        // :L(-i)M(k+i): with L(-i) a creation mode (i >= 2) on the left
        for i in 2..=(d - k + slack).max(1) {
            let r = self.act(Mode::new(Field::M, k + i), &u);
            out.add_assign(&self.act(Mode::new(Field::L, -i), &r));
        }
        for i in (-d - slack)..=1 {
            let r = self.act(Mode::new(Field::L, -i), &u);
            out.add_assign(&self.act(Mode::new(Field::M, k + i), &r));
        }
        let c = ScalarFn::from_frac(-3 * (k + 2) * (k + 3), 10);
        out.add_scaled(&self.act(Mode::new(Field::M, k), &u), &c);
        out
    }

    fn theta(&self, k: i64, mono: &PBWMonomial, slack: i64) -> HWVector {
        let d = mono.level() as i64;
        let u = HWVector::mono(mono.clone());
        let mut out = HWVector::zero();
        for i in (k - d - slack)..=(d + slack) {
            let r = self.act(Mode::new(Field::M, k - i), &u);
            out.add_assign(&self.act(Mode::new(Field::M, i), &r));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v1(f: Field) -> HWVector {
        HWVector::mono(PBWMonomial::from_sorted(vec![Mode::new(f, -1)]))
    }

    #[test]
    fn l1_on_m_minus_1() {
        let a = ModeAlgebra::new(Params::symbolic());
        let r = a.act(Mode::new(Field::L, 1), &v1(Field::M));
        assert_eq!(r, HWVector::term(PBWMonomial::vacuum(), sf("2*hM")));
    }

    #[test]
    fn w1_on_v_minus_1() {
        let a = ModeAlgebra::new(Params::symbolic());
        let r = a.act(Mode::new(Field::W, 1), &v1(Field::V));
        assert_eq!(r, HWVector::term(PBWMonomial::vacuum(), sf("1/15*(-3*hM + 96*hM^2/cM)")));
    }

    #[test]
    fn theta_zero_on_top() {
        let a = ModeAlgebra::new(Params::symbolic());
        let r = a.act(Mode::new(Field::Theta, 0), &HWVector::vacuum());
        assert_eq!(r, HWVector::term(PBWMonomial::vacuum(), sf("hM^2")));
    }

    #[test]
    fn lam_zero_on_top() {
        let a = ModeAlgebra::new(Params::symbolic());
        let r = a.act(Mode::new(Field::Lam, 0), &HWVector::vacuum());
        assert_eq!(r, HWVector::term(PBWMonomial::vacuum(), sf("hL*hM + hM/5")));
    }
}

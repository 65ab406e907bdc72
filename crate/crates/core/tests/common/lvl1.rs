//! Level-one vectors of `V(c, h)` and the parametrisations they live on.
//!
//! The p = 1 locus is parametrised rationally by `hV = u*hM`,
//! `cM = 64*hM/(2 + 45*u^2)`, on which the radical
//! `sqrt(5*(32*hM - cM)/(2*cM))` becomes `15*u/2` (up to sign).

use gw3ca_core::modes::{Field as ModeField, PBWMonomial, Params};
use gw3ca_core::scalars::{sf, Field, ITenth, QuadExt, ScalarFn};
use gw3ca_core::verma::FVector;

pub type Q = QuadExt<ITenth>;

pub fn t() -> Q {
    Q::t()
}

pub fn mono(f: ModeField) -> PBWMonomial {
    let one = |g| if f == g { vec![1] } else { vec![] };
    PBWMonomial::from_parts(&one(ModeField::V), &one(ModeField::M), &one(ModeField::W), &one(ModeField::L))
}

pub fn vec_of<F: Field>(terms: &[(ModeField, F)]) -> FVector<F> {
    terms.iter().filter(|(_, c)| !c.is_zero()).map(|(f, c)| (mono(*f), c.clone())).collect()
}

pub fn ident(c: &ScalarFn) -> ScalarFn {
    c.clone()
}

pub fn quad(c: &ScalarFn) -> Q {
    Q::from_scalar(c)
}

pub fn locus_params() -> Params {
    Params {
        h_v: sf("u*hM"),
        c_m: sf("64*hM/(2 + 45*u^2)"),
        ..Params::symbolic()
    }
}

pub fn radical_free_part(p: &Params) -> ScalarFn {
    let (cl, cm, hl, hm) = (&p.c_l, &p.c_m, &p.h_l, &p.h_m);
    let r = &(hm / cm);
    &(hl - &(&(&sf("16") * r) * &(&(&sf("3") * hl) + &sf("2/5")))) + &(&(&(&sf("16") * r) * r) * &(cl + &sf("44/5")))
}

pub fn proportional<F: Field>(a: &FVector<F>, b: &FVector<F>) -> bool {
    if a.keys().ne(b.keys()) {
        return false;
    }
    let (k, x) = a.iter().next().unwrap();
    let ratio = b[k].mul(&x.inv().unwrap());
    a.iter().all(|(k, x)| x.mul(&ratio) == b[k])
}

pub fn hm_zero() -> Params {
    Params { h_m: ScalarFn::zero(), h_v: ScalarFn::zero(), ..Params::symbolic() }
}

pub fn s2_params(sign: i64) -> Params {
    let p = Params { h_w: ScalarFn::zero(), ..locus_params() };
    let rest = radical_free_part(&p);
    let h_w = -&(&rest / &(&sf("45*u/2") * &ScalarFn::from_int(sign)));
    Params { h_w, ..p }
}

pub fn s2_vector(p: &Params) -> FVector<ScalarFn> {
    let (cl, cm, hl, hm, hv) = (&p.c_l, &p.c_m, &p.h_l, &p.h_m, &p.h_v);
    let inner = &(&(hm / &(&(&sf("3") * hv) * cm)) * &(&(cm * hl) - &(hm * &(cl - &sf("4")))))
        - &(&(&sf("3") * hv) / hm);
    let m = -&(&(&sf("16") / &(&sf("5") * cm)) * &inner);
    let l = -&(&(&sf("3") * hv) / &(&sf("2") * hm));
    vec_of(&[(ModeField::W, ScalarFn::one()), (ModeField::L, l), (ModeField::M, m)])
}

pub fn s_vector(p: &Params) -> FVector<ScalarFn> {
    let coef = -&(&sf("3") * &p.h_v) / &(&sf("2") * &p.h_m);
    vec_of(&[(ModeField::V, ScalarFn::one()), (ModeField::M, coef)])
}

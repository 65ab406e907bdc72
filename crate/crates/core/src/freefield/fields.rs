//! Composite fields in Heisenberg vertex algebras and the bracket check
//! against a target preset.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::conformal::{print_lambda, Engine, LambdaPoly, VAExpr, Word};
use crate::scalars::{sf, sym, ScalarFn, Symbol};

use super::lattice::RealisationParams;
use super::FreeFieldError;

/// Images of the target generators inside a Heisenberg vertex algebra.
///
/// `images[g]` is `sqrt(10)^s10[g]` times the field realising generator `g`,
/// so every coefficient stays in `Q(i)(lam, mu)`.
pub struct Realisation {
    pub source: Engine,
    pub target: Engine,
    pub images: Vec<VAExpr>,
    pub s10: Vec<u32>,
    /// Values of the target central charges.
    pub central: HashMap<Symbol, ScalarFn>,
}

#[derive(Clone, Debug)]
pub struct BracketCheck {
    pub pair: (String, String),
    pub expected: LambdaPoly,
    pub computed: LambdaPoly,
    pub matches: bool,
}

impl BracketCheck {
    pub fn to_json(&self, source: &Engine) -> serde_json::Value {
        serde_json::json!({
            "pair": [self.pair.0, self.pair.1],
            "expected": print_lambda(source.preset(), &self.expected),
            "computed": print_lambda(source.preset(), &self.computed),
            "match": self.matches,
        })
    }
}

impl Realisation {
    fn factor_image(&self, g: u16, d: u32) -> VAExpr {
        self.source.apply_d_pow(&self.images[g as usize], d)
    }

    /// Image of a target word, together with its total `sqrt(10)` exponent.
    pub fn word_image(&self, w: &Word) -> (VAExpr, u32) {
        let mut acc = VAExpr::vacuum();
        let mut e = 0;
        for x in w.factors().iter().rev() {
            acc = self.source.normal_order(&self.factor_image(x.gen, x.d), &acc);
            e += self.s10[x.gen as usize];
        }
        (acc, e)
    }

    /// The target bracket `[a_l b]` carried over to the source.
    pub fn expected(&self, a: u16, b: u16) -> LambdaPoly {
        let t = self.target.table(a, b);
        let outer = self.s10[a as usize] + self.s10[b as usize];
        let mut out = LambdaPoly::zero();
        for (n, e) in t.terms() {
            for (w, c) in e.terms() {
                let (img, inner) = self.word_image(w);
                assert!(outer >= inner && (outer - inner) % 2 == 0, "odd power of sqrt(10)");
                let k = ScalarFn::from_int(10i64.pow((outer - inner) / 2));
                let c = c.substitute_fn(&self.central).expect("central charges are finite");
                out.add_at_scaled(n, &img, &(&c * &k));
            }
        }
        out
    }

    pub fn computed(&self, a: u16, b: u16) -> LambdaPoly {
        self.source.bracket(&self.images[a as usize], &self.images[b as usize])
    }

    /// All unordered pairs of target generators.
    pub fn verify(&self) -> Vec<BracketCheck> {
        let n = self.images.len() as u16;
        let pairs: Vec<(u16, u16)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        pairs
            .par_iter()
            .map(|&(a, b)| {
                let expected = self.expected(a, b);
                let computed = self.computed(a, b);
                let p = self.target.preset();
                BracketCheck {
                    pair: (p.gen_name(a).to_string(), p.gen_name(b).to_string()),
                    matches: expected == computed,
                    expected,
                    computed,
                }
            })
            .collect()
    }

    pub fn image(&self, name: &str) -> Option<&VAExpr> {
        self.target.gen(name).ok().map(|g| &self.images[g as usize])
    }
}

/// Linear combinations and products inside a Heisenberg engine.
struct Builder<'a> {
    e: &'a Engine,
}

impl Builder<'_> {
    fn lin(&self, terms: &[(&str, ScalarFn)]) -> VAExpr {
        let mut out = VAExpr::zero();
        for (g, c) in terms {
            out.add_scaled(&VAExpr::gen(self.e.gen(g).unwrap()), c);
        }
        out
    }
    fn d(&self, x: &VAExpr, k: u32) -> VAExpr {
        self.e.apply_d_pow(x, k)
    }
    fn mul(&self, xs: &[&VAExpr]) -> VAExpr {
        let mut acc = VAExpr::vacuum();
        for x in xs.iter().rev() {
            acc = self.e.normal_order(x, &acc);
        }
        acc
    }
}

/// The fields `omega, W, M, V` over `heisenberg4`, in the generator order of
/// `gw3` (L, W, M, V). `W` and `V` are returned multiplied by `sqrt(10)`.
pub fn gw3_fields(source: &Engine, rp: &RealisationParams) -> Result<Vec<VAExpr>, FreeFieldError> {
    let lbar = rp.lbar();
    let inv = lbar.inv().map_err(|_| FreeFieldError::LBarZero)?;
    let bld = Builder { e: source };
    let one = ScalarFn::one();
    let i = ScalarFn::i();
    let a = bld.lin(&[("a", one.clone())]);
    let b = bld.lin(&[("b", one.clone())]);
    let c = bld.lin(&[("c", one.clone())]);
    let d = bld.lin(&[("d", one.clone())]);
    let ab = bld.lin(&[("a", one.clone()), ("c", i.clone())]);
    let bb = bld.lin(&[("b", one.clone()), ("d", i.clone())]);
    let k = |x: i64| ScalarFn::from_int(x);

    let third = sf("1/3");
    let omega = bld
        .mul(&[&a, &a])
        .add(&bld.mul(&[&a, &b]))
        .add(&bld.mul(&[&b, &b]))
        .add(&bld.mul(&[&c, &c]))
        .add(&bld.mul(&[&c, &d]))
        .add(&bld.mul(&[&d, &d]))
        .scale(&third)
        .add(&bld.d(&a.add(&b), 1).scale(&rp.lam))
        .add(&bld.d(&c.add(&d), 1).scale(&rp.mu));

    let m = bld
        .mul(&[&ab, &ab])
        .add(&bld.mul(&[&ab, &bb]))
        .add(&bld.mul(&[&bb, &bb]))
        .scale(&third)
        .add(&bld.d(&ab.add(&bb), 1).scale(&lbar));

    // a + 2b, 2a + b and a - b, barred and unbarred
    let comb = |x: &VAExpr, y: &VAExpr, p: i64, q: i64| x.scale(&k(p)).add(&y.scale(&k(q)));
    let (a2b, ba2, amb) = (comb(&a, &b, 1, 2), comb(&a, &b, 2, 1), comb(&a, &b, 1, -1));
    let (a2bb, ba2b, ambb) = (comb(&ab, &bb, 1, 2), comb(&ab, &bb, 2, 1), comb(&ab, &bb, 1, -1));
    let pre = &i * &(&sf("1/27") * &inv);

    let v_core = bld
        .mul(&[&ambb, &a2bb, &ba2b])
        .scale(&k(2))
        .add(&bld.mul(&[&bld.d(&ab, 1), &ba2b]).sub(&bld.mul(&[&bld.d(&bb, 1), &a2bb])).scale(&(&k(9) * &lbar)))
        .add(&bld.d(&ambb, 2).scale(&(&k(9) * &(&lbar * &lbar))));
    let v = v_core.scale(&pre);

    let cubic = bld
        .mul(&[&amb, &a2bb, &ba2b])
        .add(&bld.mul(&[&ambb, &a2b, &ba2b]))
        .add(&bld.mul(&[&ambb, &a2bb, &ba2]))
        .scale(&k(2));
    let lam_part = bld.mul(&[&bld.d(&ab, 1), &ba2b]).sub(&bld.mul(&[&bld.d(&bb, 1), &a2bb])).scale(&(&k(9) * &rp.lam));
    let lbar_part = bld
        .mul(&[&bld.d(&a, 1), &ba2b])
        .sub(&bld.mul(&[&bld.d(&b, 1), &a2bb]))
        .add(&bld.mul(&[&bld.d(&ab, 1), &ba2]))
        .sub(&bld.mul(&[&bld.d(&bb, 1), &a2b]))
        .scale(&(&k(9) * &lbar));
    let d2 = bld
        .d(&ambb, 2)
        .scale(&(&k(18) * &(&rp.lam * &lbar)))
        .add(&bld.d(&amb, 2).scale(&(&k(9) * &(&lbar * &lbar))));
    let shift = &(&(&sf("4/15") * &inv) * &inv) - &(&(&rp.lam * &inv) + &one);
    let w = cubic.add(&lam_part).add(&lbar_part).add(&d2).scale(&pre).add(&v.scale(&shift));

    Ok(vec![omega, w, m, v])
}

/// The `gw3` realisation over `heisenberg4` with `cL = 4 - 24(lam^2 + mu^2)`,
/// `cM = -24 lbar^2`.
pub fn gw3_realisation(rp: &RealisationParams) -> Result<Realisation, FreeFieldError> {
    let source = Engine::builtin("heisenberg4").expect("builtin");
    let target = Engine::builtin("gw3").expect("builtin");
    let images = gw3_fields(&source, rp)?;
    let central = HashMap::from([(sym::CL, rp.c_l()), (sym::CM, rp.c_m())]);
    Ok(Realisation { source, target, images, s10: vec![0, 1, 0, 1], central })
}

/// `omega, M` over `heisenberg2` realising `gca` at the given central charges.
pub fn gca_fields(source: &Engine, c_l: &ScalarFn, c_m: &ScalarFn) -> Vec<VAExpr> {
    let bld = Builder { e: source };
    let c = bld.lin(&[("c", ScalarFn::one())]);
    let d = bld.lin(&[("d", ScalarFn::one())]);
    let omega = bld
        .mul(&[&c, &d])
        .scale(&sf("1/2"))
        .add(&bld.d(&c, 1).scale(&(&(c_l - &sf("2")) / &sf("24"))))
        .sub(&bld.d(&d, 1).scale(&sf("1/2")));
    let m = bld.mul(&[&c, &c]).sub(&bld.d(&c, 1).scale(&sf("2"))).scale(&(-&(c_m / &sf("24"))));
    vec![omega, m]
}

/// The `gca` realisation over `heisenberg2`, symbolic in `cL, cM`.
pub fn gca_realisation() -> Realisation {
    let source = Engine::builtin("heisenberg2").expect("builtin");
    let target = Engine::builtin("gca").expect("builtin");
    let images = gca_fields(&source, &ScalarFn::var(sym::CL), &ScalarFn::var(sym::CM));
    Realisation { source, target, images, s10: vec![0, 0], central: HashMap::new() }
}

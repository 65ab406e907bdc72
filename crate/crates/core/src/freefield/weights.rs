//! Highest weights of `e[p,q,r,s]` and the S3 symmetry of the weight map.

use std::collections::HashMap;

use crate::scalars::{sf, sym, Field, QuadExt, ScalarFn, Sqrt10, Symbol};

use super::fields::Realisation;
use super::fock::{highest, Fock};
use super::lattice::{momentum, Lattice4, RealisationParams};
use super::FreeFieldError;

pub type R10 = QuadExt<Sqrt10>;

/// `x / sqrt(10)` as an element of `Q(i)(...)(sqrt 10)`.
pub fn over_s10(x: &ScalarFn) -> R10 {
    R10::new(ScalarFn::zero(), x / &sf("10"))
}

/// `(h_L, h_W, h_M, h_V)`; `h_W` and `h_V` carry a factor `1/sqrt(10)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Weights {
    pub h_l: ScalarFn,
    pub h_w: R10,
    pub h_m: ScalarFn,
    pub h_v: R10,
}

impl Weights {
    /// `sqrt(10) h_W`, rational.
    pub fn h_w_s10(&self) -> ScalarFn {
        &self.h_w.y * &sf("10")
    }

    /// `sqrt(10) h_V`, rational.
    pub fn h_v_s10(&self) -> ScalarFn {
        &self.h_v.y * &sf("10")
    }

    pub fn map(&self, f: impl Fn(&ScalarFn) -> ScalarFn) -> Weights {
        let g = |x: &R10| R10::new(f(&x.x), f(&x.y));
        Weights { h_l: f(&self.h_l), h_w: g(&self.h_w), h_m: f(&self.h_m), h_v: g(&self.h_v) }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "hL": self.h_l.to_string(),
            "hW": format!("({})/s10", self.h_w_s10()),
            "hM": self.h_m.to_string(),
            "hV": format!("({})/s10", self.h_v_s10()),
        })
    }
}

pub type PQRS = [ScalarFn; 4];

pub fn pqrs(p: &str, q: &str, r: &str, s: &str) -> PQRS {
    [sf(p), sf(q), sf(r), sf(s)]
}

/// The weight map in closed form, with `cL, cM` taken from `rp`.
pub fn printed_weights(rp: &RealisationParams, x: &PQRS) -> Weights {
    let [p, q, r, s] = x;
    let (c_l, c_m) = (rp.c_l(), rp.c_m());
    let one = ScalarFn::one();
    let pp = p * p;
    let qq = q * q;
    let quad = &(&sf("4") - &pp) - &(&sf("3") * &qq);
    let h_l = &(&(&(p * &(&one - r)) + &(&(&sf("3") * q) * &(&one - s))) / &sf("2"))
        + &(&(&(&c_l - &sf("4")) / &sf("96")) * &quad);
    let inner = &(&(&(&sf("2") * p) * &(q * &(&one - r))) + &(&(&one - s) * &(&pp - &(&sf("3") * &qq))))
        + &(&(q * &(&pp - &qq)) * &(&(&sf("52") - &(&sf("5") * &c_l)) / &sf("120")));
    let h_w = over_s10(&(&(&ScalarFn::i() / &sf("2")) * &inner));
    let h_m = &quad * &(&c_m / &sf("96"));
    let h_v = over_s10(&(&(&(&ScalarFn::i() * &c_m) / &sf("48")) * &(q * &(&qq - &pp))));
    Weights { h_l, h_w, h_m, h_v }
}

/// Zero-mode eigenvalues on `e[p,q,r,s]` from the Fock action.
pub fn zero_mode_weights(real: &Realisation, rp: &RealisationParams, x: &PQRS) -> Result<Weights, FreeFieldError> {
    let k = momentum(rp, &x[0], &x[1], &x[2], &x[3])?;
    let fock = Fock::rank4(&Lattice4::default(), &k.coords);
    let e = highest(ScalarFn::one());
    let eig = |name: &str| -> ScalarFn {
        let img = fock.act(real.image(name).expect("gw3 generator"), 0, &e);
        assert!(img.keys().all(|m| m.0.is_empty()), "e^k is not a zero-mode eigenvector");
        img.values().next().cloned().unwrap_or_else(ScalarFn::zero)
    };
    Ok(Weights { h_l: eig("L"), h_w: over_s10(&eig("W")), h_m: eig("M"), h_v: over_s10(&eig("V")) })
}

/// `(p,q,r,s) -> ((-p+3q)/2, -(p+q)/2, (-r+3s)/2, -(r+s-4)/2)`.
pub fn sigma(x: &PQRS) -> PQRS {
    let [p, q, r, s] = x;
    let h = sf("1/2");
    [
        &h * &(&(&sf("3") * q) - p),
        -&(&h * &(p + q)),
        &h * &(&(&sf("3") * s) - r),
        -&(&h * &(&(r + s) - &sf("4"))),
    ]
}

/// `(p,q,r,s) -> (-p, q, -r+2, s)`.
pub fn tau(x: &PQRS) -> PQRS {
    let [p, q, r, s] = x;
    [-p, q.clone(), &sf("2") - r, s.clone()]
}

/// `x, sx, s^2x, tx, stx, s^2tx`.
pub fn s3_orbit(x: &PQRS) -> Vec<PQRS> {
    let t = tau(x);
    vec![x.clone(), sigma(x), sigma(&sigma(x)), t.clone(), sigma(&t), sigma(&sigma(&t))]
}

/// The four right-hand sides of the displayed invariance, after `tau`.
pub fn tezine_points(x: &PQRS) -> Vec<PQRS> {
    let [p, q, r, s] = x;
    let h = sf("1/2");
    let t = |a: i64, b: i64, c: i64| &h * &(&(&(&ScalarFn::from_int(a) * p) + &(&ScalarFn::from_int(b) * q)) + &ScalarFn::from_int(c));
    let u = |a: i64, b: i64, c: i64| &h * &(&(&(&ScalarFn::from_int(a) * r) + &(&ScalarFn::from_int(b) * s)) + &ScalarFn::from_int(c));
    vec![
        tau(x),
        [t(-1, 3, 0), t(-1, -1, 0), u(-1, 3, 0), u(-1, -1, 4)],
        [t(1, 3, 0), t(1, -1, 0), u(1, 3, -2), u(1, -1, 2)],
        [t(-1, -3, 0), t(1, -1, 0), u(-1, -3, 6), u(1, -1, 2)],
        [t(1, -3, 0), t(-1, -1, 0), u(1, -3, 4), u(-1, -1, 4)],
    ]
}

/// Substitutes `p, q, r, s` in a function of them.
pub fn at(f: &ScalarFn, x: &PQRS) -> ScalarFn {
    let map: HashMap<Symbol, ScalarFn> =
        [sym::P, sym::Q, sym::R, sym::S].into_iter().zip(x.iter().cloned()).collect();
    f.substitute_fn(&map).expect("finite")
}

/// Weights at `x`, by substitution into the symbolic closed form.
pub fn weights_at(rp: &RealisationParams, x: &PQRS) -> Weights {
    printed_weights(rp, &pqrs("p", "q", "r", "s")).map(|f| at(f, x))
}

/// `h[p,q,r,s]^* = h[p,-q,r,2-s]`, compared with `(h_L, -h_W, h_M, -h_V)`.
/// False on the excluded locus `h_V^2 = 64(h_M - c_M/24)^3 / (45 c_M)`,
/// which the weight map does not reach.
pub fn parametrised(h_m: &ScalarFn, h_v_sq: &ScalarFn, c_m: &ScalarFn) -> bool {
    let x = h_m - &(c_m / &sf("24"));
    &(&sf("45") * c_m) * h_v_sq != &sf("64") * &(&(&x * &x) * &x)
}

pub fn dual_matches(rp: &RealisationParams, x: &PQRS) -> bool {
    let w = weights_at(rp, x);
    let d = weights_at(rp, &[x[0].clone(), -&x[1], x[2].clone(), &sf("2") - &x[3]]);
    d == Weights { h_w: w.h_w.neg(), h_v: w.h_v.neg(), ..w }
}

/// `h_L[p,r]` and `h_M[p]` of the GCA realisation, closed form.
pub fn gca_printed(c_l: &ScalarFn, c_m: &ScalarFn, p: &ScalarFn, r: &ScalarFn) -> (ScalarFn, ScalarFn) {
    let one = ScalarFn::one();
    let a = &one - &(p * p);
    let h_l = &(&a * &(&(c_l - &sf("2")) / &sf("24"))) + &(&(p * &(&(&(&sf("2") * p) - r) - &one)) / &sf("2"));
    (h_l, &(&a / &sf("24")) * c_m)
}

/// Zero-mode eigenvalues of `omega, M` on `v_{p,r}` in the rank-2 Fock module.
pub fn gca_weights(real: &Realisation, c_l: &ScalarFn, p: &ScalarFn, r: &ScalarFn) -> (ScalarFn, ScalarFn) {
    let one = ScalarFn::one();
    // v_{p,r} = -(p+1)/2 d + ((p+1)(cL-2)/24 - (2p-r-1)/2) c
    let kd = -&(&(p + &one) / &sf("2"));
    let kc = &(&(p + &one) * &(&(c_l - &sf("2")) / &sf("24"))) - &(&(&(&(&sf("2") * p) - r) - &one) / &sf("2"));
    let gram = vec![vec![0, 2], vec![2, 0]];
    let zero = vec![&kd * &sf("2"), &kc * &sf("2")];
    let fock = Fock { gram, zero };
    let e = highest(one);
    let eig = |g: usize| fock.act(&real.images[g], 0, &e).values().next().cloned().unwrap_or_else(ScalarFn::zero);
    (eig(0), eig(1))
}

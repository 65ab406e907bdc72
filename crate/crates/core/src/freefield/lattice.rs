//! The rank-4 lattice, realisation parameters and Fock momenta.

use crate::scalars::{sf, ScalarFn};

use super::FreeFieldError;

pub const LABELS: [&str; 4] = ["a", "b", "c", "d"];

/// `Z a + Z b + Z c + Z d`, two orthogonal copies of the sl3 root lattice
/// with `<a|b> = <c|d> = -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice4 {
    pub gram: [[i64; 4]; 4],
}

impl Default for Lattice4 {
    fn default() -> Self {
        Lattice4 { gram: [[2, -1, 0, 0], [-1, 2, 0, 0], [0, 0, 2, -1], [0, 0, -1, 2]] }
    }
}

impl Lattice4 {
    pub fn pair(&self, x: &[ScalarFn; 4], y: &[ScalarFn; 4]) -> ScalarFn {
        let mut acc = ScalarFn::zero();
        for i in 0..4 {
            for j in 0..4 {
                if self.gram[i][j] != 0 {
                    acc = &acc + &(&(&x[i] * &y[j]) * &ScalarFn::from_int(self.gram[i][j]));
                }
            }
        }
        acc
    }

    /// `<k|x>` for a basis vector `x`.
    pub fn pair_basis(&self, k: &[ScalarFn; 4], x: usize) -> ScalarFn {
        let mut acc = ScalarFn::zero();
        for (i, ki) in k.iter().enumerate() {
            if self.gram[i][x] != 0 {
                acc = &acc + &(ki * &ScalarFn::from_int(self.gram[i][x]));
            }
        }
        acc
    }
}

/// The pair `lam, mu` with `lbar = lam + i mu`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealisationParams {
    pub lam: ScalarFn,
    pub mu: ScalarFn,
}

impl RealisationParams {
    pub fn new(lam: ScalarFn, mu: ScalarFn) -> Result<Self, FreeFieldError> {
        let rp = RealisationParams { lam, mu };
        if rp.lbar().is_zero() {
            return Err(FreeFieldError::LBarZero);
        }
        Ok(rp)
    }

    /// Free symbols `lam`, `mu`.
    pub fn symbolic() -> Self {
        RealisationParams { lam: sf("lam"), mu: sf("mu") }
    }

    pub fn lbar(&self) -> ScalarFn {
        &self.lam + &(&ScalarFn::i() * &self.mu)
    }

    /// `4 - 24 (lam^2 + mu^2)`.
    pub fn c_l(&self) -> ScalarFn {
        &sf("4") - &(&sf("24") * &(&(&self.lam * &self.lam) + &(&self.mu * &self.mu)))
    }

    /// `-24 lbar^2`.
    pub fn c_m(&self) -> ScalarFn {
        let l = self.lbar();
        &sf("-24") * &(&l * &l)
    }
}

/// Coordinates of `k` over `a, b, c, d`.
#[derive(Clone, Debug, PartialEq)]
pub struct Momentum {
    pub coords: [ScalarFn; 4],
}

/// The momentum of `e[p,q,r,s]`.
pub fn momentum(
    rp: &RealisationParams,
    p: &ScalarFn,
    q: &ScalarFn,
    r: &ScalarFn,
    s: &ScalarFn,
) -> Result<Momentum, FreeFieldError> {
    let lbar = rp.lbar();
    let inv = lbar.inv().map_err(|_| FreeFieldError::LBarZero)?;
    let half = sf("1/2");
    let u = &sf("1") + &(&half * &(p + q));
    let v = &sf("1") + q;
    let x = &(&half * &(&(&sf("2") - r) - s)) * &inv;
    let y = &(s - &sf("1")) * &inv;
    let i = ScalarFn::i();
    Ok(Momentum {
        coords: [
            &(&u * &rp.lam) + &x,
            &(&v * &rp.lam) - &y,
            &(&u * &rp.mu) + &(&i * &x),
            &(&v * &rp.mu) - &(&i * &y),
        ],
    })
}

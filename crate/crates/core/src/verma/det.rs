use crate::modes::{Field as ModeField, HWVector, Mode, ModeAlgebra, Params, PBWMonomial, Variant};
use crate::scalars::ScalarFn;

use super::linalg::det;
use super::pairing::{pairing_words, Pairing};
use super::VermaError;

fn int(n: i64) -> ScalarFn {
    ScalarFn::from_int(n)
}

fn frac(n: i64, d: i64) -> ScalarFn {
    ScalarFn::from_frac(n, d)
}

fn factorial(n: i64) -> i64 {
    (1..=n).product()
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

fn pow(x: &ScalarFn, e: i64) -> ScalarFn {
    x.pow(e as i32).expect("non-negative power")
}

/// `a`, `b`, `d` of `W(p)V(-p)v = a v`, `W(p)M(-p)v = L(p)V(-p)v = b v`,
/// `L(p)M(-p)v = d v`.
pub fn abd(params: &Params, p: i64) -> (ScalarFn, ScalarFn, ScalarFn) {
    let (hm, hv, cm) = (&params.h_m, &params.h_v, &params.c_m);
    let inv = cm.inv().expect("c_M must be nonzero");
    let a = &(&frac(p, 15) * &(&(&int(5 * p * p - 8) * hm) + &(&(&int(96) * &(hm * hm)) * &inv)))
        + &(&frac(p * (p * p - 1) * (p * p - 4), 360) * cm);
    let b = &int(3 * p) * hv;
    let d = &(&int(2 * p) * hm) + &(&frac(p * (p * p - 1), 12) * cm);
    (a, b, d)
}

/// The displayed closed form of `D_n`.
pub fn dn_closed(params: &Params, n: i64) -> ScalarFn {
    let (hm, hv, cm) = (&params.h_m, &params.h_v, &params.c_m);
    let inv = cm.inv().expect("c_M must be nonzero");
    let x = hm + &(&frac(n * n - 1, 24) * cm);
    let y = hm + &(&frac(n * n - 4, 96) * cm);
    let main = &(&(&frac(64, 5) * &inv) * &(&x * &x)) * &y;
    &(&main - &(&int(9) * &(hv * hv))) * &int(n * n)
}

/// `n(n^2-1)^2(n^2-4) c_M^2 / 4320`, the value quoted for `h = 0`.
pub fn dn_vacuum_quoted(c_m: &ScalarFn, n: i64) -> ScalarFn {
    let k = n * (n * n - 1) * (n * n - 1) * (n * n - 4);
    &frac(k, 4320) * &(c_m * c_m)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DnReport {
    pub n: u32,
    pub by_action: ScalarFn,
    pub closed_form: ScalarFn,
}

impl DnReport {
    pub fn matches(&self) -> bool {
        self.by_action == self.closed_form
    }
}

/// `D_n` from pairings of `{L(-n), W(-n)}` with `{M(-n), V(-n)}`.
pub fn det_dn(alg: &ModeAlgebra, n: u32, conv: Pairing) -> DnReport {
    let k = -(n as i64);
    let row = [Mode::new(ModeField::L, k), Mode::new(ModeField::W, k)];
    let col = [Mode::new(ModeField::M, k), Mode::new(ModeField::V, k)];
    let m: Vec<Vec<ScalarFn>> =
        row.iter().map(|x| col.iter().map(|y| pairing_words(alg, &[*x], &[*y], conv)).collect()).collect();
    DnReport { n, by_action: det(&m), closed_form: dn_closed(alg.params(), n as i64) }
}

/// `L(p)^{i-1} W(p)^{n+1-i} V(-p)^{n+1-j} M(-p)^{j-1} v_h`, as a multiple of `v_h`.
pub fn alpha(alg: &ModeAlgebra, n: u32, i: u32, j: u32, p: u32) -> Result<ScalarFn, VermaError> {
    if i < 1 || j < 1 || i > n + 1 || j > n + 1 || p < 1 {
        return Err(VermaError::IndexOutOfRange);
    }
    let p = p as i64;
    let rep = |f: ModeField, k: i64, r: u32| std::iter::repeat(Mode::new(f, k)).take(r as usize);
    let word: Vec<Mode> = rep(ModeField::L, p, i - 1)
        .chain(rep(ModeField::W, p, n + 1 - i))
        .chain(rep(ModeField::V, -p, n + 1 - j))
        .chain(rep(ModeField::M, -p, j - 1))
        .collect();
    let r = alg.act_word(&word, &HWVector::vacuum());
    Ok(r.coeff(&PBWMonomial::vacuum()))
}

/// The closed form of `alpha_{i,j}^{(n)}` in terms of `a`, `b`, `d`.
pub fn alpha_closed(n: u32, i: u32, j: u32, a: &ScalarFn, b: &ScalarFn, d: &ScalarFn) -> ScalarFn {
    let (n, i, j) = (n as i64, i as i64, j as i64);
    let mut s = ScalarFn::zero();
    for k in 0..i {
        let c = binom(n + 1 - i, j - k - 1) * binom(i - 1, k);
        if c == 0 {
            continue;
        }
        let t = &(&pow(a, n - i - j + 2 + k) * &pow(b, i + j - 2 - 2 * k)) * &pow(d, k);
        s = &s + &(&t * &int(c));
    }
    &s * &int(factorial(n + 1 - j) * factorial(j - 1))
}

pub fn alpha_matrix(alg: &ModeAlgebra, n: u32, p: u32) -> Vec<Vec<ScalarFn>> {
    (1..=n + 1).map(|i| (1..=n + 1).map(|j| alpha(alg, n, i, j, p).expect("in range")).collect()).collect()
}

/// `(ad - b^2)^{n(n+1)/2} prod_j (n-j)! j!`.
pub fn alpha_det_closed(n: u32, a: &ScalarFn, b: &ScalarFn, d: &ScalarFn) -> ScalarFn {
    let n = n as i64;
    let base = &(a * d) - &(b * b);
    let f: i64 = (0..=n).map(|j| factorial(n - j) * factorial(j)).product();
    &pow(&base, n * (n + 1) / 2) * &int(f)
}

/// `h_V^2 - 64 (h_M + (p^2-1)c_M/24)^2 (h_M + (p^2-4)c_M/96) / (45 c_M)`.
pub fn krit_red_residual(params: &Params, p: i64) -> ScalarFn {
    let (hm, hv, cm) = (&params.h_m, &params.h_v, &params.c_m);
    let x = hm + &(&frac(p * p - 1, 24) * cm);
    let y = hm + &(&frac(p * p - 4, 96) * cm);
    let rhs = (&(&(&int(64) * &(&x * &x)) * &y)).checked_div(&(&int(45) * cm)).expect("c_M must be nonzero");
    &(hv * hv) - &rhs
}

/// Moves `(h_M, h_V)` onto the level-`p` reducibility locus, keeping the other
/// parameters: `h_M = 45 c_M s^2 - (p^2-4) c_M / 96`,
/// `h_V = 8 (h_M + (p^2-1) c_M / 24) s`.
pub fn params_on_locus(base: &Params, p: i64, s: &ScalarFn) -> Params {
    let cm = &base.c_m;
    let h_m = &(&(&int(45) * cm) * &(s * s)) - &(&frac(p * p - 4, 96) * cm);
    let h_v = &(&int(8) * &(&h_m + &(&frac(p * p - 1, 24) * cm))) * s;
    Params { h_m, h_v, ..base.clone() }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Reducibility {
    /// Levels `p` at which the criterion holds, for numeric parameters.
    Levels(Vec<u32>),
    /// One residual per `p`; the module is reducible where some vanishes.
    Conditions(Vec<(u32, ScalarFn)>),
}

pub fn reducible(params: &Params, p_max: u32) -> Result<Reducibility, VermaError> {
    if params.c_m.is_zero() {
        return Err(VermaError::CMZero);
    }
    let res: Vec<(u32, ScalarFn)> = (1..=p_max).map(|p| (p, krit_red_residual(params, p as i64))).collect();
    if res.iter().all(|(_, r)| r.is_constant()) {
        Ok(Reducibility::Levels(res.into_iter().filter(|(_, r)| r.is_zero()).map(|(p, _)| p).collect()))
    } else {
        Ok(Reducibility::Conditions(res))
    }
}

#[derive(Clone, Debug)]
pub struct Cm0Report {
    pub n: u32,
    pub p: u32,
    pub matrix: Vec<Vec<ScalarFn>>,
    /// `alpha_{i,j} = 0` for all `i < j`.
    pub triangular: bool,
    /// Diagonal against `(n+1-i)!(i-1)! a^{n+1-i} d^{i-1}` with `a = 32/5 p h_M`.
    pub diagonal_matches_quoted: bool,
    /// Diagonal against the same product with `a = 32/5 p h_M^2`.
    pub diagonal_matches_squared: bool,
    pub det: ScalarFn,
}

impl Cm0Report {
    /// Whether the determinant vanishes after substituting `h_M = 0`.
    pub fn vanishes_at_hm_zero(&self) -> bool {
        let b = std::collections::HashMap::from([(crate::scalars::sym::HM, crate::scalars::GaussRat::zero())]);
        self.det.substitute(&b).map(|x| x.is_zero()).unwrap_or(false)
    }
}

/// The triangular alpha-matrix of the `c_M = 0` algebra.
pub fn cm0_determinant(n: u32, p: u32, params: &Params) -> Cm0Report {
    let alg = ModeAlgebra::cm_zero(params.clone());
    assert_eq!(alg.variant(), Variant::CmZero);
    let matrix = alpha_matrix(&alg, n, p);
    let triangular = (0..=n as usize).all(|i| (i + 1..=n as usize).all(|j| matrix[i][j].is_zero()));
    let pi = p as i64;
    let hm = &params.h_m;
    let d = &int(2 * pi) * hm;
    let diag = |a: &ScalarFn| {
        (1..=n as i64).chain([n as i64 + 1]).all(|i| {
            let want = &(&pow(a, n as i64 + 1 - i) * &pow(&d, i - 1)) * &int(factorial(n as i64 + 1 - i) * factorial(i - 1));
            matrix[(i - 1) as usize][(i - 1) as usize] == want
        })
    };
    let quoted = &frac(32 * pi, 5) * hm;
    let squared = &frac(32 * pi, 5) * &(hm * hm);
    let det = det(&matrix);
    Cm0Report { n, p, triangular, diagonal_matches_quoted: diag(&quoted), diagonal_matches_squared: diag(&squared), det, matrix }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::sf;

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), 6);
        assert_eq!(binom(3, -1), 0);
        assert_eq!(binom(2, 3), 0);
    }

    #[test]
    fn alpha_base_cases() {
        let alg = ModeAlgebra::new(Params::symbolic());
        for p in 1..=3 {
            let (a, b, d) = abd(alg.params(), p as i64);
            assert_eq!(alpha(&alg, 1, 1, 1, p).unwrap(), a);
            assert_eq!(alpha(&alg, 1, 2, 1, p).unwrap(), b);
            assert_eq!(alpha(&alg, 1, 1, 2, p).unwrap(), b);
            assert_eq!(alpha(&alg, 1, 2, 2, p).unwrap(), d);
        }
        assert_eq!(alpha(&alg, 1, 3, 1, 1), Err(VermaError::IndexOutOfRange));
    }

    #[test]
    fn dn_symbolic_two() {
        let alg = ModeAlgebra::new(Params::symbolic());
        let r = det_dn(&alg, 2, Pairing::Symmetric);
        assert!(r.matches(), "{} vs {}", r.by_action, r.closed_form);
    }

    #[test]
    fn locus_points() {
        let base = Params { c_m: sf("3/2"), ..Params::symbolic() };
        for p in 1..=3 {
            let q = params_on_locus(&base, p, &sf("2/5"));
            assert!(krit_red_residual(&q, p).is_zero());
            assert_eq!(reducible(&q, 3).unwrap(), Reducibility::Levels(vec![p as u32]));
        }
    }

    #[test]
    fn reducible_at_zero_weight() {
        let mut p = Params::vacuum();
        p.c_m = sf("7/3");
        p.c_l = sf("1");
        assert_eq!(reducible(&p, 5), Ok(Reducibility::Levels(vec![1, 2])));
        p.c_m = ScalarFn::zero();
        assert_eq!(reducible(&p, 5), Err(VermaError::CMZero));
    }
}

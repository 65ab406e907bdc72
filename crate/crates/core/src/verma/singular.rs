use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::modes::{Field as ModeField, HWVector, Mode, ModeAlgebra, PBWMonomial};
use crate::scalars::{Field, ScalarFn};

use super::linalg::{nullspace, Echelon};

/// A vector with coefficients in `F`.
pub type FVector<F> = BTreeMap<PBWMonomial, F>;

/// Coordinates on the PBW basis of one level.
#[derive(Clone, Debug)]
pub struct LevelSpace {
    pub level: u32,
    pub monomials: Vec<PBWMonomial>,
    index: HashMap<PBWMonomial, usize>,
}

impl LevelSpace {
    pub fn new(level: u32) -> LevelSpace {
        let monomials = PBWMonomial::all_of_level(level);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        LevelSpace { level, monomials, index }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn dense<F: Field>(&self, v: &FVector<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (m, c) in v {
            out[self.index[m]] = out[self.index[m]].add(c);
        }
        out
    }

    pub fn sparse<F: Field>(&self, v: &[F]) -> FVector<F> {
        self.monomials.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c.clone())).collect()
    }
}

pub fn eval_vector<F: Field>(v: &HWVector, eval: &impl Fn(&ScalarFn) -> F) -> FVector<F> {
    let mut out = FVector::new();
    for (m, c) in v.terms() {
        let x = eval(c);
        if !x.is_zero() {
            out.insert(m.clone(), x);
        }
    }
    out
}

pub fn act_f<F: Field>(alg: &ModeAlgebra, m: Mode, v: &FVector<F>, eval: &impl Fn(&ScalarFn) -> F) -> FVector<F> {
    let mut out: FVector<F> = FVector::new();
    for (mono, c) in v {
        let r = alg.act(m, &HWVector::mono(mono.clone()));
        for (k, x) in r.terms() {
            let t = c.mul(&eval(x));
            let e = out.entry(k.clone()).or_insert_with(F::zero);
            *e = e.add(&t);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn level_of<F>(v: &FVector<F>) -> Option<u32> {
    let mut ls = v.keys().map(|m| m.level());
    let first = ls.next()?;
    ls.all(|l| l == first).then_some(first)
}

/// Vectors at level `n` killed by `X(1)` and `X(2)` for all four fields.
pub fn singular_vectors<F: Field>(alg: &ModeAlgebra, n: u32, eval: impl Fn(&ScalarFn) -> F) -> Vec<FVector<F>> {
    let space = LevelSpace::new(n);
    let mut rows: Vec<Vec<F>> = Vec::new();
    for k in 1..=n.min(2) {
        let target = LevelSpace::new(n - k);
        for f in ModeField::ELEMENTARY {
            let images: Vec<Vec<F>> = space
                .monomials
                .iter()
                .map(|b| target.dense(&eval_vector(&alg.act(Mode::new(f, k as i64), &HWVector::mono(b.clone())), &eval)))
                .collect();
            for r in 0..target.dim() {
                rows.push(images.iter().map(|col| col[r].clone()).collect());
            }
        }
    }
    let out: Vec<FVector<F>> = nullspace(&rows, space.dim()).into_iter().map(|x| space.sparse(&x)).collect();
    for v in &out {
        for k in 1..=n {
            for f in ModeField::ELEMENTARY {
                assert!(act_f(alg, Mode::new(f, k as i64), v, &eval).is_empty(), "solver output not annihilated");
            }
        }
    }
    out
}

/// Levels `0..=max_level` of the submodule generated by some vectors.
pub struct Submodule<F: Field> {
    spaces: Vec<LevelSpace>,
    spans: Vec<Echelon<F>>,
}

impl<F: Field> Submodule<F> {
    pub fn generate(
        alg: &ModeAlgebra,
        generators: &[FVector<F>],
        max_level: u32,
        eval: &impl Fn(&ScalarFn) -> F,
    ) -> Submodule<F> {
        let spaces: Vec<LevelSpace> = (0..=max_level).map(LevelSpace::new).collect();
        let mut spans: Vec<Echelon<F>> = spaces.iter().map(|s| Echelon::new(s.dim())).collect();
        let mut queue: VecDeque<(u32, FVector<F>)> = VecDeque::new();
        for g in generators {
            let Some(l) = level_of(g) else { continue };
            if l <= max_level && spans[l as usize].insert(&spaces[l as usize].dense(g)) {
                queue.push_back((l, g.clone()));
            }
        }
        while let Some((l, v)) = queue.pop_front() {
            for f in ModeField::ELEMENTARY {
                for j in -((max_level - l) as i64)..=l as i64 {
                    let img = act_f(alg, Mode::new(f, j), &v, eval);
                    let t = (l as i64 - j) as usize;
                    if !img.is_empty() && spans[t].insert(&spaces[t].dense(&img)) {
                        queue.push_back((t as u32, img));
                    }
                }
            }
        }
        Submodule { spaces, spans }
    }

    pub fn dim(&self, level: u32) -> usize {
        self.spans[level as usize].rank()
    }

    pub fn contains(&self, v: &FVector<F>) -> bool {
        match level_of(v) {
            None => true,
            Some(l) => self.spans[l as usize].contains(&self.spaces[l as usize].dense(v)),
        }
    }

    fn reduce(&self, level: u32, v: &FVector<F>) -> Vec<F> {
        self.spans[level as usize].reduce(&self.spaces[level as usize].dense(v))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubsingularReport<F> {
    /// The candidate is nonzero in the quotient.
    pub nonzero_in_quotient: bool,
    /// `X(k) v` lies in the submodule for all `1 <= k <= level`.
    pub positive_modes_vanish: bool,
    /// Eigenvalues of `L(0), W(0), M(0), V(0)` on the image, when they exist.
    pub zero_mode_eigenvalues: Option<Vec<F>>,
}

impl<F> SubsingularReport<F> {
    pub fn is_subsingular(&self) -> bool {
        self.nonzero_in_quotient && self.positive_modes_vanish && self.zero_mode_eigenvalues.is_some()
    }
}

/// Whether `candidate` is singular in the quotient by the submodule the
/// generators span.
pub fn quotient_and_subsingular<F: Field>(
    alg: &ModeAlgebra,
    generators: &[FVector<F>],
    candidate: &FVector<F>,
    eval: impl Fn(&ScalarFn) -> F,
) -> SubsingularReport<F> {
    let Some(n) = level_of(candidate) else {
        return SubsingularReport { nonzero_in_quotient: false, positive_modes_vanish: true, zero_mode_eigenvalues: None };
    };
    let sub = Submodule::generate(alg, generators, n, &eval);
    let base = sub.reduce(n, candidate);
    let nonzero = base.iter().any(|x| !x.is_zero());
    let positive = (1..=n as i64)
        .all(|k| ModeField::ELEMENTARY.iter().all(|f| sub.contains(&act_f(alg, Mode::new(*f, k), candidate, &eval))));
    let eigen = if nonzero {
        let piv = base.iter().position(|x| !x.is_zero()).expect("nonzero");
        let mut evs = Vec::new();
        for f in ModeField::ELEMENTARY {
            let img = sub.reduce(n, &act_f(alg, Mode::new(f, 0), candidate, &eval));
            let lambda = img[piv].mul(&base[piv].inv().expect("nonzero pivot"));
            if img.iter().zip(&base).all(|(x, y)| x.sub(&lambda.mul(y)).is_zero()) {
                evs.push(lambda);
            } else {
                break;
            }
        }
        (evs.len() == 4).then_some(evs)
    } else {
        None
    };
    SubsingularReport { nonzero_in_quotient: nonzero, positive_modes_vanish: positive, zero_mode_eigenvalues: eigen }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modes::Params;
    use crate::scalars::{sf, GaussRat};

    fn generic() -> ModeAlgebra {
        let p = Params {
            c_l: sf("3"),
            c_m: sf("5/2"),
            h_l: sf("1/7"),
            h_w: sf("2"),
            h_m: sf("-3/4"),
            h_v: sf("11"),
        };
        ModeAlgebra::new(p)
    }

    #[test]
    fn generic_level_one_is_empty() {
        let alg = generic();
        let eval = |c: &ScalarFn| GaussRat::from_scalar(c);
        assert!(singular_vectors(&alg, 1, eval).is_empty());
        assert_eq!(singular_vectors(&alg, 0, eval).len(), 1);
    }

    #[test]
    fn generic_l_minus_one_not_subsingular() {
        let alg = generic();
        let eval = |c: &ScalarFn| GaussRat::from_scalar(c);
        let l1 = FVector::from([(PBWMonomial::from_parts(&[], &[], &[], &[1]), GaussRat::one())]);
        let r = quotient_and_subsingular(&alg, &[], &l1, eval);
        assert!(!r.is_subsingular());
    }
}

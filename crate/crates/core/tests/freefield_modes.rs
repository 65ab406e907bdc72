use gw3ca_core::conformal::{Engine, VAExpr};
use gw3ca_core::freefield::*;
use gw3ca_core::modes::{commutator, Field, Mode, Variant};
use gw3ca_core::scalars::{sf, ScalarFn};

struct Images {
    fock: Fock,
    fields: Vec<(Field, VAExpr)>,
}

impl Images {
    fn new(rp: &RealisationParams, x: &PQRS) -> Images {
        let real = gw3_realisation(rp).unwrap();
        let e: &Engine = &real.source;
        let img = |n: &str| real.image(n).unwrap().clone();
        let (l, m) = (img("L"), img("M"));
        let lam = e.normal_order(&l, &m).sub(&e.apply_d_pow(&m, 2).scale(&sf("3/10")));
        let theta = e.normal_order(&m, &m);
        let k = momentum(rp, &x[0], &x[1], &x[2], &x[3]).unwrap();
        Images {
            fock: Fock::rank4(&Lattice4::default(), &k.coords),
            fields: vec![
                (Field::L, l),
                (Field::W, img("W")),
                (Field::M, m),
                (Field::V, img("V")),
                (Field::Lam, lam),
                (Field::Theta, theta),
            ],
        }
    }

    fn act(&self, md: Mode, v: &FockVector) -> FockVector {
        let f = &self.fields.iter().find(|(f, _)| *f == md.field).unwrap().1;
        self.fock.act(f, md.n, v)
    }
}

fn combine(terms: &[(FockVector, ScalarFn)]) -> Vec<(FockMonomial, ScalarFn)> {
    let mut acc: std::collections::BTreeMap<FockMonomial, ScalarFn> = Default::default();
    for (v, c) in terms {
        for (m, x) in v {
            let e = acc.entry(m.clone()).or_insert_with(ScalarFn::zero);
            *e = &*e + &(x * c);
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn test_vectors(im: &Images) -> Vec<FockVector> {
    let e = highest(ScalarFn::one());
    let a = im.fock.mode(0, -1, &e);
    let b = im.fock.mode(3, -2, &im.fock.mode(1, -1, &e));
    let c = im.fock.mode(2, -1, &im.fock.mode(2, -1, &e));
    vec![e, a, b, c]
}

fn check(rp: &RealisationParams, x: &PQRS, top: i64, nvec: usize) {
    let im = Images::new(rp, x);
    let (c_l, c_m) = (rp.c_l(), rp.c_m());
    let vs: Vec<FockVector> = test_vectors(&im).into_iter().take(nvec).collect();
    let elem = [Field::L, Field::W, Field::M, Field::V];
    for &fx in &elem {
        for &fy in &elem {
            // W and V are realised as sqrt(10) W and sqrt(10) V
            let both = matches!(fx, Field::W | Field::V) && matches!(fy, Field::W | Field::V);
            let scale = ScalarFn::from_int(if both { 10 } else { 1 });
            for n in -top..=top {
                for m in -top..=top {
                    let (mx, my) = (Mode::new(fx, n), Mode::new(fy, m));
                    let rhs = commutator(mx, my, &c_l, &c_m, Variant::Generic);
                    for v in &vs {
                        let mut terms = vec![
                            (im.act(mx, &im.act(my, v)), ScalarFn::one()),
                            (im.act(my, &im.act(mx, v)), -&ScalarFn::one()),
                        ];
                        for (z, c) in &rhs {
                            let zv = match z {
                                Some(z) => im.act(*z, v),
                                None => v.clone(),
                            };
                            terms.push((zv, -&(c * &scale)));
                        }
                        let res = combine(&terms);
                        assert!(res.is_empty(), "[{:?}, {:?}] on {:?}: {:?}", mx, my, v, res);
                    }
                }
            }
        }
    }
}

#[test]
fn fock_modes_satisfy_the_commutators() {
    let rp = RealisationParams::new(sf("1/3"), sf("2")).unwrap();
    check(&rp, &pqrs("1/2", "2", "-1", "3"), 2, 2);
    check(&rp, &pqrs("1", "1", "1", "1"), 1, 4);
}

#[test]
fn fock_modes_satisfy_the_commutators_complex() {
    let rp = RealisationParams::new(sf("-2/7 + I"), sf("1/5")).unwrap();
    check(&rp, &pqrs("3", "-1/4", "2/3", "0"), 1, 3);
}

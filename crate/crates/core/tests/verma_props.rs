use gw3ca_core::modes::*;
use gw3ca_core::scalars::ScalarFn;
use gw3ca_core::verma::*;
use proptest::prelude::*;

fn params() -> impl Strategy<Value = Params> {
    prop::collection::vec((1i64..40, 1i64..7), 6).prop_map(|v| {
        let f = |k: usize| ScalarFn::from_frac(v[k].0 - 20, v[k].1);
        let mut p = Params { c_l: f(0), c_m: f(1), h_l: f(2), h_w: f(3), h_m: f(4), h_v: f(5) };
        if p.c_m.is_zero() {
            p.c_m = ScalarFn::one();
        }
        p
    })
}

fn pick(level: u32, ix: prop::sample::Index) -> PBWMonomial {
    let all = PBWMonomial::all_of_level(level);
    all[ix.index(all.len())].clone()
}

fn pair_vectors(alg: &ModeAlgebra, a: &HWVector, b: &HWVector, conv: Pairing) -> ScalarFn {
    let mut acc = ScalarFn::zero();
    for (x, c) in a.terms() {
        for (y, d) in b.terms() {
            acc = &acc + &(&(c * d) * &pairing_words(alg, x.modes(), y.modes(), conv));
        }
    }
    acc
}

fn conv() -> impl Strategy<Value = Pairing> {
    prop::sample::select(vec![Pairing::Contragredient, Pairing::Symmetric])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn adjoint_contract(
        p in params(),
        lv in 0u32..4,
        k in -2i64..3,
        f in prop::sample::select(Field::ELEMENTARY.to_vec()),
        iu in any::<prop::sample::Index>(),
        iv in any::<prop::sample::Index>(),
        conv in conv(),
    ) {
        let lu = lv as i64 + k;
        prop_assume!((0..=4).contains(&lu));
        // the signed table is invariant on V(h) only when h = h*
        let p = match conv {
            Pairing::Symmetric => p,
            Pairing::Contragredient => Params { h_w: ScalarFn::zero(), h_v: ScalarFn::zero(), ..p },
        };
        let alg = ModeAlgebra::new(p);
        let u = HWVector::mono(pick(lu as u32, iu));
        let v = HWVector::mono(pick(lv, iv));
        let m = Mode::new(f, k);
        let (sign, _) = adjoint_word(&[m], conv);
        let lhs = pair_vectors(&alg, &alg.act(m, &u), &v, conv);
        let rhs = pair_vectors(&alg, &u, &alg.act(Mode::new(f, -k), &v), conv);
        prop_assert_eq!(lhs, if sign < 0 { -rhs } else { rhs });
    }

    #[test]
    fn signed_table_pairs_h_with_h_star(p in params()) {
        prop_assume!(!p.h_w.is_zero());
        let alg = ModeAlgebra::new(p.clone());
        let v = HWVector::vacuum();
        let w0 = Mode::new(Field::W, 0);
        let lhs = pair_vectors(&alg, &alg.act(w0, &v), &v, Pairing::Contragredient);
        let rhs = pair_vectors(&alg, &v, &alg.act(w0, &v), Pairing::Contragredient);
        prop_assert_eq!(&lhs, &p.h_w);
        prop_assert_eq!(rhs, p.h_w.clone());
        prop_assert_ne!(lhs, -&p.h_w);
    }

    #[test]
    fn different_levels_are_orthogonal(p in params(), a in 0u32..3, b in 0u32..3, ia in any::<prop::sample::Index>(), ib in any::<prop::sample::Index>()) {
        prop_assume!(a != b);
        let alg = ModeAlgebra::new(p);
        let x = pick(a, ia);
        let y = pick(b, ib);
        prop_assert!(pairing_words(&alg, x.modes(), y.modes(), Pairing::Contragredient).is_zero());
    }

    #[test]
    fn symmetric_form_is_symmetric(p in params(), lv in 0u32..4, ia in any::<prop::sample::Index>(), ib in any::<prop::sample::Index>()) {
        let alg = ModeAlgebra::new(p);
        let x = pick(lv, ia);
        let y = pick(lv, ib);
        prop_assert_eq!(
            pairing_words(&alg, x.modes(), y.modes(), Pairing::Symmetric),
            pairing_words(&alg, y.modes(), x.modes(), Pairing::Symmetric)
        );
    }
}

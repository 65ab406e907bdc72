use std::collections::HashMap;

use gw3ca_core::scalars::{sym, GaussRat, ScalarFn, Symbol};
use proptest::prelude::*;

const VARS: [Symbol; 4] = [sym::CL, sym::CM, sym::HM, sym::HV];

fn small_poly() -> impl Strategy<Value = ScalarFn> {
    prop::collection::vec((-5i64..=5, -2i64..=2, 0usize..4, 0u32..3, 0usize..4, 0u32..2), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(re, im, a, ea, b, eb)| {
                let c = GaussRat::from_int(re) + GaussRat::i() * GaussRat::from_int(im);
                &(&ScalarFn::constant(c) * &ScalarFn::var(VARS[a]).pow(ea as i32).unwrap())
                    * &ScalarFn::var(VARS[b]).pow(eb as i32).unwrap()
            })
            .sum()
    })
}

fn small_fn() -> impl Strategy<Value = ScalarFn> {
    (small_poly(), small_poly()).prop_map(|(n, d)| if d.is_zero() { n } else { &n / &d })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn addition_associates(x in small_fn(), y in small_fn(), z in small_fn()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
    }

    #[test]
    fn multiplication_distributes(x in small_fn(), y in small_fn(), z in small_fn()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn inverse_cancels(x in small_fn()) {
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inv().unwrap()).is_one());
    }

    #[test]
    fn different_paths_same_form(x in small_fn(), y in small_fn()) {
        prop_assume!(!y.is_zero());
        // (x + y)^2 / y  computed two ways
        let a = &(&(&x + &y) * &(&x + &y)) / &y;
        let b = &(&(&(&x * &x) / &y) + &(&ScalarFn::from_int(2) * &x)) + &y;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn substitute_commutes_with_arithmetic(x in small_fn(), y in small_fn(), a in -7i64..7, b in 1i64..9) {
        let bind: HashMap<Symbol, GaussRat> = [(sym::CM, GaussRat::from_frac(a, b)), (sym::HV, GaussRat::from_int(b))].into();
        if let (Ok(sx), Ok(sy)) = (x.substitute(&bind), y.substitute(&bind)) {
            if let Ok(s) = (&x + &y).substitute(&bind) {
                prop_assert_eq!(s, &sx + &sy);
            }
            if let Ok(s) = (&x * &y).substitute(&bind) {
                prop_assert_eq!(s, &sx * &sy);
            }
        }
    }

    #[test]
    fn text_roundtrip(x in small_fn()) {
        prop_assert_eq!(ScalarFn::parse(&x.to_string()).unwrap(), x);
    }
}

use gw3ca_core::conformal::{print_lambda, DGen, Engine, LambdaPoly, VAExpr};
use gw3ca_core::scalars::ScalarFn;
use proptest::prelude::*;
use std::sync::OnceLock;

fn gw3() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(|| Engine::builtin("gw3").unwrap())
}

/// Random factor lists of gw3 generators with total weight <= 6.
fn factors() -> impl Strategy<Value = Vec<DGen>> {
    prop::collection::vec((0u16..4, 0u32..3), 1..4).prop_map(|v| {
        let e = gw3();
        let mut out = Vec::new();
        let mut wt = 0;
        for (g, d) in v {
            let w = e.preset().weight(g) + d;
            if wt + w <= 6 {
                wt += w;
                out.push(DGen::new(g, d));
            }
        }
        out
    })
}

fn expr() -> impl Strategy<Value = VAExpr> {
    prop::collection::vec((factors(), -3i64..4), 1..3).prop_map(|v| {
        let e = gw3();
        let mut out = VAExpr::zero();
        for (f, c) in v {
            out.add_scaled(&e.normalize_word(&f), &ScalarFn::from_int(c));
        }
        out
    })
}

fn lambda_plus_d(e: &Engine, p: &LambdaPoly) -> LambdaPoly {
    p.shift(1).add(&p.map(|x| e.apply_d(x)))
}

fn weight_of(e: &Engine, x: &VAExpr) -> Option<u32> {
    let mut ws = x.terms().map(|(w, _)| e.weight(w));
    let first = ws.next()?;
    ws.all(|w| w == first).then_some(first)
}

#[test]
fn skew_on_all_shipped_tables() {
    for name in gw3ca_core::conformal::PRESET_NAMES {
        let e = Engine::builtin(name).unwrap();
        let n = e.preset().num_generators() as u16;
        for a in 0..n {
            for b in 0..n {
                assert_eq!(e.table(b, a), e.skew(&e.table(a, b)), "{} {} {}", name, a, b);
            }
        }
    }
}

#[test]
fn sesquilinear_on_generators() {
    let e = gw3();
    for a in 0..4 {
        for b in 0..4 {
            let (x, y) = (VAExpr::gen(a), VAExpr::gen(b));
            let p = e.bracket(&x, &y);
            assert_eq!(e.bracket(&e.apply_d(&x), &y), p.shift(1).scale(&ScalarFn::from_int(-1)));
            assert_eq!(e.bracket(&x, &e.apply_d(&y)), lambda_plus_d(e, &p));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sesquilinear_on_words(a in expr(), b in expr()) {
        let e = gw3();
        let p = e.bracket(&a, &b);
        prop_assert_eq!(e.bracket(&e.apply_d(&a), &b), p.shift(1).scale(&ScalarFn::from_int(-1)));
        prop_assert_eq!(e.bracket(&a, &e.apply_d(&b)), lambda_plus_d(e, &p));
    }

    #[test]
    fn skew_on_words(a in expr(), b in expr()) {
        let e = gw3();
        prop_assert_eq!(e.bracket(&b, &a), e.skew(&e.bracket(&a, &b)));
    }

    #[test]
    fn grading(fa in factors(), fb in factors()) {
        let e = gw3();
        let (a, b) = (e.normalize_word(&fa), e.normalize_word(&fb));
        let wa = weight_of(e, &a);
        let wb = weight_of(e, &b);
        if let (Some(wa), Some(wb)) = (wa, wb) {
            for (n, x) in e.bracket(&a, &b).terms() {
                for (w, _) in x.terms() {
                    prop_assert_eq!(e.weight(w) + n + 1, wa + wb);
                }
            }
        }
    }

    #[test]
    fn confluence(a in expr(), b in expr(), c in expr()) {
        // :(:ab:)c: - :a(:bc:): = sum 1/(n+1) :(D^{n+1}a)[b_l c]_n: + same with a, b swapped
        let e = gw3();
        let left = e.normal_order(&e.normal_order(&a, &b), &c);
        let right = e.normal_order(&a, &e.normal_order(&b, &c));
        let mut corr = VAExpr::zero();
        for (x, y) in [(&a, &b), (&b, &a)] {
            for (n, p) in e.bracket(y, &c).terms() {
                let dx = e.apply_d_pow(x, n + 1);
                corr.add_scaled(&e.normal_order(&dx, p), &ScalarFn::from_frac(1, (n + 1) as i64));
            }
        }
        prop_assert_eq!(left.sub(&right), corr);
    }

    #[test]
    fn print_roundtrip(a in expr(), b in expr()) {
        let e = gw3();
        let p = e.bracket(&a, &b);
        let text = print_lambda(e.preset(), &p);
        prop_assert_eq!(e.parse(&text).unwrap(), p, "{}", text);
    }
}

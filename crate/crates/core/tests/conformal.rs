use gw3ca_core::conformal::{print_lambda, Engine, LambdaPoly, VAExpr};
use gw3ca_core::scalars::ScalarFn;

fn ope(e: &Engine, a: &str, b: &str) -> LambdaPoly {
    e.bracket(&e.parse_expr(a).unwrap(), &e.parse_expr(b).unwrap())
}

fn check(e: &Engine, a: &str, b: &str, expected: &str) {
    let got = ope(e, a, b);
    let want = e.parse(expected).unwrap();
    assert_eq!(
        got,
        want,
        "[{}_l {}]\n got  {}\n want {}",
        a,
        b,
        print_lambda(e.preset(), &got),
        print_lambda(e.preset(), &want)
    );
}

#[test]
fn gw3_table_entries() {
    let e = Engine::builtin("gw3").unwrap();
    check(&e, "L", "W", "(D + 3*l)W");
    check(&e, "M", "M", "0");
    check(&e, "W", "M", "(2*D + 3*l)V");
    assert_eq!(print_lambda(e.preset(), &ope(&e, "L", "W")), "(D + 3*l)W");
}

#[test]
fn appendix_fixtures() {
    let e = Engine::builtin("gw3").unwrap();
    check(&e, "W", "LM", "2(DW)M + 2L(DV) + 3l(WM + LV) + (4l^2D + 5/2*l^3)V");
    check(&e, "LM", "W", "(D + 3l)(LV + WM) + 2((DL)V + W(DM)) + 1/2*(-3D^3 - D^2l + 7Dl^2 + 5l^3)V");
    check(&e, "W", "MM", "4M(DV) + 6l MV");
    check(&e, "MM", "W", "2(D + 3l)(MV) + 4(DM)V");
    check(&e, "LM", "V", "3(D + l)(MV) - 2M(DV)");
}

#[test]
fn jacobi_gw3_all_triples() {
    let e = Engine::builtin("gw3").unwrap();
    let n = e.preset().num_generators() as u16;
    let mut count = 0;
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let r = e.jacobi_residual(a, b, c);
                assert!(r.is_zero(), "({},{},{})", a, b, c);
                count += 1;
            }
        }
    }
    assert_eq!(count, 20);
}

#[test]
fn nogo_fails_on_wwm() {
    let e = Engine::builtin("gw3_nogo").unwrap();
    let w = e.gen("W").unwrap();
    let m = e.gen("M").unwrap();
    let r = e.jacobi_residual(w, w, m);
    assert!(!r.is_zero());
    let words = r.words();
    let lm = e.parse_expr("LM").unwrap();
    let dlm = e.parse_expr("(DL)M").unwrap();
    for x in [lm, dlm] {
        let (w, _) = x.terms().next().unwrap();
        assert!(words.contains(w));
    }
}

#[test]
fn composite_fields() {
    let e = Engine::builtin("gw3").unwrap();
    let (lam, theta) = e.composite_fields().unwrap();
    assert_eq!(theta, e.parse_expr("MM").unwrap());
    assert_eq!(lam, e.parse_expr("LM - 3/10*D^2M").unwrap());
    let l = VAExpr::gen(e.gen("L").unwrap());
    let b = e.bracket(&l, &theta);
    assert_eq!(b.coeff(0), e.apply_d(&theta));
    let _ = ScalarFn::one();
}

#[test]
fn jacobi_other_presets() {
    for name in ["virasoro", "gca", "w3", "gw3_cm0", "heisenberg4", "heisenberg2"] {
        let e = Engine::builtin(name).unwrap();
        let n = e.preset().num_generators() as u16;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert!(e.jacobi_residual(a, b, c).is_zero(), "{} ({},{},{})", name, a, b, c);
                }
            }
        }
    }
}

#[test]
fn heisenberg_pairing() {
    let e = Engine::builtin("heisenberg4").unwrap();
    let (a, b) = (e.gen("a").unwrap(), e.gen("b").unwrap());
    assert_eq!(e.table(a, b), e.parse("-l").unwrap());
    assert_eq!(e.table(a, a), e.parse("2*l").unwrap());
}

#[test]
fn normal_order_examples() {
    let e = Engine::builtin("gw3").unwrap();
    let x = e.parse_expr("W + 2/3*cM*LM").unwrap();
    assert_eq!(e.normal_order(&VAExpr::vacuum(), &x), x);
    assert_eq!(e.normal_order(&x, &VAExpr::vacuum()), x);
    let m = e.parse_expr("M").unwrap();
    let l = e.parse_expr("L").unwrap();
    assert_eq!(e.normal_order(&m, &m), e.parse_expr("MM").unwrap());
    // [M_l L] = (D + 2l)M + cM/12*l^3; its integral over [-D, 0] vanishes
    let ml = e.normal_order(&m, &l);
    assert_eq!(ml, e.parse_expr("LM").unwrap());
    let lm = e.normal_order(&l, &m);
    assert_eq!(lm, e.parse_expr("LM").unwrap());
}

#[test]
fn normal_order_reorders_with_correction() {
    // [W_l L] = (2D + 3l)W, and int_{-D}^0 (2D + 3l) dl = D^2/2
    let e = Engine::builtin("gw3").unwrap();
    let w = e.parse_expr("W").unwrap();
    let l = e.parse_expr("L").unwrap();
    assert_eq!(e.table(e.gen("W").unwrap(), e.gen("L").unwrap()), e.parse("(2D + 3l)W").unwrap());
    let wl = e.normal_order(&w, &l);
    assert_eq!(wl.len(), 1);
    assert_eq!(e.normal_order(&l, &w), wl.sub(&e.parse_expr("1/2*D^2W").unwrap()));
}

#[test]
fn apply_d_examples() {
    let e = Engine::builtin("gw3").unwrap();
    assert!(e.apply_d(&VAExpr::vacuum()).is_zero());
    assert_eq!(e.apply_d(&e.parse_expr("L").unwrap()), e.parse_expr("DL").unwrap());
    assert_eq!(e.apply_d(&e.parse_expr("LM").unwrap()), e.parse_expr("(DL)M + L(DM)").unwrap());
}

#[test]
fn m_is_central_on_m_v_words() {
    let e = Engine::builtin("gw3").unwrap();
    let (m, v) = (e.gen("M").unwrap(), e.gen("V").unwrap());
    let mexpr = VAExpr::gen(m);
    let mut checked = 0;
    // all words in M, V with derivatives, weight <= 8
    let mut stack: Vec<Vec<gw3ca_core::conformal::DGen>> = vec![vec![]];
    while let Some(f) = stack.pop() {
        let wt: u32 = f.iter().map(|x| e.preset().weight(x.gen) + x.d).sum();
        if !f.is_empty() {
            let w = e.normalize_word(&f);
            assert!(e.bracket(&mexpr, &w).is_zero(), "{:?}", f);
            checked += 1;
        }
        for g in [m, v] {
            for d in 0..3 {
                let x = gw3ca_core::conformal::DGen::new(g, d);
                if wt + e.preset().weight(g) + d <= 8 && f.last().map_or(true, |y| *y >= x) {
                    let mut g2 = f.clone();
                    g2.push(x);
                    stack.push(g2);
                }
            }
        }
    }
    assert!(checked > 10);
}

use gw3ca_core::conformal::Engine;
use gw3ca_core::modes::*;
use gw3ca_core::scalars::{sf, ScalarFn};

fn gw3() -> Engine {
    Engine::builtin("gw3").unwrap()
}

fn check(a: &str, b: &str, level: u32) {
    let e = gw3();
    let alg = ModeAlgebra::new(Params::vacuum());
    let r = state_field_check(&e, &alg, a, b, level).unwrap();
    assert!(r.ok(), "{:?}", &r.failures[..r.failures.len().min(5)]);
    assert!(r.checked > 0);
}

#[test]
fn state_field_l_l() {
    check("L", "L", 4);
}

#[test]
fn state_field_m_m() {
    check("M", "M", 4);
}

#[test]
fn state_field_w_w() {
    check("W", "W", 4);
}

#[test]
fn state_field_other_pairs() {
    for (a, b) in [("L", "W"), ("L", "M"), ("L", "V"), ("M", "W"), ("W", "V"), ("V", "V"), ("M", "V")] {
        check(a, b, 3);
    }
}

#[test]
fn state_field_composite() {
    check("L", "LM - 3/10*D^2M", 2);
    check("W", "MM", 2);
}

fn upto(level: u32) -> Vec<PBWMonomial> {
    (0..=level).flat_map(PBWMonomial::all_of_level).collect()
}

#[test]
fn annihilation() {
    let alg = ModeAlgebra::new(Params::symbolic());
    for mono in upto(3) {
        let d = mono.level() as i64;
        let u = HWVector::mono(mono.clone());
        for f in Field::ELEMENTARY {
            for n in d + 1..d + 4 {
                assert!(alg.act(Mode::new(f, n), &u).is_zero(), "{}({}) {}", f.name(), n, mono);
            }
        }
    }
}

#[test]
fn eigenvalues() {
    let alg = ModeAlgebra::new(Params::symbolic());
    let p = Params::symbolic();
    for f in Field::ELEMENTARY {
        let r = alg.act(Mode::new(f, 0), &HWVector::vacuum());
        assert_eq!(r, HWVector::vacuum().scale(p.eigenvalue(f)));
    }
    for mono in upto(3) {
        let u = HWVector::mono(mono.clone());
        let ev = &p.h_l + &ScalarFn::from_int(mono.level() as i64);
        assert_eq!(alg.act(Mode::new(Field::L, 0), &u), u.scale(&ev));
    }
}

#[test]
fn theta_relabel() {
    let alg = ModeAlgebra::new(Params::symbolic());
    for mono in upto(2) {
        let u = HWVector::mono(mono.clone());
        let d = mono.level() as i64;
        for k in -2..=2 {
            let mut alt = HWVector::zero();
            for i in (k - d - 3)..=(d + 3) {
                alt.add_assign(&alg.act_word(&[Mode::new(Field::M, k - i), Mode::new(Field::M, i)], &u));
            }
            assert_eq!(alg.act(Mode::new(Field::Theta, k), &u), alt);
        }
    }
}

fn bracket_on(alg: &ModeAlgebra, x: Mode, s: &ModeSum, u: &HWVector) -> HWVector {
    alg.act(x, &alg.act_sum(s, u)).sub(&alg.act_sum(s, &alg.act(x, u)))
}

fn jacobi_on(alg: &ModeAlgebra, x: Mode, y: Mode, z: Mode, u: &HWVector) -> HWVector {
    let mut r = bracket_on(alg, x, &alg.commutator(y, z), u);
    r.add_assign(&bracket_on(alg, y, &alg.commutator(z, x), u));
    r.add_assign(&bracket_on(alg, z, &alg.commutator(x, y), u));
    r
}

#[test]
fn mode_jacobi_symbolic_low_level() {
    let alg = ModeAlgebra::new(Params::symbolic());
    for mono in upto(2) {
        let u = HWVector::mono(mono.clone());
        for x in Field::ELEMENTARY {
            for y in Field::ELEMENTARY {
                for z in Field::ELEMENTARY {
                    for (n, m, k) in [(1, -1, 0), (2, -1, -1), (-1, 1, 1), (1, 1, -2)] {
                        let r = jacobi_on(&alg, Mode::new(x, n), Mode::new(y, m), Mode::new(z, k), &u);
                        assert!(r.is_zero(), "{:?} {:?} {:?} on {}", x, y, z, mono);
                    }
                }
            }
        }
    }
}

#[test]
fn cm_zero_relations() {
    let alg = ModeAlgebra::cm_zero(Params::symbolic());
    let w = HWVector::mono(PBWMonomial::from_parts(&[1], &[], &[], &[]));
    // W'(1)V(-1)v = (32/5) Theta(0) v
    assert_eq!(alg.act(Mode::new(Field::W, 1), &w), HWVector::vacuum().scale(&sf("32/5*hM^2")));
    let m = HWVector::mono(PBWMonomial::from_parts(&[], &[1], &[], &[]));
    assert!(alg.act(Mode::new(Field::W, 1), &m).is_zero());
}

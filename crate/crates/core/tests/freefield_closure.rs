use gw3ca_core::freefield::*;
use gw3ca_core::scalars::{sf, ScalarFn};

fn central_term(r: &Realisation, a: u16, b: u16, n: u32) -> ScalarFn {
    r.computed(a, b).coeff(n).scalar_part()
}

#[test]
fn gw3_closes_symbolically() {
    let rp = RealisationParams::symbolic();
    let r = gw3_realisation(&rp).unwrap();
    let checks = r.verify();
    assert_eq!(checks.len(), 10);
    for c in &checks {
        assert!(c.matches, "{:?}: {:?} vs {:?}", c.pair, c.expected, c.computed);
    }
    assert_eq!(central_term(&r, 0, 0, 3), &rp.c_l() / &sf("12"));
    assert_eq!(central_term(&r, 0, 2, 3), &rp.c_m() / &sf("12"));
    assert_eq!(rp.c_m(), sf("-24*(lam + I*mu)^2"));
}

#[test]
fn gw3_closes_at_a_point() {
    let rp = RealisationParams::new(sf("1/3"), sf("2")).unwrap();
    let r = gw3_realisation(&rp).unwrap();
    assert!(r.verify().iter().all(|c| c.matches));
    assert_eq!(central_term(&r, 0, 0, 3), sf("(4 - 24*(1/9 + 4))/12"));
    // [M_l M] has no central term
    assert!(central_term(&r, 2, 2, 3).is_zero());
}

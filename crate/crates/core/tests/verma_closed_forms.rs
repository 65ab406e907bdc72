use gw3ca_core::modes::{ModeAlgebra, Params};
use gw3ca_core::scalars::{sf, ScalarFn};
use gw3ca_core::verma::*;

#[test]
fn dn_by_action_matches_closed_form() {
    let alg = ModeAlgebra::new(Params::symbolic());
    for n in 1..=4 {
        let r = det_dn(&alg, n, Pairing::Symmetric);
        assert!(r.matches(), "n={}: {} vs {}", n, r.by_action, r.closed_form);
        // the signed adjoints flip the W row
        let c = det_dn(&alg, n, Pairing::Contragredient);
        assert_eq!(c.by_action, -r.closed_form.clone());
    }
}

#[test]
fn dn_at_zero_weight() {
    let alg = ModeAlgebra::new(Params::vacuum());
    for n in 1..=6i64 {
        let r = det_dn(&alg, n as u32, Pairing::Symmetric);
        // direct substitution of h = 0 into the closed form
        let k = n * n * (n * n - 1) * (n * n - 1) * (n * n - 4);
        assert_eq!(r.by_action, &ScalarFn::from_frac(k, 4320) * &sf("cM^2"));
        let quoted = dn_vacuum_quoted(&sf("cM"), n);
        assert_eq!(r.by_action == quoted, n <= 2, "n={}", n);
    }
}

#[test]
fn alpha_by_action_matches_closed_form() {
    let alg = ModeAlgebra::new(Params::symbolic());
    for p in 1..=3u32 {
        let (a, b, d) = abd(alg.params(), p as i64);
        for n in 1..=4u32 {
            let m = alpha_matrix(&alg, n, p);
            for i in 1..=n + 1 {
                for j in 1..=n + 1 {
                    let want = alpha_closed(n, i, j, &a, &b, &d);
                    assert_eq!(m[i as usize - 1][j as usize - 1], want, "n={} i={} j={} p={}", n, i, j, p);
                }
            }
            assert_eq!(det(&m), alpha_det_closed(n, &a, &b, &d), "det n={} p={}", n, p);
        }
    }
}

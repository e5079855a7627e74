use superalt::bimodule::{check_alternative_bimodule, is_graded_irreducible, is_isomorphic_graded, IsoClass};
use superalt::catalog::{self, registry};
use superalt::constructions::{self as cons, Params};
use superalt::{Field, Matrix};

fn f(s: &str) -> Field {
    s.parse().unwrap()
}

#[test]
fn every_entry_is_exercised_by_the_battery() {
    let battery = catalog::battery();
    for e in registry() {
        let inst = battery.iter().find(|i| i.entry == e.name).unwrap_or_else(|| panic!("{} not in the battery", e.name));
        let v = inst.build().unwrap();
        assert!(check_alternative_bimodule(&v).unwrap().holds, "{}", e.name);
    }
}

#[test]
fn required_parameters() {
    let e = catalog::find_entry("v_eps").unwrap();
    assert!(catalog::build_entry(&e, &f("GF(7)"), &Params::new()).is_err());
}

#[test]
fn unknown_parameters_are_rejected() {
    let e = catalog::find_entry("v_eps").unwrap();
    let ps = cons::parse_params("epsilon=2").unwrap();
    assert!(catalog::build_entry(&e, &f("GF(7)"), &ps).is_err());
    assert!(catalog::find_entry("nosuch").is_none());
}

#[test]
fn eps_series_preconditions() {
    let q = f("Q");
    let (one, two) = (q.one(), q.from_i64(2));
    // alpha = lambda, alpha = 0, and eps off the roots of u^2 + (alpha-lambda)u + alpha(alpha-2 lambda)
    assert!(catalog::v_f1x_eps(&q, &one, &one, &q.zero()).is_err());
    assert!(catalog::v_f1x_eps(&q, &q.zero(), &one, &q.zero()).is_err());
    assert!(catalog::v_f1x_eps(&q, &two, &one, &one).is_err());
    assert!(catalog::v_f1x_eps(&q, &two, &one, &q.zero()).is_ok());
    assert!(catalog::v_f1x_eps(&q, &two, &one, &q.from_i64(-1)).is_ok());
    // the 2|2 series needs f irreducible
    assert!(catalog::v_f1x_22(&q, &two, &one).is_err());
    assert_eq!(catalog::v_f1x_22(&q, &one, &q.zero()).unwrap().dim(), 4);
}

#[test]
fn type_one_is_v_minus_one_zero() {
    for fs in ["Q", "GF(13)"] {
        let k = f(fs);
        assert_eq!(
            catalog::sqrt1_type(&k, 1, None).unwrap(),
            catalog::v_lambda_mu(&k, &k.from_i64(-1), &k.zero()).unwrap()
        );
    }
}

#[test]
fn v33_grid() {
    let g3 = f("GF(3)");
    let e = |n| g3.from_i64(n);
    let v = catalog::v33(&g3, &e(1), &e(1)).unwrap();
    assert_eq!((v.dim(), v.algebra().dim()), (6, 3));
    assert!(catalog::v33(&g3, &e(0), &e(1)).is_err());
    let w = catalog::v33(&g3, &e(2), &e(2)).unwrap();
    assert_eq!(is_isomorphic_graded(&v, &w).unwrap(), IsoClass::Both);
    let x = catalog::v33(&g3, &e(1), &e(2)).unwrap();
    assert_eq!(is_isomorphic_graded(&v, &x).unwrap(), IsoClass::None);
}

#[test]
fn spec_of_d_dt() {
    // D(c0 + c1 t + c2 t^2) = c1 + 2 c2 t; D c = l c forces c1 = l c0, 2 c2 = l c1, 0 = l c2,
    // and an invertible c has c0 != 0, so l = 0
    let g3 = f("GF(3)");
    let (g, d) = cons::truncated_poly_gamma(&g3, 1).unwrap();
    assert_eq!(catalog::spec_d(&g, &d).unwrap(), vec![g3.zero()]);
}

#[test]
fn degenerate_derivation_is_not_d_simple() {
    let g3 = f("GF(3)");
    let (g, _) = cons::truncated_poly_gamma(&g3, 1).unwrap();
    let m = Matrix::from_fn(&g3, 3, 3, |r, c| if (r, c) == (2, 1) { g3.one() } else { g3.zero() });
    let d = cons::DerivationOp::new(&g, m).unwrap();
    let rep = catalog::d_simple_check(&catalog::diff_reg(&g, &d, &g.zero()).unwrap()).unwrap();
    assert!(!rep.d_simple);
    assert!(rep.witness.is_some());
}

#[test]
fn non_derivations_are_rejected() {
    let g3 = f("GF(3)");
    let (g, _) = cons::truncated_poly_gamma(&g3, 1).unwrap();
    // D(t) = 1 + t does not vanish on 1 consistently with D(t^2) = 2 t D(t)
    let m = Matrix::from_fn(&g3, 3, 3, |r, c| if c == 1 && r < 2 { g3.one() } else { g3.zero() });
    assert!(cons::DerivationOp::new(&g, m).is_err());
}

#[test]
fn char2_cayley_modules() {
    let g2 = f("GF(2)");
    let v = catalog::cay_h22(&g2, &g2.one(), &g2.one()).unwrap();
        assert!(is_graded_irreducible(&v).unwrap());
    assert!(superalt::bimodule::is_faithful(&v));
    let w = catalog::cay_h_u(&g2, &g2.one(), &g2.one(), &g2.one()).unwrap();
    // alpha = beta = 1: the quaternions split, L is 2-dimensional and the double has dimension 4
    assert_eq!(w.dim(), 4);
    assert!(check_alternative_bimodule(&w).unwrap().holds);
}

#[test]
fn battery_labels_are_unique() {
    let b = catalog::battery();
    let mut labels: Vec<_> = b.iter().map(|i| i.label.clone()).collect();
    labels.sort();
    labels.dedup();
    assert_eq!(labels.len(), b.len());
    assert_eq!(b.iter().filter(|i| i.associative).count(), 1);
}

use proptest::prelude::*;
use superalt::bimodule::{
    check_alternative_bimodule, is_faithful, is_graded_irreducible, is_isomorphic_graded, regular_bimodule,
    split_null_extension, IsoClass,
};
use superalt::catalog;
use superalt::constructions as cons;
use superalt::superalgebra::check_superalternative;
use superalt::suites::corrupt_table;
use superalt::{Field, SuperBimodule};

fn small_battery() -> Vec<SuperBimodule> {
    catalog::battery().iter().filter_map(|i| i.build().ok()).filter(|v| v.dim() <= 8).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn opposite_is_an_involution(i in 0usize..64) {
        let b = small_battery();
        let v = &b[i % b.len()];
        prop_assert_eq!(&v.opposite().opposite(), v);
    }

    #[test]
    fn opposite_is_odd_isomorphic(i in 0usize..64) {
        let b = small_battery();
        let v = &b[i % b.len()];
        let c = is_isomorphic_graded(v, &v.opposite()).unwrap();
        prop_assert!(matches!(c, IsoClass::Odd | IsoClass::Both));
    }

    #[test]
    fn bimodule_json_roundtrip(i in 0usize..64) {
        let b = small_battery();
        let v = &b[i % b.len()];
        prop_assert_eq!(&SuperBimodule::from_json(&v.to_json()).unwrap(), v);
    }

    #[test]
    fn split_null_extension_matches_the_bimodule_laws(i in 0usize..64) {
        let b = small_battery();
        let v = &b[i % b.len()];
        let e = split_null_extension(v).unwrap();
        prop_assert_eq!(e.dim(), v.algebra().dim() + v.dim());
        prop_assert_eq!(check_superalternative(&e).holds, check_alternative_bimodule(v).unwrap().holds);
    }
}

#[test]
fn corrupted_tables_are_caught() {
    let mut caught = 0;
    let b = small_battery();
    for v in &b {
        let w = corrupt_table(v).unwrap();
        assert_ne!(&w, v);
        if !check_alternative_bimodule(&w).unwrap().holds {
            caught += 1;
        }
    }
    assert_eq!(caught, b.len());
}

#[test]
fn regular_bimodules() {
    let g3: Field = "GF(3)".parse().unwrap();
    let reg = regular_bimodule(&cons::b12(&g3).unwrap());
    assert!(check_alternative_bimodule(&reg).unwrap().holds);
    assert!(is_graded_irreducible(&reg).unwrap());
    assert!(is_faithful(&reg));
    let o = regular_bimodule(&cons::octonion(&"GF(5)".parse().unwrap()).unwrap());
    assert!(is_graded_irreducible(&o).unwrap());
}

#[test]
fn direct_sums_are_reducible() {
    let f: Field = "GF(7)".parse().unwrap();
    let v = catalog::v_eps(&f, &f.from_i64(2)).unwrap();
    let s = v.direct_sum(&v).unwrap();
    assert_eq!(s.dim(), 2 * v.dim());
    assert!(check_alternative_bimodule(&s).unwrap().holds);
    assert!(!is_graded_irreducible(&s).unwrap());
    assert_eq!(is_isomorphic_graded(&s, &v).unwrap(), IsoClass::None);
}

#[test]
fn v_eps_opposite_squares_eps() {
    // over GF(7): 2^2 = 4 and 4^2 = 2, so the two members are each other's opposites
    let f: Field = "GF(7)".parse().unwrap();
    let v2 = catalog::v_eps(&f, &f.from_i64(2)).unwrap();
    let v4 = catalog::v_eps(&f, &f.from_i64(4)).unwrap();
    assert!(matches!(is_isomorphic_graded(&v2.opposite(), &v4).unwrap(), IsoClass::Even | IsoClass::Both));
    assert!(!matches!(is_isomorphic_graded(&v2, &v4).unwrap(), IsoClass::Even | IsoClass::Both));
}

use proptest::prelude::*;
use superalt::bimodule::check_alternative_bimodule;
use superalt::catalog;
use superalt::enveloping::{
    f_poly, operator_relations_check, u1_free_rank_check, u_char3_ideal, u_min_right_ideal, u_specialize, EnvelopeU1,
    U1Elem,
};
use superalt::suites::corrupt_table;
use superalt::{Field, Poly};

fn elem(u: &EnvelopeU1, cs: &[i64]) -> U1Elem {
    let f = u.field();
    let polys: Vec<Poly> = cs.chunks(4).map(|c| Poly::from_i64s(f, c)).collect();
    U1Elem([polys[0].clone(), polys[1].clone(), polys[2].clone(), polys[3].clone()])
}

fn arb_elem() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..5, 16)
}

proptest! {
    #[test]
    fn u1_is_associative(fi in 0usize..3, l in -2i64..3, x in arb_elem(), y in arb_elem(), z in arb_elem()) {
        let f: Field = ["Q", "GF(2)", "GF(7)"][fi].parse().unwrap();
        let u = EnvelopeU1::new(&f, &f.from_i64(l));
        let (x, y, z) = (elem(&u, &x), elem(&u, &y), elem(&u, &z));
        prop_assert_eq!(u.mul(&u.mul(&x, &y), &z), u.mul(&x, &u.mul(&y, &z)));
    }

    #[test]
    fn u1_format_parse_roundtrip(l in -2i64..3, x in arb_elem()) {
        let f: Field = "Q".parse().unwrap();
        let u = EnvelopeU1::new(&f, &f.from_i64(l));
        let x = elem(&u, &x);
        prop_assert_eq!(u.parse(&u.format(&x)).unwrap(), x);
    }

    #[test]
    fn t_is_central(l in -2i64..3, x in arb_elem()) {
        let f: Field = "GF(5)".parse().unwrap();
        let u = EnvelopeU1::new(&f, &f.from_i64(l));
        let x = elem(&u, &x);
        prop_assert_eq!(u.mul(&u.t(), &x), u.mul(&x, &u.t()));
    }
}

#[test]
fn defining_relations() {
    let f: Field = "GF(7)".parse().unwrap();
    let u = EnvelopeU1::new(&f, &f.one());
    let p = |s: &str| u.parse(s).unwrap();
    assert_eq!(u.mul(&p("a"), &p("a")), p("t"));
    assert_eq!(u.mul(&p("b"), &p("b")), p("t-2"));
    // a o b = ab + ba = lambda - t
    assert_eq!(u.add(&u.mul(&p("a"), &p("b")), &u.mul(&p("b"), &p("a"))), p("1-t"));
}

#[test]
fn ab_squared() {
    // (ab)(ab) = a(ba)b = (lambda - t)ab - t(t - 2 lambda); at lambda = 1 over GF(7)
    let f: Field = "GF(7)".parse().unwrap();
    let u = EnvelopeU1::new(&f, &f.one());
    let ab = u.parse("ab").unwrap();
    assert_eq!(u.format(&u.mul(&ab, &ab)), u.format(&u.parse("6*t^2+2*t+(6*t+1)*ab").unwrap()));
    assert_eq!(u.mul(&ab, &ab), u.parse("-t^2+2*t+(1-t)*ab").unwrap());
}

#[test]
fn free_rank_check() {
    for fs in ["Q", "GF(2)", "GF(3)"] {
        let f: Field = fs.parse().unwrap();
        for l in 0..3 {
            let r = u1_free_rank_check(&f, &f.from_i64(l), 6).unwrap();
            assert!(r.pass, "{fs} lambda={l}: {:?}", r.failure);
        }
    }
    let q: Field = "Q".parse().unwrap();
    assert!(u1_free_rank_check(&q, &q.zero(), 3).is_err());
}

#[test]
fn specialization_polynomial() {
    let q: Field = "Q".parse().unwrap();
    let s = u_specialize(&q, &q.zero(), &q.one()).unwrap();
    assert_eq!(s.algebra.dim(), 4);
    assert_eq!(s.f, f_poly(&q, &q.zero(), &q.one()));
    // alpha = 1, lambda = 0: u^2 + u + 1, irreducible over Q, split over GF(7)
    assert!(s.f_irreducible().unwrap());
    let g7: Field = "GF(7)".parse().unwrap();
    assert!(!u_specialize(&g7, &g7.zero(), &g7.one()).unwrap().f_irreducible().unwrap());
}

#[test]
fn char3_ideal() {
    let g3: Field = "GF(3)".parse().unwrap();
    let c = u_char3_ideal(&g3, &g3.one()).unwrap();
    assert!(c.square_zero);
    assert_eq!(c.ideal.dim(), 2);
    assert_eq!(c.quotient.names(), &["1+I".to_string(), "a+I".to_string()]);
    let a = c.quotient.basis(1);
    assert_eq!(c.quotient.mul(&a, &a), c.quotient.basis(0));
    assert!(u_char3_ideal(&"GF(5)".parse().unwrap(), &g3.one()).is_err());
}

#[test]
fn minimal_right_ideal_dimension() {
    let q: Field = "Q".parse().unwrap();
    let m = u_min_right_ideal(&q, &q.one(), &q.from_i64(2), &q.zero()).unwrap();
    assert_eq!(m.bimodule.dim(), 2);
    assert_eq!(m.ideal.dim(), 2);
}

#[test]
fn operator_relations_agree_with_alternativity() {
    let mut corpus = Vec::new();
    for inst in catalog::battery() {
        let v = inst.build().unwrap();
        if v.dim() <= 8 {
            corpus.push(corrupt_table(&v).unwrap());
            corpus.push(v);
        }
    }
    let mut fails = 0;
    for v in &corpus {
        let law = check_alternative_bimodule(v).unwrap().holds;
        let ops = operator_relations_check(v);
        assert_eq!(ops.holds, law);
        assert_eq!(ops.failure.is_some(), !law);
        fails += usize::from(!law);
    }
    assert_eq!(fails * 2, corpus.len());
}

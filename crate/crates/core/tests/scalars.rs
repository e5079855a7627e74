use proptest::prelude::*;
use superalt::scalars::{is_irreducible, parse_poly, poly_factor, poly_roots};
use superalt::{Field, Poly, Scalar};

fn fields() -> Vec<Field> {
    ["Q", "GF(2)", "GF(7)", "GF(13)", "GF(2)[w]/(w^3+w+1)", "GF(3)[w]/(w^2+1)", "Q[w]/(w^2+w+1)", "Q[s]/(s^2-2)"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

/// c0 + c1 g + c2 g^2 / d with g the field generator, if any.
fn scalar(f: &Field, c: [i64; 3], d: i64) -> Scalar {
    let mut x = f.from_i64(c[0]);
    if let Some(g) = f.generator() {
        x = f.add(&x, &f.mul(&f.from_i64(c[1]), &g));
        x = f.add(&x, &f.mul(&f.from_i64(c[2]), &f.mul(&g, &g)));
    }
    let d = f.from_i64(d);
    if f.is_zero(&d) {
        x
    } else {
        f.div(&x, &d).unwrap()
    }
}

fn arb() -> impl Strategy<Value = (usize, [i64; 3], i64)> {
    (0..8usize, prop::array::uniform3(-20i64..20), 1i64..9)
}

proptest! {
    #[test]
    fn field_axioms(a in arb(), b in arb(), c in arb()) {
        let fs = fields();
        let f = &fs[a.0];
        let (x, y, z) = (scalar(f, a.1, a.2), scalar(f, b.1, b.2), scalar(f, c.1, c.2));
        prop_assert_eq!(f.add(&x, &y), f.add(&y, &x));
        prop_assert_eq!(f.mul(&x, &y), f.mul(&y, &x));
        prop_assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
        prop_assert_eq!(f.mul(&x, &f.add(&y, &z)), f.add(&f.mul(&x, &y), &f.mul(&x, &z)));
        prop_assert_eq!(f.add(&x, &f.neg(&x)), f.zero());
        if !f.is_zero(&x) {
            prop_assert!(f.is_one(&f.mul(&x, &f.inv(&x).unwrap())));
        } else {
            prop_assert!(f.inv(&x).is_err());
        }
    }

    #[test]
    fn scalar_print_parse_roundtrip(a in arb()) {
        let fs = fields();
        let f = &fs[a.0];
        let x = scalar(f, a.1, a.2);
        prop_assert_eq!(f.parse_scalar(&f.fmt_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn factors_multiply_back(fi in 0..8usize, cs in prop::collection::vec(-6i64..6, 2..6)) {
        let fs = fields();
        let f = &fs[fi];
        let p = Poly::from_i64s(f, &cs);
        prop_assume!(!p.is_constant());
        let facs = poly_factor(&p).unwrap();
        let mut prod = Poly::one(f);
        for (g, m) in &facs {
            prop_assert!(is_irreducible(g).unwrap());
            prop_assert!(f.is_one(&g.lead()));
            prod = prod.mul(&g.pow(*m as u64));
        }
        prop_assert_eq!(prod, p.monic());
        for r in poly_roots(&p).unwrap() {
            prop_assert!(f.is_zero(&p.eval(&r)));
        }
    }
}

#[test]
fn finite_field_orders_and_characteristics() {
    let f: Field = "GF(2)[w]/(w^3+w+1)".parse().unwrap();
    assert_eq!(f.order_u64(), Some(8));
    assert_eq!(f.characteristic(), 2);
    assert_eq!(f.enumerate().unwrap().len(), 8);
    // every nonzero element of GF(8) has multiplicative order dividing 7
    for x in f.enumerate().unwrap().iter().filter(|x| !f.is_zero(x)) {
        assert!(f.is_one(&f.pow(x, 7)));
    }
    assert!("Q".parse::<Field>().unwrap().order_u64().is_none());
}

#[test]
fn reducible_minimal_polynomials_are_rejected() {
    assert!("GF(5)[w]/(w^2-4)".parse::<Field>().is_err());
    assert!("Q[w]/(w^2-1)".parse::<Field>().is_err());
    // prime powers are written as explicit extensions
    assert!("GF(4)".parse::<Field>().is_err());
}

#[test]
fn cube_roots_of_unity() {
    let f: Field = "Q[w]/(w^2+w+1)".parse().unwrap();
    let p = parse_poly(&f, "u", "u^3-1").unwrap();
    let roots = poly_roots(&p).unwrap();
    assert_eq!(roots.len(), 3);
    let w = f.generator().unwrap();
    assert!(roots.contains(&w) && roots.contains(&f.mul(&w, &w)) && roots.contains(&f.one()));
    // over Q only the rational root survives
    let q: Field = "Q".parse().unwrap();
    assert_eq!(poly_roots(&parse_poly(&q, "u", "u^3-1").unwrap()).unwrap(), vec![q.one()]);
}

#[test]
fn factorization_over_q_and_towers() {
    let q: Field = "Q".parse().unwrap();
    let facs = poly_factor(&parse_poly(&q, "x", "x^4-4").unwrap()).unwrap();
    let text: Vec<String> = facs.iter().map(|(g, m)| format!("{}^{m}", g.to_string_in("x"))).collect();
    assert_eq!(facs.len(), 2, "{text:?}");
    let s: Field = "Q[s]/(s^2-2)".parse().unwrap();
    // x^2 - 2 splits once sqrt 2 is adjoined
    assert_eq!(poly_roots(&parse_poly(&s, "x", "x^4-4").unwrap()).unwrap().len(), 2);
    assert!(is_irreducible(&parse_poly(&q, "x", "x^2+x+1").unwrap()).unwrap());
    let g9: Field = "GF(3)[w]/(w^2+1)".parse().unwrap();
    assert!(!is_irreducible(&parse_poly(&g9, "x", "x^2+1").unwrap()).unwrap());
}

#[test]
fn rational_arithmetic_is_exact() {
    let q: Field = "Q".parse().unwrap();
    let third = q.parse_scalar("1/3").unwrap();
    let sum = q.add(&q.add(&third, &third), &third);
    assert!(q.is_one(&sum));
    assert_eq!(q.fmt_scalar(&q.parse_scalar("-6/4").unwrap()), "-3/2");
}

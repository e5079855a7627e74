//! Polynomial factorization.
//!
//! * finite fields: squarefree split, distinct-degree, then equal-degree
//!   splitting (Cantor-Zassenhaus; trace map in characteristic 2) driven by a
//!   fixed-seed generator;
//! * Q: Zassenhaus (modular factorization, Hensel lifting, recombination);
//! * extensions of characteristic 0: Trager's norm method, recursively.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{is_prime_u64, Field, Scalar};
use super::poly::Poly;
use crate::error::{Error, Result};

const SEED: u64 = 0x5eed_f00d;

/// Factor `f` into monic irreducibles with multiplicities. The product of
/// the factors equals `f` up to the leading coefficient. Factors are sorted
/// by degree, then by coefficients.
pub fn poly_factor(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    if f.is_zero() {
        return Err(Error::Precondition("cannot factor the zero polynomial".into()));
    }
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let field = f.field();
    let f = f.monic();
    let raw = if field.is_finite() {
        ff_factor(&f)
    } else if field.base().is_none() {
        q_factor(&f)
    } else {
        let mut out = Vec::new();
        for (g, m) in squarefree_char0(&f) {
            for h in trager(&g)? {
                out.push((h, m));
            }
        }
        out
    };
    Ok(normalize(raw))
}

/// Roots of `f` in its field (with multiplicity ignored), sorted.
pub fn poly_roots(f: &Poly) -> Result<Vec<Scalar>> {
    let field = f.field().clone();
    Ok(poly_factor(f)?
        .into_iter()
        .filter(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| field.neg(&g.coeff(0)))
        .collect())
}

/// Irreducibility over the coefficient field (degree >= 1).
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    if f.is_constant() {
        return Ok(false);
    }
    let fs = poly_factor(f)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

fn normalize(raw: Vec<(Poly, usize)>) -> Vec<(Poly, usize)> {
    let mut out: Vec<(Poly, usize)> = Vec::new();
    for (g, m) in raw {
        let g = g.monic();
        if g.is_constant() {
            continue;
        }
        if let Some(e) = out.iter_mut().find(|(h, _)| *h == g) {
            e.1 += m;
        } else {
            out.push((g, m));
        }
    }
    out.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    out
}

// ---------------------------------------------------------------- finite fields

fn ff_factor(f: &Poly) -> Vec<(Poly, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    for (g, m) in ff_squarefree(f) {
        for (h, d) in ddf(&g) {
            for k in edf(&h, d, &mut rng) {
                out.push((k, m));
            }
        }
    }
    out
}

fn pth_root(f: &Poly) -> Poly {
    let field = f.field();
    let p = field.characteristic() as usize;
    let e = field.order().unwrap() / BigUint::from(p);
    let n = f.degree().unwrap_or(0) / p;
    Poly::new(field, (0..=n).map(|i| field.pow_big(&f.coeff(i * p), &e)).collect())
}

fn ff_squarefree(f: &Poly) -> Vec<(Poly, usize)> {
    let p = f.field().characteristic() as usize;
    let mut out = Vec::new();
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in ff_squarefree(&pth_root(f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.quo(&c);
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.quo(&y);
        if !z.is_constant() {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.quo(&w);
    }
    if !c.is_constant() {
        for (g, m) in ff_squarefree(&pth_root(&c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn ddf(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field();
    let q = field.order().unwrap();
    let x = Poly::x(field);
    let mut f = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while let Some(n) = f.degree() {
        if n == 0 {
            break;
        }
        d += 1;
        if 2 * d > n {
            out.push((f.clone(), n));
            break;
        }
        h = h.powmod(&q, &f);
        let g = h.sub(&x).gcd(&f);
        if !g.is_constant() {
            f = f.quo(&g);
            h = h.rem(&f);
            out.push((g, d));
        }
    }
    out
}

/// Equal-degree splitting of a product of irreducibles of degree `d`.
fn edf(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field();
    let q = field.order().unwrap();
    let p = field.characteristic();
    loop {
        let r = Poly::new(field, (0..n).map(|_| field.random(rng)).collect());
        if r.is_constant() {
            continue;
        }
        let s = if p == 2 {
            let k = (q.bits() - 1) as usize;
            let mut acc = r.rem(f);
            let mut t = acc.clone();
            for _ in 1..k * d {
                t = t.mulmod(&t, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (q.pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            r.powmod(&e, f).sub(&Poly::one(field))
        };
        let g = s.gcd(f);
        if !g.is_constant() && g.degree() != Some(n) {
            let mut out = edf(&g, d, rng);
            out.extend(edf(&f.quo(&g), d, rng));
            return out;
        }
    }
}

// ---------------------------------------------------------------- characteristic 0

/// Yun's squarefree decomposition (characteristic 0).
fn squarefree_char0(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let df = f.derivative();
    let b = f.gcd(&df);
    let mut c = f.quo(&b);
    let mut d = df.quo(&b).sub(&c.derivative());
    let mut i = 1;
    while !c.is_constant() {
        let a = c.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        c = c.quo(&a);
        d = d.quo(&a).sub(&c.derivative());
        i += 1;
    }
    out
}

type ZPoly = Vec<BigInt>;

fn z_trim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn z_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    z_trim(v)
}

fn z_mod(a: &ZPoly, m: &BigInt) -> ZPoly {
    z_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn z_primitive(a: &ZPoly) -> ZPoly {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
    }
    if g.is_zero() {
        return a.clone();
    }
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    a.iter().map(|c| c / &g).collect()
}

fn q_to_z(f: &Poly) -> ZPoly {
    let mut den = BigInt::one();
    for c in f.coeffs() {
        if let Scalar::Q(q) = c {
            den = den.lcm(q.denom());
        }
    }
    let v: ZPoly = f
        .coeffs()
        .iter()
        .map(|c| match c {
            Scalar::Q(q) => q.numer() * (&den / q.denom()),
            _ => unreachable!(),
        })
        .collect();
    z_primitive(&v)
}

fn z_to_q(a: &ZPoly) -> Poly {
    let q = Field::rationals();
    Poly::new(&q, a.iter().map(|c| Scalar::Q(BigRational::from_integer(c.clone()))).collect())
}

fn z_to_fp(a: &ZPoly, fp: &Field) -> Poly {
    Poly::new(fp, a.iter().map(|c| fp.from_bigint(c)).collect())
}

fn fp_to_z(a: &Poly) -> ZPoly {
    a.coeffs()
        .iter()
        .map(|c| match c {
            Scalar::Fp(x) => BigInt::from(*x),
            _ => unreachable!(),
        })
        .collect()
}

fn q_factor(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    for (g, m) in squarefree_char0(f) {
        for h in z_factor_squarefree(&q_to_z(&g)) {
            out.push((z_to_q(&h), m));
        }
    }
    out
}

fn isqrt_ceil(n: &BigInt) -> BigInt {
    let r = n.sqrt();
    if &(&r * &r) < n {
        r + 1
    } else {
        r
    }
}

/// Factor a primitive squarefree integer polynomial into primitive factors.
fn z_factor_squarefree(g: &ZPoly) -> Vec<ZPoly> {
    let n = g.len() - 1;
    if n <= 1 {
        return vec![g.clone()];
    }
    let lc = g.last().unwrap().clone();
    // pick the good prime (of the first few) giving the fewest modular factors
    let mut best: Option<(u64, Vec<Poly>)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < 6 {
        p += 1;
        if !is_prime_u64(p) || (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Field::prime(p).unwrap();
        let gp = z_to_fp(g, &fp);
        if !gp.gcd(&gp.derivative()).is_constant() {
            continue;
        }
        tried += 1;
        let facs: Vec<Poly> = ff_factor(&gp.monic()).into_iter().map(|(h, _)| h).collect();
        if best.as_ref().map_or(true, |(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
    }
    let (p, facs) = best.unwrap();
    if facs.len() == 1 {
        return vec![g.clone()];
    }
    // coefficient bound for factors of lc*g
    let norm2: BigInt = g.iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * isqrt_ceil(&norm2) * lc.abs();
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    let mut k = 1;
    while pk <= &bound * 2 + 1 {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_multi(g, &facs, p, k);
    recombine(g.clone(), lifted, &pk)
}

fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    e.x.mod_floor(m)
}

fn hensel_multi(g: &ZPoly, facs: &[Poly], p: u64, k: usize) -> Vec<ZPoly> {
    let pk = BigInt::from(p).pow(k as u32);
    if facs.len() == 1 {
        let li = inv_mod(g.last().unwrap(), &pk);
        return vec![z_mod(&g.iter().map(|c| c * &li).collect(), &pk)];
    }
    let fp = facs[0].field().clone();
    let a0 = facs[0].clone();
    let mut b0 = Poly::constant(&fp, fp.from_bigint(g.last().unwrap()));
    for h in &facs[1..] {
        b0 = b0.mul(h);
    }
    let (a, b) = hensel_pair(g, &a0, &b0, p, k);
    let mut out = vec![a];
    out.extend(hensel_multi(&b, &facs[1..], p, k));
    out
}

/// Lift g = a0*b0 (mod p), a0 monic and coprime to b0, to a factorization
/// modulo p^k with a monic.
fn hensel_pair(g: &ZPoly, a0: &Poly, b0: &Poly, p: u64, k: usize) -> (ZPoly, ZPoly) {
    let fp = a0.field().clone();
    let (one, s, t) = a0.xgcd(b0);
    debug_assert!(one.is_one());
    let pb = BigInt::from(p);
    let mut a = fp_to_z(a0);
    let mut b = fp_to_z(b0);
    let mut m = pb.clone();
    for _ in 1..k {
        let ab = z_mul(&a, &b);
        let len = g.len().max(ab.len());
        let diff: ZPoly = (0..len)
            .map(|i| g.get(i).cloned().unwrap_or_default() - ab.get(i).cloned().unwrap_or_default())
            .collect();
        let e: ZPoly = diff
            .iter()
            .map(|c| {
                debug_assert!((c % &m).is_zero());
                c / &m
            })
            .collect();
        let ep = z_to_fp(&e, &fp);
        let (q, da) = ep.mul(&t).divrem(a0).unwrap();
        let db = ep.mul(&s).add(&q.mul(b0));
        let da = fp_to_z(&da);
        let db = fp_to_z(&db);
        let upd = |x: &mut ZPoly, d: &ZPoly| {
            if x.len() < d.len() {
                x.resize(d.len(), BigInt::zero());
            }
            for (i, c) in d.iter().enumerate() {
                x[i] += c * &m;
            }
        };
        upd(&mut a, &da);
        upd(&mut b, &db);
        m *= &pb;
    }
    (z_mod(&a, &m), z_mod(&b, &m))
}

fn symmetric(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    z_trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn z_divides(d: &ZPoly, g: &ZPoly) -> Option<ZPoly> {
    let (q, r) = z_to_q(g).divrem(&z_to_q(d)).ok()?;
    if !r.is_zero() {
        return None;
    }
    let mut out = Vec::new();
    for c in q.coeffs() {
        match c {
            Scalar::Q(x) if x.is_integer() => out.push(x.numer().clone()),
            _ => return None,
        }
    }
    Some(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn recombine(mut g: ZPoly, mut lifted: Vec<ZPoly>, pk: &BigInt) -> Vec<ZPoly> {
    let mut result = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut hit = None;
        for subset in combinations(lifted.len(), s) {
            let mut cand = vec![g.last().unwrap().clone()];
            for &i in &subset {
                cand = z_mod(&z_mul(&cand, &lifted[i]), pk);
            }
            let cand = z_primitive(&symmetric(&cand, pk));
            if let Some(q) = z_divides(&cand, &g) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                result.push(cand);
                g = z_primitive(&q);
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if g.len() > 1 {
        result.push(g);
    }
    result
}

// ---------------------------------------------------------------- Trager

fn det(field: &Field, mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    let mut d = field.one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !field.is_zero(&m[r][c])) else {
            return field.zero();
        };
        if piv != c {
            m.swap(piv, c);
            d = field.neg(&d);
        }
        d = field.mul(&d, &m[c][c]);
        let inv = field.inv(&m[c][c]).unwrap();
        for r in c + 1..n {
            if field.is_zero(&m[r][c]) {
                continue;
            }
            let fac = field.mul(&m[r][c], &inv);
            for j in c..n {
                let t = field.mul(&fac, &m[c][j]);
                m[r][j] = field.sub(&m[r][j], &t);
            }
        }
    }
    d
}

/// Norm from an extension to its base field.
pub(crate) fn element_norm(ext: &Field, c: &Scalar) -> Scalar {
    let base = ext.base().unwrap();
    let d = ext.ext_degree();
    let gen = ext.generator().unwrap();
    let mut cols = Vec::with_capacity(d);
    let mut pw = ext.one();
    for _ in 0..d {
        match ext.mul(c, &pw) {
            Scalar::Ext(v) => cols.push(v),
            _ => unreachable!(),
        }
        pw = ext.mul(&pw, &gen);
    }
    let rows: Vec<Vec<Scalar>> = (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect();
    det(base, rows)
}

fn interpolate(field: &Field, xs: &[Scalar], ys: &[Scalar]) -> Poly {
    // Newton divided differences
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = field.sub(&coef[i], &coef[i - 1]);
            let den = field.sub(&xs[i], &xs[i - j]);
            coef[i] = field.div(&num, &den).unwrap();
        }
    }
    let mut p = Poly::constant(field, coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        let lin = Poly::new(field, vec![field.neg(&xs[i]), field.one()]);
        p = p.mul(&lin).add(&Poly::constant(field, coef[i].clone()));
    }
    p
}

fn poly_norm(g: &Poly) -> Poly {
    let ext = g.field();
    let base = ext.base().unwrap();
    let deg = g.degree().unwrap() * ext.ext_degree();
    let xs: Vec<Scalar> = (0..=deg as i64).map(|i| base.from_i64(i)).collect();
    let ys: Vec<Scalar> = xs
        .iter()
        .map(|x| element_norm(ext, &g.eval(&ext.embed_base(x))))
        .collect();
    interpolate(base, &xs, &ys)
}

/// Factor a monic squarefree polynomial over a characteristic-0 extension.
fn trager(f: &Poly) -> Result<Vec<Poly>> {
    if f.degree() == Some(1) {
        return Ok(vec![f.clone()]);
    }
    let ext = f.field().clone();
    let alpha = ext.generator().unwrap();
    for s in (0..40i64).map(|i| if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 }) {
        let sa = ext.mul(&ext.from_i64(s), &alpha);
        let shift = Poly::new(&ext, vec![ext.neg(&sa), ext.one()]);
        let g = f.compose(&shift);
        let n = poly_norm(&g);
        if !n.gcd(&n.derivative()).is_constant() {
            continue;
        }
        let nf = poly_factor(&n)?;
        if nf.len() == 1 {
            return Ok(vec![f.clone()]);
        }
        let back = Poly::new(&ext, vec![sa.clone(), ext.one()]);
        let mut out = Vec::new();
        for (ni, _) in nf {
            let nik = ni.map(&ext, |c| ext.embed_base(c));
            let h = g.gcd(&nik);
            out.push(h.compose(&back).monic());
        }
        return Ok(out);
    }
    Err(Error::Unsupported("no squarefree norm found".into()))
}

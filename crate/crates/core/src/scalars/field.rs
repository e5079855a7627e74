//! Exact fields: GF(p), Q, and simple algebraic extensions F[x]/(m(x)).

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use super::poly::Poly;
use crate::error::{Error, Result};

/// Element of some [`Field`]. The representation is canonical for the
/// field it belongs to, so derived equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    /// Least nonnegative residue.
    Fp(u64),
    /// Reduced fraction.
    Q(BigRational),
    /// Coefficients (low to high) in the base field, length = extension degree.
    Ext(Vec<Scalar>),
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Kind {
    Prime(u64),
    Rational,
    Extension(Extension),
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Extension {
    base: Field,
    var: String,
    /// Monic minimal polynomial, low to high, length degree+1.
    minpoly: Vec<Scalar>,
}

/// Cheap-to-clone handle on an exact field.
#[derive(Clone, Debug)]
pub struct Field(Arc<Kind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

/// Largest field that `enumerate` will list.
pub const ENUMERATION_CAP: u64 = 1 << 20;

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime_u64(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field(Arc::new(Kind::Prime(p))))
    }

    pub fn rationals() -> Field {
        Field(Arc::new(Kind::Rational))
    }

    /// Simple extension `base[var]/(minpoly)`. The polynomial is made monic
    /// and must be irreducible over `base`.
    pub fn extension(base: &Field, var: &str, minpoly: &Poly) -> Result<Field> {
        if minpoly.field() != base {
            return Err(Error::InvalidField("minimal polynomial over the wrong field".into()));
        }
        let deg = match minpoly.degree() {
            None => return Err(Error::InvalidField("zero minimal polynomial".into())),
            Some(0) => return Err(Error::InvalidField("constant minimal polynomial".into())),
            Some(d) => d,
        };
        if !is_identifier(var) {
            return Err(Error::InvalidField(format!("bad generator name {var:?}")));
        }
        if base.lookup_var(var).is_some() {
            return Err(Error::InvalidField(format!("generator name {var} already used in the base")));
        }
        let m = minpoly.monic();
        let factors = super::factor::poly_factor(&m)?;
        if factors.len() != 1 || factors[0].1 != 1 || factors[0].0.degree() != Some(deg) {
            return Err(Error::InvalidField(format!(
                "{} is reducible over {}",
                m.to_string_in(var),
                base
            )));
        }
        Ok(Field(Arc::new(Kind::Extension(Extension {
            base: base.clone(),
            var: var.to_string(),
            minpoly: m.coeffs().to_vec(),
        }))))
    }

    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            Kind::Prime(p) => *p,
            Kind::Rational => 0,
            Kind::Extension(e) => e.base.characteristic(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }

    /// Number of elements, when finite.
    pub fn order(&self) -> Option<BigUint> {
        match &*self.0 {
            Kind::Prime(p) => Some(BigUint::from(*p)),
            Kind::Rational => None,
            Kind::Extension(e) => e.base.order().map(|q| q.pow(e.degree() as u32)),
        }
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().and_then(|q| q.to_u64())
    }

    /// The base field of an extension.
    pub fn base(&self) -> Option<&Field> {
        match &*self.0 {
            Kind::Extension(e) => Some(&e.base),
            _ => None,
        }
    }

    /// Degree over the immediate base (1 for prime fields and Q).
    pub fn ext_degree(&self) -> usize {
        match &*self.0 {
            Kind::Extension(e) => e.degree(),
            _ => 1,
        }
    }

    pub fn var(&self) -> Option<&str> {
        match &*self.0 {
            Kind::Extension(e) => Some(&e.var),
            _ => None,
        }
    }

    /// Monic minimal polynomial of the generator of an extension.
    pub fn minpoly(&self) -> Option<Poly> {
        match &*self.0 {
            Kind::Extension(e) => Some(Poly::new(&e.base, e.minpoly.clone())),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match &*self.0 {
            Kind::Prime(_) => Scalar::Fp(0),
            Kind::Rational => Scalar::Q(BigRational::zero()),
            Kind::Extension(e) => Scalar::Ext(vec![e.base.zero(); e.degree()]),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match &*self.0 {
            Kind::Prime(p) => Scalar::Fp(n.mod_floor(&BigInt::from(*p)).to_u64().unwrap()),
            Kind::Rational => Scalar::Q(BigRational::from_integer(n.clone())),
            Kind::Extension(e) => e.embed(e.base.from_bigint(n)),
        }
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        let n = self.from_bigint(q.numer());
        let d = self.from_bigint(q.denom());
        self.div(&n, &d)
    }

    /// Image of an element of the immediate base field.
    pub fn embed_base(&self, c: &Scalar) -> Scalar {
        match &*self.0 {
            Kind::Extension(e) => e.embed(c.clone()),
            _ => c.clone(),
        }
    }

    /// The adjoined generator of an extension.
    pub fn generator(&self) -> Option<Scalar> {
        match &*self.0 {
            Kind::Extension(e) => {
                let mut v = vec![e.base.zero(); e.degree()];
                if e.degree() == 1 {
                    // x = -m0 when the minimal polynomial is linear
                    v[0] = e.base.neg(&e.minpoly[0]);
                } else {
                    v[1] = e.base.one();
                }
                Some(Scalar::Ext(v))
            }
            _ => None,
        }
    }

    /// Value of a named generator anywhere in the tower.
    pub fn lookup_var(&self, name: &str) -> Option<Scalar> {
        match &*self.0 {
            Kind::Extension(e) => {
                if e.var == name {
                    self.generator()
                } else {
                    e.base.lookup_var(name).map(|c| e.embed(c))
                }
            }
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fp(x) => *x == 0,
            Scalar::Q(q) => q.is_zero(),
            Scalar::Ext(v) => {
                let b = self.base().expect("extension element in non-extension field");
                v.iter().all(|c| b.is_zero(c))
            }
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        *a == self.one()
    }

    /// Whether `a` is a well-formed element of this field.
    pub fn contains(&self, a: &Scalar) -> bool {
        match (&*self.0, a) {
            (Kind::Prime(p), Scalar::Fp(x)) => x < p,
            (Kind::Rational, Scalar::Q(_)) => true,
            (Kind::Extension(e), Scalar::Ext(v)) => {
                v.len() == e.degree() && v.iter().all(|c| e.base.contains(c))
            }
            _ => false,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (Kind::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                let s = *x as u128 + *y as u128;
                Scalar::Fp((s % *p as u128) as u64)
            }
            (Kind::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (Kind::Extension(e), Scalar::Ext(x), Scalar::Ext(y)) => {
                Scalar::Ext(x.iter().zip(y).map(|(s, t)| e.base.add(s, t)).collect())
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (&*self.0, a) {
            (Kind::Prime(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            (Kind::Rational, Scalar::Q(x)) => Scalar::Q(-x),
            (Kind::Extension(e), Scalar::Ext(x)) => {
                Scalar::Ext(x.iter().map(|s| e.base.neg(s)).collect())
            }
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (&*self.0, a, b) {
            (Kind::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Kind::Rational, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (Kind::Extension(e), Scalar::Ext(x), Scalar::Ext(y)) => Scalar::Ext(e.mul(x, y)),
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(match (&*self.0, a) {
            (Kind::Prime(p), Scalar::Fp(x)) => {
                let (g, s, _) = ext_gcd_i128(*x as i128, *p as i128);
                debug_assert_eq!(g, 1);
                Scalar::Fp(s.rem_euclid(*p as i128) as u64)
            }
            (Kind::Rational, Scalar::Q(x)) => Scalar::Q(x.recip()),
            (Kind::Extension(e), Scalar::Ext(x)) => Scalar::Ext(e.inv(x)),
            _ => panic!("scalar does not belong to field {self}"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut r = self.one();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        r
    }

    pub fn pow_big(&self, a: &Scalar, e: &BigUint) -> Scalar {
        let mut r = self.one();
        for i in (0..e.bits()).rev() {
            r = self.mul(&r, &r);
            if e.bit(i) {
                r = self.mul(&r, a);
            }
        }
        r
    }

    /// Signed integer power; negative exponents invert.
    pub fn pow_i64(&self, a: &Scalar, e: i64) -> Result<Scalar> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(&self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// All elements, in a fixed order starting with 0, 1 for prime fields.
    /// Only available for finite fields of order at most [`ENUMERATION_CAP`].
    pub fn enumerate(&self) -> Result<Vec<Scalar>> {
        let q = self
            .order_u64()
            .ok_or_else(|| Error::Precondition(format!("{self} is infinite; cannot enumerate")))?;
        if q > ENUMERATION_CAP {
            return Err(Error::SizeCap(format!("{self} has {q} elements")));
        }
        Ok(match &*self.0 {
            Kind::Prime(p) => (0..*p).map(Scalar::Fp).collect(),
            Kind::Rational => unreachable!(),
            Kind::Extension(e) => {
                let base = e.base.enumerate()?;
                let mut out = Vec::with_capacity(q as usize);
                let d = e.degree();
                let mut idx = vec![0usize; d];
                loop {
                    out.push(Scalar::Ext(idx.iter().map(|&i| base[i].clone()).collect()));
                    let mut k = 0;
                    loop {
                        if k == d {
                            return Ok(out);
                        }
                        idx[k] += 1;
                        if idx[k] < base.len() {
                            break;
                        }
                        idx[k] = 0;
                        k += 1;
                    }
                }
            }
        })
    }

    /// A random element. Uniform for finite fields; small fractions over Q.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match &*self.0 {
            Kind::Prime(p) => Scalar::Fp(rng.gen_range(0..*p)),
            Kind::Rational => {
                let n: i64 = rng.gen_range(-6..=6);
                let d: i64 = rng.gen_range(1..=4);
                Scalar::Q(BigRational::new(n.into(), d.into()))
            }
            Kind::Extension(e) => Scalar::Ext((0..e.degree()).map(|_| e.base.random(rng)).collect()),
        }
    }

    /// Canonical textual form of an element; `parse_scalar` inverts it.
    pub fn fmt_scalar(&self, a: &Scalar) -> String {
        match (&*self.0, a) {
            (Kind::Prime(_), Scalar::Fp(x)) => x.to_string(),
            (Kind::Rational, Scalar::Q(q)) => q.to_string(),
            (Kind::Extension(e), Scalar::Ext(v)) => format_poly(&e.base, v, &e.var),
            _ => panic!("scalar does not belong to field {self}"),
        }
    }

    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let e = super::expr::parse_expr(s)?;
        super::expr::eval_scalar(self, &e)
    }

    /// Rational value of a scalar in Q, or the integer residue in GF(p).
    pub fn as_rational(&self, a: &Scalar) -> Option<BigRational> {
        match a {
            Scalar::Q(q) => Some(q.clone()),
            Scalar::Fp(x) => Some(BigRational::from_integer((*x).into())),
            Scalar::Ext(_) => None,
        }
    }
}

impl Extension {
    fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    fn embed(&self, c: Scalar) -> Scalar {
        let mut v = vec![self.base.zero(); self.degree()];
        v[0] = c;
        Scalar::Ext(v)
    }

    fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = &self.base;
        let d = self.degree();
        let mut prod = vec![f.zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                prod[i + j] = f.add(&prod[i + j], &f.mul(x, y));
            }
        }
        for k in (d..2 * d - 1).rev() {
            let c = std::mem::replace(&mut prod[k], f.zero());
            if f.is_zero(&c) {
                continue;
            }
            for i in 0..d {
                let t = f.mul(&c, &self.minpoly[i]);
                prod[k - d + i] = f.sub(&prod[k - d + i], &t);
            }
        }
        prod.truncate(d);
        prod
    }

    fn inv(&self, a: &[Scalar]) -> Vec<Scalar> {
        let p = Poly::new(&self.base, a.to_vec());
        let m = Poly::new(&self.base, self.minpoly.clone());
        let (g, s, _) = p.xgcd(&m);
        // g is a nonzero constant because m is irreducible
        let ginv = self.base.inv(&g.coeff(0)).expect("minimal polynomial not irreducible");
        let s = s.scale(&ginv);
        let mut v = s.coeffs().to_vec();
        v.resize(self.degree(), self.base.zero());
        v
    }
}

fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && ch.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Compact polynomial text in `var`, highest degree first, e.g. `w^2+2*w-1`.
pub(crate) fn format_poly(f: &Field, coeffs: &[Scalar], var: &str) -> String {
    let mut out = String::new();
    for k in (0..coeffs.len()).rev() {
        let c = &coeffs[k];
        if f.is_zero(c) {
            continue;
        }
        let cs = f.fmt_scalar(c);
        let composite = cs.len() > 1 && cs[1..].contains(['+', '-']);
        let term = if k == 0 {
            cs
        } else {
            let mono = if k == 1 { var.to_string() } else { format!("{var}^{k}") };
            if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else if composite {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            }
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Kind::Prime(p) => write!(f, "GF({p})"),
            Kind::Rational => write!(f, "Q"),
            Kind::Extension(e) => write!(
                f,
                "{}[{}]/({})",
                e.base,
                e.var,
                format_poly(&e.base, &e.minpoly, &e.var)
            ),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Field> {
        super::expr::parse_field(s)
    }
}

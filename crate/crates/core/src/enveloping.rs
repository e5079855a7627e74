//! The universal unital multiplicative enveloping superalgebra of
//! A = F1 + Fx (x^2 = λ) in closed form: a free F[t]-module on 1, a, b, ab
//! with a^2 = t, b^2 = t - 2λ, ab + ba = λ - t, where a = R_x and b = L_x.
//! Also the defining relations of the universal envelope, read as operator
//! identities on concrete bimodules.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bimodule::SuperBimodule;
use crate::constructions::f1x;
use crate::error::{pre, Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalars::expr::{eval, parse_expr, ExprTarget};
use crate::scalars::{is_irreducible, Field, Poly, Scalar};
use crate::superalgebra::{Element, SuperAlgebra};

pub const BASIS: [&str; 4] = ["1", "a", "b", "ab"];
pub const PARITY: [u8; 4] = [0, 1, 1, 0];

/// p0 + p1 a + p2 b + p3 ab with p_i in F[t].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct U1Elem(pub [Poly; 4]);

#[derive(Clone, Debug)]
pub struct EnvelopeU1 {
    field: Field,
    lambda: Scalar,
}

impl EnvelopeU1 {
    pub fn new(field: &Field, lambda: &Scalar) -> EnvelopeU1 {
        EnvelopeU1 { field: field.clone(), lambda: lambda.clone() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn zero(&self) -> U1Elem {
        let z = Poly::zero(&self.field);
        U1Elem([z.clone(), z.clone(), z.clone(), z])
    }

    /// p times the i-th basis element.
    pub fn term(&self, i: usize, p: Poly) -> U1Elem {
        let mut x = self.zero();
        x.0[i] = p;
        x
    }

    pub fn basis(&self, i: usize) -> U1Elem {
        self.term(i, Poly::one(&self.field))
    }

    pub fn t(&self) -> U1Elem {
        self.term(0, Poly::x(&self.field))
    }

    fn c(&self, c: Scalar) -> Poly {
        Poly::constant(&self.field, c)
    }

    /// e_i e_j for e = (1, a, b, ab).
    fn basis_product(&self, i: usize, j: usize) -> U1Elem {
        let f = &self.field;
        let t = Poly::x(f);
        let lam = self.c(self.lambda.clone());
        let t2l = t.sub(&lam.scale(&f.from_i64(2))); // t - 2λ
        let lmt = lam.sub(&t); // λ - t
        let mk = |ps: [Poly; 4]| U1Elem(ps);
        let z = Poly::zero(f);
        let one = Poly::one(f);
        match (i, j) {
            (0, k) | (k, 0) => self.basis(k),
            (1, 1) => self.term(0, t),
            (1, 2) => self.basis(3),
            (1, 3) => self.term(2, t),
            (2, 1) => mk([lmt, z.clone(), z, one.neg()]),
            (2, 2) => self.term(0, t2l),
            (2, 3) => mk([z.clone(), t2l.neg(), lmt, z]),
            (3, 1) => mk([z.clone(), lmt, t.neg(), z]),
            (3, 2) => self.term(1, t2l),
            (3, 3) => mk([t.mul(&t2l).neg(), z.clone(), z, lmt]),
            _ => unreachable!(),
        }
    }

    pub fn add(&self, x: &U1Elem, y: &U1Elem) -> U1Elem {
        U1Elem(std::array::from_fn(|i| x.0[i].add(&y.0[i])))
    }

    pub fn sub(&self, x: &U1Elem, y: &U1Elem) -> U1Elem {
        U1Elem(std::array::from_fn(|i| x.0[i].sub(&y.0[i])))
    }

    pub fn scale(&self, p: &Poly, x: &U1Elem) -> U1Elem {
        U1Elem(std::array::from_fn(|i| x.0[i].mul(p)))
    }

    /// Product in normal form; t is central so coefficients multiply freely.
    pub fn mul(&self, x: &U1Elem, y: &U1Elem) -> U1Elem {
        let mut out = self.zero();
        for i in 0..4 {
            if x.0[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if y.0[j].is_zero() {
                    continue;
                }
                let c = x.0[i].mul(&y.0[j]);
                out = self.add(&out, &self.scale(&c, &self.basis_product(i, j)));
            }
        }
        out
    }

    /// Normal-form text `p0 + p1*a + p2*b + p3*ab`, zero terms omitted.
    pub fn format(&self, x: &U1Elem) -> String {
        let parts: Vec<String> = (0..4)
            .filter(|&i| !x.0[i].is_zero())
            .map(|i| {
                let p = x.0[i].to_string_in("t");
                match (i, x.0[i].is_one()) {
                    (0, _) => format!("({p})"),
                    (_, true) => BASIS[i].to_string(),
                    _ => format!("({p})*{}", BASIS[i]),
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Parses expressions in a, b, t and the field's generator.
    pub fn parse(&self, s: &str) -> Result<U1Elem> {
        eval(self, &parse_expr(s)?)
    }

    /// Reduces a word in a (0) and b (1) with the closed-form product.
    pub fn word(&self, w: &[u8]) -> U1Elem {
        w.iter().fold(self.basis(0), |acc, &g| self.mul(&acc, &self.basis(1 + g as usize)))
    }
}

impl ExprTarget for EnvelopeU1 {
    type Value = U1Elem;
    fn from_int(&self, n: &num_bigint::BigInt) -> Result<U1Elem> {
        Ok(self.term(0, self.c(self.field.from_bigint(n))))
    }
    fn ident(&self, name: &str) -> Result<U1Elem> {
        match name {
            "a" => Ok(self.basis(1)),
            "b" => Ok(self.basis(2)),
            "ab" => Ok(self.basis(3)),
            "t" => Ok(self.t()),
            _ => self
                .field
                .lookup_var(name)
                .map(|c| self.term(0, self.c(c)))
                .ok_or_else(|| Error::Parse(format!("unknown symbol {name}"))),
        }
    }
    fn add(&self, a: &U1Elem, b: &U1Elem) -> Result<U1Elem> {
        Ok(EnvelopeU1::add(self, a, b))
    }
    fn sub(&self, a: &U1Elem, b: &U1Elem) -> Result<U1Elem> {
        Ok(EnvelopeU1::sub(self, a, b))
    }
    fn mul(&self, a: &U1Elem, b: &U1Elem) -> Result<U1Elem> {
        Ok(EnvelopeU1::mul(self, a, b))
    }
    fn div(&self, a: &U1Elem, b: &U1Elem) -> Result<U1Elem> {
        let f = &self.field;
        let scalar = b.0[1..].iter().all(Poly::is_zero) && b.0[0].degree().map_or(true, |d| d == 0);
        if !scalar {
            return Err(Error::Parse("division only by nonzero scalars".into()));
        }
        if b.0[0].is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = f.inv(&b.0[0].coeff(0))?;
        Ok(self.scale(&self.c(inv), a))
    }
    fn neg(&self, a: &U1Elem) -> Result<U1Elem> {
        Ok(self.scale(&self.c(self.field.from_i64(-1)), a))
    }
    fn one(&self) -> Result<U1Elem> {
        Ok(self.basis(0))
    }
}

/// Product of two elements of U_1 for the given λ.
pub fn u1_mul(field: &Field, lambda: &Scalar, x: &U1Elem, y: &U1Elem) -> U1Elem {
    EnvelopeU1::new(field, lambda).mul(x, y)
}

/// Term-rewriting model of U_1: words over {a, b} with F[t] coefficients,
/// reduced by aa -> t, bb -> t - 2λ, ba -> (λ - t) - ab. Independent of
/// the closed-form table.
struct Rewriter {
    field: Field,
    lambda: Scalar,
}

type WordPoly = BTreeMap<Vec<u8>, Poly>;

impl Rewriter {
    fn add_term(&self, acc: &mut WordPoly, w: Vec<u8>, p: Poly) {
        let e = acc.entry(w).or_insert_with(|| Poly::zero(&self.field));
        *e = e.add(&p);
    }

    /// Applies one rule at position `pos` of `w` (which must match a rule).
    fn apply_at(&self, w: &[u8], pos: usize, coeff: &Poly, out: &mut WordPoly) {
        let f = &self.field;
        let t = Poly::x(f);
        let lam = Poly::constant(f, self.lambda.clone());
        let (pre, post) = (&w[..pos], &w[pos + 2..]);
        let splice = |mid: &[u8]| [pre, mid, post].concat();
        match (w[pos], w[pos + 1]) {
            (0, 0) => self.add_term(out, splice(&[]), coeff.mul(&t)),
            (1, 1) => self.add_term(out, splice(&[]), coeff.mul(&t.sub(&lam.scale(&f.from_i64(2))))),
            (1, 0) => {
                self.add_term(out, splice(&[]), coeff.mul(&lam.sub(&t)));
                self.add_term(out, splice(&[0, 1]), coeff.neg());
            }
            _ => unreachable!("no rule for ab"),
        }
    }

    fn redex(w: &[u8]) -> Option<usize> {
        (0..w.len().saturating_sub(1)).find(|&i| !(w[i] == 0 && w[i + 1] == 1))
    }

    fn reduce(&self, mut x: WordPoly) -> WordPoly {
        loop {
            x.retain(|_, p| !p.is_zero());
            let Some((w, pos)) = x.iter().find_map(|(w, _)| Rewriter::redex(w).map(|p| (w.clone(), p))) else {
                return x;
            };
            let c = x.remove(&w).unwrap();
            self.apply_at(&w, pos, &c, &mut x);
        }
    }

    fn to_u1(&self, u: &EnvelopeU1, x: &WordPoly) -> Option<U1Elem> {
        let mut out = u.zero();
        for (w, p) in x {
            let i = match w.as_slice() {
                [] => 0,
                [0] => 1,
                [1] => 2,
                [0, 1] => 3,
                _ => return None,
            };
            out.0[i] = out.0[i].add(p);
        }
        Some(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeRankReport {
    pub lambda: String,
    pub field: String,
    pub degree_bound: usize,
    pub words_checked: usize,
    pub triples_checked: usize,
    /// Every word reduces into span{1, a, b, ab} and agrees with the table.
    pub closure: bool,
    pub associative: bool,
    /// The overlap ambiguities aaa, bbb, bba, baa resolve.
    pub ambiguities_resolve: bool,
    /// The table satisfies the defining relations with unit 1, so words in
    /// normal form map to the standard basis and carry no F[t]-relation.
    pub relations_hold: bool,
    pub pass: bool,
    pub failure: Option<String>,
}

fn words_up_to(bound: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..bound {
        let next: Vec<Vec<u8>> =
            layer.iter().flat_map(|w: &Vec<u8>| [0u8, 1].map(|g| [w.as_slice(), &[g]].concat())).collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Checks the closed-form product against the rewriting system on all
/// words up to `degree_bound` and associativity on word triples of total
/// length at most the bound.
pub fn u1_free_rank_check(field: &Field, lambda: &Scalar, degree_bound: usize) -> Result<FreeRankReport> {
    if degree_bound < 4 {
        return pre("degree bound must be at least 4");
    }
    let u = EnvelopeU1::new(field, lambda);
    let rw = Rewriter { field: field.clone(), lambda: lambda.clone() };
    let mut failure = None;
    let words = words_up_to(degree_bound);

    let mut closure = true;
    let mut cache: BTreeMap<Vec<u8>, U1Elem> = BTreeMap::new();
    for w in &words {
        let table = u.word(w);
        let mut start = WordPoly::new();
        rw.add_term(&mut start, w.clone(), Poly::one(field));
        let reduced = rw.to_u1(&u, &rw.reduce(start));
        if reduced.as_ref() != Some(&table) {
            closure = false;
            failure.get_or_insert(format!("word {} reduces differently", word_text(w)));
        }
        cache.insert(w.clone(), table);
    }

    let mut associative = true;
    let mut triples = 0;
    for x in &words {
        for y in words.iter().filter(|y| x.len() + y.len() <= degree_bound) {
            let xy = u.mul(&cache[x], &cache[y]);
            for z in words.iter().filter(|z| x.len() + y.len() + z.len() <= degree_bound) {
                triples += 1;
                let yz = u.mul(&cache[y], &cache[z]);
                if u.mul(&xy, &cache[z]) != u.mul(&cache[x], &yz) {
                    associative = false;
                    failure.get_or_insert(format!(
                        "({})({})({}) is not associative",
                        word_text(x),
                        word_text(y),
                        word_text(z)
                    ));
                }
            }
        }
    }

    let mut ambiguities_resolve = true;
    for w in [[0u8, 0, 0], [1, 1, 1], [1, 1, 0], [1, 0, 0]] {
        let mut first = WordPoly::new();
        let mut second = WordPoly::new();
        rw.apply_at(&w, 0, &Poly::one(field), &mut first);
        rw.apply_at(&w, 1, &Poly::one(field), &mut second);
        if rw.reduce(first) != rw.reduce(second) {
            ambiguities_resolve = false;
            failure.get_or_insert(format!("ambiguity {} does not resolve", word_text(&w)));
        }
    }

    let (a, b) = (u.basis(1), u.basis(2));
    let lam = Poly::constant(field, lambda.clone());
    let t = Poly::x(field);
    let unit_ok = (0..4).all(|i| u.mul(&u.basis(0), &u.basis(i)) == u.basis(i) && u.mul(&u.basis(i), &u.basis(0)) == u.basis(i));
    let relations_hold = unit_ok
        && u.mul(&a, &a) == u.term(0, t.clone())
        && u.mul(&b, &b) == u.term(0, t.sub(&lam.scale(&field.from_i64(2))))
        && u.add(&u.mul(&a, &b), &u.mul(&b, &a)) == u.term(0, lam.sub(&t))
        && (1..4).all(|i| u.mul(&u.t(), &u.basis(i)) == u.mul(&u.basis(i), &u.t()))
        && u.mul(&a, &b) == u.basis(3);
    if !relations_hold {
        failure.get_or_insert("defining relations fail in the table".into());
    }

    let pass = closure && associative && ambiguities_resolve && relations_hold;
    Ok(FreeRankReport {
        lambda: field.fmt_scalar(lambda),
        field: field.to_string(),
        degree_bound,
        words_checked: words.len(),
        triples_checked: triples,
        closure,
        associative,
        ambiguities_resolve,
        relations_hold,
        pass,
        failure,
    })
}

fn word_text(w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|&g| if g == 0 { 'a' } else { 'b' }).collect()
}

/// f(u) = u^2 + (α - λ)u + α(α - 2λ).
pub fn f_poly(field: &Field, lambda: &Scalar, alpha: &Scalar) -> Poly {
    crate::catalog::eps_poly(field, alpha, lambda)
}

/// U(α) = U_1 / (t - α) over K.
#[derive(Clone, Debug)]
pub struct SpecializedU {
    pub lambda: Scalar,
    pub alpha: Scalar,
    pub algebra: SuperAlgebra,
    pub f: Poly,
}

pub fn u_specialize(field: &Field, lambda: &Scalar, alpha: &Scalar) -> Result<SpecializedU> {
    let u = EnvelopeU1::new(field, lambda);
    let algebra = SuperAlgebra::from_products(
        field,
        PARITY.to_vec(),
        Some(BASIS.iter().map(|s| s.to_string()).collect()),
        Some(0),
        |i, j| u.basis_product(i, j).0.iter().map(|p| p.eval(alpha)).collect(),
    )?;
    Ok(SpecializedU { lambda: lambda.clone(), alpha: alpha.clone(), algebra, f: f_poly(field, lambda, alpha) })
}

impl SpecializedU {
    pub fn f_irreducible(&self) -> Result<bool> {
        is_irreducible(&self.f)
    }

    /// u = -(1/(α-λ)) ab, which satisfies u^2 = u - α(α-2λ)/(α-λ)^2.
    pub fn u_element(&self) -> Result<Element> {
        let f = self.algebra.field();
        let d = f.sub(&self.alpha, &self.lambda);
        let c = f.neg(&f.inv(&d)?);
        Ok(self.algebra.scale(&c, &self.algebra.basis(3)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisionReport {
    pub division: bool,
    /// Every nonzero homogeneous element was tested (finite fields).
    pub exhaustive: bool,
    pub elements_checked: usize,
    pub witness: Option<String>,
}

/// Every nonzero homogeneous element of an associative unital superalgebra
/// is invertible. Exhaustive when the field is finite and each graded part
/// has at most `cap` elements; otherwise basis elements and all sums and
/// differences of pairs are tested.
pub fn graded_division_check(a: &SuperAlgebra, cap: u64) -> Result<DivisionReport> {
    if !a.is_unital() || !a.is_associative() {
        return pre("graded division check needs an associative unital superalgebra");
    }
    let f = a.field();
    let mut checked = 0;
    for p in 0..2u8 {
        let idx = a.basis_of_parity(p);
        let size = f.order_u64().and_then(|q| q.checked_pow(idx.len() as u32));
        let elems: Vec<Element> = match size {
            Some(s) if s <= cap => {
                let vals = f.enumerate()?;
                let q = vals.len();
                (1..s as usize)
                    .map(|mut t| {
                        let mut x = a.zero();
                        for &k in &idx {
                            x[k] = vals[t % q].clone();
                            t /= q;
                        }
                        x
                    })
                    .collect()
            }
            _ => {
                let mut v: Vec<Element> = idx.iter().map(|&k| a.basis(k)).collect();
                for (s, &i) in idx.iter().enumerate() {
                    for &j in &idx[s + 1..] {
                        for c in [f.one(), f.from_i64(-1)] {
                            let mut x = a.basis(i);
                            x[j] = c;
                            v.push(x);
                        }
                    }
                }
                v
            }
        };
        for x in elems {
            checked += 1;
            if !a.left_mult_elem(&x).is_invertible() {
                return Ok(DivisionReport {
                    division: false,
                    exhaustive: size.is_some_and(|s| s <= cap),
                    elements_checked: checked,
                    witness: Some(a.describe(&x)),
                });
            }
        }
    }
    let exhaustive = (0..2u8).all(|p| {
        f.order_u64().and_then(|q| q.checked_pow(a.basis_of_parity(p).len() as u32)).is_some_and(|s| s <= cap)
    });
    Ok(DivisionReport { division: true, exhaustive, elements_checked: checked, witness: None })
}

/// Quotient of an algebra by a two-sided ideal, with complement basis chosen
/// greedily from the basis in order.
pub fn quotient_algebra(a: &SuperAlgebra, ideal: &Subspace) -> Result<SuperAlgebra> {
    let f = a.field();
    let n = a.dim();
    for i in 0..n {
        for v in ideal.basis() {
            if !ideal.contains(&a.left_mult(i).mul_vec(v)) || !ideal.contains(&a.right_mult(i).mul_vec(v)) {
                return pre("subspace is not a two-sided ideal");
            }
        }
    }
    let mut span = ideal.clone();
    let mut comp = Vec::new();
    for i in 0..n {
        if span.insert(&a.basis(i)) {
            comp.push(i);
        }
    }
    let mut cols: Vec<Vec<Scalar>> = comp.iter().map(|&i| a.basis(i)).collect();
    cols.extend(ideal.basis().iter().cloned());
    let inv = Matrix::from_cols(f, n, &cols).inverse().ok_or_else(|| Error::Invalid("singular complement".into()))?;
    let k = comp.len();
    let parity: Vec<u8> = comp.iter().map(|&i| a.parity()[i]).collect();
    let names: Vec<String> = comp.iter().map(|&i| format!("{}+I", a.names()[i])).collect();
    let unit = a.unit().and_then(|u| comp.iter().position(|&c| c == u));
    SuperAlgebra::from_products(f, parity, Some(names), unit, |i, j| {
        inv.mul_vec(&a.mul_basis_dense(comp[i], comp[j]))[..k].to_vec()
    })
}

#[derive(Clone, Debug)]
pub struct Char3Ideal {
    pub specialized: SpecializedU,
    pub ideal: Subspace,
    pub square_zero: bool,
    pub quotient: SuperAlgebra,
}

/// I = span{ab - α, a - b} in U(α) for characteristic 3 and λ = 0.
pub fn u_char3_ideal(field: &Field, alpha: &Scalar) -> Result<Char3Ideal> {
    if field.characteristic() != 3 {
        return pre("the nilpotent ideal exists in characteristic 3 only");
    }
    if field.is_zero(alpha) {
        return pre("α must be nonzero");
    }
    let su = u_specialize(field, &field.zero(), alpha)?;
    let a = &su.algebra;
    let gens = vec![
        vec![field.neg(alpha), field.zero(), field.zero(), field.one()],
        vec![field.zero(), field.one(), field.from_i64(-1), field.zero()],
    ];
    let ideal = Subspace::span(field, 4, &gens);
    let square_zero = ideal.basis().iter().all(|x| ideal.basis().iter().all(|y| a.is_zero_elem(&a.mul(x, y))));
    let quotient = quotient_algebra(a, &ideal)?;
    Ok(Char3Ideal { specialized: su, ideal, square_zero, quotient })
}

#[derive(Clone, Debug)]
pub struct MinRightIdeal {
    pub specialized: SpecializedU,
    pub ideal: Subspace,
    /// L as a bimodule over F1 + Fx: ρ(x) = R_a and λ(x) = R_b on L.
    pub bimodule: SuperBimodule,
}

/// L = span{ab - ε, (λ - α - ε)a - αb} in U(α) and the induced bimodule.
pub fn u_min_right_ideal(field: &Field, lambda: &Scalar, alpha: &Scalar, eps: &Scalar) -> Result<MinRightIdeal> {
    let f = field;
    if f.is_zero(alpha) {
        return pre("α must be nonzero");
    }
    let su = u_specialize(f, lambda, alpha)?;
    if !f.is_zero(&su.f.eval(eps)) {
        return pre(format!("ε = {} is not a root of f", f.fmt_scalar(eps)));
    }
    let a = &su.algebra;
    let v = vec![f.neg(eps), f.zero(), f.zero(), f.one()];
    let w = vec![f.zero(), f.sub(&f.sub(lambda, alpha), eps), f.neg(alpha), f.zero()];
    let ideal = Subspace::span(f, 4, &[v.clone(), w.clone()]);
    if ideal.dim() != 2 {
        return Err(Error::Invalid("L is not 2-dimensional".into()));
    }
    let (ra, rb) = (a.right_mult(1), a.right_mult(2));
    if !ideal.is_invariant(&ra) || !ideal.is_invariant(&rb) {
        return Err(Error::Invalid("L is not a right ideal".into()));
    }
    // coordinates in the basis (v, w)
    let basis = Matrix::from_cols(f, 4, &[v.clone(), w.clone()]);
    let coords = |x: &[Scalar]| -> Result<Vec<Scalar>> {
        let aug = Matrix::from_cols(f, 4, &[v.clone(), w.clone(), x.to_vec()]);
        let k = aug.kernel();
        let Some(sol) = k.first() else {
            return Err(Error::Invalid("vector outside L".into()));
        };
        let s = f.neg(&f.inv(&sol[2])?);
        Ok(vec![f.mul(&sol[0], &s), f.mul(&sol[1], &s)])
    };
    let on_l = |m: &Matrix| -> Result<Matrix> {
        let cols = [0, 1].iter().map(|&c| coords(&m.mul_vec(&basis.col(c)))).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_cols(f, 2, &cols))
    };
    let rho = on_l(&ra)?;
    let lam = on_l(&rb)?;
    let parity = vec![0, 1];
    // raw left action x.u = (-1)^{|u|} λ(x)u
    let left_x = Matrix::from_fn(f, 2, 2, |r, c| if parity[c] == 1 { f.neg(lam.get(r, c)) } else { lam.get(r, c).clone() });
    let id = Matrix::identity(f, 2);
    let bimodule = SuperBimodule::new(
        f1x(f, lambda)?,
        parity,
        vec![id.clone(), left_x],
        vec![id, rho],
        Some(vec!["ab-eps".into(), "(l-a-eps)a-ab".into()]),
    )?;
    Ok(MinRightIdeal { specialized: su, ideal, bimodule })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorRelationFailure {
    /// 1-4: the four graded relation lines, 5: c (x) c - c^2.
    pub relation: usize,
    pub indices: Vec<usize>,
    pub names: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorRelationsReport {
    pub holds: bool,
    pub failure: Option<OperatorRelationFailure>,
}

/// The envelope relations as operator identities on V, with a -> ρ(a),
/// bar(a) -> λ(a) and X (x) Y acting as X first, then Y (the product Y X).
pub fn operator_relations_check(v: &SuperBimodule) -> OperatorRelationsReport {
    let a = v.algebra();
    let f = v.field();
    let n = a.dim();
    let m = v.dim();
    let rho: Vec<Matrix> = (0..n).map(|i| v.rho(i)).collect();
    let lam: Vec<Matrix> = (0..n).map(|i| v.lambda(i)).collect();
    let lin = |mats: &[Matrix], x: &[Scalar]| {
        let mut out = Matrix::zeros(f, m, m);
        for (c, mm) in x.iter().zip(mats) {
            if !f.is_zero(c) {
                out = out.add_scaled(c, mm);
            }
        }
        out
    };
    let t = |x: &Matrix, y: &Matrix| y.mul(x);
    let comb = |terms: &[(&Matrix, i64)]| {
        let mut out = Matrix::zeros(f, m, m);
        for (mm, c) in terms {
            out = out.add_scaled(&f.from_i64(*c), mm);
        }
        out
    };
    let fail = |relation: usize, idx: Vec<usize>| OperatorRelationsReport {
        holds: false,
        failure: Some(OperatorRelationFailure { relation, names: idx.iter().map(|&i| a.names()[i].clone()).collect(), indices: idx }),
    };
    for i in 0..n {
        for j in 0..n {
            let s = if a.parity()[i] * a.parity()[j] == 1 { -1 } else { 1 };
            let ab = a.mul_basis_dense(i, j);
            let ba = a.mul_basis_dense(j, i);
            let (ra, rb, la, lb) = (&rho[i], &rho[j], &lam[i], &lam[j]);
            let (rab, rba, lab, lba) = (lin(&rho, &ab), lin(&rho, &ba), lin(&lam, &ab), lin(&lam, &ba));
            let rels = [
                comb(&[(&t(ra, rb), 1), (&rab, -1), (&t(rb, ra), s), (&rba, -s)]),
                comb(&[(&t(la, lb), 1), (&lab, -1), (&t(lb, la), s), (&lba, -s)]),
                comb(&[(&rab, 1), (&t(ra, rb), -1), (&t(la, rb), -1), (&t(rb, la), s)]),
                comb(&[(&lab, 1), (&t(la, rb), 1), (&t(lb, la), -s), (&t(rb, la), -s)]),
            ];
            if let Some(k) = rels.iter().position(|r| !r.is_zero()) {
                return fail(k + 1, vec![i, j]);
            }
        }
    }
    for i in a.basis_of_parity(0) {
        let r = t(&rho[i], &rho[i]).sub(&lin(&rho, &a.mul_basis_dense(i, i)));
        if !r.is_zero() {
            return fail(5, vec![i]);
        }
    }
    OperatorRelationsReport { holds: true, failure: None }
}

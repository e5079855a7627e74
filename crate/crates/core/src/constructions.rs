//! Named algebras and superalgebras: Cayley–Dickson doubling, the
//! characteristic-2 quaternion presentation, odd doubling A[u], Wall's
//! matrix superalgebras, B(1|2), B(4|2), B(Γ,D,γ) and F1+Fx.

use crate::error::{pre, Error, Result};
use crate::linalg::{vec_add, vec_scale, Matrix};
use crate::scalars::{Field, Scalar};
use crate::superalgebra::{Element, SuperAlgebra};

/// An order-two anti-automorphism x -> bar(x); column i of the matrix is bar(e_i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    matrix: Matrix,
}

impl Involution {
    pub fn new(a: &SuperAlgebra, matrix: Matrix) -> Result<Involution> {
        let f = a.field();
        let n = a.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::Invalid("involution matrix has the wrong size".into()));
        }
        if matrix.mul(&matrix) != Matrix::identity(f, n) {
            return Err(Error::Invalid("involution is not of order two".into()));
        }
        let inv = Involution { matrix };
        for i in 0..n {
            for j in 0..n {
                let lhs = inv.apply(&a.mul_basis_dense(i, j));
                let rhs = a.mul(&inv.apply(&a.basis(j)), &inv.apply(&a.basis(i)));
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "bar({}{}) differs from bar({})bar({})",
                        a.names()[i],
                        a.names()[j],
                        a.names()[j],
                        a.names()[i]
                    )));
                }
            }
        }
        if let Some(u) = a.unit_element() {
            if inv.apply(&u) != u {
                return Err(Error::Invalid("involution does not fix the unit".into()));
            }
        }
        Ok(inv)
    }

    pub fn identity(a: &SuperAlgebra) -> Involution {
        Involution { matrix: Matrix::identity(a.field(), a.dim()) }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Element {
        self.matrix.mul_vec(x)
    }
}

fn product_name(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", _) => b.to_string(),
        (_, "1") => a.to_string(),
        _ => format!("{a}{b}"),
    }
}

/// B + Bv with (a,b)(c,d) = (ac + mu bar(d) b, da + b bar(c)) and
/// bar((a,b)) = (bar(a), -b). The element (0,b) is b v, named `b<symbol>`.
/// With `graded`, B must be purely even and Bv is the odd part.
pub fn cayley_dickson(
    b: &SuperAlgebra,
    inv: &Involution,
    mu: &Scalar,
    graded: bool,
    symbol: &str,
) -> Result<(SuperAlgebra, Involution)> {
    let f = b.field();
    if f.is_zero(mu) {
        return pre("Cayley-Dickson parameter must be nonzero");
    }
    let Some(unit) = b.unit() else {
        return pre("Cayley-Dickson doubling needs a unital algebra with a unit basis element");
    };
    if graded && !b.is_purely_even() {
        return pre("graded Cayley-Dickson doubling needs a purely even algebra");
    }
    let n = b.dim();
    let bar = |i: usize| inv.apply(&b.basis(i));
    let mut entries = Vec::new();
    let mut put = |i: usize, j: usize, off: usize, v: &Element| {
        for (k, c) in v.iter().enumerate() {
            if !f.is_zero(c) {
                entries.push((i, j, k + off, c.clone()));
            }
        }
    };
    for i in 0..n {
        for j in 0..n {
            put(i, j, 0, &b.mul_basis_dense(i, j));
            put(i, n + j, n, &b.mul_basis_dense(j, i));
            put(n + i, j, n, &b.mul(&b.basis(i), &bar(j)));
            put(n + i, n + j, 0, &vec_scale(f, mu, &b.mul(&bar(j), &b.basis(i))));
        }
    }
    let mut parity = b.parity().to_vec();
    parity.extend(b.parity().iter().map(|p| if graded { 1 - p } else { *p }));
    let mut names = b.names().to_vec();
    names.extend(b.names().iter().map(|x| product_name(x, symbol)));
    let a = SuperAlgebra::new(f, parity, entries, Some(unit), Some(names))?;
    let m = Matrix::from_fn(f, 2 * n, 2 * n, |r, c| {
        if r < n && c < n {
            inv.matrix.get(r, c).clone()
        } else if r == c {
            f.neg(&f.one())
        } else {
            f.zero()
        }
    });
    let inv2 = Involution::new(&a, m)?;
    Ok((a, inv2))
}

/// The field as a 1-dimensional algebra with trivial involution.
pub fn ground_field(f: &Field) -> (SuperAlgebra, Involution) {
    let a = SuperAlgebra::new(f, vec![0], [(0, 0, 0, f.one())], Some(0), Some(vec!["1".into()]))
        .expect("ground field");
    let inv = Involution::identity(&a);
    (a, inv)
}

/// Iterated doubling of F with the given parameters, ungraded. Generators
/// are named i, j, l, m, ...
pub fn cayley_dickson_tower(f: &Field, params: &[Scalar]) -> Result<(SuperAlgebra, Involution)> {
    const SYMBOLS: [&str; 6] = ["i", "j", "l", "m", "n", "o"];
    let (mut a, mut inv) = ground_field(f);
    for (k, mu) in params.iter().enumerate() {
        let sym = SYMBOLS.get(k).ok_or_else(|| Error::SizeCap("too many doublings".into()))?;
        (a, inv) = cayley_dickson(&a, &inv, mu, false, sym)?;
    }
    Ok((a, inv))
}

pub fn octonion(f: &Field) -> Result<SuperAlgebra> {
    let m = f.from_i64(-1);
    Ok(cayley_dickson_tower(f, &[m.clone(), m.clone(), m])?.0)
}

pub fn sedenion(f: &Field) -> Result<SuperAlgebra> {
    let m = f.from_i64(-1);
    Ok(cayley_dickson_tower(f, &[m.clone(), m.clone(), m.clone(), m])?.0)
}

/// Quaternions (-1,-1).
pub fn quaternion(f: &Field) -> Result<(SuperAlgebra, Involution)> {
    let m = f.from_i64(-1);
    cayley_dickson_tower(f, &[m.clone(), m])
}

/// Split quaternions (1,1), isomorphic to 2x2 matrices.
pub fn split_quaternion(f: &Field) -> Result<(SuperAlgebra, Involution)> {
    cayley_dickson_tower(f, &[f.one(), f.one()])
}

fn char2_gate(f: &Field) -> Result<()> {
    if f.characteristic() != 2 {
        return pre(format!("characteristic 2 required, {f} has characteristic {}", f.characteristic()));
    }
    Ok(())
}

/// K[i] = F1 + Fi with i^2 = i + alpha and bar(i) = 1 + i (characteristic 2).
pub fn quadratic_char2(f: &Field, alpha: &Scalar) -> Result<(SuperAlgebra, Involution)> {
    char2_gate(f)?;
    let one = f.one();
    let k = SuperAlgebra::new(
        f,
        vec![0, 0],
        [(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone()), (1, 1, 1, one.clone()), (1, 1, 0, alpha.clone())],
        Some(0),
        Some(vec!["1".into(), "i".into()]),
    )?;
    let m = Matrix::from_fn(f, 2, 2, |r, c| if r == 0 || c == 1 { one.clone() } else { f.zero() });
    let inv = Involution::new(&k, m)?;
    Ok((k, inv))
}

/// H(2|2): basis 1, i, j, k with i^2 = i + alpha, j^2 = beta, k = ij, graded
/// by the doubling (j, k odd). Characteristic 2 only.
pub fn quaternion_char2(f: &Field, alpha: &Scalar, beta: &Scalar) -> Result<(SuperAlgebra, Involution)> {
    char2_gate(f)?;
    if f.is_zero(beta) {
        return pre("beta must be nonzero");
    }
    let (k, inv) = quadratic_char2(f, alpha)?;
    let (h, hinv) = cayley_dickson(&k, &inv, beta, true, "j")?;
    let h = h.with_names(vec!["1".into(), "i".into(), "j".into(), "k".into()])?;
    Ok((h, hinv))
}

/// The same quaternion algebra without grading.
pub fn quaternion_char2_ungraded(f: &Field, alpha: &Scalar, beta: &Scalar) -> Result<(SuperAlgebra, Involution)> {
    let (h, inv) = quaternion_char2(f, alpha, beta)?;
    Ok((h.forget_grading(), inv))
}

/// O(4|4): the ungraded char-2 quaternions doubled once more with the
/// doubling grading.
pub fn octonion_44(f: &Field, alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> Result<SuperAlgebra> {
    let (h, inv) = quaternion_char2_ungraded(f, alpha, beta)?;
    if f.is_zero(gamma) {
        return pre("gamma must be nonzero");
    }
    Ok(cayley_dickson(&h, &inv, gamma, true, "l")?.0)
}

/// Ungraded char-2 octonions.
pub fn octonion_char2(f: &Field, alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> Result<SuperAlgebra> {
    Ok(octonion_44(f, alpha, beta, gamma)?.forget_grading())
}

/// A[u] = A + Au with u odd, central and u^2 = alpha. A must be purely even.
pub fn double_by_u(a: &SuperAlgebra, alpha: &Scalar) -> Result<SuperAlgebra> {
    if !a.is_purely_even() {
        return pre("odd doubling needs a purely even algebra");
    }
    let f = a.field();
    let n = a.dim();
    let mut entries = Vec::new();
    for (i, j, k, c) in a.entries() {
        entries.push((i, j, k, c.clone()));
        entries.push((i, n + j, n + k, c.clone()));
        entries.push((n + i, j, n + k, c.clone()));
        entries.push((n + i, n + j, k, f.mul(alpha, &c)));
    }
    let mut parity = vec![0; n];
    parity.extend(vec![1; n]);
    let mut names = a.names().to_vec();
    names.extend(a.names().iter().map(|x| product_name(x, "u")));
    SuperAlgebra::new(f, parity, entries, a.unit(), Some(names))
}

/// O[u] in characteristic 2.
pub fn octonion_u(f: &Field, alpha: &Scalar, beta: &Scalar, gamma: &Scalar, u2: &Scalar) -> Result<SuperAlgebra> {
    double_by_u(&octonion_char2(f, alpha, beta, gamma)?, u2)
}

fn matrix_unit_names(size: usize) -> Vec<String> {
    let mut out = Vec::new();
    for r in 1..=size {
        for c in 1..=size {
            out.push(if size < 10 { format!("e{r}{c}") } else { format!("e{r},{c}") });
        }
    }
    out
}

/// M_{m|n}(F): matrix units e_rc, odd exactly when r and c lie in different
/// diagonal blocks.
pub fn matrix_superalgebra(f: &Field, m: usize, n: usize) -> Result<SuperAlgebra> {
    let s = m + n;
    if s == 0 {
        return pre("matrix superalgebra of size 0");
    }
    let parity: Vec<u8> = (0..s * s).map(|t| u8::from((t / s < m) != (t % s < m))).collect();
    let mut entries = Vec::new();
    for r in 0..s {
        for c in 0..s {
            for d in 0..s {
                entries.push((r * s + c, c * s + d, r * s + d, f.one()));
            }
        }
    }
    let unit = (s == 1).then_some(0);
    SuperAlgebra::new(f, parity, entries, unit, Some(matrix_unit_names(s)))
}

/// M_n(F)[sqrt 1].
pub fn matrix_double(f: &Field, n: usize) -> Result<SuperAlgebra> {
    if n == 0 {
        return pre("matrix size must be positive");
    }
    double_by_u(&matrix_superalgebra(f, n, 0)?, &f.one())
}

fn char3_gate(f: &Field) -> Result<()> {
    if f.characteristic() != 3 {
        return pre(format!("characteristic 3 required, {f} has characteristic {}", f.characteristic()));
    }
    Ok(())
}

/// B(1|2) without the characteristic check.
pub fn b12_unchecked(f: &Field) -> Result<SuperAlgebra> {
    let one = f.one();
    let m1 = f.neg(&one);
    SuperAlgebra::new(
        f,
        vec![0, 1, 1],
        [
            (0, 0, 0, one.clone()),
            (0, 1, 1, one.clone()),
            (1, 0, 1, one.clone()),
            (0, 2, 2, one.clone()),
            (2, 0, 2, one.clone()),
            (1, 2, 0, one),
            (2, 1, 0, m1),
        ],
        Some(0),
        Some(vec!["1".into(), "e".into(), "f".into()]),
    )
}

/// B(1|2) = F1 + V with V = Fe + Ff odd and xy = <x,y>1, <e,f> = 1.
pub fn b12(f: &Field) -> Result<SuperAlgebra> {
    char3_gate(f)?;
    b12_unchecked(f)
}

/// B(4|2) without the characteristic check.
pub fn b42_unchecked(f: &Field) -> Result<SuperAlgebra> {
    let one = f.one();
    let unit_pos = |r: usize, c: usize| r * 2 + c;
    let mut entries = Vec::new();
    for r1 in 0..2 {
        for c1 in 0..2 {
            for c2 in 0..2 {
                entries.push((unit_pos(r1, c1), unit_pos(c1, c2), unit_pos(r1, c2), one.clone()));
            }
        }
    }
    // symplectic adjoint: e11 <-> e22, e12 -> -e12, e21 -> -e21
    let adj = |i: usize| -> (usize, bool) {
        match i {
            0 => (3, false),
            3 => (0, false),
            other => (other, true),
        }
    };
    for i in 0..4 {
        let (r, c) = (i / 2, i % 2);
        for s in 0..2 {
            // v.a = a(v)
            if c == s {
                entries.push((4 + s, i, 4 + r, one.clone()));
            }
            // a.v = adj(a)(v)
            let (j, neg) = adj(i);
            let (rj, cj) = (j / 2, j % 2);
            if cj == s {
                entries.push((i, 4 + s, 4 + rj, if neg { f.neg(&one) } else { one.clone() }));
            }
        }
    }
    // (u.v)(w) = <w,u> v, so u.v = sum_w <w,u> e_{v w}
    let form = |x: usize, y: usize| -> i64 {
        match (x, y) {
            (0, 1) => 1,
            (1, 0) => -1,
            _ => 0,
        }
    };
    for u in 0..2 {
        for v in 0..2 {
            for w in 0..2 {
                let c = form(w, u);
                if c != 0 {
                    entries.push((4 + u, 4 + v, unit_pos(v, w), f.from_i64(c)));
                }
            }
        }
    }
    let names = ["e11", "e12", "e21", "e22", "e", "f"].iter().map(|s| s.to_string()).collect();
    SuperAlgebra::new(f, vec![0, 0, 0, 0, 1, 1], entries, None, Some(names))
}

/// B(4|2) = M_2(F) + V, V = F^2 odd with the Cayley action and
/// (u.v)(w) = <w,u> v. Characteristic 3 only.
pub fn b42(f: &Field) -> Result<SuperAlgebra> {
    char3_gate(f)?;
    b42_unchecked(f)
}

/// F1 + Fx with x odd and x^2 = lambda.
pub fn f1x(f: &Field, lambda: &Scalar) -> Result<SuperAlgebra> {
    let one = f.one();
    SuperAlgebra::new(
        f,
        vec![0, 1],
        [(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one), (1, 1, 0, lambda.clone())],
        Some(0),
        Some(vec!["1".into(), "x".into()]),
    )
}

/// Even linear map D of a commutative algebra satisfying the Leibniz rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationOp {
    matrix: Matrix,
}

impl DerivationOp {
    pub fn new(gamma: &SuperAlgebra, matrix: Matrix) -> Result<DerivationOp> {
        let n = gamma.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::Invalid("derivation matrix has the wrong size".into()));
        }
        let d = DerivationOp { matrix };
        for i in 0..n {
            for j in 0..n {
                let lhs = d.apply(&gamma.mul_basis_dense(i, j));
                let rhs = vec_add(
                    gamma.field(),
                    &gamma.mul(&d.apply(&gamma.basis(i)), &gamma.basis(j)),
                    &gamma.mul(&gamma.basis(i), &d.apply(&gamma.basis(j))),
                );
                if lhs != rhs {
                    return Err(Error::Invalid(format!(
                        "Leibniz rule fails on {} {}",
                        gamma.names()[i],
                        gamma.names()[j]
                    )));
                }
            }
        }
        Ok(d)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Scalar]) -> Element {
        self.matrix.mul_vec(x)
    }
}

fn monomial_name(exps: &[usize]) -> String {
    let single = exps.len() == 1;
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| {
            let var = if single { "t".to_string() } else { format!("t{}", v + 1) };
            if e == 1 {
                var
            } else {
                format!("{var}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// F[t_1..t_n]/(t_1^h, ..., t_n^h) with monomial basis (exponent vectors in
/// mixed radix, t_1 fastest) and D = sum of the partial derivatives.
/// D is a derivation only when the characteristic divides h.
pub fn truncated_poly(f: &Field, n: usize, h: usize) -> Result<(SuperAlgebra, Matrix)> {
    if n == 0 || h < 2 {
        return pre("truncated polynomial algebra needs n >= 1 and height >= 2");
    }
    let dim = (h as u64)
        .checked_pow(n as u32)
        .filter(|&d| d * d <= crate::superalgebra::TABLE_CAP as u64)
        .ok_or_else(|| Error::SizeCap(format!("{h}^{n} basis monomials")))? as usize;
    let exps = |mut t: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let e = t % h;
                t /= h;
                e
            })
            .collect()
    };
    let index = |e: &[usize]| -> usize { e.iter().rev().fold(0, |acc, &x| acc * h + x) };
    let mut entries = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let (a, b) = (exps(i), exps(j));
            let s: Vec<usize> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            if s.iter().all(|&x| x < h) {
                entries.push((i, j, index(&s), f.one()));
            }
        }
    }
    let names = (0..dim).map(|i| monomial_name(&exps(i))).collect();
    let g = SuperAlgebra::new(f, vec![0; dim], entries, Some(0), Some(names))?;
    let mut d = Matrix::zeros(f, dim, dim);
    for i in 0..dim {
        let e = exps(i);
        for v in 0..n {
            if e[v] > 0 {
                let mut e2 = e.clone();
                e2[v] -= 1;
                let k = index(&e2);
                let c = f.add(d.get(k, i), &f.from_i64(e[v] as i64));
                d.set(k, i, c);
            }
        }
    }
    Ok((g, d))
}

/// Γ = F[t_1..t_n]/(t_1^3, ..., t_n^3) with D = sum of partial derivatives.
pub fn truncated_poly_gamma(f: &Field, n: usize) -> Result<(SuperAlgebra, DerivationOp)> {
    char3_gate(f)?;
    let (g, d) = truncated_poly(f, n, 3)?;
    let d = DerivationOp::new(&g, d)?;
    Ok((g, d))
}

/// B(Γ,D,γ) without the characteristic check. Basis: Γ's basis a, then bar(a).
/// a.b-bar = a-bar.b = bar(ab), a-bar.b-bar = γab + 2D(a)b + aD(b).
pub fn b_gamma_unchecked(gamma: &SuperAlgebra, d: &DerivationOp, g: &[Scalar]) -> Result<SuperAlgebra> {
    if !gamma.is_purely_even() || !gamma.is_associative() {
        return pre("Γ must be a purely even associative algebra");
    }
    let f = gamma.field();
    let n = gamma.dim();
    if g.len() != n {
        return Err(Error::Invalid("γ has the wrong length".into()));
    }
    let two = f.from_i64(2);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let ab = gamma.mul_basis_dense(i, j);
            let (ea, eb) = (gamma.basis(i), gamma.basis(j));
            let odd = vec_add(
                f,
                &vec_add(f, &gamma.mul(&gamma.mul(g, &ea), &eb), &vec_scale(f, &two, &gamma.mul(&d.apply(&ea), &eb))),
                &gamma.mul(&ea, &d.apply(&eb)),
            );
            for (k, c) in ab.iter().enumerate() {
                if !f.is_zero(c) {
                    entries.push((i, j, k, c.clone()));
                    entries.push((i, n + j, n + k, c.clone()));
                    entries.push((n + i, j, n + k, c.clone()));
                }
            }
            for (k, c) in odd.iter().enumerate() {
                if !f.is_zero(c) {
                    entries.push((n + i, n + j, k, c.clone()));
                }
            }
        }
    }
    let mut parity = vec![0; n];
    parity.extend(vec![1; n]);
    let mut names = gamma.names().to_vec();
    names.extend(gamma.names().iter().map(|x| format!("bar({x})")));
    SuperAlgebra::new(f, parity, entries, gamma.unit(), Some(names))
}

/// B(Γ,D,γ) in characteristic 3.
pub fn b_gamma(gamma: &SuperAlgebra, d: &DerivationOp, g: &[Scalar]) -> Result<SuperAlgebra> {
    char3_gate(gamma.field())?;
    b_gamma_unchecked(gamma, d, g)
}

/// Named parameters, as `key -> expression` text.
pub type Params = std::collections::BTreeMap<String, String>;

/// Parses `k=v,k=v` (empty text gives no parameters).
pub fn parse_params(s: &str) -> Result<Params> {
    let mut out = Params::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
        if out.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(Error::Parse(format!("parameter {} given twice", k.trim())));
        }
    }
    Ok(out)
}

/// Parameter lookup with declared defaults ("" marks a required parameter).
pub struct ParamSet<'a> {
    pub entry: &'a str,
    pub declared: &'a [(&'a str, &'a str)],
    pub given: &'a Params,
    pub field: &'a Field,
}

impl ParamSet<'_> {
    pub fn validate(&self) -> Result<()> {
        for k in self.given.keys() {
            if !self.declared.iter().any(|(p, _)| p == k) {
                return Err(Error::Parse(format!("{} has no parameter {k}", self.entry)));
            }
        }
        Ok(())
    }

    pub fn text(&self, key: &str) -> Result<&str> {
        if let Some(v) = self.given.get(key) {
            return Ok(v);
        }
        match self.declared.iter().find(|(p, _)| *p == key) {
            Some((_, d)) if !d.is_empty() => Ok(d),
            Some(_) => Err(Error::Parse(format!("{} needs parameter {key}", self.entry))),
            None => Err(Error::Parse(format!("unknown parameter {key}"))),
        }
    }

    pub fn scalar(&self, key: &str) -> Result<Scalar> {
        self.field.parse_scalar(self.text(key)?)
    }

    pub fn count(&self, key: &str) -> Result<usize> {
        let t = self.text(key)?;
        t.parse().map_err(|_| Error::Parse(format!("{key} must be a nonnegative integer, got {t:?}")))
    }
}

/// A named superalgebra family.
pub struct ZooEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static [(&'static str, &'static str)],
    pub default_field: &'static str,
    pub build: fn(&ParamSet) -> Result<SuperAlgebra>,
}

pub fn zoo() -> Vec<ZooEntry> {
    vec![
        ZooEntry {
            name: "octonion",
            summary: "octonions (-1,-1,-1)",
            params: &[],
            default_field: "Q",
            build: |p| octonion(p.field),
        },
        ZooEntry {
            name: "sedenion",
            summary: "sedenions (-1,-1,-1,-1), not alternative",
            params: &[],
            default_field: "Q",
            build: |p| sedenion(p.field),
        },
        ZooEntry {
            name: "quat",
            summary: "quaternions (-1,-1)",
            params: &[],
            default_field: "Q",
            build: |p| Ok(quaternion(p.field)?.0),
        },
        ZooEntry {
            name: "split_quat",
            summary: "split quaternions (1,1)",
            params: &[],
            default_field: "Q",
            build: |p| Ok(split_quaternion(p.field)?.0),
        },
        ZooEntry {
            name: "cd",
            summary: "Cayley-Dickson tower with parameters mu=a;b;c...",
            params: &[("mu", "-1;-1;-1")],
            default_field: "Q",
            build: |p| {
                let mus = p.text("mu")?.split(';').map(|s| p.field.parse_scalar(s)).collect::<Result<Vec<_>>>()?;
                Ok(cayley_dickson_tower(p.field, &mus)?.0)
            },
        },
        ZooEntry {
            name: "quat2x2",
            summary: "H(2|2) in characteristic 2",
            params: &[("alpha", "1"), ("beta", "1")],
            default_field: "GF(2)",
            build: |p| Ok(quaternion_char2(p.field, &p.scalar("alpha")?, &p.scalar("beta")?)?.0),
        },
        ZooEntry {
            name: "o44",
            summary: "O(4|4) in characteristic 2",
            params: &[("alpha", "1"), ("beta", "1"), ("gamma", "1")],
            default_field: "GF(2)",
            build: |p| octonion_44(p.field, &p.scalar("alpha")?, &p.scalar("beta")?, &p.scalar("gamma")?),
        },
        ZooEntry {
            name: "o_u",
            summary: "O[u], u odd central with u^2 = u2, characteristic 2",
            params: &[("alpha", "1"), ("beta", "1"), ("gamma", "1"), ("u2", "1")],
            default_field: "GF(2)",
            build: |p| {
                octonion_u(p.field, &p.scalar("alpha")?, &p.scalar("beta")?, &p.scalar("gamma")?, &p.scalar("u2")?)
            },
        },
        ZooEntry {
            name: "m",
            summary: "matrix superalgebra M(m|n)",
            params: &[("m", "1"), ("n", "1")],
            default_field: "Q",
            build: |p| matrix_superalgebra(p.field, p.count("m")?, p.count("n")?),
        },
        ZooEntry {
            name: "m_double",
            summary: "M_n[sqrt 1]",
            params: &[("n", "2")],
            default_field: "Q",
            build: |p| matrix_double(p.field, p.count("n")?),
        },
        ZooEntry {
            name: "b12",
            summary: "B(1|2), characteristic 3",
            params: &[],
            default_field: "GF(3)",
            build: |p| b12(p.field),
        },
        ZooEntry {
            name: "b42",
            summary: "B(4|2), characteristic 3",
            params: &[],
            default_field: "GF(3)",
            build: |p| b42(p.field),
        },
        ZooEntry {
            name: "f1x",
            summary: "F1 + Fx with x odd, x^2 = lambda",
            params: &[("lambda", "0")],
            default_field: "Q",
            build: |p| f1x(p.field, &p.scalar("lambda")?),
        },
        ZooEntry {
            name: "gamma",
            summary: "F[t1..tn]/(t_i^3), characteristic 3",
            params: &[("n", "1")],
            default_field: "GF(3)",
            build: |p| Ok(truncated_poly_gamma(p.field, p.count("n")?)?.0),
        },
        ZooEntry {
            name: "bgamma",
            summary: "B(Gamma,D,gamma) over F[t1..tn]/(t_i^3), characteristic 3",
            params: &[("n", "1"), ("gamma", "0")],
            default_field: "GF(3)",
            build: |p| {
                let (g, d) = truncated_poly_gamma(p.field, p.count("n")?)?;
                let gam = g.parse_element(p.text("gamma")?)?;
                b_gamma(&g, &d, &gam)
            },
        },
    ]
}

pub fn zoo_entry(name: &str) -> Option<ZooEntry> {
    zoo().into_iter().find(|e| e.name == name)
}

/// Builds a zoo member; missing parameters take their defaults.
pub fn build_zoo(name: &str, field: &Field, params: &Params) -> Result<SuperAlgebra> {
    let e = zoo_entry(name).ok_or_else(|| Error::Parse(format!("unknown algebra {name}")))?;
    let ps = ParamSet { entry: e.name, declared: e.params, given: params, field };
    ps.validate()?;
    (e.build)(&ps)
}

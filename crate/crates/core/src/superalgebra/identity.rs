//! Graded polynomial identities as expression trees, evaluated on basis
//! assignments.
//!
//! Identities are written in the usual notation: juxtaposition is the
//! product (left associated), `(x,y,z)` the associator, `[x,y]` the
//! supercommutator and `{x,y}` the circle product xy+yx. Variables are
//! single letters. Example: `[ab,c] = a[b,c] + [a,c]b + 3(a,b,c)`.

use rayon::prelude::*;
use serde::Serialize;

use super::algebra::{Element, SuperAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{vec_add, vec_is_zero, vec_scale, vec_sub};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    Mul(Box<Term>, Box<Term>),
    /// Integer linear combination.
    Sum(Vec<(i64, Term)>),
    Assoc(Box<Term>, Box<Term>, Box<Term>),
    SComm(Box<Term>, Box<Term>),
    Circle(Box<Term>, Box<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdentity {
    pub name: String,
    /// Variable names with their parity slots.
    pub vars: Vec<(String, u8)>,
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub holds: bool,
    /// Variable assignment of the first failing tuple.
    pub witness: Option<Vec<(String, String)>>,
    pub evaluations: usize,
}

struct P<'a> {
    s: &'a [u8],
    pos: usize,
    vars: &'a [(String, u8)],
}

impl P<'_> {
    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected '{}' at offset {}", c as char, self.pos)))
        }
    }

    fn sum(&mut self) -> Result<Term> {
        if self.peek() == Some(b'0') && self.s[self.pos..].iter().all(|c| *c == b'0' || c.is_ascii_whitespace()) {
            self.pos = self.s.len();
            return Ok(Term::Sum(Vec::new()));
        }
        let mut parts = Vec::new();
        let mut sign = 1;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -1;
        }
        loop {
            let (c, t) = self.monomial()?;
            parts.push((sign * c, t));
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        if parts.len() == 1 && parts[0].0 == 1 {
            return Ok(parts.pop().unwrap().1);
        }
        Ok(Term::Sum(parts))
    }

    fn monomial(&mut self) -> Result<(i64, Term)> {
        let mut coef = 1i64;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let st = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            coef = std::str::from_utf8(&self.s[st..self.pos]).unwrap().parse().unwrap();
        }
        let mut t = self.factor()?;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'(' || c == b'[' || c == b'{') {
            t = Term::Mul(Box::new(t), Box::new(self.factor()?));
        }
        Ok((coef, t))
    }

    fn factor(&mut self) -> Result<Term> {
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                let name = (c as char).to_string();
                let i = self
                    .vars
                    .iter()
                    .position(|(v, _)| *v == name)
                    .ok_or_else(|| Error::Parse(format!("undeclared variable {name}")))?;
                Ok(Term::Var(i))
            }
            Some(b'(') => {
                self.pos += 1;
                let a = self.sum()?;
                if self.peek() == Some(b',') {
                    self.pos += 1;
                    let b = self.sum()?;
                    self.expect(b',')?;
                    let c = self.sum()?;
                    self.expect(b')')?;
                    Ok(Term::Assoc(Box::new(a), Box::new(b), Box::new(c)))
                } else {
                    self.expect(b')')?;
                    Ok(a)
                }
            }
            Some(open @ (b'[' | b'{')) => {
                self.pos += 1;
                let a = self.sum()?;
                self.expect(b',')?;
                let b = self.sum()?;
                self.expect(if open == b'[' { b']' } else { b'}' })?;
                Ok(if open == b'[' {
                    Term::SComm(Box::new(a), Box::new(b))
                } else {
                    Term::Circle(Box::new(a), Box::new(b))
                })
            }
            other => Err(Error::Parse(format!("unexpected {:?} at offset {}", other.map(|c| c as char), self.pos))),
        }
    }
}

fn parity(t: &Term, vars: &[(String, u8)]) -> Result<u8> {
    Ok(match t {
        Term::Var(i) => vars[*i].1,
        Term::Mul(a, b) | Term::SComm(a, b) | Term::Circle(a, b) => (parity(a, vars)? + parity(b, vars)?) % 2,
        Term::Assoc(a, b, c) => (parity(a, vars)? + parity(b, vars)? + parity(c, vars)?) % 2,
        Term::Sum(parts) => {
            let ps: Vec<u8> = parts.iter().map(|(_, t)| parity(t, vars)).collect::<Result<_>>()?;
            if ps.windows(2).any(|w| w[0] != w[1]) {
                return Err(Error::Invalid("sum of terms of different parities".into()));
            }
            ps.first().copied().unwrap_or(0)
        }
    })
}

/// (min, max) number of occurrences of variable `v` over the monomials.
fn degree(t: &Term, v: usize) -> (usize, usize) {
    match t {
        Term::Var(i) => {
            let d = usize::from(*i == v);
            (d, d)
        }
        Term::Mul(a, b) | Term::SComm(a, b) | Term::Circle(a, b) => {
            let (x, y) = (degree(a, v), degree(b, v));
            (x.0 + y.0, x.1 + y.1)
        }
        Term::Assoc(a, b, c) => {
            let (x, y, z) = (degree(a, v), degree(b, v), degree(c, v));
            (x.0 + y.0 + z.0, x.1 + y.1 + z.1)
        }
        Term::Sum(parts) if parts.is_empty() => (usize::MAX, 0),
        Term::Sum(parts) => parts.iter().map(|(_, t)| degree(t, v)).fold((usize::MAX, 0), |acc, d| {
            (acc.0.min(d.0), acc.1.max(d.1))
        }),
    }
}

impl GradedIdentity {
    /// Parses `lhs = rhs` over variables with the given parities.
    pub fn parse(name: &str, vars: &[(&str, u8)], text: &str) -> Result<GradedIdentity> {
        let vars: Vec<(String, u8)> = vars.iter().map(|(v, p)| (v.to_string(), *p)).collect();
        if vars.iter().any(|(v, p)| v.len() != 1 || !v.as_bytes()[0].is_ascii_alphabetic() || *p > 1) {
            return Err(Error::Parse("variables must be single letters with parity 0 or 1".into()));
        }
        let (l, r) = text
            .split_once('=')
            .ok_or_else(|| Error::Parse("identity needs '='".into()))?;
        let mut pl = P { s: l.as_bytes(), pos: 0, vars: &vars };
        let lhs = pl.sum()?;
        if pl.peek().is_some() {
            return Err(Error::Parse(format!("trailing input in {l:?}")));
        }
        let mut pr = P { s: r.as_bytes(), pos: 0, vars: &vars };
        let rhs = pr.sum()?;
        if pr.peek().is_some() {
            return Err(Error::Parse(format!("trailing input in {r:?}")));
        }
        let id = GradedIdentity { name: name.to_string(), vars, lhs, rhs };
        id.well_formed()?;
        Ok(id)
    }

    fn well_formed(&self) -> Result<()> {
        let pl = parity(&self.lhs, &self.vars)?;
        let pr = parity(&self.rhs, &self.vars)?;
        let zero = |t: &Term| matches!(t, Term::Sum(p) if p.is_empty());
        if pl != pr && !zero(&self.lhs) && !zero(&self.rhs) {
            return Err(Error::Invalid(format!("{}: sides have different parities", self.name)));
        }
        for v in 0..self.vars.len() {
            let (a, b) = (degree(&self.lhs, v), degree(&self.rhs, v));
            let (lo, hi) = (a.0.min(b.0), a.1.max(b.1));
            if lo != hi {
                return Err(Error::Invalid(format!(
                    "{}: not homogeneous in {}",
                    self.name, self.vars[v].0
                )));
            }
        }
        Ok(())
    }

    /// Occurrences of each variable per monomial.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vars.len()).map(|v| degree(&self.lhs, v).1.max(degree(&self.rhs, v).1)).collect()
    }

    /// lhs - rhs at an assignment.
    pub fn evaluate(&self, a: &SuperAlgebra, values: &[Element]) -> Result<Element> {
        let l = eval(a, &self.lhs, &self.vars, values)?;
        let r = eval(a, &self.rhs, &self.vars, values)?;
        Ok(vec_sub(a.field(), &l, &r))
    }
}

fn eval(a: &SuperAlgebra, t: &Term, vars: &[(String, u8)], values: &[Element]) -> Result<Element> {
    let f = a.field();
    Ok(match t {
        Term::Var(i) => values[*i].clone(),
        Term::Mul(x, y) => a.mul(&eval(a, x, vars, values)?, &eval(a, y, vars, values)?),
        Term::Sum(parts) => {
            let mut acc = a.zero();
            for (c, t) in parts {
                acc = vec_add(f, &acc, &vec_scale(f, &f.from_i64(*c), &eval(a, t, vars, values)?));
            }
            acc
        }
        Term::Assoc(x, y, z) => a.associator(
            &eval(a, x, vars, values)?,
            &eval(a, y, vars, values)?,
            &eval(a, z, vars, values)?,
        ),
        Term::SComm(x, y) => {
            let (u, v) = (eval(a, x, vars, values)?, eval(a, y, vars, values)?);
            let odd = parity(x, vars)? * parity(y, vars)? == 1;
            let uv = a.mul(&u, &v);
            let vu = a.mul(&v, &u);
            if odd {
                vec_add(f, &uv, &vu)
            } else {
                vec_sub(f, &uv, &vu)
            }
        }
        Term::Circle(x, y) => a.circle(&eval(a, x, vars, values)?, &eval(a, y, vars, values)?),
    })
}

/// Evaluates the identity on basis assignments matching the parity slots.
/// Variables of degree 2 additionally range over sums of two basis
/// elements of their parity, which decides quadratic dependence exactly
/// in every characteristic. Higher degrees are rejected.
pub fn check_identity(a: &SuperAlgebra, id: &GradedIdentity) -> Result<IdentityReport> {
    let degs = id.degrees();
    let mut candidates: Vec<Vec<Element>> = Vec::new();
    let mut labels: Vec<Vec<String>> = Vec::new();
    for (v, (_, p)) in id.vars.iter().enumerate() {
        let idx = a.basis_of_parity(*p);
        let mut c: Vec<Element> = idx.iter().map(|&i| a.basis(i)).collect();
        let mut l: Vec<String> = idx.iter().map(|&i| a.names()[i].clone()).collect();
        match degs[v] {
            0 | 1 => {}
            2 => {
                for (x, &i) in idx.iter().enumerate() {
                    for &j in &idx[x + 1..] {
                        c.push(vec_add(a.field(), &a.basis(i), &a.basis(j)));
                        l.push(format!("{}+{}", a.names()[i], a.names()[j]));
                    }
                }
            }
            d => {
                return Err(Error::Unsupported(format!(
                    "{}: variable {} has degree {d}; only degree <= 2 is supported",
                    id.name, id.vars[v].0
                )))
            }
        }
        candidates.push(c);
        labels.push(l);
    }
    let sizes: Vec<usize> = candidates.iter().map(|c| c.len()).collect();
    let total: usize = sizes.iter().product();
    let decode = |t: usize| {
        let mut idx = vec![0; sizes.len()];
        let mut r = t;
        for v in (0..sizes.len()).rev() {
            idx[v] = r % sizes[v];
            r /= sizes[v];
        }
        idx
    };
    let hit = (0..total).into_par_iter().find_map_first(|t| {
        let idx = decode(t);
        let vals: Vec<Element> = idx.iter().enumerate().map(|(v, &i)| candidates[v][i].clone()).collect();
        match id.evaluate(a, &vals) {
            Ok(r) if vec_is_zero(a.field(), &r) => None,
            Ok(_) => Some(Ok(idx)),
            Err(e) => Some(Err(e)),
        }
    });
    let witness = match hit {
        None => None,
        Some(Err(e)) => return Err(e),
        Some(Ok(idx)) => Some(
            idx.iter()
                .enumerate()
                .map(|(v, &i)| (id.vars[v].0.clone(), labels[v][i].clone()))
                .collect(),
        ),
    };
    Ok(IdentityReport { identity: id.name.clone(), holds: witness.is_none(), witness, evaluations: total })
}

/// Identities valid in every alternative algebra, all variables even.
pub fn alternative_identities() -> Vec<GradedIdentity> {
    let even = |names: &str| -> Vec<(String, u8)> { names.chars().map(|c| (c.to_string(), 0)).collect() };
    let specs: [(&str, &str, &str); 9] = [
        ("commutator-of-product", "abc", "[ab,c] = a[b,c] + [a,c]b + 3(a,b,c)"),
        ("associator-of-product", "abcd", "(ab,c,d) = a(b,c,d) + (a,c,d)b - (a,b,[c,d])"),
        ("commutator-with-associator", "abcd", "[(a,b,c),d] = (ab,c,d) + (bc,a,d) + (ca,b,d)"),
        ("nested-associator", "abc", "((c,a,b),a,b) = [a,b](c,a,b)"),
        (
            "associator-of-associator",
            "abcxy",
            "((a,b,c),x,y) = ((a,x,y),b,c) + (a,(b,x,y),c) + (a,b,(c,x,y)) - [b,(a,c,[x,y])] + ([a,c],b,[x,y])",
        ),
        ("associator-right-product", "zxty", "(z,x,ty) = -(z,t,xy) + (z,x,y)t + (z,t,y)x"),
        ("associator-right-product-swapped", "zxyt", "(z,x,yt) = -(z,t,yx) + x(z,t,y) + t(z,x,y)"),
        ("right-moufang", "zyx", "z(yxy) = ((zy)x)y"),
        ("middle-moufang", "zyx", "(zy)(xz) = (z(yx))z"),
    ];
    specs
        .iter()
        .map(|(name, vars, text)| {
            let v = even(vars);
            let refs: Vec<(&str, u8)> = v.iter().map(|(s, p)| (s.as_str(), *p)).collect();
            GradedIdentity::parse(name, &refs, text).expect("built-in identity parses")
        })
        .collect()
}

/// The graded alternative laws written as identities, one instance per
/// parity pattern of the variables (Koszul signs folded into the text).
pub fn superalternative_identities() -> Vec<GradedIdentity> {
    let mut out = Vec::new();
    for pi in 0..2u8 {
        for pj in 0..2u8 {
            for pk in 0..2u8 {
                let vars = [("a", pi), ("b", pj), ("c", pk)];
                let s1 = if pj * pk == 1 { "" } else { "-" };
                let s2 = if pi * pj == 1 { "" } else { "-" };
                out.push(
                    GradedIdentity::parse(&format!("right-graded-skew[{pi}{pj}{pk}]"), &vars, &format!("(a,b,c) = {s1}(a,c,b)"))
                        .unwrap(),
                );
                out.push(
                    GradedIdentity::parse(&format!("left-graded-skew[{pi}{pj}{pk}]"), &vars, &format!("(a,b,c) = {s2}(b,a,c)"))
                        .unwrap(),
                );
            }
        }
        out.push(
            GradedIdentity::parse(&format!("even-left-alternative[{pi}]"), &[("a", 0), ("c", pi)], "(a,a,c) = 0")
                .unwrap(),
        );
    }
    out
}

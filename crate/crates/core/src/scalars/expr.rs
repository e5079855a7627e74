//! Small arithmetic expression language shared by scalar, polynomial and
//! field-spec parsing (and the enveloping-algebra CLI).

use num_bigint::BigInt;

use super::field::{is_identifier, Field, Scalar};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Int(t.parse().unwrap()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.product()?;
        loop {
            if self.eat('+') {
                e = Expr::Add(Box::new(e), Box::new(self.product()?));
            } else if self.eat('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.product()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            if self.eat('*') {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.eat('/') {
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else if matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_) | Tok::Op('('))) {
                // juxtaposition, as in 2w or 3(a+1)
                e = Expr::Mul(Box::new(e), Box::new(self.power()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let a = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.pos += 1;
                    let n: i64 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(Expr::Pow(Box::new(a), if neg { -n } else { n }));
                }
                _ => return Err(Error::Parse("exponent must be an integer literal".into())),
            }
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Ident(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(e)
}

/// Operations an expression can be evaluated into.
pub trait ExprTarget: Sized {
    fn from_int(&self, n: &BigInt) -> Result<Self::Value>;
    fn ident(&self, name: &str) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn neg(&self, a: &Self::Value) -> Result<Self::Value>;
    fn one(&self) -> Result<Self::Value>;
    fn inv(&self, a: &Self::Value) -> Result<Self::Value> {
        self.div(&self.one()?, a)
    }
    type Value: Clone;
}

pub fn eval<T: ExprTarget>(t: &T, e: &Expr) -> Result<T::Value> {
    Ok(match e {
        Expr::Int(n) => t.from_int(n)?,
        Expr::Ident(s) => t.ident(s)?,
        Expr::Neg(a) => t.neg(&eval(t, a)?)?,
        Expr::Add(a, b) => t.add(&eval(t, a)?, &eval(t, b)?)?,
        Expr::Sub(a, b) => t.sub(&eval(t, a)?, &eval(t, b)?)?,
        Expr::Mul(a, b) => t.mul(&eval(t, a)?, &eval(t, b)?)?,
        Expr::Div(a, b) => t.div(&eval(t, a)?, &eval(t, b)?)?,
        Expr::Pow(a, k) => {
            let mut base = eval(t, a)?;
            if *k < 0 {
                base = t.inv(&base)?;
            }
            let mut r = t.one()?;
            for _ in 0..k.unsigned_abs() {
                r = t.mul(&r, &base)?;
            }
            r
        }
    })
}

struct ScalarTarget<'a>(&'a Field);

impl ExprTarget for ScalarTarget<'_> {
    type Value = Scalar;
    fn from_int(&self, n: &BigInt) -> Result<Scalar> {
        Ok(self.0.from_bigint(n))
    }
    fn ident(&self, name: &str) -> Result<Scalar> {
        self.0
            .lookup_var(name)
            .ok_or_else(|| Error::Parse(format!("unknown symbol {name} in {}", self.0)))
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.0.add(a, b))
    }
    fn sub(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.0.sub(a, b))
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.0.mul(a, b))
    }
    fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.0.div(a, b)
    }
    fn neg(&self, a: &Scalar) -> Result<Scalar> {
        Ok(self.0.neg(a))
    }
    fn one(&self) -> Result<Scalar> {
        Ok(self.0.one())
    }
}

pub fn eval_scalar(field: &Field, e: &Expr) -> Result<Scalar> {
    eval(&ScalarTarget(field), e)
}

/// Evaluates into polynomials over `field` in the indeterminate `var`.
/// Division is only allowed by nonzero constants.
pub struct PolyTarget<'a> {
    pub field: &'a Field,
    pub var: &'a str,
}

impl ExprTarget for PolyTarget<'_> {
    type Value = Poly;
    fn from_int(&self, n: &BigInt) -> Result<Poly> {
        Ok(Poly::constant(self.field, self.field.from_bigint(n)))
    }
    fn ident(&self, name: &str) -> Result<Poly> {
        if name == self.var {
            return Ok(Poly::x(self.field));
        }
        self.field
            .lookup_var(name)
            .map(|c| Poly::constant(self.field, c))
            .ok_or_else(|| Error::Parse(format!("unknown symbol {name}")))
    }
    fn add(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(a.add(b))
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(a.sub(b))
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(a.mul(b))
    }
    fn div(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        if b.degree() != Some(0) {
            return Err(Error::Parse("division by a non-constant polynomial".into()));
        }
        Ok(a.scale(&self.field.inv(&b.coeff(0))?))
    }
    fn neg(&self, a: &Poly) -> Result<Poly> {
        Ok(a.neg())
    }
    fn one(&self) -> Result<Poly> {
        Ok(Poly::one(self.field))
    }
}

pub fn parse_poly(field: &Field, var: &str, s: &str) -> Result<Poly> {
    eval(&PolyTarget { field, var }, &parse_expr(s)?)
}

/// Parses `GF(p)`, `Q`, optionally followed by any number of
/// `[var]/(minpoly)` extension steps.
pub fn parse_field(s: &str) -> Result<Field> {
    let s = s.trim();
    let (mut field, mut rest) = if let Some(r) = s.strip_prefix("GF(") {
        let close = r.find(')').ok_or_else(|| Error::Parse(format!("bad field {s:?}")))?;
        let p: u64 = r[..close]
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad characteristic in {s:?}")))?;
        (Field::prime(p)?, &r[close + 1..])
    } else if let Some(r) = s.strip_prefix('Q') {
        (Field::rationals(), r)
    } else {
        return Err(Error::Parse(format!("unknown field {s:?}")));
    };
    loop {
        rest = rest.trim_start();
        if rest.is_empty() {
            return Ok(field);
        }
        let r = rest
            .strip_prefix('[')
            .ok_or_else(|| Error::Parse(format!("expected '[' in {s:?}")))?;
        let close = r.find(']').ok_or_else(|| Error::Parse(format!("missing ']' in {s:?}")))?;
        let var = r[..close].trim();
        if !is_identifier(var) {
            return Err(Error::Parse(format!("bad generator name {var:?}")));
        }
        let r = r[close + 1..].trim_start();
        let r = r
            .strip_prefix("/(")
            .or_else(|| r.strip_prefix('/').map(|x| x.trim_start()).and_then(|x| x.strip_prefix('(')))
            .ok_or_else(|| Error::Parse(format!("expected '/(' in {s:?}")))?;
        // find the matching parenthesis
        let mut depth = 1;
        let mut end = None;
        for (i, c) in r.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        end = Some(i);
                        break;
                    }
                }
                _ => {}
            }
        }
        let end = end.ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s:?}")))?;
        let m = parse_poly(&field, var, &r[..end])?;
        field = Field::extension(&field, var, &m)?;
        rest = &r[end + 1..];
    }
}

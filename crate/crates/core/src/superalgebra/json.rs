//! Algebra interchange format.

use serde::{Deserialize, Serialize};

use super::algebra::SuperAlgebra;
use crate::error::{Error, Result};
use crate::scalars::parse_field;

/// `{field, dim, parity, unit?, names?, sc: [[i, j, k, "c"], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: String,
    pub dim: usize,
    pub parity: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub sc: Vec<(usize, usize, usize, String)>,
}

impl AlgebraJson {
    pub fn from_algebra(a: &SuperAlgebra) -> AlgebraJson {
        let f = a.field();
        AlgebraJson {
            field: f.to_string(),
            dim: a.dim(),
            parity: a.parity().to_vec(),
            unit: a.unit(),
            names: Some(a.names().to_vec()),
            sc: a.entries().into_iter().map(|(i, j, k, c)| (i, j, k, f.fmt_scalar(&c))).collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<SuperAlgebra> {
        let f = parse_field(&self.field)?;
        if self.parity.len() != self.dim {
            return Err(Error::Invalid(format!(
                "parity has {} entries for dimension {}",
                self.parity.len(),
                self.dim
            )));
        }
        let entries = self
            .sc
            .iter()
            .map(|(i, j, k, c)| Ok((*i, *j, *k, f.parse_scalar(c)?)))
            .collect::<Result<Vec<_>>>()?;
        SuperAlgebra::new(&f, self.parity.clone(), entries, self.unit, self.names.clone())
    }
}

impl SuperAlgebra {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(AlgebraJson::from_algebra(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SuperAlgebra> {
        let j: AlgebraJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        j.to_algebra()
    }

    pub fn from_json_str(s: &str) -> Result<SuperAlgebra> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        SuperAlgebra::from_json(&v)
    }
}

struct ElementTarget<'a>(&'a SuperAlgebra);

impl crate::scalars::expr::ExprTarget for ElementTarget<'_> {
    type Value = crate::superalgebra::Element;
    fn from_int(&self, n: &num_bigint::BigInt) -> Result<Self::Value> {
        let one = self.one()?;
        Ok(self.0.scale(&self.0.field().from_bigint(n), &one))
    }
    fn ident(&self, name: &str) -> Result<Self::Value> {
        if let Some(i) = self.0.names().iter().position(|x| x == name) {
            return Ok(self.0.basis(i));
        }
        if let Some(c) = self.0.field().lookup_var(name) {
            return Ok(self.0.scale(&c, &self.one()?));
        }
        Err(Error::Parse(format!("unknown basis element {name}")))
    }
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value> {
        Ok(crate::linalg::vec_add(self.0.field(), a, b))
    }
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value> {
        Ok(crate::linalg::vec_sub(self.0.field(), a, b))
    }
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value> {
        Ok(self.0.mul(a, b))
    }
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value> {
        // only division by scalars
        let f = self.0.field();
        let one = self.one()?;
        let nz: Vec<usize> = (0..b.len()).filter(|&i| !f.is_zero(&b[i])).collect();
        let Some(&k) = nz.first() else {
            return Err(Error::DivisionByZero);
        };
        let c = f.div(&b[k], &one[k])?;
        if self.0.scale(&c, &one) != *b {
            return Err(Error::Parse("division only by scalars".into()));
        }
        Ok(self.0.scale(&f.inv(&c)?, a))
    }
    fn neg(&self, a: &Self::Value) -> Result<Self::Value> {
        Ok(self.0.scale(&self.0.field().neg(&self.0.field().one()), a))
    }
    fn one(&self) -> Result<Self::Value> {
        self.0
            .unit_element()
            .ok_or_else(|| Error::Precondition("scalars in an element need a unital algebra".into()))
    }
}

impl SuperAlgebra {
    /// Parses an element written with basis names, e.g. `2*t^2 + 1`.
    pub fn parse_element(&self, s: &str) -> Result<crate::superalgebra::Element> {
        crate::scalars::expr::eval(&ElementTarget(self), &crate::scalars::parse_expr(s)?)
    }
}

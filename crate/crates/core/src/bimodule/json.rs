//! Bimodule interchange format.

use serde::{Deserialize, Serialize};

use super::SuperBimodule;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::superalgebra::{AlgebraJson, SuperAlgebra};

/// `{algebra, dim, parity, act_left, act_right}` with row-major matrices.
/// `algebra` is either an inline algebra document or a file reference
/// resolved by the caller.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BimoduleJson {
    pub algebra: serde_json::Value,
    pub dim: usize,
    pub parity: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub act_left: Vec<Vec<Vec<String>>>,
    pub act_right: Vec<Vec<Vec<String>>>,
}

impl SuperBimodule {
    pub fn to_json(&self) -> serde_json::Value {
        let f = self.field();
        let enc = |m: &Matrix| -> Vec<Vec<String>> {
            m.to_rows().iter().map(|r| r.iter().map(|x| f.fmt_scalar(x)).collect()).collect()
        };
        let j = BimoduleJson {
            algebra: serde_json::to_value(AlgebraJson::from_algebra(self.algebra())).expect("serializable"),
            dim: self.dim(),
            parity: self.parity().to_vec(),
            names: Some(self.names().to_vec()),
            act_left: self.act_left.iter().map(enc).collect(),
            act_right: self.act_right.iter().map(enc).collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    /// Loads a bimodule; string-valued `algebra` fields are passed to `resolve`.
    pub fn from_json_with(
        v: &serde_json::Value,
        resolve: impl Fn(&str) -> Result<SuperAlgebra>,
    ) -> Result<SuperBimodule> {
        let j: BimoduleJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let a = match &j.algebra {
            serde_json::Value::String(s) => resolve(s)?,
            other => SuperAlgebra::from_json(other)?,
        };
        if j.parity.len() != j.dim {
            return Err(Error::Invalid(format!("parity has {} entries for dimension {}", j.parity.len(), j.dim)));
        }
        let f = a.field().clone();
        let dec = |rows: &Vec<Vec<String>>| -> Result<Matrix> {
            if rows.len() != j.dim || rows.iter().any(|r| r.len() != j.dim) {
                return Err(Error::Invalid(format!("action matrix is not {0}x{0}", j.dim)));
            }
            let data = rows
                .iter()
                .map(|r| r.iter().map(|x| f.parse_scalar(x)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            if j.dim == 0 {
                return Ok(Matrix::zeros(&f, 0, 0));
            }
            Matrix::from_rows(&f, data)
        };
        let act_left = j.act_left.iter().map(dec).collect::<Result<Vec<_>>>()?;
        let act_right = j.act_right.iter().map(dec).collect::<Result<Vec<_>>>()?;
        SuperBimodule::new(a, j.parity, act_left, act_right, j.names)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<SuperBimodule> {
        SuperBimodule::from_json_with(v, |s| {
            Err(Error::Invalid(format!("algebra reference {s:?} cannot be resolved here")))
        })
    }
}

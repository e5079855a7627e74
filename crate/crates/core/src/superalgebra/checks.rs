//! Graded alternativity, the Grassmann envelope cross-check, supercenter
//! and graded simplicity.

use rayon::prelude::*;
use serde::Serialize;

use super::algebra::{push_sparse, SparseVec, SuperAlgebra, TABLE_CAP};
use crate::error::{pre, Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalars::{Field, Scalar};

/// Failing basis tuple of a law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawWitness {
    pub law: String,
    pub indices: Vec<usize>,
    pub names: Vec<String>,
    /// Value of the law's left side minus right side at the witness.
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub holds: bool,
    pub witness: Option<LawWitness>,
}

impl LawReport {
    fn pass() -> LawReport {
        LawReport { holds: true, witness: None }
    }
}

fn sparse_add(f: &Field, a: &SparseVec, b: &SparseVec, sign: bool) -> SparseVec {
    let mut out = a.clone();
    for (k, c) in b {
        push_sparse(f, &mut out, *k, if sign { c.clone() } else { f.neg(c) });
    }
    out
}

fn describe_sparse(a: &SuperAlgebra, v: &SparseVec) -> String {
    let mut d = a.zero();
    for (k, c) in v {
        d[*k] = c.clone();
    }
    a.describe(&d)
}

/// One law: arity, an admissibility filter on index tuples, and the value
/// that must vanish.
pub(crate) struct Law<'a> {
    pub name: &'static str,
    pub arity: usize,
    pub eval: Box<dyn Fn(&[usize]) -> Option<SparseVec> + Sync + 'a>,
}

/// Runs laws in order; each law's tuples are scanned in lexicographic order
/// and the first failure (by index order, not by discovery) is reported.
pub(crate) fn run_laws(a: &SuperAlgebra, n: usize, laws: &[Law]) -> LawReport {
    for law in laws {
        let total = n.pow(law.arity as u32);
        let hit = (0..total).into_par_iter().find_map_first(|t| {
            let mut idx = vec![0; law.arity];
            let mut r = t;
            for p in (0..law.arity).rev() {
                idx[p] = r % n;
                r /= n;
            }
            match (law.eval)(&idx) {
                Some(v) if !v.is_empty() => Some((idx, v)),
                _ => None,
            }
        });
        if let Some((idx, v)) = hit {
            return LawReport {
                holds: false,
                witness: Some(LawWitness {
                    law: law.name.to_string(),
                    names: idx.iter().map(|&i| a.names()[i].clone()).collect(),
                    indices: idx,
                    value: describe_sparse(a, &v),
                }),
            };
        }
    }
    LawReport::pass()
}

fn sign(p: u8) -> bool {
    p % 2 == 0
}

/// The graded alternative laws on homogeneous basis triples:
/// (a_i,a_j,a_k) = (-1)^{jk+1} (a_i,a_k,a_j),
/// (a_i,a_j,a_k) = (-1)^{ij+1} (a_j,a_i,a_k),
/// (a_0,a_0,A) = 0 via diagonal and polarized evaluations.
pub(crate) fn superalternative_laws(a: &SuperAlgebra) -> Vec<Law<'_>> {
    let f = a.field();
    let p = a.parity();
    vec![
        Law {
            name: "right-graded-skew",
            arity: 3,
            eval: Box::new(move |t| {
                let (i, j, k) = (t[0], t[1], t[2]);
                Some(sparse_add(f, &a.associator_basis(i, j, k), &a.associator_basis(i, k, j), sign(p[j] * p[k])))
            }),
        },
        Law {
            name: "left-graded-skew",
            arity: 3,
            eval: Box::new(move |t| {
                let (i, j, k) = (t[0], t[1], t[2]);
                Some(sparse_add(f, &a.associator_basis(i, j, k), &a.associator_basis(j, i, k), sign(p[i] * p[j])))
            }),
        },
        Law {
            name: "even-left-diagonal",
            arity: 2,
            eval: Box::new(move |t| (p[t[0]] == 0).then(|| a.associator_basis(t[0], t[0], t[1]))),
        },
        Law {
            name: "even-left-polarized",
            arity: 3,
            eval: Box::new(move |t| {
                let (i, j, k) = (t[0], t[1], t[2]);
                (i < j && p[i] == 0 && p[j] == 0)
                    .then(|| sparse_add(f, &a.associator_basis(i, j, k), &a.associator_basis(j, i, k), true))
            }),
        },
    ]
}

pub fn check_superalternative(a: &SuperAlgebra) -> LawReport {
    run_laws(a, a.dim(), &superalternative_laws(a))
}

/// Ungraded alternativity, ignoring any grading: left and right diagonal
/// and polarized laws on basis elements.
pub fn check_alternative_ungraded(a: &SuperAlgebra) -> LawReport {
    let f = a.field();
    let laws = vec![
        Law { name: "left-diagonal", arity: 2, eval: Box::new(|t| Some(a.associator_basis(t[0], t[0], t[1]))) },
        Law { name: "right-diagonal", arity: 2, eval: Box::new(|t| Some(a.associator_basis(t[1], t[0], t[0]))) },
        Law {
            name: "left-polarized",
            arity: 3,
            eval: Box::new(move |t| {
                (t[0] < t[1]).then(|| {
                    sparse_add(f, &a.associator_basis(t[0], t[1], t[2]), &a.associator_basis(t[1], t[0], t[2]), true)
                })
            }),
        },
        Law {
            name: "right-polarized",
            arity: 3,
            eval: Box::new(move |t| {
                (t[0] < t[1]).then(|| {
                    sparse_add(f, &a.associator_basis(t[2], t[0], t[1]), &a.associator_basis(t[2], t[1], t[0]), true)
                })
            }),
        },
    ];
    run_laws(a, a.dim(), &laws)
}

/// G_k(A) = G_0 (x) A_0 + G_1 (x) A_1 inside the Grassmann algebra on k
/// generators tensored with A. Returned as an ungraded algebra.
pub fn grassmann_envelope(a: &SuperAlgebra, k: usize) -> Result<SuperAlgebra> {
    if k < 2 {
        return pre("Grassmann envelope needs at least 2 generators");
    }
    if k > 20 {
        return Err(Error::SizeCap(format!("{k} Grassmann generators")));
    }
    let n = a.dim();
    let mut basis = Vec::new();
    for mask in 0u32..(1 << k) {
        for i in 0..n {
            if (mask.count_ones() % 2) as u8 == a.parity()[i] {
                basis.push((mask, i));
            }
        }
    }
    let m = basis.len();
    if m.checked_mul(m).map_or(true, |s| s > TABLE_CAP) {
        return Err(Error::SizeCap(format!("envelope of dimension {m} exceeds the table cap")));
    }
    let index: std::collections::HashMap<(u32, usize), usize> =
        basis.iter().enumerate().map(|(x, &b)| (b, x)).collect();
    let f = a.field();
    let mut entries = Vec::new();
    for (x, &(m1, i)) in basis.iter().enumerate() {
        for (y, &(m2, j)) in basis.iter().enumerate() {
            if m1 & m2 != 0 {
                continue;
            }
            // sign of reordering g_{m1} g_{m2} into increasing order
            let mut swaps = 0;
            for g in 0..k {
                if m1 & (1 << g) != 0 {
                    swaps += (m2 & ((1u32 << g) - 1)).count_ones();
                }
            }
            for (t, c) in a.mul_basis(i, j) {
                let z = index[&(m1 | m2, *t)];
                let c = if swaps % 2 == 1 { f.neg(c) } else { c.clone() };
                entries.push((x, y, z, c));
            }
        }
    }
    let names = basis
        .iter()
        .map(|&(mask, i)| {
            let gens: Vec<String> = (0..k).filter(|g| mask & (1 << g) != 0).map(|g| format!("g{g}")).collect();
            let g = if gens.is_empty() { "1".to_string() } else { gens.join("") };
            format!("{g}*{}", a.names()[i])
        })
        .collect();
    let unit = a.unit().map(|u| index[&(0, u)]);
    SuperAlgebra::new(f, vec![0; m], entries, unit, Some(names))
}

/// Superalternativity decided through the Grassmann envelope.
pub fn check_superalternative_via_envelope(a: &SuperAlgebra, k: usize) -> Result<LawReport> {
    Ok(check_alternative_ungraded(&grassmann_envelope(a, k)?))
}

/// Homogeneous elements z of parity `p` with [z,A]_s = 0 and
/// (z,A,A) = (A,z,A) = (A,A,z) = 0.
fn supercenter_part(a: &SuperAlgebra, p: u8) -> Vec<Vec<Scalar>> {
    let f = a.field();
    let n = a.dim();
    let cand = a.basis_of_parity(p);
    if cand.is_empty() {
        return Vec::new();
    }
    let mut cols = Vec::new();
    for &z in &cand {
        let mut col = Vec::new();
        for i in 0..n {
            let zi = a.mul_basis_dense(z, i);
            let iz = a.mul_basis_dense(i, z);
            let odd = p * a.parity()[i] == 1;
            for k in 0..n {
                col.push(if odd { f.add(&zi[k], &iz[k]) } else { f.sub(&zi[k], &iz[k]) });
            }
            for j in 0..n {
                for t in [a.associator_basis(z, i, j), a.associator_basis(i, z, j), a.associator_basis(i, j, z)] {
                    let mut d = vec![f.zero(); n];
                    for (k, c) in t {
                        d[k] = c;
                    }
                    col.extend(d);
                }
            }
        }
        cols.push(col);
    }
    let rows = cols[0].len();
    let m = Matrix::from_cols(f, rows, &cols);
    m.kernel()
        .into_iter()
        .map(|k| {
            let mut v = a.zero();
            for (c, &z) in k.into_iter().zip(&cand) {
                v[z] = c;
            }
            v
        })
        .collect()
}

pub fn supercenter(a: &SuperAlgebra) -> Subspace {
    let mut vs = supercenter_part(a, 0);
    vs.extend(supercenter_part(a, 1));
    Subspace::span(a.field(), a.dim(), &vs)
}

pub fn center_even(a: &SuperAlgebra) -> Subspace {
    Subspace::span(a.field(), a.dim(), &supercenter_part(a, 0))
}

/// Graded simplicity: Reg A has no proper nonzero subspace invariant under
/// all multiplications and the parity projections.
pub fn is_graded_simple(a: &SuperAlgebra) -> Result<bool> {
    if a.has_zero_product() {
        return pre("graded simplicity needs A^2 != 0");
    }
    let reg = crate::bimodule::regular_bimodule(a);
    crate::bimodule::is_graded_irreducible(&reg)
}

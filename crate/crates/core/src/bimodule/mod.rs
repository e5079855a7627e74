//! Superbimodules over superalgebras given by action matrices.
//!
//! The stored truth is the raw action: `act_left[i]` is v -> e_i.v and
//! `act_right[i]` is v -> v.e_i, column c being the image of basis vector c.
//! The signed birepresentation operators are derived on demand.

mod json;
mod norton;

use std::sync::Arc;

use serde::Serialize;

use crate::error::{pre, Error, Result};
use crate::linalg::{spin_closure, Matrix, Subspace};
use crate::scalars::{Field, Scalar};
use crate::superalgebra::{run_laws, superalternative_laws, Law, LawWitness, SuperAlgebra};

pub use json::BimoduleJson;
pub use norton::{exhaustive_invariant_subspace, minimal_invariant_subspace, norton_test, NortonCertificate, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperBimodule {
    algebra: Arc<SuperAlgebra>,
    parity: Vec<u8>,
    act_left: Vec<Matrix>,
    act_right: Vec<Matrix>,
    names: Vec<String>,
}

fn sign_of(f: &Field, odd: bool) -> Scalar {
    if odd {
        f.neg(&f.one())
    } else {
        f.one()
    }
}

impl SuperBimodule {
    pub fn new(
        algebra: impl Into<Arc<SuperAlgebra>>,
        parity: Vec<u8>,
        act_left: Vec<Matrix>,
        act_right: Vec<Matrix>,
        names: Option<Vec<String>>,
    ) -> Result<SuperBimodule> {
        let algebra = algebra.into();
        let m = parity.len();
        let names = match names {
            Some(v) if v.len() == m => v,
            Some(_) => return Err(Error::Invalid("names length differs from module dimension".into())),
            None => (0..m).map(|i| format!("v{i}")).collect(),
        };
        let v = SuperBimodule { algebra, parity, act_left, act_right, names };
        v.validate()?;
        Ok(v)
    }

    /// Builds a bimodule from closures giving e_i.v_c and v_c.e_i as dense vectors.
    pub fn from_actions(
        algebra: impl Into<Arc<SuperAlgebra>>,
        parity: Vec<u8>,
        names: Option<Vec<String>>,
        left: impl Fn(usize, usize) -> Vec<Scalar>,
        right: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Result<SuperBimodule> {
        let algebra: Arc<SuperAlgebra> = algebra.into();
        let f = algebra.field().clone();
        let m = parity.len();
        let n = algebra.dim();
        let act_left = (0..n).map(|i| Matrix::from_cols(&f, m, &(0..m).map(|c| left(i, c)).collect::<Vec<_>>())).collect();
        let act_right =
            (0..n).map(|i| Matrix::from_cols(&f, m, &(0..m).map(|c| right(i, c)).collect::<Vec<_>>())).collect();
        SuperBimodule::new(algebra, parity, act_left, act_right, names)
    }

    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        let m = self.dim();
        if self.parity.iter().any(|&p| p > 1) {
            return Err(Error::Invalid("parity entries must be 0 or 1".into()));
        }
        if self.act_left.len() != a.dim() || self.act_right.len() != a.dim() {
            return Err(Error::Invalid("one action matrix per algebra basis element is required".into()));
        }
        for (i, mat) in self.act_left.iter().chain(&self.act_right).enumerate() {
            let i = i % a.dim();
            if mat.rows() != m || mat.cols() != m {
                return Err(Error::Invalid(format!("action matrix for {} is not {m}x{m}", a.names()[i])));
            }
            if mat.field() != a.field() {
                return Err(Error::FieldMismatch(mat.field().to_string(), a.field().to_string()));
            }
            for r in 0..m {
                for c in 0..m {
                    if !a.field().is_zero(mat.get(r, c)) && self.parity[r] != (self.parity[c] + a.parity()[i]) % 2 {
                        return Err(Error::Invalid(format!(
                            "grading violated: action of {} sends {} onto {}",
                            a.names()[i],
                            self.names[c],
                            self.names[r]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<SuperAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn act_left(&self, i: usize) -> &Matrix {
        &self.act_left[i]
    }

    pub fn act_right(&self, i: usize) -> &Matrix {
        &self.act_right[i]
    }

    pub fn left_elem(&self, x: &[Scalar]) -> Matrix {
        self.combine(&self.act_left, x)
    }

    pub fn right_elem(&self, x: &[Scalar]) -> Matrix {
        self.combine(&self.act_right, x)
    }

    fn combine(&self, mats: &[Matrix], x: &[Scalar]) -> Matrix {
        let f = self.field();
        let mut out = Matrix::zeros(f, self.dim(), self.dim());
        for (c, m) in x.iter().zip(mats) {
            if !f.is_zero(c) {
                out = out.add_scaled(c, m);
            }
        }
        out
    }

    /// rho(e_i): v -> v.e_i.
    pub fn rho(&self, i: usize) -> Matrix {
        self.act_right[i].clone()
    }

    /// lambda(e_i): v -> (-1)^{|e_i||v|} e_i.v.
    pub fn lambda(&self, i: usize) -> Matrix {
        let f = self.field();
        let p = self.algebra.parity()[i];
        let m = self.dim();
        Matrix::from_fn(f, m, m, |r, c| {
            let x = self.act_left[i].get(r, c);
            if p * self.parity[c] == 1 {
                f.neg(x)
            } else {
                x.clone()
            }
        })
    }

    /// Projection onto the homogeneous component of parity `p`.
    pub fn parity_projection(&self, p: u8) -> Matrix {
        let f = self.field();
        let m = self.dim();
        Matrix::from_fn(f, m, m, |r, c| if r == c && self.parity[r] == p { f.one() } else { f.zero() })
    }

    /// All raw action matrices, left then right.
    pub fn action_matrices(&self) -> Vec<&Matrix> {
        self.act_left.iter().chain(&self.act_right).collect()
    }

    /// Operators whose common invariant subspaces are the subbimodules:
    /// raw actions, plus the parity projections in the graded case.
    pub fn operators(&self, graded: bool) -> Vec<Matrix> {
        let mut g: Vec<Matrix> = self.act_left.iter().chain(&self.act_right).cloned().collect();
        if graded {
            g.push(self.parity_projection(0));
            g.push(self.parity_projection(1));
        }
        g
    }

    fn operator_names(&self, graded: bool) -> Vec<String> {
        let a = self.algebra.names();
        let mut out: Vec<String> = a.iter().map(|x| format!("L({x})")).collect();
        out.extend(a.iter().map(|x| format!("R({x})")));
        if graded {
            out.push("P0".into());
            out.push("P1".into());
        }
        out
    }

    /// Smallest subbimodule containing the seeds.
    pub fn spin(&self, seeds: &[Vec<Scalar>]) -> Subspace {
        spin_closure(self.field(), self.dim(), &self.action_matrices(), seeds)
    }

    /// Smallest graded subbimodule containing the seeds.
    pub fn spin_graded(&self, seeds: &[Vec<Scalar>]) -> Subspace {
        let ops = self.operators(true);
        let refs: Vec<&Matrix> = ops.iter().collect();
        spin_closure(self.field(), self.dim(), &refs, seeds)
    }

    pub fn is_subbimodule(&self, s: &Subspace) -> bool {
        self.action_matrices().iter().all(|m| s.is_invariant(m))
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// a.v and v.a for a = unit of A act as the identity.
    pub fn is_unital(&self) -> bool {
        let Some(u) = self.algebra.unit_element() else {
            return false;
        };
        let id = Matrix::identity(self.field(), self.dim());
        self.left_elem(&u) == id && self.right_elem(&u) == id
    }

    /// Same actions with the parity of every module vector flipped and
    /// the left action twisted by (-1)^{|a|}.
    pub fn opposite(&self) -> SuperBimodule {
        let act_left = self
            .act_left
            .iter()
            .enumerate()
            .map(|(i, m)| if self.algebra.parity()[i] == 1 { m.neg() } else { m.clone() })
            .collect();
        SuperBimodule {
            algebra: self.algebra.clone(),
            parity: self.parity.iter().map(|p| 1 - p).collect(),
            act_left,
            act_right: self.act_right.clone(),
            names: self.names.clone(),
        }
    }

    /// Direct sum V + W over the same algebra.
    pub fn direct_sum(&self, w: &SuperBimodule) -> Result<SuperBimodule> {
        if self.algebra != w.algebra {
            return pre("direct sum needs bimodules over the same algebra");
        }
        let f = self.field();
        let (m1, m2) = (self.dim(), w.dim());
        let blk = |x: &Matrix, y: &Matrix| {
            Matrix::from_fn(f, m1 + m2, m1 + m2, |r, c| {
                if r < m1 && c < m1 {
                    x.get(r, c).clone()
                } else if r >= m1 && c >= m1 {
                    y.get(r - m1, c - m1).clone()
                } else {
                    f.zero()
                }
            })
        };
        let act_left = self.act_left.iter().zip(&w.act_left).map(|(x, y)| blk(x, y)).collect();
        let act_right = self.act_right.iter().zip(&w.act_right).map(|(x, y)| blk(x, y)).collect();
        let mut parity = self.parity.clone();
        parity.extend(&w.parity);
        let mut names: Vec<String> = self.names.iter().map(|s| format!("{s}'")).collect();
        names.extend(w.names.iter().map(|s| format!("{s}''")));
        SuperBimodule::new(self.algebra.clone(), parity, act_left, act_right, Some(names))
    }

    /// Changes one entry of one action matrix (testing aid for mutation checks).
    pub fn with_entry(&self, left: bool, i: usize, r: usize, c: usize, value: Scalar) -> Result<SuperBimodule> {
        let mut v = self.clone();
        let mats = if left { &mut v.act_left } else { &mut v.act_right };
        mats.get_mut(i).ok_or_else(|| Error::Invalid("action index out of range".into()))?.set(r, c, value);
        v.validate()?;
        Ok(v)
    }

    /// Restriction to an invariant subspace, in the coordinates of its echelon basis.
    pub fn restrict(&self, s: &Subspace) -> Result<SuperBimodule> {
        if !self.is_subbimodule(s) {
            return pre("restriction needs a subbimodule");
        }
        let mut parity = Vec::new();
        for v in s.basis() {
            let ps: Vec<u8> = (0..self.dim()).filter(|&k| !self.field().is_zero(&v[k])).map(|k| self.parity[k]).collect();
            if ps.windows(2).any(|w| w[0] != w[1]) {
                return pre("restriction needs a graded subbimodule with homogeneous echelon basis");
            }
            parity.push(ps[0]);
        }
        let act_left = self.act_left.iter().map(|m| s.restrict(m)).collect();
        let act_right = self.act_right.iter().map(|m| s.restrict(m)).collect();
        SuperBimodule::new(self.algebra.clone(), parity, act_left, act_right, None)
    }
}

/// A acting on itself.
pub fn regular_bimodule(a: &SuperAlgebra) -> SuperBimodule {
    let n = a.dim();
    SuperBimodule {
        algebra: Arc::new(a.clone()),
        parity: a.parity().to_vec(),
        act_left: (0..n).map(|i| a.left_mult(i)).collect(),
        act_right: (0..n).map(|i| a.right_mult(i)).collect(),
        names: a.names().to_vec(),
    }
}

/// E(A,V) = A + V with V.V = 0. Basis: A's basis followed by V's.
pub fn split_null_extension(v: &SuperBimodule) -> Result<SuperAlgebra> {
    let a = v.algebra();
    let n = a.dim();
    let m = v.dim();
    let mut entries = a.entries();
    for i in 0..n {
        for c in 0..m {
            for r in 0..m {
                let l = v.act_left[i].get(r, c);
                if !a.field().is_zero(l) {
                    entries.push((i, n + c, n + r, l.clone()));
                }
                let rr = v.act_right[i].get(r, c);
                if !a.field().is_zero(rr) {
                    entries.push((n + c, i, n + r, rr.clone()));
                }
            }
        }
    }
    let mut parity = a.parity().to_vec();
    parity.extend(&v.parity);
    let mut names = a.names().to_vec();
    names.extend(v.names.iter().cloned());
    let unit = if v.is_unital() { a.unit() } else { None };
    SuperAlgebra::new(a.field(), parity, entries, unit, Some(names))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BimoduleLawReport {
    pub holds: bool,
    pub witness: Option<LawWitness>,
    /// "A" or "V" for each slot of the witness.
    pub roles: Option<Vec<String>>,
}

/// The graded alternative laws on the split null extension, restricted to
/// triples with at most one module slot (the others vanish since V.V = 0).
pub fn check_alternative_bimodule(v: &SuperBimodule) -> Result<BimoduleLawReport> {
    let e = split_null_extension(v)?;
    let n = v.algebra().dim();
    let laws: Vec<Law> = superalternative_laws(&e)
        .into_iter()
        .map(|law| {
            let Law { name, arity, eval } = law;
            Law {
                name,
                arity,
                eval: Box::new(move |t: &[usize]| {
                    if t.iter().filter(|&&i| i >= n).count() > 1 {
                        None
                    } else {
                        eval(t)
                    }
                }),
            }
        })
        .collect();
    let r = run_laws(&e, e.dim(), &laws);
    let roles = r
        .witness
        .as_ref()
        .map(|w| w.indices.iter().map(|&i| if i < n { "A".to_string() } else { "V".to_string() }).collect());
    Ok(BimoduleLawReport { holds: r.holds, witness: r.witness, roles })
}

/// (a,b,v) = (a,v,b) = (v,a,b) = 0 on basis elements.
pub fn is_associative_bimodule(v: &SuperBimodule) -> Result<bool> {
    Ok(associativity_witness(v)?.is_none())
}

/// First basis triple with exactly one module slot and nonzero associator.
pub fn associativity_witness(v: &SuperBimodule) -> Result<Option<(usize, usize, usize)>> {
    let e = split_null_extension(v)?;
    let n = v.algebra().dim();
    let d = e.dim();
    Ok((0..d * d * d)
        .map(|t| (t / (d * d), (t / d) % d, t % d))
        .filter(|&(i, j, k)| [i, j, k].iter().filter(|&&x| x >= n).count() == 1)
        .find(|&(i, j, k)| !e.associator_basis(i, j, k).is_empty()))
}

/// The span of the associators (v,a,b) = (v.a).b - v.(ab), v in V.
pub fn associator_image(v: &SuperBimodule, a: &[Scalar], b: &[Scalar]) -> Subspace {
    let alg = v.algebra();
    let ra = v.right_elem(a);
    let rb = v.right_elem(b);
    let rab = v.right_elem(&alg.mul(a, b));
    let op = rb.mul(&ra).sub(&rab);
    let cols: Vec<Vec<Scalar>> = (0..v.dim()).map(|c| op.col(c)).collect();
    Subspace::span(v.field(), v.dim(), &cols)
}

/// Ann V = {a : a.V = V.a = 0}, computed per parity so the result is graded.
pub fn annihilator(v: &SuperBimodule) -> Subspace {
    let a = v.algebra();
    let f = a.field();
    let n = a.dim();
    let mut out = Subspace::zero(f, n);
    for p in 0..2u8 {
        let idx = a.basis_of_parity(p);
        if idx.is_empty() {
            continue;
        }
        let cols: Vec<Vec<Scalar>> = idx
            .iter()
            .map(|&i| {
                let mut c = Vec::new();
                for m in [&v.act_left[i], &v.act_right[i]] {
                    c.extend(m.to_rows().into_iter().flatten());
                }
                c
            })
            .collect();
        let mat = Matrix::from_cols(f, 2 * v.dim() * v.dim(), &cols);
        for k in mat.kernel() {
            let mut x = a.zero();
            for (c, &i) in k.into_iter().zip(&idx) {
                x[i] = c;
            }
            out.insert(&x);
        }
    }
    out
}

pub fn is_faithful(v: &SuperBimodule) -> bool {
    annihilator(v).is_zero()
}

/// Homogeneous linear maps supercommuting with all lambda(a) and rho(a).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centralizer {
    pub even: Vec<Matrix>,
    pub odd: Vec<Matrix>,
}

impl Centralizer {
    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    /// Every nonzero homogeneous element is invertible. Over a finite field
    /// with at most `cap` elements per homogeneous part this is decided by
    /// enumeration; otherwise basis elements and pairwise sums are tested.
    pub fn is_graded_division(&self, field: &Field, cap: u64) -> bool {
        [&self.even, &self.odd].iter().all(|part| {
            if part.is_empty() {
                return true;
            }
            if let Some(q) = field.order_u64() {
                if let Some(total) = q.checked_pow(part.len() as u32) {
                    if total <= cap {
                        return all_combinations(field, part, total).iter().all(|m| m.is_zero() || m.is_invertible());
                    }
                }
            }
            part.iter().all(|m| m.is_invertible())
                && (0..part.len())
                    .all(|i| (i + 1..part.len()).all(|j| part[i].add(&part[j]).is_invertible()))
        })
    }
}

fn all_combinations(field: &Field, mats: &[Matrix], total: u64) -> Vec<Matrix> {
    let elems = field.enumerate().expect("finite field");
    let q = elems.len() as u64;
    (0..total)
        .map(|mut t| {
            let mut acc = Matrix::zeros(field, mats[0].rows(), mats[0].cols());
            for m in mats {
                let c = &elems[(t % q) as usize];
                t /= q;
                if !field.is_zero(c) {
                    acc = acc.add_scaled(c, m);
                }
            }
            acc
        })
        .collect()
}

/// Solves for maps T of parity `p` from V to W with T X_V = s X_W T for each
/// (X_V, X_W, s) in `conds`. Returns a basis of solutions.
pub(crate) fn solve_homogeneous_maps(
    f: &Field,
    pv: &[u8],
    pw: &[u8],
    p: u8,
    conds: &[(Matrix, Matrix, Scalar)],
) -> Vec<Matrix> {
    let (mv, mw) = (pv.len(), pw.len());
    let slots: Vec<(usize, usize)> = (0..mw)
        .flat_map(|r| (0..mv).map(move |c| (r, c)))
        .filter(|&(r, c)| pw[r] == (pv[c] + p) % 2)
        .collect();
    if slots.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<Scalar>> = slots
        .iter()
        .map(|&(r, c)| {
            // T = E_{rc}: (E X_V)[r][j] = X_V[c][j]; (X_W E)[i][c] = X_W[i][r]
            let mut col = Vec::new();
            for (xv, xw, s) in conds {
                let mut d = vec![f.zero(); mw * mv];
                for j in 0..mv {
                    d[r * mv + j] = f.add(&d[r * mv + j], xv.get(c, j));
                }
                for i in 0..mw {
                    d[i * mv + c] = f.sub(&d[i * mv + c], &f.mul(s, xw.get(i, r)));
                }
                col.extend(d);
            }
            col
        })
        .collect();
    let rows = cols[0].len();
    Matrix::from_cols(f, rows, &cols)
        .kernel()
        .into_iter()
        .map(|k| {
            let mut t = Matrix::zeros(f, mw, mv);
            for (x, &(r, c)) in k.into_iter().zip(&slots) {
                t.set(r, c, x);
            }
            t
        })
        .collect()
}

pub fn centralizer(v: &SuperBimodule) -> Centralizer {
    let f = v.field();
    let a = v.algebra();
    let part = |p: u8| {
        let mut conds = Vec::new();
        for i in 0..a.dim() {
            let s = sign_of(f, p * a.parity()[i] == 1);
            conds.push((v.rho(i), v.rho(i), s.clone()));
            conds.push((v.lambda(i), v.lambda(i), s));
        }
        solve_homogeneous_maps(f, &v.parity, &v.parity, p, &conds)
    };
    Centralizer { even: part(0), odd: part(1) }
}

/// Bimodule maps T: V -> W of parity `p`: T R_V(a) = R_W(a) T and
/// T L_V(a) = (-1)^{p|a|} L_W(a) T.
pub fn intertwiners(v: &SuperBimodule, w: &SuperBimodule, p: u8) -> Result<Vec<Matrix>> {
    if v.algebra != w.algebra {
        return pre("intertwiners need bimodules over the same algebra");
    }
    let f = v.field();
    let a = v.algebra();
    let mut conds = Vec::new();
    for i in 0..a.dim() {
        conds.push((v.act_right[i].clone(), w.act_right[i].clone(), f.one()));
        conds.push((v.act_left[i].clone(), w.act_left[i].clone(), sign_of(f, p * a.parity()[i] == 1)));
    }
    Ok(solve_homogeneous_maps(f, &v.parity, &w.parity, p, &conds))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsoClass {
    Even,
    Odd,
    Both,
    None,
}

impl IsoClass {
    pub fn isomorphic(self) -> bool {
        self != IsoClass::None
    }

    pub fn as_str(self) -> &'static str {
        match self {
            IsoClass::Even => "even-iso",
            IsoClass::Odd => "odd-iso",
            IsoClass::Both => "both",
            IsoClass::None => "none",
        }
    }
}

/// An invertible intertwiner of the given parity, searched among basis
/// solutions and their pairwise sums (for irreducible modules any nonzero
/// intertwiner is invertible, so the first basis solution decides).
pub fn find_isomorphism(v: &SuperBimodule, w: &SuperBimodule, p: u8) -> Result<Option<Matrix>> {
    if v.dim() != w.dim() {
        return Ok(None);
    }
    let sols = intertwiners(v, w, p)?;
    if let Some(t) = sols.iter().find(|t| t.is_invertible()) {
        return Ok(Some(t.clone()));
    }
    for i in 0..sols.len() {
        for j in i + 1..sols.len() {
            let t = sols[i].add(&sols[j]);
            if t.is_invertible() {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

pub fn is_isomorphic_graded(v: &SuperBimodule, w: &SuperBimodule) -> Result<IsoClass> {
    let even = find_isomorphism(v, w, 0)?.is_some();
    let odd = find_isomorphism(v, w, 1)?.is_some();
    Ok(match (even, odd) {
        (true, true) => IsoClass::Both,
        (true, false) => IsoClass::Even,
        (false, true) => IsoClass::Odd,
        (false, false) => IsoClass::None,
    })
}

/// Cayley bimodule of a left module L over an associative algebra H with
/// involution: v.a = a v and a.v = bar(a) v. `involution` has column i equal
/// to bar(e_i); `module[i]` is the matrix of v -> e_i v on L.
pub fn cay(
    h: &SuperAlgebra,
    involution: &Matrix,
    module: &[Matrix],
    parity: Vec<u8>,
) -> Result<SuperBimodule> {
    let f = h.field();
    let n = h.dim();
    if module.len() != n {
        return Err(Error::Invalid("one module matrix per algebra basis element is required".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let prod = module[i].mul(&module[j]);
            let mut want = Matrix::zeros(f, parity.len(), parity.len());
            for (k, c) in h.mul_basis(i, j) {
                want = want.add_scaled(c, &module[*k]);
            }
            if prod != want {
                return Err(Error::Invalid(format!(
                    "left module law fails for {} {}",
                    h.names()[i],
                    h.names()[j]
                )));
            }
        }
    }
    let bar = |i: usize| {
        let mut acc = Matrix::zeros(f, parity.len(), parity.len());
        for k in 0..n {
            let c = involution.get(k, i);
            if !f.is_zero(c) {
                acc = acc.add_scaled(c, &module[k]);
            }
        }
        acc
    };
    let act_left = (0..n).map(bar).collect();
    SuperBimodule::new(h.clone(), parity, act_left, module.to_vec(), None)
}

/// V[u] = V + Vu over A[u] for a purely even bimodule V over a purely even
/// algebra A, with u odd, central and u^2 = alpha. Basis: V then Vu.
pub fn double_bimodule(v: &SuperBimodule, alpha: &Scalar) -> Result<SuperBimodule> {
    if v.parity.iter().any(|&p| p == 1) {
        return pre("bimodule doubling needs a purely even bimodule");
    }
    let au = crate::constructions::double_by_u(v.algebra(), alpha)?;
    let f = v.field();
    let n = v.algebra().dim();
    let m = v.dim();
    let blk = |x: &Matrix, top: bool| {
        // top: [[X,0],[0,X]]; otherwise [[0,aX],[X,0]]
        Matrix::from_fn(f, 2 * m, 2 * m, |r, c| {
            let (br, bc) = (r / m, c / m);
            let x = x.get(r % m, c % m);
            match (top, br, bc) {
                (true, 0, 0) | (true, 1, 1) => x.clone(),
                (false, 1, 0) => x.clone(),
                (false, 0, 1) => f.mul(alpha, x),
                _ => f.zero(),
            }
        })
    };
    let mut act_left = Vec::new();
    let mut act_right = Vec::new();
    for top in [true, false] {
        for i in 0..n {
            act_left.push(blk(&v.act_left[i], top));
            act_right.push(blk(&v.act_right[i], top));
        }
    }
    let mut parity = vec![0; m];
    parity.extend(vec![1; m]);
    let mut names = v.names.clone();
    names.extend(v.names.iter().map(|s| format!("{s}*u")));
    SuperBimodule::new(au, parity, act_left, act_right, Some(names))
}

/// Minimal graded left ideal: smallest nonzero subspace invariant under
/// left multiplications and the parity projections.
pub fn minimal_left_ideal(h: &SuperAlgebra, graded: bool) -> Result<Subspace> {
    let f = h.field();
    let n = h.dim();
    let mut ops: Vec<Matrix> = (0..n).map(|i| h.left_mult(i)).collect();
    if graded {
        for p in 0..2u8 {
            ops.push(Matrix::from_fn(f, n, n, |r, c| if r == c && h.parity()[r] == p { f.one() } else { f.zero() }));
        }
    }
    minimal_invariant_subspace(f, n, &ops)
}

/// The left module structure of H on an invariant subspace L.
pub fn left_module_on(h: &SuperAlgebra, l: &Subspace) -> Result<(Vec<Matrix>, Vec<u8>)> {
    let mats: Vec<Matrix> = (0..h.dim()).map(|i| h.left_mult(i)).collect();
    if !mats.iter().all(|m| l.is_invariant(m)) {
        return pre("subspace is not a left ideal");
    }
    let mut parity = Vec::new();
    for v in l.basis() {
        let ps: Vec<u8> = (0..h.dim()).filter(|&k| !h.field().is_zero(&v[k])).map(|k| h.parity()[k]).collect();
        if ps.windows(2).any(|w| w[0] != w[1]) {
            return pre("left ideal basis is not homogeneous");
        }
        parity.push(ps[0]);
    }
    Ok((mats.iter().map(|m| l.restrict(m)).collect(), parity))
}

impl SuperBimodule {
    /// Norton test on the graded operator set.
    pub fn graded_irreducibility(&self) -> Result<Verdict> {
        if self.is_zero() {
            return pre("irreducibility of the zero module");
        }
        norton_test(self.field(), self.dim(), &self.operators(true), &self.operator_names(true))
    }

    pub fn ungraded_irreducibility(&self) -> Result<Verdict> {
        if self.is_zero() {
            return pre("irreducibility of the zero module");
        }
        norton_test(self.field(), self.dim(), &self.operators(false), &self.operator_names(false))
    }

    /// Exhaustive oracle: spins every nonzero vector up to scalars.
    /// `Ok(None)` means irreducible.
    pub fn exhaustive_proper_submodule(&self, graded: bool, cap: u64) -> Result<Option<Subspace>> {
        if self.is_zero() {
            return pre("irreducibility of the zero module");
        }
        exhaustive_invariant_subspace(self.field(), self.dim(), &self.operators(graded), cap)
    }

    pub fn minimal_submodule(&self, graded: bool) -> Result<Subspace> {
        minimal_invariant_subspace(self.field(), self.dim(), &self.operators(graded))
    }
}

pub fn is_graded_irreducible(v: &SuperBimodule) -> Result<bool> {
    Ok(matches!(v.graded_irreducibility()?, Verdict::Irreducible(_)))
}

pub fn is_irreducible_ungraded(v: &SuperBimodule) -> Result<bool> {
    Ok(matches!(v.ungraded_irreducibility()?, Verdict::Irreducible(_)))
}

/// Describes a module vector with the module's basis names.
pub fn describe_vector(v: &SuperBimodule, x: &[Scalar]) -> String {
    let f = v.field();
    let mut out = String::new();
    for (i, c) in x.iter().enumerate() {
        if f.is_zero(c) {
            continue;
        }
        let cs = f.fmt_scalar(c);
        let term = if f.is_one(c) {
            v.names[i].clone()
        } else if cs.len() > 1 && cs[1..].contains(['+', '-']) {
            format!("({cs})*{}", v.names[i])
        } else {
            format!("{cs}*{}", v.names[i])
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

use crate::error::{pre, Error, Result};
use crate::linalg::{unit_vec, vec_add, vec_is_zero, vec_scale, vec_sub, Matrix, Subspace};
use crate::scalars::{Field, Scalar};

/// Sparse vector: (basis index, nonzero coefficient), sorted by index.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Coefficient vector over the basis of an algebra.
pub type Element = Vec<Scalar>;

/// Largest number of structure-constant slots (dim^2) an algebra may have.
pub const TABLE_CAP: usize = 1 << 20;

/// Finite-dimensional Z2-graded algebra given by structure constants
/// e_i e_j = sum_k c_ij^k e_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebra {
    field: Field,
    parity: Vec<u8>,
    table: Vec<SparseVec>,
    unit: Option<usize>,
    names: Vec<String>,
}

pub(crate) fn push_sparse(f: &Field, acc: &mut SparseVec, k: usize, c: Scalar) {
    if f.is_zero(&c) {
        return;
    }
    match acc.binary_search_by_key(&k, |(i, _)| *i) {
        Ok(pos) => {
            let s = f.add(&acc[pos].1, &c);
            if f.is_zero(&s) {
                acc.remove(pos);
            } else {
                acc[pos].1 = s;
            }
        }
        Err(pos) => acc.insert(pos, (k, c)),
    }
}

impl SuperAlgebra {
    /// Builds an algebra from (i, j, k, coefficient) entries; repeated
    /// entries are added. Grading and the declared unit are validated.
    pub fn new(
        field: &Field,
        parity: Vec<u8>,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Option<usize>,
        names: Option<Vec<String>>,
    ) -> Result<SuperAlgebra> {
        let n = parity.len();
        if n == 0 {
            return Err(Error::Invalid("algebra of dimension 0".into()));
        }
        if n * n > TABLE_CAP {
            return Err(Error::SizeCap(format!("dimension {n} exceeds the table cap")));
        }
        if parity.iter().any(|&p| p > 1) {
            return Err(Error::Invalid("parity entries must be 0 or 1".into()));
        }
        let mut table = vec![SparseVec::new(); n * n];
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::Invalid(format!("structure constant index ({i},{j},{k}) out of range")));
            }
            if !field.contains(&c) {
                return Err(Error::Invalid(format!("coefficient not in {field}")));
            }
            push_sparse(field, &mut table[i * n + j], k, c);
        }
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(_) => return Err(Error::Invalid("names length differs from dimension".into())),
            None => (0..n).map(|i| format!("e{i}")).collect(),
        };
        let a = SuperAlgebra { field: field.clone(), parity, table, unit, names };
        a.validate()?;
        Ok(a)
    }

    /// Builds an algebra from a closure giving e_i * e_j as a dense vector.
    pub fn from_products(
        field: &Field,
        parity: Vec<u8>,
        names: Option<Vec<String>>,
        unit: Option<usize>,
        prod: impl Fn(usize, usize) -> Element,
    ) -> Result<SuperAlgebra> {
        let n = parity.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in prod(i, j).into_iter().enumerate() {
                    if !field.is_zero(&c) {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        SuperAlgebra::new(field, parity, entries, unit, names)
    }

    /// Re-checks the grading and unit invariants.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for (k, _) in &self.table[i * n + j] {
                    if self.parity[*k] != (self.parity[i] + self.parity[j]) % 2 {
                        return Err(Error::Invalid(format!(
                            "grading violated: {}*{} has a component on {}",
                            self.names[i], self.names[j], self.names[*k]
                        )));
                    }
                }
            }
        }
        if let Some(u) = self.unit {
            if u >= n {
                return Err(Error::Invalid("unit index out of range".into()));
            }
            for i in 0..n {
                let e = unit_vec(&self.field, n, i);
                let ue = self.mul_basis_dense(u, i);
                let eu = self.mul_basis_dense(i, u);
                if ue != e || eu != e {
                    return Err(Error::Invalid(format!("{} is not a two-sided unit", self.names[u])));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    pub fn unit(&self) -> Option<usize> {
        self.unit
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<SuperAlgebra> {
        if names.len() != self.dim() {
            return Err(Error::Invalid("names length differs from dimension".into()));
        }
        self.names = names;
        Ok(self)
    }

    /// Replaces the grading by the trivial one (everything even).
    pub fn forget_grading(&self) -> SuperAlgebra {
        let mut a = self.clone();
        a.parity = vec![0; self.dim()];
        a
    }

    pub fn is_purely_even(&self) -> bool {
        self.parity.iter().all(|&p| p == 0)
    }

    /// Indices of basis vectors of the given parity.
    pub fn basis_of_parity(&self, p: u8) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity[i] == p).collect()
    }

    pub fn basis(&self, i: usize) -> Element {
        unit_vec(&self.field, self.dim(), i)
    }

    pub fn zero(&self) -> Element {
        vec![self.field.zero(); self.dim()]
    }

    /// e_i e_j as a sparse vector.
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn mul_basis_dense(&self, i: usize, j: usize) -> Element {
        let mut v = self.zero();
        for (k, c) in self.mul_basis(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    /// Structure constants as (i, j, k, c) with c nonzero, in index order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// Bilinear product of arbitrary elements.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        let f = &self.field;
        let n = self.dim();
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, c) in &self.table[i * n + j] {
                    out[*k] = f.add(&out[*k], &f.mul(&ab, c));
                }
            }
        }
        out
    }

    /// Product of sparse vectors.
    pub fn mul_sparse(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let f = &self.field;
        let n = self.dim();
        let mut out = SparseVec::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = f.mul(a, b);
                for (k, c) in &self.table[i * n + j] {
                    push_sparse(f, &mut out, *k, f.mul(&ab, c));
                }
            }
        }
        out
    }

    /// (e_i e_j) e_k - e_i (e_j e_k) as a sparse vector.
    pub fn associator_basis(&self, i: usize, j: usize, k: usize) -> SparseVec {
        let f = &self.field;
        let n = self.dim();
        let mut out = SparseVec::new();
        for (t, c) in self.mul_basis(i, j) {
            for (s, d) in &self.table[t * n + k] {
                push_sparse(f, &mut out, *s, f.mul(c, d));
            }
        }
        for (t, c) in self.mul_basis(j, k) {
            for (s, d) in &self.table[i * n + t] {
                push_sparse(f, &mut out, *s, f.neg(&f.mul(c, d)));
            }
        }
        out
    }

    pub fn associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Element {
        let l = self.mul(&self.mul(x, y), z);
        let r = self.mul(x, &self.mul(y, z));
        vec_sub(&self.field, &l, &r)
    }

    /// Parity of a homogeneous element (zero counts as even); `None` when
    /// the support mixes parities.
    pub fn parity_of(&self, x: &[Scalar]) -> Option<u8> {
        let mut p = None;
        for (i, c) in x.iter().enumerate() {
            if self.field.is_zero(c) {
                continue;
            }
            match p {
                None => p = Some(self.parity[i]),
                Some(q) if q != self.parity[i] => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(0))
    }

    /// [x,y]_s = xy - (-1)^{|x||y|} yx for homogeneous x, y.
    pub fn supercommutator(&self, x: &[Scalar], y: &[Scalar]) -> Result<Element> {
        let (Some(px), Some(py)) = (self.parity_of(x), self.parity_of(y)) else {
            return pre("supercommutator needs homogeneous arguments");
        };
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        Ok(if px * py == 1 { vec_add(&self.field, &xy, &yx) } else { vec_sub(&self.field, &xy, &yx) })
    }

    /// x o y = xy + yx.
    pub fn circle(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        vec_add(&self.field, &self.mul(x, y), &self.mul(y, x))
    }

    /// Matrix of left multiplication by e_i.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            for (k, c) in self.mul_basis(i, j) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Matrix of right multiplication by e_i.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            for (k, c) in self.mul_basis(j, i) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_mult_elem(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Element> = (0..n).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_cols(&self.field, n, &cols)
    }

    pub fn right_mult_elem(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Element> = (0..n).map(|j| self.mul(&self.basis(j), x)).collect();
        Matrix::from_cols(&self.field, n, &cols)
    }

    /// First basis triple with a nonzero associator, if any.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        (0..n * n * n)
            .map(|t| (t / (n * n), (t / n) % n, t % n))
            .find(|&(i, j, k)| !self.associator_basis(i, j, k).is_empty())
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// xy = (-1)^{|x||y|} yx on basis elements.
    pub fn is_supercommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let ij = self.mul_basis_dense(i, j);
                let ji = self.mul_basis_dense(j, i);
                if self.parity[i] * self.parity[j] == 1 {
                    ij == ji.iter().map(|c| self.field.neg(c)).collect::<Vec<_>>()
                } else {
                    ij == ji
                }
            })
        })
    }

    /// A two-sided identity element, if one exists (solved linearly when no
    /// basis vector is declared as the unit).
    pub fn unit_element(&self) -> Option<Element> {
        if let Some(u) = self.unit {
            return Some(self.basis(u));
        }
        let f = &self.field;
        let n = self.dim();
        // unknown x: x e_j = e_j and e_j x = e_j for all j
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            let l = self.right_mult(j);
            let r = self.left_mult(j);
            for k in 0..n {
                rows.push(l.row(k).to_vec());
                rhs.push(if k == j { f.one() } else { f.zero() });
                rows.push(r.row(k).to_vec());
                rhs.push(if k == j { f.one() } else { f.zero() });
            }
        }
        let aug: Vec<Vec<Scalar>> = rows
            .into_iter()
            .zip(rhs)
            .map(|(mut r, b)| {
                r.push(b);
                r
            })
            .collect();
        let m = Matrix::from_rows(f, aug).ok()?;
        let (r, pivots) = m.rref();
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut x = self.zero();
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, n).clone();
        }
        Some(x)
    }

    pub fn is_unital(&self) -> bool {
        self.unit_element().is_some()
    }

    /// Whether a subspace is a two-sided ideal spanned by homogeneous vectors.
    pub fn is_graded_ideal(&self, s: &Subspace) -> bool {
        let n = self.dim();
        let homogeneous = {
            let mut h = Subspace::zero(&self.field, n);
            for v in s.basis() {
                for p in 0..2u8 {
                    let part: Element = (0..n)
                        .map(|i| if self.parity[i] == p { v[i].clone() } else { self.field.zero() })
                        .collect();
                    h.insert(&part);
                }
            }
            h
        };
        if homogeneous != *s {
            return false;
        }
        (0..n).all(|i| s.is_invariant(&self.left_mult(i)) && s.is_invariant(&self.right_mult(i)))
    }

    /// Human-readable form of an element, e.g. `2*e1+e3`.
    pub fn describe(&self, x: &[Scalar]) -> String {
        let f = &self.field;
        let mut out = String::new();
        for (i, c) in x.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let cs = f.fmt_scalar(c);
            let term = if f.is_one(c) {
                self.names[i].clone()
            } else if cs.len() > 1 && cs[1..].contains(['+', '-']) {
                format!("({cs})*{}", self.names[i])
            } else {
                format!("{cs}*{}", self.names[i])
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

    pub fn scale(&self, c: &Scalar, x: &[Scalar]) -> Element {
        vec_scale(&self.field, c, x)
    }

    pub fn is_zero_elem(&self, x: &[Scalar]) -> bool {
        vec_is_zero(&self.field, x)
    }

    /// Whether A*A = 0.
    pub fn has_zero_product(&self) -> bool {
        self.table.iter().all(|v| v.is_empty())
    }

    pub fn same_field(&self, other: &Field) -> Result<()> {
        if &self.field != other {
            return Err(Error::FieldMismatch(self.field.to_string(), other.to_string()));
        }
        Ok(())
    }
}

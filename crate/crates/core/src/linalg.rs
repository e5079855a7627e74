//! Exact dense linear algebra: matrices, reduced echelon subspaces, kernels
//! and characteristic polynomials over any [`Field`].
//!
//! Matrices act on column vectors: column `c` of an action matrix holds the
//! image of basis vector `c`.

use crate::error::{Error, Result};
use crate::scalars::{Field, Poly, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Invalid("ragged matrix rows".into()));
        }
        Ok(Matrix { field: field.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_cols(field: &Field, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows, cols.len(), |r, c| cols[c][r].clone())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !f.is_zero(b) {
                        let idx = i * o.cols + j;
                        out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix/vector shape mismatch");
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for (k, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, k);
                if !f.is_zero(a) {
                    *o = f.add(o, &f.mul(a, x));
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&self.field.from_i64(-1))
    }

    /// self + c*o
    pub fn add_scaled(&self, c: &Scalar, o: &Matrix) -> Matrix {
        if self.field.is_zero(c) {
            return self.clone();
        }
        self.add(&o.scale(c))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let fac = m.get(i, c).clone();
                if f.is_zero(&fac) {
                    continue;
                }
                for j in c..m.cols {
                    let t = f.mul(&fac, m.get(r, j));
                    let v = f.sub(m.get(i, j), &t);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {v : self*v = 0}.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            out.push(v);
        }
        out
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let aug = Matrix::from_fn(f, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                f.one()
            } else {
                f.zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(f, n, n, |i, j| r.get(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn det(&self) -> Scalar {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut d = f.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !f.is_zero(m.get(r, c))) else {
                return f.zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                d = f.neg(&d);
            }
            let piv = m.get(c, c).clone();
            d = f.mul(&d, &piv);
            let inv = f.inv(&piv).unwrap();
            for r in c + 1..n {
                let fac = f.mul(m.get(r, c), &inv);
                if f.is_zero(&fac) {
                    continue;
                }
                for j in c..n {
                    let t = f.mul(&fac, m.get(c, j));
                    let v = f.sub(m.get(r, j), &t);
                    m.set(r, j, v);
                }
            }
        }
        d
    }

    /// Characteristic polynomial det(xI - M), via Hessenberg reduction.
    pub fn charpoly(&self) -> Poly {
        assert!(self.is_square());
        let f = &self.field;
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !f.is_zero(h.get(i, m - 1))) else {
                continue;
            };
            if i != m {
                for j in 0..n {
                    h.data.swap(i * n + j, m * n + j);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + m);
                }
            }
            let inv = f.inv(h.get(m, m - 1)).unwrap();
            for j in m + 1..n {
                let u = f.mul(h.get(j, m - 1), &inv);
                if f.is_zero(&u) {
                    continue;
                }
                for c in 0..n {
                    let t = f.mul(&u, h.get(m, c));
                    let v = f.sub(h.get(j, c), &t);
                    h.set(j, c, v);
                }
                for r in 0..n {
                    let t = f.mul(&u, h.get(r, j));
                    let v = f.add(h.get(r, m), &t);
                    h.set(r, m, v);
                }
            }
        }
        let x = Poly::x(f);
        let mut p = vec![Poly::one(f)];
        for m in 1..=n {
            let lin = x.sub(&Poly::constant(f, h.get(m - 1, m - 1).clone()));
            let mut pm = lin.mul(&p[m - 1]);
            let mut t = f.one();
            for i in 1..m {
                t = f.mul(&t, h.get(m - i, m - i - 1));
                let c = f.mul(&t, h.get(m - i - 1, m - 1));
                pm = pm.sub(&p[m - i - 1].scale(&c));
            }
            p.push(pm);
        }
        p.pop().unwrap()
    }

    /// p(M) by Horner's rule.
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        let f = &self.field;
        let n = self.rows;
        let mut acc = Matrix::zeros(f, n, n);
        let id = Matrix::identity(f, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add_scaled(c, &id);
        }
        acc
    }

    /// Stack matrices with equal column counts on top of each other.
    pub fn vstack(field: &Field, cols: usize, parts: &[Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend(m.data.iter().cloned());
            rows += m.rows;
        }
        Matrix { field: field.clone(), rows, cols, data }
    }
}

pub fn vec_is_zero(f: &Field, v: &[Scalar]) -> bool {
    v.iter().all(|x| f.is_zero(x))
}

pub fn vec_add(f: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vec_sub(f: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vec_scale(f: &Field, c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| f.mul(c, x)).collect()
}

pub fn unit_vec(f: &Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// Subspace of F^n stored as a reduced row echelon basis (rows sorted by
/// pivot). Equal subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { field: field.clone(), ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for i in 0..ambient {
            s.insert(&unit_vec(field, ambient, i));
        }
        s
    }

    pub fn span(field: &Field, ambient: usize, vecs: &[Vec<Scalar>]) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for v in vecs {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vec_is_zero(&self.field, &self.reduce(v))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).unwrap();
        for x in r.iter_mut().skip(p) {
            *x = f.mul(x, &inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&r).skip(p) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v);
        }
        s
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // x = sum a_i u_i = sum b_j w_j: kernel of [U | -W]
        let f = &self.field;
        let n = self.ambient;
        let mut cols: Vec<Vec<Scalar>> = self.rows.clone();
        cols.extend(other.rows.iter().map(|w| w.iter().map(|x| f.neg(x)).collect::<Vec<_>>()));
        let m = Matrix::from_cols(f, n, &cols);
        let mut out = Subspace::zero(f, n);
        for k in m.kernel() {
            let mut x = vec![f.zero(); n];
            for (i, u) in self.rows.iter().enumerate() {
                x = vec_add(f, &x, &vec_scale(f, &k[i], u));
            }
            out.insert(&x);
        }
        out
    }

    /// Coordinates of a member of the subspace with respect to `basis()`.
    pub fn coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Vector with the given coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut x = vec![f.zero(); self.ambient];
        for (c, u) in coords.iter().zip(&self.rows) {
            if !f.is_zero(c) {
                x = vec_add(f, &x, &vec_scale(f, c, u));
            }
        }
        x
    }

    pub fn is_invariant(&self, m: &Matrix) -> bool {
        self.rows.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Matrix of `m` restricted to this (m-invariant) subspace.
    pub fn restrict(&self, m: &Matrix) -> Matrix {
        let cols: Vec<Vec<Scalar>> = self.rows.iter().map(|v| self.coords(&m.mul_vec(v))).collect();
        Matrix::from_cols(&self.field, self.dim(), &cols)
    }

    /// {u : <u, v> = 0 for all v in self}.
    pub fn perp(&self) -> Subspace {
        let m = if self.rows.is_empty() {
            Matrix::zeros(&self.field, 0, self.ambient)
        } else {
            Matrix::from_rows(&self.field, self.rows.clone()).unwrap()
        };
        Subspace::span(&self.field, self.ambient, &m.kernel())
    }

    /// Textual basis, one vector per entry.
    pub fn describe(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|v| v.iter().map(|x| self.field.fmt_scalar(x)).collect()).collect()
    }
}

/// Smallest subspace containing `seeds` and invariant under every
/// operator in `gens` (worklist closure).
pub fn spin_closure(field: &Field, n: usize, gens: &[&Matrix], seeds: &[Vec<Scalar>]) -> Subspace {
    let mut s = Subspace::zero(field, n);
    let mut work: Vec<Vec<Scalar>> = Vec::new();
    for v in seeds {
        if s.insert(v) {
            work.push(v.clone());
        }
    }
    while let Some(v) = work.pop() {
        if s.is_full() {
            break;
        }
        for g in gens {
            let w = g.mul_vec(&v);
            if s.insert(&w) {
                work.push(w);
            }
        }
    }
    s
}

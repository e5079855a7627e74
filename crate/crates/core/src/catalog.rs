//! The classified irreducible bimodules with their exact action tables,
//! and the differential bimodules B(V,d,γ).

use std::sync::Arc;

use serde::Serialize;

use crate::bimodule::{
    cay, double_bimodule, left_module_on, minimal_left_ideal, norton_test, regular_bimodule,
    solve_homogeneous_maps, SuperBimodule, Verdict,
};
use crate::constructions as cons;
use crate::constructions::{DerivationOp, ParamSet};
pub use crate::constructions::Params;
use crate::error::{pre, Error, Result};
use crate::linalg::{spin_closure, unit_vec, Matrix};
use crate::scalars::{poly_factor, Field, Poly, Scalar};
use crate::superalgebra::SuperAlgebra;

/// A bimodule over F1+Fx (unital, 1 acts trivially) from the columns of x's
/// left and right actions.
fn over_f1x(
    a: SuperAlgebra,
    parity: Vec<u8>,
    names: Vec<&str>,
    left_x: &[Vec<(usize, Scalar)>],
    right_x: &[Vec<(usize, Scalar)>],
) -> Result<SuperBimodule> {
    let f = a.field().clone();
    let m = parity.len();
    let mat = |cols: &[Vec<(usize, Scalar)>]| {
        let mut out = Matrix::zeros(&f, m, m);
        for (c, col) in cols.iter().enumerate() {
            for (r, v) in col {
                out.set(*r, c, f.add(out.get(*r, c), v));
            }
        }
        out
    };
    let id = Matrix::identity(&f, m);
    SuperBimodule::new(
        a,
        parity,
        vec![id.clone(), mat(left_x)],
        vec![id, mat(right_x)],
        Some(names.into_iter().map(String::from).collect()),
    )
}

/// V^ε(1|1) over F1+Fx, x^2 = 0: v0.x = v1, v1.x = v0, x.v0 = εv1, x.v1 = (ε+1)v0.
pub fn v_eps(f: &Field, eps: &Scalar) -> Result<SuperBimodule> {
    let e2 = f.add(&f.add(&f.mul(eps, eps), eps), &f.one());
    if !f.is_zero(&e2) {
        return pre(format!("ε = {} is not a root of u^2+u+1", f.fmt_scalar(eps)));
    }
    over_f1x(
        cons::f1x(f, &f.zero())?,
        vec![0, 1],
        vec!["v0", "v1"],
        &[vec![(1, eps.clone())], vec![(0, f.add(eps, &f.one()))]],
        &[vec![(1, f.one())], vec![(0, f.one())]],
    )
}

fn char_not_2_3(f: &Field) -> Result<()> {
    if matches!(f.characteristic(), 2 | 3) {
        return pre("characteristic 2 and 3 are excluded");
    }
    Ok(())
}

/// V_{λ,μ}(1|1) over F[√1]: v0u = (3μ-λ)v1, uv0 = 2λv1, v1u = 2μv0, uv1 = (λ+μ)v0.
pub fn v_lambda_mu(f: &Field, l: &Scalar, m: &Scalar) -> Result<SuperBimodule> {
    char_not_2_3(f)?;
    let c = f.add(&f.mul(l, l), &f.mul(&f.from_i64(3), &f.mul(m, m)));
    if !f.is_one(&c) {
        return pre("λ^2 + 3μ^2 must equal 1");
    }
    let (two, three) = (f.from_i64(2), f.from_i64(3));
    over_f1x(
        cons::f1x(f, &f.one())?,
        vec![0, 1],
        vec!["v0", "v1"],
        &[vec![(1, f.mul(&two, l))], vec![(0, f.add(l, m))]],
        &[vec![(1, f.sub(&f.mul(&three, m), l))], vec![(0, f.mul(&two, m))]],
    )
}

/// The three tables of bimodules over F[√1]. Type 3 takes (α, δ) with
/// α, δ nonzero and α^2 + αδ + δ^2 = 1.
pub fn sqrt1_type(f: &Field, k: u8, params: Option<(&Scalar, &Scalar)>) -> Result<SuperBimodule> {
    let a = cons::f1x(f, &f.one())?;
    let one = f.one();
    let (left, right): (Vec<Vec<(usize, Scalar)>>, Vec<Vec<(usize, Scalar)>>) = match k {
        1 => (
            vec![vec![(1, f.from_i64(-2))], vec![(0, f.from_i64(-1))]],
            vec![vec![(1, one.clone())], vec![]],
        ),
        2 => (vec![vec![], vec![(0, one.clone())]], vec![vec![(1, one.clone())], vec![(0, f.from_i64(2))]]),
        3 => {
            let Some((al, de)) = params else {
                return pre("type 3 needs parameters (α, δ)");
            };
            if f.is_zero(al) || f.is_zero(de) {
                return pre("α and δ must be nonzero");
            }
            let q = f.add(&f.add(&f.mul(al, al), &f.mul(al, de)), &f.mul(de, de));
            if !f.is_one(&q) {
                return pre("α^2 + αδ + δ^2 must equal 1");
            }
            (
                vec![vec![(1, one.clone())], vec![(0, f.sub(&one, al))]],
                vec![vec![(1, f.div(&f.add(&one, al), de)?)], vec![(0, de.clone())]],
            )
        }
        _ => return pre("type must be 1, 2 or 3"),
    };
    over_f1x(a, vec![0, 1], vec!["v0", "v1"], &left, &right)
}

/// V(λ,μ)(3|3) over B(1|2) with x = e, y = f. Basis v0, v1R_y, v0R_y^2
/// (even), v1, v0R_y, v1R_y^2 (odd). Right action from the table, left
/// action by a.v = (-1)^{|a||v|} v.a.
pub fn v33(f: &Field, l: &Scalar, m: &Scalar) -> Result<SuperBimodule> {
    if f.is_zero(l) || f.is_zero(m) {
        return pre("λ and μ must be nonzero");
    }
    v33_unchecked(&cons::b12(f)?, l, m)
}

fn v33_unchecked(b: &SuperAlgebra, l: &Scalar, m: &Scalar) -> Result<SuperBimodule> {
    let f = b.field().clone();
    let order = [(0usize, 0usize), (1, 1), (0, 2), (1, 0), (0, 1), (1, 2)];
    let idx = |i: usize, j: usize| order.iter().position(|&p| p == (i, j)).unwrap();
    let parity: Vec<u8> = order.iter().map(|&(i, j)| ((i + j) % 2) as u8).collect();
    let mut ry = Matrix::zeros(&f, 6, 6);
    let mut rx = Matrix::zeros(&f, 6, 6);
    for (c, &(i, j)) in order.iter().enumerate() {
        if j < 2 {
            ry.set(idx(i, j + 1), c, f.one());
        } else {
            ry.set(idx(1 - i, 0), c, m.clone());
        }
        rx.set(idx(1 - i, j), c, l.clone());
        if j > 0 {
            rx.set(idx(i, j - 1), c, f.from_i64(j as i64));
        }
    }
    let id = Matrix::identity(&f, 6);
    let right = vec![id.clone(), rx, ry];
    let left: Vec<Matrix> = right
        .iter()
        .enumerate()
        .map(|(a, r)| {
            Matrix::from_fn(&f, 6, 6, |row, col| {
                let x = r.get(row, col);
                if b.parity()[a] * parity[col] == 1 {
                    f.neg(x)
                } else {
                    x.clone()
                }
            })
        })
        .collect();
    let names = ["v0", "v1Ry", "v0Ry^2", "v1", "v0Ry", "v1Ry^2"].iter().map(|s| s.to_string()).collect();
    SuperBimodule::new(b.clone(), parity, left, right, Some(names))
}

/// f(u) = u^2 + (α-λ)u + α(α-2λ).
pub fn eps_poly(f: &Field, alpha: &Scalar, lambda: &Scalar) -> Poly {
    let b = f.sub(alpha, lambda);
    let c = f.mul(alpha, &f.sub(alpha, &f.mul(&f.from_i64(2), lambda)));
    Poly::new(f, vec![c, b, f.one()])
}

/// V^ε_{α,λ}(1|1) over F1+Fx, x^2 = λ: v.x = vx, x.v = (ε/α)vx, vx.x = αv,
/// x.vx = (α+ε-λ)v. Requires α ≠ 0, α ≠ λ and f(ε) = 0.
pub fn v_f1x_eps(f: &Field, alpha: &Scalar, lambda: &Scalar, eps: &Scalar) -> Result<SuperBimodule> {
    if f.is_zero(alpha) {
        return pre("α must be nonzero in the ε-series");
    }
    if alpha == lambda {
        return pre("α must differ from λ");
    }
    if !f.is_zero(&eps_poly(f, alpha, lambda).eval(eps)) {
        return pre(format!("ε = {} is not a root of f", f.fmt_scalar(eps)));
    }
    v_f1x_eps_unchecked(f, alpha, lambda, eps)
}

/// The ε-series table without parameter checks (α ≠ 0 still needed).
pub fn v_f1x_eps_unchecked(f: &Field, alpha: &Scalar, lambda: &Scalar, eps: &Scalar) -> Result<SuperBimodule> {
    let xv = f.div(eps, alpha)?;
    let xvx = f.sub(&f.add(alpha, eps), lambda);
    over_f1x(
        cons::f1x(f, lambda)?,
        vec![0, 1],
        vec!["v", "vx"],
        &[vec![(1, xv)], vec![(0, xvx)]],
        &[vec![(1, f.one())], vec![(0, alpha.clone())]],
    )
}

/// V_λ(1|1): v.x = vx, x.v = -2vx, vx.x = 0, x.vx = -λv, λ ≠ 0.
pub fn v_f1x_lam(f: &Field, lambda: &Scalar) -> Result<SuperBimodule> {
    if f.is_zero(lambda) {
        return pre("λ must be nonzero");
    }
    v_f1x_lam_unchecked(f, lambda)
}

pub fn v_f1x_lam_unchecked(f: &Field, lambda: &Scalar) -> Result<SuperBimodule> {
    over_f1x(
        cons::f1x(f, lambda)?,
        vec![0, 1],
        vec!["v", "vx"],
        &[vec![(1, f.from_i64(-2))], vec![(0, f.neg(lambda))]],
        &[vec![(1, f.one())], vec![]],
    )
}

/// V_{α,λ}(2|2) with basis v, xv, vx, x(vx); f must be irreducible over the field.
pub fn v_f1x_22(f: &Field, alpha: &Scalar, lambda: &Scalar) -> Result<SuperBimodule> {
    if alpha == lambda {
        return pre("α must differ from λ");
    }
    let p = eps_poly(f, alpha, lambda);
    let fac = poly_factor(&p)?;
    if !(fac.len() == 1 && fac[0].1 == 1 && fac[0].0.degree() == Some(2)) {
        return pre("f(u) must be irreducible for the (2|2) series");
    }
    v_f1x_22_unchecked(f, alpha, lambda)
}

pub fn v_f1x_22_unchecked(f: &Field, alpha: &Scalar, lambda: &Scalar) -> Result<SuperBimodule> {
    let k = f.sub(&f.mul(&f.from_i64(2), lambda), alpha);
    over_f1x(
        cons::f1x(f, lambda)?,
        vec![0, 1, 1, 0],
        vec!["v", "xv", "vx", "x(vx)"],
        &[vec![(1, f.one())], vec![(0, k.clone())], vec![(3, f.one())], vec![(2, k)]],
        &[
            vec![(2, f.one())],
            vec![(3, f.one()), (0, f.sub(lambda, alpha))],
            vec![(0, alpha.clone())],
            vec![(2, f.sub(alpha, lambda)), (1, alpha.clone())],
        ],
    )
}

/// A bimodule V over a commutative associative Γ with an even map d
/// satisfying d(v.a) = d(v).a + v.D(a) and d(a.v) = D(a).v + a.d(v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffBimodule {
    pub module: SuperBimodule,
    pub derivation: DerivationOp,
    pub d: Matrix,
}

impl DiffBimodule {
    pub fn new(module: SuperBimodule, derivation: DerivationOp, d: Matrix) -> Result<DiffBimodule> {
        let g = module.algebra();
        let m = module.dim();
        if d.rows() != m || d.cols() != m {
            return Err(Error::Invalid("d has the wrong size".into()));
        }
        for i in 0..g.dim() {
            let da = derivation.apply(&g.basis(i));
            let lhs_r = d.mul(module.act_right(i));
            let rhs_r = module.act_right(i).mul(&d).add(&module.right_elem(&da));
            let lhs_l = d.mul(module.act_left(i));
            let rhs_l = module.left_elem(&da).add(&module.act_left(i).mul(&d));
            if lhs_r != rhs_r || lhs_l != rhs_l {
                return Err(Error::Invalid(format!("Leibniz compatibility fails at {}", g.names()[i])));
            }
        }
        Ok(DiffBimodule { module, derivation, d })
    }

    pub fn operators(&self) -> Vec<Matrix> {
        let mut ops = self.module.operators(false);
        ops.push(self.d.clone());
        ops
    }
}

/// (Reg Γ, D + R_a).
pub fn diff_reg(gamma: &SuperAlgebra, d: &DerivationOp, a: &[Scalar]) -> Result<DiffBimodule> {
    let reg = regular_bimodule(gamma);
    let dm = d.matrix().add(&gamma.right_mult_elem(a));
    DiffBimodule::new(reg, d.clone(), dm)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DSimpleReport {
    pub d_simple: bool,
    /// Basis of a proper d-invariant subbimodule when one exists.
    pub witness: Option<Vec<Vec<String>>>,
}

/// No proper nonzero subbimodule invariant under d. Basis vectors are spun
/// first (giving readable witnesses); a Norton certificate decides the rest.
pub fn d_simple_check(w: &DiffBimodule) -> Result<DSimpleReport> {
    let m = w.module.dim();
    if m == 0 {
        return pre("D-simplicity of the zero module");
    }
    let f = w.module.field();
    let ops = w.operators();
    let refs: Vec<&Matrix> = ops.iter().collect();
    for i in 0..m {
        let s = spin_closure(f, m, &refs, &[unit_vec(f, m, i)]);
        if !s.is_full() {
            return Ok(DSimpleReport { d_simple: false, witness: Some(s.describe()) });
        }
    }
    let names: Vec<String> = (0..ops.len()).map(|i| format!("g{i}")).collect();
    match norton_test(f, m, &ops, &names)? {
        Verdict::Irreducible(_) => Ok(DSimpleReport { d_simple: true, witness: None }),
        Verdict::Reducible(s) => Ok(DSimpleReport { d_simple: false, witness: Some(s.describe()) }),
    }
}

/// Eigenvalues of D in the ground field that admit an invertible
/// eigenvector. Requires Γ to be D-simple.
pub fn spec_d(gamma: &SuperAlgebra, d: &DerivationOp) -> Result<Vec<Scalar>> {
    let f = gamma.field();
    let zero = gamma.zero();
    if !d_simple_check(&diff_reg(gamma, d, &zero)?)?.d_simple {
        return pre("Spec D is only meaningful for D-simple Γ");
    }
    let cp = d.matrix().charpoly();
    let mut out = Vec::new();
    for (p, _) in poly_factor(&cp)? {
        if p.degree() != Some(1) {
            continue;
        }
        let ev = f.neg(&p.coeff(0));
        let shifted = d.matrix().sub(&Matrix::identity(f, gamma.dim()).scale(&ev));
        let invertible = shifted.kernel().iter().any(|c| gamma.left_mult_elem(c).is_invertible());
        if invertible {
            out.push(ev);
        }
    }
    out.sort();
    Ok(out)
}

/// Even bimodule isomorphisms commuting with d.
pub fn diff_isomorphic(a: &DiffBimodule, b: &DiffBimodule) -> Result<bool> {
    if a.module.algebra() != b.module.algebra() {
        return pre("D-bimodules over different algebras");
    }
    if a.module.dim() != b.module.dim() {
        return Ok(false);
    }
    let f = a.module.field();
    let g = a.module.algebra();
    let mut conds = Vec::new();
    for i in 0..g.dim() {
        conds.push((a.module.act_right(i).clone(), b.module.act_right(i).clone(), f.one()));
        conds.push((a.module.act_left(i).clone(), b.module.act_left(i).clone(), f.one()));
    }
    conds.push((a.d.clone(), b.d.clone(), f.one()));
    let sols = solve_homogeneous_maps(f, a.module.parity(), b.module.parity(), 0, &conds);
    if sols.iter().any(|t| t.is_invertible()) {
        return Ok(true);
    }
    Ok((0..sols.len()).any(|i| (i + 1..sols.len()).any(|j| sols[i].add(&sols[j]).is_invertible())))
}

/// B(V,d,γ) over B(Γ,D,γ): V + bar(V) with
/// a.v = av, v.a = va, a.bar(v) = bar(a).v = bar(av), bar(v).a = v.bar(a) = bar(va),
/// bar(a).bar(v) = 2D(a)v + a d(v) + γav, bar(v).bar(a) = 2d(v)a + vD(a) + γva.
pub fn b_v_d(gamma_elem: &[Scalar], w: &DiffBimodule) -> Result<SuperBimodule> {
    let g = w.module.algebra();
    let b = cons::b_gamma(g, &w.derivation, gamma_elem)?;
    b_v_d_over(b, gamma_elem, w)
}

fn b_v_d_over(b: SuperAlgebra, gamma_elem: &[Scalar], w: &DiffBimodule) -> Result<SuperBimodule> {
    let g = w.module.algebra();
    let f = g.field().clone();
    let n = g.dim();
    let m = w.module.dim();
    let two = f.from_i64(2);
    let block = |tl: Option<&Matrix>, br: Option<&Matrix>, tr: Option<&Matrix>, bl: Option<&Matrix>| {
        // [[tl, tr], [bl, br]] acting on (v, bar v)
        Matrix::from_fn(&f, 2 * m, 2 * m, |r, c| {
            let blk = match (r < m, c < m) {
                (true, true) => tl,
                (false, false) => br,
                (true, false) => tr,
                (false, true) => bl,
            };
            blk.map_or(f.zero(), |x| x.get(r % m, c % m).clone())
        })
    };
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 0..n {
        let (l, r) = (w.module.act_left(i), w.module.act_right(i));
        left.push(block(Some(l), Some(l), None, None));
        right.push(block(Some(r), Some(r), None, None));
    }
    for i in 0..n {
        let ea = g.basis(i);
        let da = w.derivation.apply(&ea);
        let ga = g.mul(gamma_elem, &ea);
        let (l, r) = (w.module.act_left(i), w.module.act_right(i));
        let odd_l = w.module.left_elem(&da).scale(&two).add(&l.mul(&w.d)).add(&w.module.left_elem(&ga));
        let odd_r = r.mul(&w.d).scale(&two).add(&w.module.right_elem(&da)).add(&w.module.right_elem(&ga));
        left.push(block(None, None, Some(&odd_l), Some(l)));
        right.push(block(None, None, Some(&odd_r), Some(r)));
    }
    let mut parity = w.module.parity().to_vec();
    parity.extend(w.module.parity().iter().map(|p| 1 - p));
    let mut names = w.module.names().to_vec();
    names.extend(w.module.names().iter().map(|x| format!("bar({x})")));
    SuperBimodule::new(Arc::new(b), parity, left, right, Some(names))
}

/// Cay L over H(2|2), L a minimal graded left ideal (characteristic 2).
pub fn cay_h22(f: &Field, alpha: &Scalar, beta: &Scalar) -> Result<SuperBimodule> {
    let (h, inv) = cons::quaternion_char2(f, alpha, beta)?;
    let l = minimal_left_ideal(&h, true)?;
    let (mats, parity) = left_module_on(&h, &l)?;
    cay(&h, inv.matrix(), &mats, parity)
}

/// (Cay L)[u] over H[u], L a minimal left ideal of the ungraded quaternions.
pub fn cay_h_u(f: &Field, alpha: &Scalar, beta: &Scalar, u2: &Scalar) -> Result<SuperBimodule> {
    let (h, inv) = cons::quaternion_char2_ungraded(f, alpha, beta)?;
    let l = minimal_left_ideal(&h, false)?;
    let (mats, parity) = left_module_on(&h, &l)?;
    double_bimodule(&cay(&h, inv.matrix(), &mats, parity)?, u2)
}

/// A parameterized family of catalog bimodules.
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    /// Parameter names with defaults ("" for required).
    pub params: &'static [(&'static str, &'static str)],
    pub default_field: &'static str,
    pub build: fn(&ParamSet) -> Result<SuperBimodule>,
}

pub fn registry() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "v_eps",
            summary: "V^eps(1|1) over F1+Fx, x^2=0",
            params: &[("eps", "")],
            default_field: "GF(7)",
            build: |p| v_eps(p.field, &p.scalar("eps")?),
        },
        CatalogEntry {
            name: "v_lambda_mu",
            summary: "V_{lambda,mu}(1|1) over F[sqrt 1]",
            params: &[("lambda", ""), ("mu", "")],
            default_field: "Q",
            build: |p| v_lambda_mu(p.field, &p.scalar("lambda")?, &p.scalar("mu")?),
        },
        CatalogEntry {
            name: "sqrt1_type",
            summary: "bimodules of types 1, 2, 3 over F[sqrt 1]",
            params: &[("type", "1"), ("alpha", "0"), ("delta", "0")],
            default_field: "Q",
            build: |p| {
                let k = p.count("type")?.min(255) as u8;
                sqrt1_type(p.field, k, Some((&p.scalar("alpha")?, &p.scalar("delta")?)))
            },
        },
        CatalogEntry {
            name: "v33",
            summary: "V(lambda,mu)(3|3) over B(1|2)",
            params: &[("lambda", "1"), ("mu", "1")],
            default_field: "GF(3)",
            build: |p| v33(p.field, &p.scalar("lambda")?, &p.scalar("mu")?),
        },
        CatalogEntry {
            name: "reg_b42",
            summary: "Reg B(4|2)",
            params: &[],
            default_field: "GF(3)",
            build: |p| Ok(regular_bimodule(&cons::b42(p.field)?)),
        },
        CatalogEntry {
            name: "f1x_eps",
            summary: "V^eps_{alpha,lambda}(1|1) over F1+Fx, x^2=lambda",
            params: &[("alpha", ""), ("lambda", ""), ("eps", "")],
            default_field: "Q",
            build: |p| v_f1x_eps(p.field, &p.scalar("alpha")?, &p.scalar("lambda")?, &p.scalar("eps")?),
        },
        CatalogEntry {
            name: "f1x_lam",
            summary: "V_lambda(1|1) over F1+Fx, x^2=lambda",
            params: &[("lambda", "")],
            default_field: "Q",
            build: |p| v_f1x_lam(p.field, &p.scalar("lambda")?),
        },
        CatalogEntry {
            name: "f1x_22",
            summary: "V_{alpha,lambda}(2|2) over F1+Fx, x^2=lambda",
            params: &[("alpha", ""), ("lambda", "")],
            default_field: "Q",
            build: |p| v_f1x_22(p.field, &p.scalar("alpha")?, &p.scalar("lambda")?),
        },
        CatalogEntry {
            name: "reg_o44",
            summary: "Reg O(4|4) (characteristic 2)",
            params: &[("alpha", "1"), ("beta", "1"), ("gamma", "1")],
            default_field: "GF(2)",
            build: |p| Ok(regular_bimodule(&cons::octonion_44(p.field, &p.scalar("alpha")?, &p.scalar("beta")?, &p.scalar("gamma")?)?)),
        },
        CatalogEntry {
            name: "reg_o_u",
            summary: "Reg O[u] (characteristic 2)",
            params: &[("alpha", "1"), ("beta", "1"), ("gamma", "1"), ("u2", "1")],
            default_field: "GF(2)",
            build: |p| {
                Ok(regular_bimodule(&cons::octonion_u(p.field, &p.scalar("alpha")?, &p.scalar("beta")?, &p.scalar("gamma")?, &p.scalar("u2")?)?))
            },
        },
        CatalogEntry {
            name: "cay_h22",
            summary: "Cay L over H(2|2), L a minimal graded left ideal (characteristic 2)",
            params: &[("alpha", "1"), ("beta", "1")],
            default_field: "GF(2)",
            build: |p| cay_h22(p.field, &p.scalar("alpha")?, &p.scalar("beta")?),
        },
        CatalogEntry {
            name: "cay_h_u",
            summary: "(Cay L)[u] over H[u], L a minimal left ideal (characteristic 2)",
            params: &[("alpha", "1"), ("beta", "1"), ("u2", "1")],
            default_field: "GF(2)",
            build: |p| cay_h_u(p.field, &p.scalar("alpha")?, &p.scalar("beta")?, &p.scalar("u2")?),
        },
        CatalogEntry {
            name: "bvd",
            summary: "B(Reg Gamma, D + R_lambda, gamma), Gamma = F[t]/(t^3), D = d/dt",
            params: &[("lambda", "0"), ("gamma", "0")],
            default_field: "GF(3)",
            build: |p| {
                let (g, d) = cons::truncated_poly_gamma(p.field, 1)?;
                let lam = p.scalar("lambda")?;
                let a = g.scale(&lam, &g.basis(0));
                let gam = g.parse_element(p.text("gamma")?)?;
                b_v_d(&gam, &diff_reg(&g, &d, &a)?)
            },
        },
    ]
}

pub fn find_entry(name: &str) -> Option<CatalogEntry> {
    registry().into_iter().find(|e| e.name == name)
}

/// Builds a family member; missing parameters take their defaults.
pub fn build_entry(entry: &CatalogEntry, field: &Field, params: &Params) -> Result<SuperBimodule> {
    let ps = ParamSet { entry: entry.name, declared: entry.params, given: params, field };
    ps.validate()?;
    (entry.build)(&ps)
}

/// A concrete catalog instance with the properties the classification asserts.
#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub entry: &'static str,
    pub field: String,
    pub params: Params,
    pub associative: bool,
}

fn inst(entry: &'static str, field: &str, params: &[(&str, &str)]) -> Instance {
    let params: Params = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    let ps: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    Instance {
        label: format!("{entry}[{}; {}]", field, ps.join(",")),
        entry,
        field: field.to_string(),
        params,
        associative: false,
    }
}

impl Instance {
    pub fn build(&self) -> Result<SuperBimodule> {
        let e = find_entry(self.entry).ok_or_else(|| Error::Invalid(format!("no entry {}", self.entry)))?;
        let f: Field = self.field.parse()?;
        build_entry(&e, &f, &self.params)
    }
}

/// The instances of the catalog battery. Every one is expected to be
/// alternative, graded-irreducible and faithful, and non-associative
/// unless flagged.
pub fn battery() -> Vec<Instance> {
    let mut out = vec![
        inst("v_eps", "GF(7)", &[("eps", "2")]),
        inst("v_eps", "GF(7)", &[("eps", "4")]),
        inst("v_eps", "Q[w]/(w^2+w+1)", &[("eps", "w")]),
        inst("v_eps", "Q[w]/(w^2+w+1)", &[("eps", "-w-1")]),
        inst("sqrt1_type", "Q", &[("type", "1")]),
        inst("sqrt1_type", "Q", &[("type", "2")]),
        inst("sqrt1_type", "Q", &[("type", "3"), ("alpha", "-3/7"), ("delta", "8/7")]),
        inst("sqrt1_type", "GF(13)", &[("type", "1")]),
        inst("sqrt1_type", "GF(13)", &[("type", "2")]),
        inst("sqrt1_type", "GF(13)", &[("type", "3"), ("alpha", "1"), ("delta", "12")]),
        inst("v_lambda_mu", "Q", &[("lambda", "-1"), ("mu", "0")]),
        inst("v_lambda_mu", "GF(13)", &[("lambda", "0"), ("mu", "3")]),
    ];
    // an associative member of the series
    let mut assoc = inst("v_lambda_mu", "Q", &[("lambda", "1/2"), ("mu", "1/2")]);
    assoc.associative = true;
    out.push(assoc);
    for (l, m) in [("1", "1"), ("1", "2"), ("2", "1"), ("2", "2")] {
        out.push(inst("v33", "GF(3)", &[("lambda", l), ("mu", m)]));
    }
    out.push(inst("reg_b42", "GF(3)", &[]));
    for (f, a, l, e) in [
        ("Q", "2", "1", "0"),
        ("GF(7)", "1", "0", "2"),
        ("GF(7)", "1", "0", "4"),
        ("Q", "2", "1", "-1"),
        ("GF(5)", "2", "1", "0"),
        ("GF(3)", "1", "0", "1"),
    ] {
        out.push(inst("f1x_eps", f, &[("alpha", a), ("lambda", l), ("eps", e)]));
    }
    for (f, l) in [("Q", "1"), ("GF(5)", "2"), ("GF(7)", "3"), ("Q", "-1/2"), ("GF(2)", "1")] {
        out.push(inst("f1x_lam", f, &[("lambda", l)]));
    }
    for (f, a, l) in [("Q", "1", "0"), ("Q", "2", "0"), ("GF(5)", "1", "0"), ("GF(2)", "1", "0"), ("Q", "3", "1")] {
        out.push(inst("f1x_22", f, &[("alpha", a), ("lambda", l)]));
    }
    out.push(inst("reg_o44", "GF(2)", &[]));
    out.push(inst("reg_o_u", "GF(2)", &[]));
    out.push(inst("cay_h22", "GF(2)", &[]));
    out.push(inst("cay_h22", "GF(2)", &[("alpha", "0")]));
    out.push(inst("cay_h_u", "GF(2)", &[]));
    for l in ["0", "1", "2"] {
        for g in ["0", "1", "t"] {
            out.push(inst("bvd", "GF(3)", &[("lambda", l), ("gamma", g)]));
        }
    }
    out
}

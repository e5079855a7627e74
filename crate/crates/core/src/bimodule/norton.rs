//! Irreducibility of a family of operators: Norton's criterion with a
//! deterministic search for singular algebra elements, plus an exhaustive
//! oracle for small finite cases.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{pre, Error, Result};
use crate::linalg::{spin_closure, unit_vec, Matrix, Subspace};
use crate::scalars::{poly_factor, Field, Scalar};

const SEED: u64 = 0x4e6f_7274;
const CANDIDATES: usize = 400;
const MAX_WORD: usize = 4;

/// Data that makes an irreducibility verdict checkable: theta is singular
/// with kernel of p(theta) of dimension deg p, and one kernel vector spins
/// to the whole space while one kernel vector of the transpose spins to the
/// whole dual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NortonCertificate {
    pub theta: String,
    pub factor: String,
    pub kernel_dim: usize,
    pub spin_dim: usize,
    pub dual_spin_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Irreducible(NortonCertificate),
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
}

impl Verdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Verdict::Irreducible(_))
    }
}

fn check_witness(n: usize, gens: &[Matrix], s: &Subspace) -> Subspace {
    assert!(!s.is_zero() && s.dim() < n, "witness must be proper and nonzero");
    assert!(gens.iter().all(|g| s.is_invariant(g)), "witness must be invariant");
    s.clone()
}

fn word_name(names: &[String], w: &[usize]) -> String {
    w.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("")
}

/// Norton's irreducibility test for the algebra generated by `gens` on F^n.
pub fn norton_test(f: &Field, n: usize, gens: &[Matrix], names: &[String]) -> Result<Verdict> {
    if n == 0 {
        return pre("irreducibility of the zero space");
    }
    let refs: Vec<&Matrix> = gens.iter().collect();
    let trans: Vec<Matrix> = gens.iter().map(|g| g.transpose()).collect();
    let trefs: Vec<&Matrix> = trans.iter().collect();
    if n == 1 {
        return Ok(Verdict::Irreducible(NortonCertificate {
            theta: "0".into(),
            factor: "x".into(),
            kernel_dim: 1,
            spin_dim: 1,
            dual_spin_dim: 1,
        }));
    }
    // cheap witnesses first: spins of basis vectors and of dual basis vectors
    for i in 0..n {
        let s = spin_closure(f, n, &refs, &[unit_vec(f, n, i)]);
        if !s.is_full() {
            return Ok(Verdict::Reducible(check_witness(n, gens, &s)));
        }
        let d = spin_closure(f, n, &trefs, &[unit_vec(f, n, i)]);
        if !d.is_full() {
            return Ok(Verdict::Reducible(check_witness(n, gens, &d.perp())));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let small = |rng: &mut ChaCha8Rng| -> Scalar {
        loop {
            let c = if f.is_finite() { f.random(rng) } else { f.from_i64(rng.gen_range(-3..=3)) };
            if !f.is_zero(&c) {
                return c;
            }
        }
    };
    for attempt in 0..CANDIDATES {
        // single generators first, then random sums of up to three words
        let terms: Vec<(Scalar, Vec<usize>)> = if attempt < gens.len() {
            vec![(f.one(), vec![attempt])]
        } else {
            let k = rng.gen_range(2..=3);
            (0..k)
                .map(|_| {
                    let len = rng.gen_range(1..=MAX_WORD);
                    let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..gens.len())).collect();
                    (small(&mut rng), w)
                })
                .collect()
        };
        let mut theta = Matrix::zeros(f, n, n);
        for (c, w) in &terms {
            let mut m = Matrix::identity(f, n);
            for &g in w {
                m = gens[g].mul(&m);
            }
            theta = theta.add_scaled(c, &m);
        }
        let cp = theta.charpoly();
        let mut factors = poly_factor(&cp)?;
        factors.sort_by_key(|(p, _)| p.degree());
        for (p, _) in factors {
            let d = p.degree().unwrap_or(0);
            let nm = theta.eval_poly(&p);
            let ker = nm.kernel();
            if ker.len() != d {
                // larger kernels cannot certify, but repeated composition
                // factors show up here as proper spins
                if ker.len() > d {
                    let s = spin_closure(f, n, &refs, &[ker[0].clone()]);
                    if !s.is_full() {
                        return Ok(Verdict::Reducible(check_witness(n, gens, &s)));
                    }
                }
                continue;
            }
            let s = spin_closure(f, n, &refs, &[ker[0].clone()]);
            if !s.is_full() {
                return Ok(Verdict::Reducible(check_witness(n, gens, &s)));
            }
            let kt = nm.transpose().kernel();
            let ds = spin_closure(f, n, &trefs, &[kt[0].clone()]);
            if !ds.is_full() {
                return Ok(Verdict::Reducible(check_witness(n, gens, &ds.perp())));
            }
            let theta_text = terms
                .iter()
                .map(|(c, w)| format!("{}*{}", f.fmt_scalar(c), word_name(names, w)))
                .collect::<Vec<_>>()
                .join(" + ");
            return Ok(Verdict::Irreducible(NortonCertificate {
                theta: theta_text,
                factor: p.to_string(),
                kernel_dim: d,
                spin_dim: s.dim(),
                dual_spin_dim: ds.dim(),
            }));
        }
    }
    Err(Error::Inconclusive(format!(
        "no usable singular element among {CANDIDATES} candidates"
    )))
}

/// Spins every nonzero vector whose first nonzero coordinate is 1.
/// Returns a proper invariant subspace, or `None` when there is none.
pub fn exhaustive_invariant_subspace(f: &Field, n: usize, gens: &[Matrix], cap: u64) -> Result<Option<Subspace>> {
    let elems = f.enumerate()?;
    let q = elems.len() as u64;
    let total = q
        .checked_pow(n as u32)
        .filter(|&t| t <= cap)
        .ok_or_else(|| Error::SizeCap(format!("{q}^{n} vectors exceed {cap}")))?;
    let refs: Vec<&Matrix> = gens.iter().collect();
    for t in 1..total {
        let mut v = Vec::with_capacity(n);
        let mut r = t;
        for _ in 0..n {
            v.push(elems[(r % q) as usize].clone());
            r /= q;
        }
        let lead = v.iter().find(|x| !f.is_zero(x)).unwrap();
        if !f.is_one(lead) {
            continue;
        }
        let s = spin_closure(f, n, &refs, &[v]);
        if !s.is_full() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// A minimal nonzero invariant subspace, by repeated refinement with
/// Norton witnesses.
pub fn minimal_invariant_subspace(f: &Field, n: usize, gens: &[Matrix]) -> Result<Subspace> {
    let mut basis: Vec<Vec<Scalar>> = (0..n).map(|i| unit_vec(f, n, i)).collect();
    let mut cur: Vec<Matrix> = gens.to_vec();
    loop {
        let m = basis.len();
        let names: Vec<String> = (0..cur.len()).map(|i| format!("g{i}")).collect();
        match norton_test(f, m, &cur, &names)? {
            Verdict::Irreducible(_) => return Ok(Subspace::span(f, n, &basis)),
            Verdict::Reducible(s) => {
                basis = s
                    .basis()
                    .iter()
                    .map(|c| {
                        let mut x = vec![f.zero(); n];
                        for (k, ck) in c.iter().enumerate() {
                            if !f.is_zero(ck) {
                                for (xi, bi) in x.iter_mut().zip(&basis[k]) {
                                    *xi = f.add(xi, &f.mul(ck, bi));
                                }
                            }
                        }
                        x
                    })
                    .collect();
                cur = cur.iter().map(|g| s.restrict(g)).collect();
            }
        }
    }
}

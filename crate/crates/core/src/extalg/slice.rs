//! The graded piece T^{(q)}_p(ℂ^n) with an enumerated basis.
//!
//! A basis element is v_J s_J τ with J weakly increasing and τ a representative
//! of the coset Stab_J·τ in S_{p+q}, where Stab_J permutes the values inside
//! each run of J. The representative assigns the values of a run in order of
//! position. Since s_J t = t in canonical form, t is constant on these cosets
//! and the coordinate of a term is the coefficient sum over its coset.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::extalg::ops::{multisets, TBar};
use crate::extalg::tvw::{Tvw, Word};
use crate::linalg::{sparse_from_map, SparseMat, SparseVec};
use crate::rat::{self, Rat};
use crate::symcore::{GAElem, Perm};

#[derive(Clone, Debug)]
pub struct Slice {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    basis: Vec<(Word, Perm)>,
    index: HashMap<(Word, Perm), usize>,
}

fn runs(j: &[u8]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 1;
    for k in 1..=j.len() {
        if k == j.len() || j[k] != j[k - 1] {
            out.push((start, k));
            start = k + 1;
        }
    }
    out
}

/// The chosen representative of Stab_J·τ inside S_m.
pub fn coset_rep(j: &[u8], tau: &Perm, m: usize) -> Perm {
    let mut img = tau.images(m);
    for (a, b) in runs(j) {
        if a == b {
            continue;
        }
        let mut next = a;
        for v in img.iter_mut() {
            if (a..=b).contains(v) {
                *v = next;
                next += 1;
            }
        }
    }
    Perm::from_images(&img).expect("relabelling inside blocks keeps a bijection")
}

impl Slice {
    pub fn new(n: usize, p: usize, q: usize) -> Slice {
        let m = p + q;
        let perms = Perm::all(m);
        let mut basis = Vec::new();
        let mut index = HashMap::new();
        for j in multisets(n, p) {
            for tau in &perms {
                let rep = coset_rep(&j, tau, m);
                let key = (j.clone(), rep);
                if !index.contains_key(&key) {
                    index.insert(key.clone(), basis.len());
                    basis.push(key);
                }
            }
        }
        Slice {
            n,
            p,
            q,
            basis,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(Word, Perm)] {
        &self.basis
    }

    pub fn element(&self, k: usize) -> TBar {
        let (j, tau) = &self.basis[k];
        Tvw::term(j, GAElem::perm(tau.clone()), &[])
    }

    pub fn coords(&self, phi: &TBar) -> Result<SparseVec<Rat>> {
        let m = self.p + self.q;
        let mut acc = std::collections::BTreeMap::new();
        for ((u, w), t) in phi.terms() {
            if !w.is_empty() || u.len() != self.p || u.iter().any(|&a| a as usize > self.n) {
                return Err(Error::OutOfSlice(format!("term with words {u:?}, {w:?}")));
            }
            for (s, c) in t.terms() {
                if s.degree() > m {
                    return Err(Error::OutOfSlice(format!("{s} is not in S_{m}")));
                }
                let k = self.index[&(u.clone(), coset_rep(u, s, m))];
                *acc.entry(k).or_insert_with(rat::zero) += c;
            }
        }
        Ok(sparse_from_map(acc))
    }

    /// Matrix of f from this slice to `target`, column k being f(element k).
    pub fn matrix_of(
        &self,
        target: &Slice,
        f: impl Fn(&TBar) -> Result<TBar>,
    ) -> Result<SparseMat> {
        let mut cols = Vec::with_capacity(self.dim());
        for k in 0..self.dim() {
            cols.push(target.coords(&f(&self.element(k))?)?);
        }
        Ok(SparseMat::from_cols(target.dim(), cols))
    }
}

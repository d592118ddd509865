//! Noncommutative determinants, immanants and preimmanants over a generic ring.
//!
//! Index sequences are 1-based. Products X_{r(1)c(1)} ⋯ X_{r(n)c(n)} are taken in
//! the displayed order, which matters for noncommutative entries.

pub mod det;
pub mod imm;
pub mod matrix;
pub mod symfun;

use std::collections::BTreeMap;

use crate::rat::{self, Rat};

pub use det::{column_det, det_r, det_r_column, det_r_strict, symm_det, symm_det_sub};
pub use imm::{
    cauchy_binet_check, chi_valued, imm, imm_lambda_p, imm_lambda_p_weak, permanent, preimm,
    preimm_p, preimm_p_weak, trace, CauchyBinetMode, ImmKind, PreimmKind,
};
pub use matrix::RingMatrix;
pub use symfun::{kostka, sym_eval, SymKind};

/// All of [n]^p in lexicographic order.
pub fn index_words(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..p {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (1..=n).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn weak_words(n: usize, p: usize) -> Vec<Vec<usize>> {
    index_words(n, p)
        .into_iter()
        .filter(|w| w.windows(2).all(|x| x[0] <= x[1]))
        .collect()
}

pub fn strict_words(n: usize, p: usize) -> Vec<Vec<usize>> {
    index_words(n, p)
        .into_iter()
        .filter(|w| w.windows(2).all(|x| x[0] < x[1]))
        .collect()
}

/// I! for an index sequence.
pub fn multiplicity_factorial(w: &[usize]) -> Rat {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in w {
        *counts.entry(x).or_default() += 1;
    }
    counts.values().map(|&m| rat::factorial(m)).product()
}

//! Distinguished elements of ℂS_p: stabilizer idempotents, Jucys–Murphy elements,
//! central bases.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rat::{self, Rat};
use crate::ring::Ring;
use crate::symcore::character::character;
use crate::symcore::groupalg::GAElem;
use crate::symcore::partition::Partition;
use crate::symcore::perm::Perm;

/// Permutations σ with i_{σ(k)} = i_k for all k.
pub fn stabilizer(word: &[u8]) -> Vec<Perm> {
    let p = word.len();
    let mut sorted: Vec<(u8, usize)> = word.iter().copied().zip(1..=p).collect();
    sorted.sort();
    // positions grouped by letter; permute within each group
    let mut groups: BTreeMap<u8, Vec<usize>> = BTreeMap::new();
    for (letter, pos) in sorted {
        groups.entry(letter).or_default().push(pos);
    }
    let mut acc = vec![Perm::identity()];
    for pos in groups.values() {
        if pos.len() < 2 {
            continue;
        }
        let local = Perm::all(pos.len());
        let mut next = Vec::with_capacity(acc.len() * local.len());
        for a in &acc {
            for l in &local {
                let mut img: Vec<usize> = (1..=p).collect();
                for (k, &x) in pos.iter().enumerate() {
                    img[x - 1] = pos[l.apply(k + 1) - 1];
                }
                next.push(a.compose(&Perm::from_images(&img).unwrap()));
            }
        }
        acc = next;
    }
    acc.sort();
    acc
}

/// I! = Π (multiplicity of each letter)!.
pub fn word_factorial(word: &[u8]) -> Rat {
    let mut counts: BTreeMap<u8, usize> = BTreeMap::new();
    for &x in word {
        *counts.entry(x).or_default() += 1;
    }
    counts.values().map(|&m| rat::factorial(m)).product()
}

/// s_I = (1/I!) Σ_{σ ∈ (S_p)_I} σ.
pub fn stabilizer_idempotent(word: &[u8]) -> GAElem {
    let stab = stabilizer(word);
    let w = rat::recip(&rat::int(stab.len() as i64));
    let mut g = GAElem::new();
    for s in stab {
        g.add_term(s, w.clone());
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JmKind {
    /// x_k = Σ_{i<k} (i k)
    X,
    /// x°_k = Σ_{i=1}^{k−1} (p−i+1 p−k+1)
    XCirc,
    /// y_k = (1 2) + ... + (1 k)
    Y,
}

pub fn jucys_murphy(kind: JmKind, k: usize, p: usize) -> Result<GAElem> {
    if k < 1 || k > p {
        return Err(Error::Invalid(format!(
            "Jucys–Murphy index {k} outside 1..={p}"
        )));
    }
    let mut g = GAElem::new();
    for i in 1..k {
        let t = match kind {
            JmKind::X => Perm::transposition(i, k),
            JmKind::XCirc => Perm::transposition(p - i + 1, p - k + 1),
            JmKind::Y => Perm::transposition(1, i + 1),
        };
        g.add_term(t, rat::one());
    }
    Ok(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralKind {
    STilde,
    HTilde,
    PTilde,
}

/// s̃_λ, h̃_λ or p̃_λ in ℂS_p.
pub fn central_basis(kind: CentralKind, mu: &Partition, p: usize) -> Result<GAElem> {
    if mu.weight() != p {
        return Err(Error::Size(format!("|{mu}| != {p}")));
    }
    let all = Perm::all(p);
    let pf = rat::factorial(p);
    let mut g = GAElem::new();
    match kind {
        CentralKind::STilde => {
            for s in &all {
                g.add_term(s.clone(), rat::int(character(mu, s)?) / &pf);
            }
        }
        CentralKind::HTilde => {
            let young = Perm::young_subgroup(mu.parts());
            let w = rat::recip(&(pf.clone() * rat::int(young.len() as i64)));
            for s in &all {
                let si = s.inverse();
                for t in &young {
                    g.add_term(si.compose(t).compose(s), w.clone());
                }
            }
        }
        CentralKind::PTilde => {
            let w = mu.z() / &pf;
            for s in &all {
                if &s.cycle_type(p)? == mu {
                    g.add_term(s.clone(), w.clone());
                }
            }
        }
    }
    Ok(g)
}

/// Whether t commutes with s_1, ..., s_{p−1}.
pub fn is_central(t: &GAElem, p: usize) -> bool {
    (1..p).all(|i| {
        let s = Perm::s(i);
        t.left_perm(&s) == t.right_perm(&s)
    })
}

/// Coefficients c_λ = χ_λ(t) with t = Σ c_λ s̃_λ.
pub fn central_decompose(t: &GAElem, p: usize) -> Result<BTreeMap<Partition, Rat>> {
    t.check_support(p)?;
    if !is_central(t, p) {
        return Err(Error::NotCentral(format!("{t}")));
    }
    let mut out = BTreeMap::new();
    for l in Partition::all(p) {
        out.insert(l.clone(), crate::symcore::character::chi_apply(&l, t)?);
    }
    Ok(out)
}

/// Σ_λ c_λ s̃_λ.
pub fn central_recompose(coeffs: &BTreeMap<Partition, Rat>, p: usize) -> Result<GAElem> {
    let mut g = GAElem::new();
    for (l, c) in coeffs {
        g.add_scaled(&central_basis(CentralKind::STilde, l, p)?, c);
    }
    Ok(g)
}

/// Σ_{σ ∈ S_p} σ⁻¹ τ σ.
pub fn conjugation_sum(tau: &GAElem, p: usize) -> GAElem {
    let mut g = GAElem::new();
    for s in Perm::all(p) {
        g.add_assign_ref(&tau.left_perm(&s.inverse()).right_perm(&s));
    }
    g
}

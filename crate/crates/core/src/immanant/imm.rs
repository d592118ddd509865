//! Immanants and ℂS_n ⊗ R-valued preimmanants.

use crate::error::{Error, Result};
use crate::immanant::det::{ordered_product, require_square};
use crate::immanant::matrix::RingMatrix;
use crate::immanant::{index_words, multiplicity_factorial, weak_words};
use crate::rat;
use crate::ring::Ring;
use crate::symcore::{character, GroupAlg, Partition, Perm};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImmKind {
    Column,
    Row,
    /// Carries the χ_λ(1)/n! prefactor.
    Double,
    Symm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreimmKind {
    Column,
    Row,
    Symm,
}

fn char_table(lambda: &Partition) -> Result<Vec<(Perm, i64)>> {
    Perm::all(lambda.weight())
        .into_iter()
        .map(|s| character(lambda, &s).map(|c| (s, c)))
        .collect()
}

fn require_size<R: Ring>(x: &RingMatrix<R>, lambda: &Partition) -> Result<usize> {
    let n = require_square(x)?;
    if n != lambda.weight() {
        return Err(Error::Size(format!("imm_{lambda} of an {n}×{n} matrix")));
    }
    Ok(n)
}

pub fn imm<R: Ring>(kind: ImmKind, lambda: &Partition, x: &RingMatrix<R>) -> Result<R> {
    let n = require_size(x, lambda)?;
    let table = char_table(lambda)?;
    let mut acc = R::zero();
    match kind {
        ImmKind::Column => {
            for (s, c) in &table {
                if *c != 0 {
                    acc.add_assign_ref(
                        &ordered_product(x, n, |k| (s.apply(k), k)).scale(&rat::int(*c)),
                    );
                }
            }
        }
        ImmKind::Row => {
            // χ(σ⁻¹) = χ(σ)
            for (s, c) in &table {
                if *c != 0 {
                    acc.add_assign_ref(
                        &ordered_product(x, n, |k| (k, s.apply(k))).scale(&rat::int(*c)),
                    );
                }
            }
        }
        ImmKind::Double | ImmKind::Symm => {
            let chi: std::collections::HashMap<&Perm, i64> =
                table.iter().map(|(s, c)| (s, *c)).collect();
            for (s, cs) in &table {
                for (t, ct) in &table {
                    let c = if kind == ImmKind::Double {
                        cs * ct
                    } else {
                        chi[&s.compose(&t.inverse())]
                    };
                    if c != 0 {
                        let term = ordered_product(x, n, |k| (s.apply(k), t.apply(k)));
                        acc.add_assign_ref(&term.scale(&rat::int(c)));
                    }
                }
            }
            let mut w = rat::recip(&rat::factorial(n));
            if kind == ImmKind::Double {
                w *= rat::int(lambda.dimension() as i64);
            }
            acc = acc.scale(&w);
        }
    }
    Ok(acc)
}

/// column-preimm, row-preimm and symm-preimm; `circ` applies t ⊗ a ↦ t° ⊗ a.
pub fn preimm<R: Ring>(kind: PreimmKind, x: &RingMatrix<R>, circ: bool) -> Result<GroupAlg<R>> {
    let n = require_square(x)?;
    let perms = Perm::all(n);
    let mut out = GroupAlg::new();
    match kind {
        PreimmKind::Column => {
            for s in &perms {
                out.add_term(s.clone(), ordered_product(x, n, |k| (s.apply(k), k)));
            }
        }
        PreimmKind::Row => {
            for s in &perms {
                out.add_term(s.inverse(), ordered_product(x, n, |k| (k, s.apply(k))));
            }
        }
        PreimmKind::Symm => {
            for s in &perms {
                for t in &perms {
                    let term = ordered_product(x, n, |k| (s.apply(k), t.apply(k)));
                    out.add_term(s.compose(&t.inverse()), term);
                }
            }
            out = out.scale(&rat::recip(&rat::factorial(n)));
        }
    }
    Ok(if circ { out.circ() } else { out })
}

/// χ_λ(t ⊗ a) = χ_λ(t) a.
pub fn chi_valued<R: Ring>(lambda: &Partition, t: &GroupAlg<R>) -> Result<R> {
    t.check_support(lambda.weight())?;
    let mut acc = R::zero();
    for (s, a) in t.terms() {
        let c = character(lambda, s)?;
        if c != 0 {
            acc.add_assign_ref(&a.scale(&rat::int(c)));
        }
    }
    Ok(acc)
}

/// imm_{λ,p} X = (1/p!) Σ_{I∈[n]^p} imm_λ X_II with p = |λ|.
pub fn imm_lambda_p<R: Ring>(kind: ImmKind, lambda: &Partition, x: &RingMatrix<R>) -> Result<R> {
    let n = require_square(x)?;
    let p = lambda.weight();
    let mut acc = R::zero();
    for i in index_words(n, p) {
        acc.add_assign_ref(&imm(kind, lambda, &x.sub(&i, &i)?)?);
    }
    Ok(acc.scale(&rat::recip(&rat::factorial(p))))
}

/// imm_{λ,p} X = Σ_{I weakly increasing} (1/I!) symm-imm_λ X_II.
pub fn imm_lambda_p_weak<R: Ring>(lambda: &Partition, x: &RingMatrix<R>) -> Result<R> {
    let n = require_square(x)?;
    let mut acc = R::zero();
    for i in weak_words(n, lambda.weight()) {
        let w = rat::recip(&multiplicity_factorial(&i));
        acc.add_assign_ref(&imm(ImmKind::Symm, lambda, &x.sub(&i, &i)?)?.scale(&w));
    }
    Ok(acc)
}

/// preimm_p X = (1/p!) Σ_{I∈[n]^p} preimm X_II for any of the six preimmanants.
pub fn preimm_p<R: Ring>(
    kind: PreimmKind,
    circ: bool,
    p: usize,
    x: &RingMatrix<R>,
) -> Result<GroupAlg<R>> {
    let n = require_square(x)?;
    let mut acc = GroupAlg::new();
    for i in index_words(n, p) {
        acc.add_assign_ref(&preimm(kind, &x.sub(&i, &i)?, circ)?);
    }
    Ok(acc.scale(&rat::recip(&rat::factorial(p))))
}

/// preimm_p X from weakly increasing I only: each orbit contributes
/// (1/I!)(1/p!) Σ_σ σ⁻¹ (symm-preimm X_II) σ.
pub fn preimm_p_weak<R: Ring>(p: usize, x: &RingMatrix<R>) -> Result<GroupAlg<R>> {
    let n = require_square(x)?;
    let perms = Perm::all(p);
    let mut acc = GroupAlg::new();
    for i in weak_words(n, p) {
        let y = preimm(PreimmKind::Symm, &x.sub(&i, &i)?, false)?;
        let w = rat::recip(&(multiplicity_factorial(&i) * rat::factorial(p)));
        for s in &perms {
            acc.add_assign_ref(&y.left_perm(&s.inverse()).right_perm(s).scale(&w));
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CauchyBinetMode {
    Imm(Partition),
    Preimm,
    PreimmCirc,
}

/// Both sides of the Cauchy–Binet type identity for (XY)_{IK}, over [n']^p and
/// over weakly increasing J with weight 1/J!. True when all forms agree.
pub fn cauchy_binet_check<R: Ring>(
    mode: &CauchyBinetMode,
    x: &RingMatrix<R>,
    y: &RingMatrix<R>,
    i: &[usize],
    k: &[usize],
) -> Result<bool> {
    if !R::COMMUTATIVE {
        return Err(Error::NonCommutative);
    }
    if i.len() != k.len() {
        return Err(Error::Size("I and K have different lengths".into()));
    }
    let p = i.len();
    let xy = x.mul(y)?;
    let lhs_m = xy.sub(i, k)?;
    let inner = x.cols();
    match mode {
        CauchyBinetMode::Imm(lambda) => {
            if lambda.weight() != p {
                return Err(Error::Size(format!("|{lambda}| != {p}")));
            }
            let lhs = imm(ImmKind::Column, lambda, &lhs_m)?;
            let mut full = R::zero();
            for j in index_words(inner, p) {
                let a = imm(ImmKind::Column, lambda, &x.sub(i, &j)?)?;
                let b = imm(ImmKind::Row, lambda, &y.sub(&j, k)?)?;
                full.add_assign_ref(&a.times(&b));
            }
            let w = rat::int(lambda.dimension() as i64) / rat::factorial(p);
            Ok(lhs == full.scale(&w))
        }
        CauchyBinetMode::Preimm | CauchyBinetMode::PreimmCirc => {
            let circ = *mode == CauchyBinetMode::PreimmCirc;
            let lhs = preimm(PreimmKind::Column, &lhs_m, circ)?;
            let pair = |j: &[usize]| -> Result<GroupAlg<R>> {
                let a = preimm(PreimmKind::Column, &x.sub(i, j)?, circ)?;
                let b = preimm(PreimmKind::Column, &y.sub(j, k)?, circ)?;
                Ok(if circ { b.times(&a) } else { a.times(&b) })
            };
            let mut full = GroupAlg::new();
            for j in index_words(inner, p) {
                full.add_assign_ref(&pair(&j)?);
            }
            let mut weak = GroupAlg::new();
            for j in weak_words(inner, p) {
                weak.add_assign_ref(&pair(&j)?.scale(&rat::recip(&multiplicity_factorial(&j))));
            }
            let full = full.scale(&rat::recip(&rat::factorial(p)));
            Ok(lhs == full && lhs == weak)
        }
    }
}

/// The permanent Σ_σ X_{σ(1)1} ⋯ X_{σ(n)n}.
pub fn permanent<R: Ring>(x: &RingMatrix<R>) -> Result<R> {
    let n = require_square(x)?;
    let mut acc = R::zero();
    for s in Perm::all(n) {
        acc.add_assign_ref(&ordered_product(x, n, |k| (s.apply(k), k)));
    }
    Ok(acc)
}

pub fn trace<R: Ring>(x: &RingMatrix<R>) -> Result<R> {
    let n = require_square(x)?;
    Ok(crate::ring::sum((1..=n).map(|i| x.get(i, i).clone())))
}

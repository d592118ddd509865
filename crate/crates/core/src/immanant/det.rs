//! Noncommutative determinants.

use crate::error::{Error, Result};
use crate::immanant::matrix::RingMatrix;
use crate::immanant::{index_words, strict_words};
use crate::rat::{self, Rat};
use crate::ring::Ring;
use crate::symcore::Perm;

/// X_{r(1)c(1)} ⋯ X_{r(m)c(m)}, multiplied left to right.
pub(crate) fn ordered_product<R: Ring>(
    x: &RingMatrix<R>,
    m: usize,
    entry: impl Fn(usize) -> (usize, usize),
) -> R {
    let mut acc = R::one();
    for k in 1..=m {
        let (i, j) = entry(k);
        acc = acc.times(x.get(i, j));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

pub(crate) fn require_square<R: Ring>(x: &RingMatrix<R>) -> Result<usize> {
    if !x.is_square() {
        return Err(Error::Size(format!(
            "{}×{} matrix is not square",
            x.rows(),
            x.cols()
        )));
    }
    Ok(x.rows())
}

/// Σ_σ sgn(σ) X_{σ(1)1} ⋯ X_{σ(n)n}.
pub fn column_det<R: Ring>(x: &RingMatrix<R>) -> Result<R> {
    let n = require_square(x)?;
    let mut acc = R::zero();
    for s in Perm::all(n) {
        let term = ordered_product(x, n, |k| (s.apply(k), k));
        acc.add_assign_ref(&term.scale(&rat::int(s.sign())));
    }
    Ok(acc)
}

/// (1/n!) Σ_{σ,σ'} sgn(σσ'⁻¹) X_{σ(1)σ'(1)}(a_1) ⋯ X_{σ(n)σ'(n)}(a_n), X_ij(u) = X_ij + δ_ij u.
pub fn symm_det<R: Ring>(x: &RingMatrix<R>, params: &[Rat]) -> Result<R> {
    symm_det_with(x, params, |i, j| i == j)
}

/// symm-det(X_II; a) where the shift X_ij(u) = X_ij + δ_ij u refers to the
/// indices of X, so it lands on every (a,b) with i_a = i_b.
pub fn symm_det_sub<R: Ring>(x: &RingMatrix<R>, rows: &[usize], params: &[Rat]) -> Result<R> {
    symm_det_with(&x.sub(rows, rows)?, params, |a, b| {
        rows[a - 1] == rows[b - 1]
    })
}

fn symm_det_with<R: Ring>(
    x: &RingMatrix<R>,
    params: &[Rat],
    delta: impl Fn(usize, usize) -> bool,
) -> Result<R> {
    let n = require_square(x)?;
    if params.len() != n {
        return Err(Error::Size(format!(
            "{} parameters for an {n}×{n} matrix",
            params.len()
        )));
    }
    let perms = Perm::all(n);
    let mut acc = R::zero();
    for s in &perms {
        for t in &perms {
            let mut term = R::one();
            for k in 1..=n {
                let (i, j) = (s.apply(k), t.apply(k));
                let mut e = x.get(i, j).clone();
                if !rat::is_zero(&params[k - 1]) && delta(i, j) {
                    e = e.plus(&R::from_rat(&params[k - 1]));
                }
                term = term.times(&e);
                if term.is_zero() {
                    break;
                }
            }
            acc.add_assign_ref(&term.scale(&rat::int(s.sign() * t.sign())));
        }
    }
    Ok(acc.scale(&rat::recip(&rat::factorial(n))))
}

fn check_r<R: Ring>(x: &RingMatrix<R>, r: usize, params: &[Rat]) -> Result<usize> {
    let n = require_square(x)?;
    if params.len() != r {
        return Err(Error::Size(format!(
            "{} parameters for det_{r}",
            params.len()
        )));
    }
    if r > n {
        return Err(Error::Size(format!("det_{r} of an {n}×{n} matrix")));
    }
    Ok(n)
}

/// det_r(X; a) = (1/r!) Σ_{I∈[n]^r} symm-det(X_II; a).
pub fn det_r<R: Ring>(x: &RingMatrix<R>, r: usize, params: &[Rat]) -> Result<R> {
    let n = check_r(x, r, params)?;
    let mut acc = R::zero();
    for i in index_words(n, r) {
        acc.add_assign_ref(&symm_det_sub(x, &i, params)?);
    }
    Ok(acc.scale(&rat::recip(&rat::factorial(r))))
}

/// det_r(X; a) = Σ_{I strictly increasing} symm-det(X_II; a).
pub fn det_r_strict<R: Ring>(x: &RingMatrix<R>, r: usize, params: &[Rat]) -> Result<R> {
    let n = check_r(x, r, params)?;
    let mut acc = R::zero();
    for i in strict_words(n, r) {
        acc.add_assign_ref(&symm_det_sub(x, &i, params)?);
    }
    Ok(acc)
}

/// det_r(X; a) = (1/r!) Σ_{I∈[n]^r} column-det(X_II + 1_II diag(a)).
pub fn det_r_column<R: Ring>(x: &RingMatrix<R>, r: usize, params: &[Rat]) -> Result<R> {
    let n = check_r(x, r, params)?;
    let mut acc = R::zero();
    for i in index_words(n, r) {
        acc.add_assign_ref(&column_det(&x.sub_shifted(&i, &i, params)?)?);
    }
    Ok(acc.scale(&rat::recip(&rat::factorial(r))))
}

//! Centrality tests and Harish-Chandra evaluation.

use crate::envelope::pbw::Pbw;
use crate::envelope::GaPbw;
use crate::error::{Error, Result};
use crate::rat::{self, Rat};
use crate::ring::Ring;
use crate::symcore::tableau::reverse_semistandard;
use crate::symcore::{GroupAlg, Partition, Perm};

/// Whether u commutes with every E_kl, k, l ≤ n.
pub fn is_central_u(u: &Pbw, n: usize) -> bool {
    offending_generator(u, n).is_none()
}

fn offending_generator(u: &Pbw, n: usize) -> Option<(usize, usize)> {
    for k in 1..=n {
        for l in 1..=n {
            if !u.commutator(&Pbw::generator(k, l)).is_zero() {
                return Some((k, l));
            }
        }
    }
    None
}

/// Whether t ∈ ℂS_p ⊗ U(gl_n) commutes with every s_i ⊗ 1 and 1 ⊗ E_kl.
pub fn is_central_ga(t: &GaPbw, p: usize, n: usize) -> bool {
    for i in 1..p {
        let s = Perm::s(i);
        if t.left_perm(&s) != t.right_perm(&s) {
            return false;
        }
    }
    for k in 1..=n {
        for l in 1..=n {
            let e = GroupAlg::scalar(Pbw::generator(k, l));
            if !t.commutator(&e).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Eigenvalue of a central u on the irreducible gl_n-module of highest weight μ.
///
/// Acting on a highest weight vector, every monomial with a raising factor dies
/// (raising factors are rightmost). A central element has only zero-weight
/// monomials, and a zero-weight monomial without raising factors is pure Cartan,
/// so what remains is a polynomial in the E_ii evaluated at μ.
pub fn hc_eigenvalue(u: &Pbw, mu: &Partition, n: usize) -> Result<Rat> {
    if mu.len() > n {
        return Err(Error::Invalid(format!("{mu} has more than {n} parts")));
    }
    if u.max_index() > n {
        return Err(Error::Size(format!("element uses E_ij beyond gl_{n}")));
    }
    if let Some((k, l)) = offending_generator(u, n) {
        return Err(Error::NotCentral(format!("[u, E{k}{l}] ≠ 0")));
    }
    let weights = mu.padded(n);
    let mut acc = rat::zero();
    for (m, c) in u.terms() {
        if m.iter().any(|g| g.is_raising()) {
            continue;
        }
        debug_assert!(
            m.iter().all(|g| g.i == g.j),
            "central element with a lowering-only monomial"
        );
        let mut v = c.clone();
        for g in m {
            v *= rat::int(weights[g.i as usize - 1] as i64);
        }
        acc += v;
    }
    Ok(acc)
}

/// Which reading of the content-product eigenvalue formula to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Convention {
    /// Σ_T Π_{α∈μ} (λ_{T(α)} − c_α), T reverse semistandard of shape μ: the product
    /// as printed, with T ranging over the shape that α runs through.
    A,
    /// Σ_T Π_{α∈λ} (μ_{T(α)} − c_α), T reverse semistandard of shape λ (shifted Schur).
    B,
}

/// Σ_T Π_{α ∈ shape} (w_{T(α)} − c_α) over reverse semistandard T of the given shape
/// with entries in 1..=n.
fn content_product_sum(shape: &Partition, w: &Partition, n: usize) -> Rat {
    let w = w.padded(n.max(w.len()));
    let mut acc = rat::zero();
    for t in reverse_semistandard(shape, n) {
        let mut prod = rat::one();
        for (r, row) in t.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                let content = c as i64 - r as i64;
                prod *= rat::int(w[x - 1] as i64 - content);
            }
        }
        acc += prod;
    }
    acc
}

pub fn content_sum_eval(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    convention: Convention,
) -> Rat {
    match convention {
        Convention::A => content_product_sum(mu, lambda, n),
        Convention::B => content_product_sum(lambda, mu, n),
    }
}

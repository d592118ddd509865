//! Capelli elements, quantum immanants and quantum preimmanants.

use rayon::prelude::*;

use crate::envelope::pbw::Pbw;
use crate::envelope::GaPbw;
use crate::error::{Error, Result};
use crate::extalg::{covector_word, ext_pair, pairing, tau_divided, vector_word, ExtElem, Tvw};
use crate::immanant::{
    column_det, det_r, index_words, multiplicity_factorial, strict_words, RingMatrix,
};
use crate::rat::{self, Rat};
use crate::ring::Ring;
use crate::symcore::{character, jucys_murphy, GAElem, GroupAlg, JmKind, Partition, Perm, Tableau};
use crate::youngrep;

/// The matrix E = (E_ij) over U(gl_n).
pub fn e_matrix(n: usize) -> RingMatrix<Pbw> {
    RingMatrix::from_fn(n, n, Pbw::generator)
}

fn capelli_params(r: usize) -> Vec<Rat> {
    (0..r).rev().map(|k| rat::int(k as i64)).collect()
}

fn check_rank(r: usize, n: usize) -> Result<()> {
    if r < 1 || r > n {
        return Err(Error::Invalid(format!(
            "Capelli element C_{r} needs 1 ≤ r ≤ {n}"
        )));
    }
    Ok(())
}

/// C_r = Σ_{i_1<…<i_r} column-det(E_II + diag(r−1, …, 0)).
pub fn capelli(r: usize, n: usize) -> Result<Pbw> {
    check_rank(r, n)?;
    let e = e_matrix(n);
    let a = capelli_params(r);
    let mut acc = Pbw::zero();
    for i in strict_words(n, r) {
        acc.add_assign_ref(&column_det(&e.sub_shifted(&i, &i, &a)?)?);
    }
    Ok(acc)
}

/// C_r as det_r(E; r−1, …, 0).
pub fn capelli_det_r(r: usize, n: usize) -> Result<Pbw> {
    check_rank(r, n)?;
    det_r(&e_matrix(n), r, &capelli_params(r))
}

/// C_r as (1/r!)⟨τ^{(r)}, Ξ(r−1)⋯Ξ(0)⟩ in the exterior calculus.
pub fn capelli_exterior(r: usize, n: usize) -> Result<Pbw> {
    check_rank(r, n)?;
    let big_xi = |u: i64| {
        let mut acc = ExtElem::new();
        for i in 1..=n {
            for j in 1..=n {
                let c = Pbw::shifted(i, j, &rat::int(u));
                acc.add_assign_ref(
                    &ExtElem::e(i as u8)
                        .times(&ExtElem::estar(j as u8))
                        .times_coeff(&c),
                );
            }
        }
        acc
    };
    let mut prod = ExtElem::scalar(Pbw::one());
    for u in (0..r as i64).rev() {
        prod = prod.times(&big_xi(u));
    }
    Ok(ext_pair(&tau_divided::<Rat>(n, r)?, &prod).scale(&rat::recip(&rat::factorial(r))))
}

/// Σ_{J∈[n]^p} f(J), summed in parallel.
fn sum_words<R: Ring>(n: usize, p: usize, f: impl Fn(&[usize]) -> R + Sync) -> R {
    index_words(n, p)
        .par_iter()
        .map(|j| f(j))
        .reduce(R::zero, |a, b| a.plus(&b))
}

fn product<R: Ring>(factors: impl IntoIterator<Item = R>) -> R {
    let mut acc = R::one();
    for f in factors {
        acc = acc.times(&f);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QimmVariant {
    /// G_λ: ρ(σ)_TT E_{j_σ(1)j_1}(c_T(1)) ⋯ E_{j_σ(p)j_p}(c_T(p))
    G,
    /// G'_λ: E_{j_p j_σ(p)}(c_T(p)) ⋯ E_{j_1 j_σ(1)}(c_T(1)) ρ(σ⁻¹)_TT
    GPrime,
    /// G°_λ: ρ(σ⁻¹)_TT E_{j_σ(p)j_p}(−c_T(p)) ⋯ E_{j_σ(1)j_1}(−c_T(1))
    GCirc,
    /// G°'_λ: ρ(σ)_TT E_{j_1 j_σ(1)}(−c_T(1)) ⋯ E_{j_p j_σ(p)}(−c_T(p))
    GCircPrime,
}

impl QimmVariant {
    pub const ALL: [QimmVariant; 4] = [
        QimmVariant::G,
        QimmVariant::GPrime,
        QimmVariant::GCirc,
        QimmVariant::GCircPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            QimmVariant::G => "G",
            QimmVariant::GPrime => "G'",
            QimmVariant::GCirc => "G°",
            QimmVariant::GCircPrime => "G°'",
        }
    }

    pub fn is_circ(self) -> bool {
        matches!(self, QimmVariant::GCirc | QimmVariant::GCircPrime)
    }
}

fn check_shape(lambda: &Partition) -> Result<usize> {
    let p = lambda.weight();
    if p == 0 {
        return Err(Error::Invalid("quantum immanants need |λ| ≥ 1".into()));
    }
    Ok(p)
}

/// G_λ, G'_λ, G°_λ or G°'_λ in U(gl_n), built from the tableau T (default: the first
/// standard tableau of shape λ).
pub fn quantum_immanant(
    variant: QimmVariant,
    lambda: &Partition,
    n: usize,
    t: Option<&Tableau>,
) -> Result<Pbw> {
    let p = check_shape(lambda)?;
    let basis = youngrep::basis(lambda);
    let t = t.unwrap_or(&basis[0]);
    if &t.shape() != lambda {
        return Err(Error::Invalid(format!(
            "tableau {t} does not have shape {lambda}"
        )));
    }
    let contents: Vec<Rat> = t.contents().into_iter().map(rat::int).collect();
    let perms = Perm::all(p);
    let mut weighted = Vec::with_capacity(perms.len());
    for s in &perms {
        let w = match variant {
            QimmVariant::G | QimmVariant::GCircPrime => youngrep::diag_entry_perm(lambda, t, s)?,
            QimmVariant::GPrime | QimmVariant::GCirc => {
                youngrep::diag_entry_perm(lambda, t, &s.inverse())?
            }
        };
        if !rat::is_zero(&w) {
            weighted.push((s.clone(), w));
        }
    }
    let neg: Vec<Rat> = contents.iter().map(|c| -c.clone()).collect();
    let total = sum_words(n, p, |j| {
        let mut acc = Pbw::zero();
        for (s, w) in &weighted {
            let f = |k: usize| {
                let (a, b) = (j[s.apply(k) - 1], j[k - 1]);
                match variant {
                    QimmVariant::G => Pbw::shifted(a, b, &contents[k - 1]),
                    QimmVariant::GPrime => Pbw::shifted(b, a, &contents[k - 1]),
                    QimmVariant::GCirc => Pbw::shifted(a, b, &neg[k - 1]),
                    QimmVariant::GCircPrime => Pbw::shifted(b, a, &neg[k - 1]),
                }
            };
            let term = match variant {
                QimmVariant::G | QimmVariant::GCircPrime => product((1..=p).map(f)),
                QimmVariant::GPrime | QimmVariant::GCirc => product((1..=p).rev().map(f)),
            };
            acc.add_assign_ref(&term.scale(w));
        }
        acc
    });
    Ok(total.scale(&(rat::int(lambda.dimension() as i64) / rat::factorial(p))))
}

/// χ_λ applied to the group part.
pub fn chi_apply_u(lambda: &Partition, t: &GaPbw) -> Result<Pbw> {
    t.check_support(lambda.weight())?;
    let mut acc = Pbw::zero();
    for (s, c) in t.terms() {
        acc.add_assign_ref(&c.scale(&rat::int(character(lambda, s)?)));
    }
    Ok(acc)
}

/// G_λ = Σ_{i_1≤…≤i_p} (1/I!) Σ_σ χ_λ(σ E_{i_σ(1)i_1}(x_1) ⋯ E_{i_σ(p)i_p}(x_p)), or
/// G°_λ = Σ_{i_1≥…≥i_p} (1/I!) Σ_σ χ_λ(σ E_{i_1 i_σ(1)}(−x_1) ⋯ E_{i_p i_σ(p)}(−x_p)).
pub fn quantum_immanant_weak(circ: bool, lambda: &Partition, n: usize) -> Result<Pbw> {
    let p = check_shape(lambda)?;
    let jm = JmShifts::new(p, if circ { -1 } else { 1 })?;
    let perms = Perm::all(p);
    let mut acc = Pbw::zero();
    for i in index_words(n, p) {
        let sorted = if circ {
            i.windows(2).all(|w| w[0] >= w[1])
        } else {
            i.windows(2).all(|w| w[0] <= w[1])
        };
        if !sorted {
            continue;
        }
        let mut g = GaPbw::zero();
        for s in &perms {
            let mut f = vec![GroupAlg::perm(s.clone())];
            for k in 1..=p {
                let (a, b) = (i[s.apply(k) - 1], i[k - 1]);
                f.push(if circ {
                    jm.e(b, a, &jm.x, k)
                } else {
                    jm.e(a, b, &jm.x, k)
                });
            }
            g.add_assign_ref(&product(f));
        }
        acc.add_assign_ref(
            &chi_apply_u(lambda, &g)?.scale(&rat::recip(&multiplicity_factorial(&i))),
        );
    }
    Ok(acc)
}

/// The Jucys–Murphy families scaled by ±1, as elements of ℂS_p ⊗ U.
struct JmShifts {
    x: Vec<GAElem>,
    xc: Vec<GAElem>,
    y: Vec<GAElem>,
}

impl JmShifts {
    fn new(p: usize, sign: i64) -> Result<JmShifts> {
        let fam = |kind| -> Result<Vec<GAElem>> {
            (1..=p)
                .map(|k| Ok(jucys_murphy(kind, k, p)?.scale(&rat::int(sign))))
                .collect()
        };
        Ok(JmShifts {
            x: fam(JmKind::X)?,
            xc: fam(JmKind::XCirc)?,
            y: fam(JmKind::Y)?,
        })
    }

    /// E_ab(u_k) = E_ab ⊗ 1 + δ_ab u_k for u one of the families.
    fn e(&self, a: usize, b: usize, fam: &[GAElem], k: usize) -> GaPbw {
        let mut g = GroupAlg::scalar(Pbw::generator(a, b));
        if a == b {
            g.add_assign_ref(&fam[k - 1].map_coeffs(Pbw::from_rat));
        }
        g
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PreimmVariant {
    G,
    GCirc,
}

/// The displayed expressions of G_p and G°_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PreimmExpr {
    /// (1/p!) Σ_J Σ_σ σ E_{j_σ(1)j_1}(x_1) ⋯ E_{j_σ(p)j_p}(x_p)
    G,
    /// (1/p!) Σ_J Σ_σ E_{j_p j_σ(p)}(x_p) ⋯ E_{j_1 j_σ(1)}(x_1) σ⁻¹, also the definition of G'_p
    GReversed,
    /// (1/p!) Σ_J Σ_σ σ E_{j_σ(p)j_p}(x°_1) ⋯ E_{j_σ(1)j_1}(x°_p)
    GCircJm,
    /// (1/p!²) Σ_I Σ_{σ,σ'} σ E_{i_σ(1)i_σ'(1)}(x_1) ⋯ E_{i_σ(p)i_σ'(p)}(x_p) σ'⁻¹
    GSymm,
    /// (1/p!²) Σ_I Σ_{σ,σ'} σ E_{i_σ(p)i_σ'(p)}(x°_1) ⋯ E_{i_σ(1)i_σ'(1)}(x°_p) σ'⁻¹
    GSymmCircJm,
    /// G'_p = (1/p!²) Σ_I Σ_{σ,σ'} σ E_{i_σ(p)i_σ'(p)}(x_p) ⋯ E_{i_σ(1)i_σ'(1)}(x_1) σ'⁻¹
    GPrimeSymm,
    /// (1/p!) Σ_J ⟨e*_{j_1}⋯e*_{j_p}, ξ_{j_p}(y_1) ⋯ ξ_{j_1}(y_p)⟩
    GPairing,
    /// (1/p!) Σ_J Σ_σ E_{j_σ(p)j_p}(−x_p) ⋯ E_{j_σ(1)j_1}(−x_1) σ⁻¹
    Circ,
    /// (1/p!) Σ_J Σ_σ σ E_{j_1 j_σ(1)}(−x_1) ⋯ E_{j_p j_σ(p)}(−x_p), also the definition of G°'_p
    CircReversed,
    /// (1/p!) Σ_J Σ_σ E_{j_σ(1)j_1}(−x°_p) ⋯ E_{j_σ(p)j_p}(−x°_1) σ⁻¹
    CircCircJm,
    /// (1/p!²) Σ_J Σ_{σ,σ'} σ' E_{j_σ(p)j_σ'(p)}(−x_p) ⋯ E_{j_σ(1)j_σ'(1)}(−x_1) σ⁻¹
    CircSymm,
    /// G°'_p = (1/p!²) Σ_J Σ_{σ,σ'} σ' E_{j_σ(1)j_σ'(1)}(−x_1) ⋯ E_{j_σ(p)j_σ'(p)}(−x_p) σ⁻¹
    CircPrimeSymm,
    /// (1/p!) Σ_J ⟨γ*_{j_1}(−y_p) ⋯ γ*_{j_p}(−y_1), e_{j_p}⋯e_{j_1}⟩
    CircPairing,
}

impl PreimmExpr {
    pub const G_FORMS: [PreimmExpr; 7] = [
        PreimmExpr::G,
        PreimmExpr::GReversed,
        PreimmExpr::GCircJm,
        PreimmExpr::GSymm,
        PreimmExpr::GSymmCircJm,
        PreimmExpr::GPrimeSymm,
        PreimmExpr::GPairing,
    ];
    pub const CIRC_FORMS: [PreimmExpr; 6] = [
        PreimmExpr::Circ,
        PreimmExpr::CircReversed,
        PreimmExpr::CircCircJm,
        PreimmExpr::CircSymm,
        PreimmExpr::CircPrimeSymm,
        PreimmExpr::CircPairing,
    ];

    pub fn variant(self) -> PreimmVariant {
        if PreimmExpr::G_FORMS.contains(&self) {
            PreimmVariant::G
        } else {
            PreimmVariant::GCirc
        }
    }
}

/// G_p or G°_p ∈ ℂS_p ⊗ U(gl_n) from its first display.
pub fn quantum_preimmanant(variant: PreimmVariant, p: usize, n: usize) -> Result<GaPbw> {
    match variant {
        PreimmVariant::G => quantum_preimmanant_expr(PreimmExpr::G, p, n),
        PreimmVariant::GCirc => quantum_preimmanant_expr(PreimmExpr::Circ, p, n),
    }
}

pub fn quantum_preimmanant_expr(expr: PreimmExpr, p: usize, n: usize) -> Result<GaPbw> {
    if p == 0 {
        return Err(Error::Invalid("quantum preimmanants need p ≥ 1".into()));
    }
    let sign = if expr.variant() == PreimmVariant::G {
        1
    } else {
        -1
    };
    let jm = JmShifts::new(p, sign)?;
    let perms = Perm::all(p);
    let pf = rat::factorial(p);
    let g = |s: &Perm| GaPbw::perm(s.clone());
    use PreimmExpr as X;
    let total = match expr {
        X::GPairing => sum_words(n, p, |j| pairing_g(j, &jm, n)),
        X::CircPairing => sum_words(n, p, |j| pairing_circ(j, &jm, n)),
        X::GSymm | X::GSymmCircJm | X::GPrimeSymm | X::CircSymm | X::CircPrimeSymm => {
            sum_words(n, p, |i| {
                let mut acc = GaPbw::zero();
                for s in &perms {
                    for t in &perms {
                        let ix = |k: usize| (i[s.apply(k) - 1], i[t.apply(k) - 1]);
                        let mut f = Vec::with_capacity(p + 2);
                        match expr {
                            X::GSymm => {
                                f.push(g(s));
                                f.extend((1..=p).map(|k| jm.e(ix(k).0, ix(k).1, &jm.x, k)));
                                f.push(g(&t.inverse()));
                            }
                            X::GSymmCircJm => {
                                f.push(g(s));
                                f.extend(
                                    (1..=p)
                                        .rev()
                                        .map(|k| jm.e(ix(k).0, ix(k).1, &jm.xc, p + 1 - k)),
                                );
                                f.push(g(&t.inverse()));
                            }
                            X::GPrimeSymm => {
                                f.push(g(s));
                                f.extend((1..=p).rev().map(|k| jm.e(ix(k).0, ix(k).1, &jm.x, k)));
                                f.push(g(&t.inverse()));
                            }
                            X::CircSymm => {
                                f.push(g(t));
                                f.extend((1..=p).rev().map(|k| jm.e(ix(k).0, ix(k).1, &jm.x, k)));
                                f.push(g(&s.inverse()));
                            }
                            _ => {
                                f.push(g(t));
                                f.extend((1..=p).map(|k| jm.e(ix(k).0, ix(k).1, &jm.x, k)));
                                f.push(g(&s.inverse()));
                            }
                        }
                        acc.add_assign_ref(&product(f));
                    }
                }
                acc.scale(&rat::recip(&pf))
            })
        }
        _ => sum_words(n, p, |j| {
            let mut acc = GaPbw::zero();
            for s in &perms {
                // (row, column) of the k-th factor before any transposition
                let ix = |k: usize| (j[s.apply(k) - 1], j[k - 1]);
                let mut f = Vec::with_capacity(p + 1);
                match expr {
                    X::G => {
                        f.push(g(s));
                        f.extend((1..=p).map(|k| jm.e(ix(k).0, ix(k).1, &jm.x, k)));
                    }
                    X::GReversed => {
                        f.extend((1..=p).rev().map(|k| jm.e(ix(k).1, ix(k).0, &jm.x, k)));
                        f.push(g(&s.inverse()));
                    }
                    X::GCircJm => {
                        f.push(g(s));
                        f.extend(
                            (1..=p)
                                .rev()
                                .map(|k| jm.e(ix(k).0, ix(k).1, &jm.xc, p + 1 - k)),
                        );
                    }
                    X::Circ => {
                        f.extend((1..=p).rev().map(|k| jm.e(ix(k).0, ix(k).1, &jm.x, k)));
                        f.push(g(&s.inverse()));
                    }
                    X::CircReversed => {
                        f.push(g(s));
                        f.extend((1..=p).map(|k| jm.e(ix(k).1, ix(k).0, &jm.x, k)));
                    }
                    X::CircCircJm => {
                        f.extend((1..=p).map(|k| jm.e(ix(k).0, ix(k).1, &jm.xc, p + 1 - k)));
                        f.push(g(&s.inverse()));
                    }
                    _ => unreachable!(),
                }
                acc.add_assign_ref(&product(f));
            }
            acc
        }),
    };
    Ok(total.scale(&rat::recip(&pf)))
}

/// ξ_j(u) = Σ_i e_i E_ij + e_j u in T̄(V) ⊗ U(gl_n).
pub fn xi(j: usize, u: &GAElem, n: usize) -> Tvw<Pbw> {
    let mut t = Tvw::new();
    for i in 1..=n {
        t.add_term(&[i as u8], GroupAlg::scalar(Pbw::generator(i, j)), &[]);
    }
    t.add_term(&[j as u8], u.map_coeffs(Pbw::from_rat), &[]);
    t
}

/// γ*_j(u) = Σ_i E_ij(u) e*_i in T̄°(V*) ⊗ U(gl_n).
pub fn gamma_star(j: usize, u: &GAElem, n: usize) -> Tvw<Pbw> {
    let mut t = Tvw::new();
    for i in 1..=n {
        t.add_term(&[], GroupAlg::scalar(Pbw::generator(i, j)), &[i as u8]);
    }
    t.add_term(&[], u.map_coeffs(Pbw::from_rat), &[j as u8]);
    t
}

fn word_u8(j: &[usize]) -> Vec<u8> {
    j.iter().map(|&x| x as u8).collect()
}

fn lift(t: &Tvw<Rat>) -> Tvw<Pbw> {
    t.map_coeffs(Pbw::from_rat)
}

/// G^{JJ} = ⟨e*_{j_1}⋯e*_{j_p}, ξ_{j_p}(y_1) ⋯ ξ_{j_1}(y_p)⟩.
fn pairing_g(j: &[usize], jm: &JmShifts, n: usize) -> GaPbw {
    let p = j.len();
    let mut phi = Tvw::scalar(Pbw::one());
    for k in 1..=p {
        phi = phi.times(&xi(j[p - k], &jm.y[k - 1], n));
    }
    pairing(&lift(&covector_word(&word_u8(j))), &phi).expect("homogeneous of degree p")
}

/// G°^{JJ} = ⟨γ*_{j_1}(−y_p) ⋯ γ*_{j_p}(−y_1), e_{j_p}⋯e_{j_1}⟩.
fn pairing_circ(j: &[usize], jm: &JmShifts, n: usize) -> GaPbw {
    let p = j.len();
    let mut phistar = Tvw::scalar(Pbw::one());
    for k in 1..=p {
        phistar = phistar.times(&gamma_star(j[k - 1], &jm.y[p - k], n));
    }
    pairing(&phistar, &lift(&vector_word(&word_u8(j)))).expect("homogeneous of degree p")
}

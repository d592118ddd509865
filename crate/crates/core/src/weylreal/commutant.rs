//! Commutant theorems checked by linear algebra on finite graded pieces: the
//! generalized Schur–Weyl duality, the Howe-type duality and the SL_n invariants.
//!
//! An inclusion A ⊆ B' is always checked exactly, element by element. Dimensions
//! of commutants come from ranks of the linear system XG = GX. Ranks can be taken
//! over F_p (p = 2^61 − 1) instead of ℚ: reduction mod p never raises the rank of a
//! rational matrix, so a rank r over F_p proves rank ≥ r over ℚ. Together with the
//! exact inclusions this pins every dimension from both sides.

use std::time::Instant;

use crate::envelope::Pbw;
use crate::error::{Error, Result};
use crate::extalg::ops::multisets;
use crate::extalg::{words, LOp, Pairing, Slice, TBar, Tvw};
use crate::immanant::column_det;
use crate::linalg::{Echelon, Field, Fp, SparseMat, SparseVec};
use crate::rat::{self, Rat};
use crate::ring::Ring;
use crate::symcore::{GAElem, Perm};
use crate::weylreal::realize::{letter, matrixize_lop, matrixize_right, pi_tensor, y_matrix};
use crate::weylreal::report::Report;

/// Field used for rank computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankField {
    Rational,
    Modular,
}

fn convert_fp(v: &SparseVec<Rat>) -> SparseVec<Fp> {
    v.iter()
        .filter_map(|(i, x)| {
            let f = Fp::from_rat(x).expect("denominator divisible by the modulus");
            (f.0 != 0).then_some((*i, f))
        })
        .collect()
}

/// Rank of a family of vectors, stopping early once `stop_at` is reached.
fn rank_of(
    rows: impl Iterator<Item = SparseVec<Rat>>,
    field: RankField,
    stop_at: Option<usize>,
) -> usize {
    fn run<F: Field>(rows: impl Iterator<Item = SparseVec<F>>, stop_at: Option<usize>) -> usize {
        let mut e = Echelon::<F>::new();
        for r in rows {
            e.insert(r);
            if stop_at.is_some_and(|t| e.rank() >= t) {
                break;
            }
        }
        e.rank()
    }
    match field {
        RankField::Rational => run(rows, stop_at),
        RankField::Modular => run(rows.map(|r| convert_fp(&r)), stop_at),
    }
}

/// The equations (XG − GX)_{ab} = 0 in the entries of X, flattened column-major.
fn commutation_equations(g: &SparseMat) -> Vec<SparseVec<Rat>> {
    let d = g.nrows();
    let gt = g.transpose();
    let mut out = Vec::with_capacity(d * d);
    for b in 0..d {
        for a in 0..d {
            let mut acc = std::collections::BTreeMap::new();
            for (c, x) in g.col(b) {
                *acc.entry(c * d + a).or_insert_with(rat::zero) += x;
            }
            for (c, x) in gt.col(a) {
                *acc.entry(b * d + c).or_insert_with(rat::zero) -= x;
            }
            let row: SparseVec<Rat> = acc.into_iter().filter(|(_, x)| !rat::is_zero(x)).collect();
            if !row.is_empty() {
                out.push(row);
            }
        }
    }
    out
}

/// Upper bound on the dimension of the commutant of `gens` in End(ℂ^d); exact for
/// the rational field. Stops once the bound reaches `lower`, the dimension of a
/// subspace already known to lie in the commutant.
fn commutant_dim(gens: &[SparseMat], d: usize, field: RankField, lower: Option<usize>) -> usize {
    let stop = lower.map(|l| d * d - l);
    let rows = gens.iter().flat_map(commutation_equations);
    d * d - rank_of(rows, field, stop)
}

fn span_dim(ms: &[SparseMat], field: RankField) -> usize {
    rank_of(ms.iter().map(|m| m.flatten()), field, None)
}

fn commute(a: &[SparseMat], b: &[SparseMat]) -> bool {
    a.iter()
        .all(|x| b.iter().all(|y| x.commutator(y).is_zero()))
}

/// Span of the words in `gens`, grown by left multiplication to a fixed point.
/// Returns spanning products whose rank is the dimension of the generated algebra.
fn generated_algebra(gens: &[SparseMat], d: usize, field: RankField) -> Vec<SparseMat> {
    fn run<F: Field>(
        gens: &[SparseMat],
        d: usize,
        conv: impl Fn(&SparseVec<Rat>) -> SparseVec<F>,
    ) -> Vec<SparseMat> {
        let mut e = Echelon::<F>::new();
        let id = SparseMat::identity(d);
        e.insert(conv(&id.flatten()));
        let mut basis = vec![id];
        let mut k = 0;
        while k < basis.len() {
            for g in gens {
                let m = g.mul(&basis[k]);
                if e.insert(conv(&m.flatten())) {
                    basis.push(m);
                }
            }
            k += 1;
        }
        basis
    }
    match field {
        RankField::Rational => run(gens, d, |v| v.clone()),
        RankField::Modular => run(gens, d, convert_fp),
    }
}

fn covector_op(u: &[u8], sigma: &Perm, w: &[u8]) -> LOp {
    Tvw::term(u, GAElem::perm(sigma.clone()), w).with_pairing(Pairing::Delta)
}

/// Matrices of the spanning operators L(e_{u_l})⋯L(e_{u_1}) L(σ) L(e*_{w_1})⋯L(e*_{w_l}),
/// σ ∈ S_{l+q}, on T^{(q)}_p(ℂ^n).
fn l_family(slice: &Slice, l: usize) -> Result<Vec<SparseMat>> {
    let mut out = Vec::new();
    for u in words(slice.n, l) {
        for sigma in Perm::all(l + slice.q) {
            for w in words(slice.n, l) {
                out.push(matrixize_lop(&covector_op(&u, &sigma, &w), slice)?);
            }
        }
    }
    Ok(out)
}

fn right_generators(slice: &Slice) -> Result<Vec<SparseMat>> {
    (1..slice.p + slice.q)
        .map(|i| matrixize_right(&GAElem::perm(Perm::s(i)), slice))
        .collect()
}

fn right_span(slice: &Slice) -> Result<Vec<SparseMat>> {
    Perm::all(slice.p + slice.q)
        .into_iter()
        .map(|s| matrixize_right(&GAElem::perm(s), slice))
        .collect()
}

/// R(ℂS_{p+q}) and 𝓛^{(q)}_p are mutual commutants in End(T^{(q)}_p(ℂ^n)); also
/// 𝓛^{(q)}_0 ⊂ ⋯ ⊂ 𝓛^{(q)}_p and 𝓛^{(q)}_{p+1} = 0.
pub fn verify_schur_weyl(n: usize, p: usize, q: usize) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("generalized schur-weyl duality")
        .param("n", n)
        .param("p", p)
        .param("q", q);
    let slice = Slice::new(n, p, q);
    let d = slice.dim();
    let field = RankField::Rational;
    let rgens = right_generators(&slice)?;
    let rspan = right_span(&slice)?;
    let families: Vec<Vec<SparseMat>> = (0..=p + 1)
        .map(|l| l_family(&slice, l))
        .collect::<Result<_>>()?;
    let lp = &families[p];
    let dim_r = span_dim(&rspan, field);
    let dim_l = span_dim(lp, field);
    report.dim("T", d);
    report.dim("R", dim_r);
    report.dim("L_p", dim_l);
    report.check("L_p commutes with R", commute(lp, &rgens));
    let dim_rc = commutant_dim(&rgens, d, field, None);
    report.dim("commutant of R", dim_rc);
    report.check("commutant of R equals L_p", dim_rc == dim_l);
    let dim_lc = commutant_dim(lp, d, field, Some(dim_r));
    report.dim("commutant of L_p", dim_lc);
    report.check("commutant of L_p equals R", dim_lc == dim_r);
    for l in 0..p {
        let mut both = families[l].clone();
        both.extend(families[l + 1].iter().cloned());
        let inc = span_dim(&both, field) == span_dim(&families[l + 1], field);
        report.check(format!("L_{l} ⊂ L_{}", l + 1), inc);
    }
    report.check(
        format!("L_{} = 0", p + 1),
        families[p + 1].iter().all(|m| m.is_zero()),
    );
    report.terms(dim_l, dim_rc);
    Ok(report.finish(start))
}

fn howe_q2(slice: &Slice, n: usize, nprime: usize) -> Result<Vec<SparseMat>> {
    let p = slice.p;
    let mut out = Vec::new();
    for a in words(nprime, p) {
        for b in words(nprime, p) {
            for sigma in Perm::all(p + slice.q) {
                let mut op = LOp::new().with_pairing(Pairing::Delta);
                for i in words(n, p) {
                    let u: Vec<u8> = (0..p)
                        .map(|k| letter(i[k] as usize, a[k] as usize, nprime))
                        .collect();
                    let w: Vec<u8> = (0..p)
                        .map(|k| letter(i[k] as usize, b[k] as usize, nprime))
                        .collect();
                    op.add_assign_ref(&covector_op(&u, &sigma, &w));
                }
                out.push(matrixize_lop(&op, slice)?);
            }
        }
    }
    Ok(out)
}

/// 𝒬_1 (generated by gl_n and R(S_{p+q})) and 𝒬_2 are mutual commutants in
/// End(T^{(q)}_p(ℂ^n ⊗ ℂ^{n'})).
pub fn verify_howe(
    n: usize,
    nprime: usize,
    p: usize,
    q: usize,
    field: RankField,
) -> Result<Report> {
    let start = Instant::now();
    let mut report = Report::new("howe duality analogue")
        .param("n", n)
        .param("nprime", nprime)
        .param("p", p)
        .param("q", q)
        .param("rank_field", format!("{field:?}").to_lowercase());
    let slice = Slice::new(n * nprime, p, q);
    let d = slice.dim();
    let mut q1gens = right_generators(&slice)?;
    for i in 1..=n {
        for j in 1..=n {
            q1gens.push(matrixize_lop(
                &pi_tensor(&Pbw::generator(i, j), nprime),
                &slice,
            )?);
        }
    }
    let q2 = howe_q2(&slice, n, nprime)?;
    report.dim("T", d);
    report.check("Q_2 commutes with Q_1", commute(&q2, &q1gens));
    let q1 = generated_algebra(&q1gens, d, field);
    let dim_q1 = q1.len();
    let dim_q2 = span_dim(&q2, field);
    report.dim("Q_1", dim_q1);
    report.dim("Q_2", dim_q2);
    let dim_q1c = commutant_dim(&q1gens, d, field, Some(dim_q2));
    report.dim("commutant of Q_1", dim_q1c);
    report.check("commutant of Q_1 equals Q_2", dim_q1c == dim_q2);
    let dim_q2c = commutant_dim(&q2, d, field, Some(dim_q1));
    report.dim("commutant of Q_2", dim_q2c);
    report.check("commutant of Q_2 equals Q_1", dim_q2c == dim_q1);
    if field == RankField::Modular {
        report.note("ranks over F_p with p = 2^61 - 1 bound the rational ranks from below; with the exact inclusions they fix the dimensions");
    }
    report.terms(dim_q1, dim_q2);
    Ok(report.finish(start))
}

fn sl_constraints(n: usize, nprime: usize, slice: &Slice) -> Result<Vec<SparseMat>> {
    let mut ms = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                ms.push(matrixize_lop(
                    &pi_tensor(&Pbw::generator(i, j), nprime),
                    slice,
                )?);
            }
        }
    }
    for i in 1..n {
        let h = Pbw::generator(i, i).minus(&Pbw::generator(i + 1, i + 1));
        ms.push(matrixize_lop(&pi_tensor(&h, nprime), slice)?);
    }
    Ok(ms)
}

fn invariant_kernel(n: usize, nprime: usize, slice: &Slice) -> Result<Vec<SparseVec<Rat>>> {
    let mut e = Echelon::<Rat>::new();
    for m in sl_constraints(n, nprime, slice)? {
        let t = m.transpose();
        for c in 0..t.ncols() {
            e.insert(t.col(c).clone());
        }
    }
    Ok(e.nullspace(slice.dim()))
}

/// A basis of T_p(ℂ^n ⊗ ℂ^{n'})^{SL_n}, as the joint kernel of the sl_n action.
pub fn sl_invariants(n: usize, nprime: usize, p: usize) -> Result<Vec<TBar>> {
    let slice = Slice::new(n * nprime, p, 0);
    let ker = invariant_kernel(n, nprime, &slice)?;
    Ok(ker
        .iter()
        .map(|v| {
            let mut x = TBar::new();
            for (k, c) in v {
                x.add_assign_ref(&slice.element(*k).scale(c));
            }
            x
        })
        .collect())
}

/// The elements column-det Y_{I_n° J°} for multisets J of size n in [n'].
pub fn fft_generators(n: usize, nprime: usize) -> Result<Vec<TBar>> {
    let y = y_matrix(n, nprime);
    let rows: Vec<usize> = (1..=n).rev().collect();
    multisets(nprime, n)
        .into_iter()
        .map(|j| {
            let cols: Vec<usize> = j.iter().rev().map(|&x| x as usize).collect();
            column_det(&y.sub(&rows, &cols)?)
        })
        .collect()
}

/// T_p(ℂ^n ⊗ ℂ^{n'})^{SL_n} is spanned by A_1⋯A_k σ with A_i column-determinants of Y
/// and σ ∈ S_{kn}.
pub fn verify_fft_sl(n: usize, nprime: usize, p: usize) -> Result<Report> {
    if n == 0 {
        return Err(Error::Invalid("need n ≥ 1".into()));
    }
    let start = Instant::now();
    let mut report = Report::new("first fundamental theorem for SL_n on T")
        .param("n", n)
        .param("nprime", nprime)
        .param("p", p);
    report.note(
        "products A_1...A_k are multiplied by σ in S_{kn}, kn being the degree of the product",
    );
    let slice = Slice::new(n * nprime, p, 0);
    let constraints = sl_constraints(n, nprime, &slice)?;
    let ker = invariant_kernel(n, nprime, &slice)?;
    let mut candidates: Vec<SparseVec<Rat>> = Vec::new();
    if p.is_multiple_of(n) {
        let gens = fft_generators(n, nprime)?;
        let mut products = vec![TBar::one()];
        for _ in 0..p / n {
            products = products
                .iter()
                .flat_map(|a| gens.iter().map(move |g| a.times(g)))
                .collect();
        }
        for a in &products {
            for sigma in Perm::all(p) {
                let x = a.times(&Tvw::term(&[], GAElem::perm(sigma), &[]));
                candidates.push(slice.coords(&x)?);
            }
        }
    }
    let invariant = candidates
        .iter()
        .all(|v| constraints.iter().all(|m| m.apply(v).is_empty()));
    let span = rank_of(candidates.iter().cloned(), RankField::Rational, None);
    report.dim("T_p", slice.dim());
    report.dim("invariants", ker.len());
    report.dim("span of products", span);
    report.check("products are invariant", invariant);
    report.check("products span the invariants", span == ker.len());
    report.terms(ker.len(), candidates.len());
    Ok(report.finish(start))
}

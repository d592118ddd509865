//! Capelli-type identities: on T(ℂ^n ⊗ ℂ^{n'}), and the higher Capelli identities
//! in the Weyl algebra and in 𝓛(ℂ^n ⊗ ℂ^{n'}).

use std::time::Instant;

use crate::envelope::{
    capelli, quantum_immanant, quantum_preimmanant, Pbw, PreimmVariant, QimmVariant,
};
use crate::error::{Error, Result};
use crate::extalg::{LOp, Pairing, Slice};
use crate::immanant::{
    column_det, imm, index_words, multiplicity_factorial, preimm, strict_words, weak_words,
};
use crate::immanant::{ImmKind, PreimmKind};
use crate::rat::{self, Rat};
use crate::ring::Ring;
use crate::symcore::{character, GroupAlg, Partition, Perm};
use crate::weylreal::realize::{
    d_matrix, matrixize_ga_lop, matrixize_lop, pi_poly, pi_tensor, x_matrix, z_matrix,
    zstar_matrix, PolySlice,
};
use crate::weylreal::report::Report;
use crate::weylreal::weyl::WeylElem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    Immanant(Partition),
    Preimmanant(usize),
}

impl Mode {
    pub fn p(&self) -> usize {
        match self {
            Mode::Immanant(l) => l.weight(),
            Mode::Preimmanant(p) => *p,
        }
    }

    fn describe(&self) -> String {
        match self {
            Mode::Immanant(l) => format!("immanant {l}"),
            Mode::Preimmanant(p) => format!("preimmanant {p}"),
        }
    }
}

fn reversed(w: &[usize]) -> Vec<usize> {
    w.iter().rev().copied().collect()
}

fn zero_lop() -> LOp {
    LOp::new().with_pairing(Pairing::Delta)
}

fn c_r(r: usize, n: usize) -> Result<Pbw> {
    // the sum over r-subsets of [n] is empty for r > n
    if r > n {
        Ok(Pbw::zero())
    } else {
        capelli(r, n)
    }
}

fn slice_checks(
    report: &mut Report,
    label: &str,
    lhs: &LOp,
    rhs: &LOp,
    slices: &[(String, Slice)],
) -> Result<()> {
    for (name, s) in slices {
        let ok = matrixize_lop(lhs, s)? == matrixize_lop(rhs, s)?;
        report.check(format!("{label} on {name}"), ok);
    }
    Ok(())
}

/// π(C_r) = Σ_{I ⊂ [n]} Σ_{J multiset} (1/J!) column-det Z_{I°J°} column-det Z*_{IJ}
///        = (1/r!²) Σ_{I∈[n]^r} Σ_{J∈[n']^r} column-det Z_{I°J°} column-det Z*_{IJ}.
pub fn verify_capelli_t(n: usize, nprime: usize, p: usize, r: usize) -> Result<Report> {
    if r == 0 || r > p {
        return Err(Error::Invalid(format!(
            "need 1 ≤ r ≤ p, got r = {r}, p = {p}"
        )));
    }
    let start = Instant::now();
    let mut report = Report::new("capelli identity on T")
        .param("n", n)
        .param("nprime", nprime)
        .param("p", p)
        .param("r", r);
    let (z, zs) = (z_matrix(n, nprime), zstar_matrix(n, nprime));
    let lhs = pi_tensor(&c_r(r, n)?, nprime);
    let term = |i: &[usize], j: &[usize]| -> Result<LOp> {
        let a = column_det(&z.sub(&reversed(i), &reversed(j))?)?;
        let b = column_det(&zs.sub(i, j)?)?;
        Ok(a.times(&b))
    };
    let mut rhs1 = zero_lop();
    for i in strict_words(n, r) {
        for j in weak_words(nprime, r) {
            rhs1.add_assign_ref(&term(&i, &j)?.scale(&rat::recip(&multiplicity_factorial(&j))));
        }
    }
    let mut rhs2 = zero_lop();
    for i in index_words(n, r) {
        for j in index_words(nprime, r) {
            rhs2.add_assign_ref(&term(&i, &j)?);
        }
    }
    let f = rat::factorial(r);
    let rhs2 = rhs2.scale(&rat::recip(&(&f * &f)));
    report.terms(lhs.term_count(), rhs1.term_count().max(rhs2.term_count()));
    report.check("strict/multiset form", lhs == rhs1);
    report.check("full index form", lhs == rhs2);
    let big = n * nprime;
    let slices = vec![
        (format!("T_{p}"), Slice::new(big, p, 0)),
        (format!("T^(1)_{p}"), Slice::new(big, p, 1)),
    ];
    for (name, s) in &slices {
        report.dim(name.clone(), s.dim());
    }
    slice_checks(&mut report, "strict/multiset form", &lhs, &rhs1, &slices)?;
    slice_checks(&mut report, "full index form", &lhs, &rhs2, &slices)?;
    Ok(report.finish(start))
}

fn chi_table(l: &Partition) -> Result<Vec<(Perm, Rat)>> {
    Perm::all(l.weight())
        .into_iter()
        .map(|s| character(l, &s).map(|c| (s, rat::int(c))))
        .collect()
}

fn check_poly_slices(
    report: &mut Report,
    label: &str,
    lhs: &WeylElem,
    rhs: &WeylElem,
    n: usize,
    np: usize,
    p: usize,
) -> Result<()> {
    for d in 0..=p + 1 {
        let s = PolySlice::new(n, np, d);
        report.dim(format!("P_{d}"), s.dim());
        let ok = s.matrix_of(lhs)? == s.matrix_of(rhs)?;
        report.check(format!("{label} on degree {d} polynomials"), ok);
    }
    Ok(())
}

/// The higher Capelli identities for π(G°_λ) and π(G°_p) in the Weyl algebra.
pub fn verify_higher_capelli_weyl(mode: &Mode, n: usize, nprime: usize) -> Result<Report> {
    let start = Instant::now();
    let p = mode.p();
    if p == 0 {
        return Err(Error::Invalid("need p ≥ 1".into()));
    }
    let mut report = Report::new("higher capelli identity (weyl algebra)")
        .param("mode", mode.describe())
        .param("n", n)
        .param("nprime", nprime);
    let (x, d) = (x_matrix(n, nprime), d_matrix(n, nprime));
    let pf = rat::factorial(p);
    let pf2 = &pf * &pf;
    let is = index_words(n, p);
    let ks = index_words(nprime, p);
    match mode {
        Mode::Immanant(l) => {
            let g = quantum_immanant(QimmVariant::GCirc, l, n, None)?;
            let lhs = pi_poly(&g, nprime);
            let mut rhs = WeylElem::zero();
            for i in &is {
                for k in &ks {
                    let a = imm(ImmKind::Column, l, &x.sub(i, k)?)?;
                    let b = imm(ImmKind::Column, l, &d.sub(i, k)?)?;
                    rhs.add_assign_ref(&a.times(&b));
                }
            }
            let rhs = rhs.scale(&(rat::int(l.dimension() as i64) / &pf2));
            // (1/p!) Σ Σ_σ χ(σ) x_{i_σ(p) k_p} ⋯ x_{i_σ(1) k_1} ∂_{i_1 k_1} ⋯ ∂_{i_p k_p}
            let table = chi_table(l)?;
            let mut remark = WeylElem::zero();
            for i in &is {
                for k in &ks {
                    let mut dpart = WeylElem::one();
                    for a in 0..p {
                        dpart = dpart.times(&WeylElem::d(i[a], k[a]));
                    }
                    for (s, c) in &table {
                        if rat::is_zero(c) {
                            continue;
                        }
                        let mut xpart = WeylElem::one();
                        for a in (1..=p).rev() {
                            xpart = xpart.times(&WeylElem::x(i[s.apply(a) - 1], k[a - 1]));
                        }
                        remark.add_assign_ref(&xpart.times(&dpart).scale(c));
                    }
                }
            }
            let remark = remark.scale(&rat::recip(&pf));
            report.terms(lhs.term_count(), rhs.term_count());
            report.check("imm form", lhs == rhs);
            report.check("remark form", lhs == remark);
            if *l == Partition::column(p) && p <= n {
                report.check(
                    "column shape gives the capelli element",
                    lhs == pi_poly(&capelli(p, n)?, nprime),
                );
            }
            check_poly_slices(&mut report, "imm form", &lhs, &rhs, n, nprime, p)?;
        }
        Mode::Preimmanant(_) => {
            let g = quantum_preimmanant(PreimmVariant::GCirc, p, n)?;
            let lhs: GroupAlg<WeylElem> = g.map_coeffs(|u| pi_poly(u, nprime));
            let mut rhs = GroupAlg::<WeylElem>::zero();
            let mut key = GroupAlg::<WeylElem>::zero();
            let perms = Perm::all(p);
            for i in &is {
                for k in &ks {
                    let a = preimm(PreimmKind::Column, &x.sub(i, k)?, false)?;
                    let b = preimm(PreimmKind::Column, &d.sub(i, k)?, true)?;
                    rhs.add_assign_ref(&a.times(&b));
                    // Σ_{σ,σ'} σ' x_{i_σ(p) k_p} ⋯ x_{i_σ(1) k_1} ∂_{i_σ'(1) k_1} ⋯ ∂_{i_σ'(p) k_p} σ⁻¹
                    let xs: Vec<WeylElem> = perms
                        .iter()
                        .map(|s| {
                            (1..=p).rev().fold(WeylElem::one(), |acc, a| {
                                acc.times(&WeylElem::x(i[s.apply(a) - 1], k[a - 1]))
                            })
                        })
                        .collect();
                    let ds: Vec<WeylElem> = perms
                        .iter()
                        .map(|s| {
                            (1..=p).fold(WeylElem::one(), |acc, a| {
                                acc.times(&WeylElem::d(i[s.apply(a) - 1], k[a - 1]))
                            })
                        })
                        .collect();
                    for (si, s) in perms.iter().enumerate() {
                        for (ti, t) in perms.iter().enumerate() {
                            key.add_term(t.compose(&s.inverse()), xs[si].times(&ds[ti]));
                        }
                    }
                }
            }
            let w = rat::recip(&pf2);
            let (rhs, key) = (rhs.scale(&w), key.scale(&w));
            report.terms(lhs.term_count(), rhs.term_count());
            report.check("preimm form", lhs == rhs);
            report.check("key relation", lhs == key);
        }
    }
    Ok(report.finish(start))
}

/// The higher Capelli identities on T(ℂ^n ⊗ ℂ^{n'}) with column-immanants of Z and Z*.
pub fn verify_higher_capelli_t(mode: &Mode, n: usize, nprime: usize, m: usize) -> Result<Report> {
    let start = Instant::now();
    let p = mode.p();
    if p == 0 || m < p {
        return Err(Error::Invalid(format!(
            "need 1 ≤ p ≤ m, got p = {p}, m = {m}"
        )));
    }
    let mut report = Report::new("higher capelli identity on T")
        .param("mode", mode.describe())
        .param("n", n)
        .param("nprime", nprime)
        .param("m", m);
    let (z, zs) = (z_matrix(n, nprime), zstar_matrix(n, nprime));
    let pf = rat::factorial(p);
    let pf2 = &pf * &pf;
    let slices: Vec<(String, Slice)> = (p..=m)
        .map(|d| (format!("T_{d}"), Slice::new(n * nprime, d, 0)))
        .collect();
    for (name, s) in &slices {
        report.dim(name.clone(), s.dim());
    }
    match mode {
        Mode::Immanant(l) => {
            let lhs = pi_tensor(&quantum_immanant(QimmVariant::GCirc, l, n, None)?, nprime);
            let mut rhs = zero_lop();
            for i in index_words(n, p) {
                for k in index_words(nprime, p) {
                    let a = imm(ImmKind::Column, l, &z.sub(&reversed(&i), &reversed(&k))?)?;
                    let b = imm(ImmKind::Column, l, &zs.sub(&i, &k)?)?;
                    rhs.add_assign_ref(&a.times(&b));
                }
            }
            let rhs = rhs.scale(&(rat::int(l.dimension() as i64) / &pf2));
            report.terms(lhs.term_count(), rhs.term_count());
            report.check("column-imm form", lhs == rhs);
            slice_checks(&mut report, "column-imm form", &lhs, &rhs, &slices)?;
        }
        Mode::Preimmanant(_) => {
            let g = quantum_preimmanant(PreimmVariant::GCirc, p, n)?;
            let lhs: GroupAlg<LOp> = g.map_coeffs(|u| pi_tensor(u, nprime));
            let mut rhs = GroupAlg::<LOp>::zero();
            for i in index_words(n, p) {
                for k in index_words(nprime, p) {
                    let a = preimm(
                        PreimmKind::Column,
                        &z.sub(&reversed(&i), &reversed(&k))?,
                        false,
                    )?;
                    let b = preimm(PreimmKind::Column, &zs.sub(&i, &k)?, true)?;
                    rhs.add_assign_ref(&a.times(&b));
                }
            }
            let rhs = rhs.scale(&rat::recip(&pf2));
            report.terms(lhs.term_count(), rhs.term_count());
            report.check("column-preimm form", lhs == rhs);
            for (name, s) in &slices {
                let ok = matrixize_ga_lop(&lhs, s)? == matrixize_ga_lop(&rhs, s)?;
                report.check(format!("column-preimm form on {name}"), ok);
            }
        }
    }
    Ok(report.finish(start))
}

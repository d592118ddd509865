//! Immanant identities on seeded random matrices.

use std::time::Instant;

use capelli_core::immanant::{
    cauchy_binet_check, imm, imm_lambda_p, imm_lambda_p_weak, preimm_p, preimm_p_weak, sym_eval,
    CauchyBinetMode, ImmKind, PreimmKind, RingMatrix, SymKind,
};
use capelli_core::rat::{self, Rat};
use capelli_core::symcore::{central_basis, CentralKind};
use capelli_core::weylreal::Report;
use capelli_core::{GAElem, Partition, Perm, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::harness::{case, pick, Case, ParamError, SuiteConfig};

/// Number of seeds in the default immanant sweep.
pub const SEEDS: u64 = 20;

fn small_rat(rng: &mut ChaCha8Rng) -> Rat {
    rat::frac(rng.random_range(-4..=4), rng.random_range(1..=3))
}

pub fn rat_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> RingMatrix<Rat> {
    let data = (0..rows * cols).map(|_| small_rat(rng)).collect();
    RingMatrix::new(rows, cols, data).expect("sizes match")
}

fn upper_triangular(rng: &mut ChaCha8Rng, n: usize) -> RingMatrix<Rat> {
    let mut x = rat_matrix(rng, n, n);
    for i in 1..=n {
        for j in 1..i {
            x.set(i, j, rat::zero());
        }
    }
    x
}

fn random_perm(rng: &mut ChaCha8Rng, p: usize) -> Perm {
    let all = Perm::all(p);
    all[rng.random_range(0..all.len())].clone()
}

/// A sparse element of ℂS_3 with small integer coefficients.
fn random_ga(rng: &mut ChaCha8Rng) -> GAElem {
    let mut g = GAElem::new();
    for _ in 0..rng.random_range(0..=2) {
        let s = random_perm(rng, 3);
        g.add_term(s, rat::int(rng.random_range(-2..=2)));
    }
    g
}

fn word(rng: &mut ChaCha8Rng, n: usize, p: usize) -> Vec<usize> {
    (0..p).map(|_| rng.random_range(1..=n)).collect()
}

pub fn identities(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let seeds: Vec<u64> = (cfg.seed..cfg.seed + SEEDS).collect();
    let ns = pick("n", cfg.n, [3], 1..=3)?;
    let mut out = Vec::new();
    for s in seeds {
        for &n in &ns {
            out.push(case(
                format!("immanant identities seed={s} n={n}"),
                move || identities_case(s, n),
            ));
        }
    }
    Ok(out)
}

fn identities_case(seed: u64, n: usize) -> capelli_core::Result<Report> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = Report::new("immanant identities")
        .param("seed", seed)
        .param("n", n);

    // column, row, double and symmetrized immanants agree for commutative entries
    let mut four_way = true;
    for size in 1..=n {
        let x = rat_matrix(&mut rng, size, size);
        for l in Partition::all(size) {
            let c = imm(ImmKind::Column, &l, &x)?;
            for k in [ImmKind::Row, ImmKind::Double, ImmKind::Symm] {
                four_way &= imm(k, &l, &x)? == c;
            }
        }
    }
    r.check("column = row = double = symm immanant", four_way);

    let (mut cb_imm, mut cb_pre) = (true, true);
    for p in 1..=3 {
        let inner = rng.random_range(1..=3);
        let x = rat_matrix(&mut rng, n, inner);
        let y = rat_matrix(&mut rng, inner, n);
        for _ in 0..3 {
            let (i, k) = (word(&mut rng, n, p), word(&mut rng, n, p));
            for l in Partition::all(p) {
                cb_imm &= cauchy_binet_check(&CauchyBinetMode::Imm(l), &x, &y, &i, &k)?;
            }
            cb_pre &= cauchy_binet_check(&CauchyBinetMode::Preimm, &x, &y, &i, &k)?;
            cb_pre &= cauchy_binet_check(&CauchyBinetMode::PreimmCirc, &x, &y, &i, &k)?;
        }
    }
    r.check("Cauchy-Binet for immanants", cb_imm);
    r.check("Cauchy-Binet for preimmanants", cb_pre);

    // symm-imm_λ(σXσ⁻¹) = symm-imm_λ(X) with entries in ℂS_3
    let mut conj = true;
    for size in 2..=n.max(2) {
        let data = (0..size * size).map(|_| random_ga(&mut rng)).collect();
        let x = RingMatrix::new(size, size, data)?;
        let s = random_perm(&mut rng, size);
        let y = x.left_perm(&s.inverse()).right_perm(&s);
        for l in Partition::all(size) {
            conj &= imm(ImmKind::Symm, &l, &y)? == imm(ImmKind::Symm, &l, &x)?;
        }
    }
    r.check(
        "symm-imm is conjugation invariant over noncommuting entries",
        conj,
    );

    // imm_{λ,p}(X) = s_λ(eigenvalues) for triangular X
    let mut schur = true;
    let x = upper_triangular(&mut rng, n);
    let eig: Vec<Rat> = (1..=n).map(|i| x.get(i, i).clone()).collect();
    for p in 1..=4 {
        for l in Partition::all(p) {
            let s = sym_eval(SymKind::Schur, &l, &eig);
            schur &= imm_lambda_p_weak(&l, &x)? == s;
            if p <= 3 {
                schur &= imm_lambda_p(ImmKind::Column, &l, &x)? == s;
            }
        }
    }
    r.check("imm_(lambda,p) = s_lambda(eigenvalues)", schur);
    Ok(r.finish(start))
}

pub fn preimm_expansions(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let ns = pick("n", cfg.n, 1..=3, 1..=3)?;
    let ps = pick("p", cfg.p, 1..=4, 1..=4)?;
    let seed = cfg.seed;
    let mut out = Vec::new();
    for &n in &ns {
        for &p in &ps {
            out.push(case(format!("preimm expansions n={n} p={p}"), move || {
                expansion_case(seed, n, p)
            }));
        }
    }
    Ok(out)
}

fn expansion_case(seed: u64, n: usize, p: usize) -> capelli_core::Result<Report> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((n as u64) << 8 | p as u64));
    let mut r = Report::new("preimm_p expansions")
        .param("seed", seed)
        .param("n", n)
        .param("p", p);
    let tri = upper_triangular(&mut rng, n);
    let diag = RingMatrix::from_fn(n, n, |i, j| {
        if i == j {
            tri.get(i, j).clone()
        } else {
            rat::zero()
        }
    });
    let a: Vec<Rat> = (1..=n).map(|i| tri.get(i, i).clone()).collect();
    let (mut s_sum, mut h_sum, mut p_sum) = (GAElem::new(), GAElem::new(), GAElem::new());
    for l in Partition::all(p) {
        s_sum.add_scaled(
            &central_basis(CentralKind::STilde, &l, p)?,
            &sym_eval(SymKind::Schur, &l, &a),
        );
        h_sum.add_scaled(
            &central_basis(CentralKind::HTilde, &l, p)?,
            &sym_eval(SymKind::Monomial, &l, &a),
        );
        let w = sym_eval(SymKind::PowerSum, &l, &a) / l.z();
        p_sum.add_scaled(&central_basis(CentralKind::PTilde, &l, p)?, &w);
    }
    let (mut s_ok, mut h_ok, mut p_ok) = (true, true, true);
    for x in [&diag, &tri] {
        let mut values = vec![preimm_p_weak(p, x)?];
        if p <= 3 {
            values.push(preimm_p(PreimmKind::Column, false, p, x)?);
        }
        for v in values {
            r.terms(v.term_count(), s_sum.term_count());
            s_ok &= v == s_sum;
            h_ok &= v == h_sum;
            p_ok &= v == p_sum;
        }
    }
    r.check("preimm_p = sum s_lambda(a) s~_lambda", s_ok);
    r.check("preimm_p = sum m_lambda(a) h~_lambda", h_ok);
    r.check("preimm_p = sum p_lambda(a)/z_lambda p~_lambda", p_ok);
    Ok(r.finish(start))
}

//! Relations among L(v), L(v*), L(σ) and the Euler operators.

use std::time::Instant;

use capelli_core::extalg::ops::multisets;
use capelli_core::extalg::{
    covector_word, euler, euler_higher_apply, l_e, l_estar, l_perm, lop_apply, pairing,
    vector_word, words, LOp, Slice, Tvw,
};
use capelli_core::linalg::SparseMat;
use capelli_core::rat;
use capelli_core::symcore::central::{stabilizer_idempotent, word_factorial};
use capelli_core::weylreal::Report;
use capelli_core::{Perm, Ring};

use crate::harness::{case, pick, Case, ParamError, SuiteConfig};

/// Largest i for which the s_i relations are checked.
const MAX_S: usize = 4;

struct Relation<'a> {
    report: &'a mut Report,
    name: &'static str,
    ok: bool,
}

impl<'a> Relation<'a> {
    fn new(report: &'a mut Report, name: &'static str) -> Self {
        Relation {
            report,
            name,
            ok: true,
        }
    }

    fn eq(&mut self, lhs: &LOp, rhs: &LOp) {
        self.report.terms(lhs.term_count(), rhs.term_count());
        self.ok &= lhs == rhs;
    }

    fn done(self) {
        self.report.check(self.name, self.ok);
    }
}

pub fn ccr(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let ns = pick("n", cfg.n, 1..=4, 1..=6)?;
    Ok(ns
        .into_iter()
        .map(|n| case(format!("ccr n={n}"), move || Ok(ccr_case(n))))
        .collect())
}

fn ccr_case(n: usize) -> Report {
    let start = Instant::now();
    let mut r = Report::new("CCR analogue").param("n", n);
    let s = |i: usize| l_perm(Perm::s(i));
    let gens: Vec<u8> = (1..=n as u8).collect();

    let mut rel = Relation::new(&mut r, "L(w)L(v) = L(v)L(w)L(s_1)");
    for &v in &gens {
        for &w in &gens {
            rel.eq(&l_e(w).times(&l_e(v)), &l_e(v).times(&l_e(w)).times(&s(1)));
        }
    }
    rel.done();
    let mut rel = Relation::new(&mut r, "L(w*)L(v*) = L(s_1)L(v*)L(w*)");
    for &v in &gens {
        for &w in &gens {
            rel.eq(
                &l_estar(w).times(&l_estar(v)),
                &s(1).times(&l_estar(v)).times(&l_estar(w)),
            );
        }
    }
    rel.done();
    let mut rel = Relation::new(&mut r, "L(w*)L(v) = L(v)L(s_1)L(w*) + <w*,v>");
    for &v in &gens {
        for &w in &gens {
            let delta = LOp::from_rat(&rat::int((v == w) as i64));
            rel.eq(
                &l_estar(w).times(&l_e(v)),
                &l_e(v).times(&s(1)).times(&l_estar(w)).plus(&delta),
            );
        }
    }
    rel.done();
    let mut rel = Relation::new(&mut r, "L(s_i)L(v) = L(v)L(s_i+1)");
    for i in 1..=MAX_S {
        for &v in &gens {
            rel.eq(&s(i).times(&l_e(v)), &l_e(v).times(&s(i + 1)));
        }
    }
    rel.done();
    let mut rel = Relation::new(&mut r, "L(v*)L(s_i) = L(s_i+1)L(v*)");
    for i in 1..=MAX_S {
        for &v in &gens {
            rel.eq(&l_estar(v).times(&s(i)), &s(i + 1).times(&l_estar(v)));
        }
    }
    rel.done();
    let mut rel = Relation::new(&mut r, "L(s_i)^2 = 1");
    for i in 1..=MAX_S {
        rel.eq(&s(i).times(&s(i)), &LOp::one());
    }
    rel.done();
    let mut rel = Relation::new(&mut r, "braid relation");
    for i in 1..=MAX_S {
        rel.eq(
            &s(i).times(&s(i + 1)).times(&s(i)),
            &s(i + 1).times(&s(i)).times(&s(i + 1)),
        );
    }
    rel.done();
    let mut rel = Relation::new(&mut r, "L(s_i)L(s_j) = L(s_j)L(s_i), |i-j| > 1");
    for i in 1..=MAX_S {
        for j in i + 2..=MAX_S + 1 {
            rel.eq(&s(i).times(&s(j)), &s(j).times(&s(i)));
        }
    }
    rel.done();
    r.finish(start)
}

pub fn pairing_suite(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let ns = pick("n", cfg.n, [3], 1..=4)?;
    let ps = pick("p", cfg.p, 0..=3, 0..=4)?;
    let mut out = Vec::new();
    for &n in &ns {
        for &p in &ps {
            out.push(case(format!("pairing n={n} p={p}"), move || {
                pairing_case(n, p)
            }));
        }
    }
    Ok(out)
}

fn pairing_case(n: usize, p: usize) -> capelli_core::Result<Report> {
    let start = Instant::now();
    let mut r = Report::new("pairing with I! s_I")
        .param("n", n)
        .param("p", p);
    let lstar = |i: &[u8]| i.iter().fold(LOp::one(), |acc, &b| acc.times(&l_estar(b)));
    let (mut via_pairing, mut via_operators) = (true, true);
    for i in words(n, p) {
        let expect = stabilizer_idempotent(&i).scale(&word_factorial(&i));
        let got = pairing(&covector_word(&i), &vector_word(&i))?;
        via_pairing &= got == expect;
        let applied = lop_apply(&lstar(&i), &vector_word(&i))?;
        r.terms(applied.term_count(), expect.term_count());
        via_operators &= applied == Tvw::term(&[], expect, &[]);
    }
    r.check("<e*_I, e_I> = I! s_I for all I in [n]^p", via_pairing);
    r.check("L(e*_i1)...L(e*_ip) e_ip...e_i1 = I! s_I", via_operators);
    // multisets: distinct of the same size pair to zero, longer covector words kill
    let mut off_diagonal = true;
    for i in multisets(n, p) {
        for j in multisets(n, p) {
            if i != j {
                off_diagonal &= lop_apply(&lstar(&i), &vector_word(&j))?.is_zero();
            }
        }
        for i2 in multisets(n, p + 1) {
            off_diagonal &= lop_apply(&lstar(&i2), &vector_word(&i))?.is_zero();
        }
    }
    r.check("multisets I != J, r >= p pair to zero", off_diagonal);
    Ok(r.finish(start))
}

pub fn euler_suite(cfg: &SuiteConfig) -> Result<Vec<Case>, ParamError> {
    let ns = pick("n", cfg.n, 1..=3, 1..=3)?;
    let ps = pick("p", cfg.p, 0..=5, 0..=5)?;
    let qs = pick("q", cfg.q, 0..=5, 0..=5)?;
    let mut out = Vec::new();
    for &n in &ns {
        for &p in &ps {
            for &q in &qs {
                if p + q <= 5 {
                    out.push(case(format!("euler n={n} p={p} q={q}"), move || {
                        euler_case(n, p, q)
                    }));
                }
            }
        }
    }
    if out.is_empty() {
        return Err(ParamError("euler needs p + q <= 5".into()));
    }
    Ok(out)
}

fn euler_case(n: usize, p: usize, q: usize) -> capelli_core::Result<Report> {
    let start = Instant::now();
    let mut r = Report::new("Euler operators")
        .param("n", n)
        .param("p", p)
        .param("q", q);
    let s = Slice::new(n, p, q);
    r.dim("T", s.dim());
    let id = SparseMat::identity(s.dim());
    let op = euler(n);
    let a = s.matrix_of(&s, |x| lop_apply(&op, x))?;
    r.check("A = p id", a == id.scale(&rat::int(p as i64)));
    let ap = s.matrix_of(&s, |x| euler_higher_apply(n, p, x))?;
    r.check("A_p = id", ap == id);
    // A_k for k > p vanishes
    let ak = s.matrix_of(&s, |x| euler_higher_apply(n, p + 1, x))?;
    r.check("A_(p+1) = 0", ak.is_zero());
    Ok(r.finish(start))
}

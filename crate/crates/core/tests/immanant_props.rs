use capelli_core::extalg::exterior::{ext_pair, subsets, tau_divided, ExtElem, Gen};
use capelli_core::immanant::*;
use capelli_core::linalg::RatMatrix;
use capelli_core::rat::{self, Rat};
use capelli_core::symcore::{central_basis, character, is_central, CentralKind, GroupAlg};
use capelli_core::{GAElem, Partition, Perm, Ring};
use proptest::prelude::*;

fn perm(m: usize) -> impl Strategy<Value = Perm> {
    Just((1..=m).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(&v).unwrap())
}

/// A sparse element of ℂS_3 with small integer coefficients.
fn ga() -> impl Strategy<Value = GAElem> {
    prop::collection::vec((perm(3), -2i64..=2), 0..=2).prop_map(|ts| {
        let mut g = GAElem::new();
        for (s, c) in ts {
            g.add_term(s, rat::int(c));
        }
        g
    })
}

fn ga_matrix(n: usize) -> impl Strategy<Value = RingMatrix<GAElem>> {
    prop::collection::vec(ga(), n * n).prop_map(move |v| RingMatrix::new(n, n, v).unwrap())
}

fn rat_matrix(r: usize, c: usize) -> impl Strategy<Value = RingMatrix<Rat>> {
    prop::collection::vec(-3i64..=3, r * c)
        .prop_map(move |v| RingMatrix::new(r, c, v.into_iter().map(rat::int).collect()).unwrap())
}

fn upper_triangular(n: usize) -> impl Strategy<Value = RingMatrix<Rat>> {
    rat_matrix(n, n).prop_map(move |m| {
        RingMatrix::from_fn(n, n, |i, j| {
            if i <= j {
                m.get(i, j).clone()
            } else {
                rat::zero()
            }
        })
    })
}

fn invertible(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| {
            RatMatrix::from_rows(
                v.chunks(n)
                    .map(|r| r.iter().map(|&x| rat::int(x)).collect())
                    .collect(),
            )
        })
        .prop_filter("invertible", |g| g.inverse().is_some())
}

fn params(r: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(-2i64..=2, r).prop_map(|v| v.into_iter().map(rat::int).collect())
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symm_imm_is_conjugation_invariant(x in ga_matrix(3), s in perm(3)) {
        let conj = x.left_perm(&s.inverse()).right_perm(&s);
        for l in Partition::all(3) {
            prop_assert_eq!(imm(ImmKind::Symm, &l, &conj).unwrap(), imm(ImmKind::Symm, &l, &x).unwrap());
        }
    }

    #[test]
    fn preimm_equivariance(x in ga_matrix(3), s in perm(3), t in perm(3)) {
        let sg = GroupAlg::<GAElem>::perm(s.clone());
        let tg = GroupAlg::<GAElem>::perm(t.clone());
        let pre = |k, m: &RingMatrix<GAElem>, c| preimm(k, m, c).unwrap();
        let sx = x.left_perm(&s);
        let xs = x.right_perm(&s);
        let sxt = x.left_perm(&s).right_perm(&t);
        prop_assert_eq!(pre(PreimmKind::Column, &sx, false), sg.times(&pre(PreimmKind::Column, &x, false)));
        prop_assert_eq!(pre(PreimmKind::Row, &xs, false), pre(PreimmKind::Row, &x, false).times(&sg));
        prop_assert_eq!(pre(PreimmKind::Symm, &sxt, false), sg.times(&pre(PreimmKind::Symm, &x, false)).times(&tg));
        // (tσ)° = σ⁻¹t°, so the ° forms pick up inverses
        let (si, ti) = (GroupAlg::<GAElem>::perm(s.inverse()), GroupAlg::<GAElem>::perm(t.inverse()));
        prop_assert_eq!(pre(PreimmKind::Column, &sx, true), pre(PreimmKind::Column, &x, true).times(&si));
        prop_assert_eq!(pre(PreimmKind::Row, &xs, true), si.times(&pre(PreimmKind::Row, &x, true)));
        prop_assert_eq!(pre(PreimmKind::Symm, &sxt, true), ti.times(&pre(PreimmKind::Symm, &x, true)).times(&si));
    }

    #[test]
    fn preimm_p_forms_and_centrality(x in ga_matrix(2), p in 1usize..=3) {
        let symm = preimm_p(PreimmKind::Symm, false, p, &x).unwrap();
        prop_assert_eq!(&preimm_p(PreimmKind::Symm, true, p, &x).unwrap(), &symm);
        prop_assert_eq!(&preimm_p_weak(p, &x).unwrap(), &symm);
        for i in 1..p {
            let s = Perm::s(i);
            prop_assert_eq!(symm.left_perm(&s), symm.right_perm(&s));
        }
        let col = preimm_p(PreimmKind::Column, false, p, &x).unwrap();
        prop_assert_eq!(&preimm_p(PreimmKind::Row, false, p, &x).unwrap(), &col);
        prop_assert_eq!(&preimm_p(PreimmKind::Row, true, p, &x).unwrap(), &col.circ());
        prop_assert_eq!(&preimm_p(PreimmKind::Column, true, p, &x).unwrap(), &col.circ());
        // symm is the S_p-average of the column form
        let mut avg = GroupAlg::new();
        for s in Perm::all(p) {
            avg.add_assign_ref(&col.left_perm(&s.inverse()).right_perm(&s));
        }
        prop_assert_eq!(avg.scale(&rat::recip(&rat::factorial(p))), symm);
    }

    #[test]
    fn preimm_p_six_forms_agree_commutatively(x in rat_matrix(3, 3), p in 1usize..=3) {
        let base = preimm_p(PreimmKind::Column, false, p, &x).unwrap();
        for k in [PreimmKind::Column, PreimmKind::Row, PreimmKind::Symm] {
            for c in [false, true] {
                prop_assert_eq!(&preimm_p(k, c, p, &x).unwrap(), &base);
            }
        }
        prop_assert_eq!(&preimm_p_weak(p, &x).unwrap(), &base);
        for i in 1..p {
            prop_assert_eq!(base.left_perm(&Perm::s(i)), base.right_perm(&Perm::s(i)));
        }
    }

    #[test]
    fn preimm_p_is_gl_invariant(x in ga_matrix(2), g in invertible(2), p in 1usize..=2) {
        let y = x.conjugate(&g).unwrap();
        for k in [PreimmKind::Column, PreimmKind::Symm] {
            prop_assert_eq!(preimm_p(k, false, p, &y).unwrap(), preimm_p(k, false, p, &x).unwrap());
        }
    }

    #[test]
    fn imm_lambda_p_is_schur_of_eigenvalues(n in 1usize..=3, x in upper_triangular(3), p in 1usize..=4) {
        let x = x.sub(&(1..=n).collect::<Vec<_>>(), &(1..=n).collect::<Vec<_>>()).unwrap();
        let eig: Vec<Rat> = (1..=n).map(|i| x.get(i, i).clone()).collect();
        for l in Partition::all(p) {
            let s = sym_eval(SymKind::Schur, &l, &eig);
            prop_assert_eq!(imm_lambda_p(ImmKind::Column, &l, &x).unwrap(), s.clone());
            prop_assert_eq!(imm_lambda_p_weak(&l, &x).unwrap(), s);
        }
    }

    #[test]
    fn preimm_p_symmetric_function_expansions(a in params(3), n in 1usize..=3, p in 1usize..=4) {
        let a = &a[..n];
        let x = RingMatrix::from_fn(n, n, |i, j| if i == j { a[i - 1].clone() } else { rat::zero() });
        // the weak path is the cheaper exact oracle at p = 4
        let lhs = if p <= 3 { preimm_p(PreimmKind::Column, false, p, &x).unwrap() } else { preimm_p_weak(p, &x).unwrap() };
        let mut s_sum = GAElem::new();
        let mut m_sum = GAElem::new();
        let mut p_sum = GAElem::new();
        for l in Partition::all(p) {
            s_sum.add_scaled(&central_basis(CentralKind::STilde, &l, p).unwrap(), &sym_eval(SymKind::Schur, &l, a));
            m_sum.add_scaled(&central_basis(CentralKind::HTilde, &l, p).unwrap(), &sym_eval(SymKind::Monomial, &l, a));
            // p_λ(a)/z_λ; the printed p!/z_λ overcounts by p!
            let w = sym_eval(SymKind::PowerSum, &l, a) / l.z();
            p_sum.add_scaled(&central_basis(CentralKind::PTilde, &l, p).unwrap(), &w);
        }
        prop_assert_eq!(&lhs, &s_sum);
        prop_assert_eq!(&lhs, &m_sum);
        prop_assert_eq!(&lhs, &p_sum);
    }

    #[test]
    fn det_r_forms_agree(x in ga_matrix(3), r in 1usize..=2, a in params(2)) {
        let a = &a[..r];
        let d = det_r(&x, r, a).unwrap();
        prop_assert_eq!(&d, &det_r_strict(&x, r, a).unwrap());
        prop_assert_eq!(&d, &det_r_column(&x, r, a).unwrap());
    }

    #[test]
    fn cauchy_binet_for_immanants(x in rat_matrix(3, 3), y in rat_matrix(3, 3), i in prop::collection::vec(1usize..=3, 3), k in prop::collection::vec(1usize..=3, 3)) {
        prop_assert!(cauchy_binet_check(&CauchyBinetMode::Imm(part("2,1")), &x, &y, &i, &k).unwrap());
        prop_assert!(cauchy_binet_check(&CauchyBinetMode::Preimm, &x, &y, &i[..2], &k[..2]).unwrap());
        prop_assert!(cauchy_binet_check(&CauchyBinetMode::PreimmCirc, &x, &y, &i[..2], &k[..2]).unwrap());
    }

    #[test]
    fn column_det_in_exterior_calculus(x in ga_matrix(3), j in prop::collection::vec(1usize..=3, 2), a in params(2)) {
        // ξ_j(u) = Σ_i e_i X_ij(u)
        let xi = |col: usize, u: &Rat| {
            let mut acc = ExtElem::new();
            for i in 1..=3 {
                let mut c = x.get(i, col).clone();
                if i == col {
                    c = c.plus(&GAElem::scalar(u.clone()));
                }
                acc.add_assign_ref(&ExtElem::e(i as u8).times_coeff(&c));
            }
            acc
        };
        let prod = xi(j[0], &a[0]).times(&xi(j[1], &a[1]));
        let mut expect = ExtElem::new();
        for ii in subsets(3, 2) {
            let rows: Vec<usize> = ii.iter().map(|&v| v as usize).collect();
            let cd = column_det(&x.sub_shifted(&rows, &j, &a).unwrap()).unwrap();
            let gens: Vec<Gen> = ii.iter().map(|&v| Gen::E(v)).collect();
            let basis = ExtElem::<Rat>::word(&gens, rat::one()).unwrap();
            prop_assert_eq!(&ext_pair(&basis, &prod), &cd);
            expect.add_assign_ref(&ExtElem::word(&gens, cd).unwrap());
        }
        prop_assert_eq!(prod, expect);
    }

    #[test]
    fn det_r_in_exterior_calculus(x in ga_matrix(3), r in 1usize..=3, a in params(3)) {
        // Ξ(u) = Σ_{i,j} e_i X_ij(u) e*_j
        let big_xi = |u: &Rat| {
            let mut acc = ExtElem::new();
            for i in 1..=3u8 {
                for j in 1..=3u8 {
                    let mut c = x.get(i as usize, j as usize).clone();
                    if i == j {
                        c = c.plus(&GAElem::scalar(u.clone()));
                    }
                    acc.add_assign_ref(&ExtElem::e(i).times(&ExtElem::estar(j)).times_coeff(&c));
                }
            }
            acc
        };
        let mut prod = ExtElem::scalar(GAElem::one());
        for ak in &a[..r] {
            prod = prod.times(&big_xi(ak));
        }
        let lhs = ext_pair(&tau_divided::<Rat>(3, r).unwrap(), &prod).scale(&rat::recip(&rat::factorial(r)));
        prop_assert_eq!(lhs, det_r(&x, r, &a[..r]).unwrap());
    }
}

#[test]
fn character_relations() {
    for p in 1..=4 {
        let perms = Perm::all(p);
        let pf = rat::factorial(p);
        for l in Partition::all(p) {
            let dim = rat::int(l.dimension() as i64);
            for s in &perms {
                let chi = |g: &Perm| rat::int(character(&l, g).unwrap());
                let rhs: Rat = perms
                    .iter()
                    .map(|t| chi(&s.compose(&t.inverse())) * chi(t))
                    .sum();
                assert_eq!(&pf * chi(s) / &dim, rhs);
                assert_eq!(chi(s), chi(&s.inverse()));
            }
        }
    }
}

#[test]
fn column_preimm_p_is_not_central_for_noncommuting_entries() {
    // Σ_J column-preimm X_JJ has coefficient Σ_J X_{j2 j1}X_{j3 j2}X_{j1 j3} at (1 2 3) but
    // Σ_J X_{j3 j1}X_{j1 j2}X_{j2 j3} at (1 3 2); these differ once entries stop commuting.
    let g = |s: &str| GAElem::parse(s).unwrap();
    let x = RingMatrix::new(
        2,
        2,
        vec![g("1*(1 2)"), g("1*()"), g("-1*(1 2 3)"), g("1*(2 3)")],
    )
    .unwrap();
    let col = preimm_p(PreimmKind::Column, false, 3, &x).unwrap();
    let c: Perm = "(1 2 3)".parse().unwrap();
    assert_ne!(col.coeff(&c), col.coeff(&c.inverse()));
    assert_ne!(col, preimm_p(PreimmKind::Symm, false, 3, &x).unwrap());
    let symm = preimm_p(PreimmKind::Symm, false, 3, &x).unwrap();
    assert_eq!(symm.coeff(&c), symm.coeff(&c.inverse()));
    assert!(is_central(
        &central_basis(CentralKind::HTilde, &part("2"), 2).unwrap(),
        2
    ));
}

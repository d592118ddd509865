use capelli_core::envelope::{capelli, quantum_immanant, Pbw, QimmVariant};
use capelli_core::extalg::{LOp, Slice, Tvw};
use capelli_core::linalg::SparseMat;
use capelli_core::symcore::{jucys_murphy, GAElem, GroupAlg, JmKind, Perm};
use capelli_core::weylreal::*;
use capelli_core::{Partition, Ring};
use proptest::prelude::*;

fn pbw_elem(n: usize) -> impl Strategy<Value = Pbw> {
    let gen = (1..=n, 1..=n);
    prop::collection::vec((prop::collection::vec(gen, 0..=2), -2i64..=2), 1..=3).prop_map(|terms| {
        let mut acc = Pbw::zero();
        for (word, c) in terms {
            acc.add_assign_ref(&Pbw::word(&word).scale(&capelli_core::rat::int(c)));
        }
        acc
    })
}

fn assert_report(r: &Report) {
    assert!(
        r.equal,
        "{} {:?}: failed {:?}",
        r.theorem,
        r.parameters,
        r.failures()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn realizations_are_homomorphisms(a in pbw_elem(2), b in pbw_elem(2), np in 1usize..=2) {
        prop_assert_eq!(pi_poly(&a.times(&b), np), pi_poly(&a, np).times(&pi_poly(&b, np)));
        prop_assert_eq!(pi_tensor(&a.times(&b), np), pi_tensor(&a, np).times(&pi_tensor(&b, np)));
    }

    #[test]
    fn weyl_multiplication_is_associative(
        xs in prop::collection::vec((0usize..4, 1usize..=2, 1usize..=2), 1..=4)
    ) {
        let gen = |(kind, i, k): (usize, usize, usize)| match kind {
            0 => WeylElem::x(i, k),
            1 => WeylElem::d(i, k),
            2 => WeylElem::x(i, k).plus(&WeylElem::d(k, i)),
            _ => WeylElem::one().plus(&WeylElem::d(i, k).times(&WeylElem::x(k, i))),
        };
        let es: Vec<WeylElem> = xs.into_iter().map(gen).collect();
        let a = &es[0];
        let b = es.get(1).cloned().unwrap_or_else(WeylElem::one);
        let c = es.get(2).cloned().unwrap_or_else(WeylElem::one);
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
    }
}

#[test]
fn euler_type_identity_on_t() {
    let trace = Pbw::parse("E11 + E22").unwrap();
    let s = Slice::new(4, 3, 0);
    let m = matrixize_lop(&pi_tensor(&trace, 2), &s).unwrap();
    assert_eq!(
        m,
        SparseMat::identity(s.dim()).scale(&capelli_core::rat::int(3))
    );
}

#[test]
fn central_images_commute_with_both_actions() {
    for (n, np, p, q) in [(2, 1, 2, 0), (2, 2, 2, 0), (2, 1, 2, 1)] {
        let s = Slice::new(n * np, p, q);
        let mut others: Vec<SparseMat> = (1..p + q)
            .map(|i| matrixize_right(&GAElem::perm(Perm::s(i)), &s).unwrap())
            .collect();
        for i in 1..=n {
            for j in 1..=n {
                others.push(matrixize_lop(&pi_tensor(&Pbw::generator(i, j), np), &s).unwrap());
            }
        }
        let mut central = vec![capelli(1, n).unwrap(), capelli(2, n).unwrap()];
        central.push(quantum_immanant(QimmVariant::GCirc, &"2".parse().unwrap(), n, None).unwrap());
        for c in central {
            let m = matrixize_lop(&pi_tensor(&c, np), &s).unwrap();
            assert!(
                others.iter().all(|g| g.commutator(&m).is_zero()),
                "{c} at {n} {np} {p} {q}"
            );
        }
    }
}

#[test]
fn capelli_identity_on_t() {
    for n in 1..=2 {
        for np in 1..=2 {
            for p in 1..=3 {
                for r in 1..=p {
                    assert_report(&verify_capelli_t(n, np, p, r).unwrap());
                }
            }
        }
    }
    assert!(verify_capelli_t(2, 2, 1, 2).is_err());
}

#[test]
fn higher_capelli_in_the_weyl_algebra() {
    for n in 1..=2 {
        for np in 1..=2 {
            for p in 1..=3 {
                for l in Partition::all(p) {
                    assert_report(&verify_higher_capelli_weyl(&Mode::Immanant(l), n, np).unwrap());
                }
                assert_report(&verify_higher_capelli_weyl(&Mode::Preimmanant(p), n, np).unwrap());
            }
        }
    }
}

#[test]
fn higher_capelli_on_t() {
    for p in 1..=2 {
        for m in p..=p + 1 {
            for l in Partition::all(p) {
                assert_report(&verify_higher_capelli_t(&Mode::Immanant(l), 2, 2, m).unwrap());
            }
            assert_report(&verify_higher_capelli_t(&Mode::Preimmanant(p), 2, 2, m).unwrap());
        }
    }
}

#[test]
fn schur_weyl_instances() {
    for (n, p, q) in [
        (2, 2, 0),
        (2, 2, 1),
        (2, 1, 2),
        (3, 2, 0),
        (1, 0, 2),
        (2, 1, 0),
    ] {
        assert_report(&verify_schur_weyl(n, p, q).unwrap());
    }
}

#[test]
fn howe_instances() {
    for (n, np, p, q) in [(1, 1, 1, 0), (2, 2, 2, 0), (2, 2, 2, 1)] {
        assert_report(&verify_howe(n, np, p, q, RankField::Modular).unwrap());
    }
    assert_report(&verify_howe(2, 2, 2, 0, RankField::Rational).unwrap());
}

#[test]
fn fft_instances() {
    for (n, np, p) in [(2, 1, 2), (2, 2, 2), (2, 2, 4), (2, 2, 3), (2, 1, 0)] {
        assert_report(&verify_fft_sl(n, np, p).unwrap());
    }
    // n = 2, n' = 1, p = 2: a single invariant up to S_2, e_{21}e_{11} − e_{11}e_{21}
    assert_eq!(sl_invariants(2, 1, 2).unwrap().len(), 1);
}

#[test]
fn capelli_t_small_example() {
    let r = verify_capelli_t(1, 1, 1, 1).unwrap();
    assert_report(&r);
    let lhs: LOp = pi_tensor(&capelli(1, 1).unwrap(), 1);
    assert_eq!(lhs.to_string(), "e1 . e*1");
}

fn gamma_star(j: usize, u: &GAElem, n: usize, np: usize) -> Tvw<WeylElem> {
    let mut t = Tvw::new();
    for i in 1..=n {
        let e = pi_poly(&Pbw::generator(i, j), np);
        t.add_term(&[], GroupAlg::scalar(e), &[i as u8]);
    }
    t.add_term(&[], u.map_coeffs(WeylElem::from_rat), &[j as u8]);
    t
}

fn eta_star(k: usize, n: usize) -> Tvw<WeylElem> {
    let mut t = Tvw::new();
    for i in 1..=n {
        t.add_term(&[], GroupAlg::scalar(WeylElem::x(i, k)), &[i as u8]);
    }
    t
}

#[test]
fn gamma_eta_commutation_with_weyl_coefficients() {
    // γ*_j(−y_{k+1}) η*_l = s_1 η*_l γ*_j(−y_k)
    let p = 3;
    let y = |k| jucys_murphy(JmKind::Y, k, p).unwrap().negate();
    let s1 = Tvw::term(&[], GroupAlg::perm(Perm::s(1)), &[]);
    for n in 1..=2 {
        for np in 1..=2 {
            for k in 1..=2 {
                for j in 1..=n {
                    for l in 1..=np {
                        let lhs = gamma_star(j, &y(k + 1), n, np).times(&eta_star(l, n));
                        let rhs = s1
                            .times(&eta_star(l, n))
                            .times(&gamma_star(j, &y(k), n, np));
                        assert_eq!(lhs, rhs, "n={n} n'={np} k={k} j={j} l={l}");
                    }
                }
            }
            // γ*_j(−y_1) = γ*_j = Σ_l η*_l ∂_{jl}
            for j in 1..=n {
                let mut sum = Tvw::new();
                for l in 1..=np {
                    sum.add_assign_ref(&eta_star(l, n).times(&Tvw::term(
                        &[],
                        GroupAlg::scalar(WeylElem::d(j, l)),
                        &[],
                    )));
                }
                assert_eq!(gamma_star(j, &y(1), n, np), sum);
            }
        }
    }
}

#[test]
fn weyl_normal_ordering_examples() {
    let e = WeylElem::x(1, 1).times(&WeylElem::d(1, 1));
    assert_eq!(e.times(&e).to_string(), "x11^2 d11^2 + x11 d11");
    assert_eq!(
        WeylElem::d(1, 1).times(&WeylElem::x(1, 1)).to_string(),
        "x11 d11 + 1"
    );
    assert_eq!(
        WeylElem::x(1, 2).times(&WeylElem::x(2, 1)),
        WeylElem::x(2, 1).times(&WeylElem::x(1, 2))
    );
}

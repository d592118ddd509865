use capelli_core::envelope::*;
use capelli_core::extalg::ExtElem;
use capelli_core::immanant::column_det;
use capelli_core::linalg::RatMatrix;
use capelli_core::rat::{self, Rat};
use capelli_core::symcore::{jucys_murphy, GroupAlg, JmKind};
use capelli_core::{youngrep, Partition, Perm, Ring};
use proptest::prelude::*;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn pbw_elem(n: usize) -> impl Strategy<Value = Pbw> {
    let gen = (1..=n, 1..=n);
    prop::collection::vec((prop::collection::vec(gen, 0..=2), -2i64..=2), 1..=3).prop_map(|terms| {
        let mut acc = Pbw::zero();
        for (word, c) in terms {
            acc.add_assign_ref(&Pbw::word(&word).scale(&rat::int(c)));
        }
        acc
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn multiplication_is_associative(a in pbw_elem(3), b in pbw_elem(3), c in pbw_elem(3)) {
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.times(&b.plus(&c)), a.times(&b).plus(&a.times(&c)));
    }

    #[test]
    fn monomials_are_sorted(a in pbw_elem(3), b in pbw_elem(3)) {
        for m in a.times(&b).terms().keys() {
            prop_assert!(m.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn adjoint_action_is_an_automorphism(a in pbw_elem(2), b in pbw_elem(2), g in invertible(2), h in invertible(2)) {
        let ad = |x: &Pbw, g: &RatMatrix| x.adjoint_action(g).unwrap();
        prop_assert_eq!(ad(&a.times(&b), &g), ad(&a, &g).times(&ad(&b, &g)));
        // Ad(g)Ad(h) = Ad(gh)
        prop_assert_eq!(ad(&ad(&a, &h), &g), ad(&a, &g.mul(&h)));
    }

    #[test]
    fn adjoint_action_fixes_central_elements(g in invertible(2)) {
        let c2 = capelli(2, 2).unwrap();
        prop_assert_eq!(c2.adjoint_action(&g).unwrap(), c2);
        let q = quantum_immanant(QimmVariant::GCirc, &part("2"), 2, None).unwrap();
        prop_assert_eq!(q.adjoint_action(&g).unwrap(), q);
    }

    #[test]
    fn minus_transpose_is_an_automorphism(a in pbw_elem(3), b in pbw_elem(3)) {
        prop_assert_eq!(a.times(&b).minus_transpose(), a.minus_transpose().times(&b.minus_transpose()));
    }

    #[test]
    fn capelli_column_det_is_alternating(i in prop::collection::vec(1usize..=3, 2), j in prop::collection::vec(1usize..=3, 2)) {
        let e = e_matrix(3);
        let a = [rat::one(), rat::zero()];
        let cd = |i: &[usize], j: &[usize]| column_det(&e.sub_shifted(i, j, &a).unwrap()).unwrap();
        let swap = |v: &[usize]| vec![v[1], v[0]];
        let base = cd(&i, &j);
        prop_assert_eq!(cd(&swap(&i), &j), base.negate());
        prop_assert_eq!(cd(&i, &swap(&j)), base.negate());
        prop_assert_eq!(cd(&swap(&i), &swap(&j)), base.clone());
        if i[0] == i[1] || j[0] == j[1] {
            prop_assert!(base.is_zero());
        }
    }
}

fn ext_xi(j: usize, u: i64, n: usize) -> ExtElem<Pbw> {
    let mut acc = ExtElem::new();
    for i in 1..=n {
        acc.add_assign_ref(&ExtElem::e(i as u8).times_coeff(&Pbw::shifted(i, j, &rat::int(u))));
    }
    acc
}

#[test]
fn exterior_xi_relation() {
    // ξ_{j1}(u+1)ξ_{j2}(u) = −ξ_{j2}(u+1)ξ_{j1}(u) in Λ(V) ⊗ U(gl_n)
    for n in 1..=3 {
        for u in -1..=2 {
            for j1 in 1..=n {
                for j2 in 1..=n {
                    let lhs = ext_xi(j1, u + 1, n).times(&ext_xi(j2, u, n));
                    let rhs = ext_xi(j2, u + 1, n).times(&ext_xi(j1, u, n));
                    assert_eq!(lhs, rhs.negate(), "n={n} u={u} j=({j1},{j2})");
                }
            }
        }
    }
}

#[test]
fn capelli_forms_agree_and_are_central() {
    for n in 1..=3 {
        for r in 1..=n {
            let c = capelli(r, n).unwrap();
            assert!(is_central_u(&c, n), "C_{r} in gl_{n}");
            assert_eq!(capelli_det_r(r, n).unwrap(), c, "det_r form, r={r} n={n}");
            if r <= 2 {
                assert_eq!(
                    capelli_exterior(r, n).unwrap(),
                    c,
                    "exterior form, r={r} n={n}"
                );
            }
        }
    }
}

#[test]
fn xi_commutation_in_tensor_algebra() {
    // ξ_i(y_l)ξ_j(y_{l+1}) = ξ_j(y_l)ξ_i(y_{l+1}) s_1
    let p = 3;
    let s1 = capelli_core::extalg::Tvw::term(&[], GroupAlg::perm(Perm::s(1)), &[]);
    for n in 1..=3 {
        for l in 1..=2 {
            let y = |k| jucys_murphy(JmKind::Y, k, p).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    let lhs = xi(i, &y(l), n).times(&xi(j, &y(l + 1), n));
                    let rhs = xi(j, &y(l), n).times(&xi(i, &y(l + 1), n)).times(&s1);
                    assert_eq!(lhs, rhs, "n={n} l={l} i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn quantum_preimmanants_are_central_and_all_displays_agree() {
    for p in 1..=3 {
        for n in 1..=3 {
            let g = quantum_preimmanant(PreimmVariant::G, p, n).unwrap();
            let gc = quantum_preimmanant(PreimmVariant::GCirc, p, n).unwrap();
            assert!(is_central_ga(&g, p, n), "G_{p}, n={n}");
            assert!(is_central_ga(&gc, p, n), "G°_{p}, n={n}");
            for e in PreimmExpr::G_FORMS {
                assert_eq!(
                    quantum_preimmanant_expr(e, p, n).unwrap(),
                    g,
                    "{e:?}, p={p} n={n}"
                );
            }
            for e in PreimmExpr::CIRC_FORMS {
                assert_eq!(
                    quantum_preimmanant_expr(e, p, n).unwrap(),
                    gc,
                    "{e:?}, p={p} n={n}"
                );
            }
            // invariant under t ↦ t°
            assert_eq!(gc.circ(), gc);
            assert_eq!(g.circ(), g);
            // E_ij ↦ −E_ji sends G_p to (−1)^p G°_p
            let sign = rat::int(if p % 2 == 0 { 1 } else { -1 });
            assert_eq!(
                g.map_coeffs(|c| c.minus_transpose()),
                gc.scale(&sign),
                "p={p} n={n}"
            );
        }
    }
}

#[test]
fn quantum_immanants_from_preimmanants() {
    for p in 1..=3 {
        for n in 1..=3 {
            let g = quantum_preimmanant(PreimmVariant::G, p, n).unwrap();
            let gc = quantum_preimmanant(PreimmVariant::GCirc, p, n).unwrap();
            for l in Partition::all(p) {
                let gl = quantum_immanant(QimmVariant::G, &l, n, None).unwrap();
                let gcl = quantum_immanant(QimmVariant::GCirc, &l, n, None).unwrap();
                assert_eq!(chi_apply_u(&l, &g).unwrap(), gl, "χ(G_p), λ={l} n={n}");
                assert_eq!(chi_apply_u(&l, &gc).unwrap(), gcl, "χ(G°_p), λ={l} n={n}");
                assert_eq!(
                    quantum_immanant(QimmVariant::GPrime, &l, n, None).unwrap(),
                    gl
                );
                assert_eq!(
                    quantum_immanant(QimmVariant::GCircPrime, &l, n, None).unwrap(),
                    gcl
                );
                assert!(is_central_u(&gl, n) && is_central_u(&gcl, n), "λ={l} n={n}");
                assert_eq!(
                    quantum_immanant_weak(true, &l, n).unwrap(),
                    gcl,
                    "weak G°, λ={l} n={n}"
                );
                assert_eq!(
                    quantum_immanant_weak(false, &l, n).unwrap(),
                    gl,
                    "weak G, λ={l} n={n}"
                );
            }
        }
    }
}

#[test]
fn quantum_immanants_do_not_depend_on_the_tableau() {
    for p in 1..=4 {
        for l in Partition::all(p) {
            let tabs = youngrep::basis(&l);
            for n in 1..=3 {
                for v in QimmVariant::ALL {
                    let first = quantum_immanant(v, &l, n, Some(&tabs[0])).unwrap();
                    for t in tabs.iter().skip(1) {
                        assert_eq!(
                            quantum_immanant(v, &l, n, Some(t)).unwrap(),
                            first,
                            "{} λ={l} n={n} T={t}",
                            v.name()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn column_quantum_immanant_is_the_capelli_element() {
    for p in 1..=3 {
        for n in p..=3 {
            let q = quantum_immanant(QimmVariant::GCirc, &Partition::column(p), n, None).unwrap();
            assert_eq!(q, capelli(p, n).unwrap(), "p={p} n={n}");
        }
    }
}

#[test]
fn quantum_immanant_automorphism_instance() {
    let l = part("2");
    let g = quantum_immanant(QimmVariant::G, &l, 2, None).unwrap();
    let gc = quantum_immanant(QimmVariant::GCirc, &l, 2, None).unwrap();
    assert_eq!(g.minus_transpose(), gc);
}

#[test]
fn eigenvalues_match_exactly_one_convention() {
    assert_eq!(
        hc_eigenvalue(&capelli(2, 2).unwrap(), &part("1,1"), 2).unwrap(),
        rat::int(2)
    );
    let mut matches = [true, true];
    for n in 1..=3 {
        for p in 1..=3 {
            for l in Partition::all(p) {
                let q = quantum_immanant(QimmVariant::GCirc, &l, n, None).unwrap();
                for m in 0..=3 {
                    for mu in Partition::all(m).into_iter().filter(|mu| mu.len() <= n) {
                        let hc = hc_eigenvalue(&q, &mu, n).unwrap();
                        for (k, c) in [Convention::A, Convention::B].into_iter().enumerate() {
                            if content_sum_eval(&l, &mu, n, c) != hc {
                                matches[k] = false;
                            }
                        }
                    }
                }
            }
        }
    }
    assert_eq!(matches, [false, true]);
}

#[test]
fn eigenvalues_of_g_lambda() {
    // π_μ(G_λ) = Σ_T Π_{α∈λ} (μ_{T(α)} + c_α) over semistandard T of shape λ
    for n in 1..=3 {
        for p in 1..=3 {
            for l in Partition::all(p) {
                let q = quantum_immanant(QimmVariant::G, &l, n, None).unwrap();
                for m in 0..=3 {
                    for mu in Partition::all(m).into_iter().filter(|mu| mu.len() <= n) {
                        let w = mu.padded(n);
                        let mut expect = rat::zero();
                        for t in capelli_core::symcore::tableau::semistandard(&l, n) {
                            let mut prod = rat::one();
                            for (r, row) in t.iter().enumerate() {
                                for (c, &x) in row.iter().enumerate() {
                                    prod *= rat::int(w[x - 1] as i64 + c as i64 - r as i64);
                                }
                            }
                            expect += prod;
                        }
                        assert_eq!(
                            hc_eigenvalue(&q, &mu, n).unwrap(),
                            expect,
                            "λ={l} μ={mu} n={n}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn trivial_representation_kills_positive_degree_central_elements() {
    let zero: Rat = rat::zero();
    for r in 1..=3 {
        assert_eq!(
            hc_eigenvalue(&capelli(r, 3).unwrap(), &Partition::empty(), 3).unwrap(),
            zero
        );
    }
}

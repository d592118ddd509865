//! Operators on T̄(V): multiplications L(v), derivations L(v*), L(σ), and the
//! derived constructions (Euler operators, polarizations, couplings, ⋄, ⟨Φ⟩,
//! commutative and exterior quotients).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::extalg::exterior::{ExtElem, Gen, MAX_DIM};
use crate::extalg::tvw::{down_cycle, Pairing, Tvw, Word};
use crate::rat::{self, Rat};
use crate::ring::Ring;
use crate::symcore::{chi_apply, GAElem, GroupAlg, Partition, Perm};

/// An element of T̄(V): a [`Tvw`] without covector letters.
pub type TBar = Tvw<Rat>;
/// An element of 𝓛(V) ≅ T̄'(V,V*) with c_ab = δ_ab, in normal order.
pub type LOp = Tvw<Rat>;

/// All words of length p over 1..=n in lexicographic order.
pub fn words(n: usize, p: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..p {
        out = out
            .into_iter()
            .flat_map(|w: Word| {
                (1..=n as u8).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// Weakly increasing words of length p over 1..=n.
pub fn multisets(n: usize, p: usize) -> Vec<Word> {
    words(n, p)
        .into_iter()
        .filter(|w| w.windows(2).all(|x| x[0] <= x[1]))
        .collect()
}

fn check_index(n: usize, a: usize) -> Result<u8> {
    if a == 0 || a > n || a > 255 {
        return Err(Error::Invalid(format!("index {a} outside 1..={n}")));
    }
    Ok(a as u8)
}

/// e_{u_p}⋯e_{u_1} for the stored word (u_1, …, u_p).
pub fn vector_word(u: &[u8]) -> TBar {
    Tvw::term(u, GAElem::one(), &[])
}

/// f_{w_1}⋯f_{w_q}.
pub fn covector_word(w: &[u8]) -> Tvw<Rat> {
    Tvw::term(&[], GAElem::one(), w)
}

pub fn l_e(a: u8) -> LOp {
    vector_word(&[a]).with_pairing(Pairing::Delta)
}

pub fn l_estar(b: u8) -> LOp {
    covector_word(&[b]).with_pairing(Pairing::Delta)
}

pub fn l_group(t: GAElem) -> LOp {
    Tvw::term(&[], t, &[]).with_pairing(Pairing::Delta)
}

pub fn l_perm(sigma: Perm) -> LOp {
    l_group(GAElem::perm(sigma))
}

/// L(v) for v = Σ_a v_a e_a.
pub fn l_vector(v: &[Rat]) -> LOp {
    let mut x = LOp::new().with_pairing(Pairing::Delta);
    for (a, c) in v.iter().enumerate() {
        x.add_term(&[a as u8 + 1], GAElem::scalar(c.clone()), &[]);
    }
    x
}

/// L(v*) for v* = Σ_a v*_a e*_a.
pub fn l_covector(v: &[Rat]) -> LOp {
    let mut x = LOp::new().with_pairing(Pairing::Delta);
    for (a, c) in v.iter().enumerate() {
        x.add_term(&[], GAElem::scalar(c.clone()), &[a as u8 + 1]);
    }
    x
}

fn require_tbar<R: Ring>(phi: &Tvw<R>) -> Result<()> {
    if phi.terms().keys().any(|(_, w)| !w.is_empty()) {
        return Err(Error::Invalid(
            "expected an element of T̄(V) without covectors".into(),
        ));
    }
    Ok(())
}

/// L(v*) φ = Σ_k ⟨v*, v_k⟩ v_p⋯v̂_k⋯v_1 (p p−1 ⋯ k) t, straight from the definition.
pub fn derivation_apply<R: Ring>(vstar: &[Rat], phi: &Tvw<R>) -> Result<Tvw<R>> {
    require_tbar(phi)?;
    let mut out = Tvw::new();
    for ((u, _), t) in phi.terms() {
        let p = u.len();
        for k in 1..=p {
            let c = match vstar.get(u[k - 1] as usize - 1) {
                Some(c) if !rat::is_zero(c) => c,
                _ => continue,
            };
            let mut nu = u.clone();
            nu.remove(k - 1);
            out.add_term(&nu, t.left_perm(&down_cycle(p, k)).scale(c), &[]);
        }
    }
    Ok(out)
}

/// The action of an operator on T̄(V): the product in 𝓛(V) applied to the vacuum.
pub fn lop_apply<R: Ring>(op: &Tvw<R>, phi: &Tvw<R>) -> Result<Tvw<R>> {
    require_tbar(phi)?;
    let prod = op.clone().with_pairing(Pairing::Delta).times(phi);
    Ok(prod.filter(|_, w| w.is_empty()))
}

/// The same action evaluated generator by generator: derivations from the right,
/// then the middle part, then the vector letters.
pub fn lop_apply_stepwise<R: Ring>(op: &Tvw<R>, phi: &Tvw<R>) -> Result<Tvw<R>> {
    require_tbar(phi)?;
    let mut out = Tvw::new();
    for ((u, w), g) in op.terms() {
        let mut cur = phi.clone();
        for &b in w.iter().rev() {
            let mut v = vec![rat::zero(); b as usize];
            v[b as usize - 1] = rat::one();
            cur = derivation_apply(&v, &cur)?;
        }
        cur = cur.left_group(g);
        for &a in u {
            cur = cur.left_vector(a);
        }
        out.add_assign_ref(&cur);
    }
    Ok(out)
}

/// A = Σ_i L(e_i)L(e*_i).
pub fn euler(n: usize) -> LOp {
    euler_higher(n, 1)
}

/// A_p = (1/p!) Σ_{I∈[n]^p} L(e_{i_p})⋯L(e_{i_1}) L(e*_{i_1})⋯L(e*_{i_p}).
pub fn euler_higher(n: usize, p: usize) -> LOp {
    conjugation_sum_operator(n, p, &Perm::identity()).scale(&rat::recip(&rat::factorial(p)))
}

/// Σ_{I∈[n]^r} L(e_{i_r})⋯L(e_{i_1}) L(τ) L(e*_{i_1})⋯L(e*_{i_r}).
pub fn conjugation_sum_operator(n: usize, r: usize, tau: &Perm) -> LOp {
    let mut x = LOp::new().with_pairing(Pairing::Delta);
    for i in words(n, r) {
        x.add_term(&i, GAElem::perm(tau.clone()), &i);
    }
    x
}

/// The action of `conjugation_sum_operator(n, r, τ)` on T̄(V), one generator at a time:
/// S_r ψ = Σ_i L(e_i) S_{r−1} L(e*_i) ψ with S_0 ψ = L(τ) ψ. Only the letters present in ψ
/// survive a derivation, so this never forms the n^r-term operator.
pub fn conjugation_sum_apply<R: Ring>(
    n: usize,
    r: usize,
    tau: &Perm,
    phi: &Tvw<R>,
) -> Result<Tvw<R>> {
    require_tbar(phi)?;
    if r == 0 {
        return Ok(phi.left_group(&GroupAlg::perm(tau.clone())));
    }
    let mut present = vec![false; n + 1];
    for (u, _) in phi.terms().keys() {
        for &a in u {
            if let Some(slot) = present.get_mut(a as usize) {
                *slot = true;
            }
        }
    }
    let mut out = Tvw::new();
    for i in (1..=n).filter(|&i| present[i]) {
        let d = derivation_apply(&unit_covector(n, i), phi)?;
        if d.is_zero() {
            continue;
        }
        out.add_assign_ref(&conjugation_sum_apply(n, r - 1, tau, &d)?.left_vector(i as u8));
    }
    Ok(out)
}

/// A_p φ without building A_p.
pub fn euler_higher_apply<R: Ring>(n: usize, p: usize, phi: &Tvw<R>) -> Result<Tvw<R>> {
    let y = conjugation_sum_apply(n, p, &Perm::identity(), phi)?;
    Ok(y.scale(&rat::recip(&rat::factorial(p))))
}

fn unit_covector(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![rat::zero(); n];
    v[i - 1] = rat::one();
    v
}

/// π(E_ij) = L(e_i)L(e*_j).
pub fn polarization(n: usize, i: usize, j: usize) -> Result<LOp> {
    let (i, j) = (check_index(n, i)?, check_index(n, j)?);
    Ok(Tvw::term(&[i], GAElem::one(), &[j]).with_pairing(Pairing::Delta))
}

fn homogeneous_degree<R: Ring>(x: &Tvw<R>, vec_side: bool) -> Result<Option<usize>> {
    let mut deg = None;
    for (u, w) in x.terms().keys() {
        let (d, other) = if vec_side {
            (u.len(), w.len())
        } else {
            (w.len(), u.len())
        };
        if other != 0 {
            return Err(Error::Invalid(
                "element has letters on the wrong side".into(),
            ));
        }
        if deg.is_some_and(|e| e != d) {
            return Err(Error::Size("element is not homogeneous".into()));
        }
        deg = Some(d);
    }
    Ok(deg)
}

/// ⟨σ' v*_1⋯v*_p, v_p⋯v_1 σ⟩ = σ' L(v*_1)⋯L(v*_p) v_p⋯v_1 σ.
pub fn pairing<R: Ring>(phistar: &Tvw<R>, phi: &Tvw<R>) -> Result<GroupAlg<R>> {
    let q = homogeneous_degree(phistar, false)?;
    let p = homogeneous_degree(phi, true)?;
    if let (Some(q), Some(p)) = (q, p) {
        if p != q {
            return Err(Error::Size(format!("pairing degrees {q} and {p} differ")));
        }
    }
    Ok(phistar
        .clone()
        .with_pairing(Pairing::Delta)
        .times(phi)
        .constant())
}

fn word_pairing(w: &[u8], u: &[u8]) -> GAElem {
    pairing(&covector_word(w), &vector_word(u)).expect("equal lengths")
}

/// (u σ v*_1⋯v*_q) ⋄ (v_q⋯v_1 σ' w) = u σ ⟨v*_1⋯v*_q, v_q⋯v_1⟩ σ' w.
pub fn diamond<R: Ring>(a: &Tvw<R>, b: &Tvw<R>) -> Result<Tvw<R>> {
    let mut cache: BTreeMap<(Word, Word), GAElem> = BTreeMap::new();
    let mut out = Tvw::new();
    for ((ua, wa), g) in a.terms() {
        for ((ub, wb), h) in b.terms() {
            if wa.len() != ub.len() {
                return Err(Error::Size(format!(
                    "⋄ needs matching middle degrees, got {} and {}",
                    wa.len(),
                    ub.len()
                )));
            }
            let c = cache
                .entry((wa.clone(), ub.clone()))
                .or_insert_with(|| word_pairing(wa, ub));
            if c.is_empty() {
                continue;
            }
            out.add_term(ua, g.right_mul_ga(c).times(h), wb);
        }
    }
    Ok(out)
}

/// ⟨Φ⟩ = (1/p!) Σ_{I∈[n]^p} e*_{i_1}⋯e*_{i_p} ⋄ Φ ⋄ e_{i_p}⋯e_{i_1} for Φ of bidegree (p,p).
pub fn bracket<R: Ring>(phi: &Tvw<R>, n: usize) -> Result<GroupAlg<R>> {
    let bideg = phi.bidegrees();
    let p = match bideg.as_slice() {
        [] => return Ok(GroupAlg::new()),
        [(p, q)] if p == q => *p,
        _ => {
            return Err(Error::Size(format!(
                "⟨Φ⟩ needs bidegree (p,p), got {bideg:?}"
            )))
        }
    };
    let mut acc = GroupAlg::new();
    for i in words(n, p) {
        let left = Tvw::term(&[], GroupAlg::one(), &i);
        let right = Tvw::term(&i, GroupAlg::one(), &[]);
        let x = diamond(&diamond(&left, phi)?, &right)?;
        acc.add_assign_ref(&x.constant());
    }
    Ok(acc.scale(&rat::recip(&rat::factorial(p))))
}

/// ⟨Φ⟩_λ = χ_λ(⟨Φ⟩).
pub fn bracket_lambda(phi: &Tvw<Rat>, n: usize, lambda: &Partition) -> Result<Rat> {
    chi_apply(lambda, &bracket(phi, n)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    /// T̄(V)/(σ − 1) ≅ S(V)
    Symmetric,
    /// T̄(V)/(σ − sgn σ) ≅ Λ(V)
    Antisymmetric,
}

#[derive(Clone, Debug, PartialEq)]
pub enum QuotientImage {
    /// Commutative monomials as sorted index multisets.
    Symmetric(BTreeMap<Word, Rat>),
    Exterior(ExtElem<Rat>),
}

pub fn quotient_project(phi: &TBar, kind: QuotientKind) -> Result<QuotientImage> {
    require_tbar(phi)?;
    match kind {
        QuotientKind::Symmetric => {
            let mut out: BTreeMap<Word, Rat> = BTreeMap::new();
            for ((u, _), t) in phi.terms() {
                let c: Rat = t.terms().values().sum();
                *out.entry(u.clone()).or_insert_with(rat::zero) += c;
            }
            out.retain(|_, c| !rat::is_zero(c));
            Ok(QuotientImage::Symmetric(out))
        }
        QuotientKind::Antisymmetric => {
            let mut out = ExtElem::new();
            for ((u, _), t) in phi.terms() {
                if u.iter().any(|&a| a as usize > MAX_DIM) {
                    return Err(Error::Size(format!(
                        "exterior quotient needs indices ≤ {MAX_DIM}"
                    )));
                }
                let c = t.contract(|s| rat::int(s.sign()));
                let gens: Vec<Gen> = u.iter().rev().map(|&a| Gen::E(a)).collect();
                out.add_assign_ref(&ExtElem::word(&gens, c)?);
            }
            Ok(QuotientImage::Exterior(out))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::stabilizer_idempotent;

    fn ga(s: &str) -> GAElem {
        GAElem::parse(s).unwrap()
    }

    fn unit(n: usize, a: usize) -> Vec<Rat> {
        let mut v = vec![rat::zero(); n];
        v[a - 1] = rat::one();
        v
    }

    #[test]
    fn derivation_examples() {
        let one = TBar::one();
        assert_eq!(
            derivation_apply(&unit(1, 1), &vector_word(&[1])).unwrap(),
            one
        );
        // e_2 e_1 is the stored word (1,2)
        let x = vector_word(&[1, 2]);
        assert_eq!(
            derivation_apply(&unit(2, 2), &x).unwrap(),
            vector_word(&[1])
        );
        let expect = Tvw::term(&[2], ga("1*(1 2)"), &[]);
        assert_eq!(derivation_apply(&unit(2, 1), &x).unwrap(), expect);
        assert!(derivation_apply(&unit(1, 1), &TBar::one())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn ccr_and_double_derivation() {
        let lhs = l_estar(1).times(&l_e(1));
        let rhs = l_e(1)
            .times(&l_perm(Perm::s(1)))
            .times(&l_estar(1))
            .plus(&LOp::one());
        assert_eq!(lhs, rhs);
        assert_eq!(l_perm(Perm::s(1)).times(&l_perm(Perm::s(1))), LOp::one());
        let dd = l_estar(1).times(&l_estar(1));
        let got = lop_apply(&dd, &vector_word(&[1, 1])).unwrap();
        assert_eq!(got, Tvw::term(&[], ga("1*() + 1*(1 2)"), &[]));
        assert_eq!(lop_apply(&l_e(1), &TBar::one()).unwrap(), vector_word(&[1]));
    }

    #[test]
    fn polarization_commutator() {
        let n = 2;
        let e12 = polarization(n, 1, 2).unwrap();
        let e21 = polarization(n, 2, 1).unwrap();
        let e11 = polarization(n, 1, 1).unwrap();
        let e22 = polarization(n, 2, 2).unwrap();
        assert_eq!(e12.commutator(&e21), e11.minus(&e22));
        // π(E_12)π(E_21) = L(e_2)L(e_1)L(e*_2)L(e*_1) + L(e_1)L(e*_1), by hand from the rewrites
        let hand = l_e(1)
            .times(&l_e(2))
            .times(&l_perm(Perm::s(1)))
            .times(&l_estar(2))
            .times(&l_estar(1))
            .plus(&e11);
        assert_eq!(e12.times(&e21), hand);
        let normal = l_e(2)
            .times(&l_e(1))
            .times(&l_estar(2))
            .times(&l_estar(1))
            .plus(&e11);
        assert_eq!(e12.times(&e21), normal);
        assert!(polarization(2, 3, 1).is_err());
        assert_eq!(
            lop_apply(&polarization(2, 2, 1).unwrap(), &vector_word(&[1])).unwrap(),
            vector_word(&[2])
        );
    }

    #[test]
    fn euler_operators() {
        let a = euler(2);
        assert!(lop_apply(&a, &TBar::one()).unwrap().is_zero());
        let x = vector_word(&[1, 2]);
        assert_eq!(lop_apply(&a, &x).unwrap(), x.scale(&rat::int(2)));
        assert_eq!(euler_higher(2, 1), a);
        let y = vector_word(&[1, 1]);
        assert_eq!(lop_apply(&euler_higher(2, 2), &y).unwrap(), y);
        let z = Tvw::term(&[1, 2, 1], ga("1*(1 2 3) + 2*(2 3)"), &[]).plus(&x);
        for r in 0..=3 {
            let tau = Perm::s(1);
            let op = conjugation_sum_operator(2, r, &tau);
            let want = lop_apply(&op, &z).unwrap();
            assert_eq!(
                conjugation_sum_apply(2, r, &tau, &z).unwrap(),
                want,
                "r={r}"
            );
        }
        assert_eq!(euler_higher_apply(2, 2, &y).unwrap(), y);
    }

    #[test]
    fn stepwise_action_agrees() {
        let op = Tvw::parse(
            "e2 e1 . (1 2) . e*1 + 1/3*e*2 e*2 + e1 . e*2",
            Some(Pairing::Delta),
        )
        .unwrap();
        for w in words(2, 3) {
            let phi = Tvw::term(&w, ga("1*(2 4) + 2*()"), &[]);
            assert_eq!(
                lop_apply(&op, &phi).unwrap(),
                lop_apply_stepwise(&op, &phi).unwrap()
            );
        }
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(
            pairing(&covector_word(&[1]), &vector_word(&[1])).unwrap(),
            GAElem::one()
        );
        let two = pairing(&covector_word(&[1, 1]), &vector_word(&[1, 1])).unwrap();
        assert_eq!(two, ga("1*() + 1*(1 2)"));
        // ⟨e*_1 e*_2, e_2 e_1⟩ via two derivations, e*_2 acting first
        let inner = derivation_apply(&unit(2, 2), &vector_word(&[1, 2])).unwrap();
        let outer = derivation_apply(&unit(2, 1), &inner).unwrap();
        assert_eq!(
            pairing(&covector_word(&[1, 2]), &vector_word(&[1, 2])).unwrap(),
            outer.constant()
        );
        assert!(pairing(&covector_word(&[1]), &vector_word(&[1, 2])).is_err());
        // I! s_I for all I over [2]^2
        for i in words(2, 3) {
            let got = pairing(&covector_word(&i), &vector_word(&i)).unwrap();
            let fact = crate::symcore::central::word_factorial(&i);
            assert_eq!(got, stabilizer_idempotent(&i).scale(&fact));
        }
    }

    #[test]
    fn diamond_and_bracket() {
        let s = Tvw::<Rat>::term(&[], ga("1*(1 2)"), &[]);
        let t = Tvw::<Rat>::term(&[], ga("1*(2 3)"), &[]);
        assert_eq!(diamond(&s, &t).unwrap(), s.times(&t));
        assert_eq!(
            diamond(&covector_word(&[1]), &vector_word(&[1])).unwrap(),
            TBar::one()
        );
        let d = diamond(&covector_word(&[1, 2]), &vector_word(&[1, 2])).unwrap();
        assert_eq!(
            d.constant(),
            pairing(&covector_word(&[1, 2]), &vector_word(&[1, 2])).unwrap()
        );
        let phi = Tvw::<Rat>::term(&[1], GAElem::one(), &[1]);
        assert_eq!(bracket(&phi, 1).unwrap(), GAElem::one());
        let mut sum = Tvw::<Rat>::new();
        for i in 1..=3u8 {
            sum.add_term(&[i], GAElem::one(), &[i]);
        }
        assert_eq!(bracket(&sum, 3).unwrap(), GAElem::scalar(rat::int(3)));
        assert!(bracket(&vector_word(&[1]), 2).is_err());
    }

    #[test]
    fn quotients() {
        let x = vector_word(&[2, 1]).minus(&Tvw::term(&[1, 2], ga("1*(1 2)"), &[]));
        // e_1 e_2 − e_2 e_1 s_1 is zero already in T̄(V)
        assert!(x.is_zero());
        // e_1 e_2 − e_2 e_1
        let y = vector_word(&[2, 1]).minus(&vector_word(&[1, 2]));
        match quotient_project(&y, QuotientKind::Symmetric).unwrap() {
            QuotientImage::Symmetric(m) => assert!(m.is_empty()),
            _ => unreachable!(),
        }
        match quotient_project(&vector_word(&[1, 1]), QuotientKind::Antisymmetric).unwrap() {
            QuotientImage::Exterior(e) => assert!(e.is_zero()),
            _ => unreachable!(),
        }
        match quotient_project(&vector_word(&[1, 2]), QuotientKind::Symmetric).unwrap() {
            QuotientImage::Symmetric(m) => {
                assert_eq!(m, BTreeMap::from([(vec![1, 2], rat::one())]))
            }
            _ => unreachable!(),
        }
        match quotient_project(&y, QuotientKind::Antisymmetric).unwrap() {
            QuotientImage::Exterior(e) => {
                let w = ExtElem::word(&[Gen::E(1), Gen::E(2)], rat::int(2)).unwrap();
                assert_eq!(e, w);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn multiplication_in_tbar() {
        // φφ' = v_p⋯v_1 v'_{p'}⋯v'_1 α^{p'}(σ)σ'
        let a = Tvw::<Rat>::term(&[1], ga("1*(1 2)"), &[]);
        let b = Tvw::<Rat>::term(&[2], ga("1*(1 3)"), &[]);
        let expect = Tvw::term(&[2, 1], ga("1*(2 3)").times(&ga("1*(1 3)")), &[]);
        assert_eq!(a.times(&b), expect);
        // (e_2)(e_1) is already canonical; (e_1)(e_2) = e_2 e_1 s_1
        let (e1, e2) = (vector_word(&[1]), vector_word(&[2]));
        assert_eq!(e2.times(&e1), vector_word(&[1, 2]));
        assert_eq!(e1.times(&e2), Tvw::term(&[1, 2], ga("1*(1 2)"), &[]));
        assert_eq!(TBar::one().times(&a), a);
        // e_1 e_1 s_1 = e_1 e_1
        assert_eq!(Tvw::term(&[1, 1], ga("1*(1 2)"), &[]), vector_word(&[1, 1]));
    }
}

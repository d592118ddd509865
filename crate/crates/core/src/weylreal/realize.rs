//! The realizations π of U(gl_n) on polynomials and on the extended tensor
//! algebra of ℂ^n ⊗ ℂ^{n'}, and matrices of operators on finite pieces.

use std::collections::BTreeMap;

use crate::envelope::Pbw;
use crate::error::{Error, Result};
use crate::extalg::{LOp, Pairing, Slice, TBar, Tvw};
use crate::immanant::RingMatrix;
use crate::linalg::{sparse_from_map, SparseMat};
use crate::rat::{self, Rat};
use crate::ring::Ring;
use crate::symcore::{GAElem, GroupAlg, Perm};
use crate::weylreal::weyl::{Exps, WeylElem};

/// Letter of w_{ia} in the basis of V = ℂ^n ⊗ ℂ^{n'}: (i − 1)n' + a.
pub fn letter(i: usize, a: usize, nprime: usize) -> u8 {
    assert!(
        a >= 1 && a <= nprime && i >= 1,
        "w_({i},{a}) outside ℂ^n ⊗ ℂ^{nprime}"
    );
    let l = (i - 1) * nprime + a;
    assert!(l <= 255, "too many letters");
    l as u8
}

/// π(E_ij) = Σ_k x_{ik} ∂_{jk}.
pub fn pi_poly(u: &Pbw, nprime: usize) -> WeylElem {
    u.eval(|i, j| {
        let mut acc = WeylElem::new();
        for k in 1..=nprime {
            acc.add_assign_ref(&WeylElem::x(i, k).times(&WeylElem::d(j, k)));
        }
        acc
    })
}

/// π(E_ij) = Σ_a L(w_{ia}) L(w*_{ja}).
pub fn pi_tensor(u: &Pbw, nprime: usize) -> LOp {
    u.eval(|i, j| {
        let mut acc = LOp::new().with_pairing(Pairing::Delta);
        for a in 1..=nprime {
            acc.add_term(
                &[letter(i, a, nprime)],
                GAElem::one(),
                &[letter(j, a, nprime)],
            );
        }
        acc
    })
    .with_pairing(Pairing::Delta)
}

/// Z = (L(w_{ij})).
pub fn z_matrix(n: usize, nprime: usize) -> RingMatrix<LOp> {
    RingMatrix::from_fn(n, nprime, |i, j| {
        Tvw::term(&[letter(i, j, nprime)], GAElem::one(), &[]).with_pairing(Pairing::Delta)
    })
}

/// Z* = (L(w*_{ij})).
pub fn zstar_matrix(n: usize, nprime: usize) -> RingMatrix<LOp> {
    RingMatrix::from_fn(n, nprime, |i, j| {
        Tvw::term(&[], GAElem::one(), &[letter(i, j, nprime)]).with_pairing(Pairing::Delta)
    })
}

/// Y = (w_{ij}) with entries in T̄(ℂ^n ⊗ ℂ^{n'}).
pub fn y_matrix(n: usize, nprime: usize) -> RingMatrix<TBar> {
    RingMatrix::from_fn(n, nprime, |i, j| {
        Tvw::term(&[letter(i, j, nprime)], GAElem::one(), &[])
    })
}

/// X = (x_{ij}).
pub fn x_matrix(n: usize, nprime: usize) -> RingMatrix<WeylElem> {
    RingMatrix::from_fn(n, nprime, WeylElem::x)
}

/// ∂ = (∂_{ij}).
pub fn d_matrix(n: usize, nprime: usize) -> RingMatrix<WeylElem> {
    RingMatrix::from_fn(n, nprime, WeylElem::d)
}

/// Matrix of an element of 𝓛(V) on T^{(q)}_p(V).
pub fn matrixize_lop(op: &LOp, slice: &Slice) -> Result<SparseMat> {
    slice.matrix_of(slice, |x| crate::extalg::lop_apply(op, x))
}

/// Matrix of the right multiplication φ ↦ φt on T^{(q)}_p(V).
pub fn matrixize_right(t: &GAElem, slice: &Slice) -> Result<SparseMat> {
    let m = slice.p + slice.q;
    if t.degree() > m {
        return Err(Error::OutOfSlice(format!(
            "right multiplication by an element of S_{}",
            t.degree()
        )));
    }
    let r = Tvw::term(&[], t.clone(), &[]);
    slice.matrix_of(slice, |x| Ok(x.times(&r)))
}

/// Coefficientwise matrices of an element of ℂS_p ⊗ 𝓛(V).
pub fn matrixize_ga_lop(t: &GroupAlg<LOp>, slice: &Slice) -> Result<BTreeMap<Perm, SparseMat>> {
    let mut out = BTreeMap::new();
    for (s, op) in t.terms() {
        let m = matrixize_lop(op, slice)?;
        if !m.is_zero() {
            out.insert(s.clone(), m);
        }
    }
    Ok(out)
}

/// Homogeneous polynomials of degree d on ℂ^n ⊗ ℂ^{n'}, with the monomial basis.
#[derive(Clone, Debug)]
pub struct PolySlice {
    pub n: usize,
    pub nprime: usize,
    pub degree: usize,
    basis: Vec<Exps>,
    index: BTreeMap<Exps, usize>,
}

impl PolySlice {
    pub fn new(n: usize, nprime: usize, degree: usize) -> PolySlice {
        let vars: Vec<(u8, u8)> = (1..=n)
            .flat_map(|i| (1..=nprime).map(move |k| (i as u8, k as u8)))
            .collect();
        let mut basis: Vec<Exps> = vec![Vec::new()];
        for _ in 0..degree {
            let mut next = BTreeMap::new();
            for m in &basis {
                for &v in &vars {
                    let mut e: BTreeMap<(u8, u8), u32> = m.iter().copied().collect();
                    *e.entry(v).or_default() += 1;
                    next.insert(e.into_iter().collect::<Exps>(), ());
                }
            }
            basis = next.into_keys().collect();
        }
        let index = basis
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k))
            .collect();
        PolySlice {
            n,
            nprime,
            degree,
            basis,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of a Weyl algebra element preserving the degree.
    pub fn matrix_of(&self, w: &WeylElem) -> Result<SparseMat> {
        let mut cols = Vec::with_capacity(self.dim());
        for m in &self.basis {
            let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
            for ((x, d), c) in w.terms() {
                let Some((rest, coef)) = differentiate(m, d) else {
                    continue;
                };
                let img = mul(x, &rest);
                let k = *self.index.get(&img).ok_or_else(|| {
                    Error::OutOfSlice("operator changes the polynomial degree".into())
                })?;
                *acc.entry(k).or_insert_with(rat::zero) += c * coef;
            }
            cols.push(sparse_from_map(acc));
        }
        Ok(SparseMat::from_cols(self.dim(), cols))
    }
}

fn mul(a: &Exps, b: &Exps) -> Exps {
    let mut e: BTreeMap<(u8, u8), u32> = a.iter().copied().collect();
    for &(v, k) in b {
        *e.entry(v).or_default() += k;
    }
    e.into_iter().collect()
}

/// ∂^B x^C = (Π C!/(C−B)!) x^{C−B}, or None when some B_v > C_v.
fn differentiate(c: &Exps, b: &Exps) -> Option<(Exps, Rat)> {
    let mut e: BTreeMap<(u8, u8), u32> = c.iter().copied().collect();
    let mut coef = rat::one();
    for &(v, k) in b {
        let have = e.get(&v).copied().unwrap_or(0);
        if have < k {
            return None;
        }
        for t in 0..k {
            coef *= rat::int((have - t) as i64);
        }
        if have == k {
            e.remove(&v);
        } else {
            e.insert(v, have - k);
        }
    }
    Some((e.into_iter().collect(), coef))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extalg::euler;

    #[test]
    fn pi_of_generators() {
        let e11 = Pbw::generator(1, 1);
        assert_eq!(pi_poly(&e11, 1).to_string(), "x11 d11");
        assert_eq!(pi_poly(&Pbw::one(), 2), WeylElem::one());
        let (a, b) = (Pbw::generator(1, 2), Pbw::generator(2, 1));
        for np in 1..=2 {
            let lhs = pi_poly(&a.commutator(&b), np);
            assert_eq!(lhs, pi_poly(&a, np).commutator(&pi_poly(&b, np)));
            let lhs = pi_tensor(&a.commutator(&b), np);
            assert_eq!(lhs, pi_tensor(&a, np).commutator(&pi_tensor(&b, np)));
        }
        assert_eq!(
            pi_tensor(&e11, 1),
            Tvw::term(&[1], GAElem::one(), &[1]).with_pairing(Pairing::Delta)
        );
    }

    #[test]
    fn euler_operator_on_slices() {
        // π(Σ E_ii) = A acts as p on T_p
        let trace = Pbw::parse("E11 + E22").unwrap();
        for p in 0..=2 {
            let s = Slice::new(4, p, 1);
            let m = matrixize_lop(&pi_tensor(&trace, 2), &s).unwrap();
            assert_eq!(m, SparseMat::identity(s.dim()).scale(&rat::int(p as i64)));
            assert_eq!(matrixize_lop(&euler(4), &s).unwrap(), m);
            let ps = PolySlice::new(2, 2, p);
            let w = ps.matrix_of(&pi_poly(&trace, 2)).unwrap();
            assert_eq!(w, SparseMat::identity(ps.dim()).scale(&rat::int(p as i64)));
        }
    }

    #[test]
    fn right_multiplication_matrix() {
        let s = Slice::new(2, 2, 0);
        let r = matrixize_right(&GAElem::perm(Perm::s(1)), &s).unwrap();
        assert_eq!(r.mul(&r), SparseMat::identity(4));
        // e_1e_2 s_1 = e_2e_1: the flip on V ⊗ V
        let e12 = s.coords(&Tvw::term(&[1, 2], GAElem::one(), &[])).unwrap();
        let e21 = s.coords(&Tvw::term(&[2, 1], GAElem::one(), &[])).unwrap();
        assert_eq!(r.apply(&e12), e21);
        assert!(matrixize_right(&GAElem::perm(Perm::s(2)), &s).is_err());
        assert_eq!(PolySlice::new(2, 2, 2).dim(), 10);
    }
}

//! Λ(V ⊕ V*) ⊗ R for dim V ≤ 16, with R commuting with the exterior part.
//!
//! A monomial is a bitmask: e_i is bit i−1 and e*_i is bit 16+i−1. The stored
//! order is e_{i_1}⋯e_{i_p} e*_{j_1}⋯e*_{j_q} with increasing indices, which is the
//! orthonormal basis used by the pairing.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rat::{self, Rat};
use crate::ring::{check_terms, Ring};

pub const MAX_DIM: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    E(u8),
    EStar(u8),
}

impl Gen {
    fn bit(self) -> u32 {
        match self {
            Gen::E(i) => 1 << (i - 1),
            Gen::EStar(i) => 1 << (MAX_DIM as u32 + i as u32 - 1),
        }
    }
}

fn check_gen(g: Gen) -> Result<()> {
    let i = match g {
        Gen::E(i) | Gen::EStar(i) => i as usize,
    };
    if i == 0 || i > MAX_DIM {
        return Err(Error::Size(format!(
            "exterior index {i} outside 1..={MAX_DIM}"
        )));
    }
    Ok(())
}

/// Sign of m1·m2 relative to the sorted monomial, or `None` when they share a factor.
fn merge_sign(a: u32, b: u32) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        rest &= rest - 1;
        // factors of a to the right of this one in the sorted order
        swaps += (a >> bit).count_ones();
    }
    Some(swaps % 2 == 1)
}

#[derive(Clone, PartialEq)]
pub struct ExtElem<R: Ring> {
    terms: BTreeMap<u32, R>,
}

impl<R: Ring> Default for ExtElem<R> {
    fn default() -> Self {
        ExtElem::new()
    }
}

impl<R: Ring> ExtElem<R> {
    pub fn new() -> Self {
        ExtElem {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(mask: u32, c: R) -> Self {
        let mut x = ExtElem::new();
        x.add_term(mask, c);
        x
    }

    pub fn scalar(c: R) -> Self {
        ExtElem::monomial(0, c)
    }

    /// The product of the generators in the given order, with coefficient c.
    pub fn word(gens: &[Gen], c: R) -> Result<Self> {
        let mut mask = 0u32;
        let mut neg = false;
        for &g in gens {
            check_gen(g)?;
            match merge_sign(mask, g.bit()) {
                None => return Ok(ExtElem::new()),
                Some(s) => {
                    neg ^= s;
                    mask |= g.bit();
                }
            }
        }
        Ok(ExtElem::monomial(mask, if neg { c.negate() } else { c }))
    }

    pub fn e(i: u8) -> Self {
        ExtElem::word(&[Gen::E(i)], R::one()).expect("index in range")
    }

    pub fn estar(i: u8) -> Self {
        ExtElem::word(&[Gen::EStar(i)], R::one()).expect("index in range")
    }

    pub fn add_term(&mut self, mask: u32, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<u32, R> {
        &self.terms
    }

    pub fn coeff(&self, mask: u32) -> R {
        self.terms.get(&mask).cloned().unwrap_or_else(R::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// self ⊗ c: every coefficient multiplied by c on the right.
    pub fn times_coeff(&self, c: &R) -> Self {
        let mut x = ExtElem::new();
        for (m, a) in &self.terms {
            x.add_term(*m, a.times(c));
        }
        x
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> ExtElem<S> {
        let mut x = ExtElem::new();
        for (m, a) in &self.terms {
            x.add_term(*m, f(a));
        }
        x
    }
}

impl<R: Ring> Ring for ExtElem<R> {
    fn zero() -> Self {
        ExtElem::new()
    }
    fn one() -> Self {
        ExtElem::scalar(R::one())
    }
    fn from_rat(r: &Rat) -> Self {
        ExtElem::scalar(R::from_rat(r))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut x = self.clone();
        x.add_assign_ref(other);
        x
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }
    fn times(&self, other: &Self) -> Self {
        let mut x = ExtElem::new();
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                if let Some(neg) = merge_sign(*ma, *mb) {
                    let c = a.times(b);
                    x.add_term(ma | mb, if neg { c.negate() } else { c });
                }
            }
        }
        check_terms(x.terms.len());
        x
    }
    fn scale(&self, r: &Rat) -> Self {
        let mut x = ExtElem::new();
        for (m, a) in &self.terms {
            x.add_term(*m, a.scale(r));
        }
        x
    }
    fn term_count(&self) -> usize {
        self.terms.values().map(|c| c.term_count()).sum()
    }
}

/// ⟨φ, x⟩ for the form making the stored monomials orthonormal.
pub fn ext_pair<R: Ring>(phi: &ExtElem<Rat>, x: &ExtElem<R>) -> R {
    let mut acc = R::zero();
    for (m, c) in phi.terms() {
        if let Some(a) = x.terms.get(m) {
            acc.add_assign_ref(&a.scale(c));
        }
    }
    acc
}

/// ⟨g_1⋯g_k, x⟩ for a product of generators in the given order.
pub fn ext_pair_word<R: Ring>(gens: &[Gen], x: &ExtElem<R>) -> Result<R> {
    Ok(ext_pair(&ExtElem::word(gens, rat::one())?, x))
}

/// τ = Σ_i e_i e*_i.
pub fn tau<R: Ring>(n: usize) -> Result<ExtElem<R>> {
    let mut x = ExtElem::new();
    for i in 1..=n as u8 {
        x.add_assign_ref(&ExtElem::word(&[Gen::E(i), Gen::EStar(i)], R::one())?);
    }
    Ok(x)
}

/// τ^{(r)} = Σ_{i_1<⋯<i_r} e_{i_1}⋯e_{i_r} e*_{i_r}⋯e*_{i_1}.
pub fn tau_divided<R: Ring>(n: usize, r: usize) -> Result<ExtElem<R>> {
    let mut x = ExtElem::new();
    for set in subsets(n, r) {
        let mut gens: Vec<Gen> = set.iter().map(|&i| Gen::E(i)).collect();
        gens.extend(set.iter().rev().map(|&i| Gen::EStar(i)));
        x.add_assign_ref(&ExtElem::word(&gens, R::one())?);
    }
    Ok(x)
}

/// Strictly increasing sequences of length r over 1..=n.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<u8>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i as u8);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, r, &mut Vec::new(), &mut out);
    out
}

fn monomial_text(mask: u32) -> String {
    let mut parts = Vec::new();
    for i in 0..MAX_DIM as u32 {
        if mask & (1 << i) != 0 {
            parts.push(format!("e{}", i + 1));
        }
    }
    for i in 0..MAX_DIM as u32 {
        if mask & (1 << (MAX_DIM as u32 + i)) != 0 {
            parts.push(format!("e*{}", i + 1));
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

impl<R: Ring + fmt::Display> fmt::Display for ExtElem<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("[{c}]*{}", monomial_text(*m)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring> fmt::Debug for ExtElem<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(m, c)| (monomial_text(*m), c)))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::{GAElem, Perm};

    type E = ExtElem<Rat>;

    #[test]
    fn anticommutation() {
        assert!(E::e(1).times(&E::e(1)).is_zero());
        assert_eq!(E::e(1).times(&E::e(2)), E::e(2).times(&E::e(1)).negate());
        assert_eq!(
            E::estar(3).times(&E::e(1)),
            E::e(1).times(&E::estar(3)).negate()
        );
        let w = E::word(&[Gen::EStar(2), Gen::E(2), Gen::E(1)], rat::one()).unwrap();
        // e*2 e2 e1 = e1 e2 e*2 after three transpositions
        assert_eq!(
            w,
            E::word(&[Gen::E(1), Gen::E(2), Gen::EStar(2)], rat::int(-1)).unwrap()
        );
        assert!(E::word(&[Gen::E(17)], rat::one()).is_err());
    }

    #[test]
    fn associativity() {
        let a = E::e(1).plus(&E::estar(2)).plus(&E::one());
        let b = E::e(2).scale(&rat::int(3)).plus(&E::estar(1));
        let c = E::e(1).times(&E::estar(1)).plus(&E::e(3));
        assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
    }

    #[test]
    fn pairing_extracts_two_by_two_det() {
        // ξ_j = Σ_i e_i X_ij with X = [[2,3],[5,7]]
        let x = [[2, 3], [5, 7]];
        let xi = |j: usize| {
            let mut v = E::new();
            for (i, row) in x.iter().enumerate() {
                v.add_assign_ref(&E::e(i as u8 + 1).scale(&rat::int(row[j])));
            }
            v
        };
        let prod = xi(0).times(&xi(1));
        let d = ext_pair_word(&[Gen::E(1), Gen::E(2)], &prod).unwrap();
        assert_eq!(d, rat::int(2 * 7 - 3 * 5));
        // reversed basis word picks up the sign
        assert_eq!(
            ext_pair_word(&[Gen::E(2), Gen::E(1)], &prod).unwrap(),
            rat::int(1)
        );
    }

    #[test]
    fn noncommutative_coefficients() {
        // coefficients multiply in order while the exterior part anticommutes
        let s = GAElem::perm(Perm::s(1));
        let t = GAElem::perm(Perm::s(2));
        let a = ExtElem::<GAElem>::e(1).times_coeff(&s);
        let b = ExtElem::<GAElem>::e(2).times_coeff(&t);
        let ab = a.times(&b);
        assert_eq!(ab.coeff(0b11), s.times(&t));
        assert_eq!(b.times(&a).coeff(0b11), t.times(&s).negate());
    }

    #[test]
    fn divided_powers_of_tau() {
        for n in 1..=3 {
            let t: E = tau(n).unwrap();
            let mut pw = E::one();
            for r in 0..=n {
                let expect = pw.scale(&rat::recip(&rat::factorial(r)));
                assert_eq!(tau_divided::<Rat>(n, r).unwrap(), expect, "n={n} r={r}");
                pw = pw.times(&t);
            }
        }
        assert_eq!(subsets(3, 2), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}

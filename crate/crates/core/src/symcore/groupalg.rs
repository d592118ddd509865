use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::rat::{self, Rat};
use crate::ring::{check_terms, Ring};
use crate::symcore::perm::Perm;

/// Element of ℂS_∞ ⊗ R: a finitely supported map Perm → R with no zero values.
///
/// Group elements commute with the coefficients, so (σ⊗a)(τ⊗b) = στ⊗ab.
#[derive(Clone, PartialEq)]
pub struct GroupAlg<R: Ring> {
    terms: BTreeMap<Perm, R>,
}

impl<R: Ring> Default for GroupAlg<R> {
    fn default() -> Self {
        GroupAlg::new()
    }
}

/// Element of the rational group algebra.
pub type GAElem = GroupAlg<Rat>;

impl<R: Ring> GroupAlg<R> {
    pub fn new() -> Self {
        GroupAlg {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(sigma: Perm, coeff: R) -> Self {
        let mut g = GroupAlg::new();
        g.add_term(sigma, coeff);
        g
    }

    pub fn perm(sigma: Perm) -> Self {
        GroupAlg::term(sigma, R::one())
    }

    pub fn scalar(coeff: R) -> Self {
        GroupAlg::term(Perm::identity(), coeff)
    }

    pub fn add_term(&mut self, sigma: Perm, coeff: R) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(sigma) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&coeff);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, r: &Rat) {
        for (s, c) in &other.terms {
            self.add_term(s.clone(), c.scale(r));
        }
    }

    pub fn terms(&self) -> &BTreeMap<Perm, R> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Perm, R> {
        self.terms
    }

    pub fn coeff(&self, sigma: &Perm) -> R {
        self.terms.get(sigma).cloned().unwrap_or_else(R::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest point moved by any permutation in the support.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|s| s.degree()).max().unwrap_or(0)
    }

    /// The antiautomorphism σ ↦ σ⁻¹ on the group part.
    pub fn circ(&self) -> Self {
        let mut g = GroupAlg::new();
        for (s, c) in &self.terms {
            g.add_term(s.inverse(), c.clone());
        }
        g
    }

    /// α^k applied to every group element.
    pub fn shift(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        GroupAlg {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.shift(k), c.clone()))
                .collect(),
        }
    }

    /// σ·self.
    pub fn left_perm(&self, sigma: &Perm) -> Self {
        if sigma.is_identity() {
            return self.clone();
        }
        GroupAlg {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (sigma.compose(s), c.clone()))
                .collect(),
        }
    }

    /// self·σ.
    pub fn right_perm(&self, sigma: &Perm) -> Self {
        if sigma.is_identity() {
            return self.clone();
        }
        GroupAlg {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.compose(sigma), c.clone()))
                .collect(),
        }
    }

    /// Multiply by a rational group algebra element on the left.
    pub fn left_mul_ga(&self, g: &GAElem) -> Self {
        let mut out = GroupAlg::new();
        for (s, a) in g.terms() {
            for (t, b) in &self.terms {
                out.add_term(s.compose(t), b.scale(a));
            }
        }
        out
    }

    /// Multiply by a rational group algebra element on the right.
    pub fn right_mul_ga(&self, g: &GAElem) -> Self {
        let mut out = GroupAlg::new();
        for (t, b) in &self.terms {
            for (s, a) in g.terms() {
                out.add_term(t.compose(s), b.scale(a));
            }
        }
        out
    }

    /// Apply a map to every coefficient.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> GroupAlg<S> {
        let mut g = GroupAlg::new();
        for (s, c) in &self.terms {
            g.add_term(s.clone(), f(c));
        }
        g
    }

    /// Σ_σ f(σ)·c_σ for a scalar-valued f on S_∞ (the linear extension of f).
    pub fn contract(&self, f: impl Fn(&Perm) -> Rat) -> R {
        let mut acc = R::zero();
        for (s, c) in &self.terms {
            let w = f(s);
            if !rat::is_zero(&w) {
                acc.add_assign_ref(&c.scale(&w));
            }
        }
        acc
    }

    /// Fails if some permutation moves a point beyond p.
    pub fn check_support(&self, p: usize) -> Result<()> {
        if self.degree() > p {
            return Err(Error::Size(format!(
                "support of degree {} exceeds S_{p}",
                self.degree()
            )));
        }
        Ok(())
    }
}

impl<R: Ring> Ring for GroupAlg<R> {
    fn zero() -> Self {
        GroupAlg::new()
    }
    fn one() -> Self {
        GroupAlg::scalar(R::one())
    }
    fn from_rat(r: &Rat) -> Self {
        GroupAlg::scalar(R::from_rat(r))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(other);
        out
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (s, c) in &other.terms {
            self.add_term(s.clone(), c.clone());
        }
        check_terms(self.terms.len());
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = GroupAlg::new();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                out.add_term(s.compose(t), a.times(b));
            }
        }
        check_terms(out.terms.len());
        out
    }
    fn scale(&self, r: &Rat) -> Self {
        if rat::is_zero(r) {
            return GroupAlg::new();
        }
        GroupAlg {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.clone(), c.scale(r)))
                .collect(),
        }
    }
    fn term_count(&self) -> usize {
        self.terms.values().map(|c| c.term_count()).sum()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for GroupAlg<R> {
    /// "c1*(…) + c2*(…)"; coefficients that are not plain rationals are bracketed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, c)| {
                let cs = c.to_string();
                if R::COMMUTATIVE && !cs.contains(' ') {
                    format!("{cs}*{s}")
                } else {
                    format!("[{cs}]*{s}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring> fmt::Debug for GroupAlg<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl GAElem {
    /// Parses the text form "c1*(…) + c2*(…)" of a rational element.
    pub fn parse(s: &str) -> Result<GAElem> {
        let s = s.trim();
        let mut g = GAElem::new();
        if s == "0" {
            return Ok(g);
        }
        for part in s.split(" + ") {
            let (c, p) = part
                .split_once('*')
                .ok_or_else(|| Error::Parse(format!("term {part:?} lacks '*'")))?;
            let c = rat::parse_rat(c).ok_or_else(|| Error::Parse(format!("coefficient {c:?}")))?;
            g.add_term(p.parse()?, c);
        }
        Ok(g)
    }

    /// Σ over a list of permutations with unit coefficients.
    pub fn sum_of(perms: impl IntoIterator<Item = Perm>) -> GAElem {
        let mut g = GAElem::new();
        for s in perms {
            g.add_term(s, rat::one());
        }
        g
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(s, c)| serde_json::json!({"perm": s.to_string(), "coeff": c.to_string()}))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1() -> GAElem {
        GAElem::perm(Perm::s(1))
    }

    #[test]
    fn products() {
        let one = GAElem::one();
        let t = GAElem::parse("1/2*(1 2) + 3*(2 3)").unwrap();
        assert_eq!(one.times(&t), t);
        assert_eq!(s1().times(&s1()), one);
        let e = one.plus(&s1()).scale(&rat::frac(1, 2));
        assert_eq!(e.times(&e), e);
    }

    #[test]
    fn text_round_trip() {
        let t = GAElem::parse("1/2*() + -1*(1 2)(3 4 5)").unwrap();
        assert_eq!(t.to_string(), "1/2*() + -1*(1 2)(3 4 5)");
        assert_eq!(GAElem::parse(&t.to_string()).unwrap(), t);
        assert_eq!(GAElem::new().to_string(), "0");
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut t = s1();
        t.add_term(Perm::s(1), rat::int(-1));
        assert!(t.is_empty());
        assert_eq!(s1().scale(&rat::zero()), GAElem::new());
    }

    #[test]
    fn circ_and_shift() {
        let c: Perm = "(1 2 3)".parse().unwrap();
        let t = GAElem::perm(c.clone());
        assert_eq!(t.circ(), GAElem::perm(c.inverse()));
        assert_eq!(s1().shift(2), GAElem::perm(Perm::s(3)));
        assert_eq!(t.degree(), 3);
    }

    #[test]
    fn nested_coefficients() {
        // (ℂS_2 ⊗ ℂS_2): coefficients are themselves group algebra elements.
        let a: GroupAlg<GAElem> = GroupAlg::term(Perm::s(1), s1());
        let b = a.times(&a);
        assert_eq!(b, GroupAlg::one());
    }
}

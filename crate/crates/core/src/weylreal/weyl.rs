//! The Weyl algebra of polynomial-coefficient differential operators on ℂ^n ⊗ ℂ^{n'}.
//!
//! Coordinates x_{ik} and derivatives ∂_{ik} are indexed by pairs (i, k). A term
//! x^A ∂^B is stored with all multiplication operators to the left. Like
//! [`Pbw`](crate::envelope::Pbw), elements do not record n and n'.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::rat::{self, Rat};
use crate::ring::{check_terms, Ring};

pub type Var = (u8, u8);
/// Exponent vector: variables in increasing order with positive exponents.
pub type Exps = Vec<(Var, u32)>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeylElem {
    terms: BTreeMap<(Exps, Exps), Rat>,
}

fn var(i: usize, k: usize) -> Var {
    assert!(
        i >= 1 && k >= 1 && i <= 255 && k <= 255,
        "variable index ({i},{k}) out of range"
    );
    (i as u8, k as u8)
}

fn mul_exps(a: &Exps, b: &Exps) -> Exps {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j]);
            j += 1;
        } else {
            out.push((a[i].0, a[i].1 + b[j].1));
            i += 1;
            j += 1;
        }
    }
    out
}

fn exp_of(e: &Exps, v: Var) -> u32 {
    e.iter().find(|(w, _)| *w == v).map_or(0, |x| x.1)
}

fn lower(e: &Exps, v: Var, by: u32) -> Exps {
    e.iter()
        .filter_map(|&(w, k)| {
            if w != v {
                Some((w, k))
            } else if k > by {
                Some((w, k - by))
            } else {
                None
            }
        })
        .collect()
}

fn binomial(n: u32, k: u32) -> Rat {
    let mut acc = rat::one();
    for t in 0..k {
        acc *= rat::frac((n - t) as i64, (t + 1) as i64);
    }
    acc
}

/// ∂^B x^C = Σ_K Π_v K_v! C(B_v,K_v) C(C_v,K_v) x^{C−K} ∂^{B−K}.
fn reorder(b: &Exps, c: &Exps) -> Vec<(Exps, Exps, Rat)> {
    let mut acc = vec![(c.clone(), b.clone(), rat::one())];
    for &(v, bv) in b {
        let cv = exp_of(c, v);
        if cv == 0 {
            continue;
        }
        let mut next = Vec::new();
        for (x, d, coef) in &acc {
            for k in 0..=bv.min(cv) {
                let w = binomial(bv, k) * binomial(cv, k) * rat::factorial(k as usize);
                next.push((lower(x, v, k), lower(d, v, k), coef * w));
            }
        }
        acc = next;
    }
    acc
}

impl WeylElem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn x(i: usize, k: usize) -> Self {
        Self::monomial(vec![(var(i, k), 1)], vec![], rat::one())
    }

    pub fn d(i: usize, k: usize) -> Self {
        Self::monomial(vec![], vec![(var(i, k), 1)], rat::one())
    }

    pub fn monomial(x: Exps, d: Exps, c: Rat) -> Self {
        let mut out = Self::new();
        out.add_term(x, d, c);
        out
    }

    pub fn add_term(&mut self, x: Exps, d: Exps, c: Rat) {
        if rat::is_zero(&c) {
            return;
        }
        match self.terms.entry((x, d)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if rat::is_zero(e.get()) {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Exps, Exps), Rat> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest (i, k) index appearing in any variable.
    pub fn dims(&self) -> (usize, usize) {
        let mut out = (0, 0);
        for (x, d) in self.terms.keys() {
            for ((i, k), _) in x.iter().chain(d) {
                out.0 = out.0.max(*i as usize);
                out.1 = out.1.max(*k as usize);
            }
        }
        out
    }

    /// Total degree in x minus total degree in ∂, if the element is homogeneous.
    pub fn degree_shift(&self) -> Option<i64> {
        let mut shift = None;
        for (x, d) in self.terms.keys() {
            let s = x.iter().map(|e| e.1 as i64).sum::<i64>()
                - d.iter().map(|e| e.1 as i64).sum::<i64>();
            if shift.is_some_and(|t| t != s) {
                return None;
            }
            shift = Some(s);
        }
        shift
    }
}

impl Ring for WeylElem {
    fn zero() -> Self {
        Self::new()
    }
    fn one() -> Self {
        Self::monomial(vec![], vec![], rat::one())
    }
    fn from_rat(r: &Rat) -> Self {
        Self::monomial(vec![], vec![], r.clone())
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
        for ((x, d), c) in &other.terms {
            self.add_term(x.clone(), d.clone(), c.clone());
        }
        check_terms(self.terms.len());
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = Self::new();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let coef = c1 * c2;
                if b.is_empty() || c.is_empty() {
                    out.add_term(mul_exps(a, c), mul_exps(b, d), coef);
                    continue;
                }
                for (x, y, w) in reorder(b, c) {
                    out.add_term(mul_exps(a, &x), mul_exps(&y, d), &coef * w);
                }
            }
            check_terms(out.terms.len());
        }
        out
    }
    fn scale(&self, r: &Rat) -> Self {
        if rat::is_zero(r) {
            return Self::new();
        }
        WeylElem {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * r)).collect(),
        }
    }
    fn term_count(&self) -> usize {
        self.terms.len()
    }
}

fn var_text(prefix: &str, (i, k): Var, e: u32) -> String {
    let idx = if i >= 10 || k >= 10 {
        format!("{i},{k}")
    } else {
        format!("{i}{k}")
    };
    if e == 1 {
        format!("{prefix}{idx}")
    } else {
        format!("{prefix}{idx}^{e}")
    }
}

/// "x11^2 d11^2 + x11 d11"; ∂ is written "d".
impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.iter().collect();
        let deg = |(x, d): &(Exps, Exps)| x.iter().chain(d).map(|e| e.1).sum::<u32>();
        keys.sort_by(|a, b| deg(b.0).cmp(&deg(a.0)).then(a.0.cmp(b.0)));
        for (k, ((x, d), c)) in keys.into_iter().enumerate() {
            let mono: Vec<String> = x
                .iter()
                .map(|&(v, e)| var_text("x", v, e))
                .chain(d.iter().map(|&(v, e)| var_text("d", v, e)))
                .collect();
            let neg = *c < 0;
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == rat::one() {
                write!(f, "{}", mono.join(" "))?;
            } else {
                write!(f, "{abs} {}", mono.join(" "))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

//! U(gl_n) in PBW normal form.
//!
//! Generators are ordered lowering (i > j) < Cartan (i = j) < raising (i < j), and
//! lexicographically on (i, j) within each class. With raising factors on the right,
//! Harish-Chandra evaluation becomes a filter on monomials.
//!
//! Elements do not record n: a generator E_ij is meaningful in every gl_n with
//! n ≥ max(i, j), and products never create larger indices.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use serde_json::json;

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::rat::{self, Rat};
use crate::ring::{check_terms, Ring};

/// The generator E_ij.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Gen {
    pub i: u8,
    pub j: u8,
}

impl Gen {
    pub fn new(i: usize, j: usize) -> Gen {
        assert!(
            (1..=255).contains(&i) && (1..=255).contains(&j),
            "E_{i}{j} out of range"
        );
        Gen {
            i: i as u8,
            j: j as u8,
        }
    }

    fn class(self) -> u8 {
        match self.i.cmp(&self.j) {
            Ordering::Greater => 0,
            Ordering::Equal => 1,
            Ordering::Less => 2,
        }
    }

    pub fn is_raising(self) -> bool {
        self.i < self.j
    }

    pub fn is_lowering(self) -> bool {
        self.i > self.j
    }
}

impl Ord for Gen {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.class(), self.i, self.j).cmp(&(other.class(), other.i, other.j))
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i < 10 && self.j < 10 {
            write!(f, "E{}{}", self.i, self.j)
        } else {
            write!(f, "E{},{}", self.i, self.j)
        }
    }
}

/// A sorted product of generators.
pub type Monomial = Vec<Gen>;

type Expansion = Rc<Vec<(Monomial, Rat)>>;

const MEMO_LIMIT: usize = 1 << 20;

thread_local! {
    static INSERT_MEMO: RefCell<HashMap<(Monomial, Gen), Expansion>> = RefCell::new(HashMap::new());
}

/// [E_ij, E_kl] = δ_jk E_il − δ_li E_kj.
fn bracket(h: Gen, g: Gen) -> Vec<(Gen, Rat)> {
    let mut out = Vec::with_capacity(2);
    if h.j == g.i {
        out.push((Gen { i: h.i, j: g.j }, rat::one()));
    }
    if g.j == h.i {
        out.push((Gen { i: g.i, j: h.j }, rat::int(-1)));
    }
    // [E_ii, E_ii] would give E_ii − E_ii
    if out.len() == 2 && out[0].0 == out[1].0 {
        out.clear();
    }
    out
}

fn accumulate(map: &mut BTreeMap<Monomial, Rat>, m: Monomial, c: Rat) {
    if rat::is_zero(&c) {
        return;
    }
    match map.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if rat::is_zero(o.get()) {
                o.remove();
            }
        }
    }
}

/// Normal form of m·g for a sorted monomial m.
fn insert(m: &[Gen], g: Gen) -> Expansion {
    match m.last() {
        None => return Rc::new(vec![(vec![g], rat::one())]),
        Some(&h) if h <= g => {
            let mut v = m.to_vec();
            v.push(g);
            return Rc::new(vec![(v, rat::one())]);
        }
        _ => {}
    }
    let key = (m.to_vec(), g);
    if let Some(hit) = INSERT_MEMO.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let (prefix, h) = (&m[..m.len() - 1], m[m.len() - 1]);
    // prefix·h·g = (prefix·g)·h + prefix·[h, g]
    let mut acc = BTreeMap::new();
    for (mono, c) in insert(prefix, g).iter() {
        for (mono2, c2) in insert(mono, h).iter() {
            accumulate(&mut acc, mono2.clone(), c * c2);
        }
    }
    for (b, c) in bracket(h, g) {
        for (mono, c2) in insert(prefix, b).iter() {
            accumulate(&mut acc, mono.clone(), &c * c2);
        }
    }
    let out: Expansion = Rc::new(acc.into_iter().collect());
    INSERT_MEMO.with(|c| {
        let mut c = c.borrow_mut();
        if c.len() > MEMO_LIMIT {
            c.clear();
        }
        c.insert(key, out.clone());
    });
    out
}

/// Normal form of a·b for sorted monomials.
fn mul_monomials(a: &[Gen], b: &[Gen]) -> Vec<(Monomial, Rat)> {
    match (a.last(), b.first()) {
        (None, _) => return vec![(b.to_vec(), rat::one())],
        (_, None) => return vec![(a.to_vec(), rat::one())],
        (Some(x), Some(y)) if x <= y => {
            let mut v = a.to_vec();
            v.extend_from_slice(b);
            return vec![(v, rat::one())];
        }
        _ => {}
    }
    let mut cur: BTreeMap<Monomial, Rat> = BTreeMap::new();
    cur.insert(a.to_vec(), rat::one());
    for &g in b {
        let mut next = BTreeMap::new();
        for (m, c) in &cur {
            for (m2, c2) in insert(m, g).iter() {
                accumulate(&mut next, m2.clone(), c * c2);
            }
        }
        cur = next;
    }
    cur.into_iter().collect()
}

/// Element of U(gl_n): a map from sorted monomials to nonzero rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Pbw {
    terms: BTreeMap<Monomial, Rat>,
}

impl Pbw {
    pub fn new() -> Self {
        Pbw {
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(i: usize, j: usize) -> Self {
        Pbw::monomial(vec![Gen::new(i, j)], rat::one())
    }

    /// E_ij(u) = E_ij + δ_ij u.
    pub fn shifted(i: usize, j: usize, u: &Rat) -> Self {
        let mut e = Pbw::generator(i, j);
        if i == j {
            e.add_term(Vec::new(), u.clone());
        }
        e
    }

    /// Product of the given generators in the given order, normal-ordered.
    pub fn word(gens: &[(usize, usize)]) -> Self {
        let mut acc = Pbw::one();
        for &(i, j) in gens {
            acc = acc.times(&Pbw::generator(i, j));
        }
        acc
    }

    /// A single monomial, sorted first.
    pub fn monomial(mut m: Monomial, c: Rat) -> Self {
        m.sort();
        let mut p = Pbw::new();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        debug_assert!(m.windows(2).all(|w| w[0] <= w[1]), "unsorted monomial");
        accumulate(&mut self.terms, m, c);
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rat> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[Gen]) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(rat::zero)
    }

    /// Largest index occurring in any generator.
    pub fn max_index(&self) -> usize {
        self.terms
            .keys()
            .flatten()
            .map(|g| g.i.max(g.j) as usize)
            .max()
            .unwrap_or(0)
    }

    /// Top filtration degree.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    /// The algebra homomorphism determined by E_ij ↦ f(i, j).
    pub fn substitute(&self, f: impl Fn(usize, usize) -> Pbw) -> Pbw {
        self.eval(f)
    }

    /// Image under the homomorphism U(gl) → R determined by E_ij ↦ f(i, j).
    pub fn eval<R: Ring>(&self, f: impl Fn(usize, usize) -> R) -> R {
        let mut images: HashMap<Gen, R> = HashMap::new();
        let mut out = R::zero();
        for (m, c) in &self.terms {
            let mut acc = R::one();
            for g in m {
                let img = images
                    .entry(*g)
                    .or_insert_with(|| f(g.i as usize, g.j as usize));
                acc = acc.times(img);
            }
            out.add_assign_ref(&acc.scale(c));
        }
        out
    }

    /// E_ij ↦ −E_ji.
    pub fn minus_transpose(&self) -> Pbw {
        self.substitute(|i, j| Pbw::generator(j, i).negate())
    }

    /// Ad(g): E ↦ ᵗg · E · ᵗg⁻¹, that is E_ij ↦ Σ_{k,l} g_ki E_kl (g⁻¹)_jl.
    pub fn adjoint_action(&self, g: &RatMatrix) -> Result<Pbw> {
        let n = g.rows();
        if g.cols() != n {
            return Err(Error::Size("conjugating matrix is not square".into()));
        }
        if self.max_index() > n {
            return Err(Error::Size(format!("element uses E_ij beyond gl_{n}")));
        }
        let inv = g
            .inverse()
            .ok_or_else(|| Error::Invalid("singular matrix".into()))?;
        Ok(self.substitute(|i, j| {
            let mut acc = Pbw::new();
            for k in 1..=n {
                for l in 1..=n {
                    let c = g.get(k - 1, i - 1) * inv.get(j - 1, l - 1);
                    acc.add_term(vec![Gen::new(k, l)], c);
                }
            }
            acc
        }))
    }

    /// Weight Σ (ε_i − ε_j) of a monomial, as a vector of length n.
    pub fn weight(m: &[Gen], n: usize) -> Vec<i64> {
        let mut w = vec![0i64; n];
        for g in m {
            w[g.i as usize - 1] += 1;
            w[g.j as usize - 1] -= 1;
        }
        w
    }

    pub fn parse(s: &str) -> Result<Pbw> {
        let err = || Error::Parse(format!("bad PBW element {s:?}"));
        let mut out = Pbw::new();
        let mut sign = rat::one();
        let mut coeff: Option<Rat> = None;
        let mut gens: Vec<Gen> = Vec::new();
        let mut any = false;
        let flush = |out: &mut Pbw,
                     sign: &Rat,
                     coeff: &mut Option<Rat>,
                     gens: &mut Vec<Gen>,
                     any: &mut bool| {
            if *any {
                let c = coeff.take().unwrap_or_else(rat::one) * sign;
                let mut p = Pbw::one().scale(&c);
                for g in gens.drain(..) {
                    p = p.times(&Pbw::monomial(vec![g], rat::one()));
                }
                out.add_assign_ref(&p);
            }
            *any = false;
        };
        let spaced = s
            .replace('+', " + ")
            .replace(['−', '-'], " - ")
            .replace('*', " ");
        for tok in spaced.split_whitespace() {
            match tok {
                "+" | "-" => {
                    flush(&mut out, &sign, &mut coeff, &mut gens, &mut any);
                    sign = if tok == "-" { rat::int(-1) } else { rat::one() };
                }
                t if t.starts_with('E') => {
                    let body = &t[1..];
                    let (i, j) = if let Some((a, b)) = body.split_once(',') {
                        (
                            a.parse::<usize>().map_err(|_| err())?,
                            b.parse::<usize>().map_err(|_| err())?,
                        )
                    } else if body.len() == 2 && body.bytes().all(|b| b.is_ascii_digit()) {
                        (
                            (body.as_bytes()[0] - b'0') as usize,
                            (body.as_bytes()[1] - b'0') as usize,
                        )
                    } else {
                        return Err(err());
                    };
                    if i == 0 || j == 0 || i > 255 || j > 255 {
                        return Err(err());
                    }
                    gens.push(Gen::new(i, j));
                    any = true;
                }
                t => {
                    if coeff.is_some() || !gens.is_empty() {
                        return Err(err());
                    }
                    coeff = Some(rat::parse_rat(t).ok_or_else(err)?);
                    any = true;
                }
            }
        }
        flush(&mut out, &sign, &mut coeff, &mut gens, &mut any);
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let gens: Vec<[u8; 2]> = m.iter().map(|g| [g.i, g.j]).collect();
                json!({ "monomial": gens, "coeff": c.to_string() })
            })
            .collect();
        json!({ "text": self.to_string(), "terms": terms })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Pbw> {
        let err = || Error::Parse("bad PBW JSON".into());
        let mut out = Pbw::new();
        for t in v.get("terms").and_then(|t| t.as_array()).ok_or_else(err)? {
            let c = t
                .get("coeff")
                .and_then(|c| c.as_str())
                .and_then(rat::parse_rat)
                .ok_or_else(err)?;
            let mut m = Vec::new();
            for g in t
                .get("monomial")
                .and_then(|m| m.as_array())
                .ok_or_else(err)?
            {
                let ij: Vec<usize> = g
                    .as_array()
                    .ok_or_else(err)?
                    .iter()
                    .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(err))
                    .collect::<Result<_>>()?;
                match ij[..] {
                    [i, j] if (1..=255).contains(&i) && (1..=255).contains(&j) => {
                        m.push(Gen::new(i, j))
                    }
                    _ => return Err(err()),
                }
            }
            if m.windows(2).any(|w| w[0] > w[1]) {
                return Err(err());
            }
            out.add_term(m, c);
        }
        Ok(out)
    }
}

impl Ring for Pbw {
    fn zero() -> Self {
        Pbw::new()
    }
    fn one() -> Self {
        Pbw::monomial(Vec::new(), rat::one())
    }
    fn from_rat(r: &Rat) -> Self {
        Pbw::monomial(Vec::new(), r.clone())
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
        for (m, c) in &other.terms {
            accumulate(&mut self.terms, m.clone(), c.clone());
        }
        check_terms(self.terms.len());
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for (m, cm) in mul_monomials(a, b) {
                    accumulate(&mut out, m, &c * cm);
                }
            }
            check_terms(out.len());
        }
        Pbw { terms: out }
    }
    fn scale(&self, r: &Rat) -> Self {
        if rat::is_zero(r) {
            return Pbw::new();
        }
        Pbw {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }
    fn term_count(&self) -> usize {
        self.terms.len()
    }
}

impl fmt::Display for Pbw {
    /// "2 E21 E12 - E11": higher degrees first, then the PBW order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse(m.len()));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = *c < 0;
            let abs = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let gens: Vec<String> = m.iter().map(|g| g.to_string()).collect();
            if m.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == 1 {
                write!(f, "{}", gens.join(" "))?;
            } else {
                write!(f, "{abs} {}", gens.join(" "))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pbw({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize, j: usize) -> Pbw {
        Pbw::generator(i, j)
    }

    fn p(s: &str) -> Pbw {
        Pbw::parse(s).unwrap()
    }

    #[test]
    fn generator_order() {
        let mut g = [
            Gen::new(1, 2),
            Gen::new(2, 2),
            Gen::new(2, 1),
            Gen::new(1, 1),
            Gen::new(3, 1),
        ];
        g.sort();
        let s: Vec<String> = g.iter().map(|g| g.to_string()).collect();
        assert_eq!(s, ["E21", "E31", "E11", "E22", "E12"]);
    }

    #[test]
    fn products() {
        assert_eq!(e(1, 1).times(&e(2, 2)).to_string(), "E11 E22");
        assert_eq!(e(2, 2).times(&e(1, 1)).to_string(), "E11 E22");
        // [E_12, E_21] = E_11 − E_22
        assert_eq!(e(1, 2).times(&e(2, 1)), p("E21 E12 + E11 - E22"));
        assert_eq!(e(1, 2).commutator(&e(2, 1)), p("E11 - E22"));
        let a = e(1, 2).times(&e(2, 1)).times(&e(1, 2));
        let b = e(1, 2).times(&e(2, 1).times(&e(1, 2)));
        assert_eq!(a, b);
        assert_eq!(e(1, 1).commutator(&e(1, 1)), Pbw::zero());
        assert_eq!(e(1, 1).commutator(&e(1, 2)), e(1, 2));
    }

    #[test]
    fn gl_relations_hold_for_all_pairs() {
        let n = 3;
        for (i, j, k, l) in itertools_product(n) {
            let lhs = e(i, j).commutator(&e(k, l));
            let mut rhs = Pbw::new();
            if j == k {
                rhs.add_assign_ref(&e(i, l));
            }
            if l == i {
                rhs = rhs.minus(&e(k, j));
            }
            assert_eq!(lhs, rhs, "[E{i}{j}, E{k}{l}]");
        }
    }

    fn itertools_product(n: usize) -> Vec<(usize, usize, usize, usize)> {
        let mut v = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        v.push((i, j, k, l));
                    }
                }
            }
        }
        v
    }

    #[test]
    fn text_and_json_round_trip() {
        let x = p("2 E21 E12 - E11 + 1/3");
        assert_eq!(x.to_string(), "2 E21 E12 - E11 + 1/3");
        assert_eq!(Pbw::parse(&x.to_string()).unwrap(), x);
        assert_eq!(Pbw::from_json(&x.to_json()).unwrap(), x);
        assert_eq!(p("E12 E21"), p("E21 E12 + E11 - E22"));
        assert_eq!(p("-E11").to_string(), "-E11");
        assert_eq!(Pbw::zero().to_string(), "0");
        assert!(Pbw::parse("E1").is_err());
        assert!(Pbw::parse("2 3").is_err());
        assert_eq!(Gen::new(10, 2).to_string(), "E10,2");
        assert_eq!(p("E10,2"), Pbw::generator(10, 2));
    }

    #[test]
    fn weights_of_monomials() {
        let x = e(1, 2).times(&e(2, 1));
        for m in x.terms().keys() {
            assert_eq!(Pbw::weight(m, 2), vec![0, 0]);
        }
        assert_eq!(Pbw::weight(&[Gen::new(1, 3)], 3), vec![1, 0, -1]);
        // zero weight and no raising factor forces no lowering factor
        for m in e(3, 1).times(&e(1, 2)).times(&e(2, 3)).terms().keys() {
            if m.iter().all(|g| !g.is_raising()) {
                assert!(m.iter().all(|g| !g.is_lowering()), "{m:?}");
            }
        }
    }

    #[test]
    fn automorphisms() {
        let x = p("E12 E21 + 3 E11");
        assert_eq!(x.minus_transpose().minus_transpose(), x);
        let y = e(1, 2);
        assert_eq!(
            x.times(&y).minus_transpose(),
            x.minus_transpose().times(&y.minus_transpose())
        );
        let id = RatMatrix::identity(2);
        assert_eq!(x.adjoint_action(&id).unwrap(), x);
        let g = RatMatrix::from_ints(&[&[2, 0], &[0, 1]]);
        // Ad(g)E_12 = g_11 E_12 (g⁻¹)_22 = 2 E_12
        assert_eq!(y.adjoint_action(&g).unwrap(), y.scale(&rat::int(2)));
        let trace = p("E11 + E22");
        let h = RatMatrix::from_ints(&[&[1, 1], &[1, 2]]);
        assert_eq!(trace.adjoint_action(&h).unwrap(), trace);
        let (a, b) = (p("E12 E21"), p("E21 - E11"));
        assert_eq!(
            a.times(&b).adjoint_action(&h).unwrap(),
            a.adjoint_action(&h)
                .unwrap()
                .times(&b.adjoint_action(&h).unwrap())
        );
        assert!(x
            .adjoint_action(&RatMatrix::from_ints(&[&[1, 1], &[1, 1]]))
            .is_err());
    }
}

//! Words e_U t f_W with a group-algebra middle part: the algebra T̄'(V,W).
//!
//! A stored vector word (u_1, …, u_p) stands for e_{u_p}⋯e_{u_1} and a stored
//! covector word (w_1, …, w_q) for f_{w_1}⋯f_{w_q}; u_1 and w_1 sit next to the
//! middle. The defining relations are
//!
//! ```text
//! e_b e_a = e_a e_b s_1    f_b f_a = s_1 f_a f_b    f_b e_a = e_a s_1 f_b + c_ab
//! s_i e_a = e_a s_{i+1}    f_a s_i = s_{i+1} f_a
//! ```
//!
//! In canonical form both words are weakly increasing and the middle part t
//! satisfies s_U t s_W = t. Elements do not record the dimensions of V and W;
//! letters are just indices.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::rat::{self, Rat};
use crate::ring::{check_terms, Ring};
use crate::symcore::{GAElem, GroupAlg, Perm};

pub type Word = Vec<u8>;

/// The coupling c_ab = ⟨f_b, e_a⟩ used by the relation f_b e_a = e_a s_1 f_b + c_ab.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// c ≡ 0: the graded algebra T̄(V,W).
    Zero,
    /// c_ab = δ_ab: the operator algebra 𝓛(V).
    Delta,
    /// Arbitrary coefficients; missing entries are zero.
    Table(Arc<BTreeMap<(u8, u8), Rat>>),
}

impl Pairing {
    pub fn table(entries: impl IntoIterator<Item = ((u8, u8), Rat)>) -> Pairing {
        Pairing::Table(Arc::new(
            entries
                .into_iter()
                .filter(|(_, c)| !rat::is_zero(c))
                .collect(),
        ))
    }

    pub fn coeff(&self, a: u8, b: u8) -> Rat {
        match self {
            Pairing::Zero => rat::zero(),
            Pairing::Delta => {
                if a == b {
                    rat::one()
                } else {
                    rat::zero()
                }
            }
            Pairing::Table(t) => t.get(&(a, b)).cloned().unwrap_or_else(rat::zero),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Pairing::Zero => true,
            Pairing::Delta => false,
            Pairing::Table(t) => t.is_empty(),
        }
    }
}

/// Element of T̄'(V,W) ⊗ R, where R commutes with the tensor part.
///
/// `pairing` is `None` for elements built without reference to any coupling
/// (scalars, pure vector words, pure covector words); such elements adopt the
/// coupling of whatever they are multiplied with.
#[derive(Clone)]
pub struct Tvw<R: Ring> {
    pairing: Option<Pairing>,
    terms: BTreeMap<(Word, Word), GroupAlg<R>>,
}

impl<R: Ring> Default for Tvw<R> {
    fn default() -> Self {
        Tvw::new()
    }
}

impl<R: Ring> PartialEq for Tvw<R> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

/// Stable sort of a word: returns (J, σ) with I_k = J_{σ(k)}, so that e_I = e_J σ
/// and f_I = σ⁻¹ f_J.
pub(crate) fn sort_word(word: &[u8]) -> (Word, Perm) {
    let mut idx: Vec<usize> = (0..word.len()).collect();
    idx.sort_by_key(|&k| word[k]);
    let sorted = idx.iter().map(|&k| word[k]).collect();
    let mut img = vec![0u8; word.len()];
    for (r, &k) in idx.iter().enumerate() {
        img[k] = (r + 1) as u8;
    }
    (sorted, Perm::from_raw(img))
}

fn run_lengths(sorted: &[u8]) -> Vec<usize> {
    let mut runs: Vec<usize> = Vec::new();
    for (k, &x) in sorted.iter().enumerate() {
        if k > 0 && sorted[k - 1] == x {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
        }
    }
    runs
}

static SYMMETRIZERS: LazyLock<Mutex<HashMap<Vec<usize>, Arc<GAElem>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// s_J for a weakly increasing word J; `None` when the stabilizer is trivial.
pub(crate) fn symmetrizer(sorted: &[u8]) -> Option<Arc<GAElem>> {
    let runs = run_lengths(sorted);
    if runs.iter().all(|&r| r == 1) {
        return None;
    }
    if let Some(s) = SYMMETRIZERS.lock().unwrap().get(&runs) {
        return Some(s.clone());
    }
    let group = Perm::young_subgroup(&runs);
    let w = rat::recip(&rat::int(group.len() as i64));
    let mut g = GAElem::new();
    for s in group {
        g.add_term(s, w.clone());
    }
    let g = Arc::new(g);
    SYMMETRIZERS.lock().unwrap().insert(runs, g.clone());
    Some(g)
}

/// (p p−1 ⋯ k): k ↦ p and j ↦ j−1 for k < j ≤ p.
pub(crate) fn down_cycle(p: usize, k: usize) -> Perm {
    let img: Vec<u8> = (1..=p)
        .map(|j| {
            if j < k {
                j as u8
            } else if j == k {
                p as u8
            } else {
                (j - 1) as u8
            }
        })
        .collect();
    Perm::from_raw(img)
}

fn merge_pairing(a: &Option<Pairing>, b: &Option<Pairing>) -> Option<Pairing> {
    match (a, b) {
        (Some(x), Some(y)) => {
            assert!(x == y, "multiplying elements with different couplings");
            Some(x.clone())
        }
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    }
}

impl<R: Ring> Tvw<R> {
    pub fn new() -> Self {
        Tvw {
            pairing: None,
            terms: BTreeMap::new(),
        }
    }

    /// The canonical form of e_U t f_W for arbitrary words U, W.
    pub fn term(u: &[u8], t: GroupAlg<R>, w: &[u8]) -> Self {
        let mut x = Tvw::new();
        x.add_term(u, t, w);
        x
    }

    pub fn scalar(c: R) -> Self {
        Tvw::term(&[], GroupAlg::scalar(c), &[])
    }

    pub fn with_pairing(mut self, pairing: Pairing) -> Self {
        self.pairing = Some(pairing);
        self
    }

    pub fn pairing(&self) -> Option<&Pairing> {
        self.pairing.as_ref()
    }

    /// Canonical terms keyed by (vector word, covector word).
    pub fn terms(&self) -> &BTreeMap<(Word, Word), GroupAlg<R>> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds e_U t f_W, bringing it to canonical form.
    pub fn add_term(&mut self, u: &[u8], t: GroupAlg<R>, w: &[u8]) {
        self.insert(u.to_vec(), t, w.to_vec(), true, true);
    }

    /// Canonicalizes the left side when `left` is set and the right side when
    /// `right` is set; callers clear a flag only when that side is known canonical.
    fn insert(&mut self, u: Word, mut t: GroupAlg<R>, w: Word, left: bool, right: bool) {
        if t.is_empty() {
            return;
        }
        let u = if left {
            let (j, s) = sort_word(&u);
            t = t.left_perm(&s);
            if let Some(p) = symmetrizer(&j) {
                t = t.left_mul_ga(&p);
            }
            j
        } else {
            u
        };
        let w = if right {
            let (k, s) = sort_word(&w);
            t = t.right_perm(&s.inverse());
            if let Some(p) = symmetrizer(&k) {
                t = t.right_mul_ga(&p);
            }
            k
        } else {
            w
        };
        self.add_canonical((u, w), t);
    }

    fn add_canonical(&mut self, key: (Word, Word), t: GroupAlg<R>) {
        if t.is_empty() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(t);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&t);
                if o.get().is_empty() {
                    o.remove();
                }
            }
        }
    }

    /// Keeps the terms whose (vector word, covector word) satisfy `keep`.
    pub fn filter(&self, keep: impl Fn(&[u8], &[u8]) -> bool) -> Self {
        Tvw {
            pairing: self.pairing.clone(),
            terms: self
                .terms
                .iter()
                .filter(|((u, w), _)| keep(u, w))
                .map(|(k, t)| (k.clone(), t.clone()))
                .collect(),
        }
    }

    /// The part with vector degree p and covector degree q.
    pub fn homogeneous(&self, p: usize, q: usize) -> Self {
        self.filter(|u, w| u.len() == p && w.len() == q)
    }

    /// The set of (vector degree, covector degree) pairs present.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> =
            self.terms.keys().map(|(u, w)| (u.len(), w.len())).collect();
        v.sort();
        v.dedup();
        v
    }

    /// The middle part of the term with empty words.
    pub fn constant(&self) -> GroupAlg<R> {
        self.terms
            .get(&(Vec::new(), Vec::new()))
            .cloned()
            .unwrap_or_default()
    }

    /// Largest point moved by a middle part.
    pub fn group_degree(&self) -> usize {
        self.terms.values().map(|t| t.degree()).max().unwrap_or(0)
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Tvw<S> {
        let mut out = Tvw {
            pairing: self.pairing.clone(),
            terms: BTreeMap::new(),
        };
        for (k, t) in &self.terms {
            out.add_canonical(k.clone(), t.map_coeffs(&f));
        }
        out
    }

    /// f_b · self.
    pub fn left_covector(&self, b: u8, c: &Pairing) -> Self {
        let mut out = Tvw {
            pairing: self.pairing.clone(),
            terms: BTreeMap::new(),
        };
        for ((v, w), t) in &self.terms {
            let p = v.len();
            // f_b e_V t = e_V (s_p⋯s_1) α(t) f_b + contractions; s_V is preserved on the left
            let main = t.shift(1).left_perm(&down_cycle(p + 1, 1));
            let mut nw = Vec::with_capacity(w.len() + 1);
            nw.push(b);
            nw.extend_from_slice(w);
            if w.contains(&b) {
                out.insert(v.clone(), main, nw, false, true);
            } else {
                let (k, s) = sort_word(&nw);
                out.add_canonical((v.clone(), k), main.right_perm(&s.inverse()));
            }
            if c.is_zero() {
                continue;
            }
            // equal letters give equal contractions, so take each run once with its length
            let mut k = 0;
            while k < p {
                let mut end = k + 1;
                while end < p && v[end] == v[k] {
                    end += 1;
                }
                let cab = c.coeff(v[k], b);
                if !rat::is_zero(&cab) {
                    let mult = rat::int((end - k) as i64);
                    let mid = t.left_perm(&down_cycle(p, end)).scale(&(cab * mult));
                    let mut nv = v.clone();
                    nv.remove(end - 1);
                    out.add_canonical((nv, w.clone()), mid);
                }
                k = end;
            }
        }
        out
    }

    /// e_a · self.
    pub fn left_vector(&self, a: u8) -> Self {
        self.left_word_group(&[a], &GroupAlg::one())
    }

    /// g · self for a group-algebra element g.
    pub fn left_group(&self, g: &GroupAlg<R>) -> Self {
        self.left_word_group(&[], g)
    }

    /// e_U g · self.
    fn left_word_group(&self, u: &[u8], g: &GroupAlg<R>) -> Self {
        let mut out = Tvw {
            pairing: self.pairing.clone(),
            terms: BTreeMap::new(),
        };
        out.accumulate_left(u, g, self);
        out
    }

    fn accumulate_left(&mut self, u: &[u8], g: &GroupAlg<R>, x: &Tvw<R>) {
        for ((v, w), t) in &x.terms {
            let mid = g.shift(v.len()).times(t);
            if u.is_empty() {
                // α^p(g) commutes with s_V
                self.add_canonical((v.clone(), w.clone()), mid);
            } else {
                let mut nu = v.clone();
                nu.extend_from_slice(u);
                self.insert(nu, mid, w.clone(), true, false);
            }
        }
    }

    fn covector_chain(
        cache: &mut HashMap<Word, Tvw<R>>,
        w: &[u8],
        base: &Tvw<R>,
        c: &Pairing,
    ) -> Tvw<R> {
        if w.is_empty() {
            return base.clone();
        }
        if let Some(x) = cache.get(w) {
            return x.clone();
        }
        let rest = Self::covector_chain(cache, &w[1..], base, c);
        let x = rest.left_covector(w[0], c);
        cache.insert(w.to_vec(), x.clone());
        x
    }
}

impl<R: Ring> Ring for Tvw<R> {
    fn zero() -> Self {
        Tvw::new()
    }
    fn one() -> Self {
        Tvw::scalar(R::one())
    }
    fn from_rat(r: &Rat) -> Self {
        Tvw::scalar(R::from_rat(r))
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
        self.pairing = merge_pairing(&self.pairing, &other.pairing);
        for (k, t) in &other.terms {
            self.add_canonical(k.clone(), t.clone());
        }
        check_terms(self.terms.len());
    }
    fn times(&self, other: &Self) -> Self {
        let pairing = merge_pairing(&self.pairing, &other.pairing);
        let c = pairing.clone().unwrap_or(Pairing::Zero);
        let mut out = Tvw {
            pairing,
            terms: BTreeMap::new(),
        };
        let mut cache = HashMap::new();
        for ((u, w), g) in &self.terms {
            let x = Self::covector_chain(&mut cache, w, other, &c);
            out.accumulate_left(u, g, &x);
            check_terms(out.terms.len());
        }
        out
    }
    fn scale(&self, r: &Rat) -> Self {
        if rat::is_zero(r) {
            return Tvw {
                pairing: self.pairing.clone(),
                terms: BTreeMap::new(),
            };
        }
        Tvw {
            pairing: self.pairing.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, t)| (k.clone(), t.scale(r)))
                .collect(),
        }
    }
    fn term_count(&self) -> usize {
        self.terms.values().map(|t| t.term_count()).sum()
    }
}

fn word_text(u: &[u8], star: bool) -> String {
    let prefix = if star { "e*" } else { "e" };
    u.iter()
        .map(|a| format!("{prefix}{a}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// "e2 e1 . (1 2) . e*1": vector part as written left to right, then the
/// permutation, then the covector part. The identity permutation is left out
/// unless both words are empty.
fn monomial_text(u: &[u8], sigma: &Perm, w: &[u8]) -> String {
    let mut parts = Vec::new();
    if !u.is_empty() {
        let rev: Vec<u8> = u.iter().rev().copied().collect();
        parts.push(word_text(&rev, false));
    }
    if !sigma.is_identity() || (u.is_empty() && w.is_empty()) {
        parts.push(sigma.to_string());
    }
    if !w.is_empty() {
        parts.push(word_text(w, true));
    }
    parts.join(" . ")
}

impl<R: Ring + fmt::Display> fmt::Display for Tvw<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for ((u, w), t) in &self.terms {
            for (s, c) in t.terms() {
                let m = monomial_text(u, s, w);
                let cs = c.to_string();
                parts.push(if cs == "1" {
                    m
                } else if R::COMMUTATIVE && !cs.contains(' ') {
                    format!("{cs}*{m}")
                } else {
                    format!("[{cs}]*{m}")
                });
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring> fmt::Debug for Tvw<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl Tvw<Rat> {
    /// Parses the text form. Every monomial is read as the product of its factors,
    /// so non-canonical input such as "e1 e2" is accepted and normal-ordered.
    pub fn parse(s: &str, pairing: Option<Pairing>) -> Result<Tvw<Rat>> {
        let s = s.trim();
        let mut acc = Tvw {
            pairing: pairing.clone(),
            terms: BTreeMap::new(),
        };
        if s == "0" {
            return Ok(acc);
        }
        for mono in s.split(" + ") {
            let (coeff, body) = match mono.split_once('*') {
                Some((c, rest)) if rat::parse_rat(c).is_some() => {
                    (rat::parse_rat(c).unwrap(), rest)
                }
                _ => (rat::one(), mono),
            };
            let mut x = Tvw {
                pairing: pairing.clone(),
                terms: BTreeMap::new(),
            };
            x.add_term(&[], GAElem::scalar(coeff), &[]);
            for seg in body.split(" . ") {
                let seg = seg.trim();
                if seg.starts_with('(') {
                    let sigma: Perm = seg.parse()?;
                    x = x.times(&Tvw::term(&[], GAElem::perm(sigma), &[]));
                    continue;
                }
                for tok in seg.split_whitespace() {
                    let f = if let Some(n) = tok.strip_prefix("e*") {
                        Tvw::term(&[], GAElem::one(), &[parse_letter(n)?])
                    } else if let Some(n) = tok.strip_prefix('e') {
                        Tvw::term(&[parse_letter(n)?], GAElem::one(), &[])
                    } else if tok == "1" {
                        Tvw::one()
                    } else {
                        return Err(Error::Parse(format!("unknown factor {tok:?}")));
                    };
                    x = x.times(&f);
                }
            }
            acc.add_assign_ref(&x);
        }
        acc.pairing = pairing;
        Ok(acc)
    }

    /// Array of {"e", "perm", "coeff", "estar"} objects, one per monomial, with
    /// words in storage order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut out = Vec::new();
        for ((u, w), t) in &self.terms {
            for (s, c) in t.terms() {
                out.push(serde_json::json!({
                    "e": u, "perm": s.to_string(), "coeff": c.to_string(), "estar": w,
                }));
            }
        }
        serde_json::Value::Array(out)
    }

    pub fn from_json(v: &serde_json::Value, pairing: Option<Pairing>) -> Result<Tvw<Rat>> {
        let bad = || Error::Parse(format!("malformed term list {v}"));
        let mut acc = Tvw {
            pairing,
            terms: BTreeMap::new(),
        };
        for item in v.as_array().ok_or_else(bad)? {
            let word = |key: &str| -> Result<Word> {
                item[key]
                    .as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .filter(|&a| (1..=255).contains(&a))
                            .map(|a| a as u8)
                            .ok_or_else(bad)
                    })
                    .collect()
            };
            let sigma: Perm = item["perm"].as_str().ok_or_else(bad)?.parse()?;
            let c = item["coeff"]
                .as_str()
                .and_then(rat::parse_rat)
                .ok_or_else(bad)?;
            acc.add_term(&word("e")?, GAElem::term(sigma, c), &word("estar")?);
        }
        Ok(acc)
    }
}

fn parse_letter(s: &str) -> Result<u8> {
    match s.parse::<u8>() {
        Ok(a) if a >= 1 => Ok(a),
        _ => Err(Error::Parse(format!("bad index {s:?}"))),
    }
}

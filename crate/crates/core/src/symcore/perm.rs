use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symcore::partition::Partition;

/// Finitely supported permutation of {1, 2, ...} in one-line notation.
///
/// Trailing fixed points are trimmed, so the identity is the empty sequence and
/// the embeddings S_p ⊂ S_{p+1} ⊂ ... are literal inclusions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity() -> Perm {
        Perm(Vec::new())
    }

    /// From one-line images on {1..m}.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let m = images.len();
        if m > u8::MAX as usize {
            return Err(Error::Invalid(format!("permutation degree {m} too large")));
        }
        let mut seen = vec![false; m + 1];
        for &x in images {
            if x == 0 || x > m || seen[x] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm::from_raw(images.iter().map(|&x| x as u8).collect()))
    }

    pub(crate) fn from_raw(mut v: Vec<u8>) -> Perm {
        while let Some(&last) = v.last() {
            if last as usize == v.len() {
                v.pop();
            } else {
                break;
            }
        }
        Perm(v)
    }

    /// The adjacent transposition s_i = (i i+1).
    pub fn s(i: usize) -> Perm {
        assert!(i >= 1);
        Perm::transposition(i, i + 1)
    }

    pub fn transposition(a: usize, b: usize) -> Perm {
        assert!(a >= 1 && b >= 1 && a != b);
        let m = a.max(b);
        let mut v: Vec<u8> = (1..=m as u8).collect();
        v.swap(a - 1, b - 1);
        Perm::from_raw(v)
    }

    /// The cycle c_1 -> c_2 -> ... -> c_k -> c_1.
    pub fn cycle(points: &[usize]) -> Result<Perm> {
        let m = points.iter().copied().max().unwrap_or(0);
        let mut v: Vec<usize> = (1..=m).collect();
        let mut seen = std::collections::BTreeSet::new();
        for &x in points {
            if x == 0 || !seen.insert(x) {
                return Err(Error::Invalid(format!("bad cycle {points:?}")));
            }
        }
        for k in 0..points.len() {
            v[points[k] - 1] = points[(k + 1) % points.len()];
        }
        Perm::from_images(&v)
    }

    /// Reversal ε of {1..p}: k ↦ p+1−k.
    pub fn reversal(p: usize) -> Perm {
        Perm::from_raw((1..=p as u8).rev().collect())
    }

    /// Image of k (1-based).
    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        if k >= 1 && k <= self.0.len() {
            self.0[k - 1] as usize
        } else {
            k
        }
    }

    /// Largest moved point, 0 for the identity.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// One-line images on {1..m} for m ≥ degree.
    pub fn images(&self, m: usize) -> Vec<usize> {
        (1..=m.max(self.degree())).map(|k| self.apply(k)).collect()
    }

    /// a∘b, i.e. (a∘b)(k) = a(b(k)).
    pub fn compose(&self, b: &Perm) -> Perm {
        let m = self.degree().max(b.degree());
        Perm::from_raw((1..=m).map(|k| self.apply(b.apply(k)) as u8).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (k, &x) in self.0.iter().enumerate() {
            v[x as usize - 1] = (k + 1) as u8;
        }
        Perm(v)
    }

    pub fn inversions(&self) -> usize {
        let v = &self.0;
        let mut c = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// +1 or −1.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// α^k: fixes 1..k and maps j+k ↦ a(j)+k.
    pub fn shift(&self, k: usize) -> Perm {
        if self.is_identity() || k == 0 {
            return self.clone();
        }
        let mut v: Vec<u8> = (1..=k as u8).collect();
        v.extend(self.0.iter().map(|&x| x + k as u8));
        Perm(v)
    }

    /// Cycles of length ≥ 2, each starting at its smallest point, sorted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.degree();
        let mut seen = vec![false; m + 1];
        let mut out = Vec::new();
        for s in 1..=m {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Cycle lengths on {1..p}, fixed points included.
    pub fn cycle_type(&self, p: usize) -> Result<Partition> {
        if self.degree() > p {
            return Err(Error::Invalid(format!("{self} moves a point beyond {p}")));
        }
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, p - moved));
        Ok(Partition::from_unsorted(lens))
    }

    /// A word (i_1, ..., i_k) with self = s_{i_1} ∘ ... ∘ s_{i_k}, of minimal length.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.images(self.degree());
        let mut word = Vec::new();
        // self = w ∘ s_i whenever w(i) > w(i+1) for w = self ∘ s_i; peel from the right.
        loop {
            let mut found = None;
            for i in 0..v.len().saturating_sub(1) {
                if v[i] > v[i + 1] {
                    found = Some(i);
                    break;
                }
            }
            match found {
                Some(i) => {
                    v.swap(i, i + 1);
                    word.push(i + 1);
                }
                None => break,
            }
        }
        word.reverse();
        word
    }

    /// All permutations of {1..p}, ordered lexicographically by one-line notation.
    pub fn all(p: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=p as u8).collect();
        loop {
            out.push(Perm::from_raw(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..cur.len().saturating_sub(1))
                .rev()
                .find(|&i| cur[i] < cur[i + 1])
            else {
                break;
            };
            let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Permutations fixing every position outside the given blocks of consecutive
    /// positions and preserving each block (a Young subgroup).
    pub fn young_subgroup(blocks: &[usize]) -> Vec<Perm> {
        let mut acc = vec![Perm::identity()];
        let mut offset = 0;
        for &b in blocks {
            if b > 1 {
                let block: Vec<Perm> = Perm::all(b).into_iter().map(|p| p.shift(offset)).collect();
                acc = acc
                    .iter()
                    .flat_map(|x| block.iter().map(move |y| x.compose(y)))
                    .collect();
            }
            offset += b;
        }
        acc.sort();
        acc
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Cycle notation, e.g. "(1 2)(3 4 5)"; "()" or "id" for the identity.
    /// Cycles are composed right to left.
    fn from_str(s: &str) -> Result<Perm> {
        let s = s.trim();
        if s.is_empty() || s == "id" || s == "()" {
            return Ok(Perm::identity());
        }
        let mut acc = Perm::identity();
        let mut rest = s;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            let Some(body) = rest_trim.strip_prefix('(') else {
                return Err(Error::Parse(format!("expected '(' in {s:?}")));
            };
            let Some(end) = body.find(')') else {
                return Err(Error::Parse(format!("unclosed cycle in {s:?}")));
            };
            let pts: std::result::Result<Vec<usize>, _> = body[..end]
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>())
                .collect();
            let pts = pts.map_err(|e| Error::Parse(format!("{s:?}: {e}")))?;
            if !pts.is_empty() {
                acc = acc.compose(&Perm::cycle(&pts)?);
            }
            rest = body[end + 1..].trim_start();
        }
        Ok(acc)
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Perm, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

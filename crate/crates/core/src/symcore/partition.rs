use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::{self, Rat};

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// The one-row partition (p).
    pub fn row(p: usize) -> Partition {
        Partition::from_unsorted(vec![p])
    }

    /// The one-column partition (1^p).
    pub fn column(p: usize) -> Partition {
        Partition(vec![1; p])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// λ_i with 1-based i, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    /// Parts padded with zeros to length n.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (1..=n.max(self.len())).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(1);
        Partition(
            (1..=m)
                .map(|j| self.0.iter().filter(|&&x| x >= j).count())
                .collect(),
        )
    }

    /// Cells (i, j), 1-based, in row-reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &len) in self.0.iter().enumerate() {
            for j in 1..=len {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// z_λ = Π_i i^{m_i} m_i!, the centralizer order of a permutation of this cycle type.
    pub fn z(&self) -> Rat {
        let mut acc = rat::one();
        let mut k = 0;
        while k < self.0.len() {
            let v = self.0[k];
            let mut m = 0;
            while k < self.0.len() && self.0[k] == v {
                m += 1;
                k += 1;
            }
            acc *= rat::pow(&rat::int(v as i64), m as u32) * rat::factorial(m);
        }
        acc
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn dimension(&self) -> u64 {
        let conj = self.conjugate();
        let mut hooks = rat::one();
        for (i, j) in self.cells() {
            let h = self.part(i) - j + conj.part(j) - i + 1;
            hooks *= rat::int(h as i64);
        }
        rat::to_i64(&(rat::factorial(self.weight()) / hooks)).unwrap() as u64
    }

    /// All partitions of p, in decreasing lexicographic order: (p), (p−1,1), ...
    pub fn all(p: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in (1..=rem.min(max)).rev() {
                cur.push(k);
                rec(rem - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(p, p, &mut Vec::new(), &mut out);
        out
    }

    /// Distinct rearrangements of the parts padded with zeros to length n.
    pub fn distinct_rearrangements(&self, n: usize) -> Vec<Vec<usize>> {
        if self.len() > n {
            return Vec::new();
        }
        let mut v = self.padded(n);
        v.sort_unstable();
        let mut out = Vec::new();
        loop {
            out.push(v.clone());
            let Some(i) = (0..v.len().saturating_sub(1))
                .rev()
                .find(|&i| v[i] < v[i + 1])
            else {
                break;
            };
            let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
            v.swap(i, j);
            v[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts "2,1", "(2,1)", "2 1"; "" or "()" is the empty partition.
    fn from_str(s: &str) -> Result<Partition> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: std::result::Result<Vec<usize>, _> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect();
        let parts = parts.map_err(|e| Error::Parse(format!("partition {s:?}: {e}")))?;
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

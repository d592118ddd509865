use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symcore::partition::Partition;

/// Standard tableau: rows of a Young diagram filled bijectively by 1..p.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Tableau> {
        let t = Tableau { rows };
        let shape = Partition::new(t.rows.iter().map(|r| r.len()).collect())?;
        let p = shape.weight();
        let mut seen = vec![false; p + 1];
        for &x in t.rows.iter().flatten() {
            if x == 0 || x > p || seen[x] {
                return Err(Error::Invalid(format!("{t} is not a bijective filling")));
            }
            seen[x] = true;
        }
        if !t.is_standard() {
            return Err(Error::Invalid(format!("{t} is not standard")));
        }
        Ok(t)
    }

    fn is_standard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if i > 0 {
                for (j, &x) in row.iter().enumerate() {
                    if self.rows[i - 1][j] >= x {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).unwrap()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// (row, column), 1-based, of the cell holding k.
    pub fn position(&self, k: usize) -> Result<(usize, usize)> {
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(j) = row.iter().position(|&x| x == k) {
                return Ok((i + 1, j + 1));
            }
        }
        Err(Error::Invalid(format!("{k} is not an entry of {self}")))
    }

    /// c_T(k) = j − i.
    pub fn content(&self, k: usize) -> Result<i64> {
        let (i, j) = self.position(k)?;
        Ok(j as i64 - i as i64)
    }

    /// Contents (c_T(1), ..., c_T(p)).
    pub fn contents(&self) -> Vec<i64> {
        (1..=self.size())
            .map(|k| self.content(k).unwrap())
            .collect()
    }

    /// r_T(i) = c_T(i+1) − c_T(i).
    pub fn axial_distance(&self, i: usize) -> Result<i64> {
        Ok(self.content(i + 1)? - self.content(i)?)
    }

    /// s_i T: exchange i and i+1. May be non-standard.
    pub fn swap(&self, i: usize) -> Option<Tableau> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| {
                        if x == i {
                            i + 1
                        } else if x == i + 1 {
                            i
                        } else {
                            x
                        }
                    })
                    .collect()
            })
            .collect();
        let t = Tableau { rows };
        t.is_standard().then_some(t)
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All standard tableaux of shape λ, sorted by row-reading word.
pub fn std_tableaux(shape: &Partition) -> Vec<Tableau> {
    let p = shape.weight();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    fn rec(
        k: usize,
        p: usize,
        shape: &Partition,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if k > p {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for i in 0..rows.len() {
            let len = rows[i].len();
            if len < shape.parts()[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(k);
                rec(k + 1, p, shape, rows, out);
                rows[i].pop();
            }
        }
    }
    rec(1, p, shape, &mut rows, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// Semistandard fillings of shape λ with entries in 1..=n: rows weakly increase,
/// columns strictly increase. Each filling is returned as rows.
pub fn semistandard(shape: &Partition, n: usize) -> Vec<Vec<Vec<usize>>> {
    let cells = shape.cells();
    let mut filling: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        n: usize,
        filling: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if idx == cells.len() {
            out.push(filling.clone());
            return;
        }
        let (i, j) = cells[idx];
        let lo_row = if j > 1 { filling[i - 1][j - 2] } else { 1 };
        let lo_col = if i > 1 { filling[i - 2][j - 1] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            filling[i - 1][j - 1] = v;
            rec(idx + 1, cells, n, filling, out);
        }
        filling[i - 1][j - 1] = 0;
    }
    if shape.len() <= n {
        rec(0, &cells, n, &mut filling, &mut out);
    }
    out
}

/// Reverse semistandard fillings: rows weakly decrease, columns strictly decrease.
pub fn reverse_semistandard(shape: &Partition, n: usize) -> Vec<Vec<Vec<usize>>> {
    semistandard(shape, n)
        .into_iter()
        .map(|t| {
            t.into_iter()
                .map(|r| r.into_iter().map(|x| n + 1 - x).collect())
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn standard_tableaux_counts_and_order() {
        assert_eq!(std_tableaux(&part("2")).len(), 1);
        let t = std_tableaux(&part("2,1"));
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(t[1].rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(std_tableaux(&part("1,1,1")).len(), 1);
        for p in 1..7 {
            for l in Partition::all(p) {
                assert_eq!(std_tableaux(&l).len() as u64, l.dimension());
            }
        }
    }

    #[test]
    fn contents_of_example_tableau() {
        let t = Tableau::new(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(t.contents(), vec![0, -1, 1]);
        assert_eq!(t.axial_distance(1).unwrap(), -1);
        assert!(t.content(4).is_err());
    }

    #[test]
    fn content_multiset_of_431() {
        let l = part("4,3,1");
        let mut c: Vec<i64> = l
            .cells()
            .iter()
            .map(|&(i, j)| j as i64 - i as i64)
            .collect();
        c.sort();
        let mut expect = vec![0, 1, 2, 3, -1, 0, 1, -2];
        expect.sort();
        assert_eq!(c, expect);
        for t in std_tableaux(&l) {
            assert_eq!(t.content(1).unwrap(), 0);
        }
    }

    #[test]
    fn rejects_non_standard() {
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![2]]).is_err());
    }

    #[test]
    fn swaps() {
        let t = Tableau::new(vec![vec![1, 2], vec![3]]).unwrap();
        assert!(t.swap(1).is_none());
        assert_eq!(t.swap(2).unwrap().rows(), &[vec![1, 3], vec![2]]);
    }

    #[test]
    fn semistandard_counts() {
        // s_(2)(1,1) = 3 and s_(2,1)(1,1,1) = 8
        assert_eq!(semistandard(&part("2"), 2).len(), 3);
        assert_eq!(semistandard(&part("2,1"), 3).len(), 8);
        assert_eq!(semistandard(&part("1,1,1"), 2).len(), 0);
        assert_eq!(reverse_semistandard(&part("2,1"), 3).len(), 8);
        assert_eq!(semistandard(&Partition::empty(), 2).len(), 1);
    }
}

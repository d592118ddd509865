use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::rat::{self, Rat};
use crate::ring::Ring;
use crate::symcore::Perm;

/// A dense matrix over a ring. Indices in the public API are 1-based.
#[derive(Clone, PartialEq)]
pub struct RingMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Size(format!(
                "{} entries for a {rows}×{cols} matrix",
                data.len()
            )));
        }
        Ok(RingMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_rat(m: &RatMatrix) -> Self {
        Self::from_fn(m.rows(), m.cols(), |i, j| R::from_rat(m.get(i - 1, j - 1)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[(i - 1) * self.cols + j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, x: R) {
        self.data[(i - 1) * self.cols + j - 1] = x;
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingMatrix<S> {
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// X_{IJ} = (X_{i_a j_b}).
    pub fn sub(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        self.check_indices(rows, cols)?;
        Ok(Self::from_fn(rows.len(), cols.len(), |a, b| {
            self.get(rows[a - 1], cols[b - 1]).clone()
        }))
    }

    /// X_{IJ} + 1_{IJ} diag(a_1, …, a_r): entry (a,b) gains a_b when i_a = j_b.
    pub fn sub_shifted(&self, rows: &[usize], cols: &[usize], params: &[Rat]) -> Result<Self> {
        self.check_indices(rows, cols)?;
        if params.len() != cols.len() {
            return Err(Error::Size(format!(
                "{} parameters for {} columns",
                params.len(),
                cols.len()
            )));
        }
        Ok(Self::from_fn(rows.len(), cols.len(), |a, b| {
            let x = self.get(rows[a - 1], cols[b - 1]);
            if rows[a - 1] == cols[b - 1] && !rat::is_zero(&params[b - 1]) {
                x.plus(&R::from_rat(&params[b - 1]))
            } else {
                x.clone()
            }
        }))
    }

    fn check_indices(&self, rows: &[usize], cols: &[usize]) -> Result<()> {
        if rows.iter().any(|&i| i == 0 || i > self.rows)
            || cols.iter().any(|&j| j == 0 || j > self.cols)
        {
            return Err(Error::Invalid(format!(
                "indices {rows:?}, {cols:?} outside a {}×{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Size(format!(
                "{}×{} times {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, k| {
            let mut acc = R::zero();
            for j in 1..=self.cols {
                acc.add_assign_ref(&self.get(i, j).times(other.get(j, k)));
            }
            acc
        }))
    }

    /// σX = (X_{σ⁻¹(i) j}).
    pub fn left_perm(&self, sigma: &Perm) -> Self {
        let inv = sigma.inverse();
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(inv.apply(i), j).clone()
        })
    }

    /// Xσ = (X_{i σ(j)}).
    pub fn right_perm(&self, sigma: &Perm) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, sigma.apply(j)).clone()
        })
    }

    /// g X h for scalar matrices g, h.
    pub fn scalar_sandwich(&self, g: &RatMatrix, h: &RatMatrix) -> Result<Self> {
        if g.cols() != self.rows || h.rows() != self.cols {
            return Err(Error::Size("scalar matrices do not fit".into()));
        }
        Ok(Self::from_fn(g.rows(), h.cols(), |i, l| {
            let mut acc = R::zero();
            for j in 1..=self.rows {
                for k in 1..=self.cols {
                    let c = g.get(i - 1, j - 1) * h.get(k - 1, l - 1);
                    if !rat::is_zero(&c) {
                        acc.add_assign_ref(&self.get(j, k).scale(&c));
                    }
                }
            }
            acc
        }))
    }

    /// g X g⁻¹.
    pub fn conjugate(&self, g: &RatMatrix) -> Result<Self> {
        let inv = g
            .inverse()
            .ok_or_else(|| Error::Invalid("singular conjugating matrix".into()))?;
        self.scalar_sandwich(g, &inv)
    }
}

impl RingMatrix<Rat> {
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |i, j| rat::int(rows[i - 1][j - 1]))
    }
}

impl<R: Ring + fmt::Display> fmt::Display for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols)
                .map(|j| self.get(i, j).to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring + fmt::Debug> fmt::Debug for RingMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingMatrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}

//! Exact linear algebra: dense rational matrices, sparse column matrices,
//! incremental echelon bases over ℚ and over F_p with p = 2^61 − 1.

use std::collections::BTreeMap;
use std::fmt;

use crate::rat::{self, Rat};

/// Field operations needed by the elimination routines.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl Field for Rat {
    fn zero() -> Self {
        rat::zero()
    }
    fn one() -> Self {
        rat::one()
    }
    fn is_zero(&self) -> bool {
        rat::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        rat::recip(self)
    }
}

pub const MODULUS: u64 = (1 << 61) - 1;

/// Element of F_p, p = 2^61 − 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp(pub u64);

impl Fp {
    pub fn new(x: i64) -> Fp {
        let m = MODULUS as i128;
        Fp((((x as i128) % m + m) % m) as u64)
    }

    /// Reduction of a rational; fails if the denominator vanishes mod p.
    pub fn from_rat(r: &Rat) -> Option<Fp> {
        use malachite_base::num::arithmetic::traits::Mod;
        let m = malachite_nz::natural::Natural::from(MODULUS);
        let num = r.numerator_ref().clone().mod_op(&m);
        let den = r.denominator_ref().clone().mod_op(&m);
        let num = u64::try_from(&num).ok()?;
        let den = u64::try_from(&den).ok()?;
        if den == 0 {
            return None;
        }
        let s = if *r < 0 { Fp(num).neg() } else { Fp(num) };
        Some(s.mul(&Fp(den).inv()))
    }

    fn neg(self) -> Fp {
        if self.0 == 0 {
            self
        } else {
            Fp(MODULUS - self.0)
        }
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= MODULUS { s - MODULUS } else { s })
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        let prod = self.0 as u128 * o.0 as u128;
        // 2^61 ≡ 1 mod p
        let lo = (prod as u64) & MODULUS;
        let hi = (prod >> 61) as u64;
        let s = lo + hi;
        Fp(if s >= MODULUS { s - MODULUS } else { s })
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_p");
        self.pow(MODULUS - 2)
    }
}

/// Sparse vector: strictly increasing indices, no zero entries.
pub type SparseVec<F> = Vec<(usize, F)>;

/// a + c·b.
pub fn axpy<F: Field>(a: &SparseVec<F>, c: &F, b: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c.mul(&b[j].1)));
            j += 1;
        } else {
            let v = a[i].1.add(&c.mul(&b[j].1));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_from_dense<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_from_map(m: BTreeMap<usize, Rat>) -> SparseVec<Rat> {
    m.into_iter().filter(|(_, x)| !rat::is_zero(x)).collect()
}

/// Row echelon basis grown one vector at a time. Each stored row has its pivot
/// (smallest index) normalized to 1.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for Echelon<F> {
    fn default() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of v after elimination against the basis.
    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        let mut start = 0;
        loop {
            let Some(pos) = v[start..]
                .iter()
                .position(|(i, _)| self.rows.contains_key(i))
            else {
                return v;
            };
            let k = start + pos;
            let (piv, c) = v[k].clone();
            let row = &self.rows[&piv];
            v = axpy(&v, &F::zero().sub(&c), row);
            start = k;
        }
    }

    /// Adds v to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.inv();
        let r: SparseVec<F> = r.into_iter().map(|(i, x)| (i, x.mul(&inv))).collect();
        self.rows.insert(r[0].0, r);
        true
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.rows.values()
    }

    /// Basis of {x : r·x = 0 for every stored row r} in a space of dimension `ncols`.
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseVec<F>> {
        // back-substitution into reduced row echelon form
        let mut rref: BTreeMap<usize, SparseVec<F>> = BTreeMap::new();
        for (&piv, row) in self.rows.iter().rev() {
            let mut r = row.clone();
            let mut k = 1;
            while k < r.len() {
                let (c, x) = r[k].clone();
                if let Some(other) = rref.get(&c) {
                    r = axpy(&r, &F::zero().sub(&x), other);
                } else {
                    k += 1;
                }
            }
            rref.insert(piv, r);
        }
        let mut out = Vec::new();
        for f in 0..ncols {
            if rref.contains_key(&f) {
                continue;
            }
            let mut v: Vec<(usize, F)> = vec![(f, F::one())];
            for (&piv, r) in &rref {
                if let Ok(pos) = r.binary_search_by_key(&f, |e| e.0) {
                    v.push((piv, F::zero().sub(&r[pos].1)));
                }
            }
            v.sort_by_key(|e| e.0);
            out.push(v);
        }
        out
    }
}

/// Sparse matrix stored by columns: column j is the image of basis vector j.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseMat {
    nrows: usize,
    cols: Vec<SparseVec<Rat>>,
}

impl SparseMat {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMat {
            nrows,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat {
            nrows: n,
            cols: (0..n).map(|i| vec![(i, rat::one())]).collect(),
        }
    }

    pub fn from_cols(nrows: usize, cols: Vec<SparseVec<Rat>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.iter().all(|(i, _)| *i < nrows)));
        SparseMat { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SparseVec<Rat> {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        match self.cols[j].binary_search_by_key(&i, |e| e.0) {
            Ok(p) => self.cols[j][p].1.clone(),
            Err(_) => rat::zero(),
        }
    }

    pub fn apply(&self, v: &SparseVec<Rat>) -> SparseVec<Rat> {
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for (j, c) in v {
            for (i, a) in &self.cols[*j] {
                *acc.entry(*i).or_insert_with(rat::zero) += a * c;
            }
        }
        sparse_from_map(acc)
    }

    /// self·other.
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.ncols(), other.nrows, "dimension mismatch in product");
        SparseMat {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        self.axpy(&rat::one(), other)
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        self.axpy(&rat::int(-1), other)
    }

    /// self + c·other.
    pub fn axpy(&self, c: &Rat, other: &SparseMat) -> SparseMat {
        assert_eq!((self.nrows, self.ncols()), (other.nrows, other.ncols()));
        SparseMat {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| axpy(a, c, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> SparseMat {
        if rat::is_zero(c) {
            return SparseMat::zero(self.nrows, self.ncols());
        }
        SparseMat {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(i, x)| (*i, x * c)).collect())
                .collect(),
        }
    }

    pub fn commutator(&self, other: &SparseMat) -> SparseMat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Entries flattened column-major into a vector of length nrows·ncols.
    pub fn flatten(&self) -> SparseVec<Rat> {
        let mut out = Vec::with_capacity(self.nnz());
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                out.push((j * self.nrows + i, x.clone()));
            }
        }
        out
    }

    pub fn unflatten(nrows: usize, ncols: usize, v: &SparseVec<Rat>) -> SparseMat {
        let mut cols = vec![Vec::new(); ncols];
        for (k, x) in v {
            cols[k / nrows].push((k % nrows, x.clone()));
        }
        SparseMat { nrows, cols }
    }

    pub fn transpose(&self) -> SparseMat {
        let mut cols = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                cols[*i].push((j, x.clone()));
            }
        }
        SparseMat {
            nrows: self.ncols(),
            cols,
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for c in &self.cols {
            e.insert(c.clone());
        }
        e.rank()
    }

    /// Basis of the kernel.
    pub fn kernel(&self) -> Vec<SparseVec<Rat>> {
        let mut e = Echelon::new();
        for r in self.transpose().cols {
            e.insert(r);
        }
        e.nullspace(self.ncols())
    }

    pub fn to_dense(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.nrows, self.ncols());
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                m.set(*i, j, x.clone());
            }
        }
        m
    }
}

/// Dense rational matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat::int(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rat) {
        self.data[i * self.cols + j] = x;
    }

    pub fn mul(&self, o: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = RatMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if rat::is_zero(a) {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !rat::is_zero(b) {
                        out.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn sub(&self, o: &RatMatrix) -> RatMatrix {
        self.add(&o.scale(&rat::int(-1)))
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || rat::is_zero(self.get(i, j))))
    }

    pub fn diagonal(&self) -> Vec<Rat> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    /// Solves via Gauss–Jordan; None if singular or not square.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for c in 0..n {
            let piv = (c..n).find(|&r| !rat::is_zero(a.get(r, c)))?;
            if piv != c {
                for j in 0..n {
                    a.data.swap(piv * n + j, c * n + j);
                    inv.data.swap(piv * n + j, c * n + j);
                }
            }
            let f = rat::recip(a.get(c, c));
            for j in 0..n {
                a.data[c * n + j] *= &f;
                inv.data[c * n + j] *= &f;
            }
            for r in 0..n {
                if r == c || rat::is_zero(a.get(r, c)) {
                    continue;
                }
                let m = a.get(r, c).clone();
                for j in 0..n {
                    let x = a.get(c, j) * &m;
                    a.data[r * n + j] -= x;
                    let y = inv.get(c, j) * &m;
                    inv.data[r * n + j] -= y;
                }
            }
        }
        Some(inv)
    }

    pub fn rank(&self) -> usize {
        self.to_sparse().rank()
    }

    pub fn to_sparse(&self) -> SparseMat {
        SparseMat::from_cols(
            self.rows,
            (0..self.cols)
                .map(|j| {
                    sparse_from_dense(
                        &(0..self.rows)
                            .map(|i| self.get(i, j).clone())
                            .collect::<Vec<_>>(),
                    )
                })
                .collect(),
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .map(|j| serde_json::Value::String(self.get(i, j).to_string()))
                        .collect()
                })
                .collect(),
        )
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let r: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", r.join(" "))?;
        }
        Ok(())
    }
}

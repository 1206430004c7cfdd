//! Exact dense linear algebra over a field given by a [`Field`] value.

use std::fmt::Debug;

use crate::error::Result;
use crate::scalar::{QuadElt, QuadField};

pub trait Field {
    type Elt: Clone + PartialEq + Debug;
    fn zero(&self) -> Self::Elt;
    fn one(&self) -> Self::Elt;
    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn sub(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn neg(&self, a: &Self::Elt) -> Self::Elt;
    fn inv(&self, a: &Self::Elt) -> Result<Self::Elt>;
    fn is_zero(&self, a: &Self::Elt) -> bool;
}

impl Field for QuadField {
    type Elt = QuadElt;
    fn zero(&self) -> QuadElt {
        QuadField::zero(self)
    }
    fn one(&self) -> QuadElt {
        QuadField::one(self)
    }
    fn add(&self, a: &QuadElt, b: &QuadElt) -> QuadElt {
        QuadField::add(self, a, b)
    }
    fn sub(&self, a: &QuadElt, b: &QuadElt) -> QuadElt {
        QuadField::sub(self, a, b)
    }
    fn mul(&self, a: &QuadElt, b: &QuadElt) -> QuadElt {
        QuadField::mul(self, a, b)
    }
    fn neg(&self, a: &QuadElt) -> QuadElt {
        QuadField::neg(self, a)
    }
    fn inv(&self, a: &QuadElt) -> Result<QuadElt> {
        QuadField::inv(self, a)
    }
    fn is_zero(&self, a: &QuadElt) -> bool {
        a.is_zero()
    }
}

pub type Matrix<E> = Vec<Vec<E>>;

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Matrix<F::Elt> {
    vec![vec![f.zero(); cols]; rows]
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elt> {
    let mut m = zeros(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

pub fn transpose<E: Clone>(m: &Matrix<E>, cols: usize) -> Matrix<E> {
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F::Elt>, b: &Matrix<F::Elt>, b_cols: usize) -> Matrix<F::Elt> {
    a.iter()
        .map(|row| {
            let mut out = vec![f.zero(); b_cols];
            for (k, x) in row.iter().enumerate() {
                if f.is_zero(x) {
                    continue;
                }
                for (j, y) in b[k].iter().enumerate() {
                    if !f.is_zero(y) {
                        out[j] = f.add(&out[j], &f.mul(x, y));
                    }
                }
            }
            out
        })
        .collect()
}

/// `m · x` for a column vector `x`.
pub fn mat_vec<F: Field>(f: &F, m: &Matrix<F::Elt>, x: &[F::Elt]) -> Vec<F::Elt> {
    m.iter()
        .map(|row| {
            row.iter().zip(x).fold(
                f.zero(),
                |acc, (a, b)| {
                    if f.is_zero(a) || f.is_zero(b) {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, b))
                    }
                },
            )
        })
        .collect()
}

/// `x · m` for a row vector `x`.
pub fn vec_mat<F: Field>(f: &F, x: &[F::Elt], m: &Matrix<F::Elt>, cols: usize) -> Vec<F::Elt> {
    let mut out = vec![f.zero(); cols];
    for (k, a) in x.iter().enumerate() {
        if f.is_zero(a) {
            continue;
        }
        for (j, b) in m[k].iter().enumerate() {
            if !f.is_zero(b) {
                out[j] = f.add(&out[j], &f.mul(a, b));
            }
        }
    }
    out
}

/// Reduced row echelon form in place. Returns the pivot columns; the first
/// `pivots.len()` rows are the nonzero rows afterwards.
pub fn rref<F: Field>(f: &F, m: &mut Matrix<F::Elt>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || f.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !f.is_zero(p) {
                    *x = f.sub(x, &f.mul(&factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elt>, cols: usize) -> usize {
    let mut a = m.clone();
    rref(f, &mut a, cols).len()
}

/// Echelonized basis of the row space.
pub fn row_basis<F: Field>(f: &F, rows: &Matrix<F::Elt>, cols: usize) -> Matrix<F::Elt> {
    let mut a = rows.clone();
    let k = rref(f, &mut a, cols).len();
    a.truncate(k);
    a
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace<F: Field>(f: &F, m: &Matrix<F::Elt>, cols: usize) -> Matrix<F::Elt> {
    let mut a = m.clone();
    let pivots = rref(f, &mut a, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![f.zero(); cols];
            x[fc] = f.one();
            for (i, &pc) in pivots.iter().enumerate() {
                x[pc] = f.neg(&a[i][fc]);
            }
            x
        })
        .collect()
}

/// Some solution of `m x = b`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(f: &F, m: &Matrix<F::Elt>, b: &[F::Elt], cols: usize) -> Option<Vec<F::Elt>> {
    let mut a: Matrix<F::Elt> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(f, &mut a, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = a[i][cols].clone();
    }
    Some(x)
}

pub fn inverse<F: Field>(f: &F, m: &Matrix<F::Elt>) -> Option<Matrix<F::Elt>> {
    let n = m.len();
    let mut a: Matrix<F::Elt> =
        m.iter().zip(identity(f, n)).map(|(row, id)| row.iter().cloned().chain(id).collect()).collect();
    let pivots = rref(f, &mut a, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Whether `v` lies in the row space of the echelon basis `basis`.
pub fn in_row_space<F: Field>(f: &F, basis: &Matrix<F::Elt>, v: &[F::Elt], cols: usize) -> bool {
    let mut rows = basis.clone();
    rows.push(v.to_vec());
    rank(f, &rows, cols) == basis.len()
}

/// A subspace kept as fully reduced echelon rows, growable one vector at a time.
#[derive(Clone, Debug)]
pub struct EchelonBasis<E> {
    pub cols: usize,
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
}

impl<E: Clone + PartialEq + Debug> EchelonBasis<E> {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `v` minus its projection onto the span along the pivot columns.
    pub fn reduce<F: Field<Elt = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains<F: Field<Elt = E>>(&self, f: &F, v: &[E]) -> bool {
        self.reduce(f, v).iter().all(|x| f.is_zero(x))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert<F: Field<Elt = E>>(&mut self, f: &F, v: &[E]) -> bool {
        let mut r = self.reduce(f, v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("nonzero pivot");
        for x in r.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    /// Coordinates of `v` in this basis, or `None` when `v` is outside the span.
    pub fn coordinates<F: Field<Elt = E>>(&self, f: &F, v: &[E]) -> Option<Vec<E>> {
        if !self.contains(f, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Rows sorted by pivot column, giving a canonical reduced echelon form.
    pub fn canonical_rows(&self) -> Vec<Vec<E>> {
        let mut idx: Vec<usize> = (0..self.rows.len()).collect();
        idx.sort_by_key(|&i| self.pivots[i]);
        idx.into_iter().map(|i| self.rows[i].clone()).collect()
    }
}

//! Exact integer matrices and the Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not unimodular")]
    NotUnimodular,
}

/// Dense row-major matrix over the integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.data[i * c + j] = v.clone().into();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.data[i * cols.len() + j] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &BigInt) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Non-negative powers by repeated squaring.
    pub fn pow(&self, e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Rows `from..to`.
    pub fn row_block(&self, from: usize, to: usize) -> Matrix {
        Matrix {
            rows: to - from,
            cols: self.cols,
            data: self.data[from * self.cols..to * self.cols].to_vec(),
        }
    }

    /// Columns `from..to`.
    pub fn col_block(&self, from: usize, to: usize) -> Matrix {
        let mut out = Self::zeros(self.rows, to - from);
        for i in 0..self.rows {
            for j in from..to {
                out.data[i * (to - from) + j - from] = self.get(i, j).clone();
            }
        }
        out
    }

    /// `[self | other]`.
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i * cols + j] = self.get(i, j).clone();
            }
            for j in 0..other.cols {
                out.data[i * cols + self.cols + j] = other.get(i, j).clone();
            }
        }
        out
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<Matrix, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::Dimension("inverse of a non-square matrix".into()));
        }
        let s = smith_normal_form(self);
        if s.rank != self.rows || s.invariants.iter().any(|d| !d.is_one()) {
            return Err(MatrixError::NotUnimodular);
        }
        // U A V = I  =>  A^-1 = V U
        Ok(s.v.mul(&s.u))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += q * row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// `col[dst] += q * col[src]`.
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }

    /// Entries as `i64` if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64()).collect())
            .collect()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries((0..self.rows).map(|i| self.row(i).to_vec())).finish()
    }
}

impl fmt::Display for Matrix {
    /// Row-major decimal integers, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Result of [`smith_normal_form`]: `u * a * v = d`, with `u_inv`, `v_inv` the inverses.
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: Matrix,
    pub u_inv: Matrix,
    pub d: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub invariants: Vec<BigInt>,
    pub rank: usize,
}

/// Tracks the transforms, or skips them when only the diagonal is wanted.
struct Work {
    a: Matrix,
    u: Option<(Matrix, Matrix)>,
    v: Option<(Matrix, Matrix)>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some((u, ui)) = &mut self.u {
            u.swap_rows(i, j);
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some((v, vi)) = &mut self.v {
            v.swap_cols(i, j);
            vi.swap_rows(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_row(dst, src, q);
        if let Some((u, ui)) = &mut self.u {
            u.add_row(dst, src, q);
            ui.add_col(src, dst, &-q);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_col(dst, src, q);
        if let Some((v, vi)) = &mut self.v {
            v.add_col(dst, src, q);
            vi.add_row(src, dst, &-q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some((u, ui)) = &mut self.u {
            u.negate_row(i);
            ui.negate_col(i);
        }
    }
}

/// `round(x / p)`, so the remainder has absolute value at most `|p| / 2`.
fn nearest_quotient(x: &BigInt, p: &BigInt) -> BigInt {
    let (q, r) = x.div_mod_floor(p);
    if (&r * 2u32).abs() > p.abs() {
        q + 1
    } else {
        q
    }
}

fn reduce(mut w: Work) -> (Work, usize) {
    let (rows, cols) = (w.a.rows, w.a.cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = w.a.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < w.a.get(bi, bj).abs()) {
                    best = Some((i, j));
                    if x.abs().is_one() {
                        break;
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            // move the smallest entry of row t and column t onto the pivot
            let mut best = (t, t);
            for i in t + 1..rows {
                let x = w.a.get(i, t);
                if !x.is_zero() && x.abs() < w.a.get(best.0, best.1).abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                let x = w.a.get(t, j);
                if !x.is_zero() && x.abs() < w.a.get(best.0, best.1).abs() {
                    best = (t, j);
                }
            }
            w.swap_rows(t, best.0);
            w.swap_cols(t, best.1);
            let mut clean = true;
            for i in t + 1..rows {
                if !w.a.get(i, t).is_zero() {
                    let q = nearest_quotient(w.a.get(i, t), w.a.get(t, t));
                    w.add_row(i, t, &-q);
                    clean &= w.a.get(i, t).is_zero();
                }
            }
            for j in t + 1..cols {
                if !w.a.get(t, j).is_zero() {
                    let q = nearest_quotient(w.a.get(t, j), w.a.get(t, t));
                    w.add_col(j, t, &-q);
                    clean &= w.a.get(t, j).is_zero();
                }
            }
            if !clean {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let p = w.a.get(t, t).clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a.get(t, t).is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    (w, t)
}

/// Smith normal form with unimodular transforms: `u * a * v = d`.
pub fn smith_normal_form(a: &Matrix) -> Smith {
    let w = Work {
        a: a.clone(),
        u: Some((Matrix::identity(a.rows), Matrix::identity(a.rows))),
        v: Some((Matrix::identity(a.cols), Matrix::identity(a.cols))),
    };
    let (w, rank) = reduce(w);
    let (u, u_inv) = w.u.expect("tracked");
    let (v, v_inv) = w.v.expect("tracked");
    let invariants = (0..rank).map(|i| w.a.get(i, i).clone()).collect();
    Smith { u, u_inv, d: w.a, v, v_inv, invariants, rank }
}

/// Diagonal of the Smith normal form only; cheaper for tall matrices.
pub fn smith_invariants(a: &Matrix) -> Vec<BigInt> {
    let (w, rank) = reduce(Work { a: a.clone(), u: None, v: None });
    (0..rank).map(|i| w.a.get(i, i).clone()).collect()
}

/// A basis of the integer kernel `{x : a x = 0}`, as columns. The basis is
/// saturated: it spans every integer solution.
pub fn kernel_basis(a: &Matrix) -> Matrix {
    let s = smith_normal_form(a);
    s.v.col_block(s.rank, a.cols)
}

/// A basis of the lattice spanned by the columns of `a`, as columns.
pub fn column_basis(a: &Matrix) -> Matrix {
    let s = smith_normal_form(a);
    // a = u_inv d v_inv, so the span is u_inv applied to the nonzero part of d.
    let mut out = s.u_inv.col_block(0, s.rank);
    for (j, d) in s.invariants.iter().enumerate() {
        for i in 0..out.rows {
            let v = out.get(i, j) * d;
            out.set(i, j, v);
        }
    }
    out
}

//! Dense matrices over a prime field F_p.
//!
//! Vectors are rows. A matrix with `r` rows and `c` columns acts on row
//! vectors of length `r` from the right.

use std::fmt;

/// Arithmetic in F_p for a small prime `p`.
#[inline]
pub fn fadd(p: u32, a: u32, b: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn fsub(p: u32, a: u32, b: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn fmul(p: u32, a: u32, b: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
pub fn fneg(p: u32, a: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn finv(p: u32, a: u32) -> u32 {
    assert!(a % p != 0, "inverse of zero in F_{p}");
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `y += c * x` over F_p.
#[inline]
pub fn axpy(p: u32, y: &mut [u32], c: u32, x: &[u32]) {
    if c == 0 {
        return;
    }
    for (a, &b) in y.iter_mut().zip(x) {
        if b != 0 {
            *a = fadd(p, *a, fmul(p, c, b));
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix<F_{}> {}x{}", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of row reduction: the reduced matrix (zero rows dropped) and its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub basis: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| x % p));
        }
        Matrix { p, rows: rows.len(), cols, data }
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, f: impl Fn(usize, usize) -> u32) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = f(r, c) % p;
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn push_row(&mut self, v: &[u32]) {
        assert_eq!(v.len(), self.cols);
        self.data.extend_from_slice(v);
        self.rows += 1;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.p, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.p;
        let mut out = Matrix::zeros(p, self.rows, other.cols);
        for r in 0..self.rows {
            let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k];
                if a != 0 {
                    axpy(p, dst, a, other.row(k));
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a != 0 {
                axpy(self.p, &mut out, a, self.row(k));
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| fadd(p, a, b)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| fsub(p, a, b)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let p = self.p;
        let data = self.data.iter().map(|&a| fmul(p, a, c % p)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn add_assign_scaled(&mut self, c: u32, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        axpy(self.p, &mut self.data, c % self.p, &other.data);
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        Matrix::from_fn(self.p, self.rows, cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                other.get(r, c - self.cols)
            }
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.p, 0, self.cols);
        for &i in idx {
            m.push_row(self.row(i));
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.p, self.rows, idx.len(), |r, c| self.get(r, idx[c]))
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c);
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.p, rows, cols, |r, c| self.get(r0 + r, c0 + c))
    }

    /// Reduced row echelon form with zero rows removed.
    pub fn rref(&self) -> Echelon {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(piv) = (lead..m.rows).find(|&r| m.get(r, c) != 0) else { continue };
            if piv != lead {
                for k in 0..m.cols {
                    m.data.swap(piv * m.cols + k, lead * m.cols + k);
                }
            }
            let inv = finv(p, m.get(lead, c));
            if inv != 1 {
                for x in m.row_mut(lead) {
                    *x = fmul(p, *x, inv);
                }
            }
            let pivot_row = m.row(lead).to_vec();
            for r in 0..m.rows {
                if r != lead {
                    let f = m.get(r, c);
                    if f != 0 {
                        axpy(p, m.row_mut(r), fneg(p, f), &pivot_row);
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        m.data.truncate(lead * m.cols);
        m.rows = lead;
        Echelon { basis: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis (as rows) of `{x : x * self = 0}`.
    pub fn left_null_space(&self) -> Matrix {
        self.transpose().null_space()
    }

    /// Basis (as rows) of `{x : self * x^T = 0}`.
    pub fn null_space(&self) -> Matrix {
        let Echelon { basis, pivots } = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(p, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                let v = basis.get(r, f);
                if v != 0 {
                    out.set(k, pc, fneg(p, v));
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(self.p, 0, 0));
        }
        let aug = self.hstack(&Matrix::identity(self.p, n)).rref();
        if aug.pivots.len() < n || aug.pivots[n - 1] >= n {
            return None;
        }
        Some(aug.basis.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Solves `x * self = target` for a row vector `x`.
    pub fn solve_left(&self, target: &[u32]) -> Option<Vec<u32>> {
        let mut t = Matrix::zeros(self.p, 1, target.len());
        t.row_mut(0).copy_from_slice(target);
        self.solve_left_many(&t).map(|x| x.row(0).to_vec())
    }

    /// Solves `X * self = targets` row by row.
    pub fn solve_left_many(&self, targets: &Matrix) -> Option<Matrix> {
        assert_eq!(self.cols, targets.cols);
        let p = self.p;
        let k = self.rows;
        // Columns of [self^T | targets^T] reduced; the solution is read from the augmented part.
        let aug = self.transpose().hstack(&targets.transpose()).rref();
        let mut x = Matrix::zeros(p, targets.rows, k);
        for (r, &pc) in aug.pivots.iter().enumerate() {
            if pc >= k {
                return None;
            }
            for t in 0..targets.rows {
                x.set(t, pc, aug.basis.get(r, k + t));
            }
        }
        Some(x)
    }
}

/// A subspace of F_p^d kept as a reduced echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(p, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(p: u32, ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(p, ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(m: &Matrix) -> Self {
        let e = m.rref();
        Subspace { basis: e.basis, pivots: e.pivots }
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn p(&self) -> u32 {
        self.basis.p()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    /// Reduces `v` against the basis; zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p();
        let mut w = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let f = w[pc];
            if f != 0 {
                axpy(p, &mut w, fneg(p, f), self.basis.row(r));
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|r| self.contains(other.basis.row(r)))
    }

    /// Coordinates of a member vector in the echelon basis.
    pub fn coords(&self, v: &[u32]) -> Vec<u32> {
        debug_assert!(self.contains(v));
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(&self.basis.vstack(&other.basis))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let stacked = self.basis.vstack(&other.basis);
        let null = stacked.left_null_space();
        let left = null.select_cols(&(0..self.dim()).collect::<Vec<_>>());
        Subspace::span(&left.mul(&self.basis))
    }

    /// Non-pivot coordinates: a basis of a complement made of unit vectors.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Coordinates of the image of `v` in the quotient by this subspace.
    pub fn quotient_coords(&self, v: &[u32]) -> Vec<u32> {
        let w = self.reduce(v);
        self.complement_coords().iter().map(|&c| w[c]).collect()
    }

    pub fn insert(&mut self, v: &[u32]) -> bool {
        let w = self.reduce(v);
        if w.iter().all(|&x| x == 0) {
            return false;
        }
        let stacked = self.basis.vstack(&Matrix::from_rows(self.p(), w.len(), &[w]));
        *self = Subspace::span(&stacked);
        true
    }
}

//! Dense exact linear algebra over a [`Field`](crate::field::Field).
//!
//! Everything downstream (hom spaces, radicals, approximations) reduces to
//! reduced row-echelon forms, nullspaces and exact solves computed here.
//! Matrices are immutable after construction and freely shareable.

use crate::error::Error;
use crate::field::Field;

/// Dense row-major matrix over the field `K`.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<K: Field> {
    pub field: K,
    rows: usize,
    cols: usize,
    entries: Vec<K::Elem>,
}

/// Result of row reduction: the reduced row-echelon form, the pivot columns
/// and the rank.
#[derive(Clone, Debug)]
pub struct Rref<K: Field> {
    pub matrix: Matrix<K>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<K: Field> Matrix<K> {
    pub fn zero(field: K, rows: usize, cols: usize) -> Self {
        let entries = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(field: K, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    /// Build from a row-major grid given as i64 entries (test and
    /// construction convenience).
    pub fn from_i64(field: K, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zero(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                let e = m.field.from_i64(*v);
                m.set(i, j, e);
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

    pub fn at(&self, r: usize, c: usize) -> &K::Elem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K::Elem) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn transpose(&self) -> Matrix<K> {
        let mut t = Matrix::zero(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.at(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.entries.iter_mut().zip(other.entries.iter()) {
            *a = self.field.add(a, b);
        }
        m
    }

    pub fn sub(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = self.clone();
        for (a, b) in m.entries.iter_mut().zip(other.entries.iter()) {
            *a = self.field.sub(a, b);
        }
        m
    }

    pub fn scale(&self, s: &K::Elem) -> Matrix<K> {
        let mut m = self.clone();
        for a in m.entries.iter_mut() {
            *a = self.field.mul(a, s);
        }
        m
    }

    pub fn mul(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let f = &self.field;
        let mut out = Matrix::zero(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let prod = f.mul(a, b);
                    let cur = out.at(i, j);
                    let sum = f.add(cur, &prod);
                    out.set(i, j, sum);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) || f.is_zero(&v[k]) {
                    continue;
                }
                let prod = f.mul(a, &v[k]);
                out[i] = f.add(&out[i], &prod);
            }
        }
        out
    }

    /// Matrix power; exponent 0 gives the identity (square matrices only).
    pub fn pow(&self, e: u32) -> Matrix<K> {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field.clone(), self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Stack `self` above `other`.
    pub fn vstack(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.cols);
        let mut m = Matrix::zero(self.field.clone(), self.rows + other.rows, self.cols);
        m.entries[..self.entries.len()].clone_from_slice(&self.entries);
        m.entries[self.entries.len()..].clone_from_slice(&other.entries);
        m
    }

    /// Concatenate `self` left of `other`.
    pub fn hstack(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zero(self.field.clone(), self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.at(r, c).clone());
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.at(r, c).clone());
            }
        }
        m
    }

    pub fn block_diag(field: K, blocks: &[&Matrix<K>]) -> Matrix<K> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zero(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m.set(ro + r, co + c, b.at(r, c).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: K, dim: usize, cols: &[Vec<K::Elem>]) -> Matrix<K> {
        let mut m = Matrix::zero(field, dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), dim);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn flatten(&self) -> Vec<K::Elem> {
        self.entries.clone()
    }

    pub fn trace(&self) -> K::Elem {
        assert_eq!(self.rows, self.cols);
        let f = &self.field;
        let mut t = f.zero();
        for i in 0..self.rows {
            t = f.add(&t, self.at(i, i));
        }
        t
    }

    /// Reduced row-echelon form with pivot bookkeeping.
    pub fn rref(&self) -> Rref<K> {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !f.is_zero(m.at(r, col)));
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.at(row, c).clone();
                    let b = m.at(pr, c).clone();
                    m.set(row, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = f.inv(m.at(row, col)).expect("nonzero pivot");
            if !f.is_one(m.at(row, col)) {
                for c in col..m.cols {
                    let v = f.mul(m.at(row, c), &inv);
                    m.set(row, c, v);
                }
            }
            for r in 0..m.rows {
                if r == row || f.is_zero(m.at(r, col)) {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let s = m.at(row, c);
                    if f.is_zero(s) {
                        continue;
                    }
                    let sub = f.mul(&factor, s);
                    let v = f.sub(m.at(r, c), &sub);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the kernel {v : M v = 0}, as column vectors. The basis is the
    /// standard one read off the rref (one vector per free column).
    pub fn nullspace(&self) -> Vec<Vec<K::Elem>> {
        let f = self.field.clone();
        let Rref {
            matrix: r, pivots, ..
        } = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![f.zero(); self.cols];
            vec[free] = f.one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                vec[pcol] = f.neg(r.at(prow, free));
            }
            basis.push(vec);
        }
        basis
    }

    /// Exact inverse; errors when the matrix is singular.
    pub fn inverse(&self) -> Result<Matrix<K>, Error> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field.clone(), n));
        let red = aug.rref();
        if red.pivots.iter().take(n).copied().ne(0..n) {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Matrix::zero(self.field.clone(), n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.matrix.at(r, c + n).clone());
            }
        }
        Ok(inv)
    }

    /// Basis of the column space, as column vectors (pivot columns of the
    /// original matrix).
    pub fn column_space(&self) -> Vec<Vec<K::Elem>> {
        let red = self.rref();
        red.pivots.iter().map(|&c| self.column(c)).collect()
    }
}

/// A solver for repeated exact solves A x = b with a fixed full-column-rank
/// A: factors once, then each solve is a cheap substitution.
#[derive(Clone, Debug)]
pub struct ColumnSolver<K: Field> {
    field: K,
    /// rref of [A | I], kept whole.
    reduced: Matrix<K>,
    pivots: Vec<usize>,
    a_rows: usize,
    a_cols: usize,
}

impl<K: Field> ColumnSolver<K> {
    /// `a` must have linearly independent columns.
    pub fn new(a: &Matrix<K>) -> Result<ColumnSolver<K>, Error> {
        let aug = a.hstack(&Matrix::identity(a.field.clone(), a.rows()));
        let red = aug.rref();
        let lead: Vec<usize> = red
            .pivots
            .iter()
            .copied()
            .filter(|&c| c < a.cols())
            .collect();
        if lead.len() != a.cols() {
            return Err(Error::SingularMatrix);
        }
        Ok(ColumnSolver {
            field: a.field.clone(),
            reduced: red.matrix,
            pivots: red.pivots,
            a_rows: a.rows(),
            a_cols: a.cols(),
        })
    }

    /// Solve A x = b exactly; `None` when b is outside the column space.
    pub fn solve(&self, b: &[K::Elem]) -> Option<Vec<K::Elem>> {
        assert_eq!(b.len(), self.a_rows);
        let f = &self.field;
        // The rref of [A | I] encodes row operations: row i of rref equals
        // (ops applied to A | ops). Applying the recorded ops to b and reading
        // off pivot rows gives the solution; non-pivot-of-A rows must vanish.
        let mut x = vec![f.zero(); self.a_cols];
        for (row, &p) in self.pivots.iter().enumerate() {
            // value of transformed b at this row:
            let mut v = f.zero();
            for c in 0..self.a_rows {
                let coef = self.reduced.at(row, self.a_cols + c);
                if f.is_zero(coef) || f.is_zero(&b[c]) {
                    continue;
                }
                let prod = f.mul(coef, &b[c]);
                v = f.add(&v, &prod);
            }
            if p < self.a_cols {
                x[p] = v;
            } else if !f.is_zero(&v) {
                return None; // inconsistent
            }
        }
        // rows beyond rank: transformed b must also vanish there
        for row in self.pivots.len()..self.a_rows {
            let mut v = f.zero();
            for c in 0..self.a_rows {
                let coef = self.reduced.at(row, self.a_cols + c);
                if f.is_zero(coef) || f.is_zero(&b[c]) {
                    continue;
                }
                let prod = f.mul(coef, &b[c]);
                v = f.add(&v, &prod);
            }
            if !f.is_zero(&v) {
                return None;
            }
        }
        Some(x)
    }
}

/// Incrementally row-reduced span of vectors, used for rank growth tests and
/// coordinate extraction against a fixed basis.
#[derive(Clone, Debug)]
pub struct LinearSpan<K: Field> {
    field: K,
    dim: usize,
    /// Reduced rows together with their expression in the inserted vectors
    /// (augmented coordinates).
    rows: Vec<(Vec<K::Elem>, Vec<K::Elem>)>,
    pivots: Vec<usize>,
    inserted: usize,
}

impl<K: Field> LinearSpan<K> {
    pub fn new(field: K, dim: usize) -> Self {
        LinearSpan {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[K::Elem]) -> (Vec<K::Elem>, Vec<K::Elem>) {
        let f = &self.field;
        let mut v = v.to_vec();
        let mut coeffs = vec![f.zero(); self.inserted];
        for ((row, rcoef), &p) in self.rows.iter().zip(self.pivots.iter()) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let factor = v[p].clone();
            for c in 0..self.dim {
                if f.is_zero(&row[c]) {
                    continue;
                }
                let sub = f.mul(&factor, &row[c]);
                v[c] = f.sub(&v[c], &sub);
            }
            for c in 0..rcoef.len() {
                if f.is_zero(&rcoef[c]) {
                    continue;
                }
                let sub = f.mul(&factor, &rcoef[c]);
                coeffs[c] = f.sub(&coeffs[c], &sub);
            }
        }
        (v, coeffs)
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &[K::Elem]) -> bool {
        assert_eq!(v.len(), self.dim);
        let f = self.field.clone();
        let (mut red, mut coeffs) = self.reduce(v);
        // coefficient of the newly inserted vector itself
        coeffs.push(f.one());
        for row in self.rows.iter_mut() {
            row.1.push(f.zero());
        }
        self.inserted += 1;
        let Some(p) = (0..self.dim).find(|&c| !f.is_zero(&red[c])) else {
            // dependent: drop the augmented column again to keep shapes equal
            for row in self.rows.iter_mut() {
                row.1.pop();
            }
            self.inserted -= 1;
            return false;
        };
        let inv = f.inv(&red[p]).expect("nonzero pivot");
        for c in 0..self.dim {
            red[c] = f.mul(&red[c], &inv);
        }
        for c in 0..coeffs.len() {
            coeffs[c] = f.mul(&coeffs[c], &inv);
        }
        // back-substitute into existing rows
        for ((row, rcoef), _) in self.rows.iter_mut().zip(self.pivots.iter()) {
            if f.is_zero(&row[p]) {
                continue;
            }
            let factor = row[p].clone();
            for c in 0..self.dim {
                if f.is_zero(&red[c]) {
                    continue;
                }
                let sub = f.mul(&factor, &red[c]);
                row[c] = f.sub(&row[c], &sub);
            }
            for c in 0..coeffs.len() {
                if f.is_zero(&coeffs[c]) {
                    continue;
                }
                let sub = f.mul(&factor, &coeffs[c]);
                rcoef[c] = f.sub(&rcoef[c], &sub);
            }
        }
        self.rows.push((red, coeffs));
        self.pivots.push(p);
        true
    }

    /// Does the span contain v?
    pub fn contains(&self, v: &[K::Elem]) -> bool {
        let (red, _) = self.reduce(v);
        red.iter().all(|e| self.field.is_zero(e))
    }

    /// Express v as a combination of the *inserted* vectors; `None` when v is
    /// outside the span. Only meaningful when every insert enlarged the span
    /// (a basis), which is how the hom-space extractors use it.
    pub fn coordinates(&self, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        let f = &self.field;
        let (red, coeffs) = self.reduce(v);
        if red.iter().any(|e| !f.is_zero(e)) {
            return None;
        }
        Some(coeffs.iter().map(|c| f.neg(c)).collect())
    }
}

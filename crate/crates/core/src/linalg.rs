//! Dense linear algebra over a [`FiniteField`].
//!
//! Vectors are plain `Vec<FieldElement>`; matrices are row-major. Every
//! elimination picks the leftmost available pivot and the topmost row
//! carrying it, so results are reproducible.

use std::ops::{Index, IndexMut};

use crate::field::{FieldElement, FiniteField};

pub type Vector = Vec<FieldElement>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = FieldElement;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &FieldElement {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut FieldElement {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(field: &FiniteField, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(field: &FiniteField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = FieldElement::ONE;
        }
        m
    }

    pub fn from_data(field: &FiniteField, rows: usize, cols: usize, data: Vec<FieldElement>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data length does not match its shape");
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &FiniteField, cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix { field: field.clone(), rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &FiniteField, rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == if i == j { FieldElement::ONE } else { FieldElement::ZERO }))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let base = i * other.cols;
                for (j, &b) in orow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[base + j] = f.add(out.data[base + j], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: FieldElement) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix { field: f.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[FieldElement]) -> Vector {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(FieldElement::ZERO, |acc, (&a, &b)| if a.is_zero() || b.is_zero() { acc } else { f.add(acc, f.mul(a, b)) })
            })
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = rref_in_place(&self.field, &mut m.data, m.rows, m.cols, m.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column in increasing order.
    pub fn right_kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&self.field, &r, &pivots)
    }

    /// Some `x` with `M x = b`, free variables set to zero; `None` if inconsistent.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let cols = self.cols + 1;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.push(b[i]);
        }
        let pivots = rref_in_place(&self.field, &mut data, self.rows, cols, self.cols);
        for i in pivots.len()..self.rows {
            if !data[i * cols + self.cols].is_zero() {
                return None;
            }
        }
        let mut x = vec![FieldElement::ZERO; self.cols];
        for (k, &pc) in pivots.iter().enumerate() {
            x[pc] = data[k * cols + self.cols];
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let cols = 2 * n;
        let mut data = Vec::with_capacity(n * cols);
        for i in 0..n {
            data.extend_from_slice(self.row(i));
            data.extend((0..n).map(|j| if i == j { FieldElement::ONE } else { FieldElement::ZERO }));
        }
        let pivots = rref_in_place(&self.field, &mut data, n, cols, n);
        if pivots.len() < n {
            return None;
        }
        let mut inv = Matrix::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = data[i * cols + n + j];
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

/// Row-reduce the first `pivot_cols` columns of a `rows x cols` row-major
/// block; returns the pivot columns. Rows past the pivot count are zero in
/// those columns afterwards.
fn rref_in_place(f: &FiniteField, data: &mut [FieldElement], rows: usize, cols: usize, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(data[r * cols + c]).expect("pivot is nonzero");
        for j in c..cols {
            data[r * cols + j] = f.mul(data[r * cols + j], inv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = data[i * cols + c];
            if factor.is_zero() {
                continue;
            }
            let nf = f.neg(factor);
            for j in c..cols {
                let x = data[r * cols + j];
                if !x.is_zero() {
                    data[i * cols + j] = f.add(data[i * cols + j], f.mul(nf, x));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref(f: &FiniteField, r: &Matrix, pivots: &[usize]) -> Vec<Vector> {
    let mut is_pivot = vec![false; r.cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..r.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![FieldElement::ZERO; r.cols];
            x[free] = FieldElement::ONE;
            for (k, &pc) in pivots.iter().enumerate() {
                x[pc] = f.neg(r[(k, free)]);
            }
            x
        })
        .collect()
}

pub fn is_zero_vector(v: &[FieldElement]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// `y += a x`
#[inline]
pub fn axpy(f: &FiniteField, y: &mut [FieldElement], a: FieldElement, x: &[FieldElement]) {
    if a.is_zero() {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = f.add(*yi, f.mul(a, xi));
        }
    }
}

pub fn scale_vector(f: &FiniteField, v: &[FieldElement], a: FieldElement) -> Vector {
    v.iter().map(|&x| f.mul(x, a)).collect()
}

/// Incrementally built semi-echelon basis of a span.
///
/// Each stored row has a `1` at its pivot and zeros at the pivots of all
/// earlier rows, and remembers how it is expressed in terms of the
/// independent vectors accepted so far. This gives rank, membership and
/// coordinates in one structure.
#[derive(Clone, Debug)]
pub struct SemiEchelon {
    field: FiniteField,
    len: usize,
    rows: Vec<(Vector, usize, Vector)>,
}

impl SemiEchelon {
    pub fn new(field: &FiniteField, len: usize) -> Self {
        SemiEchelon { field: field.clone(), len, rows: Vec::new() }
    }

    /// Accepts vectors in order, keeping the independent ones.
    pub fn from_vectors<'a>(field: &FiniteField, len: usize, vectors: impl IntoIterator<Item = &'a Vector>) -> Self {
        let mut s = Self::new(field, len);
        for v in vectors {
            let _ = s.insert(v);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.1).collect()
    }

    /// Residual of `v` after reduction and the coefficients (in terms of the
    /// accepted vectors) of the part that was removed.
    pub fn reduce(&self, v: &[FieldElement]) -> (Vector, Vector) {
        assert_eq!(v.len(), self.len);
        let f = &self.field;
        let mut r = v.to_vec();
        let mut coeffs = vec![FieldElement::ZERO; self.rows.len()];
        for (row, pivot, transform) in &self.rows {
            let c = r[*pivot];
            if c.is_zero() {
                continue;
            }
            axpy(f, &mut r, f.neg(c), row);
            axpy(f, &mut coeffs, c, transform);
        }
        (r, coeffs)
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        is_zero_vector(&self.reduce(v).0)
    }

    /// Coordinates of `v` with respect to the accepted vectors, if `v` lies in their span.
    pub fn coordinates(&self, v: &[FieldElement]) -> Option<Vector> {
        let (r, c) = self.reduce(v);
        is_zero_vector(&r).then_some(c)
    }

    /// Adds `v` if it is independent (returning its position among the
    /// accepted vectors); otherwise returns its coordinates.
    pub fn insert(&mut self, v: &[FieldElement]) -> Result<usize, Vector> {
        let (mut r, coeffs) = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return Err(coeffs);
        };
        let f = self.field.clone();
        let inv = f.inv(r[pivot]).expect("nonzero");
        for x in r.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // r = inv * (v - sum coeffs_k w_k), so the new row is expressed with
        // coefficient inv on the new vector and -inv * coeffs on the old ones.
        let k = self.rows.len();
        let mut transform = vec![FieldElement::ZERO; k + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            transform[i] = f.neg(f.mul(c, inv));
        }
        transform[k] = inv;
        for row in self.rows.iter_mut() {
            row.2.push(FieldElement::ZERO);
        }
        self.rows.push((r, pivot, transform));
        Ok(k)
    }
}

/// Minimal polynomial of `apply` on the cyclic subspace generated by `start`
/// (Krylov iteration). Coefficients low degree first, monic.
pub fn krylov_min_poly(field: &FiniteField, start: &[FieldElement], mut apply: impl FnMut(&[FieldElement]) -> Vector) -> Vector {
    let mut span = SemiEchelon::new(field, start.len());
    let mut v = start.to_vec();
    loop {
        match span.insert(&v) {
            Ok(_) => v = apply(&v),
            Err(coords) => {
                let mut poly: Vector = coords.iter().map(|&c| field.neg(c)).collect();
                poly.push(FieldElement::ONE);
                return poly;
            }
        }
    }
}

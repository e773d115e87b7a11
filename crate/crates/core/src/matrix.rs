//! Dense exact matrices and Gaussian elimination.

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Row-major dense matrix over `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    pub matrix: ExactMatrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self, LinAlgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinAlgError::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(ExactMatrix {
            rows: n,
            cols,
            entries,
        })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self, LinAlgError> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinAlgError::DimensionMismatch {
                    expected: rows,
                    got: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.entries[i * self.cols + j] = v;
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut F::Elem {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.entries.iter().all(|e| field.is_zero(e))
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, field: &F, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Self::zeros(field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                let neg_a = field.neg(a);
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !field.is_zero(b) {
                        field.sub_mul_assign(out.get_mut(i, j), &neg_a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, field: &F, v: &[F::Elem]) -> Result<Vec<F::Elem>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !field.is_zero(a) && !field.is_zero(b) {
                        field.sub_mul_assign(&mut acc, &field.neg(a), b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Reduces in place to row echelon form (pivots normalised to 1 but
    /// entries above pivots left alone) and returns the pivot columns.
    fn forward_eliminate(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !field.is_zero(self.get(i, c))) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = field.inv(self.get(r, c)).expect("pivot is nonzero");
            self.scale_row(field, r, c, &inv);
            let (head, tail) = self.entries.split_at_mut((r + 1) * self.cols);
            let pivot_row = &head[r * self.cols..];
            for row in tail.chunks_mut(self.cols) {
                let factor = row[c].clone();
                if field.is_zero(&factor) {
                    continue;
                }
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if !field.is_zero(p) {
                        field.sub_mul_assign(x, &factor, p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.entries.split_at_mut(hi * self.cols);
        head[lo * self.cols..(lo + 1) * self.cols].swap_with_slice(&mut tail[..self.cols]);
    }

    fn scale_row(&mut self, field: &F, r: usize, from: usize, by: &F::Elem) {
        let cols = self.cols;
        for x in &mut self.entries[r * cols + from..(r + 1) * cols] {
            if !field.is_zero(x) {
                *x = field.mul(x, by);
            }
        }
    }

    pub fn rank(&self, field: &F) -> usize {
        self.clone().forward_eliminate(field).len()
    }

    pub fn rref(&self, field: &F) -> Echelon<F> {
        let mut m = self.clone();
        let pivots = m.forward_eliminate(field);
        for (r, &c) in pivots.iter().enumerate().rev() {
            let (head, tail) = m.entries.split_at_mut(r * m.cols);
            let pivot_row = &tail[..m.cols];
            for row in head.chunks_mut(m.cols) {
                let factor = row[c].clone();
                if field.is_zero(&factor) {
                    continue;
                }
                for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if !field.is_zero(p) {
                        field.sub_mul_assign(x, &factor, p);
                    }
                }
            }
        }
        m.rows = pivots.len();
        m.entries.truncate(m.rows * m.cols);
        Echelon { matrix: m, pivots }
    }

    /// Basis of `{v : M v = 0}`, one vector per free column.
    pub fn kernel_basis(&self, field: &F) -> Vec<Vec<F::Elem>> {
        let Echelon { matrix, pivots } = self.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![field.zero(); self.cols];
                v[free] = field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = field.neg(matrix.get(r, free));
                }
                v
            })
            .collect()
    }

    /// Coordinates `c` with `M c = v`, or `None` when `v` is outside the
    /// column span. Free coordinates are set to zero.
    pub fn solve_in_span(&self, field: &F, v: &[F::Elem]) -> Result<Option<Vec<F::Elem>>, LinAlgError> {
        SpanSolver::new(field, self).solve(field, v)
    }
}

/// Precomputed elimination for repeated `solve_in_span` queries against a
/// fixed matrix.
#[derive(Debug, Clone)]
pub struct SpanSolver<F: Field> {
    rows: usize,
    cols: usize,
    /// `transform · M` is in reduced row echelon form.
    transform: ExactMatrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> SpanSolver<F> {
    pub fn new(field: &F, m: &ExactMatrix<F>) -> Self {
        let (rows, cols) = (m.rows, m.cols);
        // Augment [M | I] and reduce; the right block records the row operations.
        let mut aug = ExactMatrix::zeros(field, rows, cols + rows);
        for i in 0..rows {
            for j in 0..cols {
                aug.set(i, j, m.get(i, j).clone());
            }
            aug.set(i, cols + i, field.one());
        }
        let ech = aug.rref(field);
        let mut pivots = ech.pivots.clone();
        pivots.retain(|&p| p < cols);
        let mut transform = ExactMatrix::zeros(field, rows, rows);
        for (i, row) in ech.matrix.entries.chunks(cols + rows).enumerate() {
            for j in 0..rows {
                transform.set(i, j, row[cols + j].clone());
            }
        }
        SpanSolver {
            rows,
            cols,
            transform,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(&self, field: &F, v: &[F::Elem]) -> Result<Option<Vec<F::Elem>>, LinAlgError> {
        if v.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.rows,
                got: v.len(),
            });
        }
        let w = self.transform.apply(field, v)?;
        if w[self.pivots.len()..].iter().any(|x| !field.is_zero(x)) {
            return Ok(None);
        }
        let mut coords = vec![field.zero(); self.cols];
        for (r, &p) in self.pivots.iter().enumerate() {
            coords[p] = w[r].clone();
        }
        Ok(Some(coords))
    }
}

/// Row space built one vector at a time; each insert reports whether the
/// vector was independent of everything inserted before.
#[derive(Debug, Clone)]
pub struct IncrementalBasis<F: Field> {
    len: usize,
    /// `(pivot, row)`; each row is reduced against the pivots of earlier rows.
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> IncrementalBasis<F> {
    pub fn new(len: usize) -> Self {
        IncrementalBasis { len, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every stored pivot.
    pub fn residual(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.len, "vector length");
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            let c = w[*p].clone();
            if field.is_zero(&c) {
                continue;
            }
            for (x, r) in w.iter_mut().zip(row) {
                if !field.is_zero(r) {
                    field.sub_mul_assign(x, &c, r);
                }
            }
        }
        w
    }

    pub fn contains(&self, field: &F, v: &[F::Elem]) -> bool {
        self.residual(field, v).iter().all(|x| field.is_zero(x))
    }

    pub fn insert(&mut self, field: &F, v: &[F::Elem]) -> bool {
        let w = self.residual(field, v);
        let Some(p) = w.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        let inv = field.inv(&w[p]).expect("nonzero pivot");
        let row = w.iter().map(|x| field.mul(x, &inv)).collect();
        self.rows.push((p, row));
        true
    }
}

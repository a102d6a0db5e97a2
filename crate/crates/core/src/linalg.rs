//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! Everything is row reduction to the unique reduced row echelon form, with
//! pivots chosen as the first nonzero entry scanning each column top-down.
//! Because the RREF is unique, kernels and solutions come out in a canonical
//! form that golden tests can pin exactly.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
}

/// Row-major dense matrix of exact scalars.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            field,
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds an `n x cols.len()` matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(field: FieldSpec, n: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), n, "column length");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + &(a * b);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if self.cols != v.len() {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| dot(self.field, self.row(i), v))
            .collect())
    }

    /// Row vector times matrix: `v^T * self`.
    pub fn vec_mul(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        self.transpose().mul_vec(v)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_shape(rhs)?;
        Ok(self.zip(rhs, |a, b| a + b))
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.same_shape(rhs)?;
        Ok(self.zip(rhs, |a, b| a - b))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn same_shape(&self, rhs: &Matrix) -> Result<(), LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    fn zip(&self, rhs: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn dot(field: FieldSpec, a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(field.zero(), |acc, (x, y)| acc + x * y)
}

/// Reduced row echelon form together with the pivot column of each nonzero row.
pub fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = m.get(row, col).inv().expect("pivot is nonzero");
        for j in col..m.cols {
            let v = m.get(row, j) * &inv;
            m.set(row, j, v);
        }
        for r in 0..m.rows {
            if r == row {
                continue;
            }
            let factor = m.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for j in col..m.cols {
                let v = m.get(r, j) - &(&factor * m.get(row, j));
                m.set(r, j, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

/// Some `x` with `a * x = b`, free variables set to zero; `None` if inconsistent.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
    if a.rows != b.len() {
        return Err(LinalgError::DimensionMismatch(format!(
            "{} equations but right-hand side of length {}",
            a.rows,
            b.len()
        )));
    }
    let mut aug = Matrix::zeros(a.field, a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols, b[i].clone());
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = vec![a.field.zero(); a.cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = r.get(row, a.cols).clone();
    }
    Ok(Some(x))
}

/// Canonical basis of the null space: one vector per free column, in
/// ascending column order, with that free variable equal to 1 and the other
/// free variables 0.
pub fn kernel_basis(a: &Matrix) -> Vec<Vec<Scalar>> {
    let (r, pivots) = rref(a);
    let field = a.field;
    (0..a.cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![field.zero(); a.cols];
            v[free] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free);
            }
            v
        })
        .collect()
}

pub fn rank(a: &Matrix) -> usize {
    rref(a).1.len()
}

pub fn inverse(a: &Matrix) -> Result<Option<Matrix>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    let mut aug = Matrix::zeros(a.field, n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n + i, a.field.one());
    }
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Ok(None);
    }
    let mut inv = Matrix::zeros(a.field, n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, r.get(i, n + j).clone());
        }
    }
    Ok(Some(inv))
}

pub fn trace(a: &Matrix) -> Result<Scalar, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    Ok((0..a.rows).fold(a.field.zero(), |acc, i| acc + a.get(i, i)))
}

/// Determinant by elimination; used for nondegeneracy tests of bilinear forms.
pub fn determinant(a: &Matrix) -> Result<Scalar, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let mut m = a.clone();
    let mut det = a.field.one();
    for col in 0..m.cols {
        let Some(p) = (col..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            return Ok(a.field.zero());
        };
        if p != col {
            m.swap_rows(p, col);
            det = -det;
        }
        let pivot = m.get(col, col).clone();
        det = &det * &pivot;
        let inv = pivot.inv().expect("pivot is nonzero");
        for r in col + 1..m.rows {
            let factor = m.get(r, col) * &inv;
            if factor.is_zero() {
                continue;
            }
            for j in col..m.cols {
                let v = m.get(r, j) - &(&factor * m.get(col, j));
                m.set(r, j, v);
            }
        }
    }
    Ok(det)
}

/// Rank-3 tensor with flat index `(i, j, k) -> i*d1*d2 + j*d2 + k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    field: FieldSpec,
    dims: (usize, usize, usize),
    entries: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: FieldSpec, dims: (usize, usize, usize)) -> Self {
        Tensor3 {
            field,
            dims,
            entries: vec![field.zero(); dims.0 * dims.1 * dims.2],
        }
    }

    pub fn from_entries(
        field: FieldSpec,
        dims: (usize, usize, usize),
        entries: Vec<Scalar>,
    ) -> Result<Self, LinalgError> {
        if entries.len() != dims.0 * dims.1 * dims.2 {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} entries for tensor of shape {:?}",
                entries.len(),
                dims
            )));
        }
        Ok(Tensor3 {
            field,
            dims,
            entries,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dims.0 && j < self.dims.1 && k < self.dims.2);
        i * self.dims.1 * self.dims.2 + j * self.dims.2 + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[self.index(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = self.index(i, j, k);
        self.entries[idx] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [Scalar] {
        &mut self.entries
    }

    /// Inverse of [`Tensor3::index`].
    pub fn unflatten(&self, idx: usize) -> (usize, usize, usize) {
        let (_, d1, d2) = self.dims;
        (idx / (d1 * d2), (idx / d2) % d1, idx % d2)
    }

    /// Iterates nonzero entries as `((i, j, k), value)` in flat order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(idx, v)| (self.unflatten(idx), v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ratio;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        let f = q();
        Matrix::from_rows(
            f,
            rows.iter()
                .map(|r| r.iter().map(|&v| f.from_i64(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| q().from_i64(x)).collect()
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve(&Matrix::identity(q(), 2), &v(&[1, 2])).unwrap(), Some(v(&[1, 2])));
        assert_eq!(solve(&Matrix::zeros(q(), 2, 2), &v(&[1, 0])).unwrap(), None);
        assert_eq!(
            solve(&m(&[&[2, 0], &[0, 3]]), &v(&[1, 1])).unwrap(),
            Some(vec![ratio(q(), 1, 2), ratio(q(), 1, 3)])
        );
        assert!(matches!(
            solve(&Matrix::identity(q(), 2), &v(&[1])),
            Err(LinalgError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(q(), 3)).is_empty());
        assert_eq!(kernel_basis(&Matrix::zeros(q(), 1, 2)), vec![v(&[1, 0]), v(&[0, 1])]);
        assert_eq!(kernel_basis(&m(&[&[1, 1]])), vec![v(&[-1, 1])]);
    }

    #[test]
    fn rank_inverse_trace() {
        assert_eq!(trace(&Matrix::identity(q(), 4)).unwrap(), q().from_i64(4));
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(inverse(&swap).unwrap(), Some(swap.clone()));
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(inverse(&m(&[&[1, 2], &[2, 4]])).unwrap(), None);
        assert!(matches!(trace(&m(&[&[1, 2]])), Err(LinalgError::NotSquare { .. })));
        assert!(matches!(inverse(&m(&[&[1, 2]])), Err(LinalgError::NotSquare { .. })));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])).unwrap(), q().from_i64(-1));
        assert_eq!(determinant(&m(&[&[2, 1], &[4, 5]])).unwrap(), q().from_i64(6));
    }

    #[test]
    fn tensor_flattening() {
        let t = Tensor3::zeros(q(), (2, 3, 4));
        assert_eq!(t.index(1, 2, 3), 23);
        assert_eq!(t.unflatten(23), (1, 2, 3));
        assert!(Tensor3::from_entries(q(), (2, 2, 2), v(&[1; 7])).is_err());
    }
}

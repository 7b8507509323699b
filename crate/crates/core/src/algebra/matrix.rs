//! Dense exact matrices over the coefficient field, just enough linear
//! algebra to decide singularity of multiplication operators and produce
//! kernel witnesses.

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    /// Builds a matrix from its columns; all columns must share one field
    /// and one length.
    pub fn from_columns(field: FieldSpec, columns: &[Vec<Scalar>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zero(field, rows, cols);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::internal("ragged column set"));
            }
            for (i, v) in col.iter().enumerate() {
                if v.field() != field {
                    return Err(Error::FieldMismatch {
                        left: field,
                        right: v.field(),
                    });
                }
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

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::internal("vector length does not match matrix"));
        }
        let mut out = vec![Scalar::zero(self.field); self.rows];
        for i in 0..self.rows {
            let mut acc = Scalar::zero(self.field);
            for j in 0..self.cols {
                acc = acc.add(&self.get(i, j).mul(&v[j])?)?;
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Reduced row echelon form; returns the pivot column of each pivot row.
    fn rref(&self) -> Result<(Matrix, Vec<usize>)> {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(row, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            let inv = m.get(row, col).inv()?;
            for j in 0..m.cols {
                let v = m.get(row, j).mul(&inv)?;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in 0..m.cols {
                        let v = m.get(r, j).sub(&factor.mul(m.get(row, j))?)?;
                        m.set(r, j, v);
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
        }
        Ok((m, pivot_cols))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// One nonzero kernel vector, or `None` when the kernel is trivial.
    pub fn kernel_vector(&self) -> Result<Option<Vec<Scalar>>> {
        let (m, pivot_cols) = self.rref()?;
        let free_col = (0..self.cols).find(|c| !pivot_cols.contains(c));
        let Some(free) = free_col else {
            return Ok(None);
        };
        let mut v = vec![Scalar::zero(self.field); self.cols];
        v[free] = Scalar::one(self.field);
        for (pivot_row, &pivot_col) in pivot_cols.iter().enumerate() {
            v[pivot_col] = m.get(pivot_row, free).neg();
        }
        Ok(Some(v))
    }

    pub fn is_singular(&self) -> Result<bool> {
        if self.rows != self.cols {
            return Err(Error::internal("singularity is defined for square matrices"));
        }
        Ok(self.rank()? < self.rows)
    }
}

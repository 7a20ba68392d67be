use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::sparse::{normalize, Accumulator, SparseVec};
use super::{rank_of_vectors, Field};
use crate::{Error, Result};

/// A sparse matrix stored by columns. Column `k` is the image of the `k`-th basis vector.
#[derive(Debug, Clone)]
pub struct Matrix<F: Field> {
    field: F,
    nrows: usize,
    cols: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.nrows == other.nrows && self.cols == other.cols
    }
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: F, nrows: usize, ncols: usize) -> Self {
        Matrix {
            field,
            nrows,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let one = field.one();
        let cols = (0..n as u32).map(|k| vec![(k, one.clone())]).collect();
        Matrix {
            field,
            nrows: n,
            cols,
        }
    }

    /// Builds from columns, normalizing each one.
    pub fn from_columns(field: F, nrows: usize, cols: Vec<Vec<(u32, F::Elem)>>) -> Result<Self> {
        let mut out = Vec::with_capacity(cols.len());
        for c in cols {
            if c.iter().any(|(i, _)| *i as usize >= nrows) {
                return Err(Error::Shape(format!(
                    "row index out of range for {nrows} rows"
                )));
            }
            out.push(normalize(&field, c));
        }
        Ok(Matrix {
            field,
            nrows,
            cols: out,
        })
    }

    /// Builds from columns already in normal form.
    pub(crate) fn from_columns_unchecked(
        field: F,
        nrows: usize,
        cols: Vec<SparseVec<F::Elem>>,
    ) -> Self {
        debug_assert!(cols.iter().all(|c| c.windows(2).all(|w| w[0].0 < w[1].0)));
        debug_assert!(cols
            .iter()
            .all(|c| c.last().is_none_or(|(i, _)| (*i as usize) < nrows)));
        Matrix { field, nrows, cols }
    }

    pub fn from_rows(field: F, ncols: usize, rows: Vec<Vec<(u32, F::Elem)>>) -> Result<Self> {
        let nrows = rows.len();
        let t = Matrix::from_columns(field, ncols, rows)?;
        debug_assert_eq!(t.ncols(), nrows);
        Ok(t.transpose())
    }

    pub fn from_i64(field: F, rows: &[Vec<i64>]) -> Result<Self> {
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let sparse = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .map(|(j, &x)| (j as u32, field.from_i64(x)))
                    .collect()
            })
            .collect();
        Matrix::from_rows(field, ncols, sparse)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, k: usize) -> &SparseVec<F::Elem> {
        &self.cols[k]
    }

    pub fn columns(&self) -> &[SparseVec<F::Elem>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<SparseVec<F::Elem>> {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> F::Elem {
        super::sparse::get(&self.field, &self.cols[c], r as u32)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<SparseVec<F::Elem>> = vec![Vec::new(); self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                rows[*i as usize].push((j as u32, x.clone()));
            }
        }
        Matrix {
            field: self.field.clone(),
            nrows: self.cols.len(),
            cols: rows,
        }
    }

    /// Rows as sparse vectors indexed by column.
    pub fn rows(&self) -> Vec<SparseVec<F::Elem>> {
        self.transpose().cols
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.characteristic(),
                right: other.field.characteristic(),
            });
        }
        Ok(())
    }

    pub fn apply(&self, v: &[(u32, F::Elem)]) -> SparseVec<F::Elem> {
        let mut acc = Accumulator::new(&self.field, self.nrows);
        for (j, x) in v {
            acc.add_scaled(&self.field, x, &self.cols[*j as usize]);
        }
        acc.take(&self.field)
    }

    /// The product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        if self.ncols() != rhs.nrows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows,
                self.ncols(),
                rhs.nrows,
                rhs.ncols()
            )));
        }
        let mut acc = Accumulator::new(&self.field, self.nrows);
        let cols = rhs
            .cols
            .iter()
            .map(|v| {
                for (j, x) in v {
                    acc.add_scaled(&self.field, x, &self.cols[*j as usize]);
                }
                acc.take(&self.field)
            })
            .collect();
        Ok(Matrix {
            field: self.field.clone(),
            nrows: self.nrows,
            cols,
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        if self.nrows != rhs.nrows || self.ncols() != rhs.ncols() {
            return Err(Error::Shape(
                "cannot add matrices of different shapes".into(),
            ));
        }
        let one = self.field.one();
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| super::sparse::add_scaled(&self.field, a, &one, b))
            .collect();
        Ok(Matrix {
            field: self.field.clone(),
            nrows: self.nrows,
            cols,
        })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let cols = self
            .cols
            .iter()
            .map(|v| super::sparse::scale(&self.field, v, c))
            .collect();
        Matrix {
            field: self.field.clone(),
            nrows: self.nrows,
            cols,
        }
    }

    pub fn rank(&self) -> usize {
        rank_of_vectors(&self.field, self.nrows, &self.cols)
    }

    /// Dense rows, mostly for tests and display.
    pub fn to_dense(&self) -> Vec<Vec<F::Elem>> {
        let mut out = vec![vec![self.field.zero(); self.ncols()]; self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                out[*i as usize][j] = x.clone();
            }
        }
        out
    }
}

use alloc::vec;
use alloc::vec::Vec;

use super::sparse::{add_scaled, scale, SparseVec};
use super::Field;

const NONE: u32 = u32::MAX;

/// A subspace of `F^dim` held as rows with distinct leading columns (pivots),
/// each normalized to leading coefficient one.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_row: Vec<u32>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, dim: usize) -> Self {
        Echelon {
            field,
            dim,
            rows: Vec::new(),
            pivot_row: vec![NONE; dim],
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: u32) -> bool {
        self.pivot_row[col as usize] != NONE
    }

    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<u32> {
        (0..self.dim as u32).filter(|&c| self.is_pivot(c)).collect()
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<u32> {
        (0..self.dim as u32)
            .filter(|&c| !self.is_pivot(c))
            .collect()
    }

    /// The unique representative of `v + span` with no entries in pivot columns.
    pub fn reduce(&self, mut v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut from = 0usize;
        loop {
            let hit = v[from..]
                .iter()
                .position(|(c, _)| self.pivot_row[*c as usize] != NONE);
            let Some(k) = hit.map(|k| k + from) else {
                return v;
            };
            let (c, a) = v[k].clone();
            let row = &self.rows[self.pivot_row[c as usize] as usize];
            v = add_scaled(f, &v, &f.neg(&a), row);
            from = v.partition_point(|(i, _)| *i <= c);
        }
    }

    /// Reduces only until the leading column is not a pivot.
    fn reduce_lead(&self, mut v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = &self.field;
        while let Some((c, a)) = v.first() {
            let r = self.pivot_row[*c as usize];
            if r == NONE {
                break;
            }
            let a = f.neg(a);
            v = add_scaled(f, &v, &a, &self.rows[r as usize]);
        }
        v
    }

    pub fn contains(&self, v: SparseVec<F::Elem>) -> bool {
        self.reduce_lead(v).is_empty()
    }

    fn push(&mut self, v: SparseVec<F::Elem>) -> Option<u32> {
        let (c, a) = v.first()?.clone();
        let inv = self.field.inv(&a).expect("nonzero leading entry");
        let row = scale(&self.field, &v, &inv);
        self.pivot_row[c as usize] = self.rows.len() as u32;
        self.rows.push(row);
        Some(c)
    }

    /// Inserts `v` fully reduced; returns the new pivot if `v` was independent.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> Option<u32> {
        let r = self.reduce(v);
        self.push(r)
    }

    /// Inserts `v` reduced only at its leading term. Cheaper; enough for rank.
    pub fn insert_lead(&mut self, v: SparseVec<F::Elem>) -> Option<u32> {
        let r = self.reduce_lead(v);
        self.push(r)
    }

    /// Reduced row echelon basis, sorted by pivot column.
    pub fn rref_rows(&self) -> Vec<SparseVec<F::Elem>> {
        let f = &self.field;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r][0].0);
        let mut done: Vec<SparseVec<F::Elem>> = Vec::with_capacity(order.len());
        let mut done_of_col = vec![NONE; self.dim];
        for &r in order.iter().rev() {
            let mut v = self.rows[r].clone();
            let lead = v[0].0;
            let mut from = 1usize;
            loop {
                let hit = v[from..]
                    .iter()
                    .position(|(c, _)| done_of_col[*c as usize] != NONE);
                let Some(k) = hit.map(|k| k + from) else {
                    break;
                };
                let (c, a) = v[k].clone();
                v = add_scaled(f, &v, &f.neg(&a), &done[done_of_col[c as usize] as usize]);
                from = v.partition_point(|(i, _)| *i <= c);
            }
            done_of_col[lead as usize] = done.len() as u32;
            done.push(v);
        }
        done.reverse();
        done
    }
}

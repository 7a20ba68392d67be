use alloc::vec::Vec;

use super::Field;

/// A sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec<E> = Vec<(u32, E)>;

/// Returns `a + c * b`.
pub fn add_scaled<F: Field>(
    f: &F,
    a: &[(u32, F::Elem)],
    c: &F::Elem,
    b: &[(u32, F::Elem)],
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ia, ib) = (a[i].0, b[j].0);
        if ia < ib {
            out.push(a[i].clone());
            i += 1;
        } else if ib < ia {
            let v = f.mul(c, &b[j].1);
            if !f.is_zero(&v) {
                out.push((ib, v));
            }
            j += 1;
        } else {
            let v = f.add(&a[i].1, &f.mul(c, &b[j].1));
            if !f.is_zero(&v) {
                out.push((ia, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    for (ib, vb) in &b[j..] {
        let v = f.mul(c, vb);
        if !f.is_zero(&v) {
            out.push((*ib, v));
        }
    }
    out
}

pub fn scale<F: Field>(f: &F, v: &[(u32, F::Elem)], c: &F::Elem) -> SparseVec<F::Elem> {
    if f.is_zero(c) {
        return Vec::new();
    }
    v.iter()
        .map(|(i, x)| (*i, f.mul(c, x)))
        .filter(|(_, x)| !f.is_zero(x))
        .collect()
}

pub fn get<F: Field>(f: &F, v: &[(u32, F::Elem)], idx: u32) -> F::Elem {
    match v.binary_search_by_key(&idx, |(i, _)| *i) {
        Ok(k) => v[k].1.clone(),
        Err(_) => f.zero(),
    }
}

/// Sorts, merges duplicate indices and drops zeros.
pub fn normalize<F: Field>(f: &F, mut v: Vec<(u32, F::Elem)>) -> SparseVec<F::Elem> {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y = f.add(y, &x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !f.is_zero(x));
    out
}

/// Dense accumulator for summing many sparse vectors of one dimension.
pub struct Accumulator<F: Field> {
    vals: Vec<F::Elem>,
    touched: Vec<u32>,
    mark: Vec<bool>,
}

impl<F: Field> Accumulator<F> {
    pub fn new(f: &F, dim: usize) -> Self {
        Accumulator {
            vals: alloc::vec![f.zero(); dim],
            touched: Vec::new(),
            mark: alloc::vec![false; dim],
        }
    }

    pub fn add(&mut self, f: &F, idx: u32, x: &F::Elem) {
        let k = idx as usize;
        if !self.mark[k] {
            self.mark[k] = true;
            self.touched.push(idx);
            self.vals[k] = x.clone();
        } else {
            self.vals[k] = f.add(&self.vals[k], x);
        }
    }

    pub fn add_scaled(&mut self, f: &F, c: &F::Elem, v: &[(u32, F::Elem)]) {
        for (i, x) in v {
            self.add(f, *i, &f.mul(c, x));
        }
    }

    /// Drains the accumulated vector, leaving the accumulator empty.
    pub fn take(&mut self, f: &F) -> SparseVec<F::Elem> {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            let k = i as usize;
            self.mark[k] = false;
            let x = core::mem::replace(&mut self.vals[k], f.zero());
            if !f.is_zero(&x) {
                out.push((i, x));
            }
        }
        self.touched.clear();
        out
    }
}

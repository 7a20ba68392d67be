//! Exact linear algebra over ℚ and `F_p` on sparse vectors.
//!
//! Pivoting is deterministic: the pivot of each row is its first nonzero column and
//! rows are consumed in order, so reduced forms and chosen complements are reproducible.

mod echelon;
mod field;
mod matrix;
pub mod sparse;

use alloc::vec;
use alloc::vec::Vec;

pub use echelon::Echelon;
pub use field::{
    format_fraction, is_prime, parse_fraction, Field, FieldSpec, FieldVisitor, PrimeField,
    Rationals,
};
pub use matrix::Matrix;
pub use sparse::SparseVec;

use crate::{Error, Result};

/// Reduced row echelon form of a matrix.
#[derive(Debug, Clone)]
pub struct Rref<F: Field> {
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// The nonzero rows of the reduced form, ordered by pivot column.
    pub reduced: Matrix<F>,
}

pub fn rref<F: Field>(m: &Matrix<F>) -> Rref<F> {
    let mut e = Echelon::new(m.field().clone(), m.ncols());
    for row in m.rows() {
        e.insert_lead(row);
    }
    let rows = e.rref_rows();
    let pivots: Vec<usize> = rows.iter().map(|r| r[0].0 as usize).collect();
    let reduced = Matrix::from_rows(m.field().clone(), m.ncols(), rows).expect("indices in range");
    Rref {
        rank: pivots.len(),
        pivots,
        reduced,
    }
}

/// Basis of the right null space, one column per non-pivot column `c` of the reduced
/// form: the vector with `1` at `c`, zero at the other free columns.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let f = m.field().clone();
    let r = rref(m);
    let n = m.ncols();
    let mut is_pivot = vec![false; n];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut cols: Vec<Vec<(u32, F::Elem)>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for c in 0..n {
        if !is_pivot[c] {
            slot[c] = cols.len();
            cols.push(vec![(c as u32, f.one())]);
        }
    }
    for (row, &p) in r.reduced.rows().iter().zip(&r.pivots) {
        for (c, x) in &row[1..] {
            cols[slot[*c as usize]].push((p as u32, f.neg(x)));
        }
    }
    Matrix::from_columns(f, n, cols).expect("indices in range")
}

/// Columns of `whole`, in order, that extend a basis of `span(sub)` to a basis of
/// `span(whole)`. Fails with [`Error::NotContained`] unless `span(sub) ⊆ span(whole)`.
pub fn complement_in_span<F: Field>(sub: &Matrix<F>, whole: &Matrix<F>) -> Result<Matrix<F>> {
    if sub.field() != whole.field() {
        return Err(Error::FieldMismatch {
            left: sub.field().characteristic(),
            right: whole.field().characteristic(),
        });
    }
    if sub.nrows() != whole.nrows() {
        return Err(Error::Shape("ambient dimensions differ".into()));
    }
    let idx = complement_indices(sub.field(), sub.nrows(), sub.columns(), whole.columns());
    let whole_rank = whole.rank();
    let sub_rank = sub.rank();
    if sub_rank + idx.len() != whole_rank {
        return Err(Error::NotContained);
    }
    let cols = idx.iter().map(|&k| whole.column(k).clone()).collect();
    Ok(Matrix::from_columns_unchecked(
        whole.field().clone(),
        whole.nrows(),
        cols,
    ))
}

/// Greedy choice of indices into `whole` independent modulo `span(sub)`.
pub fn complement_indices<F: Field>(
    f: &F,
    dim: usize,
    sub: &[SparseVec<F::Elem>],
    whole: &[SparseVec<F::Elem>],
) -> Vec<usize> {
    let mut e = Echelon::new(f.clone(), dim);
    for v in sub {
        e.insert_lead(v.clone());
    }
    whole
        .iter()
        .enumerate()
        .filter_map(|(k, v)| e.insert_lead(v.clone()).map(|_| k))
        .collect()
}

/// A solution of `a x = b`, or `None` if the system is inconsistent. Free variables
/// are set to zero.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[(u32, F::Elem)]) -> Result<Option<SparseVec<F::Elem>>> {
    if b.iter().any(|(i, _)| *i as usize >= a.nrows()) {
        return Err(Error::Shape(
            "right-hand side longer than the column space".into(),
        ));
    }
    let f = a.field();
    let n = a.ncols() as u32;
    let mut rows = a.rows();
    for (i, x) in b {
        rows[*i as usize].push((n, x.clone()));
    }
    let mut e = Echelon::new(f.clone(), a.ncols() + 1);
    for r in rows {
        e.insert_lead(r);
    }
    if e.is_pivot(n) {
        return Ok(None);
    }
    let mut x = Vec::new();
    for row in e.rref_rows() {
        let p = row[0].0;
        if let Some((c, v)) = row.last() {
            if *c == n {
                x.push((p, v.clone()));
            }
        }
    }
    Ok(Some(x))
}

/// Rank of a family of sparse vectors in `F^dim`.
///
/// The family is first split into connected components of the bipartite graph between
/// vectors and the coordinates they touch; each component is eliminated separately.
/// Multigraded inputs, such as Koszul strands over monomial or toric rings, fall apart
/// into many small blocks this way.
pub fn rank_of_vectors<F: Field>(f: &F, dim: usize, vecs: &[SparseVec<F::Elem>]) -> usize {
    let mut parent: Vec<u32> = (0..dim as u32).collect();
    fn find(p: &mut [u32], mut x: u32) -> u32 {
        while p[x as usize] != x {
            let up = p[p[x as usize] as usize];
            p[x as usize] = up;
            x = up;
        }
        x
    }
    for v in vecs {
        if let Some(&(first, _)) = v.first() {
            let r0 = find(&mut parent, first);
            for (c, _) in &v[1..] {
                let r = find(&mut parent, *c);
                if r != r0 {
                    parent[r as usize] = r0;
                }
            }
        }
    }
    let mut groups: alloc::collections::BTreeMap<u32, Vec<usize>> =
        alloc::collections::BTreeMap::new();
    for (k, v) in vecs.iter().enumerate() {
        if let Some(&(first, _)) = v.first() {
            groups.entry(find(&mut parent, first)).or_default().push(k);
        }
    }
    let mut local = vec![u32::MAX; dim];
    let mut total = 0;
    for members in groups.values() {
        let mut used: Vec<u32> = members
            .iter()
            .flat_map(|&k| vecs[k].iter().map(|(c, _)| *c))
            .collect();
        used.sort_unstable();
        used.dedup();
        for (l, &c) in used.iter().enumerate() {
            local[c as usize] = l as u32;
        }
        let mut e = Echelon::new(f.clone(), used.len());
        for &k in members {
            let v = vecs[k]
                .iter()
                .map(|(c, x)| (local[*c as usize], x.clone()))
                .collect();
            if e.insert_lead(v).is_some() {
                total += 1;
            }
        }
    }
    total
}

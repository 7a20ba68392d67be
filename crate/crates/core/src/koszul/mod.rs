//! Koszul complexes `K ⊗ M` of graded modules, their strands, homology and graded
//! Betti numbers `β_{i,j} = dim H_i(K ⊗ M)_j`.
//!
//! The strand `(i, j)` has basis `e_T ⊗ m` for `T` an `i`-subset of the variables (lex
//! order, outer) and `m` a basis vector of `M_{j-i}` (inner). The differential is
//! `∂(e_T ⊗ m) = Σ_s (-1)^{s+1} e_{T∖t_s} ⊗ x_{t_s} m` for `T = {t_1 < … < t_i}`.

mod subsets;
mod table;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

pub use subsets::{elements, SubsetIndex, MAX_VARS};
pub use table::{betti_table, module_column_bounds, BettiTable, WindowShape};

use crate::exactla::{
    complement_indices, kernel_basis, rank_of_vectors, Echelon, Field, Matrix, SparseVec,
};
use crate::gradedring::{binomial, quotient_by_spans, submodule_from_spans, LinearizedModule};
use crate::{Error, ExtInt, Result};

/// The Koszul complex of a module, evaluated strand by strand.
pub struct Koszul<'a, F: Field> {
    module: &'a LinearizedModule<F>,
    subsets: SubsetIndex,
    ranks: BTreeMap<(usize, i64), usize>,
}

impl<'a, F: Field> Koszul<'a, F> {
    pub fn new(module: &'a LinearizedModule<F>) -> Result<Self> {
        if module.nvars() > MAX_VARS {
            return Err(Error::TooLarge(alloc::format!(
                "{} variables",
                module.nvars()
            )));
        }
        Ok(Koszul {
            module,
            subsets: SubsetIndex::new(module.nvars()),
            ranks: BTreeMap::new(),
        })
    }

    pub fn module(&self) -> &LinearizedModule<F> {
        self.module
    }

    pub fn nvars(&self) -> usize {
        self.module.nvars()
    }

    pub fn subsets(&self) -> &SubsetIndex {
        &self.subsets
    }

    pub fn strand_dim(&self, i: usize, j: i64) -> Result<usize> {
        if i > self.nvars() {
            return Ok(0);
        }
        Ok(self.subsets.count(i) * self.module.dim(j - i as i64)?)
    }

    /// Image of the basis vector `e_T ⊗ b` of strand `(i, j)` under `∂`.
    pub fn differential_of_basis(
        &self,
        i: usize,
        j: i64,
        t: u32,
        b: u32,
    ) -> Result<SparseVec<F::Elem>> {
        let f = self.module.field();
        let d = j - i as i64;
        let tgt_dim = self.module.dim(d + 1)? as u32;
        let mut out: Vec<(u32, F::Elem)> = Vec::new();
        for (s, v) in elements(t).enumerate() {
            let img = self.module.act(v, d, &[(b, f.one())])?;
            let base = self.subsets.position(t & !(1 << v)) as u32 * tgt_dim;
            for (k, c) in img {
                let c = if s % 2 == 0 { c } else { f.neg(&c) };
                out.push((base + k, c));
            }
        }
        out.sort_by_key(|(k, _)| *k);
        Ok(out)
    }

    /// Matrix of `∂ : K_{i,j} → K_{i-1,j}`.
    pub fn differential(&self, i: usize, j: i64) -> Result<Matrix<F>> {
        let f = self.module.field().clone();
        let src = self.strand_dim(i, j)?;
        if i == 0 || src == 0 {
            let tgt = if i == 0 {
                0
            } else {
                self.strand_dim(i - 1, j)?
            };
            return Ok(Matrix::zero(f, tgt, src));
        }
        let tgt = self.strand_dim(i - 1, j)?;
        let d = j - i as i64;
        let m_dim = self.module.dim(d)?;
        let actions: Vec<Matrix<F>> = (0..self.nvars())
            .map(|v| self.module.action_matrix(v, d))
            .collect::<Result<_>>()?;
        let tgt_m = self.module.dim(d + 1)? as u32;
        let mut cols = Vec::with_capacity(src);
        for &t in self.subsets.subsets(i) {
            for b in 0..m_dim {
                let mut col: Vec<(u32, F::Elem)> = Vec::new();
                for (s, v) in elements(t).enumerate() {
                    let base = self.subsets.position(t & !(1 << v)) as u32 * tgt_m;
                    for (k, c) in actions[v].column(b) {
                        col.push((base + k, if s % 2 == 0 { c.clone() } else { f.neg(c) }));
                    }
                }
                col.sort_by_key(|(k, _)| *k);
                cols.push(col);
            }
        }
        Ok(Matrix::from_columns_unchecked(f, tgt, cols))
    }

    /// Rank of `∂ : K_{i,j} → K_{i-1,j}`, cached.
    pub fn rank(&mut self, i: usize, j: i64) -> Result<usize> {
        if i == 0 || i > self.nvars() {
            return Ok(0);
        }
        if let Some(&r) = self.ranks.get(&(i, j)) {
            return Ok(r);
        }
        let m = self.differential(i, j)?;
        let r = rank_of_vectors(m.field(), m.nrows(), m.columns());
        self.ranks.insert((i, j), r);
        Ok(r)
    }

    pub fn betti(&mut self, i: usize, j: i64) -> Result<usize> {
        let dim = self.strand_dim(i, j)?;
        if dim == 0 {
            return Ok(0);
        }
        Ok(dim - self.rank(i, j)? - self.rank(i + 1, j)?)
    }

    pub fn cycle_basis(&self, i: usize, j: i64) -> Result<Matrix<F>> {
        Ok(kernel_basis(&self.differential(i, j)?))
    }

    /// Reduced echelon basis of `∂(K_{i+1,j})`, as columns.
    pub fn boundary_basis(&self, i: usize, j: i64) -> Result<Matrix<F>> {
        let dim = self.strand_dim(i, j)?;
        let f = self.module.field().clone();
        if i >= self.nvars() {
            return Ok(Matrix::zero(f, dim, 0));
        }
        let m = self.differential(i + 1, j)?;
        let mut e = Echelon::new(f.clone(), dim);
        for c in m.columns() {
            e.insert_lead(c.clone());
        }
        Matrix::from_columns(f, dim, e.rref_rows())
    }

    /// Cycles independent modulo boundaries, one per dimension of `H_i(K ⊗ M)_j`.
    pub fn homology_reps(&self, i: usize, j: i64) -> Result<Matrix<F>> {
        let z = self.cycle_basis(i, j)?;
        let b = self.boundary_basis(i, j)?;
        let idx = complement_indices(z.field(), z.nrows(), b.columns(), z.columns());
        let cols = idx.into_iter().map(|k| z.column(k).clone()).collect();
        Matrix::from_columns(z.field().clone(), z.nrows(), cols)
    }
}

pub fn strand_differential<F: Field>(
    m: &LinearizedModule<F>,
    i: usize,
    j: i64,
) -> Result<Matrix<F>> {
    Koszul::new(m)?.differential(i, j)
}

pub fn betti_number<F: Field>(m: &LinearizedModule<F>, i: usize, j: i64) -> Result<usize> {
    Koszul::new(m)?.betti(i, j)
}

pub fn cycle_basis<F: Field>(m: &LinearizedModule<F>, i: usize, j: i64) -> Result<Matrix<F>> {
    Koszul::new(m)?.cycle_basis(i, j)
}

pub fn boundary_basis<F: Field>(m: &LinearizedModule<F>, i: usize, j: i64) -> Result<Matrix<F>> {
    Koszul::new(m)?.boundary_basis(i, j)
}

pub fn homology_reps<F: Field>(m: &LinearizedModule<F>, i: usize, j: i64) -> Result<Matrix<F>> {
    Koszul::new(m)?.homology_reps(i, j)
}

/// `t_i = max{j ≤ j_max : β_{i,j} ≠ 0}` (or `-∞`), flagged truncated when
/// `j_max < 2i`.
pub fn t_value<F: Field>(m: &LinearizedModule<F>, i: usize, j_max: i64) -> Result<(ExtInt, bool)> {
    let mut k = Koszul::new(m)?;
    let mut t = ExtInt::NegInf;
    for j in (i as i64 + m.d_min())..=j_max {
        if k.betti(i, j)? != 0 {
            t = ExtInt::Fin(j);
        }
    }
    Ok((t, j_max < 2 * i as i64))
}

/// Which piece of the Koszul complex to realize as a module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KoszulPiece {
    Cycles,
    Boundaries,
    Cokernel,
    /// The whole term `K_b ⊗ M`.
    Term,
}

/// `Z_b`, `B_b`, `C_b = K_b/B_b` or `K_b` of `K ⊗ M` as a graded module through degree
/// `d_max`. Each is stable under the variables because `∂` is linear over `R`.
pub fn submodule_linearize<F: Field>(
    m: &LinearizedModule<F>,
    kind: KoszulPiece,
    b: usize,
    d_max: i64,
) -> Result<LinearizedModule<F>> {
    Ok(linearize_piece(m, kind, b, d_max)?.0)
}

/// `Z_b(K ⊗ M)` through degree `d_max` together with its degreewise bases: reduced
/// echelon rows in the coordinates of the strands `(b, d)`, starting at the module's
/// lowest degree.
pub fn cycle_submodule<F: Field>(
    m: &LinearizedModule<F>,
    b: usize,
    d_max: i64,
) -> Result<(LinearizedModule<F>, Vec<Vec<SparseVec<F::Elem>>>)> {
    linearize_piece(m, KoszulPiece::Cycles, b, d_max)
}

type Bases<E> = Vec<Vec<SparseVec<E>>>;

fn linearize_piece<F: Field>(
    m: &LinearizedModule<F>,
    kind: KoszulPiece,
    b: usize,
    d_max: i64,
) -> Result<(LinearizedModule<F>, Bases<F::Elem>)> {
    let k = Koszul::new(m)?;
    let e = m.nvars();
    let f = m.field().clone();
    let d_min = m.d_min() + b as i64;
    let top = m.top().map(|t| t + b as i64);
    let hi = match top {
        Some(t) => d_max.min(t + 1).max(d_min),
        None => d_max,
    };
    if hi < d_min || b > e {
        let zero =
            LinearizedModule::from_parts(f, e, d_min, alloc::vec![0], Vec::new(), Some(d_min - 1))?;
        return Ok((zero, alloc::vec![Vec::new()]));
    }
    let ambient_dims: Vec<usize> = (d_min..=hi)
        .map(|d| k.strand_dim(b, d))
        .collect::<Result<_>>()?;
    let count = binomial(e, b);
    let act = |v: usize, d: i64, x: &[(u32, F::Elem)]| -> Result<SparseVec<F::Elem>> {
        let md = m.dim(d - b as i64)? as u32;
        let md1 = m.dim(d + 1 - b as i64)? as u32;
        let mut out = Vec::new();
        let mut start = 0;
        while start < x.len() {
            let t = x[start].0 / md;
            let stop = start + x[start..].partition_point(|(i, _)| *i / md == t);
            let local: SparseVec<F::Elem> = x[start..stop]
                .iter()
                .map(|(i, c)| (*i % md, c.clone()))
                .collect();
            out.extend(
                m.act(v, d - b as i64, &local)?
                    .into_iter()
                    .map(|(i, c)| (t * md1 + i, c)),
            );
            start = stop;
        }
        debug_assert!(out
            .iter()
            .all(|(i, _)| (*i as usize) < count * md1 as usize));
        Ok(out)
    };
    let spans = |kind: KoszulPiece| -> Result<Vec<Vec<SparseVec<F::Elem>>>> {
        (d_min..=hi)
            .map(|d| match kind {
                KoszulPiece::Cycles => Ok(k.cycle_basis(b, d)?.into_columns()),
                _ => Ok(if b < e {
                    k.differential(b + 1, d)?.into_columns()
                } else {
                    Vec::new()
                }),
            })
            .collect()
    };
    match kind {
        KoszulPiece::Cycles | KoszulPiece::Boundaries => {
            submodule_from_spans(f, e, d_min, &ambient_dims, spans(kind)?, top, act)
        }
        KoszulPiece::Cokernel => Ok((
            quotient_by_spans(f, e, d_min, &ambient_dims, spans(kind)?, top, act)?,
            Vec::new(),
        )),
        KoszulPiece::Term => {
            let empty = alloc::vec![Vec::new(); ambient_dims.len()];
            Ok((
                quotient_by_spans(f, e, d_min, &ambient_dims, empty, top, act)?,
                Vec::new(),
            ))
        }
    }
}

#[cfg(test)]
mod tests;

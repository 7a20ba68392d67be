use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::Koszul;
use crate::exactla::Field;
use crate::gradedring::LinearizedModule;
use crate::{ExtInt, Interval, Result};

/// Which cells of a Betti table to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowShape {
    /// Columns `i ≤ i_max`, internal degrees `j ≤ j_max`.
    Rect { i_max: usize, j_max: i64 },
    /// Columns `i ≤ i_max`, rows `j - i ≤ row_max`.
    Rows { i_max: usize, row_max: i64 },
}

impl WindowShape {
    pub fn i_max(&self) -> usize {
        match *self {
            WindowShape::Rect { i_max, .. } | WindowShape::Rows { i_max, .. } => i_max,
        }
    }

    pub fn j_limit(&self, i: usize) -> i64 {
        match *self {
            WindowShape::Rect { j_max, .. } => j_max,
            WindowShape::Rows { row_max, .. } => i as i64 + row_max,
        }
    }
}

/// Graded Betti numbers on a window, with per-column certified bounds.
///
/// `column_bound[i]` is a proven bound: `β_{i,j} = 0` for `j > column_bound[i]`.
/// A cell is known if it was computed, lies below the module's lowest degree, or lies
/// above the column bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    d_min: i64,
    cells: BTreeMap<(usize, i64), usize>,
    computed_to: Vec<i64>,
    column_bound: Vec<ExtInt>,
}

/// Bounds valid for any module: empty columns past `e`, and `top(M) + i` when `M` has
/// finite length.
pub fn module_column_bounds<F: Field>(m: &LinearizedModule<F>, i_max: usize) -> Vec<ExtInt> {
    (0..=i_max)
        .map(|i| {
            if i > m.nvars() {
                return ExtInt::NegInf;
            }
            match m.top() {
                Some(t) if t < m.d_min() => ExtInt::NegInf,
                Some(t) => ExtInt::Fin(t + i as i64),
                None => ExtInt::PosInf,
            }
        })
        .collect()
}

/// Computes `β_{i,j}(M)` over the window, never past a certified bound or the
/// materialized pieces of `M`. `extra_bounds[i]`, when present, tightens column `i`.
pub fn betti_table<F: Field>(
    m: &LinearizedModule<F>,
    shape: WindowShape,
    extra_bounds: &[ExtInt],
) -> Result<BettiTable> {
    let i_max = shape.i_max();
    let mut bounds = module_column_bounds(m, i_max);
    for (b, x) in bounds.iter_mut().zip(extra_bounds) {
        *b = (*b).min(*x);
    }
    let mut k = Koszul::new(m)?;
    let mut cells = BTreeMap::new();
    let mut computed_to = Vec::with_capacity(i_max + 1);
    for i in 0..=i_max {
        let lo = i as i64 + m.d_min();
        let mut hi = shape.j_limit(i);
        match bounds[i] {
            ExtInt::NegInf => hi = lo - 1,
            ExtInt::Fin(b) => hi = hi.min(b),
            ExtInt::PosInf => {}
        }
        if m.top().is_none() {
            let materialized = if i == 0 {
                m.bound()
            } else {
                m.bound() + i as i64 - 1
            };
            hi = hi.min(materialized);
        }
        for j in lo..=hi {
            cells.insert((i, j), k.betti(i, j)?);
        }
        computed_to.push(hi.max(lo - 1));
    }
    Ok(BettiTable {
        nvars: m.nvars(),
        d_min: m.d_min(),
        cells,
        computed_to,
        column_bound: bounds,
    })
}

impl BettiTable {
    pub fn i_max(&self) -> usize {
        self.computed_to.len() - 1
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn d_min(&self) -> i64 {
        self.d_min
    }

    pub fn computed_to(&self, i: usize) -> i64 {
        self.computed_to[i]
    }

    pub fn column_bound(&self, i: usize) -> ExtInt {
        if i > self.nvars {
            return ExtInt::NegInf;
        }
        self.column_bound.get(i).copied().unwrap_or(ExtInt::PosInf)
    }

    /// `β_{i,j}` when known, `None` when outside what was computed or certified.
    pub fn get(&self, i: usize, j: i64) -> Option<usize> {
        if j < i as i64 + self.d_min || ExtInt::Fin(j) > self.column_bound(i) {
            return Some(0);
        }
        if i <= self.i_max() && j <= self.computed_to[i] {
            return self.cells.get(&(i, j)).copied();
        }
        None
    }

    /// Every nonzero cell of column `i` is known.
    pub fn column_complete(&self, i: usize) -> bool {
        match self.column_bound(i) {
            ExtInt::NegInf => true,
            ExtInt::Fin(b) => i <= self.i_max() && self.computed_to[i] >= b,
            ExtInt::PosInf => false,
        }
    }

    fn observed_top(&self, i: usize) -> ExtInt {
        self.cells
            .range((i, i64::MIN)..=(i, i64::MAX))
            .filter(|(_, &b)| b != 0)
            .map(|(&(_, j), _)| ExtInt::Fin(j))
            .next_back()
            .unwrap_or(ExtInt::NegInf)
    }

    /// Enclosure of `t_i = max{j : β_{i,j} ≠ 0}`.
    pub fn t(&self, i: usize) -> Interval {
        let seen = self.observed_top(i);
        if self.column_complete(i) {
            Interval::exact(seen)
        } else {
            Interval::new(seen, self.column_bound(i).max(seen))
        }
    }

    /// Enclosure of `max_{i ≤ n} (t_i - i)`; `-∞` for `n < 0`.
    pub fn reg(&self, n: i64) -> Interval {
        let mut acc = Interval::exact(ExtInt::NegInf);
        for i in 0..=n.max(-1) {
            acc = acc.max(self.t(i as usize).shift(-i));
        }
        acc
    }

    /// Enclosure of the projective dimension.
    pub fn pd(&self) -> Interval {
        let lo = (0..=self.i_max())
            .filter(|&i| self.observed_top(i) != ExtInt::NegInf)
            .map(|i| ExtInt::Fin(i as i64))
            .max()
            .unwrap_or(ExtInt::NegInf);
        let hi = (0..=self.nvars)
            .filter(|&i| !(self.column_complete(i) && self.observed_top(i) == ExtInt::NegInf))
            .map(|i| ExtInt::Fin(i as i64))
            .max()
            .unwrap_or(ExtInt::NegInf);
        Interval::new(lo, hi.max(lo))
    }

    /// Nonzero computed cells `(i, j, β)`.
    pub fn records(&self) -> Vec<(usize, i64, usize)> {
        self.cells
            .iter()
            .filter(|(_, &b)| b != 0)
            .map(|(&(i, j), &b)| (i, j, b))
            .collect()
    }

    /// All computed cells, including zeros.
    pub fn computed_cells(&self) -> impl Iterator<Item = ((usize, i64), usize)> + '_ {
        self.cells.iter().map(|(&k, &v)| (k, v))
    }
}

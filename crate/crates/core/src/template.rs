//! Betti templates: which `β_{i,j}` of an algebra with property `N_q` are forced to
//! vanish, and which vanish only conditionally. Cell `(i, j)` sits in column `i`
//! (homological degree) and row `j` (so `β_{i,i+j}`).

use alloc::vec::Vec;

use crate::numtheory::exceptional_prime;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    /// Nonzero because of `N_q`.
    Star,
    /// Zero because of `N_q`.
    Dash,
    /// Zero in every characteristic.
    Zero,
    /// Zero when the characteristic is good for `i`.
    Ovoid,
    /// Zero if the subadditivity premise holds.
    TriUp,
    /// Not constrained.
    TriDown,
}

impl Cell {
    pub fn symbol(self) -> char {
        match self {
            Cell::Star => '*',
            Cell::Dash => '-',
            Cell::Zero => '0',
            Cell::Ovoid => 'o',
            Cell::TriUp => '^',
            Cell::TriDown => 'v',
        }
    }

    pub fn from_symbol(c: char) -> Option<Cell> {
        Some(match c {
            '*' => Cell::Star,
            '-' => Cell::Dash,
            '0' => Cell::Zero,
            'o' => Cell::Ovoid,
            '^' => Cell::TriUp,
            'v' => Cell::TriDown,
            _ => return None,
        })
    }
}

/// `2⌊i/(q+1)⌋ + (0 if (q+1) | i else 1)`: the row bound in good characteristic.
pub fn good_row_bound(q: usize, i: usize) -> usize {
    2 * (i / (q + 1)) + usize::from(!i.is_multiple_of(q + 1))
}

pub fn classify(q: usize, i: usize, j: usize) -> Cell {
    if (i, j) == (0, 0) || ((1..=q).contains(&i) && j == 1) {
        Cell::Star
    } else if (i == 0 && j > 0) || (i >= 1 && j == 0) || ((1..=q).contains(&i) && j >= 2) {
        Cell::Dash
    } else if i > q && j >= i {
        Cell::Zero
    } else if j > good_row_bound(q, i) {
        Cell::Ovoid
    } else if j > i.div_ceil(q) {
        Cell::TriUp
    } else {
        Cell::TriDown
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemplateGrid {
    pub q: usize,
    pub i_max: usize,
    pub j_max: usize,
    /// `cells[j][i]`.
    pub cells: Vec<Vec<Cell>>,
    /// The prime that is not good for `i`, shown under columns with an ovoid region.
    pub bottom: Vec<Option<u64>>,
}

pub fn template(q: usize, i_max: usize, j_max: usize) -> Result<TemplateGrid> {
    if q < 2 {
        return Err(Error::Invalid(alloc::format!(
            "templates need q ≥ 2, got {q}"
        )));
    }
    let cells = (0..=j_max)
        .map(|j| (0..=i_max).map(|i| classify(q, i, j)).collect())
        .collect();
    let bottom = (0..=i_max)
        .map(|i| {
            if i > q && good_row_bound(q, i) + 1 < i {
                exceptional_prime(i as u64)
            } else {
                None
            }
        })
        .collect();
    Ok(TemplateGrid {
        q,
        i_max,
        j_max,
        cells,
        bottom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_cells() {
        assert_eq!(classify(2, 3, 3), Cell::Zero);
        assert_eq!(classify(2, 4, 3), Cell::TriUp);
        assert_eq!(classify(2, 5, 4), Cell::Ovoid);
        assert_eq!(classify(3, 4, 3), Cell::Ovoid);
        assert_eq!(classify(3, 3, 1), Cell::Star);
        assert_eq!(classify(2, 13, 1), Cell::TriDown);
    }

    #[test]
    fn bottom_rows() {
        let t = template(2, 13, 8).unwrap();
        let shown: Vec<(usize, u64)> = t
            .bottom
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (i, p)))
            .collect();
        assert_eq!(shown, [(5, 3), (7, 2), (8, 3), (9, 5), (13, 7)]);
        let t = template(3, 16, 8).unwrap();
        let shown: Vec<(usize, u64)> = t
            .bottom
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (i, p)))
            .collect();
        assert_eq!(
            shown,
            [(5, 3), (7, 2), (8, 3), (9, 5), (13, 7), (14, 5), (15, 2)]
        );
        assert!(template(1, 3, 3).is_err());
    }

    #[test]
    fn symbols_round_trip() {
        for c in [
            Cell::Star,
            Cell::Dash,
            Cell::Zero,
            Cell::Ovoid,
            Cell::TriUp,
            Cell::TriDown,
        ] {
            assert_eq!(Cell::from_symbol(c.symbol()), Some(c));
        }
    }
}

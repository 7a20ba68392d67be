//! Tab-separated Betti grids. Row `r`, column `i` holds `β_{i,i+r}`; `.` is zero and
//! `?` is a cell the window did not reach. A records section lists the nonzero cells.

use std::fmt::Write;

use syzygy_core::koszul::BettiTable;
use syzygy_core::resolve::TorProfile;

/// Anything with graded cells on a window.
pub trait Cells {
    fn columns(&self) -> usize;
    /// `None` when the cell is not known.
    fn cell(&self, i: usize, j: i64) -> Option<usize>;
    fn records(&self) -> Vec<(usize, i64, usize)>;
    fn d_min(&self) -> i64;
}

impl Cells for BettiTable {
    fn columns(&self) -> usize {
        self.i_max() + 1
    }
    fn cell(&self, i: usize, j: i64) -> Option<usize> {
        self.get(i, j)
    }
    fn records(&self) -> Vec<(usize, i64, usize)> {
        BettiTable::records(self)
    }
    fn d_min(&self) -> i64 {
        BettiTable::d_min(self)
    }
}

impl Cells for TorProfile {
    fn columns(&self) -> usize {
        self.i_max + 1
    }
    fn cell(&self, i: usize, j: i64) -> Option<usize> {
        if j < self.d_lo + i as i64 {
            return Some(0);
        }
        self.get(i, j)
    }
    fn records(&self) -> Vec<(usize, i64, usize)> {
        TorProfile::records(self)
    }
    fn d_min(&self) -> i64 {
        self.d_lo
    }
}

/// The grid for rows `d_min ..= d_min + rows`, then the records.
pub fn render<C: Cells>(c: &C, rows: i64) -> String {
    let mut s = String::from("row");
    for i in 0..c.columns() {
        write!(s, "\t{i}").unwrap();
    }
    s.push('\n');
    for r in c.d_min()..=c.d_min() + rows {
        write!(s, "{r}").unwrap();
        for i in 0..c.columns() {
            match c.cell(i, i as i64 + r) {
                Some(0) => s.push_str("\t."),
                Some(n) => write!(s, "\t{n}").unwrap(),
                None => s.push_str("\t?"),
            }
        }
        s.push('\n');
    }
    s.push_str("\ni\tj\tdim\n");
    for (i, j, n) in c.records() {
        writeln!(s, "{i}\t{j}\t{n}").unwrap();
    }
    s
}

/// Reads the records section back.
pub fn parse_records(text: &str) -> Option<Vec<(usize, i64, usize)>> {
    let body = text.split_once("\ni\tj\tdim\n")?.1;
    body.lines()
        .filter(|l| !l.is_empty())
        .map(|l| {
            let mut f = l.split('\t');
            let cell = (
                f.next()?.parse().ok()?,
                f.next()?.parse().ok()?,
                f.next()?.parse().ok()?,
            );
            f.next().is_none().then_some(cell)
        })
        .collect()
}

/// Smallest row count that shows every record.
pub fn rows_needed<C: Cells>(c: &C) -> i64 {
    c.records()
        .iter()
        .map(|&(i, j, _)| j - i as i64 - c.d_min())
        .max()
        .unwrap_or(0)
        .max(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use syzygy_core::exactla::Rationals;
    use syzygy_core::gradedring::{LinearizedModule, QuotientAlgebra};
    use syzygy_core::koszul::{betti_table, WindowShape};

    #[test]
    fn squares_grid() {
        let mut a =
            QuotientAlgebra::from_i64(Rationals, 2, &[&[(1, &[2, 0])], &[(1, &[0, 2])]]).unwrap();
        a.precompute(5).unwrap();
        let m = LinearizedModule::algebra(&a, 5).unwrap();
        let t = betti_table(&m, WindowShape::Rect { i_max: 2, j_max: 4 }, &[]).unwrap();
        let text = render(&t, rows_needed(&t));
        assert_eq!(text, "row\t0\t1\t2\n0\t1\t.\t.\n1\t.\t2\t.\n2\t.\t.\t1\n\ni\tj\tdim\n0\t0\t1\n1\t2\t2\n2\t4\t1\n");
        assert_eq!(parse_records(&text).unwrap(), t.records());
    }
}

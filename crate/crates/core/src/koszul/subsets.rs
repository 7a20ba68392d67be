use alloc::vec;
use alloc::vec::Vec;

/// Subsets of `{0, …, e-1}` as bitmasks, grouped by size, each group in lexicographic
/// order of the sorted element lists.
#[derive(Debug, Clone)]
pub struct SubsetIndex {
    by_size: Vec<Vec<u32>>,
    position: Vec<u32>,
}

pub const MAX_VARS: usize = 24;

impl SubsetIndex {
    pub fn new(e: usize) -> Self {
        assert!(e <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut by_size = vec![Vec::new(); e + 1];
        let mut cur = Vec::new();
        fn rec(start: usize, e: usize, cur: &mut Vec<usize>, by_size: &mut [Vec<u32>]) {
            let mask = cur.iter().fold(0u32, |m, &t| m | (1 << t));
            by_size[cur.len()].push(mask);
            for t in start..e {
                cur.push(t);
                rec(t + 1, e, cur, by_size);
                cur.pop();
            }
        }
        rec(0, e, &mut cur, &mut by_size);
        // The recursion visits subsets in lex order overall, hence within each size.
        let mut position = vec![0u32; 1 << e];
        for group in &by_size {
            for (k, &m) in group.iter().enumerate() {
                position[m as usize] = k as u32;
            }
        }
        SubsetIndex { by_size, position }
    }

    pub fn nvars(&self) -> usize {
        self.by_size.len() - 1
    }

    pub fn subsets(&self, i: usize) -> &[u32] {
        self.by_size.get(i).map_or(&[], |v| v.as_slice())
    }

    pub fn count(&self, i: usize) -> usize {
        self.subsets(i).len()
    }

    pub fn position(&self, mask: u32) -> usize {
        self.position[mask as usize] as usize
    }
}

/// Elements of a bitmask in increasing order.
pub fn elements(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |t| mask & (1 << t) != 0)
}

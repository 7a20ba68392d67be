use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Exponents of a monomial in `e` variables. The derived order is lexicographic with
/// `x_1 > x_2 > …`, which restricted to one degree is the lex term order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn one(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v] = 1;
        ExponentVector(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn times_var(&self, v: usize) -> Self {
        let mut e = self.0.clone();
        e[v] += 1;
        ExponentVector(e)
    }

    /// Support as a bitmask; only meaningful for at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .fold(0, |m, (i, _)| m | (1 << i))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for k in 0..r {
        acc = acc * (n - k) as u128 / (k + 1) as u128;
    }
    acc as usize
}

/// Number of monomials of degree `d` in `e` variables.
pub fn monomial_count(e: usize, d: usize) -> usize {
    if e == 0 {
        return usize::from(d == 0);
    }
    binomial(e + d - 1, d)
}

/// All monomials of degree `d` in `e` variables, lexicographically descending
/// (`x_1^d` first).
pub fn monomial_basis(e: usize, d: u32) -> Vec<ExponentVector> {
    let mut out = Vec::with_capacity(monomial_count(e, d as usize));
    let mut cur = vec![0u32; e];
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(ExponentVector(cur.clone()));
            return;
        }
        for a in (0..=left).rev() {
            cur[pos] = a;
            rec(pos + 1, left - a, cur, out);
        }
        cur[pos] = 0;
    }
    if e == 0 {
        if d == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Position of a monomial in [`monomial_basis`] of its degree.
pub fn monomial_index(m: &[u32]) -> usize {
    let e = m.len();
    let mut rem: u32 = m.iter().sum();
    let mut idx = 0;
    for (v, &a) in m.iter().enumerate().take(e.saturating_sub(1)) {
        if rem > a {
            idx += monomial_count(e - v, (rem - a - 1) as usize);
        }
        rem -= a;
    }
    idx
}

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{integer_ideal, unit, CorpusEntry, Fact, Provenance};
use crate::gradedring::monomial_basis;
use crate::{Error, Result};

/// Size guard on the number of toric variables.
pub const MAX_TORIC_VARIABLES: usize = 15;
pub const MAX_SEGRE_VARIABLES: usize = 12;

/// The monomial subalgebra of `k[t_1..t_m]` generated by equal-degree monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Toric {
    pub base_vars: usize,
    pub monomials: Vec<Vec<u32>>,
}

impl Toric {
    /// Binomial quadrics `y_a y_b − y_c y_d` with `m_a m_b = m_c m_d`, one basis of
    /// the degree-two part of the toric ideal.
    pub fn quadrics(&self) -> Vec<Vec<(i64, Vec<u32>)>> {
        let e = self.monomials.len();
        let mut groups: BTreeMap<Vec<u32>, Vec<(usize, usize)>> = BTreeMap::new();
        for a in 0..e {
            for b in a..e {
                let prod = self.monomials[a]
                    .iter()
                    .zip(&self.monomials[b])
                    .map(|(x, y)| x + y)
                    .collect();
                groups.entry(prod).or_default().push((a, b));
            }
        }
        let mut out = Vec::new();
        for pairs in groups.values() {
            let (a0, b0) = pairs[0];
            for &(a, b) in &pairs[1..] {
                out.push(alloc::vec![(1, unit(e, &[a0, b0])), (-1, unit(e, &[a, b]))]);
            }
        }
        out
    }

    /// `dim R_d` for `d ≤ d_max`, counted as distinct products of `d` generators.
    pub fn hilbert_function(&self, d_max: u32) -> Vec<usize> {
        let mut layer: BTreeSet<Vec<u32>> = BTreeSet::new();
        layer.insert(alloc::vec![0; self.base_vars]);
        let mut out = alloc::vec![1];
        for _ in 1..=d_max {
            let mut next = BTreeSet::new();
            for m in &layer {
                for g in &self.monomials {
                    next.insert(m.iter().zip(g).map(|(x, y)| x + y).collect::<Vec<u32>>());
                }
            }
            out.push(next.len());
            layer = next;
        }
        out
    }

    fn entry(
        &self,
        name: alloc::string::String,
        characteristic: u64,
        dim: usize,
    ) -> Result<CorpusEntry> {
        let e = self.monomials.len();
        if e > MAX_TORIC_VARIABLES {
            return Err(Error::TooLarge(alloc::format!(
                "{e} toric variables (limit {MAX_TORIC_VARIABLES})"
            )));
        }
        let gens = self.quadrics();
        let count = gens.len();
        let hf = self.hilbert_function(4);
        Ok(
            CorpusEntry::new(name, integer_ideal(characteristic, e, gens))
                .with_dim(dim)
                .with_cm(true)
                .expect(Fact::GeneratorCount(count), Provenance::Derived)
                .expect(Fact::HilbertFunction(hf), Provenance::Derived),
        )
    }
}

/// The `q`-th Veronese ring of a polynomial ring in `q·n` variables, presented by
/// its quadratic binomials.
pub fn veronese_presentation(q: usize, n: usize, characteristic: u64) -> Result<CorpusEntry> {
    if q == 0 || n == 0 {
        return Err(Error::Invalid(alloc::format!(
            "Veronese parameters q = {q}, n = {n}"
        )));
    }
    let m = q * n;
    let count = crate::gradedring::monomial_count(m, q);
    if count > MAX_TORIC_VARIABLES {
        return Err(Error::TooLarge(alloc::format!(
            "{count} toric variables (limit {MAX_TORIC_VARIABLES})"
        )));
    }
    let monomials = monomial_basis(m, q as u32)
        .into_iter()
        .map(|x| x.0)
        .collect();
    let toric = Toric {
        base_vars: m,
        monomials,
    };
    Ok(toric
        .entry(alloc::format!("veronese-{q}-{n}"), characteristic, m)?
        .expect(Fact::Regularity(((q - 1) * n) as i64), Provenance::Paper)
        .expect(Fact::Nq(q), Provenance::Paper))
}

/// The Segre product of projective spaces of the given dimensions.
pub fn segre_presentation(dims: &[usize], characteristic: u64) -> Result<CorpusEntry> {
    if dims.is_empty() {
        return Err(Error::Invalid("empty Segre product".into()));
    }
    let count: usize = dims.iter().map(|d| d + 1).product();
    if count > MAX_TORIC_VARIABLES {
        return Err(Error::TooLarge(alloc::format!(
            "{count} toric variables (limit {MAX_TORIC_VARIABLES})"
        )));
    }
    let base_vars: usize = dims.iter().map(|d| d + 1).sum();
    let mut monomials = alloc::vec![alloc::vec![0u32; base_vars]];
    let mut offset = 0;
    for &d in dims {
        monomials = monomials
            .into_iter()
            .flat_map(|m| {
                (0..=d).map(move |k| {
                    let mut m = m.clone();
                    m[offset + k] += 1;
                    m
                })
            })
            .collect();
        offset += d + 1;
    }
    if count > MAX_SEGRE_VARIABLES {
        return Err(Error::TooLarge(alloc::format!(
            "{count} Segre variables (limit {MAX_SEGRE_VARIABLES})"
        )));
    }
    let toric = Toric {
        base_vars,
        monomials,
    };
    let name = dims
        .iter()
        .map(|d| alloc::format!("{d}"))
        .collect::<Vec<_>>()
        .join("x");
    let mut entry = toric.entry(
        alloc::format!("segre-{name}"),
        characteristic,
        base_vars - dims.len() + 1,
    )?;
    if dims.len() >= 3 || dims.iter().all(|&d| d >= 2) {
        entry = entry.expect(Fact::Nq(3), Provenance::Paper);
    }
    if dims == [1, 1, 1] {
        entry = entry.expect(Fact::HNumerator(alloc::vec![1, 4, 1]), Provenance::Paper);
    }
    Ok(entry)
}

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CorpusEntry, Fact, Provenance};
use crate::exactla::{Echelon, Field, PrimeField, SparseVec};
use crate::gradedring::{
    default_variable_names, monomial_basis, Coefficient, IdealDescription, QuotientAlgebra, Term,
};
use crate::{Error, Result};

/// Coefficient field for the randomized families.
pub const GENERIC_PRIME: u64 = 32003;

fn description(e: usize, gens: Vec<Vec<(u32, Vec<u32>)>>) -> IdealDescription {
    let generators = gens
        .into_iter()
        .map(|g| {
            g.into_iter()
                .filter(|(c, _)| *c != 0)
                .map(|(c, exponents)| Term {
                    coefficient: Coefficient::integer(c as i64),
                    exponents,
                })
                .collect()
        })
        .collect();
    IdealDescription {
        characteristic: GENERIC_PRIME,
        variables: default_variable_names(e),
        generators,
    }
}

/// `c` quadrics in `e` variables with coefficients drawn uniformly from `F_32003`.
pub fn generic_quadrics(e: usize, c: usize, seed: u64) -> CorpusEntry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = monomial_basis(e, 2);
    let gens = (0..c)
        .map(|_| {
            basis
                .iter()
                .map(|m| (rng.gen_range(0..GENERIC_PRIME as u32), m.0.clone()))
                .collect()
        })
        .collect();
    let mut entry = CorpusEntry::new(
        alloc::format!("generic-quadrics-{e}-{c}-{seed}"),
        description(e, gens),
    );
    entry.seed = Some(seed);
    if c <= e {
        let table = (0..=c)
            .map(|i| (i, 2 * i as i64, crate::gradedring::binomial(c, i)))
            .collect();
        entry = entry
            .with_dim(e - c)
            .with_cm(true)
            .expect(Fact::BettiTable(table), Provenance::Trivial);
    } else if c == e + 1 {
        entry = entry.with_dim(0).with_cm(true).expect(
            Fact::T {
                i: 2,
                value: crate::ExtInt::Fin((e / 2 + 2) as i64),
            },
            Provenance::Paper,
        );
    }
    entry
}

/// Quadrics of the annihilator of a random cubic form in five dual variables.
fn annihilator_quadrics(seed: u64) -> Vec<Vec<(u32, Vec<u32>)>> {
    const E: usize = 5;
    let f = PrimeField::new(GENERIC_PRIME).expect("prime");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cubic: Vec<(Vec<u32>, u32)> = monomial_basis(E, 3)
        .into_iter()
        .map(|m| (m.0, rng.gen_range(0..GENERIC_PRIME as u32)))
        .collect();
    let quads = monomial_basis(E, 2);
    // Rows of [contraction | identity]; rows with a pivot in the identity block span the kernel.
    let mut ech = Echelon::new(f, E + quads.len());
    for (k, q) in quads.iter().enumerate() {
        let mut row = alloc::vec![0u32; E];
        for (m, c) in &cubic {
            if q.0.iter().zip(m).all(|(a, b)| a <= b) {
                let v = (0..E).find(|&v| m[v] > q.0[v]).expect("linear remainder");
                row[v] = f.add(&row[v], c);
            }
        }
        let mut v: SparseVec<u32> = row
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != 0)
            .map(|(i, c)| (i as u32, c))
            .collect();
        v.push(((E + k) as u32, 1));
        ech.insert(v);
    }
    ech.rref_rows()
        .into_iter()
        .filter(|r| r[0].0 as usize >= E)
        .map(|r| {
            r.into_iter()
                .map(|(i, c)| (c, quads[i as usize - E].0.clone()))
                .collect()
        })
        .collect()
}

/// An artinian Gorenstein algebra with Hilbert function `(1, 5, 5, 1)`, built by
/// apolarity from a random cubic. Reseeds a few times if the draw is degenerate.
pub fn apolarity_gorenstein(seed: u64) -> Result<CorpusEntry> {
    let f = PrimeField::new(GENERIC_PRIME)?;
    for attempt in 0..4 {
        let s = seed.wrapping_add(attempt);
        let gens = annihilator_quadrics(s);
        let ideal = description(5, gens);
        let mut alg = QuotientAlgebra::new(f, 5, ideal.polynomials(&f)?)?;
        alg.precompute(4)?;
        if alg.hilbert_function(4)? == [1, 5, 5, 1, 0] {
            let mut entry = CorpusEntry::new(alloc::format!("gorenstein-15551-{s}"), ideal)
                .with_dim(0)
                .with_cm(true)
                .expect(
                    Fact::HilbertFunction(alloc::vec![1, 5, 5, 1, 0]),
                    Provenance::Derived,
                )
                .expect(
                    Fact::BettiTable(alloc::vec![
                        (0, 0, 1),
                        (1, 2, 10),
                        (2, 3, 16),
                        (3, 5, 16),
                        (4, 6, 10),
                        (5, 8, 1)
                    ]),
                    Provenance::Derived,
                );
            entry.seed = Some(s);
            return Ok(entry);
        }
    }
    Err(Error::Invalid(alloc::format!(
        "no nondegenerate cubic for seeds {seed}..{}",
        seed + 4
    )))
}

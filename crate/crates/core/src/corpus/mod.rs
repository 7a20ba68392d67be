//! Built-in example families: edge ideals, complete intersections of squares,
//! Veronese and Segre toric rings, generic quadrics, an apolar Gorenstein algebra
//! and Plücker relations. Each entry carries the facts it is expected to satisfy.

mod generic;
mod graphs;
mod toric;
mod verify;

use alloc::string::String;
use alloc::vec::Vec;

pub use generic::{apolarity_gorenstein, generic_quadrics, GENERIC_PRIME};
pub use graphs::{all_graphs, canonical_form, edge_ideal, Graph};
pub use toric::{segre_presentation, veronese_presentation, Toric};
pub use verify::FactOutcome;

use crate::exactla::Field;
use crate::gradedring::{default_variable_names, Coefficient, IdealDescription, Polynomial, Term};
use crate::ExtInt;

/// Where an expected fact comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Quoted from the literature the corpus reproduces.
    Paper,
    Trivial,
    /// Computed independently and frozen.
    Derived,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fact {
    /// The full list of nonzero `(i, j, β_{i,j})`.
    BettiTable(Vec<(usize, i64, usize)>),
    T {
        i: usize,
        value: ExtInt,
    },
    HilbertFunction(Vec<usize>),
    /// Numerator `h(t)` of the Hilbert series `h(t)/(1-t)^dim`.
    HNumerator(Vec<i64>),
    /// `reg^S(R)`.
    Regularity(i64),
    /// Property `N_q` holds for this `q`.
    Nq(usize),
    GeneratorCount(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub fact: Fact,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub ideal: IdealDescription,
    pub declared_dim: Option<usize>,
    pub cohen_macaulay: Option<bool>,
    pub seed: Option<u64>,
    pub expected: Vec<Expected>,
}

impl CorpusEntry {
    pub fn new(name: impl Into<String>, ideal: IdealDescription) -> Self {
        CorpusEntry {
            name: name.into(),
            ideal,
            declared_dim: None,
            cohen_macaulay: None,
            seed: None,
            expected: Vec::new(),
        }
    }

    pub fn with_dim(mut self, dim: usize) -> Self {
        self.declared_dim = Some(dim);
        self
    }

    pub fn with_cm(mut self, cm: bool) -> Self {
        self.cohen_macaulay = Some(cm);
        self
    }

    pub fn expect(mut self, fact: Fact, provenance: Provenance) -> Self {
        self.expected.push(Expected { fact, provenance });
        self
    }

    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }

    pub fn generator_degrees(&self) -> Vec<u32> {
        self.ideal
            .generators
            .iter()
            .map(|g| g.first().map_or(0, |t| t.exponents.iter().sum()))
            .collect()
    }
}

/// An ideal with integer coefficients.
pub(crate) fn integer_ideal(
    characteristic: u64,
    e: usize,
    gens: Vec<Vec<(i64, Vec<u32>)>>,
) -> IdealDescription {
    let generators = gens
        .into_iter()
        .map(|g| {
            g.into_iter()
                .map(|(c, exponents)| Term {
                    coefficient: Coefficient::integer(c),
                    exponents,
                })
                .collect()
        })
        .collect();
    IdealDescription {
        characteristic,
        variables: default_variable_names(e),
        generators,
    }
}

fn unit(e: usize, vars: &[usize]) -> Vec<u32> {
    let mut x = alloc::vec![0; e];
    for &v in vars {
        x[v] += 1;
    }
    x
}

/// `(x_1², …, x_c²)` in `e` variables.
pub fn complete_intersection_squares(c: usize, e: usize, characteristic: u64) -> CorpusEntry {
    assert!(c <= e, "at most e squares");
    let gens = (0..c).map(|v| alloc::vec![(1, unit(e, &[v, v]))]).collect();
    let mut entry = CorpusEntry::new(
        alloc::format!("ci-squares-{c}-{e}"),
        integer_ideal(characteristic, e, gens),
    )
    .with_dim(e - c)
    .with_cm(true);
    let table = (0..=c)
        .map(|i| (i, 2 * i as i64, crate::gradedring::binomial(c, i)))
        .collect();
    entry = entry.expect(Fact::BettiTable(table), Provenance::Trivial);
    for a in 0..=c {
        entry = entry.expect(
            Fact::T {
                i: a,
                value: ExtInt::Fin(2 * a as i64),
            },
            Provenance::Paper,
        );
    }
    entry
}

/// A single form `x_1^d + … + x_e^d`.
pub fn fermat_hypersurface(e: usize, d: u32, characteristic: u64) -> CorpusEntry {
    let g = (0..e)
        .map(|v| {
            let mut x = alloc::vec![0; e];
            x[v] = d;
            (1, x)
        })
        .collect();
    CorpusEntry::new(
        alloc::format!("fermat-{e}-{d}"),
        integer_ideal(characteristic, e, alloc::vec![g]),
    )
    .with_dim(e - 1)
    .with_cm(true)
    .expect(
        Fact::BettiTable(alloc::vec![(0, 0, 1), (1, d as i64, 1)]),
        Provenance::Trivial,
    )
}

/// The Plücker relations of the Grassmannian of planes in `n`-space, `n ∈ {4, 5}`.
pub fn plucker(n: usize, characteristic: u64) -> CorpusEntry {
    assert!(
        (4..=5).contains(&n),
        "Plücker relations are provided for n = 4, 5"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let e = pairs.len();
    let var = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).expect("pair");
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    gens.push(alloc::vec![
                        (1, unit(e, &[var(i, j), var(k, l)])),
                        (-1, unit(e, &[var(i, k), var(j, l)])),
                        (1, unit(e, &[var(i, l), var(j, k)])),
                    ]);
                }
            }
        }
    }
    let count = gens.len();
    CorpusEntry::new(
        alloc::format!("plucker-2-{n}"),
        integer_ideal(characteristic, e, gens),
    )
    .with_dim(2 * n - 3)
    .with_cm(true)
    .expect(Fact::GeneratorCount(count), Provenance::Trivial)
}

/// Generators of `entry` over `field`, for quick use in tests.
pub fn polynomials<F: Field>(entry: &CorpusEntry, field: &F) -> crate::Result<Vec<Polynomial<F>>> {
    entry.ideal.polynomials(field)
}

/// The built-in corpus: small enough that every entry's Betti table fits a test run.
pub fn builtin() -> Vec<CorpusEntry> {
    let mut out = alloc::vec![
        complete_intersection_squares(1, 2, 0),
        complete_intersection_squares(2, 2, 0),
        complete_intersection_squares(3, 3, 0),
        complete_intersection_squares(2, 4, 0),
        fermat_hypersurface(3, 2, 0),
        fermat_hypersurface(2, 3, 0),
        plucker(4, 0),
        veronese_presentation(2, 1, 0).expect("small"),
        segre_presentation(&[1, 1], 0).expect("small"),
        segre_presentation(&[2, 1], 0).expect("small"),
    ];
    for (name, v, edges) in [
        ("path-3", 3, &[(0, 1), (1, 2)][..]),
        ("triangle", 3, &[(0, 1), (1, 2), (0, 2)][..]),
        ("path-4", 4, &[(0, 1), (1, 2), (2, 3)][..]),
        ("square", 4, &[(0, 1), (1, 2), (2, 3), (0, 3)][..]),
        ("two-edges", 4, &[(0, 1), (2, 3)][..]),
        ("pentagon", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)][..]),
    ] {
        let g = Graph::new(v, edges).expect("valid graph");
        let mut entry = edge_ideal(&g, 0);
        entry.name = name.into();
        out.push(entry);
    }
    out
}

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use itertools::Itertools;

use super::{integer_ideal, unit, CorpusEntry, Fact, Provenance};
use crate::{Error, Result};

/// A simple graph on `0..v`, with edges stored as sorted pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

pub const MAX_VERTICES: usize = 7;

impl Graph {
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertices > MAX_VERTICES {
            return Err(Error::TooLarge(alloc::format!("{vertices} vertices")));
        }
        let mut out: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b || a >= vertices || b >= vertices {
                return Err(Error::Invalid(alloc::format!(
                    "edge ({a}, {b}) on {vertices} vertices"
                )));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Graph {
            vertices,
            edges: out,
        })
    }

    fn from_mask(vertices: usize, mask: u32) -> Self {
        let edges = pair_list(vertices)
            .into_iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, p)| p)
            .collect();
        Graph { vertices, edges }
    }

    fn mask(&self) -> u32 {
        let pairs = pair_list(self.vertices);
        self.edges
            .iter()
            .map(|p| 1u32 << pairs.iter().position(|q| q == p).expect("edge"))
            .sum()
    }
}

fn pair_list(v: usize) -> Vec<(usize, usize)> {
    (0..v)
        .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
        .collect()
}

/// The relabelling of `g` with the smallest edge mask.
pub fn canonical_form(g: &Graph) -> Graph {
    let v = g.vertices;
    let pairs = pair_list(v);
    let mut index = alloc::vec![0usize; v * v];
    for (k, &(a, b)) in pairs.iter().enumerate() {
        index[a * v + b] = k;
        index[b * v + a] = k;
    }
    let best = (0..v)
        .permutations(v)
        .map(|p| {
            g.edges
                .iter()
                .map(|&(a, b)| 1u32 << index[p[a] * v + p[b]])
                .sum::<u32>()
        })
        .min()
        .unwrap_or(0);
    Graph::from_mask(v, best)
}

/// One representative per isomorphism class of graphs on `v ≤ 6` vertices, in
/// increasing order of canonical edge mask.
pub fn all_graphs(v: usize) -> Result<Vec<Graph>> {
    if v > 6 {
        return Err(Error::TooLarge(alloc::format!(
            "enumerating graphs on {v} vertices"
        )));
    }
    let n = v * v.saturating_sub(1) / 2;
    let mut seen = BTreeSet::new();
    for mask in 0u32..1 << n {
        let g = Graph::from_mask(v, mask);
        seen.insert(canonical_form(&g).mask());
    }
    Ok(seen.into_iter().map(|m| Graph::from_mask(v, m)).collect())
}

/// `k[x_1..x_v]/(x_a x_b : ab an edge)`.
pub fn edge_ideal(g: &Graph, characteristic: u64) -> CorpusEntry {
    let v = g.vertices;
    let gens = g
        .edges
        .iter()
        .map(|&(a, b)| alloc::vec![(1, unit(v, &[a, b]))])
        .collect();
    let edges: Vec<_> = g
        .edges
        .iter()
        .map(|(a, b)| alloc::format!("{a}{b}"))
        .collect();
    CorpusEntry::new(
        alloc::format!("edges-{v}-[{}]", edges.join(",")),
        integer_ideal(characteristic, v, gens),
    )
    .expect(Fact::GeneratorCount(g.edges.len()), Provenance::Trivial)
}

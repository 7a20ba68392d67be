//! `examples gen`: ideal files for the built-in families.

use anyhow::{bail, Result};
use clap::Subcommand;
use syzygy_core::corpus::{self, CorpusEntry, Graph};

#[derive(Debug, Clone, Subcommand)]
pub enum Family {
    /// Squares of the first C of E variables.
    Ci { c: usize, e: usize },
    /// x_1^d + ... + x_e^d.
    Fermat { e: usize, d: u32 },
    /// Plücker quadrics of the Grassmannian of planes in N-space, N = 4 or 5.
    Plucker { n: usize },
    /// Degree-Q Veronese ring of a polynomial ring in Q*N variables.
    Veronese { q: usize, n: usize },
    /// Segre product of projective spaces of the given dimensions.
    Segre {
        #[arg(required = true)]
        dims: Vec<usize>,
    },
    /// C random quadrics in E variables over F_32003.
    Generic { e: usize, c: usize },
    /// Artinian Gorenstein ring with h-vector (1,5,5,1) over F_32003.
    Gorenstein,
    /// Edge ideal of a graph, edges written as "0-1,1-2".
    Graph { vertices: usize, edges: String },
    /// An entry of the built-in corpus by name.
    Builtin { name: String },
}

fn parse_edges(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let Some((a, b)) = p.split_once('-') else {
                bail!("edge {p:?} is not of the form a-b")
            };
            Ok((a.trim().parse()?, b.trim().parse()?))
        })
        .collect()
}

/// The entry for `family`. `characteristic` applies to families with integer
/// coefficients; generic families always live over F_32003.
pub fn generate(family: &Family, seed: u64, characteristic: u64) -> Result<CorpusEntry> {
    Ok(match family {
        Family::Ci { c, e } => {
            if c > e {
                bail!("at most {e} squares in {e} variables");
            }
            corpus::complete_intersection_squares(*c, *e, characteristic)
        }
        Family::Fermat { e, d } => corpus::fermat_hypersurface(*e, *d, characteristic),
        Family::Plucker { n } => {
            if !(4..=5).contains(n) {
                bail!("Plücker relations are provided for n = 4, 5");
            }
            corpus::plucker(*n, characteristic)
        }
        Family::Veronese { q, n } => corpus::veronese_presentation(*q, *n, characteristic)?,
        Family::Segre { dims } => corpus::segre_presentation(dims, characteristic)?,
        Family::Generic { e, c } => corpus::generic_quadrics(*e, *c, seed),
        Family::Gorenstein => corpus::apolarity_gorenstein(seed)?,
        Family::Graph { vertices, edges } => corpus::edge_ideal(
            &Graph::new(*vertices, &parse_edges(edges)?)?,
            characteristic,
        ),
        Family::Builtin { name } => match corpus::builtin().into_iter().find(|e| e.name == *name) {
            Some(mut e) => {
                e.ideal.characteristic = characteristic;
                e
            }
            None => {
                let names: Vec<String> = corpus::builtin().into_iter().map(|e| e.name).collect();
                bail!("no built-in entry {name:?}; known: {}", names.join(", "))
            }
        },
    })
}

use alloc::vec::Vec;

use super::{minimal_resolution, Resolution, TorProfile};
use crate::exactla::{rank_of_vectors, Field, Matrix, SparseVec};
use crate::gradedring::{FreeModule, LinearizedModule, QuotientAlgebra};
use crate::koszul::{cycle_submodule, submodule_linearize, Koszul, KoszulPiece, SubsetIndex};
use crate::{Error, Result};

/// Offsets of the blocks `N_{j - deg g}` of `F_i ⊗ N` in degree `j`.
fn tensor_layout<F: Field>(
    degrees: &[i64],
    n: &LinearizedModule<F>,
    j: i64,
) -> Result<(Vec<usize>, usize)> {
    let mut offsets = Vec::with_capacity(degrees.len());
    let mut total = 0;
    for &g in degrees {
        offsets.push(total);
        total += n.dim(j - g)?;
    }
    Ok((offsets, total))
}

fn step_degrees<F: Field>(res: &Resolution<F>, i: usize) -> &[i64] {
    res.steps.get(i).map_or(&[], |s| &s.source_degrees)
}

/// `∂_i ⊗ N : F_i ⊗ N → F_{i-1} ⊗ N` in degree `j`, for `i ≥ 1`.
fn tensor_differential<F: Field>(
    alg: &QuotientAlgebra<F>,
    res: &Resolution<F>,
    n: &LinearizedModule<F>,
    i: usize,
    j: i64,
) -> Result<Matrix<F>> {
    let f = n.field().clone();
    let src = step_degrees(res, i);
    let tgt = step_degrees(res, i - 1);
    let (_, rows) = tensor_layout(tgt, n, j)?;
    let (tgt_off, _) = tensor_layout(tgt, n, j)?;
    let tgt_free = FreeModule {
        degrees: tgt.to_vec(),
    };
    let mut cols = Vec::new();
    for (g, &deg) in src.iter().enumerate() {
        let nd = n.dim(j - deg)?;
        if nd == 0 {
            continue;
        }
        let lay = tgt_free.layout(alg, deg)?;
        let mut terms = Vec::new();
        for (idx, c) in &res.steps[i].images[g] {
            let (h, k) = lay.locate(*idx as usize);
            let mu = alg.standard_monomial((deg - tgt[h]) as u32, k)?.clone();
            terms.push((h, mu, c.clone()));
        }
        for b in 0..nd as u32 {
            let mut col = Vec::new();
            for (h, mu, c) in &terms {
                for (x, v) in n.act_monomial(mu, j - deg, &[(b, c.clone())])? {
                    col.push((tgt_off[*h] as u32 + x, v));
                }
            }
            cols.push(crate::exactla::sparse::normalize(&f, col));
        }
    }
    Matrix::from_columns(f, rows, cols)
}

fn tensor_dim<F: Field>(
    res: &Resolution<F>,
    n: &LinearizedModule<F>,
    i: usize,
    j: i64,
) -> Result<usize> {
    Ok(tensor_layout(step_degrees(res, i), n, j)?.1)
}

fn tensor_rank<F: Field>(
    alg: &QuotientAlgebra<F>,
    res: &Resolution<F>,
    n: &LinearizedModule<F>,
    i: usize,
    j: i64,
) -> Result<usize> {
    if i == 0 || res.steps.get(i).is_none() {
        return Ok(0);
    }
    let m = tensor_differential(alg, res, n, i, j)?;
    Ok(rank_of_vectors(m.field(), m.nrows(), m.columns()))
}

/// `dim Tor_i^R(L, N)_j` for `i ≤ i_max` and `j ≤ d_max`, from a minimal resolution of
/// `L` tensored with `N`. `N` must be materialized through `d_max - d_min(L)` and `alg`
/// through `d_max - d_min(L) - d_min(N)`.
pub fn tor_between<F: Field>(
    alg: &QuotientAlgebra<F>,
    l: &LinearizedModule<F>,
    n: &LinearizedModule<F>,
    i_max: usize,
    d_max: i64,
) -> Result<TorProfile> {
    let res = minimal_resolution(alg, l, i_max + 1, d_max - n.d_min())?;
    let d_lo = l.d_min() + n.d_min();
    let mut prof = TorProfile::new(i_max, d_lo, d_max);
    for j in d_lo..=d_max {
        for i in 0..=i_max {
            let dim = tensor_dim(&res, n, i, j)?;
            if dim == 0 {
                continue;
            }
            let h = dim - tensor_rank(alg, &res, n, i, j)? - tensor_rank(alg, &res, n, i + 1, j)?;
            prof.set(i, j, h);
        }
    }
    Ok(prof)
}

/// One internal degree of the four-term sequence
/// `0 → Tor_1(B_{a-1}, N) → Z_a ⊗ N → Z_a(K ⊗ N) → Tor_1(C_{a-1}, N) → 0`
/// for `K` the Koszul complex of `R` and `N = Z_b(K^M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SerraCheck {
    pub a: usize,
    pub b: usize,
    pub j: i64,
    pub tor1_boundaries: usize,
    pub cycles_tensor: usize,
    pub tensor_cycles: usize,
    pub tor1_cokernel: usize,
    /// Rank of the multiplication map `Z_a ⊗ N → Z_a(K ⊗ N)`.
    pub phi_rank: usize,
    /// `(dim Tor_2(B_{a-1}, N)_j, dim Tor_1(Z_a, N)_j)`.
    pub shifted_tor: (usize, usize),
}

impl SerraCheck {
    /// Exactness at the level of dimensions, with the kernel and cokernel of the
    /// multiplication map matching the outer terms.
    pub fn holds(&self) -> bool {
        self.cycles_tensor - self.phi_rank == self.tor1_boundaries
            && self.tensor_cycles - self.phi_rank == self.tor1_cokernel
            && self.shifted_tor.0 == self.shifted_tor.1
    }
}

/// Checks the four-term sequence in every internal degree `j ≤ j_max`, with `a ≥ 1`.
pub fn check_serra_sequence<F: Field>(
    alg: &mut QuotientAlgebra<F>,
    m: &LinearizedModule<F>,
    a: usize,
    b: usize,
    j_max: i64,
) -> Result<Vec<SerraCheck>> {
    if a == 0 {
        return Err(Error::Invalid("the sequence needs a ≥ 1".into()));
    }
    let e = alg.nvars();
    let depth = j_max + 2;
    alg.precompute(depth.max(0) as u32)?;
    let r = LinearizedModule::algebra(alg, depth as u32)?;
    let bnd = submodule_linearize(&r, KoszulPiece::Boundaries, a - 1, depth)?;
    let cok = submodule_linearize(&r, KoszulPiece::Cokernel, a - 1, depth)?;
    let (za, za_bases) = cycle_submodule(&r, a, depth)?;
    let n = submodule_linearize(m, KoszulPiece::Cycles, b, depth)?;
    let tor_b = tor_between(alg, &bnd, &n, 2, j_max)?;
    let tor_c = tor_between(alg, &cok, &n, 1, j_max)?;
    let tor_z = tor_between(alg, &za, &n, 1, j_max)?;
    let res_z = minimal_resolution(alg, &za, 0, j_max - n.d_min())?;
    let mut kn = Koszul::new(&n)?;
    let subsets = SubsetIndex::new(e);
    let f = alg.field().clone();
    let mut out = Vec::new();
    for j in (a as i64 + n.d_min())..=j_max {
        let tensor_cycles = kn.strand_dim(a, j)? - kn.rank(a, j)?;
        // φ on F_0 ⊗ N, where F_0 → Z_a is the minimal cover.
        let gens = step_degrees(&res_z, 0);
        let nd_out = n.dim(j - a as i64)? as u32;
        let mut cols: Vec<SparseVec<F::Elem>> = Vec::new();
        for (g, &deg) in gens.iter().enumerate() {
            let nd = n.dim(j - deg)?;
            if nd == 0 {
                continue;
            }
            // The generator as an element of K_a in degree `deg`.
            let basis = &za_bases[(deg - za.d_min()) as usize];
            let mut z: SparseVec<F::Elem> = Vec::new();
            for (k, c) in &res_z.steps[0].images[g] {
                z = crate::exactla::sparse::add_scaled(&f, &z, c, &basis[*k as usize]);
            }
            let rd = alg.dim(deg - a as i64)?.max(1) as u32;
            for bb in 0..nd as u32 {
                let mut col = Vec::new();
                for (x, c) in &z {
                    let t = subsets.subsets(a)[(x / rd) as usize];
                    let mu = alg.standard_monomial((deg - a as i64) as u32, (x % rd) as usize)?;
                    let base = subsets.position(t) as u32 * nd_out;
                    for (y, v) in n.act_monomial(mu, j - deg, &[(bb, c.clone())])? {
                        col.push((base + y, v));
                    }
                }
                cols.push(crate::exactla::sparse::normalize(&f, col));
            }
        }
        let phi_rank = rank_of_vectors(&f, kn.strand_dim(a, j)?, &cols);
        out.push(SerraCheck {
            a,
            b,
            j,
            tor1_boundaries: tor_b.get(1, j).unwrap_or(0),
            cycles_tensor: tor_z.get(0, j).unwrap_or(0),
            tensor_cycles,
            tor1_cokernel: tor_c.get(1, j).unwrap_or(0),
            phi_rank,
            shifted_tor: (tor_b.get(2, j).unwrap_or(0), tor_z.get(1, j).unwrap_or(0)),
        });
    }
    Ok(out)
}

//! Products on Koszul complexes: the wedge product `K ⊗ K^M → K^M`, the diagonal of
//! the exterior algebra, and the maps
//! `β_{a,b} : Z_{a+b}(K^M) → Z_a(K ⊗ Z_b(K^M))` and `α_{a,b}` in the other direction.
//!
//! `K` is the Koszul complex of `R` on its variables and `K^M = K ⊗_R M`. Strand
//! coordinates follow [`crate::koszul`].

mod exterior;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

pub use exterior::{
    basis_wedge, check_diagonal_commutes, check_partials_anticommute, d_left, d_right, diagonal,
    diagonal_of, koszul_d, tensor_product, wedge_basis, wedge_sign, TensorE, WedgeS,
};

use crate::audit::Verdict;
use crate::exactla::{rank_of_vectors, sparse, Echelon, Field, Matrix, SparseVec};
use crate::gradedring::{binomial, LinearizedModule, QuotientAlgebra};
use crate::koszul::{cycle_submodule, Koszul, SubsetIndex};
use crate::{Error, Result};

/// An element of the strand `(i, j)` of a Koszul complex.
#[derive(Debug, Clone, PartialEq)]
pub struct WedgeElement<E> {
    pub i: usize,
    pub j: i64,
    pub coords: SparseVec<E>,
}

/// An element of `K_a ⊗ Z_b(K^M)` in internal degree `j`, over the basis `(e_I, ζ)`
/// with `I` outer and `ζ` running through the reduced echelon basis of `Z_b(K^M)_{j-a}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorStrandElement<E> {
    pub a: usize,
    pub b: usize,
    pub j: i64,
    pub coords: SparseVec<E>,
}

/// `u · w` for `u` in `K` (the Koszul complex of `alg`) and `w` in `K^M`.
pub fn wedge_multiply<F: Field>(
    alg: &QuotientAlgebra<F>,
    m: &LinearizedModule<F>,
    u: &WedgeElement<F::Elem>,
    w: &WedgeElement<F::Elem>,
) -> Result<WedgeElement<F::Elem>> {
    let f = m.field();
    let e = m.nvars();
    if alg.nvars() != e {
        return Err(Error::Shape(alloc::format!(
            "{} and {} variables",
            alg.nvars(),
            e
        )));
    }
    let subsets = SubsetIndex::new(e);
    let (i, j) = (u.i + w.i, u.j + w.j);
    let out = WedgeElement {
        i,
        j,
        coords: Vec::new(),
    };
    if i > e {
        return Ok(out);
    }
    let du = u.j - u.i as i64;
    let dw = w.j - w.i as i64;
    let ru = alg.dim(du)?.max(1) as u32;
    let mw = m.dim(dw)?.max(1) as u32;
    let mo = m.dim(dw + du)? as u32;
    let mut acc = Vec::new();
    for (x, cu) in &u.coords {
        let t = subsets.subsets(u.i)[(x / ru) as usize];
        let mu = alg.standard_monomial(du as u32, (x % ru) as usize)?;
        for (y, cw) in &w.coords {
            let s = subsets.subsets(w.i)[(y / mw) as usize];
            let Some((sign, ts)) = wedge_basis(t, s) else {
                continue;
            };
            let c = f.mul(cu, cw);
            let c = if sign < 0 { f.neg(&c) } else { c };
            let base = subsets.position(ts) as u32 * mo;
            for (k, v) in m.act_monomial(mu, dw, &[(y % mw, c.clone())])? {
                acc.push((base + k, v));
            }
        }
    }
    Ok(WedgeElement {
        coords: sparse::normalize(f, acc),
        ..out
    })
}

/// The Koszul differential applied to a strand element.
pub fn boundary_of<F: Field>(
    m: &LinearizedModule<F>,
    u: &WedgeElement<F::Elem>,
) -> Result<WedgeElement<F::Elem>> {
    let d = Koszul::new(m)?.differential(u.i, u.j)?;
    Ok(WedgeElement {
        i: u.i.saturating_sub(1),
        j: u.j,
        coords: d.apply(&u.coords),
    })
}

/// `β_{a,b}` and `α_{a,b}` for a module `M`, with `Z_b(K^M)` materialized through a
/// fixed internal degree.
pub struct Splitting<'m, F: Field> {
    m: &'m LinearizedModule<F>,
    a: usize,
    b: usize,
    subsets: SubsetIndex,
    cycles: LinearizedModule<F>,
    bases: Vec<Vec<SparseVec<F::Elem>>>,
}

impl<'m, F: Field> Splitting<'m, F> {
    /// Prepares the maps for internal degrees up to `j_max`.
    pub fn new(m: &'m LinearizedModule<F>, a: usize, b: usize, j_max: i64) -> Result<Self> {
        let (cycles, bases) = cycle_submodule(m, b, j_max - a as i64 + 1)?;
        Ok(Splitting {
            m,
            a,
            b,
            subsets: SubsetIndex::new(m.nvars()),
            cycles,
            bases,
        })
    }

    /// `Z_b(K^M)` as a graded module; its Koszul complex is `K ⊗ Z_b(K^M)`.
    pub fn cycle_module(&self) -> &LinearizedModule<F> {
        &self.cycles
    }

    /// Basis of `Z_b(K^M)_d` in the coordinates of the strand `(b, d)` of `K^M`.
    pub fn cycle_basis_at(&self, d: i64) -> Result<&[SparseVec<F::Elem>]> {
        let lo = self.cycles.d_min();
        if d < lo || self.cycles.dim(d)? == 0 {
            return Ok(&[]);
        }
        Ok(&self.bases[(d - lo) as usize])
    }

    /// `β_{a,b}(z)`: the `(a, b)` component of `(Δ ⊗ M)(z)`. Fails unless `z` is a cycle.
    pub fn beta(&self, z: &WedgeElement<F::Elem>) -> Result<TensorStrandElement<F::Elem>> {
        let (a, b) = (self.a, self.b);
        if z.i != a + b {
            return Err(Error::Shape(alloc::format!(
                "expected homological degree {}, got {}",
                a + b,
                z.i
            )));
        }
        let f = self.m.field();
        let j = z.j;
        let md = self.m.dim(j - z.i as i64)?.max(1) as u32;
        let mut parts: BTreeMap<u32, Vec<(u32, F::Elem)>> = BTreeMap::new();
        for (x, c) in &z.coords {
            let t = self.subsets.subsets(z.i)[(x / md) as usize];
            for (i, u, sign) in diagonal(t) {
                if i.count_ones() as usize != a {
                    continue;
                }
                let c = if sign < 0 { f.neg(c) } else { c.clone() };
                let idx = self.subsets.position(u) as u32 * md + x % md;
                parts.entry(i).or_default().push((idx, c));
            }
        }
        let basis = self.cycle_basis_at(j - a as i64)?;
        let n = basis.len() as u32;
        let mut coords = Vec::new();
        for (i, part) in parts {
            let zeta = sparse::normalize(f, part);
            let base = self.subsets.position(i) as u32 * n;
            let mut rest = zeta.clone();
            for (k, row) in basis.iter().enumerate() {
                let x = sparse::get(f, &zeta, row[0].0);
                if !f.is_zero(&x) {
                    rest = sparse::add_scaled(f, &rest, &f.neg(&x), row);
                    coords.push((base + k as u32, x));
                }
            }
            if !rest.is_empty() {
                return Err(Error::NotACycle);
            }
        }
        Ok(TensorStrandElement { a, b, j, coords })
    }

    /// `α_{a,b}(t) = Σ e_I ∧ ζ`.
    pub fn alpha(&self, t: &TensorStrandElement<F::Elem>) -> Result<WedgeElement<F::Elem>> {
        let (a, b) = (self.a, self.b);
        let f = self.m.field();
        let n = a + b;
        let basis = self.cycle_basis_at(t.j - a as i64)?;
        let nb = basis.len().max(1) as u32;
        let md = self.m.dim(t.j - n as i64)?.max(1) as u32;
        let mut acc = Vec::new();
        if n <= self.m.nvars() {
            for (x, c) in &t.coords {
                let i = self.subsets.subsets(a)[(x / nb) as usize];
                for (y, v) in &basis[(x % nb) as usize] {
                    let u = self.subsets.subsets(b)[(y / md) as usize];
                    let Some((sign, iu)) = wedge_basis(i, u) else {
                        continue;
                    };
                    let w = f.mul(c, v);
                    acc.push((
                        self.subsets.position(iu) as u32 * md + y % md,
                        if sign < 0 { f.neg(&w) } else { w },
                    ));
                }
            }
        }
        Ok(WedgeElement {
            i: n,
            j: t.j,
            coords: sparse::normalize(f, acc),
        })
    }
}

/// Result of comparing `α_{a,b} ∘ β_{a,b}` with `C(a+b, a) · id` on `Z_{a+b}(K^M)_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReport {
    pub a: usize,
    pub b: usize,
    pub j: i64,
    pub binomial: u64,
    pub cycles_checked: usize,
    /// Index of the first basis cycle whose image under `β` is not a `∂'`-cycle.
    pub beta_not_cycle: Option<usize>,
    /// Index of the first basis cycle where the composite differs from the multiple.
    pub first_violation: Option<usize>,
}

impl SplitReport {
    pub fn holds(&self) -> bool {
        self.beta_not_cycle.is_none() && self.first_violation.is_none()
    }
}

pub fn verify_splitting<F: Field>(
    m: &LinearizedModule<F>,
    a: usize,
    b: usize,
    j: i64,
) -> Result<SplitReport> {
    let f = m.field();
    let n = a + b;
    let c = binomial(n, a);
    let factor = f.from_i64(c as i64);
    let split = Splitting::new(m, a, b, j)?;
    let z = Koszul::new(m)?.cycle_basis(n, j)?;
    let tensor_d = Koszul::new(split.cycle_module())?.differential(a, j)?;
    let mut report = SplitReport {
        a,
        b,
        j,
        binomial: c as u64,
        cycles_checked: z.ncols(),
        beta_not_cycle: None,
        first_violation: None,
    };
    for (k, col) in z.columns().iter().enumerate() {
        let w = WedgeElement {
            i: n,
            j,
            coords: col.clone(),
        };
        let t = split.beta(&w)?;
        if report.beta_not_cycle.is_none() && !tensor_d.apply(&t.coords).is_empty() {
            report.beta_not_cycle = Some(k);
        }
        let back = split.alpha(&t)?;
        if report.first_violation.is_none() && back.coords != sparse::scale(f, col, &factor) {
            report.first_violation = Some(k);
        }
    }
    Ok(report)
}

/// How homology representatives are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepChoice {
    /// Complement of the boundary echelon basis among the cycle basis.
    First,
    /// An invertible recombination of the first choice plus boundaries.
    Shifted,
}

fn representatives<F: Field>(
    k: &Koszul<'_, F>,
    i: usize,
    j: i64,
    choice: RepChoice,
) -> Result<Vec<SparseVec<F::Elem>>> {
    let reps = k.homology_reps(i, j)?.into_columns();
    if choice == RepChoice::First || reps.is_empty() {
        return Ok(reps);
    }
    let f = k.module().field();
    let bnd = k.boundary_basis(i, j)?;
    let shift = bnd.columns().iter().fold(Vec::new(), |acc, c| {
        sparse::add_scaled(f, &acc, &f.one(), c)
    });
    let two = f.from_i64(2);
    Ok((0..reps.len())
        .map(|r| {
            let mut v = sparse::add_scaled(f, &reps[r], &f.one(), &shift);
            if r + 1 < reps.len() {
                v = sparse::add_scaled(f, &v, &two, &reps[r + 1]);
            }
            v
        })
        .collect())
}

/// Dimensions of `(H_a(K) · H_b(K^M))_j` and of `H_{a+b}(K^M)_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductDims {
    pub products: usize,
    pub homology: usize,
}

/// Span of the products of representatives, as cycles of `K^M` in strand `(a+b, j)`.
pub fn product_cycles<F: Field>(
    alg: &QuotientAlgebra<F>,
    m: &LinearizedModule<F>,
    a: usize,
    b: usize,
    j: i64,
    choice: RepChoice,
) -> Result<Vec<SparseVec<F::Elem>>> {
    let r = LinearizedModule::algebra(alg, (j - a as i64 - m.d_min()).max(0) as u32 + 1)?;
    let kr = Koszul::new(&r)?;
    let km = Koszul::new(m)?;
    let mut out = Vec::new();
    if a + b > m.nvars() {
        return Ok(out);
    }
    for j1 in a as i64..=j - b as i64 - m.d_min() {
        let left = representatives(&kr, a, j1, choice)?;
        if left.is_empty() {
            continue;
        }
        let right = representatives(&km, b, j - j1, choice)?;
        for u in &left {
            for w in &right {
                let u = WedgeElement {
                    i: a,
                    j: j1,
                    coords: u.clone(),
                };
                let w = WedgeElement {
                    i: b,
                    j: j - j1,
                    coords: w.clone(),
                };
                out.push(wedge_multiply(alg, m, &u, &w)?.coords);
            }
        }
    }
    Ok(out)
}

/// `dim (H_a(K) · H_b(K^M))_j` inside `H_{a+b}(K^M)_j`, from products of
/// representatives reduced modulo boundaries.
pub fn product_dims<F: Field>(
    alg: &QuotientAlgebra<F>,
    m: &LinearizedModule<F>,
    a: usize,
    b: usize,
    j: i64,
    choice: RepChoice,
) -> Result<ProductDims> {
    let n = a + b;
    let mut k = Koszul::new(m)?;
    let homology = k.betti(n, j)?;
    let dim = k.strand_dim(n, j)?;
    let bnd = k.boundary_basis(n, j)?.into_columns();
    let base = bnd.len();
    let mut all = bnd;
    all.extend(product_cycles(alg, m, a, b, j, choice)?);
    let products = rank_of_vectors(m.field(), dim, &all) - base;
    Ok(ProductDims { products, homology })
}

/// [`product_dims`] for `M = R`.
pub fn homology_product_dims<F: Field>(
    alg: &QuotientAlgebra<F>,
    a: usize,
    b: usize,
    j: i64,
) -> Result<ProductDims> {
    let r = LinearizedModule::algebra(alg, j.max(0) as u32 + 1)?;
    product_dims(alg, &r, a, b, j, RepChoice::First)
}

/// Whether `α_{a,b}` composed with the projection onto `H_{a+b}(K^M)/(H_a(K) H_b(K^M))`
/// is onto in degree `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaReport {
    pub a: usize,
    pub b: usize,
    pub j: i64,
    pub verdict: Verdict,
    /// `dim` of the target quotient in degree `j`.
    pub cokernel_dim: usize,
    /// `dim` of the image of `α` in that quotient.
    pub image_dim: usize,
}

pub fn gamma_surjectivity_check<F: Field>(
    alg: &QuotientAlgebra<F>,
    m: &LinearizedModule<F>,
    a: usize,
    b: usize,
    j: i64,
) -> Result<GammaReport> {
    let f = m.field();
    let n = a + b;
    let dims = product_dims(alg, m, a, b, j, RepChoice::First)?;
    let cokernel_dim = dims.homology - dims.products;
    let mut report = GammaReport {
        a,
        b,
        j,
        verdict: Verdict::HypothesisNotMet,
        cokernel_dim,
        image_dim: 0,
    };
    if f.is_zero(&f.from_i64(binomial(n, a) as i64)) {
        return Ok(report);
    }
    let k = Koszul::new(m)?;
    let dim = k.strand_dim(n, j)?;
    let mut base = Echelon::new(f.clone(), dim);
    for v in k
        .boundary_basis(n, j)?
        .into_columns()
        .into_iter()
        .chain(product_cycles(alg, m, a, b, j, RepChoice::First)?)
    {
        base.insert_lead(v);
    }
    let floor = base.rank();
    let split = Splitting::new(m, a, b, j)?;
    let tensor_cycles: Matrix<F> = Koszul::new(split.cycle_module())?.cycle_basis(a, j)?;
    for col in tensor_cycles.into_columns() {
        let t = TensorStrandElement {
            a,
            b,
            j,
            coords: col,
        };
        base.insert_lead(split.alpha(&t)?.coords);
    }
    report.image_dim = base.rank() - floor;
    report.verdict = if report.image_dim == cokernel_dim {
        Verdict::Verified
    } else {
        Verdict::Violated
    };
    Ok(report)
}

/// Per-column outcome of the decomposability checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposabilityRow {
    pub i: usize,
    /// `H_i(K)_j = 0` for `j > 2i`: explicit on `2i < j ≤ 2i + extra`, certified beyond
    /// by the initial-ideal bound.
    pub vanishing: Verdict,
    /// `dim (H_1(K)_2)^i`.
    pub power_dim: usize,
    /// `dim H_i(K)_{2i}`.
    pub homology_dim: usize,
    pub generated: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposabilityReport {
    pub n: usize,
    pub hypothesis: crate::resolve::PregReport,
    pub rows: Vec<DecomposabilityRow>,
}

impl DecomposabilityReport {
    pub fn verdict(&self) -> Verdict {
        if self.hypothesis.is_zero() != Some(true) {
            return Verdict::HypothesisNotMet;
        }
        self.rows
            .iter()
            .flat_map(|r| [r.vanishing, r.generated])
            .max()
            .unwrap_or(Verdict::Verified)
    }
}

/// For `0 ≤ i ≤ n`: `H_i(K)_j = 0` for `j > 2i` and `H_i(K)_{2i} = (H_1(K)_2)^i`, under
/// `preg^R_{n+1}(k) = 0`. The vanishing is computed explicitly for `extra` rows past
/// the diagonal.
pub fn decomposability_report<F: Field>(
    alg: &mut QuotientAlgebra<F>,
    n: usize,
    extra: i64,
) -> Result<DecomposabilityReport> {
    let window = crate::resolve::default_preg_window(alg, n + 1);
    let hypothesis = crate::resolve::preg_residue_field(alg, n + 1, window)?;
    let mut report = DecomposabilityReport {
        n,
        hypothesis,
        rows: Vec::new(),
    };
    if report.hypothesis.is_zero() != Some(true) {
        return Ok(report);
    }
    let e = alg.nvars();
    let top = n.min(e);
    let cert = alg.certify_initial_ideal(2 * alg.max_generator_degree().max(2))?;
    let depth = top as i64 + extra + 2;
    alg.precompute(depth as u32)?;
    let r = LinearizedModule::algebra(alg, depth as u32)?;
    let f = r.field().clone();
    let mut k = Koszul::new(&r)?;
    let ones = k.homology_reps(1, 2)?.into_columns();
    let mut power: Vec<SparseVec<F::Elem>> = Vec::new();
    for i in 0..=top {
        let diag = 2 * i as i64;
        let mut vanishing = Verdict::Verified;
        for j in diag + 1..=diag + extra {
            if k.betti(i, j)? != 0 {
                vanishing = Verdict::Violated;
            }
        }
        let certified = cert
            .as_ref()
            .is_some_and(|c| c.betti_column_bound(e, i) <= crate::ExtInt::Fin(diag));
        if vanishing == Verdict::Verified && !certified {
            vanishing = Verdict::Truncated;
        }
        power = if i == 0 {
            k.cycle_basis(0, 0)?.into_columns()
        } else {
            let mut next = Vec::new();
            for h in &ones {
                for p in &power {
                    let u = WedgeElement {
                        i: 1,
                        j: 2,
                        coords: h.clone(),
                    };
                    let w = WedgeElement {
                        i: i - 1,
                        j: diag - 2,
                        coords: p.clone(),
                    };
                    next.push(wedge_multiply(alg, &r, &u, &w)?.coords);
                }
            }
            next
        };
        let bnd = k.boundary_basis(i, diag)?.into_columns();
        let dim = k.strand_dim(i, diag)?;
        let keep = crate::exactla::complement_indices(&f, dim, &bnd, &power);
        power = keep.into_iter().map(|x| power[x].clone()).collect();
        let homology_dim = k.betti(i, diag)?;
        let generated = if power.len() == homology_dim {
            Verdict::Verified
        } else {
            Verdict::Violated
        };
        report.rows.push(DecomposabilityRow {
            i,
            vanishing,
            power_dim: power.len(),
            homology_dim,
            generated,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::algebra::QuotientAlgebra;
use super::monomial::ExponentVector;
use super::polynomial::Polynomial;
use crate::exactla::{Echelon, Field, Matrix, SparseVec};
use crate::{Error, Result};

/// A graded module given by its pieces `M_d` and the action of each variable
/// `M_d → M_{d+1}`, for `d_min ≤ d ≤ bound`.
///
/// When `top` is known, `M_d = 0` for every `d > top`, including degrees past the bound.
#[derive(Debug, Clone)]
pub struct LinearizedModule<F: Field> {
    field: F,
    nvars: usize,
    d_min: i64,
    dims: Vec<usize>,
    actions: Vec<Vec<Matrix<F>>>,
    top: Option<i64>,
}

impl<F: Field> LinearizedModule<F> {
    /// Assembles a module from pieces; `actions[k][v]` maps degree `d_min + k` to the next.
    pub fn from_parts(
        field: F,
        nvars: usize,
        d_min: i64,
        dims: Vec<usize>,
        actions: Vec<Vec<Matrix<F>>>,
        top: Option<i64>,
    ) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Shape(
                "a module needs at least one materialized degree".into(),
            ));
        }
        if actions.len() + 1 != dims.len() {
            return Err(Error::Shape(format!(
                "{} pieces need {} action layers",
                dims.len(),
                dims.len() - 1
            )));
        }
        for (k, layer) in actions.iter().enumerate() {
            if layer.len() != nvars {
                return Err(Error::Shape(format!(
                    "degree {} has {} action matrices",
                    d_min + k as i64,
                    layer.len()
                )));
            }
            for m in layer {
                if m.ncols() != dims[k] || m.nrows() != dims[k + 1] || m.field() != &field {
                    return Err(Error::Shape(format!(
                        "action out of degree {} has the wrong shape",
                        d_min + k as i64
                    )));
                }
            }
        }
        Ok(LinearizedModule {
            field,
            nvars,
            d_min,
            dims,
            actions,
            top,
        })
    }

    /// `R` itself through degree `d_max`.
    pub fn algebra(a: &QuotientAlgebra<F>, d_max: u32) -> Result<Self> {
        let top = a.top().map(|t| t as i64);
        let hi = match top {
            Some(t) => d_max.min(t as u32 + 1),
            None => d_max,
        };
        let dims = (0..=hi)
            .map(|d| a.dim(d as i64))
            .collect::<Result<Vec<_>>>()?;
        let actions = (0..hi)
            .map(|d| {
                (0..a.nvars())
                    .map(|v| a.action_matrix(v, d).cloned())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        LinearizedModule::from_parts(a.field().clone(), a.nvars(), 0, dims, actions, top)
    }

    /// The residue field `k = R/R_+`, concentrated in degree 0.
    pub fn residue_field(field: F, nvars: usize) -> Self {
        LinearizedModule {
            field,
            nvars,
            d_min: 0,
            dims: vec![1],
            actions: Vec::new(),
            top: Some(0),
        }
    }

    /// A free module `⊕ R(-a_l)` through degree `d_max`.
    pub fn free(a: &QuotientAlgebra<F>, degrees: &[i64], d_max: i64) -> Result<Self> {
        let p = Presentation {
            generator_degrees: degrees.to_vec(),
            relations: Vec::new(),
        };
        linearize_module(a, &p, d_max)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn d_min(&self) -> i64 {
        self.d_min
    }

    /// Highest materialized degree.
    pub fn bound(&self) -> i64 {
        self.d_min + self.dims.len() as i64 - 1
    }

    pub fn top(&self) -> Option<i64> {
        self.top
    }

    pub fn is_finite_length(&self) -> bool {
        self.top.is_some()
    }

    fn vanishes_at(&self, d: i64) -> bool {
        d < self.d_min || self.top.is_some_and(|t| d > t)
    }

    pub fn dim(&self, d: i64) -> Result<usize> {
        if self.vanishes_at(d) {
            return Ok(0);
        }
        self.dims
            .get((d - self.d_min) as usize)
            .copied()
            .ok_or(Error::Truncated {
                degree: d,
                bound: self.bound(),
            })
    }

    /// `x_v · m` for `m ∈ M_d`.
    pub fn act(&self, v: usize, d: i64, m: &[(u32, F::Elem)]) -> Result<SparseVec<F::Elem>> {
        if m.is_empty() || self.vanishes_at(d) || self.vanishes_at(d + 1) {
            return Ok(Vec::new());
        }
        let layer = self
            .actions
            .get((d - self.d_min) as usize)
            .ok_or(Error::Truncated {
                degree: d + 1,
                bound: self.bound(),
            })?;
        Ok(layer[v].apply(m))
    }

    /// Matrix of `x_v : M_d → M_{d+1}`.
    pub fn action_matrix(&self, v: usize, d: i64) -> Result<Matrix<F>> {
        let (src, tgt) = (self.dim(d)?, self.dim(d + 1)?);
        if src == 0 || tgt == 0 {
            return Ok(Matrix::zero(self.field.clone(), tgt, src));
        }
        Ok(self.actions[(d - self.d_min) as usize][v].clone())
    }

    /// `μ · m` for a monomial `μ` and `m ∈ M_d`.
    pub fn act_monomial(
        &self,
        mu: &ExponentVector,
        d: i64,
        m: &[(u32, F::Elem)],
    ) -> Result<SparseVec<F::Elem>> {
        let mut cur = m.to_vec();
        let mut deg = d;
        for (v, &a) in mu.0.iter().enumerate() {
            for _ in 0..a {
                cur = self.act(v, deg, &cur)?;
                deg += 1;
            }
        }
        Ok(cur)
    }

    /// First `(v, w, d)` with `x_v x_w ≠ x_w x_v` on `M_d`, if any.
    pub fn commutativity_defect(&self) -> Option<(usize, usize, i64)> {
        for k in 0..self.actions.len().saturating_sub(1) {
            let d = self.d_min + k as i64;
            for v in 0..self.nvars {
                for w in v + 1..self.nvars {
                    let vw = self.actions[k + 1][v].mul(&self.actions[k][w]).ok()?;
                    let wv = self.actions[k + 1][w].mul(&self.actions[k][v]).ok()?;
                    if vw != wv {
                        return Some((v, w, d));
                    }
                }
            }
        }
        None
    }

    /// Dimensions from `d_min` through the bound.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
}

/// A graded free module `⊕_l R(-a_l)`; the piece in degree `d` is `⊕_l R_{d-a_l}` laid
/// out block by block in generator order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub degrees: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct FreeLayout {
    pub offsets: Vec<usize>,
    pub lens: Vec<usize>,
    pub total: usize,
}

impl FreeLayout {
    /// Generator block and local index of a coordinate.
    pub fn locate(&self, idx: usize) -> (usize, usize) {
        let l = self.offsets.partition_point(|&o| o <= idx) - 1;
        debug_assert!(idx < self.offsets[l] + self.lens[l]);
        (l, idx - self.offsets[l])
    }
}

impl FreeModule {
    pub fn layout<F: Field>(&self, a: &QuotientAlgebra<F>, d: i64) -> Result<FreeLayout> {
        let mut offsets = Vec::with_capacity(self.degrees.len());
        let mut lens = Vec::with_capacity(self.degrees.len());
        let mut total = 0;
        for &g in &self.degrees {
            let n = a.dim(d - g)?;
            offsets.push(total);
            lens.push(n);
            total += n;
        }
        Ok(FreeLayout {
            offsets,
            lens,
            total,
        })
    }

    /// `x_v · x` from degree `d` (layout `lo`) to degree `d+1` (layout `hi`).
    pub fn act<F: Field>(
        &self,
        a: &QuotientAlgebra<F>,
        v: usize,
        d: i64,
        x: &[(u32, F::Elem)],
        lo: &FreeLayout,
        hi: &FreeLayout,
    ) -> Result<SparseVec<F::Elem>> {
        let mut out = Vec::new();
        let mut start = 0;
        while start < x.len() {
            let (l, _) = lo.locate(x[start].0 as usize);
            let end_idx = (lo.offsets[l] + lo.lens[l]) as u32;
            let stop = start + x[start..].partition_point(|(i, _)| *i < end_idx);
            let local: SparseVec<F::Elem> = x[start..stop]
                .iter()
                .map(|(i, c)| (*i - lo.offsets[l] as u32, c.clone()))
                .collect();
            let img = a.act(v, d - self.degrees[l], &local)?;
            out.extend(img.into_iter().map(|(i, c)| (i + hi.offsets[l] as u32, c)));
            start = stop;
        }
        Ok(out)
    }

    /// `μ · x` for a monomial `μ`, where `x` lives in degree `d`.
    pub fn act_monomial<F: Field>(
        &self,
        a: &QuotientAlgebra<F>,
        mu: &ExponentVector,
        d: i64,
        x: &[(u32, F::Elem)],
    ) -> Result<SparseVec<F::Elem>> {
        let mut cur = x.to_vec();
        let mut deg = d;
        let mut lo = self.layout(a, deg)?;
        for (v, &k) in mu.0.iter().enumerate() {
            for _ in 0..k {
                let hi = self.layout(a, deg + 1)?;
                cur = self.act(a, v, deg, &cur, &lo, &hi)?;
                lo = hi;
                deg += 1;
            }
        }
        Ok(cur)
    }

    /// Coordinates of the element whose `l`-th component is the class of `p_l`.
    pub fn element<F: Field>(
        &self,
        a: &QuotientAlgebra<F>,
        components: &[Polynomial<F>],
        layout: &FreeLayout,
    ) -> Result<SparseVec<F::Elem>> {
        let mut out = Vec::new();
        for (l, p) in components.iter().enumerate() {
            if p.is_zero() || layout.lens[l] == 0 {
                continue;
            }
            let nf = a.normal_form(p)?;
            out.extend(
                nf.into_iter()
                    .map(|(i, c)| (i + layout.offsets[l] as u32, c)),
            );
        }
        Ok(out)
    }
}

/// One column of a presentation matrix: a homogeneous element of the free module on
/// the generators, of total degree `degree`.
#[derive(Debug, Clone)]
pub struct Relation<F: Field> {
    pub degree: i64,
    pub components: Vec<Polynomial<F>>,
}

/// The cokernel of `⊕ R(-b_m) → ⊕ R(-a_l)`.
#[derive(Debug, Clone)]
pub struct Presentation<F: Field> {
    pub generator_degrees: Vec<i64>,
    pub relations: Vec<Relation<F>>,
}

impl<F: Field> Presentation<F> {
    /// `k = R/R_+`: one generator in degree 0 killed by every variable.
    pub fn residue_field(field: F, nvars: usize) -> Self {
        let relations = (0..nvars)
            .map(|v| Relation {
                degree: 1,
                components: vec![Polynomial::monomial(
                    field.clone(),
                    ExponentVector::var(nvars, v),
                )],
            })
            .collect();
        Presentation {
            generator_degrees: vec![0],
            relations,
        }
    }

    /// `R/(f_1, …, f_r)` for homogeneous `f_i`.
    pub fn cyclic(polys: &[Polynomial<F>]) -> Result<Self> {
        let relations = polys
            .iter()
            .enumerate()
            .map(|(index, p)| {
                let d = p.degree().ok_or(Error::NotHomogeneous { index })?;
                Ok(Relation {
                    degree: d as i64,
                    components: vec![p.clone()],
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Presentation {
            generator_degrees: vec![0],
            relations,
        })
    }
}

/// Pieces and actions of the cokernel of a presentation through degree `d_max`.
pub fn linearize_module<F: Field>(
    a: &QuotientAlgebra<F>,
    p: &Presentation<F>,
    d_max: i64,
) -> Result<LinearizedModule<F>> {
    let f = a.field().clone();
    let e = a.nvars();
    let ngen = p.generator_degrees.len();
    for (ri, r) in p.relations.iter().enumerate() {
        if r.components.len() != ngen {
            return Err(Error::InconsistentDegrees { relation: ri });
        }
        for (l, c) in r.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.nvars() != e
                || c.degree().map(|d| d as i64) != Some(r.degree - p.generator_degrees[l])
            {
                return Err(Error::InconsistentDegrees { relation: ri });
            }
        }
    }
    let Some(&d_min) = p.generator_degrees.iter().min() else {
        return LinearizedModule::from_parts(f, e, 0, vec![0], Vec::new(), Some(-1));
    };
    let a_max = *p.generator_degrees.iter().max().expect("nonempty");
    let mut top_bound = a.top().map(|t| a_max + t as i64);
    let d_hi = match top_bound {
        Some(t) => d_max.min(t + 1),
        None => d_max,
    };
    if d_hi < d_min {
        return LinearizedModule::from_parts(f, e, d_min, vec![0], Vec::new(), Some(d_min - 1));
    }
    let free = FreeModule {
        degrees: p.generator_degrees.clone(),
    };
    let layouts = (d_min..=d_hi)
        .map(|d| free.layout(a, d))
        .collect::<Result<Vec<_>>>()?;
    let lay = |d: i64| &layouts[(d - d_min) as usize];

    let mut subs: Vec<Echelon<F>> = Vec::new();
    let mut images: Vec<Vec<SparseVec<F::Elem>>> = vec![Vec::new(); p.relations.len()];
    for d in d_min..=d_hi {
        let mut ech = Echelon::new(f.clone(), lay(d).total);
        for (ri, r) in p.relations.iter().enumerate() {
            if d < r.degree {
                continue;
            }
            let next = if d == r.degree {
                vec![free.element(a, &r.components, lay(d))?]
            } else {
                let k = (d - r.degree) as u32;
                let n = a.dim(k as i64)?;
                let mut out = Vec::with_capacity(n);
                for j in 0..n {
                    let (v, parent) = a.parent(k, j)?;
                    out.push(free.act(a, v, d - 1, &images[ri][parent], lay(d - 1), lay(d))?);
                }
                out
            };
            for x in &next {
                ech.insert_lead(x.clone());
            }
            images[ri] = next;
        }
        subs.push(ech);
    }
    let dims: Vec<usize> = subs.iter().map(|s| s.dim() - s.rank()).collect();
    if let Some(z) = (d_min..=d_hi).find(|&d| d >= a_max && dims[(d - d_min) as usize] == 0) {
        top_bound = Some(top_bound.map_or(z - 1, |t| t.min(z - 1)));
    }
    let positions: Vec<Vec<u32>> = subs
        .iter()
        .map(|s| {
            let mut pos = vec![u32::MAX; s.dim()];
            for (k, c) in s.free_columns().into_iter().enumerate() {
                pos[c as usize] = k as u32;
            }
            pos
        })
        .collect();
    let mut actions = Vec::new();
    for d in d_min..d_hi {
        let (k, k1) = ((d - d_min) as usize, (d - d_min + 1) as usize);
        let free_cols = subs[k].free_columns();
        let mut layer = Vec::with_capacity(e);
        for v in 0..e {
            let cols = free_cols
                .iter()
                .map(|&c| {
                    let img = free.act(a, v, d, &[(c, f.one())], lay(d), lay(d + 1))?;
                    Ok(subs[k1]
                        .reduce(img)
                        .into_iter()
                        .map(|(i, x)| (positions[k1][i as usize], x))
                        .collect())
                })
                .collect::<Result<Vec<_>>>()?;
            layer.push(Matrix::from_columns_unchecked(f.clone(), dims[k1], cols));
        }
        actions.push(layer);
    }
    LinearizedModule::from_parts(f, e, d_min, dims, actions, top_bound)
}

/// The submodule spanned degreewise by `spans[k]` inside an ambient module whose
/// variable action is `act(v, d, x)`. Bases are the reduced echelon forms of the spans.
pub fn submodule_from_spans<F, A>(
    field: F,
    nvars: usize,
    d_min: i64,
    ambient_dims: &[usize],
    spans: Vec<Vec<SparseVec<F::Elem>>>,
    top: Option<i64>,
    mut act: A,
) -> Result<(LinearizedModule<F>, Vec<Vec<SparseVec<F::Elem>>>)>
where
    F: Field,
    A: FnMut(usize, i64, &[(u32, F::Elem)]) -> Result<SparseVec<F::Elem>>,
{
    let bases: Vec<Vec<SparseVec<F::Elem>>> = spans
        .into_iter()
        .zip(ambient_dims)
        .map(|(span, &n)| {
            let mut e = Echelon::new(field.clone(), n);
            for v in span {
                e.insert_lead(v);
            }
            e.rref_rows()
        })
        .collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.len()).collect();
    let mut actions = Vec::new();
    for k in 0..bases.len().saturating_sub(1) {
        let d = d_min + k as i64;
        let target = &bases[k + 1];
        let pivots: Vec<u32> = target.iter().map(|r| r[0].0).collect();
        let mut layer = Vec::with_capacity(nvars);
        for v in 0..nvars {
            let mut cols = Vec::with_capacity(bases[k].len());
            for b in &bases[k] {
                let w = act(v, d, b)?;
                let coords: SparseVec<F::Elem> = pivots
                    .iter()
                    .enumerate()
                    .filter_map(|(j, &p)| {
                        let x = crate::exactla::sparse::get(&field, &w, p);
                        (!field.is_zero(&x)).then_some((j as u32, x))
                    })
                    .collect();
                let mut back = w.clone();
                for (j, x) in &coords {
                    back = crate::exactla::sparse::add_scaled(
                        &field,
                        &back,
                        &field.neg(x),
                        &target[*j as usize],
                    );
                }
                if !back.is_empty() {
                    return Err(Error::NotContained);
                }
                cols.push(coords);
            }
            layer.push(Matrix::from_columns_unchecked(
                field.clone(),
                target.len(),
                cols,
            ));
        }
        actions.push(layer);
    }
    let m = LinearizedModule::from_parts(field, nvars, d_min, dims, actions, top)?;
    Ok((m, bases))
}

/// The quotient of an ambient module by the submodule spanned degreewise by
/// `spans[k]`. Bases are the non-pivot coordinates of each span.
pub fn quotient_by_spans<F, A>(
    field: F,
    nvars: usize,
    d_min: i64,
    ambient_dims: &[usize],
    spans: Vec<Vec<SparseVec<F::Elem>>>,
    top: Option<i64>,
    mut act: A,
) -> Result<LinearizedModule<F>>
where
    F: Field,
    A: FnMut(usize, i64, &[(u32, F::Elem)]) -> Result<SparseVec<F::Elem>>,
{
    let subs: Vec<Echelon<F>> = spans
        .into_iter()
        .zip(ambient_dims)
        .map(|(span, &n)| {
            let mut e = Echelon::new(field.clone(), n);
            for v in span {
                e.insert_lead(v);
            }
            e
        })
        .collect();
    let dims: Vec<usize> = subs.iter().map(|s| s.dim() - s.rank()).collect();
    let positions: Vec<Vec<u32>> = subs
        .iter()
        .map(|s| {
            let mut pos = vec![u32::MAX; s.dim()];
            for (k, c) in s.free_columns().into_iter().enumerate() {
                pos[c as usize] = k as u32;
            }
            pos
        })
        .collect();
    let mut actions = Vec::new();
    for k in 0..subs.len().saturating_sub(1) {
        let d = d_min + k as i64;
        let free_cols = subs[k].free_columns();
        let mut layer = Vec::with_capacity(nvars);
        for v in 0..nvars {
            let mut cols = Vec::with_capacity(free_cols.len());
            for &c in &free_cols {
                let img = act(v, d, &[(c, field.one())])?;
                cols.push(
                    subs[k + 1]
                        .reduce(img)
                        .into_iter()
                        .map(|(i, x)| (positions[k + 1][i as usize], x))
                        .collect(),
                );
            }
            layer.push(Matrix::from_columns_unchecked(
                field.clone(),
                dims[k + 1],
                cols,
            ));
        }
        actions.push(layer);
    }
    LinearizedModule::from_parts(field, nvars, d_min, dims, actions, top)
}

//! Minimal graded free resolutions over `R = S/J`, computed degree by degree inside a
//! window of internal degrees, and the `Tor^R` groups they compute.

mod tor;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

pub use tor::{check_serra_sequence, tor_between, SerraCheck};

use crate::exactla::{kernel_basis, Echelon, Field, Matrix, SparseVec};
use crate::gradedring::{FreeLayout, FreeModule, LinearizedModule, QuotientAlgebra};
use crate::{Error, ExtInt, Interval, Result};

/// `∂_i : F_i → F_{i-1}` (or `F_0 → N` for `i = 0`), one matrix per internal degree.
#[derive(Debug, Clone)]
pub struct ResolutionStep<F: Field> {
    pub index: usize,
    /// Generator degrees of `F_i`, nondecreasing.
    pub source_degrees: Vec<i64>,
    /// Generator degrees of `F_{i-1}`; `None` for the augmentation onto the module.
    pub target_degrees: Option<Vec<i64>>,
    /// `matrices[d - d_lo]` is `∂_i` in internal degree `d`.
    pub matrices: Vec<Matrix<F>>,
    /// Image of each generator, in target coordinates at the generator's degree.
    pub images: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> ResolutionStep<F> {
    pub fn source(&self) -> FreeModule {
        FreeModule {
            degrees: self.source_degrees.clone(),
        }
    }
}

/// A minimal free resolution of a module, exact for internal degrees `≤ d_max`.
#[derive(Debug, Clone)]
pub struct Resolution<F: Field> {
    pub d_lo: i64,
    pub d_max: i64,
    pub steps: Vec<ResolutionStep<F>>,
}

/// `dim Tor_i(-, -)_j` on a window `0 ≤ i ≤ i_max`, `j ≤ d_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorProfile {
    pub i_max: usize,
    pub d_lo: i64,
    pub d_max: i64,
    dims: BTreeMap<(usize, i64), usize>,
}

impl TorProfile {
    pub fn new(i_max: usize, d_lo: i64, d_max: i64) -> Self {
        TorProfile {
            i_max,
            d_lo,
            d_max,
            dims: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, i: usize, j: i64, n: usize) {
        if n == 0 {
            self.dims.remove(&(i, j));
        } else {
            self.dims.insert((i, j), n);
        }
    }

    /// `None` outside the window.
    pub fn get(&self, i: usize, j: i64) -> Option<usize> {
        if i > self.i_max || j > self.d_max {
            return None;
        }
        Some(self.dims.get(&(i, j)).copied().unwrap_or(0))
    }

    /// Nonzero cells as `(i, j, dim)`.
    pub fn records(&self) -> Vec<(usize, i64, usize)> {
        self.dims.iter().map(|(&(i, j), &n)| (i, j, n)).collect()
    }

    /// Largest degree with a nonzero entry in column `i`, within the window.
    pub fn observed_top(&self, i: usize) -> ExtInt {
        self.dims
            .range((i, i64::MIN)..=(i, i64::MAX))
            .next_back()
            .map_or(ExtInt::NegInf, |(&(_, j), _)| ExtInt::Fin(j))
    }

    /// `top Tor_i`: exact when `complete_through ≥` the true top; otherwise
    /// `[observed, +∞]`.
    pub fn top(&self, i: usize, certified_zero_above: Option<i64>) -> Interval {
        let seen = self.observed_top(i);
        match certified_zero_above {
            Some(b) if b <= self.d_max => Interval::exact(seen),
            _ => Interval::new(seen, ExtInt::PosInf),
        }
    }
}

enum Ambient<'x, F: Field> {
    Module(&'x LinearizedModule<F>),
    Free(FreeModule, Vec<FreeLayout>),
}

impl<F: Field> Ambient<'_, F> {
    fn dim(&self, d: i64, d_lo: i64) -> Result<usize> {
        match self {
            Ambient::Module(m) => m.dim(d),
            Ambient::Free(_, lays) => Ok(lays[(d - d_lo) as usize].total),
        }
    }

    fn act(
        &self,
        alg: &QuotientAlgebra<F>,
        v: usize,
        d: i64,
        d_lo: i64,
        x: &[(u32, F::Elem)],
    ) -> Result<SparseVec<F::Elem>> {
        match self {
            Ambient::Module(m) => m.act(v, d, x),
            Ambient::Free(fm, lays) => fm.act(
                alg,
                v,
                d,
                x,
                &lays[(d - d_lo) as usize],
                &lays[(d + 1 - d_lo) as usize],
            ),
        }
    }
}

/// The minimal free resolution of `n` over `alg` through homological degree `i_max`
/// and internal degree `d_max`. `alg` must be materialized through `d_max - d_min(n)`.
///
/// In each degree the new generators of `F_i` are the kernel vectors (in echelon
/// order) not already in the span of the images of earlier generators.
pub fn minimal_resolution<F: Field>(
    alg: &QuotientAlgebra<F>,
    n: &LinearizedModule<F>,
    i_max: usize,
    d_max: i64,
) -> Result<Resolution<F>> {
    let f = alg.field().clone();
    let d_lo = n.d_min();
    alg.dim(d_max - d_lo)?;
    let degrees: Vec<i64> = (d_lo..=d_max).collect();
    let mut ambient = Ambient::Module(n);
    let mut kernels: Vec<Vec<SparseVec<F::Elem>>> = degrees
        .iter()
        .map(|&d| Ok((0..n.dim(d)? as u32).map(|k| vec![(k, f.one())]).collect()))
        .collect::<Result<_>>()?;
    let mut steps: Vec<ResolutionStep<F>> = Vec::new();
    for i in 0..=i_max {
        let mut gens: Vec<i64> = Vec::new();
        let mut images: Vec<SparseVec<F::Elem>> = Vec::new();
        let mut matrices = Vec::with_capacity(degrees.len());
        let mut prev_cols: Vec<SparseVec<F::Elem>> = Vec::new();
        let mut prev_layout: Option<FreeLayout> = None;
        for &d in &degrees {
            let rows = ambient.dim(d, d_lo)?;
            let mut cols = Vec::new();
            let mut span = Echelon::new(f.clone(), rows);
            if let Some(lo) = &prev_layout {
                for (l, &g) in gens.iter().enumerate() {
                    let k = (d - g) as u32;
                    for s in 0..alg.dim(k as i64)? {
                        let (v, parent) = alg.parent(k, s)?;
                        let img =
                            ambient.act(alg, v, d - 1, d_lo, &prev_cols[lo.offsets[l] + parent])?;
                        span.insert_lead(img.clone());
                        cols.push(img);
                    }
                }
            }
            for w in &kernels[(d - d_lo) as usize] {
                if span.insert_lead(w.clone()).is_some() {
                    gens.push(d);
                    images.push(w.clone());
                    cols.push(w.clone());
                }
            }
            let fm = FreeModule {
                degrees: gens.clone(),
            };
            let layout = fm.layout(alg, d)?;
            debug_assert_eq!(layout.total, cols.len());
            matrices.push(Matrix::from_columns(f.clone(), rows, cols.clone())?);
            prev_cols = cols;
            prev_layout = Some(layout);
        }
        let target_degrees = match &ambient {
            Ambient::Module(_) => None,
            Ambient::Free(fm, _) => Some(fm.degrees.clone()),
        };
        kernels = matrices
            .iter()
            .map(|m| kernel_basis(m).into_columns())
            .collect();
        let fm = FreeModule {
            degrees: gens.clone(),
        };
        let layouts = degrees
            .iter()
            .map(|&d| fm.layout(alg, d))
            .collect::<Result<Vec<_>>>()?;
        let done = gens.is_empty() && kernels.iter().all(|k| k.is_empty());
        steps.push(ResolutionStep {
            index: i,
            source_degrees: gens,
            target_degrees,
            matrices,
            images,
        });
        ambient = Ambient::Free(fm, layouts);
        if done {
            break;
        }
    }
    Ok(Resolution { d_lo, d_max, steps })
}

impl<F: Field> Resolution<F> {
    /// `dim Tor_i(k, N)_j`: the number of generators of `F_i` in degree `j`.
    pub fn profile(&self, i_max: usize) -> TorProfile {
        let mut p = TorProfile::new(i_max, self.d_lo, self.d_max);
        for s in self.steps.iter().take(i_max + 1) {
            for &g in &s.source_degrees {
                p.set(s.index, g, p.get(s.index, g).unwrap_or(0) + 1);
            }
        }
        p
    }

    /// First step and degree where `∂_{i-1} ∂_i ≠ 0`.
    pub fn complex_defect(&self) -> Result<Option<(usize, i64)>> {
        for w in self.steps.windows(2) {
            for (k, (lo, hi)) in w[0].matrices.iter().zip(&w[1].matrices).enumerate() {
                if !lo.mul(hi)?.is_zero() {
                    return Ok(Some((w[1].index, self.d_lo + k as i64)));
                }
            }
        }
        Ok(None)
    }

    /// First generator whose image has a unit coefficient on a generator of the target,
    /// as `(step, generator)`.
    pub fn minimality_defect<Fa: Field>(
        &self,
        alg: &QuotientAlgebra<Fa>,
    ) -> Result<Option<(usize, usize)>> {
        for s in self.steps.iter().skip(1) {
            let tgt = FreeModule {
                degrees: s.target_degrees.clone().unwrap_or_default(),
            };
            for (g, (deg, img)) in s.source_degrees.iter().zip(&s.images).enumerate() {
                let lay = tgt.layout(alg, *deg)?;
                for (idx, _) in img {
                    let (l, _) = lay.locate(*idx as usize);
                    if tgt.degrees[l] == *deg {
                        return Ok(Some((s.index, g)));
                    }
                }
            }
        }
        Ok(None)
    }
}

/// How a value of `preg^R_n(k)` was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PregBasis {
    /// `J` has a quadratic Gröbner basis, so `R` is Koszul and `t_i^R(k) = i` for all `i`.
    QuadraticGrobner,
    /// `n ≤ 2`: `t_1 = 1` and `t_2 = max(2, degrees of minimal generators of J)`.
    LowDegree,
    /// Only the resolution window; nothing certifies the degrees above it.
    Window,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PregReport {
    pub n: usize,
    pub value: Interval,
    /// Internal degree through which the resolution of `k` was computed.
    pub window: i64,
    pub basis: PregBasis,
    /// Observed `t_i^R(k)` for `i ≤ n` in the window.
    pub observed: Vec<ExtInt>,
}

impl PregReport {
    pub fn truncated(&self) -> bool {
        !self.value.is_exact()
    }

    /// `Some(true)` if `preg = 0` is certified, `Some(false)` if it is certainly positive.
    pub fn is_zero(&self) -> Option<bool> {
        let zero = ExtInt::Fin(0);
        if self.value.lo > zero {
            Some(false)
        } else if self.value.hi <= zero {
            Some(true)
        } else {
            None
        }
    }
}

/// `t_i^R(k)` for `i ≤ 2`, from the minimal generators of `J`.
pub fn low_residue_tops<F: Field>(alg: &QuotientAlgebra<F>) -> Result<[ExtInt; 3]> {
    let e = alg.nvars();
    let mut t2 = if e >= 2 {
        ExtInt::Fin(2)
    } else {
        ExtInt::NegInf
    };
    for d in 2..=alg.max_generator_degree() {
        if alg.minimal_generator_count(d)? > 0 {
            t2 = t2.max(ExtInt::Fin(d as i64));
        }
    }
    Ok([
        ExtInt::Fin(0),
        if e >= 1 {
            ExtInt::Fin(1)
        } else {
            ExtInt::NegInf
        },
        t2,
    ])
}

/// Default internal-degree window for the resolution of `k` up to step `n`.
pub fn default_preg_window<F: Field>(alg: &QuotientAlgebra<F>, n: usize) -> i64 {
    (n as i64 + 2).max(n as i64 + alg.max_generator_degree() as i64 - 1)
}

/// `preg^R_n(k) = max_{i ≤ n} (t_i^R(k) - i)`.
pub fn preg_residue_field<F: Field>(
    alg: &mut QuotientAlgebra<F>,
    n: usize,
    d_max: i64,
) -> Result<PregReport> {
    let cert = alg.certify_initial_ideal(2 * alg.max_generator_degree().max(2))?;
    alg.precompute(d_max.max(0) as u32)?;
    let k = LinearizedModule::residue_field(alg.field().clone(), alg.nvars());
    let res = minimal_resolution(alg, &k, n, d_max)?;
    let prof = res.profile(n);
    let observed: Vec<ExtInt> = (0..=n).map(|i| prof.observed_top(i)).collect();
    let seen = observed
        .iter()
        .enumerate()
        .fold(ExtInt::NegInf, |acc, (i, t)| acc.max(*t + -(i as i64)));
    let (value, basis) = if cert.as_ref().is_some_and(|c| c.is_quadratic()) {
        (Interval::exact(ExtInt::Fin(0)), PregBasis::QuadraticGrobner)
    } else if n <= 2 {
        let low = low_residue_tops(alg)?;
        let v = (0..=n).fold(ExtInt::NegInf, |acc, i| acc.max(low[i] + -(i as i64)));
        (Interval::exact(v), PregBasis::LowDegree)
    } else {
        (Interval::new(seen, ExtInt::PosInf), PregBasis::Window)
    };
    if seen > value.hi {
        return Err(Error::Invalid(alloc::format!(
            "resolution window contradicts the {basis:?} value of preg"
        )));
    }
    Ok(PregReport {
        n,
        value,
        window: d_max,
        basis,
        observed,
    })
}

#[cfg(test)]
mod tests;

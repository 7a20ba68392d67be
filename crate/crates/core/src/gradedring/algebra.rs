use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::monomial::{monomial_basis, monomial_count, monomial_index, ExponentVector};
use super::polynomial::Polynomial;
use crate::exactla::{Echelon, Field, Matrix, SparseVec};
use crate::{Error, ExtInt, Result};

const NONE: u32 = u32::MAX;

/// Refuse to materialize a degree of `S` with more monomials than this.
pub const MAX_PIECE: usize = 400_000;

struct Piece<F: Field> {
    monomials: Vec<ExponentVector>,
    ideal: Echelon<F>,
    /// `dim S_1·J_{d-1}`; minimal generators of `J` in this degree number `rank − this`.
    products_rank: usize,
    standard: Vec<u32>,
    std_pos: Vec<u32>,
    /// For each standard monomial of positive degree: a variable `v` and the position
    /// of the standard monomial `μ/x_v` one degree lower.
    parent: Vec<(u32, u32)>,
    /// Multiplication by each variable into the next degree, once it is materialized.
    actions: Vec<Matrix<F>>,
}

/// `R = S/J` for `S = k[x_1..x_e]` and a homogeneous ideal `J` with no linear forms,
/// materialized degree by degree.
///
/// Bases of `R_d` are the standard monomials: monomials outside the lex-initial ideal,
/// which are exactly the non-pivot columns of `J_d` with monomials listed
/// lexicographically descending.
pub struct QuotientAlgebra<F: Field> {
    field: F,
    nvars: usize,
    generators: Vec<Polynomial<F>>,
    pieces: Vec<Piece<F>>,
    declared_dim: Option<usize>,
}

/// Lex-initial ideal of `J`, certified to be generated by `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialIdeal {
    pub generators: Vec<ExponentVector>,
    /// All minimal generators have degree at most this.
    pub degree_bound: u32,
}

impl InitialIdeal {
    pub fn is_quadratic(&self) -> bool {
        self.generators.iter().all(|g| g.degree() == 2)
    }

    /// `dim S/J = dim S/in(J)`: the largest set of variables containing the support of
    /// no generator.
    pub fn krull_dim(&self, nvars: usize) -> usize {
        assert!(nvars <= 24, "subset enumeration over {nvars} variables");
        let supports: Vec<u64> = self.generators.iter().map(|g| g.support_mask()).collect();
        (0u64..1 << nvars)
            .filter(|&v| supports.iter().all(|&s| s & !v != 0))
            .map(|v| v.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Upper bound for `t_i^S(S/J)`, from semicontinuity under Gröbner degeneration
    /// and the Taylor resolution of the initial ideal.
    pub fn betti_column_bound(&self, nvars: usize, i: usize) -> ExtInt {
        if i == 0 {
            return ExtInt::Fin(0);
        }
        if i > nvars || i > self.generators.len() {
            return ExtInt::NegInf;
        }
        let mut degs: Vec<i64> = self.generators.iter().map(|g| g.degree() as i64).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        let largest: i64 = degs.iter().take(i).sum();
        let all = self
            .generators
            .iter()
            .fold(ExponentVector::one(nvars), |acc, g| acc.lcm(g));
        ExtInt::Fin(largest.min(all.degree() as i64))
    }
}

impl<F: Field> QuotientAlgebra<F> {
    pub fn new(field: F, nvars: usize, generators: Vec<Polynomial<F>>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::Invalid("at least one variable is required".into()));
        }
        let mut kept = Vec::new();
        for (index, g) in generators.into_iter().enumerate() {
            if g.nvars() != nvars {
                return Err(Error::Shape(format!(
                    "generator {index} has {} variables, expected {nvars}",
                    g.nvars()
                )));
            }
            if g.field() != &field {
                return Err(Error::FieldMismatch {
                    left: field.characteristic(),
                    right: g.field().characteristic(),
                });
            }
            if g.is_zero() {
                continue;
            }
            match g.degree() {
                None => return Err(Error::NotHomogeneous { index }),
                Some(0) => return Err(Error::UnitIdeal { index }),
                Some(1) => return Err(Error::LinearGenerator { index }),
                Some(_) => kept.push(g),
            }
        }
        let mut a = QuotientAlgebra {
            field,
            nvars,
            generators: kept,
            pieces: Vec::new(),
            declared_dim: None,
        };
        a.precompute(a.max_generator_degree().max(1))?;
        Ok(a)
    }

    /// Builds from integer-coefficient generators given as `(coefficient, exponents)` lists.
    pub fn from_i64(field: F, nvars: usize, gens: &[&[(i64, &[u32])]]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|g| Polynomial::from_i64(field.clone(), nvars, g))
            .collect::<Result<Vec<_>>>()?;
        QuotientAlgebra::new(field, nvars, polys)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(|g| g.degree())
            .max()
            .unwrap_or(0)
    }

    /// Stamps a known Krull dimension, overriding [`Self::krull_dim_estimate`].
    pub fn set_declared_dim(&mut self, dim: usize) {
        self.declared_dim = Some(dim);
    }

    pub fn declared_dim(&self) -> Option<usize> {
        self.declared_dim
    }

    /// Highest materialized degree.
    pub fn bound(&self) -> u32 {
        self.pieces.len() as u32 - 1
    }

    /// Materializes all pieces and action matrices through degree `d_max`.
    pub fn precompute(&mut self, d_max: u32) -> Result<()> {
        while self.pieces.len() as u32 <= d_max {
            self.extend()?;
        }
        Ok(())
    }

    fn extend(&mut self) -> Result<()> {
        let d = self.pieces.len() as u32;
        let e = self.nvars;
        let n = monomial_count(e, d as usize);
        if n > MAX_PIECE {
            return Err(Error::TooLarge(format!("S_{d} has {n} monomials")));
        }
        let monomials = monomial_basis(e, d);
        let mut ideal = Echelon::new(self.field.clone(), n);
        if let Some(prev) = self.pieces.last() {
            for row in prev.ideal.rows() {
                for v in 0..e {
                    let shifted: SparseVec<F::Elem> = row
                        .iter()
                        .map(|(c, x)| {
                            (
                                monomial_index(&prev.monomials[*c as usize].times_var(v).0) as u32,
                                x.clone(),
                            )
                        })
                        .collect();
                    ideal.insert_lead(shifted);
                }
            }
        }
        let products_rank = ideal.rank();
        for g in &self.generators {
            if g.degree() == Some(d) {
                ideal.insert_lead(g.to_coordinates());
            }
        }
        let standard = ideal.free_columns();
        let mut std_pos = vec![NONE; n];
        for (k, &c) in standard.iter().enumerate() {
            std_pos[c as usize] = k as u32;
        }
        let mut parent = Vec::new();
        if let Some(prev) = self.pieces.last() {
            for &c in &standard {
                let m = &monomials[c as usize];
                let v = m.0.iter().position(|&a| a > 0).expect("positive degree");
                let mut lower = m.clone();
                lower.0[v] -= 1;
                let k = prev.std_pos[monomial_index(&lower.0)];
                debug_assert_ne!(k, NONE, "standard monomials form an order ideal");
                parent.push((v as u32, k));
            }
        }
        let piece = Piece {
            monomials,
            ideal,
            products_rank,
            standard,
            std_pos,
            parent,
            actions: Vec::new(),
        };
        if let Some(prev) = self.pieces.last_mut() {
            prev.actions = (0..e)
                .map(|v| Self::action_between(&self.field, prev, &piece, v))
                .collect();
        }
        self.pieces.push(piece);
        Ok(())
    }

    fn action_between(field: &F, lo: &Piece<F>, hi: &Piece<F>, v: usize) -> Matrix<F> {
        let cols = lo
            .standard
            .iter()
            .map(|&c| {
                let idx = monomial_index(&lo.monomials[c as usize].times_var(v).0) as u32;
                let r = hi.ideal.reduce(vec![(idx, field.one())]);
                r.into_iter()
                    .map(|(i, x)| (hi.std_pos[i as usize], x))
                    .collect()
            })
            .collect();
        Matrix::from_columns_unchecked(field.clone(), hi.standard.len(), cols)
    }

    fn piece(&self, d: u32) -> Result<&Piece<F>> {
        self.pieces.get(d as usize).ok_or(Error::Truncated {
            degree: d as i64,
            bound: self.bound() as i64,
        })
    }

    /// Largest `d` with `R_d ≠ 0`, if a vanishing degree has been materialized.
    pub fn top(&self) -> Option<u32> {
        self.pieces
            .iter()
            .position(|p| p.standard.is_empty())
            .map(|d| d as u32 - 1)
    }

    pub fn is_finite_length(&self) -> bool {
        self.top().is_some()
    }

    /// `dim R_d`; degrees past a certified top are zero even beyond the bound.
    pub fn dim(&self, d: i64) -> Result<usize> {
        if d < 0 {
            return Ok(0);
        }
        if let Some(t) = self.top() {
            if d > t as i64 {
                return Ok(0);
            }
        }
        Ok(self.piece(d as u32)?.standard.len())
    }

    pub fn monomials_of_s(&self, d: u32) -> Result<&[ExponentVector]> {
        Ok(&self.piece(d)?.monomials)
    }

    /// Standard monomial basis of `R_d` and its dimension.
    pub fn algebra_piece(&self, d: u32) -> Result<(Vec<ExponentVector>, usize)> {
        let p = self.piece(d)?;
        let basis: Vec<ExponentVector> = p
            .standard
            .iter()
            .map(|&c| p.monomials[c as usize].clone())
            .collect();
        let n = basis.len();
        Ok((basis, n))
    }

    pub fn standard_monomial(&self, d: u32, k: usize) -> Result<&ExponentVector> {
        let p = self.piece(d)?;
        Ok(&p.monomials[p.standard[k] as usize])
    }

    /// Position of a monomial in the standard basis, or `None` if it is not standard.
    pub fn standard_position(&self, m: &ExponentVector) -> Result<Option<usize>> {
        let p = self.piece(m.degree())?;
        let k = p.std_pos[monomial_index(&m.0)];
        Ok((k != NONE).then_some(k as usize))
    }

    /// For standard monomial `k` of degree `d ≥ 1`: `(v, k')` with `μ_k = x_v · μ_{k'}`.
    pub fn parent(&self, d: u32, k: usize) -> Result<(usize, usize)> {
        let (v, p) = self.piece(d)?.parent[k];
        Ok((v as usize, p as usize))
    }

    /// Echelon basis of `J_d` as rows over the monomials of `S_d`.
    pub fn ideal_piece(&self, d: u32) -> Result<Matrix<F>> {
        let p = self.piece(d)?;
        Matrix::from_rows(self.field.clone(), p.monomials.len(), p.ideal.rref_rows())
    }

    pub fn ideal_dim(&self, d: u32) -> Result<usize> {
        Ok(self.piece(d)?.ideal.rank())
    }

    /// Number of minimal generators of `J` in degree `d`.
    pub fn minimal_generator_count(&self, d: u32) -> Result<usize> {
        let p = self.piece(d)?;
        Ok(p.ideal.rank() - p.products_rank)
    }

    /// Coordinates of the image of `f` in the standard basis of `R_d`.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<SparseVec<F::Elem>> {
        if f.is_zero() {
            return Ok(Vec::new());
        }
        let d = f.degree().ok_or(Error::NotHomogeneous { index: 0 })?;
        if self.top().is_some_and(|t| d > t) {
            return Ok(Vec::new());
        }
        self.normal_form_coordinates(d, f.to_coordinates())
    }

    /// Normal form of a vector in monomial coordinates of `S_d`.
    pub fn normal_form_coordinates(
        &self,
        d: u32,
        v: SparseVec<F::Elem>,
    ) -> Result<SparseVec<F::Elem>> {
        let p = self.piece(d)?;
        Ok(p.ideal
            .reduce(v)
            .into_iter()
            .map(|(i, x)| (p.std_pos[i as usize], x))
            .collect())
    }

    /// Multiplication by `x_v` from `R_d` to `R_{d+1}`.
    pub fn action_matrix(&self, v: usize, d: u32) -> Result<&Matrix<F>> {
        let p = self.piece(d)?;
        p.actions.get(v).ok_or(Error::Truncated {
            degree: d as i64 + 1,
            bound: self.bound() as i64,
        })
    }

    /// `x_v · r` for `r ∈ R_d`; zero past a certified top.
    pub fn act(&self, v: usize, d: i64, r: &[(u32, F::Elem)]) -> Result<SparseVec<F::Elem>> {
        if r.is_empty() || d < 0 || self.top().is_some_and(|t| d + 1 > t as i64) {
            return Ok(Vec::new());
        }
        Ok(self.action_matrix(v, d as u32)?.apply(r))
    }

    pub fn hilbert_function(&self, d_max: u32) -> Result<Vec<usize>> {
        (0..=d_max).map(|d| self.dim(d as i64)).collect()
    }

    /// Krull dimension read off iterated finite differences of the Hilbert function.
    /// A declared dimension takes precedence and is reported stable.
    pub fn krull_dim_estimate(&self, d_max: u32) -> Result<(usize, bool)> {
        if let Some(d) = self.declared_dim {
            return Ok((d, true));
        }
        let h: Vec<i64> = self
            .hilbert_function(d_max)?
            .into_iter()
            .map(|x| x as i64)
            .collect();
        let e = self.nvars;
        let window = e + 1;
        let long_enough = d_max as usize >= 2 * self.max_generator_degree() as usize + e;
        if h.len() >= window && h[h.len() - window..].iter().all(|&x| x == 0) {
            return Ok((0, long_enough));
        }
        let mut diff = h;
        for delta in 0..=e {
            diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
            if diff.len() < window {
                break;
            }
            if diff[diff.len() - window..].iter().all(|&x| x == 0) {
                return Ok((delta + 1, long_enough));
            }
        }
        Ok((e, false))
    }

    /// Minimal generators of the lex-initial ideal in degree `d`.
    pub fn initial_generators(&self, d: u32) -> Result<Vec<ExponentVector>> {
        let p = self.piece(d)?;
        let lower = if d == 0 {
            None
        } else {
            Some(self.piece(d - 1)?)
        };
        Ok(p.ideal
            .pivots()
            .into_iter()
            .map(|c| p.monomials[c as usize].clone())
            .filter(|m| {
                let Some(lower) = lower else { return true };
                (0..self.nvars).all(|v| {
                    if m.0[v] == 0 {
                        return true;
                    }
                    let mut q = m.clone();
                    q.0[v] -= 1;
                    !lower.ideal.is_pivot(monomial_index(&q.0) as u32)
                })
            })
            .collect())
    }

    /// Certifies generators of the lex-initial ideal, materializing up to degree `limit`.
    ///
    /// If the initial ideal has no minimal generators in degrees `D+1..=2D` for some
    /// `D ≥` the top generator degree of `J`, every S-pair of the degree `≤ D` part
    /// reduces to zero, so that part is a Gröbner basis.
    pub fn certify_initial_ideal(&mut self, limit: u32) -> Result<Option<InitialIdeal>> {
        if self.generators.is_empty() {
            return Ok(Some(InitialIdeal {
                generators: Vec::new(),
                degree_bound: 0,
            }));
        }
        let start = self.max_generator_degree();
        let mut gens = Vec::new();
        for d in 2..=start {
            if d > limit {
                return Ok(None);
            }
            self.precompute(d)?;
            gens.extend(self.initial_generators(d)?);
        }
        let mut bound = start;
        let mut d = start + 1;
        while d <= 2 * bound {
            if d > limit {
                return Ok(None);
            }
            self.precompute(d)?;
            let new = self.initial_generators(d)?;
            if !new.is_empty() {
                bound = d;
                gens.extend(new);
            }
            d += 1;
        }
        Ok(Some(InitialIdeal {
            generators: gens,
            degree_bound: bound,
        }))
    }
}

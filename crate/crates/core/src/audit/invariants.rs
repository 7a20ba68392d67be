use alloc::string::String;
use alloc::vec::Vec;

use super::{exact, NEG_INF};
use crate::exactla::Field;
use crate::gradedring::{LinearizedModule, QuotientAlgebra};
use crate::koszul::{betti_table, BettiTable, WindowShape};
use crate::resolve::{
    default_preg_window, low_residue_tops, minimal_resolution, preg_residue_field, PregBasis,
};
use crate::{ExtInt, Interval, Result};

/// How much to compute before judging.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditWindow {
    /// Rows `j - i` of the Betti table examined when no regularity bound is certified.
    pub row_max: i64,
    /// Largest regularity the certificate search tries.
    pub regularity_max: u32,
    /// Homological length of the resolution of `k` over `R` when no quadratic Gröbner
    /// basis certifies Koszulness.
    pub residue_n: usize,
    pub residue_degree: Option<i64>,
    /// Also run the Tor-top and cycle-sequence checks.
    pub structural: bool,
    pub structural_i: usize,
    pub structural_degree: i64,
}

impl Default for AuditWindow {
    fn default() -> Self {
        AuditWindow {
            row_max: 4,
            regularity_max: 6,
            residue_n: 3,
            residue_degree: None,
            structural: false,
            structural_i: 3,
            structural_degree: 5,
        }
    }
}

/// What is known about `t_i^R(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueProfile {
    pub basis: PregBasis,
    /// Exact `t_0, t_1, t_2`.
    pub low: [ExtInt; 3],
    /// Observed tops from a windowed resolution, a lower bound for each `t_i^R(k)`.
    pub observed: Vec<ExtInt>,
}

impl ResidueProfile {
    pub fn compute<F: Field>(
        alg: &mut QuotientAlgebra<F>,
        n_max: usize,
        degree: Option<i64>,
    ) -> Result<Self> {
        let cert = alg.certify_initial_ideal(2 * alg.max_generator_degree().max(2))?;
        alg.precompute(alg.max_generator_degree().max(2))?;
        let low = low_residue_tops(alg)?;
        if cert.is_some_and(|c| c.is_quadratic()) {
            return Ok(ResidueProfile {
                basis: PregBasis::QuadraticGrobner,
                low,
                observed: Vec::new(),
            });
        }
        let observed = if n_max > 2 {
            let d = degree.unwrap_or_else(|| default_preg_window(alg, n_max));
            preg_residue_field(alg, n_max, d)?.observed
        } else {
            Vec::new()
        };
        Ok(ResidueProfile {
            basis: PregBasis::Window,
            low,
            observed,
        })
    }

    /// Enclosure of `preg^R_n(k) = max_{i ≤ n} (t_i^R(k) - i)`.
    pub fn preg(&self, n: i64) -> Interval {
        if n < 0 {
            return NEG_INF;
        }
        if self.basis == PregBasis::QuadraticGrobner {
            return exact(0);
        }
        let upto = |k: usize| {
            self.low
                .iter()
                .take(k + 1)
                .enumerate()
                .fold(ExtInt::NegInf, |acc, (i, t)| acc.max(*t + -(i as i64)))
        };
        if n <= 2 {
            return Interval::exact(upto(n as usize));
        }
        let seen = self
            .observed
            .iter()
            .take(n as usize + 1)
            .enumerate()
            .fold(upto(2), |acc, (i, t)| acc.max(*t + -(i as i64)));
        Interval::new(seen, ExtInt::PosInf)
    }
}

/// Invariants of `R = S/J` read off a certified Betti window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraInvariants {
    pub e: usize,
    pub characteristic: u64,
    /// Krull dimension and whether it is certified.
    pub dim: (usize, bool),
    pub cohen_macaulay: Option<bool>,
    pub table: BettiTable,
    pub regularity_certificate: Option<u32>,
    /// `t_i` for `0 ≤ i ≤ e`.
    pub t: Vec<Interval>,
    pub pd: Interval,
    pub m_r: Interval,
    /// Largest `q ≤ e` with `N_q` certified, or 0.
    pub nq: usize,
    pub residue: ResidueProfile,
}

impl AlgebraInvariants {
    pub fn t(&self, i: i64) -> Interval {
        if i < 0 || i as usize > self.e {
            return NEG_INF;
        }
        self.t[i as usize]
    }

    pub fn reg(&self, n: i64) -> Interval {
        (0..=n.min(self.e as i64)).fold(NEG_INF, |acc, i| acc.max(self.t(i).shift(-i)))
    }

    pub fn preg_k(&self, n: i64) -> Interval {
        self.residue.preg(n)
    }

    /// `Some(true)` when `reg_q = 1` is certified.
    pub fn has_nq(&self, q: usize) -> Option<bool> {
        let r = self.reg(q as i64);
        let one = ExtInt::Fin(1);
        if r.lo == one && r.hi == one {
            Some(true)
        } else if r.lo > one || r.hi < one {
            Some(false)
        } else {
            None
        }
    }
}

/// Computes the Betti table of `R` over `S` with certified column bounds, then the
/// derived invariants and what is known about the resolution of `k` over `R`.
pub fn invariants<F: Field>(
    alg: &mut QuotientAlgebra<F>,
    window: &AuditWindow,
) -> Result<AlgebraInvariants> {
    let e = alg.nvars();
    let reg_cert = alg.certify_regularity(window.regularity_max)?;
    let cert = alg.certify_initial_ideal(2 * alg.max_generator_degree().max(2))?;
    let row_max = reg_cert.map_or(window.row_max, |r| r as i64);
    alg.precompute(row_max.max(0) as u32 + 2)?;
    let bounds: Vec<ExtInt> = (0..=e)
        .map(|i| {
            let taylor = cert
                .as_ref()
                .map_or(ExtInt::PosInf, |c| c.betti_column_bound(e, i));
            let reg = reg_cert.map_or(ExtInt::PosInf, |r| {
                if i == 0 {
                    ExtInt::Fin(0)
                } else {
                    ExtInt::Fin(i as i64 + r as i64)
                }
            });
            taylor.min(reg)
        })
        .collect();
    let m = LinearizedModule::algebra(alg, row_max.max(0) as u32 + 2)?;
    let table = betti_table(&m, WindowShape::Rows { i_max: e, row_max }, &bounds)?;
    let t: Vec<Interval> = (0..=e).map(|i| table.t(i)).collect();
    let pd = table.pd();
    let m_r = m_of_r(&t);
    let dim = if let Some(d) = alg.declared_dim() {
        (d, true)
    } else if alg.is_finite_length() {
        (0, true)
    } else if let Some(c) = &cert {
        (c.krull_dim(e), true)
    } else {
        alg.krull_dim_estimate(alg.bound())?
    };
    let residue = ResidueProfile::compute(alg, window.residue_n, window.residue_degree)?;
    let mut inv = AlgebraInvariants {
        e,
        characteristic: alg.field().characteristic(),
        dim,
        cohen_macaulay: None,
        table,
        regularity_certificate: reg_cert,
        t,
        pd,
        m_r,
        nq: 0,
        residue,
    };
    inv.nq = (1..=e)
        .take_while(|&q| inv.has_nq(q) == Some(true))
        .last()
        .unwrap_or(0);
    Ok(inv)
}

/// `m(R) = min{i : t_i ≥ t_{i+1}}` as an enclosure.
fn m_of_r(t: &[Interval]) -> Interval {
    let at = |i: usize| t.get(i).copied().unwrap_or(NEG_INF);
    let lo = (0..=t.len())
        .find(|&i| at(i).hi >= at(i + 1).lo)
        .unwrap_or(t.len());
    let hi = (0..=t.len())
        .find(|&i| at(i).lo >= at(i + 1).hi)
        .unwrap_or(t.len());
    Interval::new(ExtInt::Fin(lo as i64), ExtInt::Fin(hi as i64))
}

/// The quantities of an `R`-module `M` that the subadditivity bounds use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleInvariants {
    pub label: String,
    /// `t_i^S(M)`; index past the end means `-∞`.
    pub t_s: Vec<Interval>,
    /// `preg^R_n(M)` for `n` up to the end; later `n` get `[last.lo, +∞]`.
    pub preg_r: Vec<Interval>,
    preg_r_exact_tail: bool,
}

impl ModuleInvariants {
    /// `M = R`: free over itself, so `preg^R_n(R) = 0`.
    pub fn ring(inv: &AlgebraInvariants) -> Self {
        ModuleInvariants {
            label: "R".into(),
            t_s: inv.t.clone(),
            preg_r: alloc::vec![exact(0)],
            preg_r_exact_tail: true,
        }
    }

    /// `M = k`: resolved over `S` by the Koszul complex, so `t_i^S(k) = i`.
    pub fn residue_field(inv: &AlgebraInvariants) -> Self {
        let t_s = (0..=inv.e as i64).map(exact).collect();
        let preg_r = (0..=inv.e as i64 + 2).map(|n| inv.preg_k(n)).collect();
        let tail = inv.residue.basis == PregBasis::QuadraticGrobner;
        ModuleInvariants {
            label: "k".into(),
            t_s,
            preg_r,
            preg_r_exact_tail: tail,
        }
    }

    /// A general module: `t^S` from its Koszul homology on rows `j - i ≤ row_max`, and
    /// `preg^R` from a minimal resolution through homological degree `n_r` and internal
    /// degree `d_max`.
    pub fn from_module<F: Field>(
        alg: &QuotientAlgebra<F>,
        m: &LinearizedModule<F>,
        label: &str,
        row_max: i64,
        n_r: usize,
        d_max: i64,
    ) -> Result<Self> {
        let e = alg.nvars();
        let table = betti_table(
            m,
            WindowShape::Rows {
                i_max: e,
                row_max: row_max + m.d_min(),
            },
            &[],
        )?;
        let t_s = (0..=e).map(|i| table.t(i)).collect();
        let prof = minimal_resolution(alg, m, n_r, d_max)?.profile(n_r);
        let mut preg_r = Vec::new();
        let mut acc = NEG_INF;
        for i in 0..=n_r {
            acc = acc.max(prof.top(i, None).shift(-(i as i64)));
            preg_r.push(acc);
        }
        Ok(ModuleInvariants {
            label: label.into(),
            t_s,
            preg_r,
            preg_r_exact_tail: false,
        })
    }

    pub fn t(&self, i: i64) -> Interval {
        if i < 0 {
            return NEG_INF;
        }
        self.t_s.get(i as usize).copied().unwrap_or(NEG_INF)
    }

    pub fn reg(&self, n: i64) -> Interval {
        (0..=n).fold(NEG_INF, |acc, i| acc.max(self.t(i).shift(-i)))
    }

    pub fn preg(&self, n: i64) -> Interval {
        if n < 0 {
            return NEG_INF;
        }
        match self.preg_r.get(n as usize) {
            Some(v) => *v,
            None => {
                let last = *self.preg_r.last().expect("nonempty");
                if self.preg_r_exact_tail {
                    last
                } else {
                    Interval::new(last.lo, ExtInt::PosInf)
                }
            }
        }
    }
}

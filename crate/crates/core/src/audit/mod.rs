//! Numeric invariants of `R = S/J` (`t_i`, `reg_n`, `m(R)`, the `N_q` level) and
//! verdicts for the inequalities relating them.
//!
//! Every quantity is an [`Interval`]; an inequality `lhs ≤ rhs` is verified when
//! `lhs.hi ≤ rhs.lo`, violated when `lhs.lo > rhs.hi`, and truncated otherwise.

mod checks;
mod invariants;
mod structural;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use checks::{
    check_cm_plus_one, check_conjecture, check_kb, check_mr_bounds, check_nq_bounds,
    check_partial_reg, check_subad, check_subad_corollary, check_subad_koszul,
};
pub use invariants::{
    invariants, AlgebraInvariants, AuditWindow, ModuleInvariants, ResidueProfile,
};
pub use structural::{check_cycle_sequence, check_tor_top, TopsKnown};

use crate::exactla::Field;
use crate::gradedring::{LinearizedModule, QuotientAlgebra};
use crate::resolve::PregBasis;
use crate::{ExtInt, Interval, Result};

/// Outcome of a single check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Verified,
    HypothesisNotMet,
    Truncated,
    Violated,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::HypothesisNotMet => "hypothesis-not-met",
            Verdict::Truncated => "truncated",
            Verdict::Violated => "violated",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Verdict::Verified,
            Verdict::HypothesisNotMet,
            Verdict::Truncated,
            Verdict::Violated,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One evaluated instance of a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRecord {
    pub check: &'static str,
    /// The inequality in plain text.
    pub statement: &'static str,
    pub params: Vec<(&'static str, i64)>,
    pub verdict: Verdict,
    /// The failing hypothesis, or why the window was insufficient.
    pub note: Option<String>,
    /// Every quantity entering the inequality.
    pub witness: Vec<(String, Interval)>,
    /// The statement is conjectural: a violation is a finding, not a bug.
    pub conjecture: bool,
}

impl AuditRecord {
    pub fn param(&self, name: &str) -> Option<i64> {
        self.params
            .iter()
            .find(|(k, _)| *k == name)
            .map(|(_, v)| *v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub characteristic: u64,
    pub nvars: usize,
    pub window: AuditWindow,
    pub records: Vec<AuditRecord>,
}

impl AuditReport {
    /// Number of records per verdict, in verdict order.
    pub fn counts(&self) -> [(Verdict, usize); 4] {
        [
            Verdict::Verified,
            Verdict::HypothesisNotMet,
            Verdict::Truncated,
            Verdict::Violated,
        ]
        .map(|v| (v, self.records.iter().filter(|r| r.verdict == v).count()))
    }

    pub fn worst(&self) -> Verdict {
        self.records
            .iter()
            .map(|r| r.verdict)
            .max()
            .unwrap_or(Verdict::Verified)
    }

    /// Violations of proved statements.
    pub fn violations(&self) -> impl Iterator<Item = &AuditRecord> {
        self.records
            .iter()
            .filter(|r| r.verdict == Verdict::Violated && !r.conjecture)
    }

    /// Violations of the conjectural inequality.
    pub fn counterexamples(&self) -> impl Iterator<Item = &AuditRecord> {
        self.records
            .iter()
            .filter(|r| r.verdict == Verdict::Violated && r.conjecture)
    }

    pub fn by_check<'a>(&'a self, check: &'a str) -> impl Iterator<Item = &'a AuditRecord> + 'a {
        self.records.iter().filter(move |r| r.check == check)
    }
}

/// Runs every numeric check on the invariants of `alg`, and the structural checks when
/// `window.structural` is set.
pub fn audit_all<F: Field>(
    alg: &mut QuotientAlgebra<F>,
    window: &AuditWindow,
) -> Result<(AlgebraInvariants, AuditReport)> {
    let inv = invariants(alg, window)?;
    let report = audit_invariants(alg, &inv, window)?;
    Ok((inv, report))
}

/// The checks of [`audit_all`] on invariants computed earlier, e.g. with a declared
/// Cohen-Macaulay flag filled in.
pub fn audit_invariants<F: Field>(
    alg: &mut QuotientAlgebra<F>,
    inv: &AlgebraInvariants,
    window: &AuditWindow,
) -> Result<AuditReport> {
    let mut records = Vec::new();
    records.push(check_mr_bounds(inv));
    records.extend(check_kb(inv));
    let ring = ModuleInvariants::ring(inv);
    let field = ModuleInvariants::residue_field(inv);
    let h = inv.pd.hi.finite().unwrap_or(inv.e as i64).max(0) as usize;
    for s in 2..=h {
        for a in 1..s {
            let b = s - a;
            for m in [&ring, &field] {
                records.push(check_subad(inv, m, a, b));
                records.push(check_subad_corollary(inv, m, a, b));
            }
            records.extend(check_subad_koszul(inv, a, b));
            records.push(check_partial_reg(inv, a, b));
        }
    }
    records.extend(check_conjecture(inv));
    records.extend(check_cm_plus_one(inv));
    let q_top = inv.nq.max(2).min(inv.e.max(2));
    for q in 2..=q_top {
        records.extend(check_nq_bounds(inv, q));
    }
    if window.structural {
        let k = LinearizedModule::residue_field(alg.field().clone(), alg.nvars());
        let d_max = window.structural_degree;
        alg.precompute(d_max as u32 + 2)?;
        let r = LinearizedModule::algebra(alg, d_max as u32 + 2)?;
        let koszul = if inv.residue.basis == PregBasis::QuadraticGrobner {
            TopsKnown::KoszulResidue
        } else {
            TopsKnown::Window
        };
        records.extend(check_tor_top(
            alg,
            &k,
            &k,
            ("k", "k"),
            koszul,
            window.structural_i,
            d_max,
        )?);
        records.extend(check_tor_top(
            alg,
            &k,
            &r,
            ("k", "R"),
            TopsKnown::Free,
            window.structural_i,
            d_max,
        )?);
        records.push(check_cycle_sequence(alg, &r, 1, 1, d_max)?);
    }
    Ok(AuditReport {
        characteristic: inv.characteristic,
        nvars: inv.e,
        window: window.clone(),
        records,
    })
}

pub(crate) fn exact(v: i64) -> Interval {
    Interval::exact(ExtInt::Fin(v))
}

pub(crate) const NEG_INF: Interval = Interval {
    lo: ExtInt::NegInf,
    hi: ExtInt::NegInf,
};

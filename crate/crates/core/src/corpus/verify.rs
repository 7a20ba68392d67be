use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{CorpusEntry, Expected, Fact};
use crate::audit::{invariants, AlgebraInvariants, AuditWindow};
use crate::exactla::Field;
use crate::gradedring::QuotientAlgebra;
use crate::{ExtInt, Result};

/// An expected fact next to what was computed. `holds` is `None` when the window does
/// not decide it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactOutcome {
    pub expected: Expected,
    pub holds: Option<bool>,
    pub observed: String,
}

impl CorpusEntry {
    /// `S/J` over `field`, with the declared dimension stamped on.
    pub fn algebra<F: Field>(&self, field: F) -> Result<QuotientAlgebra<F>> {
        let mut a = self.ideal.algebra(field)?;
        if let Some(d) = self.declared_dim {
            a.set_declared_dim(d);
        }
        Ok(a)
    }

    /// Invariants with the declared Cohen-Macaulay flag filled in.
    pub fn invariants<F: Field>(
        &self,
        alg: &mut QuotientAlgebra<F>,
        window: &AuditWindow,
    ) -> Result<AlgebraInvariants> {
        let mut inv = invariants(alg, window)?;
        inv.cohen_macaulay = self.cohen_macaulay;
        Ok(inv)
    }

    pub fn verify<F: Field>(
        &self,
        alg: &mut QuotientAlgebra<F>,
        inv: &AlgebraInvariants,
    ) -> Result<Vec<FactOutcome>> {
        self.expected
            .iter()
            .map(|x| verify_fact(x, alg, inv))
            .collect()
    }
}

fn exact_eq(i: crate::Interval, want: ExtInt) -> Option<bool> {
    match i.value() {
        Some(v) => Some(v == want),
        None if want < i.lo || want > i.hi => Some(false),
        None => None,
    }
}

fn verify_fact<F: Field>(
    x: &Expected,
    alg: &mut QuotientAlgebra<F>,
    inv: &AlgebraInvariants,
) -> Result<FactOutcome> {
    let (holds, observed) = match &x.fact {
        Fact::BettiTable(want) => {
            let got = inv.table.records();
            let complete = (0..=inv.e).all(|i| inv.table.column_complete(i));
            let holds = if got == *want {
                complete.then_some(true)
            } else {
                Some(false)
            };
            (holds, format!("{got:?}"))
        }
        Fact::T { i, value } => {
            let t = inv.t(*i as i64);
            (exact_eq(t, *value), format!("{t}"))
        }
        Fact::HilbertFunction(want) => {
            let got = hilbert_prefix(alg, want.len())?;
            (Some(got == *want), format!("{got:?}"))
        }
        Fact::HNumerator(want) => {
            let got = h_numerator(alg, inv.dim.0, want.len() + 2)?;
            let mut padded = want.clone();
            padded.resize(got.len(), 0);
            (Some(got == padded), format!("{got:?}"))
        }
        Fact::Regularity(r) => {
            let reg = inv.reg(inv.e as i64);
            (exact_eq(reg, ExtInt::Fin(*r)), format!("{reg}"))
        }
        Fact::Nq(q) => {
            let r = inv.reg(*q as i64);
            (inv.has_nq(*q), format!("reg_{q} = {r}"))
        }
        Fact::GeneratorCount(n) => {
            let got: usize = inv
                .table
                .records()
                .iter()
                .filter(|c| c.0 == 1)
                .map(|c| c.2)
                .sum();
            let holds = if got == *n {
                inv.table.column_complete(1).then_some(true)
            } else {
                Some(false)
            };
            (holds, format!("{got}"))
        }
    };
    Ok(FactOutcome {
        expected: x.clone(),
        holds,
        observed,
    })
}

fn hilbert_prefix<F: Field>(alg: &mut QuotientAlgebra<F>, len: usize) -> Result<Vec<usize>> {
    if len == 0 {
        return Ok(Vec::new());
    }
    alg.precompute(len as u32 - 1)?;
    alg.hilbert_function(len as u32 - 1)
}

/// The first `len` coefficients of `HF(t) · (1 - t)^dim`.
fn h_numerator<F: Field>(alg: &mut QuotientAlgebra<F>, dim: usize, len: usize) -> Result<Vec<i64>> {
    let mut h: Vec<i64> = hilbert_prefix(alg, len)?
        .into_iter()
        .map(|v| v as i64)
        .collect();
    for _ in 0..dim {
        for d in (1..h.len()).rev() {
            h[d] -= h[d - 1];
        }
    }
    Ok(h)
}

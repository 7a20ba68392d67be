use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{exact, AuditRecord, Verdict, NEG_INF};
use crate::exactla::Field;
use crate::gradedring::{LinearizedModule, QuotientAlgebra};
use crate::resolve::{check_serra_sequence, minimal_resolution, tor_between};
use crate::{ExtInt, Interval, Result};

/// What is known in closed form about `t_i^R(N)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopsKnown {
    /// `N = R`: `t_0 = 0` and `t_i = -∞` for `i ≥ 1`.
    Free,
    /// `N = k` over a certified Koszul algebra: `t_i = i`.
    KoszulResidue,
    /// Only the windowed resolution.
    Window,
}

/// `top Tor_i^R(L, N) ≤ top(L) + t_i^R(N)` for `i ≤ i_max`.
///
/// The left side comes from a resolution of `L` tensored with `N`, the right side from
/// a separate resolution of `N`. The left side is only seen in degrees `≤ d_max`, so a
/// record is verified when the right side is known exactly, lies below `d_max`, and no
/// nonzero `Tor_i` appears in the degrees between. `L` must have finite length.
pub fn check_tor_top<F: Field>(
    alg: &QuotientAlgebra<F>,
    l: &LinearizedModule<F>,
    n: &LinearizedModule<F>,
    labels: (&str, &str),
    known: TopsKnown,
    i_max: usize,
    d_max: i64,
) -> Result<Vec<AuditRecord>> {
    let Some(top_l) = l.top() else {
        return Ok(Vec::new());
    };
    let lhs = tor_between(alg, l, n, i_max, d_max)?;
    let res = minimal_resolution(alg, n, i_max, d_max - l.d_min())?.profile(i_max);
    let mut out = Vec::new();
    for i in 0..=i_max {
        let seen = lhs.observed_top(i);
        let t_n = match known {
            TopsKnown::Free if i == 0 => exact(0),
            TopsKnown::Free => NEG_INF,
            TopsKnown::KoszulResidue => exact(i as i64),
            TopsKnown::Window => res.top(i, None),
        };
        let rhs = t_n.shift(top_l);
        let covered = rhs.value().is_some_and(|r| r < ExtInt::Fin(d_max));
        let (verdict, note) = if seen > rhs.hi {
            (Verdict::Violated, None)
        } else if covered && seen <= rhs.lo {
            (
                Verdict::Verified,
                Some(format!("Tor checked in degrees <= {d_max}")),
            )
        } else {
            (
                Verdict::Truncated,
                Some(format!(
                    "right side {rhs} not certified below degree {d_max}"
                )),
            )
        };
        let window_hi = if verdict == Verdict::Verified {
            seen
        } else {
            ExtInt::PosInf
        };
        out.push(AuditRecord {
            check: "tor-top-bound",
            statement: "top Tor_i^R(L,N) <= top(L) + t_i^R(N)",
            params: alloc::vec![("i", i as i64), ("d_max", d_max)],
            verdict,
            note,
            witness: alloc::vec![
                (format!("L = {}, N = {}", labels.0, labels.1), exact(0)),
                (String::from("top(L)"), exact(top_l)),
                (String::from("t_i^R(N) observed"), res.top(i, None)),
                (
                    String::from("lhs"),
                    Interval::new(seen, window_hi.max(seen))
                ),
                (String::from("rhs"), rhs),
            ],
            conjecture: false,
        });
    }
    Ok(out)
}

/// Exactness of `0 → Tor_1(B_{a-1}, N) → Z_a ⊗ N → Z_a(K ⊗ N) → Tor_1(C_{a-1}, N) → 0`
/// with `N = Z_b(K ⊗ M)`, degree by degree for `j ≤ j_max`.
pub fn check_cycle_sequence<F: Field>(
    alg: &mut QuotientAlgebra<F>,
    m: &LinearizedModule<F>,
    a: usize,
    b: usize,
    j_max: i64,
) -> Result<AuditRecord> {
    let checks = check_serra_sequence(alg, m, a, b, j_max)?;
    let bad = checks.iter().find(|c| !c.holds());
    let shown = bad
        .or(checks.iter().rev().find(|c| c.tensor_cycles > 0))
        .or(checks.last());
    let mut witness = Vec::new();
    if let Some(c) = shown {
        witness = alloc::vec![
            (String::from("j"), exact(c.j)),
            (
                String::from("dim Tor_1(B_{a-1},N)_j"),
                exact(c.tor1_boundaries as i64)
            ),
            (
                String::from("dim (Z_a ⊗ N)_j"),
                exact(c.cycles_tensor as i64)
            ),
            (
                String::from("dim Z_a(K ⊗ N)_j"),
                exact(c.tensor_cycles as i64)
            ),
            (
                String::from("dim Tor_1(C_{a-1},N)_j"),
                exact(c.tor1_cokernel as i64)
            ),
            (
                String::from("rank of multiplication"),
                exact(c.phi_rank as i64)
            ),
        ];
    }
    Ok(AuditRecord {
        check: "cycle-sequence-exactness",
        statement:
            "0 -> Tor_1(B_{a-1},N) -> Z_a (x) N -> Z_a(K (x) N) -> Tor_1(C_{a-1},N) -> 0 is exact",
        params: alloc::vec![("a", a as i64), ("b", b as i64), ("j_max", j_max)],
        verdict: if bad.is_some() {
            Verdict::Violated
        } else {
            Verdict::Verified
        },
        note: Some(format!("{} degrees checked", checks.len())),
        witness,
        conjecture: false,
    })
}

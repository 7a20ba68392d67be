use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{exact, AlgebraInvariants, AuditRecord, ModuleInvariants, Verdict};
use crate::numtheory::{binom_mod, is_good};
use crate::{ExtInt, Interval};

/// A hypothesis and whether it is known to hold.
type Hyp = (String, Option<bool>);

fn zero(name: String, v: Interval) -> Hyp {
    let z = ExtInt::Fin(0);
    let known = if v.hi <= z {
        Some(true)
    } else if v.lo > z {
        Some(false)
    } else {
        None
    };
    (format!("{name} = 0 (is {v})"), known)
}

fn binomial_unit(p: u64, n: usize, k: usize) -> Hyp {
    let ok = p == 0 || binom_mod(n as u64, k as u64, p) != 0;
    (
        format!("C({n},{k}) invertible in characteristic {p}"),
        Some(ok),
    )
}

/// `p` good for every `j` in `range`; stricter than goodness for the endpoint alone.
fn good_for_all(p: u64, range: core::ops::RangeInclusive<usize>) -> Hyp {
    let (lo, hi) = (*range.start(), *range.end());
    let ok = range.into_iter().all(|j| is_good(p, j as u64).good);
    (format!("p = {p} good for every n in {lo}..={hi}"), Some(ok))
}

fn at_most(name: &str, v: Interval, bound: Interval) -> Hyp {
    let known = if v.hi <= bound.lo {
        Some(true)
    } else if v.lo > bound.hi {
        Some(false)
    } else {
        None
    };
    (format!("{name} (is {v} vs {bound})"), known)
}

fn compare(lhs: Interval, rhs: Interval) -> Verdict {
    if lhs.hi <= rhs.lo {
        Verdict::Verified
    } else if lhs.lo > rhs.hi {
        Verdict::Violated
    } else {
        Verdict::Truncated
    }
}

struct Builder {
    check: &'static str,
    statement: &'static str,
    params: Vec<(&'static str, i64)>,
    hyps: Vec<Hyp>,
    witness: Vec<(String, Interval)>,
    conjecture: bool,
}

impl Builder {
    fn new(check: &'static str, statement: &'static str, params: &[(&'static str, i64)]) -> Self {
        Builder {
            check,
            statement,
            params: params.to_vec(),
            hyps: Vec::new(),
            witness: Vec::new(),
            conjecture: false,
        }
    }

    fn hyp(mut self, h: Hyp) -> Self {
        self.hyps.push(h);
        self
    }

    fn w(mut self, name: impl Into<String>, v: Interval) -> Self {
        self.witness.push((name.into(), v));
        self
    }

    fn conjectural(mut self) -> Self {
        self.conjecture = true;
        self
    }

    /// Judges `lhs ≤ rhs` once every hypothesis is known to hold.
    fn judge(self, lhs: Interval, rhs: Interval) -> AuditRecord {
        let failed = self
            .hyps
            .iter()
            .find(|(_, k)| *k == Some(false))
            .map(|(n, _)| n.clone());
        let unknown = self
            .hyps
            .iter()
            .find(|(_, k)| k.is_none())
            .map(|(n, _)| n.clone());
        let (verdict, note) = if let Some(n) = failed {
            (Verdict::HypothesisNotMet, Some(n))
        } else if let Some(n) = unknown {
            (Verdict::Truncated, Some(format!("undetermined: {n}")))
        } else {
            let v = compare(lhs, rhs);
            let note = (v == Verdict::Truncated).then(|| format!("lhs {lhs} vs rhs {rhs}"));
            (v, note)
        };
        let mut witness = self.witness;
        witness.push(("lhs".to_string(), lhs));
        witness.push(("rhs".to_string(), rhs));
        AuditRecord {
            check: self.check,
            statement: self.statement,
            params: self.params,
            verdict,
            note,
            witness,
            conjecture: self.conjecture,
        }
    }
}

fn max3(a: Interval, b: Interval, c: Interval) -> Interval {
    a.max(b).max(c)
}

fn ii(i: usize) -> i64 {
    i as i64
}

/// `t_i ≤ 2i` for `1 ≤ i ≤ pd`, each under `preg^R_{i+1}(k) = 0`.
pub fn check_kb(inv: &AlgebraInvariants) -> Vec<AuditRecord> {
    let h = inv.pd.hi.finite().unwrap_or(ii(inv.e)).max(0) as usize;
    (1..=h)
        .map(|i| {
            let t = inv.t(ii(i));
            Builder::new("koszul-betti-bound", "t_i(R) <= 2i", &[("i", ii(i))])
                .hyp(zero(format!("preg^R_{}(k)", i + 1), inv.preg_k(ii(i) + 1)))
                .w(format!("t_{i}"), t)
                .judge(t, exact(2 * ii(i)))
        })
        .collect()
}

/// `t_{a+b}^S(M) ≤ max{t_a(R) + t_b(M), reg_{a-1}(R) + preg^R_{a+b}(M) + a + b,
/// reg_{a-1}(R) + reg_{b-1}(M) + preg^R_{a+b+1}(k) + a + b + 1}`.
pub fn check_subad(
    inv: &AlgebraInvariants,
    m: &ModuleInvariants,
    a: usize,
    b: usize,
) -> AuditRecord {
    let (ai, bi, s) = (ii(a), ii(b), ii(a + b));
    let lhs = m.t(s);
    let t1 = inv.t(ai) + m.t(bi);
    let t2 = (inv.reg(ai - 1) + m.preg(s)).shift(s);
    let t3 = (inv.reg(ai - 1) + m.reg(bi - 1) + inv.preg_k(s + 1)).shift(s + 1);
    Builder::new(
        "subadditivity-max-bound",
        "t_{a+b}(M) <= max{t_a(R)+t_b(M), reg_{a-1}(R)+preg^R_{a+b}(M)+a+b, reg_{a-1}(R)+reg_{b-1}(M)+preg^R_{a+b+1}(k)+a+b+1}",
        &[("a", ai), ("b", bi)],
    )
    .hyp(binomial_unit(inv.characteristic, a + b, b))
    .hyp(at_most("a+b <= pd_S R", exact(s), inv.pd))
    .w(format!("M = {}", m.label), exact(0))
    .w("first", t1)
    .w("second", t2)
    .w("third", t3)
    .judge(lhs, max3(t1, t2, t3))
}

/// The same bound with both partial regularities over `R` vanishing.
pub fn check_subad_corollary(
    inv: &AlgebraInvariants,
    m: &ModuleInvariants,
    a: usize,
    b: usize,
) -> AuditRecord {
    let (ai, bi, s) = (ii(a), ii(b), ii(a + b));
    let lhs = m.t(s);
    let t1 = inv.t(ai) + m.t(bi);
    let t2 = (inv.reg(ai - 1) + m.reg(bi - 1)).shift(s + 1);
    Builder::new(
        "subadditivity-linear-residue",
        "t_{a+b}(M) <= max{t_a(R)+t_b(M), reg_{a-1}(R)+reg_{b-1}(M)+a+b+1} when preg^R_{a+b+1}(k) = 0 = preg^R_{a+b}(M)",
        &[("a", ai), ("b", bi)],
    )
    .hyp(binomial_unit(inv.characteristic, a + b, b))
    .hyp(at_most("a+b <= pd_S R", exact(s), inv.pd))
    .hyp(zero(format!("preg^R_{}(k)", a + b + 1), inv.preg_k(s + 1)))
    .hyp(zero(format!("preg^R_{}(M)", a + b), m.preg(s)))
    .w(format!("M = {}", m.label), exact(0))
    .w("first", t1)
    .w("second", t2)
    .judge(lhs, t1.max(t2))
}

/// The three forms for `M = R` under `preg^R_{a+b+1}(k) = 0` and `max{a,b} ≤ m(R)`.
pub fn check_subad_koszul(inv: &AlgebraInvariants, a: usize, b: usize) -> Vec<AuditRecord> {
    let (ai, bi, s) = (ii(a), ii(b), ii(a + b));
    let gate = |x: Builder| {
        x.hyp(binomial_unit(inv.characteristic, a + b, a))
            .hyp(zero(format!("preg^R_{}(k)", a + b + 1), inv.preg_k(s + 1)))
            .hyp(at_most("max{a,b} <= m(R)", exact(ai.max(bi)), inv.m_r))
    };
    let lhs = inv.t(s);
    let sum = inv.t(ai) + inv.t(bi);
    let low = (inv.t(ai - 1) + inv.t(bi - 1)).shift(3);
    let mut out = alloc::vec![gate(Builder::new(
        "koszul-subadditivity-max",
        "t_{a+b} <= max{t_a+t_b, t_{a-1}+t_{b-1}+3}",
        &[("a", ai), ("b", bi)],
    ))
    .w("t_a+t_b", sum)
    .w("t_{a-1}+t_{b-1}+3", low)
    .judge(lhs, sum.max(low))];
    if b == 1 {
        out.push(
            gate(Builder::new(
                "koszul-subadditivity-step",
                "t_{a+1} <= t_a + 2",
                &[("a", ai), ("b", 1)],
            ))
            .w("t_a", inv.t(ai))
            .judge(lhs, inv.t(ai).shift(2)),
        );
    } else {
        out.push(
            gate(Builder::new(
                "koszul-subadditivity-plus-one",
                "t_{a+b} <= t_a + t_b + 1",
                &[("a", ai), ("b", bi)],
            ))
            .w("t_a+t_b", sum)
            .judge(lhs, sum.shift(1)),
        );
    }
    out
}

/// `reg_{a+1} ≤ reg_a + 1` for `b = 1`, and the two-term max bound for `b ≥ 2`.
pub fn check_partial_reg(inv: &AlgebraInvariants, a: usize, b: usize) -> AuditRecord {
    let (ai, bi, s) = (ii(a), ii(b), ii(a + b));
    let base = |x: Builder| {
        x.hyp(zero(format!("preg^R_{}(k)", a + b + 1), inv.preg_k(s + 1)))
            .hyp(good_for_all(inv.characteristic, 0..=a + b))
    };
    if b == 1 {
        base(Builder::new(
            "partial-regularity-step",
            "reg_{a+1} <= reg_a + 1",
            &[("a", ai), ("b", 1)],
        ))
        .w("reg_a", inv.reg(ai))
        .judge(inv.reg(ai + 1), inv.reg(ai).shift(1))
    } else {
        let sum = inv.reg(ai) + inv.reg(bi);
        let low = (inv.reg(ai - 1) + inv.reg(bi - 1)).shift(1);
        base(Builder::new(
            "partial-regularity-max",
            "reg_{a+b} <= max{reg_a+reg_b, reg_{a-1}+reg_{b-1}+1}",
            &[("a", ai), ("b", bi)],
        ))
        .w("reg_a+reg_b", sum)
        .w("reg_{a-1}+reg_{b-1}+1", low)
        .judge(inv.reg(s), sum.max(low))
    }
}

/// The conjectural `t_{a+b} ≤ t_a + t_b` over all `a, b ≥ 1` with `a + b ≤ pd`.
pub fn check_conjecture(inv: &AlgebraInvariants) -> Vec<AuditRecord> {
    let h = inv.pd.hi.finite().unwrap_or(0).max(0) as usize;
    let mut out = Vec::new();
    for s in 2..=h {
        for a in 1..s {
            let b = s - a;
            let (ai, bi) = (ii(a), ii(b));
            let sum = inv.t(ai) + inv.t(bi);
            out.push(
                Builder::new(
                    "conjectured-subadditivity",
                    "t_{a+b} <= t_a + t_b",
                    &[("a", ai), ("b", bi)],
                )
                .conjectural()
                .hyp(zero(format!("preg^R_{}(k)", s + 1), inv.preg_k(ii(s) + 1)))
                .hyp(at_most("a+b <= pd_S R", exact(ii(s)), inv.pd))
                .w("t_a+t_b", sum)
                .judge(inv.t(ii(s)), sum),
            );
        }
    }
    out
}

/// `t_{a+b} ≤ t_a + t_b + 1` for Cohen-Macaulay `R`, `a ≥ 1`, `b ≥ 2`; runs only when
/// the Cohen-Macaulay property is declared.
pub fn check_cm_plus_one(inv: &AlgebraInvariants) -> Vec<AuditRecord> {
    let Some(h) = inv.pd.hi.finite() else {
        return Vec::new();
    };
    let h = h.max(0) as usize;
    let mut out = Vec::new();
    for s in 3..=h {
        for a in 1..=s - 2 {
            let b = s - a;
            let (ai, bi) = (ii(a), ii(b));
            let sum = inv.t(ai) + inv.t(bi);
            out.push(
                Builder::new(
                    "cohen-macaulay-plus-one",
                    "t_{a+b} <= t_a + t_b + 1 for Cohen-Macaulay R",
                    &[("a", ai), ("b", bi)],
                )
                .hyp((
                    "R Cohen-Macaulay (declared)".into(),
                    inv.cohen_macaulay.or(Some(false)),
                ))
                .hyp(binomial_unit(inv.characteristic, s, a))
                .hyp(zero(format!("preg^R_{}(k)", h + 1), inv.preg_k(ii(h) + 1)))
                .w("t_a+t_b", sum)
                .judge(inv.t(ii(s)), sum.shift(1)),
            );
        }
    }
    out
}

/// `e - dim R ≤ m(R) ≤ pd_S R`.
pub fn check_mr_bounds(inv: &AlgebraInvariants) -> AuditRecord {
    let (dim, certified) = inv.dim;
    let codim = ii(inv.e) - dim as i64;
    let lower = if certified {
        exact(codim)
    } else {
        Interval::new(ExtInt::NegInf, ExtInt::PosInf)
    };
    let b = Builder::new("m-r-bounds", "rank R_1 - dim R <= m(R) <= pd_S R", &[])
        .hyp(("dim R determined".into(), certified.then_some(true)))
        .w("e - dim R", lower)
        .w("m(R)", inv.m_r)
        .w("pd_S R", inv.pd);
    b.judge_pair(lower, inv.m_r, inv.pd)
}

impl Builder {
    /// `x ≤ y ≤ z` as one record.
    fn judge_pair(self, x: Interval, y: Interval, z: Interval) -> AuditRecord {
        let mut first = Builder {
            check: self.check,
            statement: self.statement,
            params: self.params.clone(),
            hyps: self.hyps.clone(),
            witness: Vec::new(),
            conjecture: false,
        }
        .judge(x, y);
        let second = Builder {
            check: self.check,
            statement: self.statement,
            params: self.params,
            hyps: self.hyps,
            witness: Vec::new(),
            conjecture: false,
        }
        .judge(y, z);
        if second.verdict > first.verdict {
            first.verdict = second.verdict;
            first.note = second.note;
        }
        first.witness = self.witness;
        first
    }
}

/// Bounds under `N_q` with `q ≥ 2`: `t_i ≤ 2i - 1`; the floor bound
/// `t_i ≤ 2⌊i/(q+1)⌋ + i + [(q+1) ∤ i]`; `reg_n ≤ 2⌊n/(q+1)⌋ + 1`; and, when
/// `t_{i+q} ≤ t_i + t_q` holds for `i ≤ pd - q`, the ceiling bound `t_i ≤ ⌈i/q⌉ + i`.
pub fn check_nq_bounds(inv: &AlgebraInvariants, q: usize) -> Vec<AuditRecord> {
    let p = inv.characteristic;
    let nq: Hyp = (
        format!("N_{q} (reg_{q} = 1; is {})", inv.reg(ii(q))),
        inv.has_nq(q),
    );
    let q_ok: Hyp = ("q >= 2".into(), Some(q >= 2));
    let h = inv.pd.hi.finite().unwrap_or(ii(inv.e)).max(0) as usize;
    let floor_bound = |i: usize| ii(2 * (i / (q + 1)) + usize::from(!i.is_multiple_of(q + 1)));
    let mut out = Vec::new();
    for i in 2..=h {
        out.push(
            Builder::new(
                "nq-odd-bound",
                "t_i <= 2i - 1 for i >= 2 under N_q",
                &[("q", ii(q)), ("i", ii(i))],
            )
            .hyp(q_ok.clone())
            .hyp(nq.clone())
            .hyp(zero(format!("preg^R_{}(k)", i + 1), inv.preg_k(ii(i) + 1)))
            .judge(inv.t(ii(i)), exact(2 * ii(i) - 1)),
        );
    }
    for i in 1..=h {
        out.push(
            Builder::new(
                "nq-floor-bound",
                "t_i <= 2 floor(i/(q+1)) + i + [(q+1) does not divide i]",
                &[("q", ii(q)), ("i", ii(i))],
            )
            .hyp(q_ok.clone())
            .hyp(nq.clone())
            .hyp(zero(
                format!("preg^R_{}(k)", i.max(2) + 1),
                inv.preg_k(ii(i.max(2)) + 1),
            ))
            .hyp(good_for_all(p, q + 1..=i.max(q + 1)))
            .judge(inv.t(ii(i)), exact(floor_bound(i) + ii(i))),
        );
    }
    for n in 2..=h {
        out.push(
            Builder::new(
                "nq-regularity-bound",
                "reg_n <= 2 floor(n/(q+1)) + 1",
                &[("q", ii(q)), ("n", ii(n))],
            )
            .hyp(q_ok.clone())
            .hyp(nq.clone())
            .hyp(zero(format!("preg^R_{}(k)", n + 1), inv.preg_k(ii(n) + 1)))
            .hyp(good_for_all(p, q + 1..=n.max(q + 1)))
            .judge(inv.reg(ii(n)), exact(ii(2 * (n / (q + 1)) + 1))),
        );
    }
    let premise = ceiling_premise(inv, q);
    for i in 1..=h {
        out.push(
            Builder::new(
                "nq-ceiling-bound",
                "t_i <= ceil(i/q) + i when t_{i+q} <= t_i + t_q for i <= pd - q",
                &[("q", ii(q)), ("i", ii(i))],
            )
            .hyp(q_ok.clone())
            .hyp(nq.clone())
            .hyp(premise.clone())
            .judge(inv.t(ii(i)), exact(ii(i.div_ceil(q) + i))),
        );
    }
    out
}

fn ceiling_premise(inv: &AlgebraInvariants, q: usize) -> Hyp {
    let Some(h) = inv.pd.value().and_then(ExtInt::finite) else {
        return (
            "t_{i+q} <= t_i + t_q for i <= pd - q (pd undetermined)".into(),
            None,
        );
    };
    let mut known = Some(true);
    for i in 1..=(h - q as i64).max(0) {
        let v = compare(inv.t(i + q as i64), inv.t(i) + inv.t(q as i64));
        known = match (known, v) {
            (Some(false), _) | (_, Verdict::Violated) => Some(false),
            (_, Verdict::Truncated) | (None, _) => None,
            _ => known,
        };
    }
    ("t_{i+q} <= t_i + t_q for i <= pd - q".into(), known)
}

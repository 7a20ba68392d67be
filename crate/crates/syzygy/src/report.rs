//! Audit reports as JSON, a summary table, and counterexample bundles.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};
use syzygy_core::audit::{AlgebraInvariants, AuditRecord, AuditReport, AuditWindow, Verdict};
use syzygy_core::gradedring::IdealDescription;
use syzygy_core::Interval;

use crate::format::write_ideal;

/// Process exit status for a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    AllVerified = 0,
    Violations = 2,
    TruncatedOnly = 3,
}

pub fn outcome(report: &AuditReport) -> Outcome {
    if report
        .records
        .iter()
        .any(|r| r.verdict == Verdict::Violated)
    {
        Outcome::Violations
    } else if report
        .records
        .iter()
        .any(|r| r.verdict == Verdict::Truncated)
    {
        Outcome::TruncatedOnly
    } else {
        Outcome::AllVerified
    }
}

#[derive(Serialize)]
struct RecordOut<'a> {
    check: &'a str,
    statement: &'a str,
    params: BTreeMap<&'a str, i64>,
    verdict: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
    witness: Vec<(String, String)>,
    conjecture: bool,
}

fn record_json(r: &AuditRecord) -> Value {
    let out = RecordOut {
        check: r.check,
        statement: r.statement,
        params: r.params.iter().copied().collect(),
        verdict: r.verdict.as_str(),
        note: r.note.as_deref(),
        witness: r
            .witness
            .iter()
            .map(|(k, v)| (k.clone(), v.to_string()))
            .collect(),
        conjecture: r.conjecture,
    };
    serde_json::to_value(out).expect("plain data serializes")
}

fn window_json(w: &AuditWindow) -> Value {
    json!({
        "row_max": w.row_max,
        "regularity_max": w.regularity_max,
        "residue_n": w.residue_n,
        "residue_degree": w.residue_degree,
        "structural": w.structural,
        "structural_i": w.structural_i,
        "structural_degree": w.structural_degree,
    })
}

fn show(i: Interval) -> String {
    i.to_string()
}

pub fn invariants_json(inv: &AlgebraInvariants) -> Value {
    json!({
        "e": inv.e,
        "dim": inv.dim.0,
        "dim_certified": inv.dim.1,
        "cohen_macaulay": inv.cohen_macaulay,
        "t": inv.t.iter().copied().map(show).collect::<Vec<_>>(),
        "reg": (0..=inv.e as i64).map(|n| show(inv.reg(n))).collect::<Vec<_>>(),
        "pd": show(inv.pd),
        "m_r": show(inv.m_r),
        "nq": inv.nq,
        "regularity_certificate": inv.regularity_certificate,
        "betti": inv.table.records(),
    })
}

/// The full report. Inputs (ideal, seed, window) are embedded so a run can be repeated.
pub fn report_json(
    ideal: &IdealDescription,
    seed: Option<u64>,
    inv: &AlgebraInvariants,
    report: &AuditReport,
) -> String {
    let ideal_value: Value =
        serde_json::from_str(&write_ideal(ideal)).expect("written ideals are JSON");
    let v = json!({
        "ideal": ideal_value,
        "seed": seed,
        "window": window_json(&report.window),
        "invariants": invariants_json(inv),
        "counts": report.counts().iter().map(|(v, n)| (v.as_str(), *n)).collect::<BTreeMap<_, _>>(),
        "records": report.records.iter().map(record_json).collect::<Vec<_>>(),
    });
    let mut s = serde_json::to_string_pretty(&v).expect("plain data serializes");
    s.push('\n');
    s
}

/// One line per check id with the number of records of each verdict.
pub fn summary(inv: &AlgebraInvariants, report: &AuditReport) -> String {
    let mut s = String::new();
    let t: Vec<String> = inv.t.iter().copied().map(show).collect();
    writeln!(
        s,
        "e = {}, dim = {}, pd = {}, m(R) = {}, N_q up to q = {}",
        inv.e,
        inv.dim.0,
        show(inv.pd),
        show(inv.m_r),
        inv.nq
    )
    .unwrap();
    writeln!(s, "t = ({})", t.join(", ")).unwrap();
    s.push('\n');
    let mut rows: BTreeMap<&str, [usize; 4]> = BTreeMap::new();
    for r in &report.records {
        rows.entry(r.check).or_default()[r.verdict as usize] += 1;
    }
    let width = rows.keys().map(|k| k.len()).max().unwrap_or(5).max(5);
    writeln!(
        s,
        "{:<width$}  {:>8}  {:>10}  {:>9}  {:>8}",
        "check", "verified", "hyp-unmet", "truncated", "violated"
    )
    .unwrap();
    for (k, c) in &rows {
        writeln!(
            s,
            "{k:<width$}  {:>8}  {:>10}  {:>9}  {:>8}",
            c[0], c[1], c[2], c[3]
        )
        .unwrap();
    }
    for r in report
        .records
        .iter()
        .filter(|r| r.verdict == Verdict::Violated)
    {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let witness: Vec<String> = r
            .witness
            .iter()
            .map(|(k, v)| format!("{k} = {v}"))
            .collect();
        let tag = if r.conjecture {
            "COUNTEREXAMPLE"
        } else {
            "VIOLATED"
        };
        writeln!(
            s,
            "\n{tag} {} ({}): {}\n  {}",
            r.check,
            params.join(", "),
            r.statement,
            witness.join("; ")
        )
        .unwrap();
    }
    s
}

/// A self-contained record of a conjecture violation: the ideal, the field, the Betti
/// table and the failing record.
pub fn counterexample_bundle(
    ideal: &IdealDescription,
    inv: &AlgebraInvariants,
    record: &AuditRecord,
) -> String {
    let ideal_value: Value =
        serde_json::from_str(&write_ideal(ideal)).expect("written ideals are JSON");
    let v = json!({
        "ideal": ideal_value,
        "characteristic": inv.characteristic,
        "betti": inv.table.records(),
        "t": inv.t.iter().copied().map(show).collect::<Vec<_>>(),
        "record": record_json(record),
    });
    let mut s = serde_json::to_string_pretty(&v).expect("plain data serializes");
    s.push('\n');
    s
}

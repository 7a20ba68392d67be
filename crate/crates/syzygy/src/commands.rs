//! The work behind each subcommand, returning text and an exit status so tests can
//! drive them without a process.

use std::fmt::Write;

use anyhow::{bail, Context, Result};
use syzygy_core::audit::{audit_invariants, invariants, AuditWindow};
use syzygy_core::exactla::{Field, FieldVisitor};
use syzygy_core::gradedring::{
    linearize_module, IdealDescription, LinearizedModule, Presentation, QuotientAlgebra,
};
use syzygy_core::homprod::verify_splitting;
use syzygy_core::koszul::{betti_table, module_column_bounds, WindowShape};
use syzygy_core::numtheory::{exceptional_prime, is_good, GoodCase};
use syzygy_core::resolve::minimal_resolution;
use syzygy_core::template::template as template_grid;
use syzygy_core::ExtInt;

use crate::format::ModuleDescription;
use crate::report;
use crate::{grid, template};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
    /// Extra files to write: `(name, contents)`.
    pub files: Vec<(String, String)>,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: 0,
            files: Vec::new(),
        }
    }
}

fn algebra<F: Field>(ideal: &IdealDescription, field: F) -> Result<QuotientAlgebra<F>> {
    ideal.algebra(field).context("building the quotient ring")
}

fn run<V: FieldVisitor<Output = Result<Output>>>(ideal: &IdealDescription, v: V) -> Result<Output> {
    ideal.field_spec()?.visit(v)?
}

#[derive(Debug, Clone, Default)]
pub struct BettiOptions {
    pub i_max: Option<usize>,
    pub j_max: Option<i64>,
    /// Rows shown and computed when `j_max` is absent and no regularity is certified.
    pub rows: i64,
}

struct Betti<'a> {
    ideal: &'a IdealDescription,
    module: Option<&'a ModuleDescription>,
    opts: &'a BettiOptions,
}

impl FieldVisitor for Betti<'_> {
    type Output = Result<Output>;
    fn visit<F: Field>(self, field: F) -> Result<Output> {
        let mut a = algebra(self.ideal, field.clone())?;
        let e = a.nvars();
        let i_max = self.opts.i_max.unwrap_or(e);
        let (m, shape, bounds) = match self.module {
            None => {
                let cert = match self.opts.j_max {
                    Some(_) => None,
                    None => a.certify_regularity(6)?,
                };
                let row_max = cert.map_or(self.opts.rows, |r| r as i64);
                let j_top = self.opts.j_max.unwrap_or(i_max as i64 + row_max);
                a.precompute(j_top.max(0) as u32 + 1)?;
                let m = LinearizedModule::algebra(&a, j_top.max(0) as u32 + 1)?;
                let bounds: Vec<ExtInt> = (0..=i_max)
                    .map(|i| match cert {
                        Some(r) if i > 0 => ExtInt::Fin(i as i64 + r as i64),
                        Some(_) => ExtInt::Fin(0),
                        None => ExtInt::PosInf,
                    })
                    .collect();
                let shape = match self.opts.j_max {
                    Some(j_max) => WindowShape::Rect { i_max, j_max },
                    None => WindowShape::Rows { i_max, row_max },
                };
                (m, shape, bounds)
            }
            Some(md) => {
                let p: Presentation<F> = md.presentation(&field, e)?;
                let d_min = p.generator_degrees.iter().copied().min().unwrap_or(0);
                let j_max = self
                    .opts
                    .j_max
                    .unwrap_or(d_min + i_max as i64 + self.opts.rows);
                a.precompute((j_max - d_min).max(0) as u32 + 2)?;
                let m = linearize_module(&a, &p, j_max + 1)?;
                let bounds = module_column_bounds(&m, i_max);
                (m, WindowShape::Rect { i_max, j_max }, bounds)
            }
        };
        let table = betti_table(&m, shape, &bounds)?;
        let rows = match shape {
            WindowShape::Rows { row_max, .. } => row_max,
            WindowShape::Rect { j_max, .. } => j_max - table.d_min(),
        };
        let mut text = grid::render(&table, rows);
        let t: Vec<String> = (0..=i_max).map(|i| table.t(i).to_string()).collect();
        writeln!(text, "\nt = ({})\npd = {}", t.join(", "), table.pd()).unwrap();
        Ok(Output::ok(text))
    }
}

pub fn betti(
    ideal: &IdealDescription,
    module: Option<&ModuleDescription>,
    opts: &BettiOptions,
) -> Result<Output> {
    run(
        ideal,
        Betti {
            ideal,
            module,
            opts,
        },
    )
}

#[derive(Debug, Clone, Default)]
pub struct AuditOptions {
    pub window: AuditWindow,
    /// Keep only checks whose id starts with one of these.
    pub checks: Vec<String>,
    pub declared_dim: Option<usize>,
    pub cohen_macaulay: Option<bool>,
    pub json: bool,
    pub seed: Option<u64>,
}

struct Audit<'a> {
    ideal: &'a IdealDescription,
    opts: &'a AuditOptions,
}

impl FieldVisitor for Audit<'_> {
    type Output = Result<Output>;
    fn visit<F: Field>(self, field: F) -> Result<Output> {
        let mut a = algebra(self.ideal, field)?;
        if let Some(d) = self.opts.declared_dim {
            a.set_declared_dim(d);
        }
        let mut inv = invariants(&mut a, &self.opts.window)?;
        inv.cohen_macaulay = self.opts.cohen_macaulay;
        let mut report = audit_invariants(&mut a, &inv, &self.opts.window)?;
        if !self.opts.checks.is_empty() {
            report.records.retain(|r| {
                self.opts
                    .checks
                    .iter()
                    .any(|c| r.check.starts_with(c.as_str()))
            });
        }
        let files = report
            .counterexamples()
            .enumerate()
            .map(|(k, r)| {
                (
                    format!("counterexample-{k}.json"),
                    report::counterexample_bundle(self.ideal, &inv, r),
                )
            })
            .collect();
        let text = if self.opts.json {
            report::report_json(self.ideal, self.opts.seed, &inv, &report)
        } else {
            report::summary(&inv, &report)
        };
        Ok(Output {
            text,
            code: report::outcome(&report) as i32,
            files,
        })
    }
}

pub fn audit(ideal: &IdealDescription, opts: &AuditOptions) -> Result<Output> {
    run(ideal, Audit { ideal, opts })
}

/// `cols` is the last column shown.
pub fn template(q: usize, cols: usize, rows: usize) -> Result<Output> {
    let t = template_grid(q, cols, rows)?;
    Ok(Output::ok(template::render(&t)))
}

pub fn goodprimes(n_max: u64) -> Output {
    let mut text = String::from("n\tgood p <= n\tn+1 = p^s * u\n");
    for n in 1..=n_max {
        match exceptional_prime(n) {
            Some(p) => {
                let detail = match is_good(p, n).case {
                    GoodCase::Exceptional { s, u } => format!("{p}^{s} * {u}"),
                    _ => String::from("-"),
                };
                writeln!(text, "{n}\t{p}\t{detail}").unwrap();
            }
            None => writeln!(text, "{n}\t-\t-").unwrap(),
        }
    }
    Output::ok(text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SplitModule {
    /// The ring itself.
    R,
    /// The residue field.
    K,
}

struct Split<'a> {
    ideal: &'a IdealDescription,
    a: usize,
    b: usize,
    j_max: i64,
    modules: &'a [SplitModule],
}

impl FieldVisitor for Split<'_> {
    type Output = Result<Output>;
    fn visit<F: Field>(self, field: F) -> Result<Output> {
        let mut alg = algebra(self.ideal, field.clone())?;
        let e = alg.nvars();
        let d = self.j_max.max(0) as u32 + 2;
        alg.precompute(d)?;
        let mut text = String::from("module\ta\tb\tj\tC(a+b,a)\tcycles\tverdict\n");
        let mut failed = false;
        for &which in self.modules {
            let (label, m) = match which {
                SplitModule::R => ("R", LinearizedModule::algebra(&alg, d)?),
                SplitModule::K => ("k", LinearizedModule::residue_field(field.clone(), e)),
            };
            for j in (self.a + self.b) as i64..=self.j_max {
                let r = verify_splitting(&m, self.a, self.b, j)?;
                let verdict = if r.holds() {
                    "holds"
                } else if r.beta_not_cycle.is_some() {
                    "beta-not-a-cycle"
                } else {
                    "composite-differs"
                };
                failed |= !r.holds();
                writeln!(
                    text,
                    "{label}\t{}\t{}\t{j}\t{}\t{}\t{verdict}",
                    self.a, self.b, r.binomial, r.cycles_checked
                )
                .unwrap();
            }
        }
        Ok(Output {
            text,
            code: if failed { 2 } else { 0 },
            files: Vec::new(),
        })
    }
}

pub fn splitcheck(
    ideal: &IdealDescription,
    a: usize,
    b: usize,
    j_max: i64,
    modules: &[SplitModule],
) -> Result<Output> {
    if a + b > ideal.nvars() {
        bail!(
            "a + b = {} exceeds the number of variables {}",
            a + b,
            ideal.nvars()
        );
    }
    run(
        ideal,
        Split {
            ideal,
            a,
            b,
            j_max,
            modules,
        },
    )
}

struct ResolveK<'a> {
    ideal: &'a IdealDescription,
    n: usize,
    d_max: i64,
}

impl FieldVisitor for ResolveK<'_> {
    type Output = Result<Output>;
    fn visit<F: Field>(self, field: F) -> Result<Output> {
        let mut alg = algebra(self.ideal, field.clone())?;
        alg.precompute(self.d_max.max(0) as u32 + 1)?;
        let k = LinearizedModule::residue_field(field, alg.nvars());
        let profile = minimal_resolution(&alg, &k, self.n, self.d_max)?.profile(self.n);
        let mut text = grid::render(&profile, grid::rows_needed(&profile).max(1));
        let tops: Vec<String> = (0..=self.n)
            .map(|i| profile.observed_top(i).to_string())
            .collect();
        writeln!(
            text,
            "\nobserved t_i(k) for internal degrees <= {}: ({})",
            self.d_max,
            tops.join(", ")
        )
        .unwrap();
        let linear = (0..=self.n).all(|i| profile.observed_top(i) <= ExtInt::Fin(i as i64));
        writeln!(
            text,
            "linear through step {} on the window: {}",
            self.n,
            if linear { "yes" } else { "no" }
        )
        .unwrap();
        Ok(Output::ok(text))
    }
}

pub fn resolve_k(ideal: &IdealDescription, n: usize, d_max: i64) -> Result<Output> {
    run(ideal, ResolveK { ideal, n, d_max })
}

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use syzygy::commands::{self, AuditOptions, BettiOptions, Output, SplitModule};
use syzygy::examples::{generate, Family};
use syzygy::format::{parse_ideal, parse_module, write_ideal};
use syzygy_core::audit::AuditWindow;
use syzygy_core::gradedring::IdealDescription;

#[derive(Parser)]
#[command(
    name = "syzygy",
    version,
    about = "Exact Betti numbers, syzygy degree audits and Betti templates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Betti numbers of S/J, or of a module over it.
    Betti {
        ideal: PathBuf,
        #[arg(long)]
        imax: Option<usize>,
        #[arg(long)]
        jmax: Option<i64>,
        /// Rows computed when neither --jmax nor a regularity certificate bounds them.
        #[arg(long, default_value_t = 4)]
        rows: i64,
        /// A module presentation over S/J.
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Check every syzygy-degree inequality on S/J.
    Audit {
        ideal: PathBuf,
        /// Keep only checks whose id starts with one of these.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Krull dimension, when known.
        #[arg(long)]
        dim: Option<usize>,
        /// Declare S/J Cohen-Macaulay.
        #[arg(long)]
        cm: bool,
        /// Also run the Tor-top and cycle-sequence checks.
        #[arg(long)]
        structural: bool,
        #[arg(long, default_value_t = 4)]
        rows: i64,
        /// Length of the resolution of k examined when Koszulness is not certified.
        #[arg(long, default_value_t = 3)]
        residue_n: usize,
        #[arg(long)]
        json: bool,
        /// Where to write counterexample bundles.
        #[arg(long, default_value = ".")]
        bundle_dir: PathBuf,
    },
    /// Render the Betti template for property N_q.
    Template {
        #[arg(long)]
        q: usize,
        /// Last column shown.
        #[arg(long, default_value_t = 13)]
        cols: usize,
        #[arg(long, default_value_t = 8)]
        rows: usize,
    },
    /// For each n, the prime p <= n for which every C(n, i) is a unit mod p.
    Goodprimes { n: u64 },
    /// Compare alpha∘beta with C(a+b, a) on Koszul cycles.
    Splitcheck {
        ideal: PathBuf,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 6)]
        jmax: i64,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "r,k")]
        module: Vec<SplitModule>,
    },
    /// Built-in example families.
    Examples {
        #[command(subcommand)]
        command: ExamplesCommand,
    },
    /// Windowed minimal resolution of k over S/J.
    ResolveK {
        ideal: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: Option<i64>,
    },
}

#[derive(Subcommand)]
enum ExamplesCommand {
    /// Write the ideal file of a family.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, global = true, default_value_t = 1)]
        seed: u64,
        #[arg(long = "char", global = true, default_value_t = 0)]
        characteristic: u64,
        #[arg(long, short, global = true)]
        output: Option<PathBuf>,
    },
}

fn read_ideal(path: &Path) -> Result<IdealDescription> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_ideal(&text).with_context(|| format!("{}", path.display()))
}

fn execute(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Betti {
            ideal,
            imax,
            jmax,
            rows,
            module,
        } => {
            let desc = read_ideal(&ideal)?;
            let module = match module {
                Some(p) => {
                    let text = std::fs::read_to_string(&p)
                        .with_context(|| format!("reading {}", p.display()))?;
                    Some(
                        parse_module(&text, desc.nvars())
                            .with_context(|| format!("{}", p.display()))?,
                    )
                }
                None => None,
            };
            commands::betti(
                &desc,
                module.as_ref(),
                &BettiOptions {
                    i_max: imax,
                    j_max: jmax,
                    rows,
                },
            )
        }
        Command::Audit {
            ideal,
            checks,
            dim,
            cm,
            structural,
            rows,
            residue_n,
            json,
            bundle_dir,
        } => {
            let desc = read_ideal(&ideal)?;
            let window = AuditWindow {
                row_max: rows,
                residue_n,
                structural,
                ..AuditWindow::default()
            };
            let opts = AuditOptions {
                window,
                checks,
                declared_dim: dim,
                cohen_macaulay: cm.then_some(true),
                json,
                seed: None,
            };
            let mut out = commands::audit(&desc, &opts)?;
            for (name, contents) in std::mem::take(&mut out.files) {
                let path = bundle_dir.join(name);
                std::fs::write(&path, contents)
                    .with_context(|| format!("writing {}", path.display()))?;
                eprintln!("counterexample bundle written to {}", path.display());
            }
            Ok(out)
        }
        Command::Template { q, cols, rows } => commands::template(q, cols, rows),
        Command::Goodprimes { n } => Ok(commands::goodprimes(n)),
        Command::Splitcheck {
            ideal,
            a,
            b,
            jmax,
            module,
        } => commands::splitcheck(&read_ideal(&ideal)?, a, b, jmax, &module),
        Command::Examples {
            command:
                ExamplesCommand::Gen {
                    family,
                    seed,
                    characteristic,
                    output,
                },
        } => {
            let entry = generate(&family, seed, characteristic)?;
            let text = write_ideal(&entry.ideal);
            match output {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .with_context(|| format!("writing {}", path.display()))?;
                    Ok(Output {
                        text: String::new(),
                        code: 0,
                        files: Vec::new(),
                    })
                }
                None => Ok(Output {
                    text,
                    code: 0,
                    files: Vec::new(),
                }),
            }
        }
        Command::ResolveK { ideal, n, dmax } => {
            commands::resolve_k(&read_ideal(&ideal)?, n, dmax.unwrap_or(n as i64 + 3))
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spectop::algebra::{parse_module_spec, FiniteRing, SubmoduleLattice, DEFAULT_MAX_ORDER};
use spectop::check::DEFAULT_SUBSET_CAP;
use spectop::input::{lattice_context, parse_lattice_json, split_labels};
use spectop::report::{self, AnalysisReport};
use spectop::suite::{run_suite, SuiteConfig};
use spectop::{Error, Result, TopSpace};

#[derive(Parser)]
#[command(name = "spectop", version, about = "Spectra and topologies of finite lattices and modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Sampling {
    /// Largest point set scanned exhaustively; larger ones are sampled.
    #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
    cap: usize,
    /// Seed for sampled subset scans.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Human-readable table instead of JSON.
    #[arg(long)]
    table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a lattice (JSON file) with a chosen point set.
    Lattice {
        file: PathBuf,
        /// Comma-separated point labels; overrides "X" in the file.
        #[arg(long = "x")]
        points: Option<String>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Analyse a finite module, e.g. "Z: 2,3,5" or "ring M2F2: column".
    Module {
        spec: String,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Analyse a finite ring's ideal lattice, e.g. "Zmod:12" or "M2F2".
    Ring {
        spec: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Run the theorem battery over the built-in corpus.
    Suite {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        cap: usize,
        /// Number of random lattices.
        #[arg(long, default_value_t = 200)]
        random: usize,
        #[arg(long)]
        table: bool,
        /// Add a lattice with a corrupted meet table (negative control).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Export a Hasse diagram, specialisation order or topology.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        /// Lattice JSON file, module spec or ring spec.
        input: String,
        #[arg(long = "x")]
        points: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// Writes to stdout, tolerating a closed pipe.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(report: &AnalysisReport, table: bool) {
    if table {
        out(&report.to_table());
    } else {
        out(&(report.to_json() + "\n"));
    }
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn is_module_spec(s: &str) -> bool {
    let s = s.trim_start();
    s.starts_with("Z:") || s.starts_with("ring ")
}

fn export(format: Format, input: &str, points: Option<String>, max_order: usize) -> Result<String> {
    let points = points.as_deref().map(split_labels);
    let path = Path::new(input);
    if path.is_file() {
        let text = read(path)?;
        let (lattice, from_file) = parse_lattice_json(&text)?;
        return match (format, points.or(from_file)) {
            (Format::Dot, _) => Ok(lattice.hasse_dot("lattice")),
            (Format::Json, None) => Ok(json(&lattice.to_spec())),
            (Format::Json, Some(p)) => {
                let ctx = lattice_context(&text, Some(p))?;
                Ok(json(&ctx.build_topology()?.to_spec()))
            }
        };
    }
    let (name, space): (&str, TopSpace) = if is_module_spec(input) {
        let sl = SubmoduleLattice::new(parse_module_spec(input, max_order)?)?;
        match sl.xi_f_topology() {
            Ok(s) => ("spec_f", s),
            Err(Error::NotTopf) => ("tau_c", sl.torsion_subspace_topology()?),
            Err(e) => return Err(e),
        }
    } else {
        let ring = FiniteRing::parse(input)?;
        ("zariski", report::zariski_context(&ring)?.build_topology()?)
    };
    Ok(match format {
        Format::Dot => space.specialization_dot(name),
        Format::Json => json(&space.to_spec()),
    })
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Lattice { file, points, sampling } => {
            let ctx = lattice_context(&read(&file)?, points.as_deref().map(split_labels))?;
            emit(&report::lattice_report(&ctx, sampling.cap, sampling.seed)?, sampling.table);
        }
        Command::Module { spec, max_order, sampling } => {
            let sl = SubmoduleLattice::new(parse_module_spec(&spec, max_order)?)?;
            emit(&report::module_report(&sl, sampling.cap, sampling.seed)?, sampling.table);
        }
        Command::Ring { spec, sampling } => {
            let ring = FiniteRing::parse(&spec)?;
            emit(&report::ring_report(&ring, sampling.cap, sampling.seed)?, sampling.table);
        }
        Command::Suite { seed, cap, random, table, inject_fault } => {
            let report = run_suite(&SuiteConfig {
                seed,
                cap,
                random,
                inject_fault,
                ..SuiteConfig::default()
            });
            if table {
                out(&report.to_table());
            } else {
                out(&(report.to_json() + "\n"));
            }
            return Ok(if report.passed { 0 } else { 1 });
        }
        Command::Export { format, input, points, max_order } => {
            out(&export(format, &input, points, max_order)?);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        let code = if e.use_stderr() { 2 } else { 0 };
        let _ = e.print();
        std::process::exit(code);
    });
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

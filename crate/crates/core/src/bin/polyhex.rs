use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use polyhex::cli::{
    cmd_classify, cmd_gen, cmd_pfaffian, cmd_sweep, load_graph, resolve_spec, GenFormat, PfaffianMode,
};
use polyhex::pfaffian::Orientation;
use polyhex::polyhex::Family;
use polyhex::{Error, Result};

/// Polyhex graphs on the torus and Klein bottle: construction, Pfaffian
/// classification and brute-force cross-checks.
///
/// Exit status: 0 clean, 1 disagreement found, 2 input error.
#[derive(Parser)]
#[command(name = "polyhex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SpecArgs {
    /// `T:k,q,t`, `Ke:k,q` or `Ko:k,q`
    spec: Option<String>,
    /// T, Ke or Ko (instead of a spec string)
    #[arg(long)]
    family: Option<Family>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a polyhex graph and serialize it.
    Gen {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value = "json")]
        format: GenFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a polyhex graph by the closed-form theorems.
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate every spec with kq <= max-vertices; with --oracle, check
    /// each formula against brute force.
    Sweep {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        oracle: bool,
        /// Write BASE.json and BASE.csv instead of printing JSON.
        #[arg(long, value_name = "BASE")]
        out: Option<PathBuf>,
    },
    /// Search for a Pfaffian orientation, or verify one from a file.
    Pfaffian {
        /// A spec string, a named graph, or an edge-list JSON / graph6 file.
        input: String,
        /// Orientation file: JSON list of [tail, head] pairs.
        #[arg(long, value_name = "FILE")]
        verify: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn resolve(a: &SpecArgs) -> Result<polyhex::polyhex::PolyhexSpec> {
    resolve_spec(a.spec.as_deref(), a.family, a.k, a.q, a.t)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("output serialises") + "\n"
}

/// Returns whether a disagreement was found.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { spec, format, out } => {
            emit(&cmd_gen(&resolve(&spec)?, format)?, out.as_ref())?;
            Ok(false)
        }
        Command::Classify { spec, out } => {
            emit(&json(&cmd_classify(&resolve(&spec)?)), out.as_ref())?;
            Ok(false)
        }
        Command::Sweep {
            max_vertices,
            oracle,
            out,
        } => {
            let report = cmd_sweep(max_vertices, oracle)?;
            match out {
                Some(base) => report.write(&base)?,
                None => print!("{}", report.to_json()),
            }
            for r in report.disagreeing() {
                eprintln!("DISAGREE {}: {}", r.spec, r.disagreements.join(", "));
            }
            Ok(report.has_disagreement())
        }
        Command::Pfaffian { input, verify, out } => {
            let g = load_graph(&input)?;
            let mode = match verify {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    PfaffianMode::Verify(Orientation::from_json(&g, &text)?)
                }
                None => PfaffianMode::Search,
            };
            let result = cmd_pfaffian(&g, mode)?;
            emit(&json(&result), out.as_ref())?;
            Ok(result.matchings_det.is_some_and(|d| d != result.matchings_enum))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

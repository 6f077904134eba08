//! `bfre`: solve bipolar max-product fuzzy relation equations from JSON
//! instance files.
//!
//! Exit codes: 0 ok/solvable, 1 unsolvable, 2 input error, 3 enumeration
//! cap exceeded, 4 verification failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bfre::oracle::{plant_instance, GridSpec};
use bfre::report::{verify_document, ResultDocument, Selection};
use bfre::system::DEFAULT_ENUMERATION_CAP;
use bfre::{
    parse_system, solvable_system, summarize, system_to_json, BipolarSystem, Error, SolverOptions,
};
use clap::{Args, Parser, Subcommand};

const EXIT_UNSOLVABLE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "bfre",
    version,
    about = "Exact solver for bipolar max-product fuzzy relation equations"
)]
struct Cli {
    /// Worker threads for the feasible-pair scan
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,

    /// Largest column count m for the 2^m enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide solvability (exit 0 solvable, 1 unsolvable)
    Check { instance: PathBuf },
    /// Print greatest, maximal, least/minimal solutions and feasible pairs
    Solve {
        #[command(flatten)]
        select: Select,
        instance: PathBuf,
    },
    /// Write a seeded instance with a planted solution, plus a sidecar
    /// `<out>.planted.json` recording it
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(short, value_parser = clap::value_parser!(u16).range(1..))]
        m: u16,
        #[arg(short, value_parser = clap::value_parser!(u16).range(1..))]
        n: u16,
        #[arg(short, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
        out: PathBuf,
    },
    /// Check a result document against the equations and a grid scan
    Verify {
        instance: PathBuf,
        result: PathBuf,
        /// Grid denominator for the brute-force scan
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
        q: u32,
    },
}

#[derive(Args)]
struct Select {
    #[arg(long)]
    greatest: bool,
    #[arg(long)]
    maximal: bool,
    #[arg(long)]
    minimal: bool,
    #[arg(long)]
    least: bool,
    #[arg(long)]
    pairs: bool,
    /// Everything (the default when no selector is given)
    #[arg(long)]
    all: bool,
}

impl Select {
    fn selection(&self) -> Selection {
        let none = !(self.greatest || self.maximal || self.minimal || self.least || self.pairs);
        if self.all || none {
            return Selection::all();
        }
        Selection {
            greatest: self.greatest,
            maximal: self.maximal,
            lower: self.minimal || self.least,
            pairs: self.pairs,
        }
    }
}

/// A failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("cannot write {}: {e}", path.display()),
    })
}

fn load(path: &Path) -> Result<BipolarSystem, Failure> {
    parse_system(&read(path)?).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

fn sidecar_path(out: &Path) -> PathBuf {
    let name = out
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let stem = name.strip_suffix(".json").unwrap_or(&name);
    out.with_file_name(format!("{stem}.planted.json"))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let options = SolverOptions {
        cap: cli.cap,
        threads: cli.threads.into(),
    };
    match cli.command {
        Command::Check { instance } => {
            let system = load(&instance)?;
            let solvable = solvable_system(&system, &options)?;
            let doc = ResultDocument {
                solvable,
                feasible_pairs: None,
                greatest: None,
                maximal: None,
                lower: None,
                diagnostics: Vec::new(),
            };
            print!("{}", doc.to_json());
            Ok(if solvable { 0 } else { EXIT_UNSOLVABLE })
        }
        Command::Solve { select, instance } => {
            let system = load(&instance)?;
            let summary = summarize(&system, &options)?;
            print!(
                "{}",
                ResultDocument::from_summary(&summary, select.selection()).to_json()
            );
            Ok(if summary.solvable { 0 } else { EXIT_UNSOLVABLE })
        }
        Command::Gen { seed, m, n, q, out } => {
            let grid = GridSpec::new(q)?;
            let planted = plant_instance(seed, m.into(), n.into(), grid)?;
            write(&out, &system_to_json(&planted.system))?;
            let sidecar = serde_json::json!({
                "seed": seed,
                "q": q,
                "planted": planted.planted.to_strings(),
            });
            let mut text = serde_json::to_string_pretty(&sidecar).expect("plain data");
            text.push('\n');
            write(&sidecar_path(&out), &text)?;
            Ok(0)
        }
        Command::Verify {
            instance,
            result,
            q,
        } => {
            let system = load(&instance)?;
            let doc = ResultDocument::from_json(&read(&result)?).map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("{}: {e}", result.display()),
            })?;
            let violations = verify_document(&system, &doc, GridSpec::new(q)?)?;
            for v in &violations {
                println!("violation: {v}");
            }
            if violations.is_empty() {
                println!("ok: every claim holds on the q={q} grid");
                Ok(0)
            } else {
                Ok(EXIT_VERIFY)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("bfre: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

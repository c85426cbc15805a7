use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use adjoint_orbit::adjoint::{apply_word, basis_vector};
use adjoint_orbit::equations::{generate_equations, EquationSet, FormKind};
use adjoint_orbit::json::{
    equations_from_str, equations_to_string, parse_root, word_from_json, ElementaryJson, SquareJson, VectorFile,
};
use adjoint_orbit::ring::{Integers, IntegersMod, Polynomials, Ring, RingSpec};
use adjoint_orbit::root_system::{RootSystem, SystemId, Weight};
use adjoint_orbit::signs::SignTable;
use adjoint_orbit::squares::SquareCatalog;
use adjoint_orbit::verify::{run_suite, Suite, SuiteConfig};
use adjoint_orbit::{Error, Result};

#[derive(Parser)]
#[command(name = "adjoint-orbit", version, about = "Quadratic equations for the highest weight orbit of simply-laced adjoint modules")]
struct Cli {
    /// Suppress per-check lines on standard error.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    All,
    Pi2,
    #[value(name = "2pi3")]
    TwoPi3,
    Pi,
}

impl KindArg {
    fn kinds(self) -> Vec<FormKind> {
        match self {
            KindArg::All => FormKind::ALL.to_vec(),
            KindArg::Pi2 => vec![FormKind::Pi2],
            KindArg::TwoPi3 => vec![FormKind::TwoPi3],
            KindArg::Pi => vec![FormKind::Pi],
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the roots in canonical order.
    Roots {
        #[arg(long)]
        system: SystemId,
        #[arg(long)]
        json: bool,
    },
    /// List the maximal squares as JSON.
    Squares {
        #[arg(long)]
        system: SystemId,
        #[arg(long)]
        count_only: bool,
    },
    /// Dump the nonzero structure constants as CSV.
    Signs {
        #[arg(long)]
        system: SystemId,
    },
    /// Generate the quadratic forms and write them as JSON.
    Equations {
        #[arg(long)]
        system: SystemId,
        #[arg(long, value_enum, default_value = "all")]
        kind: KindArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate every form on a vector; exit status 1 if some form is nonzero.
    Check {
        #[arg(long)]
        system: SystemId,
        #[arg(long)]
        vector: PathBuf,
        /// Previously generated equations (default: generate all).
        #[arg(long)]
        equations: Option<PathBuf>,
    },
    /// Apply a word to `e^rho` and test the result against every form.
    Orbit {
        #[arg(long)]
        system: SystemId,
        #[arg(long)]
        word: PathBuf,
        /// Root coefficients as a JSON array, e.g. `[1,0,0,0,0,0]`.
        #[arg(long)]
        rho: String,
        #[arg(long, default_value = "int")]
        ring: RingSpec,
    },
    /// Run a verification suite and print its report as JSON.
    Verify {
        #[arg(long)]
        system: SystemId,
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        samples: Option<usize>,
        /// Ring for the word suite (default: int, zmod:4 and zmod:7).
        #[arg(long)]
        ring: Option<RingSpec>,
        /// Include wall time in the report.
        #[arg(long)]
        timing: bool,
    },
}

fn load_equations(rs: &RootSystem, signs: &SignTable, path: Option<&Path>) -> Result<EquationSet> {
    match path {
        Some(p) => equations_from_str(rs, &fs::read_to_string(p)?),
        None => Ok(generate_equations(rs, signs, &FormKind::ALL)),
    }
}

fn form_keys(eqs: &EquationSet, rs: &RootSystem, idx: &[usize]) -> Vec<serde_json::Value> {
    idx.iter()
        .take(10)
        .map(|&i| {
            let f = adjoint_orbit::json::FormJson::new(rs, &eqs.forms()[i]);
            json!({ "kind": f.kind, "key": f.key })
        })
        .collect()
}

fn check_report<R: Ring>(rs: &RootSystem, eqs: &EquationSet, ring: &R, file: &VectorFile) -> Result<(bool, serde_json::Value)> {
    let v = file.to_vector(rs, ring)?;
    let bad = eqs.nonvanishing(ring, &v)?;
    let report = json!({
        "system": rs.id(),
        "ring": ring.spec().to_string(),
        "forms": eqs.len(),
        "nonvanishing": bad.len(),
        "examples": form_keys(eqs, rs, &bad),
    });
    Ok((bad.is_empty(), report))
}

fn orbit_report<R: Ring>(
    rs: &RootSystem,
    signs: &SignTable,
    ring: &R,
    word: &[ElementaryJson],
    rho: &str,
) -> Result<(bool, serde_json::Value)> {
    let rho = parse_root(rs, rho)?;
    let word = word_from_json(rs, ring, word)?;
    let eqs = generate_equations(rs, signs, &FormKind::ALL);
    let v = apply_word(rs, signs, ring, &word, &basis_vector(rs, ring, Weight::Root(rho)))?;
    let bad = eqs.nonvanishing(ring, &v)?;
    let report = json!({
        "system": rs.id(),
        "ring": ring.spec().to_string(),
        "rho": rs.root(rho),
        "word_length": word.len(),
        "vector": VectorFile::new(ring, &v),
        "forms": eqs.len(),
        "nonvanishing": bad.len(),
        "examples": form_keys(&eqs, rs, &bad),
    });
    Ok((bad.is_empty(), report))
}

fn print_json(value: &impl Serialize) -> Result<()> {
    writeln!(std::io::stdout().lock(), "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Roots { system, json } => {
            let rs = RootSystem::new(system)?;
            if json {
                print_json(&rs.roots())?;
            } else {
                let mut out = std::io::stdout().lock();
                for r in rs.roots() {
                    writeln!(out, "{:>4} {}", r.height(), r)?;
                }
            }
        }
        Command::Squares { system, count_only } => {
            let rs = RootSystem::new(system)?;
            let catalog = SquareCatalog::new(&rs);
            if count_only {
                writeln!(std::io::stdout().lock(), "{}", catalog.len())?;
            } else {
                let squares: Vec<_> = catalog.squares().iter().map(|sq| SquareJson::new(&rs, sq)).collect();
                print_json(&squares)?;
            }
        }
        Command::Signs { system } => {
            let rs = RootSystem::new(system)?;
            let signs = SignTable::new(&rs);
            signs.write_csv(&rs, std::io::stdout().lock())?;
        }
        Command::Equations { system, kind, out } => {
            let rs = RootSystem::new(system)?;
            let signs = SignTable::new(&rs);
            let eqs = generate_equations(&rs, &signs, &kind.kinds());
            fs::write(&out, equations_to_string(&rs, &eqs)?)?;
            let c = eqs.counts();
            if !cli.quiet {
                eprintln!("{}: {} forms ({} pi/2, {} 2pi/3, {} pi)", system, c.total(), c.pi2, c.two_pi3, c.pi);
            }
        }
        Command::Check { system, vector, equations } => {
            let rs = RootSystem::new(system)?;
            let signs = SignTable::new(&rs);
            let eqs = load_equations(&rs, &signs, equations.as_deref())?;
            let file: VectorFile = serde_json::from_str(&fs::read_to_string(&vector)?)?;
            let (ok, report) = match file.ring_spec()? {
                RingSpec::Integers => check_report(&rs, &eqs, &Integers, &file)?,
                RingSpec::IntegersMod(m) => check_report(&rs, &eqs, &IntegersMod::new(m)?, &file)?,
                RingSpec::Polynomials => check_report(&rs, &eqs, &Polynomials, &file)?,
            };
            print_json(&report)?;
            return Ok(ok);
        }
        Command::Orbit { system, word, rho, ring } => {
            let rs = RootSystem::new(system)?;
            let signs = SignTable::new(&rs);
            let factors: Vec<ElementaryJson> = serde_json::from_str(&fs::read_to_string(&word)?)?;
            let (ok, report) = match ring {
                RingSpec::Integers => orbit_report(&rs, &signs, &Integers, &factors, &rho)?,
                RingSpec::IntegersMod(m) => orbit_report(&rs, &signs, &IntegersMod::new(m)?, &factors, &rho)?,
                RingSpec::Polynomials => {
                    return Err(Error::InvalidConfig("orbit runs over int or zmod:m".into()));
                }
            };
            print_json(&report)?;
            return Ok(ok);
        }
        Command::Verify { system, suite, seed, samples, ring, timing } => {
            let config = SuiteConfig { system, suite, seed, samples, ring, timing };
            let report = run_suite(&config)?;
            if !cli.quiet {
                for c in &report.checks {
                    eprintln!("{}", c.line());
                }
            }
            print_json(&report)?;
            return Ok(report.ok());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

//! Batch front end for the `brunnian` library: parse and emit the `.cnct`
//! and `.fam` text formats, run the constructions and analyses, and drive
//! the round-trip verification.
//!
//! All data output is deterministic canonical text on stdout; `-` stands
//! for stdin. Exit codes: 0 success, 1 parse/validation error (one-line
//! diagnostic on stderr), 2 verification failures.

use std::io::Read;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use brunnian::{
    minimize_family, realize, sample_distinct, verify_roundtrip, verify_structures, wedge,
    ConnectivityStructure, GroundSet, ProbabilityModel, RandomFamily, RoundtripReport,
    SearchBudget, StructureCatalog,
};

#[derive(Parser)]
#[command(name = "brunnian", version, about = "Connectivity structures of finite random families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Read a .cnct generator file and emit the generated structure
    Generate { input: String },
    /// Emit the irreducible connected sets of a structure (as a .cnct)
    Irreducibles { input: String },
    /// Emit the connected components of a structure (as a .cnct)
    Components { input: String },
    /// Emit the sum (join) of two structures
    Sum { left: String, right: String },
    /// Emit a .fam random family realizing a .cnct structure
    Realize { input: String },
    /// Emit the connectivity structure (.cnct) of a .fam family
    Analyze { input: String },
    /// Emit the tensor product of two .fam families
    Tensor { left: String, right: String },
    /// Emit a family realizing the intersection of two families' structures
    Wedge { left: String, right: String },
    /// List every integral connectivity structure on {1, …, n}
    Enumerate { n: usize },
    /// Round-trip report: realize each catalog structure and recompute its
    /// structure by both paths; exit 2 on any FAIL
    Verify {
        n: usize,
        /// Verify only this many catalog entries, seed-sampled
        #[arg(long)]
        sample: Option<usize>,
        /// Seed for --sample
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Append a summary footer line to the report
        #[arg(long)]
        summary: bool,
    },
    /// Search for a realization on a smaller universe
    Minimize {
        input: String,
        #[arg(long, default_value_t = 12)]
        max_universe: usize,
        #[arg(long, default_value_t = 4)]
        max_alphabet: u64,
        #[arg(long, default_value_t = 100_000)]
        max_candidates: u64,
        /// Restrict the search to power-of-two universe sizes
        #[arg(long)]
        dyadic: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn read_input(path: &str) -> Result<(String, &str)> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("cannot read stdin")?;
        Ok((buf, "-"))
    } else {
        let content =
            std::fs::read_to_string(path).with_context(|| format!("cannot read {path}"))?;
        Ok((content, path))
    }
}

fn load_structure(path: &str) -> Result<ConnectivityStructure> {
    let (content, origin) = read_input(path)?;
    Ok(brunnian::read_structure(&content, origin)?)
}

fn load_family(path: &str) -> Result<RandomFamily> {
    let (content, origin) = read_input(path)?;
    Ok(brunnian::read_family(&content, origin)?)
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Generate { input } => {
            let k = load_structure(&input)?;
            print!("{}", brunnian::write_structure(&k));
        }
        Command::Irreducibles { input } => {
            let k = load_structure(&input)?;
            println!("n {}", k.ground().n());
            for s in k.irreducibles() {
                println!("{}", join_elems(s));
            }
        }
        Command::Components { input } => {
            let k = load_structure(&input)?;
            println!("n {}", k.ground().n());
            for &c in k.connected_components().components() {
                println!("{}", join_elems(c));
            }
        }
        Command::Sum { left, right } => {
            let a = load_structure(&left)?;
            let b = load_structure(&right)?;
            print!("{}", brunnian::write_structure(&a.sum(&b)?));
        }
        Command::Realize { input } => {
            let k = load_structure(&input)?;
            print!("{}", brunnian::write_family(&realize(&k)));
        }
        Command::Analyze { input } => {
            let phi = load_family(&input)?;
            print!("{}", brunnian::write_structure(&phi.connectivity_structure()));
        }
        Command::Tensor { left, right } => {
            let a = load_family(&left)?;
            let b = load_family(&right)?;
            print!("{}", brunnian::write_family(&a.tensor(&b)?));
        }
        Command::Wedge { left, right } => {
            let a = load_family(&left)?;
            let b = load_family(&right)?;
            print!("{}", brunnian::write_family(&wedge(&a, &b)?));
        }
        Command::Enumerate { n } => {
            let catalog = StructureCatalog::enumerate(GroundSet::new(n)?)?;
            for k in catalog.structures() {
                let sets: Vec<String> = k
                    .nontrivial_members()
                    .map(|s| {
                        s.elems().map(|e| e.to_string()).collect::<Vec<_>>().join(".")
                    })
                    .collect();
                let listing = if sets.is_empty() { "-".to_string() } else { sets.join(" ") };
                println!("{}\t{listing}", k.members().len());
            }
        }
        Command::Verify { n, sample, seed, summary } => {
            let catalog = StructureCatalog::enumerate(GroundSet::new(n)?)?;
            let report = match sample {
                None => verify_roundtrip(&catalog),
                Some(count) => {
                    if count > catalog.len() {
                        bail!(
                            "--sample {count} exceeds the catalog size {} for n = {n}",
                            catalog.len()
                        );
                    }
                    let indices = sample_distinct(catalog.len(), count, seed);
                    verify_structures(indices.iter().map(|&i| catalog.get(i)))
                }
            };
            print!("{report}");
            if summary {
                println!("# {}/{} PASS", report.pass_count(), report.entries().len());
            }
            return Ok(exit_for(&report));
        }
        Command::Minimize { input, max_universe, max_alphabet, max_candidates, dyadic } => {
            let k = load_structure(&input)?;
            let model = if dyadic {
                ProbabilityModel::UniformDyadic
            } else {
                ProbabilityModel::UniformAnyM
            };
            let budget = SearchBudget::new(max_universe, max_alphabet, max_candidates, model)?;
            let family = minimize_family(&k, &budget);
            println!("# universe {}", family.universe_size());
            print!("{}", brunnian::write_family(&family));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_for(report: &RoundtripReport) -> ExitCode {
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn join_elems(s: brunnian::Subset) -> String {
    s.elems().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

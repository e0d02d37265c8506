use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::Serialize;

use symindex_core::survey::{survey_painting, EntryRecord, Violation};
use symindex_core::{
    dynkin_diagram, enumerate, extended_diagram, verify_theorem, CartanType, ChevalleyTable,
    EnumerateOptions, Family, FlagData, KahlerParam, PaintedDiagram, RootSystem,
};

#[derive(Parser)]
#[command(name = "symindex", version, about = "Index of symmetry of Kähler flag manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one painted diagram, e.g. `A3:{2,3}`.
    Analyze {
        spec: String,
        /// Kähler parameter, one positive rational per painted node.
        #[arg(long)]
        xi: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random Kähler parameters checked by the oracle.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Write painted and extended diagrams as DOT files.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Sweep every painting up to a rank and emit the JSON report.
    Enumerate {
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        /// Comma-separated family letters.
        #[arg(long, value_delimiter = ',')]
        families: Option<Vec<Family>>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Keep one painting per diagram-automorphism orbit.
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Sweep and audit the coindex bounds; exit status 1 on any violation.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
        #[arg(long, value_delimiter = ',')]
        families: Option<Vec<Family>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Dump the Chevalley structure constants of a type as CSV.
    Constants { ty: CartanType },
}

#[derive(Serialize)]
struct AnalyzeOutput<'a> {
    #[serde(flatten)]
    entry: &'a EntryRecord,
    symmetry_roots: Vec<String>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Analyze {
            spec,
            xi,
            json,
            seed,
            samples,
            dot,
        } => {
            let pd: PaintedDiagram = spec.parse()?;
            let extra = match &xi {
                Some(s) => vec![KahlerParam::parse(&pd, s)?],
                None => vec![],
            };
            let table = ChevalleyTable::build(pd.rs());
            let entry = survey_painting(&pd, &table, seed, samples, &extra);
            let f = FlagData::new(pd.clone());
            let roots: Vec<String> = symindex_core::symmetry::symmetry_roots(&f)
                .iter()
                .map(|&i| f.rs().root(i).to_string())
                .collect();
            if let Some(dir) = dot {
                write_dots(&dir, &pd)?;
            }
            if json {
                let out = AnalyzeOutput {
                    entry: &entry,
                    symmetry_roots: roots,
                };
                println!("{}", serde_json::to_string_pretty(&out)?);
            } else {
                print_entry(&entry, &f, &roots, xi.is_some());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            max_rank,
            families,
            out,
            seed,
            samples,
            dedup,
            dot,
        } => {
            let opts = EnumerateOptions {
                max_rank,
                families,
                dedup_automorphisms: dedup,
                seed,
                xi_samples: samples,
            };
            let report = enumerate(&opts)?;
            if let Some(dir) = dot {
                for e in &report.entries {
                    let ty = CartanType::new(e.family, e.rank)?;
                    let pd = PaintedDiagram::from_nodes(Arc::new(RootSystem::from_type(ty)), &e.painted)?;
                    write_dots(&dir, &pd)?;
                }
            }
            let text = serde_json::to_string_pretty(&report)?;
            match out {
                Some(path) => {
                    fs::write(&path, text + "\n")?;
                    eprintln!(
                        "{} entries, {} violations -> {}",
                        report.summary.total,
                        report.summary.violations.len(),
                        path.display()
                    );
                }
                None => println!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_rank,
            families,
            seed,
            samples,
        } => {
            let opts = EnumerateOptions {
                max_rank,
                families,
                dedup_automorphisms: false,
                seed,
                xi_samples: samples,
            };
            let report = enumerate(&opts)?;
            let verdict = verify_theorem(&report);
            let s = &report.summary;
            println!(
                "{} paintings: {} symmetric, {} exceptional, {} checked",
                s.total, s.symmetric, s.exceptions, s.theorem_cases
            );
            if let Some(k) = s.min_coindex {
                println!("smallest coindex among checked entries: {k}");
            }
            if verdict.passed {
                println!("PASS");
                Ok(ExitCode::SUCCESS)
            } else {
                print_violations(&verdict.violations);
                println!("FAIL ({} violations)", verdict.violations.len());
                Ok(ExitCode::from(1))
            }
        }
        Command::Constants { ty } => {
            let rs = RootSystem::from_type(ty);
            print!("{}", ChevalleyTable::build(&rs).to_csv(&rs));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_violations(violations: &[Violation]) {
    for v in violations {
        println!("  {}  {}: {}", v.entry, v.check, v.detail);
    }
}

fn print_entry(e: &EntryRecord, f: &FlagData, roots: &[String], custom_xi: bool) {
    let rs = f.rs();
    let fmt = |ids: &[usize]| -> String {
        ids.iter()
            .map(|&i| rs.root(i).to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    println!("{}", e.label());
    println!("  dim g = {}, dim M = {}", e.dim_g, e.dim_m);
    println!("  R_m+ = {{{}}}", fmt(f.r_m_plus()));
    println!("  T-modules: {}", f.t_modules().len());
    println!("  symmetry roots = {{{}}}", roots.join(", "));
    println!("  index = {}, coindex = {}", e.index, e.coindex);
    if e.symmetric {
        println!("  symmetric coset");
    }
    match (&e.leaf, &e.leaf_error) {
        (Some(l), _) => {
            let mut k = l.k_factors.join("+");
            if l.k_center_dim > 0 {
                if !k.is_empty() {
                    k.push('+');
                }
                k.push_str(&format!("T{}", l.k_center_dim));
            }
            println!("  leaf: u = {}, k = {}, {} ({})", l.u, k, l.name, l.family);
        }
        (None, Some(err)) => println!("  leaf: {err}"),
        (None, None) => {}
    }
    match e.exception {
        Some(tag) => println!("  exception ({tag}): full isometry group larger than G"),
        None => println!("  exception: none"),
    }
    let c = e.checks;
    let mark = |b: bool| if b { "ok" } else { "FAILED" };
    println!(
        "  checks: oracle {}{}, diagram {}, h' closed {}, [k',p]=0 {}",
        mark(c.oracle_agree),
        if custom_xi { " (incl. --xi)" } else { "" },
        mark(c.diagram_agree),
        mark(c.hprime_closed),
        mark(c.kprime_commutes)
    );
}

fn write_dots(dir: &Path, pd: &PaintedDiagram) -> CliResult<()> {
    fs::create_dir_all(dir)?;
    let nodes: Vec<String> = pd.painted_nodes().iter().map(|n| n.to_string()).collect();
    let stem = format!("{}_{}", pd.cartan_type(), nodes.join("_"));
    let painted = pd.painted();
    fs::write(
        dir.join(format!("{stem}.dot")),
        dynkin_diagram(pd.rs()).to_dot(&stem, painted),
    )?;
    fs::write(
        dir.join(format!("{stem}_extended.dot")),
        extended_diagram(pd.rs()).to_dot(&format!("{stem}_extended"), painted),
    )?;
    Ok(())
}

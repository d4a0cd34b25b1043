use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use artin_rf::certificate::{self, Certificate};
use artin_rf::corpus::{corpus, CorpusKind};
use artin_rf::format::{
    emit_graph, graph_to_dot, parse_axiom, parse_graph, quotient_to_dot, ParseError,
};
use artin_rf::recognizers::{is_even_fc, is_right_angled, spherical_decomposition};
use artin_rf::{certify, quotient, verify, Axiom, CoxeterGraph, Partition, DEFAULT_BUDGET};

const UNKNOWN: &str = "no certificate found within budget";

#[derive(Parser)]
#[command(name = "artin-rf")]
#[command(about = "Residual-finiteness certificates for Artin groups")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the structural predicates of a graph
    Check { graph: PathBuf },

    /// Search for a certificate and write it
    Certify {
        graph: PathBuf,

        /// Axiom files declaring extra residually finite base graphs
        #[arg(long, num_args = 1..)]
        axioms: Vec<PathBuf>,

        /// Maximum number of partitions examined
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,

        /// Certificate destination (standard output if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Re-check a certificate against a graph
    Verify {
        graph: PathBuf,
        certificate: PathBuf,

        #[arg(long, num_args = 1..)]
        axioms: Vec<PathBuf>,
    },

    /// Print the Artin presentation
    Present { graph: PathBuf },

    /// Export a graph, or its quotient by a partition
    ExportDot {
        graph: PathBuf,

        /// Partition literal such as `{a,b|c}`
        #[arg(long)]
        partition: Option<String>,

        #[arg(long, value_enum, default_value_t = OutputFormat::Dot)]
        format: OutputFormat,

        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Write a seeded random corpus of graph files
    GenCorpus {
        /// forest | even-tf | random
        #[arg(long)]
        kind: CorpusKind,

        /// Vertices per graph
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
        n: u64,

        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,

        #[arg(long, default_value_t = 0)]
        seed: u64,

        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Dot,
    Text,
}

/// Bad input: unreadable files, parse errors, schema mismatches.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

type Outcome = Result<ExitCode, InputError>;

fn read(path: &Path) -> Result<String, InputError> {
    Ok(fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?)
}

fn located(path: &Path, e: ParseError) -> InputError {
    if e.line == 0 {
        InputError(anyhow!("{}: {}", path.display(), e.message))
    } else {
        InputError(anyhow!("{}:{}: {}", path.display(), e.line, e.message))
    }
}

fn load_graph(path: &Path) -> Result<CoxeterGraph, InputError> {
    parse_graph(&read(path)?).map_err(|e| located(path, e))
}

fn load_axioms(paths: &[PathBuf]) -> Result<Vec<Axiom>, InputError> {
    paths
        .iter()
        .map(|p| parse_axiom(&read(p)?).map_err(|e| located(p, e)))
        .collect()
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), InputError> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run_check(path: &Path) -> Outcome {
    let g = load_graph(path)?;
    println!("even: {}", yes_no(g.is_even()));
    println!("triangle-free: {}", yes_no(g.is_triangle_free()));
    println!("forest: {}", yes_no(g.is_forest()));
    match spherical_decomposition(&g) {
        Some(types) if !types.is_empty() => {
            let names: Vec<String> = types.iter().map(ToString::to_string).collect();
            println!("spherical: yes ({})", names.join(" x "));
        }
        Some(_) => println!("spherical: yes"),
        None => println!("spherical: no"),
    }
    println!("right-angled: {}", yes_no(is_right_angled(&g)));
    println!("even-FC: {}", yes_no(is_even_fc(&g)));
    Ok(ExitCode::SUCCESS)
}

fn run_certify(path: &Path, axiom_paths: &[PathBuf], budget: u64, out: Option<&Path>) -> Outcome {
    let g = load_graph(path)?;
    let axioms = load_axioms(axiom_paths)?;
    let outcome = match certify(&g, &axioms, budget) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("internal error while building the certificate: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    let Some(cert) = outcome.certificate else {
        println!("unknown: {UNKNOWN}");
        if outcome.budget_exhausted {
            println!("reason: budget of {budget} partitions exhausted");
        } else {
            println!("reason: no admissible partition satisfies the hypotheses");
        }
        println!("budget-exhausted: {}", yes_no(outcome.budget_exhausted));
        println!("partitions-examined: {}", outcome.partitions_examined);
        return Ok(ExitCode::from(1));
    };
    let report = verify(&g, &cert, &axioms);
    if !report.overall {
        eprintln!("internal error: the certificate found does not verify\n{report}");
        return Ok(ExitCode::from(1));
    }
    write_or_print(out, &certificate::to_text(&cert))?;
    eprintln!(
        "certified: {} nodes, {} partitions examined",
        cert.node_count(),
        outcome.partitions_examined
    );
    Ok(ExitCode::SUCCESS)
}

fn run_verify(graph: &Path, cert_path: &Path, axiom_paths: &[PathBuf]) -> Outcome {
    let g = load_graph(graph)?;
    let axioms = load_axioms(axiom_paths)?;
    let cert: Certificate = certificate::from_text(&read(cert_path)?)
        .map_err(|e| InputError(anyhow!("{}: {e}", cert_path.display())))?;
    let report = verify(&g, &cert, &axioms);
    println!("{report}");
    Ok(if report.overall {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_export(
    path: &Path,
    partition: Option<&str>,
    format: OutputFormat,
    out: Option<&Path>,
) -> Outcome {
    let g = load_graph(path)?;
    let text = match partition {
        None => match format {
            OutputFormat::Dot => graph_to_dot(&g),
            OutputFormat::Text => emit_graph(&g),
        },
        Some(lit) => {
            let p = Partition::parse_literal(&g, lit)?;
            let (q, index) = quotient(&g, &p)?;
            match format {
                OutputFormat::Dot => quotient_to_dot(&g, &p, &index),
                OutputFormat::Text => emit_graph(&q),
            }
        }
    };
    write_or_print(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_gen_corpus(kind: CorpusKind, n: usize, count: usize, seed: u64, dir: &Path) -> Outcome {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    for (i, g) in corpus(kind, n, count, seed).iter().enumerate() {
        let file = dir.join(format!("{kind}-n{n:02}-{i:04}.graph"));
        fs::write(&file, emit_graph(g))
            .with_context(|| format!("cannot write {}", file.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { graph } => run_check(&graph),
        Command::Certify {
            graph,
            axioms,
            budget,
            out,
        } => run_certify(&graph, &axioms, budget, out.as_deref()),
        Command::Verify {
            graph,
            certificate,
            axioms,
        } => run_verify(&graph, &certificate, &axioms),
        Command::Present { graph } => load_graph(&graph).map(|g| {
            println!("{}", g.artin_presentation());
            ExitCode::SUCCESS
        }),
        Command::ExportDot {
            graph,
            partition,
            format,
            out,
        } => run_export(&graph, partition.as_deref(), format, out.as_deref()),
        Command::GenCorpus {
            kind,
            n,
            count,
            seed,
            out,
        } => run_gen_corpus(kind, n as usize, count as usize, seed, &out),
    };
    match result {
        Ok(code) => code,
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use braidforge_cli::enumerate::cmd_enumerate;
use braidforge_cli::render::render;
use braidforge_cli::report::{cmd_classify, cmd_convert, cmd_profile, cmd_verify, verify_status};
use braidforge_cli::{BoundsArg, CliError, CliResult, RunConfig};
use braidforge_core::parse_spec;
use clap::{Args, Parser, Subcommand};

/// Positive braids for T-links and V-links: conversion, classification and invariants.
#[derive(Parser, Debug)]
#[command(name = "braidforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    options: Options,
}

#[derive(Args, Debug)]
struct Options {
    /// Skip the Jones polynomial for braids with more crossings than this
    #[arg(long, global = true, default_value_t = 16)]
    jones_limit: usize,

    /// Enumeration bounds: max block width, max exponent, max block count
    #[arg(long, global = true, default_value = "5,4,2")]
    bounds: BoundsArg,

    /// Worker threads for enumeration (0 picks one per CPU)
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Selects the conjugate presentation checked by verify
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Continue an interrupted enumeration in --out
    #[arg(long, global = true)]
    resume: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal V-form, both T-forms and the minimal braid
    Convert { spec: String },
    /// Geometric type with the witnessing rule
    Classify { spec: String },
    /// Check invariants agree across every presentation of the link
    Verify { spec: String },
    /// Invariants of the minimal braid
    Profile { spec: String },
    /// Classify every normalized T-link within --bounds, as JSON lines
    Enumerate,
    /// ASCII diagram of the braid, one row per letter
    Render { spec: String },
}

impl From<&Options> for RunConfig {
    fn from(o: &Options) -> Self {
        RunConfig {
            jones_limit: o.jones_limit,
            bounds: o.bounds.0,
            seed: o.seed,
            workers: o.workers,
            output_path: o.out.clone(),
            resume: o.resume,
        }
    }
}

fn emit(text: &str, config: &RunConfig) -> CliResult<()> {
    match &config.output_path {
        Some(path) => std::fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_json(doc: &serde_json::Value, config: &RunConfig) -> CliResult<()> {
    emit(&format!("{}\n", serde_json::to_string_pretty(doc)?), config)
}

fn run(cli: &Cli) -> CliResult<()> {
    let config = RunConfig::from(&cli.options);
    match &cli.command {
        Command::Convert { spec } => emit_json(&cmd_convert(spec, &config)?, &config),
        Command::Classify { spec } => emit_json(&cmd_classify(spec, &config)?, &config),
        Command::Profile { spec } => emit_json(&cmd_profile(spec, &config)?, &config),
        Command::Verify { spec } => {
            let doc = cmd_verify(spec, &config)?;
            emit_json(&doc, &config)?;
            verify_status(&doc)
        }
        Command::Enumerate => {
            let summary = cmd_enumerate(&config, &mut io::stdout().lock())?;
            eprintln!("enumerated {} specs", summary.total);
            Ok(())
        }
        Command::Render { spec } => emit(&render(&parse_spec(spec)?.braid()), &config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => report(&e),
    }
}

fn report(e: &CliError) -> ExitCode {
    eprintln!("{}", e.to_json());
    ExitCode::from(e.exit_code())
}

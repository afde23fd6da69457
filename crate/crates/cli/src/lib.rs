//! Command-line front end for the coherent-state concurrence toolkit.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod commands;
pub mod error;
pub mod kv;
pub mod scan_config;
pub mod state_spec;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::commands::CommandOutput;
use crate::error::CliError;
use crate::kv::Document;
use crate::state_spec::StateSpec;

#[derive(Debug, Parser)]
#[command(name = "ecs", version, about = "Entanglement of superposed coherent states", allow_negative_numbers = true)]
pub struct Cli {
    /// Classification tolerance.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Fock truncation for oracle computations (default grows with the amplitudes).
    #[arg(long, global = true)]
    pub truncation: Option<usize>,
    /// Squared amplitude gap (alpha - gamma)^2 for the reference states.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub gap_squared: f64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// RNG seed for randomized commands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct StateInput {
    /// State document (`key = value` lines); `-` reads stdin.
    pub file: Option<PathBuf>,
    /// Inline `key=value` entries, applied after the file.
    #[arg(short = 'p', long = "param", value_name = "KEY=VALUE")]
    pub params: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form concurrence, cross-checked with the Fock oracle when amplitudes are given.
    Concurrence(StateInput),
    /// Maximal (class A / B), separable or intermediate verdict at equal overlaps.
    Classify(StateInput),
    /// Reproduce the reference maximal and separable states.
    Examples,
    /// Amplitudes of the maximal families as the overlap vanishes.
    BellLimit {
        #[arg(long, default_value_t = 0.0)]
        lambda: f64,
        #[arg(long = "x", default_value_t = 1e-8)]
        x_small: f64,
    },
    /// Scan coefficient space and check that every maximal state is class A or B.
    Scan {
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare closed-form results with the oracle on random states.
    OracleCheck {
        #[arg(long, default_value_t = 1000)]
        count: usize,
    },
}

fn read_source(path: &PathBuf) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

pub fn load_state(input: &StateInput) -> Result<StateSpec, CliError> {
    let mut doc = match &input.file {
        Some(path) => Document::parse(&read_source(path)?)?,
        None => Document::default(),
    };
    for p in &input.params {
        let (k, v) = p.split_once('=').ok_or_else(|| CliError::Input(format!("`{p}` is not KEY=VALUE")))?;
        doc.set(&k.trim().to_ascii_lowercase(), v.trim().to_string());
    }
    StateSpec::from_document(&doc)
}

pub fn run(cli: &Cli) -> Result<CommandOutput, CliError> {
    use commands::*;
    match &cli.command {
        Command::Concurrence(input) => cmd_concurrence(&load_state(input)?, cli.truncation),
        Command::Classify(input) => cmd_classify(&load_state(input)?, cli.tol),
        Command::Examples => cmd_examples(cli.gap_squared, cli.truncation, cli.tol),
        Command::BellLimit { lambda, x_small } => cmd_bell_limit(*lambda, *x_small),
        Command::Scan { config, out } => cmd_scan(config, out, cli.tol, cli.seed),
        Command::OracleCheck { count } => cmd_oracle_check(*count, cli.seed.unwrap_or(0), cli.truncation),
    }
}

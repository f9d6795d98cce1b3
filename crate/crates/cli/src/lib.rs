//! Command-line front end: parses jobs, runs them against the engine and
//! renders text or JSON reports.
//!
//! Exit codes: 0 when every check passed, 1 when a computation or check
//! failed, 2 for invalid input.

pub mod commands;
pub mod config;
pub mod corpus;
pub mod error;
pub mod suite;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use blocktower::Limits;
use clap::{Args, Parser, Subcommand};

use crate::commands::{cmd_blocks, cmd_correspond, cmd_defect, cmd_tower, cmd_verify, Outcome};
use crate::config::{CorpusKind, FieldArg, Format, JobConfig, TowerArg};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "blocktower", version, about = "Blocks, defect groups and Brauer correspondents of finite group algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Block decomposition of kG.
    Blocks(JobArgs),
    /// Defect groups of every block, by each characterization.
    Defect(JobArgs),
    /// Brauer correspondence for a p-subgroup D.
    Correspond(JobArgs),
    /// Block threads along a tower of finite groups.
    Tower(JobArgs),
    /// Run the verification suite over the built-in corpus.
    Verify(JobArgs),
}

#[derive(Debug, Default, Args)]
pub struct JobArgs {
    /// Group, e.g. S3, D4, C2xS3, "elementary_abelian 2 3".
    #[arg(long)]
    pub group: Option<String>,
    /// Field as p=P[,m=M].
    #[arg(long)]
    pub field: Option<String>,
    /// Tower kind: cyclic_p[:P], prodihedral_3, constant:G, product:G:P.
    #[arg(long = "spec", visible_alias = "tower")]
    pub spec: Option<String>,
    /// Number of tower levels.
    #[arg(long)]
    pub depth: Option<usize>,
    /// Subgroup D: trivial, whole, sylow, K-cycle, order:N, elements:i,j or
    /// cycle-notation generators separated by `;`.
    #[arg(long)]
    pub subgroup: Option<String>,
    /// Intermediate subgroup N_G(D) <= L <= G for `correspond`.
    #[arg(long)]
    pub intermediate: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Include the expensive checks.
    #[arg(long)]
    pub deep: bool,
    #[arg(long, value_enum)]
    pub corpus: Option<CorpusKind>,
    /// JSON job file with the same keys as the flags; flags take
    /// precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

impl JobArgs {
    pub fn to_config(&self) -> Result<JobConfig, CliError> {
        let flags = JobConfig {
            group: self.group.clone(),
            tower: self.spec.clone().map(TowerArg::Name),
            depth: self.depth,
            field: self.field.clone().map(FieldArg::Text),
            subgroup: self.subgroup.clone(),
            intermediate: self.intermediate.clone(),
            format: self.format,
            deep: self.deep.then_some(true),
            corpus: self.corpus,
        };
        match &self.config {
            Some(path) => Ok(JobConfig::load(path)?.overridden_by(flags)),
            None => Ok(flags),
        }
    }
}

pub fn execute(command: &Command, limits: Limits) -> Result<(Outcome, Format), CliError> {
    let (args, run): (&JobArgs, fn(&JobConfig, Limits) -> Result<Outcome, CliError>) = match command {
        Command::Blocks(a) => (a, cmd_blocks),
        Command::Defect(a) => (a, cmd_defect),
        Command::Correspond(a) => (a, cmd_correspond),
        Command::Tower(a) => (a, cmd_tower),
        Command::Verify(a) => (a, cmd_verify),
    };
    let config = args.to_config()?;
    Ok((run(&config, limits)?, config.format()))
}

/// Parses `args` (program name first), runs the job and writes the report.
/// Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli.command, Limits::default()) {
        Ok((outcome, format)) => {
            let body = match format {
                Format::Text => outcome.text,
                Format::Json => outcome.json + "\n",
            };
            let _ = out.write_all(body.as_bytes());
            if outcome.passed {
                0
            } else {
                let _ = writeln!(err, "one or more checks failed");
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

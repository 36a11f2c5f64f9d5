// Copyright 2026 The cqed-lab Authors
// SPDX-License-Identifier: Apache-2.0

//! `cqed-lab`: scenario configs in, CSV/JSON tables out.
//!
//! ```text
//! cqed-lab <scenario> [--config PATH] [--output PATH] [--format csv|json]
//!                     [--jobs N] [--cross-check] [--<key> <value>]...
//! cqed-lab validate <PATH>
//! ```
//!
//! Exit codes: 0 success, 2 configuration error, 3 solver or output error.

pub mod config;
pub mod error;
pub mod output;
pub mod scenarios;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Arg, ArgAction, ArgMatches, Args, Command, FromArgMatches};

use crate::config::{resolve, split_overrides, Format, RawConfig, Resolved};
use crate::error::{CliError, EXIT_CONFIG, EXIT_OK};
use crate::output::{render, Table};
use crate::scenarios::{find, Ctx, ScenarioDef, SCENARIOS};

#[derive(Args, Debug)]
struct RunArgs {
    /// Scenario config (JSON).
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// csv or json.
    #[arg(long, value_name = "FORMAT")]
    format: Option<Format>,
    /// Worker threads for grid points.
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
    /// Emit analytic and numeric columns with their residual.
    #[arg(long)]
    cross_check: bool,
    /// Parameter overrides, `--key value` or `--flag`.
    #[arg(trailing_var_arg = true, allow_hyphen_values = true, num_args = 0.., value_name = "--KEY VALUE")]
    overrides: Vec<String>,
}

fn cli() -> Command {
    let mut cmd = Command::new("cqed-lab")
        .version(output::VERSION)
        .about("Circuit-QED and quantum-optics scenarios from the command line")
        .subcommand_required(true)
        .arg_required_else_help(true);
    for s in SCENARIOS {
        cmd = cmd.subcommand(RunArgs::augment_args(Command::new(s.name).about(format!("Run the '{}' scenario", s.name))));
    }
    cmd.subcommand(
        Command::new("validate")
            .about("Check a config without running solvers")
            .arg(Arg::new("path").value_name("PATH").required_unless_present("config"))
            .arg(Arg::new("config").long("config").value_name("PATH").action(ArgAction::Set)),
    )
}

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let matches = match cli().try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let (name, sub) = matches.subcommand().expect("subcommand is required");
    let result = if name == "validate" { validate(sub) } else { run_scenario(find(name).expect("known scenario"), sub) };
    match result {
        Ok((warnings, notes)) => {
            report(&warnings, &notes);
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn report(warnings: &[String], notes: &[String]) {
    let mut err = std::io::stderr().lock();
    for w in warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    for n in notes {
        let _ = writeln!(err, "note: {n}");
    }
}

/// Result of one scenario run.
#[derive(Debug)]
pub struct Run {
    pub config: Resolved,
    pub table: Table,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
}

/// Resolves and runs a scenario without touching the file system beyond
/// the config; used by the binary and by tests.
pub fn execute(
    def: &'static ScenarioDef,
    raw: &RawConfig,
    overrides: &[String],
    jobs: Option<usize>,
    cross_check: bool,
) -> Result<Run, CliError> {
    if cross_check && !def.cross_check {
        return Err(CliError::config(format!("--cross-check is not available for scenario '{}'", def.name)));
    }
    let ov = split_overrides(def, overrides)?;
    let cfg = resolve(def, raw, &ov)?;
    let mut warnings = (def.check)(&cfg)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        if n == 0 {
            return Err(CliError::config("--jobs must be at least 1"));
        }
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| CliError::config(format!("cannot start worker pool: {e}")))?;
    let ctx = Ctx { cfg: &cfg, cross_check, pool: &pool, warnings: Default::default(), notes: Default::default() };
    let table = (def.run)(&ctx)?;
    warnings.extend(ctx.warnings.into_inner().expect("warning list"));
    let notes = ctx.notes.into_inner().expect("note list");
    Ok(Run { config: cfg, table, warnings, notes })
}

type Messages = (Vec<String>, Vec<String>);

fn run_scenario(def: &'static ScenarioDef, m: &ArgMatches) -> Result<Messages, CliError> {
    let args = RunArgs::from_arg_matches(m).map_err(|e| CliError::config(e.to_string()))?;
    let raw = match &args.config {
        Some(p) => RawConfig::read(&p.to_string_lossy())?,
        None => RawConfig::default(),
    };
    let run = execute(def, &raw, &args.overrides, args.jobs, args.cross_check)?;
    let spec = raw.output.as_ref();
    let path = args.output.clone().or_else(|| spec.and_then(|o| o.path.clone()).map(PathBuf::from));
    let format = args
        .format
        .or_else(|| spec.and_then(|o| o.format))
        .or_else(|| path.as_deref().and_then(format_from_extension))
        .unwrap_or(Format::Csv);
    let text = render(&run.config, &run.table, format);
    match path {
        Some(p) => std::fs::write(&p, text).map_err(|e| CliError::Output(format!("{}: {e}", p.display())))?,
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| CliError::Output(e.to_string()))?,
    }
    Ok((run.warnings, run.notes))
}

fn format_from_extension(p: &Path) -> Option<Format> {
    match p.extension()?.to_str()? {
        "json" => Some(Format::Json),
        "csv" => Some(Format::Csv),
        _ => None,
    }
}

/// Structural and physical checks of a config file, no solver runs.
pub fn validate_config(raw: &RawConfig) -> Result<Vec<String>, CliError> {
    let name = raw.scenario.as_deref().ok_or_else(|| CliError::config("config has no 'scenario' field"))?;
    let def = find(name).ok_or_else(|| {
        let names: Vec<&str> = SCENARIOS.iter().map(|s| s.name).collect();
        CliError::config(format!("unknown scenario '{name}'; expected one of: {}", names.join(", ")))
    })?;
    let cfg = resolve(def, raw, &[])?;
    (def.check)(&cfg)
}

fn validate(m: &ArgMatches) -> Result<Messages, CliError> {
    let path = m.get_one::<String>("path").or_else(|| m.get_one::<String>("config")).expect("path is required");
    let warnings = validate_config(&RawConfig::read(path)?)?;
    println!("{path}: ok ({} warning{})", warnings.len(), if warnings.len() == 1 { "" } else { "s" });
    Ok((warnings, Vec::new()))
}

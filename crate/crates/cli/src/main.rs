//! `fermigauss`: JSON-in, JSON-out front-end to the `fermigauss` library.
//!
//! Exit status is 0 when every check in the report passes, 1 on a failed check or a
//! numerical breakdown, and 2 on unreadable or invalid input.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use fermigauss::decompose::{check_schedule, DEFAULT_SCHEDULE};
use fermigauss::fock::MAX_MODES;
use fermigauss::identities::Theorem;

use commands::{CliResult, Method};
use report::{CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "fermigauss", version, about = "Fermionic Gaussian operators: construction, moments, identities, decompositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Residual tolerance for pass/fail (defaults depend on the command).
    #[arg(long, global = true)]
    tolerance: Option<f64>,

    /// Scales for limit families, comma separated.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = DEFAULT_SCHEDULE.to_vec())]
    epsilon_schedule: Vec<f64>,
}

#[derive(clap::Args, Debug, Serialize)]
struct Source {
    /// Gaussian parameters as JSON; a seeded random draw when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    modes: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Pfaffian of an antisymmetric matrix read from JSON.
    Pfaffian {
        #[arg(long)]
        input: PathBuf,
    },
    /// Dense trace of the Gaussian against its weight.
    Trace(Source),
    /// Oracle first moments and number correlations.
    Moments(Source),
    /// Dense matrix of the Gaussian.
    Materialize(Source),
    /// Residual of a moment theorem or differential identity on a seeded Gaussian.
    Verify {
        /// 1-6, thermal, thermal-composed, det-derivative, or all.
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 2)]
        modes: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Positive Gaussian decomposition of a density matrix.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// The Bell projector as a single Gaussian.
    DemoBell,
}

fn check_modes(modes: usize) -> CliResult<()> {
    if (1..=MAX_MODES).contains(&modes) {
        Ok(())
    } else {
        Err(CliError::Validation { invariant: "mode-range", message: format!("modes must lie in 1..={MAX_MODES}, got {modes}") })
    }
}

fn run(cli: &Cli) -> CliResult<Report> {
    if let Some(t) = cli.tolerance {
        if !(t > 0.0 && t.is_finite()) {
            return Err(CliError::Validation { invariant: "tolerance", message: format!("tolerance must be positive, got {t}") });
        }
    }
    check_schedule(&cli.epsilon_schedule)?;
    let tol = |default: f64| cli.tolerance.unwrap_or(default);
    let base = serde_json::json!({
        "tolerance": cli.tolerance,
        "epsilon_schedule": cli.epsilon_schedule,
    });
    let config = |extra: serde_json::Value| {
        let mut c = base.clone();
        c.as_object_mut().unwrap().extend(extra.as_object().unwrap().clone());
        c
    };
    match &cli.command {
        Command::Pfaffian { input } => {
            commands::pfaffian_cmd(config(serde_json::json!({ "input": input })), input, tol(1e-10))
        }
        Command::Trace(src) | Command::Moments(src) | Command::Materialize(src) => {
            check_modes(src.modes)?;
            let p = commands::load_params(src.input.as_deref(), src.modes, src.seed)?;
            let cfg = config(commands::to_config(src));
            match &cli.command {
                Command::Trace(_) => commands::trace_cmd(cfg, &p, tol(1e-9)),
                Command::Moments(_) => commands::moments_cmd(cfg, &p, tol(1e-9)),
                _ => commands::materialize_cmd(cfg, &p, tol(1e-10)),
            }
        }
        Command::Verify { theorem, modes, seed } => {
            check_modes(*modes)?;
            let theorems = if theorem == "all" {
                Theorem::ALL.to_vec()
            } else {
                vec![theorem.parse::<Theorem>().map_err(|m| CliError::Validation { invariant: "theorem", message: m })?]
            };
            let cfg = config(serde_json::json!({ "theorem": theorem, "modes": modes, "seed": seed }));
            commands::verify_cmd(cfg, &theorems, *modes, *seed, cli.tolerance)
        }
        Command::Decompose { input, method } => {
            let rho = commands::load_density(input)?;
            let cfg = config(serde_json::json!({ "input": input, "method": format!("{method:?}") }));
            commands::decompose_cmd(cfg, &rho, *method, &cli.epsilon_schedule, cli.tolerance)
        }
        Command::DemoBell => commands::demo_bell_cmd(config(serde_json::json!({})), tol(1e-12)),
    }
}

fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(report).expect("report serializes") + "\n";
    match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(report) => {
            if let Err(e) = emit(&cli, &report) {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if report.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("{}: {e}", e.kind());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

//! Command-line front end: function evaluation, trinomial roots, identity and
//! integral check sweeps with JSON or CSV reports.

pub mod commands;
pub mod config;
pub mod error;
pub mod expr;
pub mod report;
pub mod sweep;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use commands::{IntegrateOptions, RootMethod};
use config::{parse_grid_arg, OutputFormat, SweepConfig};
use error::{CliError, CliResult, EXIT_FAILURES, EXIT_OK};

#[derive(Debug, Parser)]
#[command(name = "hyperroots", version, about = "Trinomial roots, hypergeometric reduction identities and their checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a special function, e.g. `eval 2f1 0.5 1 2 0.5`.
    Eval {
        name: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Roots of x^n - x + t = 0 by the series route, the closed forms, or both.
    Roots {
        n: u32,
        #[arg(allow_hyphen_values = true)]
        t: String,
        #[arg(value_enum, default_value = "both")]
        method: RootMethod,
        #[arg(long)]
        json: bool,
    },
    /// Run identity and integral checks over grids.
    Check(CheckArgs),
    /// Same as `check`, driven by a config file.
    Sweep(CheckArgs),
    /// Integrate J0..J3 against their closed forms, or a custom integrand in t.
    Integrate(IntegrateArgs),
    /// List check ids, parameters, tolerances and eval functions.
    List,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Comma-separated check ids, or `all`.
    #[arg(long, value_delimiter = ',')]
    pub ids: Vec<String>,
    /// `name:min:max:count` or `name=v1,v2,...`; repeatable.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Vec<String>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long)]
    pub format: Option<OutputFormat>,
    #[arg(long)]
    pub out: Option<String>,
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    /// J0, J1, J2, J3 or custom.
    pub integrand: String,
    /// Expression in t for `custom`.
    #[arg(allow_hyphen_values = true)]
    pub expr: Option<String>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Upper kernel parameters of J0, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Vec<String>,
    /// Lower kernel parameters of J0, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub b: Vec<String>,
    #[arg(long)]
    pub tol: Option<f64>,
    /// Power of t at the origin (custom).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub exponent: f64,
    /// Exponential decay rate of the tail (custom).
    #[arg(long)]
    pub rate: Option<f64>,
    /// Algebraic tail power, below -1 (custom).
    #[arg(long, allow_hyphen_values = true)]
    pub power: Option<f64>,
}

/// Config file first, then command-line flags on top.
pub fn merge_config(args: &CheckArgs, require_file: bool) -> CliResult<SweepConfig> {
    let mut cfg = match &args.config {
        Some(path) => SweepConfig::load(path)?,
        None if require_file => return Err(CliError::usage("sweep needs --config <path>")),
        None => SweepConfig::default(),
    };
    if !args.ids.is_empty() {
        cfg.identity_ids = args.ids.clone();
    }
    for g in &args.grid {
        let (name, axis) = parse_grid_arg(g)?;
        cfg.grid.insert(name, axis);
    }
    if args.tol.is_some() {
        cfg.tolerance = args.tol;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if let Some(f) = args.format {
        cfg.output_format = f;
    }
    if args.out.is_some() {
        cfg.output_path = args.out.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn run_check(out: &mut dyn Write, err: &mut dyn Write, args: &CheckArgs, require_file: bool) -> CliResult<i32> {
    let cfg = merge_config(args, require_file)?;
    let report = sweep::run(&cfg, args.jobs)?;
    let body = match cfg.output_format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
    };
    match &cfg.output_path {
        Some(path) => {
            std::fs::write(path, body).map_err(|source| CliError::Io {
                path: path.into(),
                source,
            })?;
            writeln!(out, "{}", report.summary).ok();
        }
        None => {
            out.write_all(body.as_bytes()).ok();
            writeln!(err, "{}", report.summary).ok();
        }
    }
    Ok(if report.summary.fail > 0 { EXIT_FAILURES } else { EXIT_OK })
}

fn opt_complex(v: &Option<String>) -> CliResult<Option<hyperroots::cx::Complex>> {
    v.as_deref().map(commands::parse_complex).transpose()
}

fn run_integrate(out: &mut dyn Write, a: &IntegrateArgs) -> CliResult<i32> {
    let list = |v: &[String]| v.iter().map(|s| commands::parse_complex(s)).collect::<CliResult<Vec<_>>>();
    let opts = IntegrateOptions {
        n: a.n,
        s: opt_complex(&a.s)?,
        p: opt_complex(&a.p)?,
        x: opt_complex(&a.x)?,
        alpha: opt_complex(&a.alpha)?,
        a: list(&a.a)?,
        b: list(&a.b)?,
        tol: a.tol,
        exponent: a.exponent,
        rate: a.rate,
        power: a.power,
    };
    commands::cmd_integrate(out, &a.integrand, a.expr.as_deref(), &opts)
}

/// Executes a parsed command; errors are returned for the caller to report.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match &cli.command {
        Command::Eval { name, args } => commands::cmd_eval(out, name, args),
        Command::Roots { n, t, method, json } => {
            commands::cmd_roots(out, *n, commands::parse_complex(t)?, *method, *json)
        }
        Command::Check(args) => run_check(out, err, args, false),
        Command::Sweep(args) => run_check(out, err, args, true),
        Command::Integrate(args) => run_integrate(out, args),
        Command::List => commands::cmd_list(out),
    }
}

/// Runs with stdout/stderr and returns the process exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { error::EXIT_USAGE } else { EXIT_OK };
            e.print().ok();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    match execute(&cli, &mut out, &mut err) {
        Ok(code) => code,
        Err(e) => {
            writeln!(err, "error: {e}").ok();
            e.exit_code()
        }
    }
}

//! Command-line front end: argument model, command dispatch and output
//! rendering for the `spars` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use spars::eval::{Evaluator, FloodMode};
use spars::graph::{LocationId, Metric, DEFAULT_EDGE_BUDGET};
use spars::io::{
    bool_map_to_json, format_pairset, format_real, load_model, render_dot, robust_map_to_json,
    sparv_to_json, to_canonical_string,
};
use spars::logic::{parse_spars_with, parse_srel_with};
use spars::{oracle_check_all, oracle_sparv_all, LocationMap, Model, Monitor, OracleBudget, SparsFormula, SrelFormula};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Spars(#[from] spars::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Spars(e) => e.code(),
            CliError::Usage(_) => "Usage",
        }
    }

    /// 2 for bad input or arguments, 1 when evaluation itself failed.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Spars(e) if !e.is_input_error() => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "spars", version, about = "Resilience monitoring over weighted spatial graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resilience value sets of a resilience formula.
    Eval(RunArgs),
    /// Boolean satisfaction of a Boolean spatial formula.
    Check(RunArgs),
    /// Quantitative robustness of a Boolean spatial formula.
    Robustness(RunArgs),
    /// Brute-force reference by route enumeration; accepts either logic.
    Oracle(RunArgs),
    /// DOT drawing of the model with satisfied locations filled.
    Render(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Weight,
    Hops,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FloodArg {
    Exact,
    Walk,
}

#[derive(Debug, Clone, Args)]
#[command(group = clap::ArgGroup::new("formula_source").required(true).args(["formula", "formula_file"]))]
pub struct RunArgs {
    /// Model file (JSON).
    #[arg(long)]
    pub model: PathBuf,
    /// Formula text.
    #[arg(long)]
    pub formula: Option<String>,
    /// File holding the formula text.
    #[arg(long)]
    pub formula_file: Option<PathBuf>,
    /// Only report this location.
    #[arg(long)]
    pub at: Option<String>,
    /// Output format; `render` always writes DOT.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Metric for operators without an explicit `{hops}` or `{weight}` tag.
    #[arg(long, value_enum, default_value_t = MetricArg::Weight)]
    pub metric: MetricArg,
    /// Write the output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Decimals shown in tables.
    #[arg(long, default_value_t = 2)]
    pub digits: usize,
    /// Flooding strategy for spatial operators.
    #[arg(long, value_enum, default_value_t = FloodArg::Exact)]
    pub flood: FloodArg,
    /// Largest satisfying component searched for longest trails.
    #[arg(long, env = "SPARS_EDGE_BUDGET", default_value_t = DEFAULT_EDGE_BUDGET)]
    pub edge_budget: usize,
    /// Longest route the oracle enumerates, in edges.
    #[arg(long, default_value_t = 12)]
    pub max_route_edges: usize,
    /// Most routes the oracle enumerates.
    #[arg(long, default_value_t = 1_000_000)]
    pub max_routes: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sparv,
    Check,
    Robustness,
    OracleSparv,
    OracleCheck,
    Render,
}

/// A fully resolved invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub mode: Mode,
    pub model: PathBuf,
    pub formula: String,
    pub at: Option<String>,
    pub format: Format,
    pub metric: Metric,
    pub digits: usize,
    pub evaluator: Evaluator,
    pub oracle: OracleBudget,
}

impl RunConfig {
    pub fn from_command(command: Command) -> Result<(Self, Option<PathBuf>), CliError> {
        let (kind, args) = match command {
            Command::Eval(a) => (Mode::Sparv, a),
            Command::Check(a) => (Mode::Check, a),
            Command::Robustness(a) => (Mode::Robustness, a),
            Command::Oracle(a) => (Mode::OracleSparv, a),
            Command::Render(a) => (Mode::Render, a),
        };
        let formula = match (&args.formula, &args.formula_file) {
            (Some(text), _) => text.clone(),
            (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| spars::Error::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?,
            (None, None) => return Err(CliError::Usage("a formula is required".into())),
        };
        let metric = match args.metric {
            MetricArg::Weight => Metric::Weight,
            MetricArg::Hops => Metric::Hops,
        };
        let flood = match args.flood {
            FloodArg::Exact => FloodMode::Exact,
            FloodArg::Walk => FloodMode::Walk,
        };
        let mode = if kind == Mode::OracleSparv && parse_spars_with::<f64>(&formula, metric).is_err() {
            Mode::OracleCheck
        } else {
            kind
        };
        let format = if mode == Mode::Render { Format::Dot } else { args.format };
        if format == Format::Dot && args.at.is_some() {
            return Err(CliError::Usage("--at cannot be combined with DOT output".into()));
        }
        let config = RunConfig {
            mode,
            model: args.model,
            formula,
            at: args.at,
            format,
            metric,
            digits: args.digits,
            evaluator: Evaluator {
                edge_budget: args.edge_budget,
                flood,
                ..Evaluator::default()
            },
            oracle: OracleBudget::new(args.max_route_edges, args.max_routes)?,
        };
        Ok((config, args.out))
    }
}

enum Outcome {
    Sparv(spars::Sparv),
    Bool(LocationMap<bool>),
    Robust(LocationMap<f64>),
}

/// Runs one command and returns the rendered output.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let model: Model = load_model(&config.model)?;
    let rows: Vec<LocationId> = match &config.at {
        Some(name) => vec![model.resolve(name)?],
        None => model.locations().collect(),
    };
    let spars_formula = || -> Result<SparsFormula<f64>, CliError> {
        Ok(parse_spars_with(&config.formula, config.metric).map_err(spars::Error::from)?)
    };
    let srel_formula = || -> Result<SrelFormula<f64>, CliError> {
        Ok(parse_srel_with(&config.formula, config.metric).map_err(spars::Error::from)?)
    };
    let monitor = Monitor {
        state_budget: config.evaluator.state_budget,
    };
    let outcome = match config.mode {
        Mode::Sparv => Outcome::Sparv(config.evaluator.evaluate(&model, &spars_formula()?)?),
        Mode::Check => Outcome::Bool(monitor.check(&model, &srel_formula()?)?),
        Mode::Robustness => Outcome::Robust(monitor.robustness(&model, &srel_formula()?)?),
        Mode::OracleSparv => Outcome::Sparv(oracle_sparv_all(&model, &spars_formula()?, config.oracle)?),
        Mode::OracleCheck => Outcome::Bool(oracle_check_all(&model, &srel_formula()?, config.oracle)?),
        Mode::Render => match parse_spars_with::<f64>(&config.formula, config.metric) {
            Ok(f) => Outcome::Sparv(config.evaluator.evaluate(&model, &f)?),
            Err(_) => Outcome::Bool(monitor.check(&model, &srel_formula()?)?),
        },
    };
    Ok(match config.format {
        Format::Dot => {
            let verdicts = match &outcome {
                Outcome::Sparv(m) => m.map(|s| s.is_satisfying()),
                Outcome::Bool(m) => m.clone(),
                Outcome::Robust(m) => m.map(|x| *x > 0.0),
            };
            render_dot(&model, &verdicts)
        }
        Format::Json => {
            let full = match &outcome {
                Outcome::Sparv(m) => sparv_to_json(&model, m),
                Outcome::Bool(m) => bool_map_to_json(&model, m),
                Outcome::Robust(m) => robust_map_to_json(&model, m),
            };
            let Value::Object(mut all) = full else {
                unreachable!("location maps serialise to objects")
            };
            let kept = rows
                .iter()
                .map(|&l| {
                    let key = model.name(l).to_string();
                    let v = all.remove(&key).expect("every location has a value");
                    (key, v)
                })
                .collect();
            to_canonical_string(&Value::Object(kept))
        }
        Format::Table => rows
            .iter()
            .map(|&l| {
                let cell = match &outcome {
                    Outcome::Sparv(m) => format_pairset(&m[l], config.digits),
                    Outcome::Bool(m) => m[l].to_string(),
                    Outcome::Robust(m) => format_real(m[l], config.digits),
                };
                format!("{}: {cell}\n", model.name(l))
            })
            .collect(),
    })
}

//! `fdkit` command-line front end.
//!
//! Data goes to stdout (or `--out`), diagnostics to stderr. Exit codes:
//! 1 I/O, 2 unparsable input or unknown algorithm, 3 duplicate grid points,
//! 4 out-of-range arguments.

mod gridspec;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fdkit::format::fmt_f64;
use fdkit::oracle::{self, DEFAULT_DIGITS};
use fdkit::spectral::{diff_matrix_with, weights_with};
use fdkit::superconv::{analyze, DEFAULT_TOLERANCE};
use fdkit::{AlgorithmRegistry, FdError, Grid, Ordering, WeightAlgorithm, WeightTable};
use serde::{Deserialize, Serialize};

use gridspec::{parse_number, GridSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    UnknownAlgorithm(String),
    #[error(transparent)]
    Domain(#[from] FdError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) | CliError::UnknownAlgorithm(_) => 2,
            CliError::Domain(FdError::DuplicateGridPoint { .. }) => 3,
            CliError::Domain(_) => 4,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "fdkit",
    version,
    about = "Finite-difference weights on arbitrary grids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct GridArgs {
    /// Inline list (`-1,0,1/2`), a file of numbers, or `chebyshev:N`.
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
    /// Node order used internally: natural, bit_reversed or leja.
    #[arg(long)]
    ordering: Option<String>,
}

impl GridArgs {
    fn resolve(&self) -> CliResult<GridSpec> {
        let ordering = self
            .ordering
            .as_deref()
            .map(|s| {
                s.parse::<Ordering>()
                    .map_err(|e| CliError::Parse(e.to_string()))
            })
            .transpose()?;
        GridSpec::parse(&self.grid, ordering)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Weights for derivative orders 0..=m at a center.
    Weights {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = center_arg)]
        center: f64,
        #[arg(long, default_value = AlgorithmRegistry::DEFAULT)]
        algorithm: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Differentiation matrix of a given order.
    Diffmat {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = AlgorithmRegistry::DEFAULT)]
        algorithm: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Order of accuracy, boost and leading error term of a stencil.
    Analyze {
        /// Required unless `--weights-file` supplies the grid.
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = center_arg)]
        center: f64,
        /// Relative zero test for the symmetric functions.
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long, default_value = AlgorithmRegistry::DEFAULT)]
        algorithm: String,
        /// JSON written by `weights`; its grid, center and weights are used.
        #[arg(long)]
        weights_file: Option<PathBuf>,
    },
    /// Rounding error of every algorithm against the extended-precision reference.
    Compare {
        #[command(flatten)]
        grid: GridArgs,
        /// Derivative order.
        #[arg(long = "M", alias = "order")]
        order: usize,
        /// Reference precision in decimal digits (default: $FDKIT_ORACLE_DIGITS or 50).
        #[arg(long)]
        digits: Option<u32>,
        /// Score the weight table at this center instead of the differentiation matrix.
        #[arg(long, allow_hyphen_values = true, value_parser = center_arg)]
        center: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Node permutation produced by an ordering.
    Order {
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value = "leja")]
        ordering: String,
    },
    /// Registered weight algorithms.
    Algorithms,
}

fn center_arg(s: &str) -> Result<f64, String> {
    parse_number(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let registry = AlgorithmRegistry::with_builtins();
    match run(cli.command, &registry) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fdkit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn lookup<'r>(registry: &'r AlgorithmRegistry, name: &str) -> CliResult<&'r dyn WeightAlgorithm> {
    registry
        .get(name)
        .map_err(|e| CliError::UnknownAlgorithm(e.to_string()))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

/// Document written by `weights` and read back by `analyze --weights-file`.
#[derive(Serialize, Deserialize)]
struct WeightsDoc {
    grid: Vec<f64>,
    m: usize,
    center: f64,
    algorithm: String,
    /// `weights[k][j]`: node `k`, derivative order `j`.
    weights: Vec<Vec<f64>>,
    /// `by_order[j][k]`, the transpose.
    by_order: Vec<Vec<f64>>,
}

fn run(command: Command, registry: &AlgorithmRegistry) -> CliResult<()> {
    match command {
        Command::Weights {
            grid,
            m,
            center,
            algorithm,
            format,
        } => {
            let alg = lookup(registry, &algorithm)?;
            let spec = grid.resolve()?;
            let table = weights_with(&spec.grid, m, center, alg, spec.options)?;
            let text = match format {
                Format::Json => to_json(&WeightsDoc {
                    grid: spec.grid.points().to_vec(),
                    m,
                    center,
                    algorithm: alg.name().to_string(),
                    weights: table.rows(),
                    by_order: (0..=m).map(|j| table.order(j)).collect(),
                }),
                Format::Csv => weights_csv(&spec.grid, &table),
            };
            emit(None, &text)
        }
        Command::Diffmat {
            grid,
            order,
            algorithm,
            out,
            format,
        } => {
            let alg = lookup(registry, &algorithm)?;
            let spec = grid.resolve()?;
            let matrix = diff_matrix_with(&spec.grid, order, alg, spec.options)?;
            let text = match format {
                Format::Json => {
                    let mut s = matrix.to_json();
                    s.push('\n');
                    s
                }
                Format::Csv => matrix.to_csv(),
            };
            emit(out.as_deref(), &text)
        }
        Command::Analyze {
            grid,
            m,
            center,
            tau,
            algorithm,
            weights_file,
        } => {
            let tau = tau.unwrap_or(DEFAULT_TOLERANCE);
            let (grid, table) = match weights_file {
                Some(path) => {
                    let doc: WeightsDoc = serde_json::from_str(&std::fs::read_to_string(&path)?)
                        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
                    let g = Grid::new(doc.grid)?;
                    if let Some(source) = &grid {
                        let given = GridSpec::parse(source, None)?.grid;
                        if given != g {
                            return Err(FdError::Argument(
                                "--grid does not match the grid in --weights-file".into(),
                            )
                            .into());
                        }
                    }
                    let table = WeightTable::from_rows(doc.weights, doc.center)?;
                    (g, table)
                }
                None => {
                    let source = grid.ok_or_else(|| {
                        CliError::Parse("analyze needs --grid or --weights-file".into())
                    })?;
                    let alg = lookup(registry, &algorithm)?;
                    let spec = GridSpec::parse(&source, None)?;
                    if m == 0 {
                        return Err(not_analyzed().into());
                    }
                    let table = weights_with(&spec.grid, m, center, alg, spec.options)?;
                    (spec.grid, table)
                }
            };
            if m == 0 {
                return Err(not_analyzed().into());
            }
            let report = analyze(&grid, m, &table, tau)?;
            if let Some(d) = &report.diagnostic {
                eprintln!("fdkit: {d}");
            }
            emit(None, &to_json(&report))
        }
        Command::Compare {
            grid,
            order,
            digits,
            center,
            out,
            format,
        } => {
            let digits = match digits {
                Some(d) => d,
                None => oracle_digits_from_env()?,
            };
            let spec = grid.resolve()?;
            let results = compare(&spec, order, digits, center, registry)?;
            for r in &results {
                eprintln!(
                    "{:<10} max digits lost {:>5.1}   max rel error {}",
                    r.algorithm,
                    r.map.max_digits_lost,
                    fmt_f64(r.map.max_rel_error)
                );
            }
            let text = match format {
                Format::Csv => compare_csv(&results, center.is_some()),
                Format::Json => to_json(&serde_json::json!({
                    "grid": spec.grid.points(),
                    "order": order,
                    "digits": digits,
                    "target": if center.is_some() { "weights" } else { "matrix" },
                    "results": results,
                })),
            };
            emit(out.as_deref(), &text)
        }
        Command::Order { grid, ordering } => {
            let ordering: Ordering = ordering
                .parse()
                .map_err(|e: FdError| CliError::Parse(e.to_string()))?;
            let grid = GridSpec::parse(&grid, None)?.grid;
            let perm = ordering.permutation(grid.points());
            let doc = serde_json::json!({
                "ordering": ordering.name(),
                "permutation": perm.indices,
                "points": perm.apply(grid.points()),
                "fell_back_to_leja": perm.fell_back_to_leja,
            });
            emit(None, &to_json(&doc))
        }
        Command::Algorithms => {
            let mut text = String::new();
            for alg in registry.iter() {
                let marker = if alg.name() == AlgorithmRegistry::DEFAULT {
                    " (default)"
                } else {
                    ""
                };
                text.push_str(&format!("{}{marker}\t{}\n", alg.name(), alg.summary()));
            }
            emit(None, &text)
        }
    }
}

fn not_analyzed() -> FdError {
    FdError::Argument("m = 0 is interpolation; the interpolation case is not analyzed".into())
}

fn oracle_digits_from_env() -> CliResult<u32> {
    match std::env::var("FDKIT_ORACLE_DIGITS") {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Parse(format!("FDKIT_ORACLE_DIGITS='{v}' is not a digit count"))
        }),
        Err(_) => Ok(DEFAULT_DIGITS),
    }
}

fn weights_csv(grid: &Grid, table: &WeightTable) -> String {
    let mut out = String::from("k,z");
    for j in 0..=table.max_order() {
        out.push_str(&format!(",w{j}"));
    }
    out.push('\n');
    for (k, z) in grid.points().iter().enumerate() {
        out.push_str(&format!("{k},{}", fmt_f64(*z)));
        for w in table.node(k) {
            out.push(',');
            out.push_str(&fmt_f64(*w));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct Comparison {
    algorithm: &'static str,
    map: oracle::ErrorMap,
}

fn compare(
    spec: &GridSpec,
    order: usize,
    digits: u32,
    center: Option<f64>,
    registry: &AlgorithmRegistry,
) -> CliResult<Vec<Comparison>> {
    let grid = &spec.grid;
    let mut results = Vec::new();
    match center {
        Some(c) => {
            let reference = oracle::exact_weights(grid, order, c, digits)?;
            for alg in registry.iter() {
                let table = weights_with(grid, order, c, alg, spec.options)?;
                let map = oracle::digits_lost(&table, &reference)?;
                results.push(Comparison {
                    algorithm: alg.name(),
                    map,
                });
            }
        }
        None => {
            let reference = oracle::exact_diff_matrix(grid, order, digits)?;
            for alg in registry.iter() {
                let matrix = diff_matrix_with(grid, order, alg, spec.options)?;
                let map = oracle::matrix_digits_lost(&matrix, &reference)?;
                results.push(Comparison {
                    algorithm: alg.name(),
                    map,
                });
            }
        }
    }
    Ok(results)
}

fn compare_csv(results: &[Comparison], weights: bool) -> String {
    let (row, col) = if weights { ("k", "m") } else { ("i", "j") };
    let mut out = format!("algorithm,{row},{col},rel_error,digits_lost\n");
    for r in results {
        for line in r.map.to_csv(row, col).lines().skip(1) {
            out.push_str(r.algorithm);
            out.push(',');
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}

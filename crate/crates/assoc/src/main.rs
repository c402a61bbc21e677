use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use assoc::error::{CliError, CliResult};
use assoc::run::{self, Format, TableKind, TestFn, WalkRequest, Which};
use assoc::{formats, limits_from_env};
use assoc_core::spectra::{Solver, SolverOptions};

/// Flip graphs of convex polygon triangulations: enumeration, spectra, censuses,
/// bounds and random walks.
///
/// Exit codes: 0 success, 1 a checked claim failed, 2 bad input, 3 capacity or
/// convergence trouble. ASSOC_MAX_N overrides the largest polygon size (default 14).
#[derive(Parser)]
#[command(name = "assoc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every triangulation of the n-gon, one `i-j,...` line each, in index order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the flip graph.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "edges")]
        export: Export,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Smallest, second-largest or every adjacency eigenvalue (JSON).
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "min")]
        which: WhichArg,
        #[command(flatten)]
        solver: SolverArgs,
        /// Add wall-clock seconds to the report (breaks byte-identical output).
        #[arg(long)]
        timing: bool,
    },
    /// Pentagon and hexagon counts per vertex (and per edge) as CSV.
    Census {
        #[arg(long)]
        n: usize,
        /// Also run the brute-force oracles.
        #[arg(long)]
        oracle: bool,
        /// Append the per-edge table after a blank line.
        #[arg(long)]
        edges: bool,
    },
    /// Every bound for the n-gon flip graph (JSON array).
    Bounds {
        #[arg(long)]
        n: usize,
        /// Compare against computed eigenvalues.
        #[arg(long)]
        certify: bool,
        /// File of copies, one per line, host vertices in pattern-vertex order.
        #[arg(long, requires = "pattern")]
        collection: Option<PathBuf>,
        /// Pattern of the copies: k3, c5, c7, c9 or a6.
        #[arg(long)]
        pattern: Option<String>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Random walk summary and optional test-function Dirichlet quotient (JSON).
    Walk {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        steps: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Start vertex; uniform when absent.
        #[arg(long)]
        start: Option<usize>,
        #[arg(long = "test-fn", value_enum, default_value = "none")]
        test_fn: TestFnArg,
        /// Values for `--test-fn file`, one per line in vertex order.
        #[arg(long = "f")]
        values: Option<PathBuf>,
        /// Write per-vertex visit counts as CSV.
        #[arg(long)]
        visits: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Reproduce an eigenvalue table, the gap scan, or the split-bound offsets.
    Table {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long = "n-max", default_value_t = 12)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Run every checkable claim for 4 <= n <= n-max (JSON).
    Certify {
        #[arg(long = "n-max", default_value_t = 9)]
        n_max: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
}

#[derive(Args)]
struct SolverArgs {
    #[arg(long, value_enum, default_value = "auto")]
    solver: SolverArg,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long = "solver-seed", default_value_t = 0x5eed)]
    solver_seed: u64,
    /// Cap on operator applications for the iterative solver.
    #[arg(long = "max-iter", default_value_t = 20_000)]
    max_iter: usize,
}

impl SolverArgs {
    fn options(&self) -> CliResult<SolverOptions> {
        if !(self.tol > 0.0) {
            return Err(CliError::Input("--tol must be positive".into()));
        }
        let solver = match self.solver {
            SolverArg::Auto => Solver::Auto,
            SolverArg::Dense => Solver::Dense,
            SolverArg::Iterative => Solver::Iterative,
        };
        Ok(SolverOptions { solver, tol: self.tol, seed: self.solver_seed, max_matvecs: self.max_iter, ..SolverOptions::default() })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Export {
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Min,
    Second,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    Auto,
    Dense,
    Iterative,
}

#[derive(Clone, Copy, ValueEnum)]
enum TestFnArg {
    None,
    Aldous,
    Eigen,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "lambda_min")]
    LambdaMin,
    #[value(name = "lambda_2")]
    Lambda2,
    Gap,
    Offsets,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

fn sink(path: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn open(path: &PathBuf) -> CliResult<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn dispatch(cli: Cli) -> CliResult<()> {
    let limits = limits_from_env()?;
    let stdout = || sink(&None);
    match cli.command {
        Command::Enumerate { n, out } => run::cmd_enumerate(sink(&out)?, n, &limits),
        Command::Graph { n, export: Export::Edges, out } => run::cmd_graph_edges(sink(&out)?, n, &limits),
        Command::Spectrum { n, which, solver, timing } => {
            let which = match which {
                WhichArg::Min => Which::Min,
                WhichArg::Second => Which::Second,
                WhichArg::Full => Which::Full,
            };
            run::cmd_spectrum(stdout()?, n, which, &solver.options()?, &limits, timing)
        }
        Command::Census { n, oracle, edges } => run::cmd_census(stdout()?, n, oracle, edges, &limits),
        Command::Bounds { n, certify, collection, pattern, solver } => {
            let opts = solver.options()?;
            match (collection, pattern) {
                (Some(path), Some(name)) => {
                    let pattern = run::pattern_graph(&name)?;
                    let maps = formats::read_copy_maps(open(&path)?)?;
                    run::cmd_bounds(stdout()?, n, certify, Some((&pattern, &maps)), &opts, &limits)
                }
                _ => run::cmd_bounds(stdout()?, n, certify, None, &opts, &limits),
            }
        }
        Command::Walk { n, steps, seed, start, test_fn, values, visits, solver } => {
            let test_fn = match (test_fn, values) {
                (TestFnArg::None, _) => TestFn::None,
                (TestFnArg::Aldous, _) => TestFn::Aldous,
                (TestFnArg::Eigen, _) => TestFn::Eigen,
                (TestFnArg::File, Some(p)) => TestFn::Values(formats::read_vector(open(&p)?)?),
                (TestFnArg::File, None) => return Err(CliError::Input("--test-fn file needs --f FILE".into())),
            };
            let req = WalkRequest { n, steps, seed, start, test_fn };
            let visit_sink = match &visits {
                Some(_) => Some(sink(&visits)?),
                None => None,
            };
            run::cmd_walk(stdout()?, visit_sink, &req, &solver.options()?, &limits)
        }
        Command::Table { kind, n_max, format, solver } => {
            let kind = match kind {
                KindArg::LambdaMin => TableKind::LambdaMin,
                KindArg::Lambda2 => TableKind::Lambda2,
                KindArg::Gap => TableKind::Gap,
                KindArg::Offsets => TableKind::Offsets,
            };
            let format = match format {
                FormatArg::Text => Format::Text,
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            };
            run::cmd_table(stdout()?, kind, n_max, format, &solver.options()?, &limits)
        }
        Command::Certify { n_max, solver } => run::cmd_certify(stdout()?, n_max, &solver.options()?, &limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("assoc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

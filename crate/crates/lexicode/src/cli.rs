//! Command-line front end for construction, analysis, composition,
//! benchmarking and cost estimation.
//!
//! Exit codes: 0 success, 1 usage error, 2 input-format error, 3 internal
//! invariant violation (a benchmark row whose serial and parallel outputs
//! disagree).

use crate::analysis::{linear_dimension, CodeReport};
use crate::bench::{self, BenchRecord};
use crate::codefile::{read_basis, read_basis_auto, read_code, write_code};
use crate::compose::{cartesian_product, recursive_self_orthogonal_with_threshold};
use crate::estimate::estimate;
use crate::greedy::{greedy_construct_with_stats, ConstructionParams};
use crate::ordering::OrderingSpec;
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

/// Entry point used by the `lexicode` binary.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Io(_)
        | Error::CodeFileFormat { .. }
        | Error::DependentBasis
        | Error::BasisLengthMismatch { .. } => EXIT_INPUT,
        Error::BenchMismatch { .. } => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

#[derive(Parser)]
#[command(
    name = "lexicode",
    version,
    about = "Construct and analyze binary error-correcting codes by the greedy method"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a greedy code and write it to a file
    Construct(ConstructArgs),
    /// Analyze a code file and report its properties
    Analyze(AnalyzeArgs),
    /// Compose codes: recursive self-orthogonal construction or Cartesian product
    Compose(ComposeArgs),
    /// Compare the serial reference against the parallel engine
    Bench(BenchArgs),
    /// Print worst-case and refined operation-count estimates
    Estimate(EstimateArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OrderingArg {
    Lex,
    Gray,
    Gradlex,
    Gradrevlex,
    Border,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct ConstructArgs {
    /// Code length (1..=64)
    #[arg(long)]
    n: u32,
    /// Minimum Hamming distance (1..=n)
    #[arg(long)]
    d: u32,
    /// Enumeration order of the candidate vectors
    #[arg(long, value_enum, default_value_t = OrderingArg::Lex)]
    ordering: OrderingArg,
    /// Basis file for --ordering border: n lines of n-bit strings
    #[arg(long)]
    basis: Option<PathBuf>,
    /// Keep only vectors of exactly this weight
    #[arg(long)]
    weight: Option<u32>,
    /// Require all codewords pairwise orthogonal (and of even weight)
    #[arg(long)]
    self_orthogonal: bool,
    /// First-phase fraction of the candidate check, in (0, 1]
    #[arg(long)]
    selective_fraction: Option<f64>,
    /// Worker threads, 0 = auto; defaults to $LEXICODE_THREADS, then auto
    #[arg(long)]
    threads: Option<usize>,
    /// Output code file
    #[arg(long)]
    out: PathBuf,
    /// Report format for --report
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Print a full analysis report after construction
    #[arg(long)]
    report: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Code file in canonical text form
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct ComposeArgs {
    /// Build Code[n, d] by the recursive self-orthogonal construction
    #[arg(long)]
    recursive: bool,
    /// Target length for --recursive
    #[arg(long)]
    n: Option<u32>,
    /// Target distance for --recursive (a power of two >= 2)
    #[arg(long)]
    d: Option<u32>,
    /// Ordering for the recursion base case
    #[arg(long, value_enum, default_value_t = OrderingArg::Lex)]
    ordering: OrderingArg,
    /// Basis file when the base ordering is border
    #[arg(long)]
    basis: Option<PathBuf>,
    /// Direct-construction bound for the recursion base (default 2d)
    #[arg(long)]
    threshold: Option<u32>,
    /// Concatenate every pair of codewords from two code files
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    product: Option<Vec<PathBuf>>,
    /// Output code file
    #[arg(long)]
    out: PathBuf,
    /// Print a full analysis report for the composed code
    #[arg(long)]
    report: bool,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct BenchArgs {
    /// Length range, inclusive, as A:B (or a single N)
    #[arg(long, value_parser = parse_n_range)]
    n_range: NRange,
    /// Minimum Hamming distance
    #[arg(long)]
    d: u32,
    #[arg(long, value_enum, default_value_t = OrderingArg::Lex)]
    ordering: OrderingArg,
    #[arg(long)]
    basis: Option<PathBuf>,
    /// Worker counts, comma separated (0 = auto)
    #[arg(long, value_delimiter = ',', default_value = "0")]
    threads: Vec<usize>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Args)]
struct EstimateArgs {
    /// Code length (1..=64)
    #[arg(long)]
    n: u32,
    /// Distance, echoed for context; the worst-case bound is distance-free
    #[arg(long)]
    d: Option<u32>,
    /// Previously constructed code for these parameters; its dimension
    /// sharpens the estimate
    #[arg(long)]
    code: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug)]
struct NRange {
    lo: u32,
    hi: u32,
}

fn parse_n_range(s: &str) -> std::result::Result<NRange, String> {
    let parse = |part: &str| {
        part.parse::<u32>()
            .map_err(|_| format!("invalid length {part:?} in range"))
    };
    let (lo, hi) = match s.split_once(':') {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok(NRange { lo, hi })
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Construct(args) => run_construct(args),
        Command::Analyze(args) => run_analyze(args),
        Command::Compose(args) => run_compose(args),
        Command::Bench(args) => run_bench(args),
        Command::Estimate(args) => run_estimate(args),
    }
}

/// Resolve the worker count: explicit flag, then $LEXICODE_THREADS, then auto.
fn thread_count(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("LEXICODE_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(0)
}

fn build_ordering(arg: OrderingArg, basis: Option<&Path>, n: u32) -> Result<OrderingSpec> {
    match arg {
        OrderingArg::Lex => Ok(OrderingSpec::Lexicographic),
        OrderingArg::Gray => Ok(OrderingSpec::Gray),
        OrderingArg::Gradlex => Ok(OrderingSpec::GradedLexicographic),
        OrderingArg::Gradrevlex => Ok(OrderingSpec::GradedReverseLexicographic),
        OrderingArg::Border => {
            let path = basis.ok_or_else(|| {
                Error::Usage("--ordering border requires --basis FILE".to_string())
            })?;
            OrderingSpec::b_ordering(read_basis(path, n)?)
        }
    }
}

fn emit_report(report: &CodeReport, format: ReportFormat) {
    match format {
        ReportFormat::Text => print!("{}", report.render_text()),
        ReportFormat::Json => println!("{}", report.to_json()),
    }
}

fn run_construct(args: ConstructArgs) -> Result<()> {
    let ordering = build_ordering(args.ordering, args.basis.as_deref(), args.n)?;
    if args.weight.is_some() && args.self_orthogonal {
        eprintln!(
            "warning: --weight together with --self-orthogonal applies both \
             constraints; the result is usually much smaller than either alone"
        );
    }
    let mut params = ConstructionParams::new(args.n, args.d, ordering);
    params.constant_weight = args.weight;
    params.self_orthogonal = args.self_orthogonal;
    if let Some(f) = args.selective_fraction {
        params.selective_fraction = f;
    }
    params.parallelism = thread_count(args.threads);
    params.validate()?;

    let start = Instant::now();
    let (code, _) = greedy_construct_with_stats(&params)?;
    let seconds = start.elapsed().as_secs_f64();
    write_code(&args.out, &code)?;

    if args.report {
        emit_report(&CodeReport::analyze_timed(&code, Some(seconds)), args.format);
    } else {
        println!(
            "wrote {} codewords (n={}, d={}) to {}",
            code.len(),
            args.n,
            args.d,
            args.out.display()
        );
    }
    Ok(())
}

fn run_analyze(args: AnalyzeArgs) -> Result<()> {
    let code = read_code(&args.input)?;
    emit_report(&CodeReport::analyze(&code), args.format);
    Ok(())
}

fn run_compose(args: ComposeArgs) -> Result<()> {
    let code = match (args.recursive, &args.product) {
        (true, None) => {
            let n = args
                .n
                .ok_or_else(|| Error::Usage("--recursive requires --n".to_string()))?;
            let d = args
                .d
                .ok_or_else(|| Error::Usage("--recursive requires --d".to_string()))?;
            let ordering = match args.ordering {
                // The base-case length differs from n, so the basis width is
                // taken from the file itself and checked downstream.
                OrderingArg::Border => {
                    let path = args.basis.as_deref().ok_or_else(|| {
                        Error::Usage("--ordering border requires --basis FILE".to_string())
                    })?;
                    OrderingSpec::b_ordering(read_basis_auto(path)?)?
                }
                other => build_ordering(other, None, n)?,
            };
            recursive_self_orthogonal_with_threshold(n, d, &ordering, args.threshold)?
        }
        (false, Some(files)) => {
            let a = read_code(&files[0])?;
            let b = read_code(&files[1])?;
            cartesian_product(&a, &b)?
        }
        _ => {
            return Err(Error::Usage(
                "use exactly one of --recursive or --product A B".to_string(),
            ))
        }
    };
    write_code(&args.out, &code)?;
    if args.report {
        emit_report(&CodeReport::analyze(&code), args.format);
    } else {
        println!(
            "wrote {} codewords (n={}) to {}",
            code.len(),
            code.n(),
            args.out.display()
        );
    }
    Ok(())
}

fn run_bench(args: BenchArgs) -> Result<()> {
    let workers: Vec<usize> = if args.threads.is_empty() {
        vec![0]
    } else {
        args.threads.clone()
    };
    let mut rows: Vec<BenchRecord> = Vec::new();
    for n in args.n_range.lo..=args.n_range.hi {
        let ordering = build_ordering(args.ordering, args.basis.as_deref(), n)?;
        for &w in &workers {
            rows.push(bench::bench_row(n, args.d, &ordering, w)?);
        }
    }
    match args.format {
        TableFormat::Csv => print!("{}", bench::to_csv(&rows)),
        TableFormat::Json => println!("{}", bench::to_json(&rows)),
    }
    Ok(())
}

fn run_estimate(args: EstimateArgs) -> Result<()> {
    let cached_dimension = match &args.code {
        Some(path) => {
            let code = read_code(path)?;
            if code.n() != args.n {
                return Err(Error::Usage(format!(
                    "cached code has length {}, expected {}",
                    code.n(),
                    args.n
                )));
            }
            match linear_dimension(&code) {
                Some(k) => Some(k),
                None => {
                    eprintln!(
                        "warning: cached code is not linear; ignoring it for the estimate"
                    );
                    None
                }
            }
        }
        None => None,
    };
    let est = estimate(args.n, cached_dimension)?;
    println!("length n        : {}", est.n);
    if let Some(d) = args.d {
        println!("distance d      : {d}");
    }
    match est.worst_case_ops {
        Some(v) => println!("worst-case bound: n * 4^n = {v} bit operations (estimate)"),
        None => println!(
            "worst-case bound: n * 4^n ~ {:.3e} bit operations (estimate)",
            est.worst_case_ops_approx
        ),
    }
    match (est.refined_ops, est.cached_dimension) {
        (Some(v), Some(k)) => {
            println!("refined estimate: 2^n * 2^k = {v} comparisons (estimate, cached k={k})");
        }
        _ => println!("refined estimate: unavailable (no cached code given)"),
    }
    Ok(())
}

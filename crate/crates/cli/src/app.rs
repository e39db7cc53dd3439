//! Argument parsing and the subcommands.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use degstir::identities::{self, Context, Grid, Mutation};
use degstir::probrv::{degenerate_cumulants, degenerate_moments, prob_poly_seq, prob_stirling1, prob_stirling2, PolyFamily};
use degstir::{Distribution, Rational, TriangleFamily};

use crate::output::{render, write_out, Cell, Format, LambdaMode, MomentRow, MomentsDoc, SequenceDoc, SequenceRow, TriangleDoc};

/// Exact degenerate and probabilistic degenerate Stirling numbers over Q[λ].
#[derive(Debug, Parser)]
#[command(name = "degstir", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a triangle T(n,k) for rows 0..=n.
    Triangle(TriangleArgs),
    /// Emit degenerate moments and cumulants for 1..=n.
    Moments(MomentsArgs),
    /// Emit probabilistic degenerate Bernoulli or Euler polynomials at x-points.
    Sequence(SequenceArgs),
    /// Run identity checks and emit the report.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// `sym` for coefficient lists in λ, or a rational to evaluate at.
    #[arg(long, default_value = "sym", allow_hyphen_values = true)]
    pub lambda: LambdaMode,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TriangleArgs {
    /// s1, s2, s1-degen, s2-degen, lah, s1-degen-unsigned, s1-prob or s2-prob.
    #[arg(long)]
    pub family: Family,
    /// Random variable, required for s1-prob and s2-prob.
    #[arg(long)]
    pub rv: Option<Distribution>,
    #[arg(long, default_value_t = 12, value_parser = parse_order)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MomentsArgs {
    #[arg(long)]
    pub rv: Distribution,
    #[arg(long, default_value_t = 12, value_parser = parse_order)]
    pub n: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SequenceFamily {
    Bernoulli,
    Euler,
}

#[derive(Debug, Args)]
pub struct SequenceArgs {
    #[arg(long, value_enum)]
    pub family: SequenceFamily,
    #[arg(long)]
    pub rv: Distribution,
    #[arg(long, default_value_t = 12, value_parser = parse_order)]
    pub n: usize,
    /// Comma-separated rationals.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub x_points: XPoints,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// A check id, an alias such as Cor2.3, or `all`.
    #[arg(long, default_value = "all")]
    pub id: String,
    /// Restrict the providers; repeat for several.
    #[arg(long)]
    pub rv: Vec<Distribution>,
    /// Largest index checked (default 10).
    #[arg(long, value_parser = parse_order)]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub x_points: Option<XPoints>,
    /// Add 1 to one entry first, as `family:n,k`; the run should then fail.
    #[arg(long)]
    pub mutate: Option<Mutation>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A base family or one of the two probabilistic ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Base(TriangleFamily),
    ProbStirling1,
    ProbStirling2,
}

impl FromStr for Family {
    type Err = degstir::Error;

    fn from_str(s: &str) -> degstir::Result<Self> {
        match s {
            "s1-prob" => Ok(Family::ProbStirling1),
            "s2-prob" => Ok(Family::ProbStirling2),
            other => other.parse().map(Family::Base),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Base(family) => family.fmt(f),
            Family::ProbStirling1 => f.write_str("s1-prob"),
            Family::ProbStirling2 => f.write_str("s2-prob"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoints(pub Vec<Rational>);

impl FromStr for XPoints {
    type Err = degstir::Error;

    fn from_str(s: &str) -> degstir::Result<Self> {
        s.split(',').map(|p| p.trim().parse()).collect::<degstir::Result<_>>().map(XPoints)
    }
}

fn parse_order(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        Ok(_) => Err("must be at least 1".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// Errors after argument parsing. Usage errors exit with 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Runtime(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "error: {msg}"),
            CliError::Runtime(e) => write!(f, "error: {e:#}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Runtime(_) => ExitCode::FAILURE,
        }
    }
}

fn usage(e: impl fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Triangle(args) => triangle(args),
        Command::Moments(args) => moments(args),
        Command::Sequence(args) => sequence(args),
        Command::Check(args) => check(args),
    }
}

pub fn triangle_doc(family: Family, rv: Option<&Distribution>, n: usize, lambda: &LambdaMode) -> Result<TriangleDoc, CliError> {
    let need_rv = || rv.ok_or_else(|| usage(format!("family {family} requires --rv")));
    let t = match family {
        Family::Base(f) => f.build(n),
        Family::ProbStirling1 => prob_stirling1(need_rv()?, n).triangle,
        Family::ProbStirling2 => prob_stirling2(need_rv()?, n).triangle,
    };
    let rv = match family {
        Family::Base(_) => None,
        _ => rv.map(ToString::to_string),
    };
    Ok(TriangleDoc {
        family: family.to_string(),
        rv,
        n,
        lambda: lambda.label(),
        rows: t.rows().iter().map(|row| row.iter().map(|p| lambda.cell(p)).collect()).collect(),
    })
}

pub fn moments_doc(rv: &Distribution, n: usize, lambda: &LambdaMode) -> MomentsDoc {
    let moments = degenerate_moments(rv, n);
    let cumulants = degenerate_cumulants(rv, n).values;
    MomentsDoc {
        rv: rv.to_string(),
        n,
        lambda: lambda.label(),
        rows: (1..=n)
            .map(|i| MomentRow {
                n: i,
                moment: lambda.cell(&moments[i]),
                cumulant: lambda.cell(&cumulants[i]),
            })
            .collect(),
    }
}

pub fn sequence_doc(
    family: SequenceFamily,
    rv: &Distribution,
    n: usize,
    x_points: &[Rational],
    lambda: &LambdaMode,
) -> Result<SequenceDoc, CliError> {
    let (poly, name) = match family {
        SequenceFamily::Bernoulli => (PolyFamily::Bernoulli, "bernoulli"),
        SequenceFamily::Euler => (PolyFamily::Euler, "euler"),
    };
    let seq = prob_poly_seq(rv, poly, x_points, n).map_err(usage)?;
    Ok(SequenceDoc {
        family: name.to_string(),
        rv: rv.to_string(),
        n,
        lambda: lambda.label(),
        rows: seq
            .x_points
            .iter()
            .zip(&seq.values)
            .map(|(x, values)| SequenceRow {
                x: x.to_string(),
                values: values.iter().map(|p| lambda.cell(p)).collect::<Vec<Cell>>(),
            })
            .collect(),
    })
}

fn triangle(args: TriangleArgs) -> Result<ExitCode, CliError> {
    let doc = triangle_doc(args.family, args.rv.as_ref(), args.n, &args.output.lambda)?;
    emit(&doc, &args.output)
}

fn moments(args: MomentsArgs) -> Result<ExitCode, CliError> {
    emit(&moments_doc(&args.rv, args.n, &args.output.lambda), &args.output)
}

fn sequence(args: SequenceArgs) -> Result<ExitCode, CliError> {
    let doc = sequence_doc(args.family, &args.rv, args.n, &args.x_points.0, &args.output.lambda)?;
    emit(&doc, &args.output)
}

fn emit<D: crate::output::Document>(doc: &D, output: &OutputArgs) -> Result<ExitCode, CliError> {
    write_out(&render(doc, output.format)?, output.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

pub fn check_grid(args: &CheckArgs) -> Grid {
    let mut grid = Grid::default();
    if let Some(n) = args.n {
        grid.n_max = n;
    }
    if !args.rv.is_empty() {
        grid.providers = args.rv.clone();
    }
    if let Some(x) = &args.x_points {
        grid.x_points = x.0.clone();
    }
    grid
}

fn check(args: CheckArgs) -> Result<ExitCode, CliError> {
    let specs = identities::resolve(&args.id).map_err(usage)?;
    let ctx = Context::with_mutation(check_grid(&args), args.mutate).map_err(usage)?;
    let report = identities::run_checks(&ctx, &args.id, &specs);
    write_out(&render(&report, args.format)?, args.out.as_deref())?;
    let t = report.totals;
    eprintln!(
        "{} checks, {} passed, {} failed, {} skipped comparisons in {:.2?}",
        report.checks.len(),
        t.passed,
        t.failed,
        t.skipped,
        report.wall_time
    );
    Ok(if report.has_failures() { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

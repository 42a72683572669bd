//! `tanseq` command-line front end.

mod bench;
mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tanseq::formulas::{self, Tables};
use tanseq::{DerivativeOracle, Error, FunctionTag, MethodTag, TriangleKind, ValidationStatus};

#[derive(Parser)]
#[command(
    name = "tanseq",
    version,
    about = "Higher-order tangent, secant and arctangent numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=nmax of a triangle.
    Table(TableArgs),
    /// Print one entry computed by a chosen method.
    Value(ValueArgs),
    /// Run every method against the triangles, the series oracle and the identities.
    Crosscheck(CrosscheckArgs),
    /// Print or evaluate the nth derivative polynomial of a function.
    Derivative(DerivativeArgs),
    /// Time the methods on the full parity-valid triangle.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Csv,
    Json,
    Bfile,
}

#[derive(Args)]
struct TableArgs {
    /// Triangle kind: T, S or Tstar.
    #[arg(value_name = "KIND", value_parser = parse_kind)]
    kind_pos: Option<TriangleKind>,
    #[arg(long, value_parser = parse_kind)]
    kind: Option<TriangleKind>,
    #[arg(long, default_value_t = 9)]
    nmax: usize,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// First index of the flattened b-file sequence.
    #[arg(long, default_value_t = 0)]
    offset: i64,
}

#[derive(Args)]
struct ValueArgs {
    n: usize,
    k: usize,
    #[arg(long, value_parser = parse_kind, default_value = "T")]
    kind: TriangleKind,
    #[arg(long, value_parser = parse_method, default_value = "recurrence")]
    method: MethodTag,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    #[arg(long, default_value_t = 0)]
    offset: i64,
}

#[derive(Args)]
struct CrosscheckArgs {
    #[arg(long, default_value_t = 9)]
    nmax: usize,
    /// Methods to check (repeatable or comma separated); all when omitted.
    #[arg(long, value_parser = parse_method, value_delimiter = ',')]
    method: Vec<MethodTag>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Args)]
struct DerivativeArgs {
    #[arg(value_parser = parse_function)]
    func: FunctionTag,
    n: usize,
    /// Evaluate at this point instead of printing the polynomial.
    #[arg(long, allow_negative_numbers = true)]
    at: Option<f64>,
    /// Compare the value against the series oracle (requires --at).
    #[arg(long, requires = "at")]
    validate: bool,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 30)]
    nmax: usize,
    #[arg(long, value_parser = parse_method, value_delimiter = ',')]
    method: Vec<MethodTag>,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

fn parse_kind(s: &str) -> Result<TriangleKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> Result<MethodTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_function(s: &str) -> Result<FunctionTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failed command: the message for standard error and the exit code.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unsupported { .. } | Error::InvalidArgument(_) => Failure::usage(e.to_string()),
            _ => Failure::mismatch(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::mismatch(format!("write failed: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Table(args) => cmd_table(args, &mut out),
        Command::Value(args) => cmd_value(args, &mut out),
        Command::Crosscheck(args) => cmd_crosscheck(args, &mut out),
        Command::Derivative(args) => cmd_derivative(args, &mut out),
        Command::Bench(args) => cmd_bench(args, &mut out),
    };
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn cmd_table(args: TableArgs, out: &mut impl Write) -> CmdResult {
    let kind = match (args.kind_pos, args.kind) {
        (Some(a), Some(b)) if a != b => {
            return Err(Failure::usage("conflicting triangle kinds"));
        }
        (a, b) => a.or(b).unwrap_or(TriangleKind::TangentHigher),
    };
    let tri = tanseq::Triangle::new(kind, args.nmax);
    render::table(out, kind, tri.rows(), args.format, args.offset)?;
    Ok(())
}

fn cmd_value(args: ValueArgs, out: &mut impl Write) -> CmdResult {
    if !args.method.computes(args.kind) {
        return Err(Failure::usage(format!(
            "method {} does not compute {} numbers",
            args.method, args.kind
        )));
    }
    let tables = Tables::new(args.n.max(1));
    let v = formulas::value(args.kind, args.method, &tables, args.n, args.k)?;
    render::value(
        out,
        args.kind,
        args.method,
        args.n,
        args.k,
        &v,
        args.format,
        args.offset,
    )?;
    Ok(())
}

fn cmd_crosscheck(args: CrosscheckArgs, out: &mut impl Write) -> CmdResult {
    if args.nmax < 1 {
        return Err(Failure::usage("--nmax must be at least 1"));
    }
    if args.format == Format::Bfile {
        return Err(Failure::usage("crosscheck has no bfile output"));
    }
    let methods = if args.method.is_empty() {
        MethodTag::ALL.to_vec()
    } else {
        args.method
    };
    let report = tanseq::crosscheck(args.nmax, &methods);
    render::crosscheck(out, &report, args.format)?;
    match report.first_mismatch() {
        None => Ok(()),
        Some(m) => Err(Failure::mismatch(format!(
            "{} mismatch at ({}, {}): expected {}, got {}",
            m.check, m.n, m.k, m.expected, m.got
        ))),
    }
}

fn cmd_derivative(args: DerivativeArgs, out: &mut impl Write) -> CmdResult {
    if args.format == Format::Bfile {
        return Err(Failure::usage("derivative has no bfile output"));
    }
    let poly = tanseq::derivative_poly(args.func, args.n);
    let Some(x) = args.at else {
        render::polynomial(out, &poly, args.format)?;
        return Ok(());
    };
    let value = poly.eval(x)?;
    if !args.validate {
        render::derivative_value(out, &poly, x, value, None, args.format)?;
        return Ok(());
    }
    let report = DerivativeOracle::new().validate(args.func, args.n, x, args.tol)?;
    render::derivative_value(out, &poly, x, value, Some(&report), args.format)?;
    match report.status {
        ValidationStatus::Pass => Ok(()),
        ValidationStatus::Fail => Err(Failure::mismatch(format!(
            "relative error {:e} exceeds tolerance {:e}",
            report.relative_error, report.tol
        ))),
        ValidationStatus::Inconclusive => Err(Failure::mismatch(format!(
            "series oracle did not converge at x = {x} (order {})",
            report.order
        ))),
    }
}

fn cmd_bench(args: BenchArgs, out: &mut impl Write) -> CmdResult {
    if args.nmax < 1 || args.reps < 1 {
        return Err(Failure::usage("--nmax and --reps must be at least 1"));
    }
    if matches!(args.format, Format::Bfile) {
        return Err(Failure::usage("bench has no bfile output"));
    }
    let methods = if args.method.is_empty() {
        bench::DEFAULT_METHODS.to_vec()
    } else {
        args.method
    };
    let result = bench::run(args.nmax, &methods, args.reps)?;
    render::bench(out, &result, args.format)?;
    Ok(())
}

//! Command-line front end.
//!
//! Exit codes: 0 on success (including an all-pass verification), 1 when a
//! verification suite reports failures, 2 on usage errors.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::exact::{parse_rational, JsonValue, Rational, XPoly};
use crate::kernel::{KernelParams, KernelTable};
use crate::polyfam::{
    fib_poly, fib_poly_closed, lucas_poly, lucas_poly_closed, p_poly, pretty_bivariate, q_poly,
};
use crate::sums::{a_value, SumSpec, SumValue, ZMode};
use crate::verify::{lattice_path_count, run_suite, GridOverrides, Suite, VerificationReport};

/// Identity string carried by verification reports and `--version`.
pub const IDENTITY: &str =
    "binomial-sum recurrences: kernel s(n,k,a,b), sums a(n,m,k,z), families p_m q_m F_n L_n";

const VERSION: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    " (binomial-sum recurrences: kernel s(n,k,a,b), sums a(n,m,k,z), families p_m q_m F_n L_n)"
);

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "binsum", version = VERSION, about = "Exact binomial sums and recurrence verification")]
struct Cli {
    /// Output format; csv is only valid for `table`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rows 0..=N of the kernel table s(n, k, a, b).
    Table(TableArgs),
    /// The sum a(n, m, k, z).
    Sum(SumArgs),
    /// One member of a polynomial family.
    Poly(PolyArgs),
    /// Run verification suites; exits 1 if any case fails.
    Verify(VerifyArgs),
    /// Count lattice paths in the strip -m-1 < y < m.
    Paths(PathsArgs),
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    a: Rational,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    b: Rational,
    /// Last row to emit.
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Args)]
struct SumArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    m: u64,
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    /// Nonzero rational ("p/q" or integer) or "symbolic".
    #[arg(long, value_parser = z_arg, allow_hyphen_values = true)]
    z: ZMode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    P,
    Q,
    Fib,
    Lucas,
    FibClosed,
    LucasClosed,
}

#[derive(Debug, Args)]
struct PolyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    index: usize,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    s: Option<Rational>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = suite_arg)]
    suite: Suite,
    #[arg(long)]
    m_max: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    k_max: Option<i64>,
    #[arg(long)]
    k_margin: Option<i64>,
}

#[derive(Debug, Args)]
struct PathsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    m: u64,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn z_arg(s: &str) -> Result<ZMode, String> {
    if s == "symbolic" {
        return Ok(ZMode::Symbolic);
    }
    let z = rational_arg(s)?;
    if num_traits::Zero::is_zero(&z) {
        return Err("z must be nonzero".to_string());
    }
    Ok(ZMode::Numeric(z))
}

fn suite_arg(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| {
        format!("{e}; expected one of lemma1, corollary4, lemma2, thm1, thm2, thm3, paths, all")
    })
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams. `argv[0]` is the program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let mut text = e.render().to_string();
                    if !text.contains("Usage:") {
                        text = format!("{}\n{}\n", text.trim_end(), usage_for(&argv));
                    }
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
            return code;
        }
    };
    if let Err(e) = validate(&cli) {
        let _ = write!(err, "{}", e.render());
        return EXIT_USAGE;
    }
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Usage synopsis of the subcommand named in `argv`, or of the whole tool.
fn usage_for(argv: &[OsString]) -> String {
    let mut cmd = Cli::command();
    cmd.build();
    let name = argv
        .iter()
        .skip(1)
        .filter_map(|a| a.to_str())
        .find(|a| cmd.find_subcommand(a).is_some())
        .map(str::to_string);
    match name.and_then(|n| cmd.find_subcommand_mut(&n)) {
        Some(sub) => sub.render_usage().to_string(),
        None => cmd.render_usage().to_string(),
    }
}

fn usage_error(subcommand: &str, msg: String) -> clap::Error {
    let mut cmd = Cli::command();
    cmd.build();
    let sub = cmd
        .find_subcommand_mut(subcommand)
        .expect("subcommand exists");
    sub.error(ErrorKind::ArgumentConflict, msg)
}

fn validate(cli: &Cli) -> Result<(), clap::Error> {
    let name = match &cli.command {
        Command::Table(_) => "table",
        Command::Sum(_) => "sum",
        Command::Poly(_) => "poly",
        Command::Verify(_) => "verify",
        Command::Paths(_) => "paths",
    };
    if cli.format == Some(Format::Csv) && name != "table" {
        return Err(usage_error(
            name,
            "'--format csv' is only supported by 'table'".into(),
        ));
    }
    if let Command::Poly(p) = &cli.command {
        let (needs_ab, needs_s, closed) = match p.family {
            FamilyArg::P | FamilyArg::Q => (true, false, false),
            FamilyArg::Fib | FamilyArg::Lucas => (false, true, false),
            FamilyArg::FibClosed | FamilyArg::LucasClosed => (false, false, true),
        };
        let family = p.family.to_possible_value().expect("not skipped");
        let family = family.get_name();
        for (flag, given, needed) in [
            ("--a", p.a.is_some(), needs_ab),
            ("--b", p.b.is_some(), needs_ab),
            ("--s", p.s.is_some(), needs_s),
        ] {
            if given && !needed {
                return Err(usage_error(
                    "poly",
                    format!("'{flag}' does not apply to family '{family}'"),
                ));
            }
            if needed && !given {
                return Err(usage_error(
                    "poly",
                    format!("family '{family}' requires '{flag}'"),
                ));
            }
        }
        if closed && p.index == 0 {
            return Err(usage_error(
                "poly",
                format!("'--index' must be at least 1 for family '{family}'"),
            ));
        }
    }
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> io::Result<i32> {
    match &cli.command {
        Command::Table(args) => table(args, cli.format.unwrap_or(Format::Csv), out),
        Command::Sum(args) => sum(args, cli.format, out),
        Command::Poly(args) => poly(args, cli.format, out),
        Command::Verify(args) => verify(args, cli.format.unwrap_or(Format::Json), out),
        Command::Paths(args) => paths(args, cli.format, out),
    }
}

fn table(args: &TableArgs, format: Format, out: &mut dyn Write) -> io::Result<i32> {
    let table = KernelTable::build(KernelParams::new(args.a.clone(), args.b.clone()), args.n);
    let n = args.n as i64;
    match format {
        Format::Csv => {
            let header: Vec<String> = std::iter::once("n".to_string())
                .chain((-n..=n).map(|k| k.to_string()))
                .collect();
            writeln!(out, "{}", header.join(","))?;
            for row in table.rows() {
                let cells: Vec<String> = std::iter::once(row.n().to_string())
                    .chain((-n..=n).map(|k| row.get(k).to_string()))
                    .collect();
                writeln!(out, "{}", cells.join(","))?;
            }
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .rows()
                .iter()
                .map(|row| {
                    Value::Array(
                        row.entries()
                            .map(|(k, v)| json!([k, v.to_json()]))
                            .collect(),
                    )
                })
                .collect();
            writeln!(out, "{}", Value::Array(rows))?;
        }
        Format::Pretty => {
            let cells: Vec<Vec<String>> = table
                .rows()
                .iter()
                .map(|row| (-n..=n).map(|k| row.get(k).to_string()).collect())
                .collect();
            let width = cells
                .iter()
                .flatten()
                .map(String::len)
                .chain((-n..=n).map(|k| k.to_string().len()))
                .max()
                .unwrap_or(1);
            let label = format!("s({}, k)", args.n).len();
            write!(out, "{:>label$}", "k")?;
            for k in -n..=n {
                write!(out, " {k:>width$}")?;
            }
            writeln!(out)?;
            for (i, row) in cells.iter().enumerate() {
                write!(out, "{:>label$}", format!("s({i}, k)"))?;
                for c in row {
                    write!(out, " {c:>width$}")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn sum(args: &SumArgs, format: Option<Format>, out: &mut dyn Write) -> io::Result<i32> {
    let spec = SumSpec::new(args.n, args.m, args.k, args.z.clone())
        .expect("flags validated by the parser");
    let value = a_value(&spec);
    match (format, &value) {
        (Some(Format::Pretty), v) => writeln!(out, "{v}")?,
        (None, SumValue::Numeric(r)) => writeln!(out, "{r}")?,
        (_, SumValue::Numeric(r)) => writeln!(out, "{}", r.to_json())?,
        (_, SumValue::Symbolic(p)) => writeln!(out, "{}", p.to_json())?,
    }
    Ok(EXIT_OK)
}

fn poly(args: &PolyArgs, format: Option<Format>, out: &mut dyn Write) -> io::Result<i32> {
    let arg = |r: &Option<Rational>| r.clone().expect("validated");
    let (pretty, json) = match args.family {
        FamilyArg::FibClosed | FamilyArg::LucasClosed => {
            let p = if args.family == FamilyArg::FibClosed {
                fib_poly_closed(args.index)
            } else {
                lucas_poly_closed(args.index)
            };
            (pretty_bivariate(&p), p.to_json())
        }
        family => {
            let p: XPoly<Rational> = match family {
                FamilyArg::P => p_poly(args.index, &arg(&args.a), &arg(&args.b)),
                FamilyArg::Q => q_poly(args.index, &arg(&args.a), &arg(&args.b)),
                FamilyArg::Fib => fib_poly(args.index, &arg(&args.s)),
                _ => lucas_poly(args.index, &arg(&args.s)),
            };
            (p.to_string(), p.to_json())
        }
    };
    match format {
        Some(Format::Pretty) => writeln!(out, "{pretty}")?,
        Some(Format::Json) => writeln!(out, "{json}")?,
        _ => {
            writeln!(out, "{pretty}")?;
            writeln!(out, "{json}")?;
        }
    }
    Ok(EXIT_OK)
}

/// JSON document emitted by `verify`.
pub fn report_document(reports: &[VerificationReport]) -> Value {
    json!({
        "identity": IDENTITY,
        "version": env!("CARGO_PKG_VERSION"),
        "passed": reports.iter().all(|r| r.passed),
        "reports": reports,
    })
}

fn verify(args: &VerifyArgs, format: Format, out: &mut dyn Write) -> io::Result<i32> {
    let overrides = GridOverrides {
        m_max: args.m_max,
        n_max: args.n_max,
        k_max: args.k_max,
        k_margin: args.k_margin,
    };
    let reports = run_suite(args.suite, &overrides);
    match format {
        Format::Pretty => {
            for r in &reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{status} {:<12} cases={:<7} failures={} [{}]",
                    r.suite, r.cases, r.failure_count, r.grid
                )?;
                for f in &r.failures {
                    writeln!(
                        out,
                        "    {}: expected {}, got {}",
                        f.params, f.expected, f.actual
                    )?;
                }
            }
        }
        _ => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report_document(&reports))?
        )?,
    }
    Ok(if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAILURES
    })
}

fn paths(args: &PathsArgs, format: Option<Format>, out: &mut dyn Write) -> io::Result<i32> {
    let count = lattice_path_count(args.n, args.m as usize);
    match format {
        Some(Format::Json) => writeln!(
            out,
            "{}",
            json!({ "n": args.n, "m": args.m, "count": count.to_string() })
        )?,
        _ => writeln!(out, "{count}")?,
    }
    Ok(EXIT_OK)
}

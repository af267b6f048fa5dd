//! Command-line front end: compute exact family values, expand generating
//! functions, run the identity suite, and emit approximation tables.
//!
//! Exit codes: 0 on success, 1 when a verification run finds a failing
//! check, 2 on usage or domain errors. Every error is reported on stderr as
//! one line with a machine-parsable `error:<kind>:` prefix.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ylab::approx;
use ylab::error::Error;
use ylab::exact::Rational;
use ylab::families;
use ylab::identities::{self, CheckOptions, IdentityReport, ParameterGrid, SignVariant};
use ylab::series;

#[derive(Parser)]
#[command(
    name = "ylab",
    version,
    about = "Exact computation and verification of the Y number family and its relatives"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a single exact value.
    Compute {
        #[command(subcommand)]
        target: ComputeTarget,
    },
    /// Expand a generating function; entries are the family values n!*coeff.
    Series {
        #[command(subcommand)]
        target: SeriesTarget,
    },
    /// Run identity checks over a parameter grid.
    Verify(VerifyArgs),
    /// Floating-point approximations with exact companions.
    Approx {
        #[command(subcommand)]
        target: ApproxTarget,
    },
    /// Deterministic value tables.
    Table {
        #[command(subcommand)]
        target: TableTarget,
    },
}

#[derive(Args)]
struct RawFlag {
    /// Print the bare value instead of JSON.
    #[arg(long)]
    raw: bool,
}

#[derive(Subcommand)]
enum ComputeTarget {
    /// Y_n^(k)(lambda)
    Y {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        raw: RawFlag,
    },
    /// Y_n^(k)(x; lambda)
    Ypoly {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        raw: RawFlag,
    },
    /// Apostol-Bernoulli number B_n^(k)(lambda)
    Ab {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        raw: RawFlag,
    },
    /// Apostol-Euler number E_n^(k)(lambda)
    Ae {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        raw: RawFlag,
    },
    /// Signed Stirling number of the first kind S_1(n, m)
    S1 {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        raw: RawFlag,
    },
    /// Catalan number C_n
    Catalan {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        raw: RawFlag,
    },
    /// V_n(lambda) = Y_n^(n+1)(lambda)/(n+1)!
    V {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        raw: RawFlag,
    },
}

#[derive(Args)]
struct OrderFlag {
    /// Truncation order (number of entries). Defaults to YLAB_DEFAULT_ORDER
    /// or 16.
    #[arg(long, env = "YLAB_DEFAULT_ORDER", default_value_t = 16)]
    order: usize,
}

#[derive(Subcommand)]
enum SeriesTarget {
    /// [Y_0^(k), Y_1^(k), ...] from (2/(lambda(1+lambda t)-1))^k
    Y {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        order: OrderFlag,
    },
    /// [Y_n^(k)(x; lambda)] from the product with (1+lambda t)^x
    Ypoly {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        order: OrderFlag,
    },
    /// [S_1(n, k)] from [log(1+t)]^k / k!
    S1 {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        order: OrderFlag,
    },
    /// [B_n^(k)(lambda)] from (t/(lambda e^t - 1))^k
    Ab {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        order: OrderFlag,
    },
    /// [E_n^(k)(lambda)] from (2/(lambda e^t + 1))^k
    Ae {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        order: OrderFlag,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    /// (-1)^(k+1), the theorem sign.
    Theorem,
    /// (-1)^k, the proof sign.
    Proof,
    /// Run both and report which one holds.
    Both,
}

#[derive(Args)]
struct VerifyArgs {
    /// "all" or one check id from the catalog.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 20)]
    n_max: u32,
    #[arg(long, default_value_t = 5)]
    k_max: u32,
    /// Comma-separated exact rationals; lambda = 1 is dropped with a notice.
    #[arg(
        long,
        allow_hyphen_values = true,
        default_value = "-2,-1,-1/2,1/3,2,5/2,3"
    )]
    lambdas: String,
    /// Comma-separated x values for the polynomial checks.
    #[arg(long, allow_hyphen_values = true, default_value = "0,1,-1,1/2")]
    xs: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Sign convention for the s1-apostol-bernoulli check.
    #[arg(long, value_enum, default_value_t = VariantArg::Theorem)]
    variant: VariantArg,
    /// Force the sequential fallback instead of the parallel runner.
    #[arg(long)]
    sequential: bool,
}

#[derive(Subcommand)]
enum ApproxTarget {
    /// Approximation of V_n(lambda) by the factorial asymptotics.
    Vn {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        raw: RawFlag,
    },
    /// Exact-vs-approximate comparison table over a list of n.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        n_list: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

#[derive(Subcommand)]
enum TableTarget {
    /// Y_n^(k) for n = 0..=n-max at fixed k, symbolic or evaluated.
    Y {
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        k: u32,
        /// Emit rational functions of lambda instead of values.
        #[arg(long, conflicts_with = "lambda")]
        symbolic: bool,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// The exact-vs-approximate V table (same shape as `approx table`).
    ApproxV {
        #[arg(long, allow_hyphen_values = true)]
        n_list: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                return ExitCode::SUCCESS;
            }
            let message = err.to_string();
            let first_line = message.lines().next().unwrap_or("invalid arguments");
            eprintln!("error:usage:{first_line}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error:{}:{}", err.kind(), err);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute { target } => run_compute(target),
        Command::Series { target } => run_series(target),
        Command::Verify(args) => run_verify(args),
        Command::Approx { target } => run_approx(target),
        Command::Table { target } => run_table(target),
    }
}

fn parse_rational(s: &str) -> Result<Rational, Error> {
    Rational::from_str(s.trim())
}

/// Y-family commands reject the pole at the boundary.
fn parse_lambda_no_pole(s: &str) -> Result<Rational, Error> {
    let lambda = parse_rational(s)?;
    if lambda.is_one() {
        return Err(Error::Pole { at: lambda });
    }
    Ok(lambda)
}

fn parse_rational_list(s: &str) -> Result<Vec<Rational>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(parse_rational)
        .collect()
}

fn parse_n_list(s: &str) -> Result<Vec<u32>, Error> {
    s.split(',')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(|part| {
            part.parse::<u32>()
                .map_err(|_| Error::Domain(format!("invalid index {part:?} in n-list")))
        })
        .collect()
}

fn emit_value(value: impl ToString, raw: bool) {
    if raw {
        println!("{}", value.to_string());
    } else {
        println!("{}", json!({ "value": value.to_string() }));
    }
}

fn run_compute(target: ComputeTarget) -> Result<ExitCode, Error> {
    match target {
        ComputeTarget::Y { n, k, lambda, raw } => {
            let lambda = parse_lambda_no_pole(&lambda)?;
            emit_value(families::y_number(n, k, &lambda)?, raw.raw);
        }
        ComputeTarget::Ypoly {
            n,
            k,
            x,
            lambda,
            raw,
        } => {
            let x = parse_rational(&x)?;
            let lambda = parse_lambda_no_pole(&lambda)?;
            emit_value(families::y_polynomial(n, k, &x, &lambda)?, raw.raw);
        }
        ComputeTarget::Ab { n, k, lambda, raw } => {
            let lambda = parse_rational(&lambda)?;
            emit_value(families::apostol_bernoulli(n, k, &lambda), raw.raw);
        }
        ComputeTarget::Ae { n, k, lambda, raw } => {
            let lambda = parse_rational(&lambda)?;
            emit_value(families::apostol_euler(n, k, &lambda)?, raw.raw);
        }
        ComputeTarget::S1 { n, m, raw } => emit_value(families::stirling1(n, m), raw.raw),
        ComputeTarget::Catalan { n, raw } => emit_value(families::catalan(n), raw.raw),
        ComputeTarget::V { n, lambda, raw } => {
            let lambda = parse_lambda_no_pole(&lambda)?;
            emit_value(families::v_number(n, &lambda)?, raw.raw);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_rational_list(values: &[Rational]) {
    let strings: Vec<String> = values.iter().map(Rational::to_string).collect();
    println!("{}", serde_json::to_string(&strings).expect("string array"));
}

fn run_series(target: SeriesTarget) -> Result<ExitCode, Error> {
    match target {
        SeriesTarget::Y { k, lambda, order } => {
            let lambda = parse_lambda_no_pole(&lambda)?;
            emit_rational_list(&series::expand_y_gf(k, &lambda, order.order)?);
        }
        SeriesTarget::Ypoly {
            k,
            x,
            lambda,
            order,
        } => {
            let x = parse_rational(&x)?;
            let lambda = parse_lambda_no_pole(&lambda)?;
            emit_rational_list(&series::expand_y_poly_gf(k, &x, &lambda, order.order)?);
        }
        SeriesTarget::S1 { k, order } => {
            emit_rational_list(&series::expand_stirling1_gf(k, order.order));
        }
        SeriesTarget::Ab { k, lambda, order } => {
            let lambda = parse_rational(&lambda)?;
            emit_rational_list(&series::expand_apostol_gf(
                series::ApostolKind::Bernoulli,
                k,
                &lambda,
                order.order,
            )?);
        }
        SeriesTarget::Ae { k, lambda, order } => {
            let lambda = parse_rational(&lambda)?;
            emit_rational_list(&series::expand_apostol_gf(
                series::ApostolKind::Euler,
                k,
                &lambda,
                order.order,
            )?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn report_csv_line(report: &IdentityReport) -> String {
    let counterexample = report
        .first_counterexample
        .as_ref()
        .map(|c| format!("{}; lhs={}; rhs={}", c.assignment, c.lhs, c.rhs))
        .unwrap_or_default();
    [
        csv_field(&report.check_id),
        report.points_tested.to_string(),
        report.passed.to_string(),
        csv_field(&counterexample),
        csv_field(&report.notes.join("; ")),
        format!("{}", report.elapsed_ms),
    ]
    .join(",")
}

fn emit_reports(reports: &[IdentityReport], format: OutputFormat) {
    match format {
        OutputFormat::Json => {
            println!("{}", serde_json::to_string_pretty(reports).expect("reports"));
        }
        OutputFormat::Csv => {
            println!("check_id,points_tested,passed,first_counterexample,notes,elapsed_ms");
            for report in reports {
                println!("{}", report_csv_line(report));
            }
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let mut lambdas = parse_rational_list(&args.lambdas)?;
    let xs = parse_rational_list(&args.xs)?;
    // Single checks get the same shrink-with-notice treatment the suite
    // applies, so the default lambda list stays usable for every id.
    if args.suite != "all" {
        let def = identities::find_check(&args.suite)
            .ok_or_else(|| Error::UnknownCheck(args.suite.clone()))?;
        let minus_one = Rational::from(-1);
        if def.excludes_minus_one && lambdas.contains(&minus_one) {
            lambdas.retain(|l| l != &minus_one);
            eprintln!("note: lambda = -1 dropped for this check (Apostol-Euler pole)");
        }
    }
    let (grid, notices) =
        ParameterGrid::with_sanitized_lambdas((0, args.n_max), (0, args.k_max), lambdas, xs)?;
    for notice in &notices {
        eprintln!("note: {notice}");
    }
    if args.suite == "s1-apostol-bernoulli" && args.variant == VariantArg::Both {
        let resolution = identities::resolve_sign_variant(&grid)?;
        println!(
            "{}",
            serde_json::to_string_pretty(&resolution).expect("resolution")
        );
        return Ok(if resolution.holds.is_some() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    let options = CheckOptions {
        sign_variant: match args.variant {
            VariantArg::Proof => SignVariant::Proof,
            _ => SignVariant::Theorem,
        },
    };
    let reports: Vec<IdentityReport> = if args.suite == "all" {
        if args.sequential {
            identities::run_suite_seq_with_options(&grid, &options)
        } else {
            identities::run_suite_with_options(&grid, &options)
        }
    } else if args.sequential {
        vec![identities::run_check_seq_with_options(
            &args.suite,
            &grid,
            &options,
        )?]
    } else {
        vec![identities::run_check_with_options(
            &args.suite,
            &grid,
            &options,
        )?]
    };
    emit_reports(&reports, args.format);
    Ok(if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn emit_approx_table(records: &[approx::ApproxRecord], format: OutputFormat) {
    match format {
        OutputFormat::Json => {
            println!("{}", serde_json::to_string_pretty(records).expect("records"));
        }
        OutputFormat::Csv => {
            println!("n,lambda,exact,approx,rel_error");
            for rec in records {
                println!(
                    "{},{},{},{},{}",
                    rec.n, rec.lambda, rec.exact, rec.approx, rec.rel_error
                );
            }
        }
    }
}

fn run_approx(target: ApproxTarget) -> Result<ExitCode, Error> {
    match target {
        ApproxTarget::Vn { n, lambda, raw } => {
            let lambda = parse_lambda_no_pole(&lambda)?;
            let value = approx::v_approx(n, &lambda)?;
            if raw.raw {
                println!("{value}");
            } else {
                println!("{}", json!({ "value": value }));
            }
        }
        ApproxTarget::Table {
            n_list,
            lambda,
            format,
        } => {
            let lambda = parse_lambda_no_pole(&lambda)?;
            let records = approx::v_approx_table(&parse_n_list(&n_list)?, &lambda)?;
            emit_approx_table(&records, format);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_table(target: TableTarget) -> Result<ExitCode, Error> {
    match target {
        TableTarget::Y {
            n_max,
            k,
            symbolic,
            lambda,
            format,
        } => {
            let rows: Vec<(u32, u32, String)> = if symbolic {
                (0..=n_max)
                    .map(|n| (n, k, families::y_number_ratfun(n, k).display_factored()))
                    .collect()
            } else {
                let lambda = lambda.ok_or_else(|| {
                    Error::Domain("table y needs either --symbolic or --lambda".into())
                })?;
                let lambda = parse_lambda_no_pole(&lambda)?;
                (0..=n_max)
                    .map(|n| families::y_number(n, k, &lambda).map(|v| (n, k, v.to_string())))
                    .collect::<Result<_, _>>()?
            };
            match format {
                OutputFormat::Json => {
                    let objects: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(n, k, value)| json!({ "n": n, "k": k, "value": value }))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&objects).expect("rows"));
                }
                OutputFormat::Csv => {
                    println!("n,k,value");
                    for (n, k, value) in &rows {
                        println!("{n},{k},{}", csv_field(value));
                    }
                }
            }
        }
        TableTarget::ApproxV {
            n_list,
            lambda,
            format,
        } => {
            let lambda = parse_lambda_no_pole(&lambda)?;
            let records = approx::v_approx_table(&parse_n_list(&n_list)?, &lambda)?;
            emit_approx_table(&records, format);
        }
    }
    Ok(ExitCode::SUCCESS)
}

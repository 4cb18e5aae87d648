//! `kaluza`: exact truncated power series from the command line.
//!
//! Exit status: 0 success, 1 a check or predicate failed, 2 usage or parse
//! error, 3 a mathematical precondition failed.

mod input;
mod render;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kaluza_core::generators::{gauss_2f1, named_series};
use kaluza_core::means::{kaluza4_condition_check, power_mean, theorem2_verify, MeanParams, DEFAULT_TOLERANCE};
use kaluza_core::oracle::self_test;
use kaluza_core::rational::{rat, Rational};
use kaluza_core::report::reproduce_paper;
use kaluza_core::scan::{default_alpha_grid, hyper_grid, scan_hyper, scan_power};
use kaluza_core::sequence::{
    classify_shape, is_log_concave_from, is_log_convex_from, is_unimodal, ratio_monotonicity,
    ratio_unimodal, Direction,
};
use kaluza_core::series::{
    binomial_convolution, cauchy_product, davenport_polya_convolution, differentiate, hadamard_product,
    integrate_termwise, power_rational, quotient, reciprocal,
};
use kaluza_core::theorems::{
    combined_theorem_check, hyper1_predicate, hyper2_witness, hyper4_predicate, jurkat_quotient_sign,
    kaluza_sign_check, nonneg_reciprocal_predicate, parity_reciprocal_check, propo_reciprocal_nonneg_check,
    quo_inequality_exact, quotient_monotone_prediction, turning_point_locate, ExpectedSign,
};
use kaluza_core::{HypergeomParams, NamedSeries, Series, SixParams};
use serde::Serialize;
use serde_json::json;

use input::{rational, rational_list, RatList, real, series_name, SecondInput, SeriesInput};
use render::Format;

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<kaluza_core::Error> for CliError {
    fn from(e: kaluza_core::Error) -> Self {
        CliError { code: if e.is_precondition() { 3 } else { 2 }, message: e.to_string() }
    }
}

#[derive(Parser, Debug)]
#[command(name = "kaluza", version, about = "Exact truncated power series and the Kaluza sign property")]
struct Cli {
    /// Output format; defaults to json, or table for report commands
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct OrderArg {
    /// Truncation order
    #[arg(long, env = "FPS_DEFAULT_ORDER", default_value_t = 10)]
    order: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients of a named series or a 2F1
    Generate {
        #[arg(long, value_parser = series_name, conflicts_with = "hyper", required_unless_present = "hyper")]
        series: Option<NamedSeries>,
        #[arg(long, num_args = 3, value_names = ["A", "B", "C"], value_parser = rational, allow_hyphen_values = true)]
        hyper: Option<Vec<Rational>>,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Series arithmetic
    Op {
        #[arg(value_enum)]
        kind: OpKind,
        #[command(flatten)]
        first: SeriesInput,
        #[command(flatten)]
        second: SecondInput,
        #[command(flatten)]
        order: OrderArg,
        /// Exponent for `power`
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        exponent: Option<Rational>,
        /// Davenport-Polya weights
        #[arg(long, value_parser = rational)]
        alpha: Option<Rational>,
        #[arg(long, value_parser = rational)]
        beta: Option<Rational>,
        /// Target order for `truncate`
        #[arg(long)]
        to: Option<usize>,
    },
    /// Sequence and series checks; exit 1 when the property fails
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[command(flatten)]
        first: SeriesInput,
        #[command(flatten)]
        second: SecondInput,
        #[command(flatten)]
        order: OrderArg,
        /// First index checked by log-convexity and log-concavity
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long)]
        strict: bool,
        /// Reversed difference condition, or non-positive sign, for `jurkat`
        #[arg(long)]
        reversed: bool,
        /// Exponent of the power mean for `kaluza4`
        #[arg(long, value_parser = real)]
        t: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Hypergeometric parameter predicates; exit 1 when false
    Predicate {
        #[arg(value_enum)]
        kind: PredicateKind,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, value_parser = rational)]
        a2: Option<Rational>,
        #[arg(long, value_parser = rational)]
        b2: Option<Rational>,
        #[arg(long, value_parser = rational)]
        c2: Option<Rational>,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Monotonicity of a quotient of series
    Analyze {
        #[arg(value_enum)]
        kind: AnalyzeKind,
        #[command(flatten)]
        num: SeriesInput,
        #[command(flatten)]
        den: SecondInput,
        #[command(flatten)]
        order: OrderArg,
        /// Sample points, comma-separated rationals
        #[arg(long, value_parser = rational_list)]
        samples: Option<RatList>,
    },
    /// Power mean ((a^t + b^t)/2)^(1/t)
    Mean {
        #[arg(long, value_parser = real)]
        a: f64,
        #[arg(long, value_parser = real)]
        b: f64,
        #[arg(long, value_parser = real)]
        t: f64,
    },
    /// Counterexample verifiers
    Verify {
        #[command(subcommand)]
        which: VerifyKind,
    },
    /// Grid scans for Kaluza violations, CSV by default
    Scan {
        #[command(subcommand)]
        family: ScanFamily,
    },
    /// Regenerate the published coefficient tables and compare
    ReproducePaper {
        /// Only tables whose name starts with, or whose section equals, this
        #[arg(long)]
        section: Option<String>,
    },
    /// Cross-check fast paths against the reference oracle
    Selftest {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OpKind {
    Product,
    Reciprocal,
    Quotient,
    Hadamard,
    BinomConv,
    DpConv,
    Power,
    Integrate,
    Differentiate,
    Truncate,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckKind {
    LogConvex,
    LogConcave,
    Unimodal,
    Classify,
    Ratio,
    RatioUnimodal,
    Kaluza,
    Jurkat,
    Propo,
    Parity,
    Kaluza4,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PredicateKind {
    Hyper1,
    Hyper2,
    Nonneg,
    Hyper4,
    Quo,
    Combined,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AnalyzeKind {
    Quotient,
    TurningPoint,
}

#[derive(Subcommand, Debug)]
enum VerifyKind {
    /// q(x) = q0 + sum x^n/n satisfies the power-mean condition yet has a
    /// positive reciprocal coefficient
    Thm2 {
        #[arg(long, default_value_t = 4)]
        order: usize,
        #[arg(long, value_parser = rational, default_value = "1999/1000")]
        q0: Rational,
        #[arg(long, value_parser = rational, default_value = "1/100")]
        t: Rational,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
}

#[derive(Subcommand, Debug)]
enum ScanFamily {
    /// 2F1(a,b;c;x) over the grid a x b x c
    Hyper {
        #[arg(long, value_parser = rational_list, allow_hyphen_values = true)]
        a: RatList,
        #[arg(long, value_parser = rational_list, allow_hyphen_values = true)]
        b: RatList,
        #[arg(long, value_parser = rational_list, allow_hyphen_values = true)]
        c: RatList,
        #[command(flatten)]
        order: OrderArg,
    },
    /// f^alpha for named series f over an exponent grid
    Power {
        /// Comma-separated series names
        #[arg(long, value_delimiter = ',', value_parser = series_name, default_value = "f1,f2,f3")]
        series: Vec<NamedSeries>,
        /// Comma-separated exponents; defaults to 1/20, 2/20, ..., 1
        #[arg(long, value_parser = rational_list, allow_hyphen_values = true)]
        alpha: Option<RatList>,
        #[arg(long, env = "FPS_DEFAULT_ORDER", default_value_t = 20)]
        order: usize,
    },
}

struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn new(text: String, ok: bool) -> Self {
        Output { text, ok }
    }
}

fn need<T: Clone>(v: &Option<T>, flag: &str, what: &str) -> Result<T, CliError> {
    v.clone().ok_or_else(|| CliError::usage(format!("{what} needs {flag}")))
}

#[allow(clippy::too_many_arguments)]
fn run_op(
    kind: OpKind,
    first: &SeriesInput,
    second: SecondInput,
    order: usize,
    exponent: &Option<Rational>,
    alpha: &Option<Rational>,
    beta: &Option<Rational>,
    to: Option<usize>,
) -> Result<Series, CliError> {
    let f = first.load(order, "first series")?;
    let g = || SeriesInput::from(second.clone()).load(order, "second series (--in2/--coeffs2/--series2/--hyper2)");
    Ok(match kind {
        OpKind::Product => cauchy_product(&f, &g()?)?,
        OpKind::Reciprocal => reciprocal(&f)?,
        OpKind::Quotient => quotient(&f, &g()?)?,
        OpKind::Hadamard => hadamard_product(&f, &g()?)?,
        OpKind::BinomConv => binomial_convolution(&f, &g()?)?,
        OpKind::DpConv => davenport_polya_convolution(
            &f,
            &g()?,
            &need(alpha, "--alpha", "dp-conv")?,
            &need(beta, "--beta", "dp-conv")?,
        )?,
        OpKind::Power => power_rational(&f, &need(exponent, "--exponent", "power")?)?,
        OpKind::Integrate => integrate_termwise(&f),
        OpKind::Differentiate => differentiate(&f)?,
        OpKind::Truncate => f.resized(need(&to, "--to", "truncate")?),
    })
}

fn verdict_output<T: Serialize>(v: &T, ok: bool, format: Format) -> Output {
    Output::new(render::value(v, format), ok)
}

#[allow(clippy::too_many_arguments)]
fn run_check(
    kind: CheckKind,
    first: &SeriesInput,
    second: SecondInput,
    order: usize,
    from: usize,
    strict: bool,
    reversed: bool,
    t: Option<f64>,
    tol: f64,
    format: Format,
) -> Result<Output, CliError> {
    let f = first.load(order, "series")?;
    let a = f.coeffs();
    let g = || SeriesInput::from(second.clone()).load(order, "second series (--in2/--coeffs2/--series2/--hyper2)");
    Ok(match kind {
        CheckKind::LogConvex => {
            let v = is_log_convex_from(a, from, strict)?;
            verdict_output(&v, v.holds(), format)
        }
        CheckKind::LogConcave => {
            let v = is_log_concave_from(a, from, strict)?;
            verdict_output(&v, v.holds(), format)
        }
        CheckKind::Unimodal => {
            let v = is_unimodal(a)?;
            verdict_output(&v, v.holds(), format)
        }
        CheckKind::Classify => verdict_output(&json!({ "shape": classify_shape(a)? }), true, format),
        CheckKind::Ratio => {
            let den = g()?;
            let r = ratio_monotonicity(a, den.coeffs(), strict)?;
            let direction = r.direction();
            let body = json!({ "direction": direction, "non_decreasing": r.non_decreasing, "non_increasing": r.non_increasing });
            verdict_output(&body, direction != Direction::Neither, format)
        }
        CheckKind::RatioUnimodal => {
            let den = g()?;
            let r = ratio_unimodal(a, den.coeffs())?;
            verdict_output(&r, r.verdict.holds(), format)
        }
        CheckKind::Kaluza => {
            let r = kaluza_sign_check(&f)?;
            verdict_output(&r, r.holds, format)
        }
        CheckKind::Jurkat => {
            let p = g()?;
            let expect = if reversed { ExpectedSign::Nonpositive } else { ExpectedSign::Nonnegative };
            let r = jurkat_quotient_sign(&f, &p, expect)?;
            verdict_output(&r, r.sign.holds(), format)
        }
        CheckKind::Propo => {
            let v = propo_reciprocal_nonneg_check(&f)?;
            verdict_output(&v, v.holds(), format)
        }
        CheckKind::Parity => {
            let v = parity_reciprocal_check(a, order)?;
            verdict_output(&v, v.holds(), format)
        }
        CheckKind::Kaluza4 => {
            let t = t.ok_or_else(|| CliError::usage("kaluza4 needs --t"))?;
            let v = kaluza4_condition_check(a, t, tol)?;
            verdict_output(&v, v.holds(), format)
        }
    })
}

fn six(a: Rational, b: Rational, c: Rational, a2: Option<Rational>, b2: Option<Rational>, c2: Option<Rational>) -> Result<SixParams, CliError> {
    match (a2, b2, c2) {
        (Some(a2), Some(b2), Some(c2)) => Ok(SixParams::new([a, b, c, a2, b2, c2])?),
        _ => Err(CliError::usage("this predicate needs --a2, --b2 and --c2")),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_predicate(
    kind: PredicateKind,
    a: Rational,
    b: Rational,
    c: Rational,
    a2: Option<Rational>,
    b2: Option<Rational>,
    c2: Option<Rational>,
    order: usize,
    format: Format,
) -> Result<Output, CliError> {
    let triple = || HypergeomParams::new(a.clone(), b.clone(), c.clone());
    Ok(match kind {
        PredicateKind::Hyper1 => {
            let r = hyper1_predicate(&triple()?)?;
            verdict_output(&r, r.holds, format)
        }
        PredicateKind::Hyper2 => {
            let w = hyper2_witness(&triple()?)?;
            let positive = w > Rational::from_integer(0.into());
            let body = json!({ "witness": kaluza_core::rational::format_rational(&w), "kaluza_fails": positive });
            verdict_output(&body, true, format)
        }
        PredicateKind::Nonneg => {
            let r = nonneg_reciprocal_predicate(&triple()?)?;
            verdict_output(&r, r.holds, format)
        }
        PredicateKind::Hyper4 => {
            let c = hyper4_predicate(&six(a, b, c, a2, b2, c2)?);
            let body = json!({ "direction": c.direction(), "satisfied": c.satisfied(), "conditions": c });
            verdict_output(&body, !c.satisfied().is_empty(), format)
        }
        PredicateKind::Quo => {
            let r = quo_inequality_exact(&six(a, b, c, a2, b2, c2)?);
            verdict_output(&r, r.verdict.holds(), format)
        }
        PredicateKind::Combined => {
            let r = combined_theorem_check(&six(a, b, c, a2, b2, c2)?, order)?;
            verdict_output(&r, r.holds(), format)
        }
    })
}

fn report_format(format: Option<Format>) -> Format {
    format.unwrap_or(Format::Table)
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let format = cli.format.unwrap_or(Format::Json);
    match cli.command {
        Command::Generate { series, hyper, order } => {
            let s = match (series, hyper) {
                (Some(n), _) => named_series(n, order.order),
                (None, Some(h)) => gauss_2f1(&HypergeomParams::new(h[0].clone(), h[1].clone(), h[2].clone())?, order.order),
                (None, None) => return Err(CliError::usage("generate needs --series or --hyper")),
            };
            Ok(Output::new(render::series(&s, format), true))
        }
        Command::Op { kind, first, second, order, exponent, alpha, beta, to } => {
            let s = run_op(kind, &first, second, order.order, &exponent, &alpha, &beta, to)?;
            Ok(Output::new(render::series(&s, format), true))
        }
        Command::Check { kind, first, second, order, from, strict, reversed, t, tol } => {
            run_check(kind, &first, second, order.order, from, strict, reversed, t, tol, format)
        }
        Command::Predicate { kind, a, b, c, a2, b2, c2, order } => {
            run_predicate(kind, a, b, c, a2, b2, c2, order.order, format)
        }
        Command::Analyze { kind, num, den, order, samples } => {
            let n = num.load(order.order, "numerator")?;
            let d = SeriesInput::from(den).load(order.order, "denominator (--in2/--coeffs2/--series2/--hyper2)")?;
            let points = samples.map_or_else(|| (1..10).map(|k| rat(k, 10)).collect(), |l| l.0);
            match kind {
                AnalyzeKind::Quotient => {
                    let r = quotient_monotone_prediction(&n, &d, &points)?;
                    let ok = r.agreement != Some(false);
                    Ok(verdict_output(&r, ok, format))
                }
                AnalyzeKind::TurningPoint => {
                    let r = turning_point_locate(&n, &d, &points)?;
                    Ok(verdict_output(&r, r.verdict.holds(), format))
                }
            }
        }
        Command::Mean { a, b, t } => {
            let m = power_mean(&MeanParams::new(a, b, t)?);
            Ok(verdict_output(&json!({ "a": a, "b": b, "t": t, "mean": m }), true, format))
        }
        Command::Verify { which: VerifyKind::Thm2 { order, q0, t, tol } } => {
            let r = theorem2_verify(order, &q0, &t, tol)?;
            Ok(verdict_output(&r, r.counterexample, format))
        }
        Command::Scan { family } => {
            let result = match family {
                ScanFamily::Hyper { a, b, c, order } => scan_hyper(&hyper_grid(&a.0, &b.0, &c.0)?, order.order)?,
                ScanFamily::Power { series, alpha, order } => {
                    scan_power(&series, &alpha.map_or_else(default_alpha_grid, |l| l.0), order)?
                }
            };
            let text = match cli.format.unwrap_or(Format::Csv) {
                Format::Json => render::value(&result, Format::Json),
                Format::Csv | Format::Table => result.to_csv(),
            };
            Ok(Output::new(text, true))
        }
        Command::ReproducePaper { section } => {
            let r = reproduce_paper(section.as_deref());
            if r.tables.is_empty() {
                return Err(CliError::usage(format!(
                    "no table matches {:?}; sections: {}",
                    section.unwrap_or_default(),
                    kaluza_core::report::sections().join(", ")
                )));
            }
            let text = match report_format(cli.format) {
                Format::Json => render::value(&r, Format::Json),
                _ => format!("{r}\n"),
            };
            Ok(Output::new(text, r.all_passed()))
        }
        Command::Selftest { seed, cases } => {
            let results = self_test(seed, cases)?;
            let ok = results.iter().all(|c| c.passed);
            let text = match report_format(cli.format) {
                Format::Json => render::value(&results, Format::Json),
                _ => results
                    .iter()
                    .map(|c| format!("{} {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name))
                    .collect(),
            };
            Ok(Output::new(text, ok))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_path = cli.out.clone();
    match run(cli) {
        Ok(out) => {
            match out_path {
                Some(p) => {
                    if let Err(e) = fs::write(&p, &out.text) {
                        eprintln!("error: writing {p}: {e}");
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", out.text),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

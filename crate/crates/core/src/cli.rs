//! Command-line front end used by the `legchi` binary.
//!
//! [`run`] takes the argument list and two writers so it can be driven from tests without
//! spawning a process. Exit codes: 0 on success, 2 on usage or domain errors, 3 when a
//! series or quadrature did not meet its tolerance.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_rational::BigRational;

use crate::control::{EvalControl, QuadControl};
use crate::error::{Error, Result};
use crate::euler;
use crate::format::{fmt_f64, json_complex, json_f64, json_string};
use crate::harness::{self, CaseStatus, Delta, HarnessConfig, Suite, VerificationReport};
use crate::kernels;
use crate::series::{self, SeriesSum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Largest `n` accepted by `table --max-n`.
pub const TABLE_MAX_N: u32 = 6;

#[derive(Debug, Parser)]
#[command(name = "legchi", version, about = "Legendre chi function, Euler polynomials and integral identity checks")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format (default: text for eval, csv for table and kernel-dump, json for verify)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Absolute tolerance for quadrature
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Absolute tolerance for series truncation
    #[arg(long, global = true)]
    series_tol: Option<f64>,
    /// Term cap for series summation
    #[arg(long, global = true)]
    max_terms: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at a point
    Eval(EvalArgs),
    /// Tabulate lambda, beta and zeta constants by series and by integral
    Table {
        #[arg(long)]
        max_n: u32,
    },
    /// Run a verification suite and print the report
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Sample a kernel on a uniform grid of the open interval
    KernelDump {
        #[arg(long, value_enum)]
        kernel: KernelArg,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Number of samples
        #[arg(long, default_value_t = 99)]
        n: usize,
    },
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(value_enum)]
    function: Function,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Function {
    Chi,
    Polylog,
    Zeta,
    Lambda,
    Beta,
    #[value(name = "S")]
    S,
    #[value(name = "C")]
    C,
    EulerPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Lemmas,
    Theorem1,
    Theorem2,
    Corollary,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::Theorem1 => Suite::Theorem1,
            SuiteArg::Theorem2 => Suite::Theorem2,
            SuiteArg::Corollary => Suite::Corollary,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KernelArg {
    Sin,
    Cos,
    PoissonSin,
    PoissonCos,
}

/// Parses `<real>[±<imag>i]`, e.g. `0.5`, `0.3+0.4i`, `-1e-3-2i`, `0+1i`.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let bad = || Error::domain(format!("cannot parse {text:?} as <real>[±<imag>i]"));
    let real = |s: &str| -> Result<f64> {
        let ok = !s.is_empty()
            && s.chars().all(|c| c.is_ascii_digit() || matches!(c, '+' | '-' | '.' | 'e' | 'E'));
        if !ok {
            return Err(bad());
        }
        s.parse::<f64>().map_err(|_| bad())
    };
    let Some(body) = text.strip_suffix('i') else {
        return Ok(Complex64::new(real(text)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| matches!(bytes[j], b'+' | b'-') && !matches!(bytes[j - 1], b'e' | b'E'))
        .ok_or_else(bad)?;
    let (re, im) = body.split_at(split);
    if im.len() < 2 {
        return Err(bad());
    }
    Ok(Complex64::new(real(re)?, real(im)?))
}

fn fmt_complex(v: Complex64) -> String {
    if v.im == 0.0 {
        fmt_f64(v.re)
    } else {
        let im = fmt_f64(v.im);
        let sign = if im.starts_with('-') { "" } else { "+" };
        format!("{}{sign}{im}i", fmt_f64(v.re))
    }
}

fn require<T>(value: Option<T>, flag: &str, function: &str) -> Result<T> {
    value.ok_or_else(|| Error::domain(format!("{function} requires --{flag}")))
}

fn reject<T>(value: &Option<T>, flag: &str, function: &str) -> Result<()> {
    match value {
        Some(_) => Err(Error::domain(format!("{function} does not take --{flag}"))),
        None => Ok(()),
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NonConvergence { .. } => EXIT_NUMERICAL,
        _ => EXIT_USAGE,
    }
}

struct Evaluation {
    label: String,
    value: Complex64,
    bound: f64,
    terms: Option<usize>,
    exact: Option<String>,
}

impl Evaluation {
    fn from_sum(label: String, sum: SeriesSum) -> Self {
        Self {
            label,
            value: sum.value,
            bound: sum.tail_bound,
            terms: Some(sum.terms),
            exact: None,
        }
    }
}

fn evaluate(args: &EvalArgs, ctl: &EvalControl) -> Result<Evaluation> {
    let name = args.function.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let name = name.as_str();
    let parsed_z = args.z.as_deref().map(parse_complex).transpose()?;
    let parsed_s = args.s.as_deref().map(parse_complex).transpose()?;
    let uses = match args.function {
        Function::Chi | Function::Polylog => ["z", "s"].as_slice(),
        Function::Zeta | Function::Lambda | Function::Beta => &["s"],
        Function::S | Function::C => &["s", "x"],
        Function::EulerPoly => &["n", "x"],
    };
    if !uses.contains(&"z") {
        reject(&parsed_z, "z", name)?;
    }
    if !uses.contains(&"s") {
        reject(&parsed_s, "s", name)?;
    }
    if !uses.contains(&"x") {
        reject(&args.x, "x", name)?;
    }
    if !uses.contains(&"n") {
        reject(&args.n, "n", name)?;
    }
    let z = || require(parsed_z, "z", name);
    let s = || require(parsed_s, "s", name);
    let x = || require(args.x, "x", name);
    match args.function {
        Function::Chi => {
            let (z, s) = (z()?, s()?);
            let label = format!("chi({}, {})", fmt_complex(z), fmt_complex(s));
            Ok(Evaluation::from_sum(label, series::chi_with_bound(z, s, ctl)?))
        }
        Function::Polylog => {
            let (z, s) = (z()?, s()?);
            let label = format!("polylog({}, {})", fmt_complex(z), fmt_complex(s));
            Ok(Evaluation::from_sum(label, series::polylog_with_bound(z, s, ctl)?))
        }
        Function::Zeta => {
            let s = s()?;
            Ok(Evaluation::from_sum(format!("zeta({})", fmt_complex(s)), series::riemann_zeta_with_bound(s, ctl)?))
        }
        Function::Lambda => {
            let s = s()?;
            Ok(Evaluation::from_sum(format!("lambda({})", fmt_complex(s)), series::dirichlet_lambda_with_bound(s, ctl)?))
        }
        Function::Beta => {
            let s = s()?;
            Ok(Evaluation::from_sum(format!("beta({})", fmt_complex(s)), series::dirichlet_beta_with_bound(s, ctl)?))
        }
        Function::S => {
            let (s, x) = (s()?, x()?);
            let label = format!("S({}, {})", fmt_complex(s), fmt_f64(x));
            Ok(Evaluation::from_sum(label, series::sin_series_with_bound(s, x, ctl)?))
        }
        Function::C => {
            let (s, x) = (s()?, x()?);
            let label = format!("C({}, {})", fmt_complex(s), fmt_f64(x));
            Ok(Evaluation::from_sum(label, series::cos_series_with_bound(s, x, ctl)?))
        }
        Function::EulerPoly => {
            let (n, x) = (require(args.n, "n", name)?, x()?);
            let poly = euler::euler_polynomial(n as usize)?;
            let exact_x = BigRational::from_float(x)
                .ok_or_else(|| Error::domain(format!("x must be finite, got {x}")))?;
            Ok(Evaluation {
                label: format!("E_{n}({})", fmt_f64(x)),
                value: Complex64::new(poly.evaluate(x), 0.0),
                bound: poly.rounding_bound(x),
                terms: None,
                exact: Some(poly.eval_exact(&exact_x).to_string()),
            })
        }
    }
}

fn render_eval(e: &Evaluation, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = format!("{} = {}\nerror_bound = {}\n", e.label, fmt_complex(e.value), fmt_f64(e.bound));
            if let Some(exact) = &e.exact {
                out.push_str(&format!("exact = {exact}\n"));
            }
            out
        }
        Format::Csv => format!(
            "quantity,value_re,value_im,error_bound\n{},{},{},{}\n",
            e.label.replace(',', ";"),
            fmt_f64(e.value.re),
            fmt_f64(e.value.im),
            fmt_f64(e.bound)
        ),
        Format::Json => {
            let mut out = format!(
                "{{\"quantity\":{},\"value\":{},\"error_bound\":{}",
                json_string(&e.label),
                json_complex(e.value),
                json_f64(e.bound)
            );
            if let Some(terms) = e.terms {
                out.push_str(&format!(",\"terms\":{terms}"));
            }
            if let Some(exact) = &e.exact {
                out.push_str(&format!(",\"exact\":{}", json_string(exact)));
            }
            out.push_str("}\n");
            out
        }
    }
}

struct TableRow {
    n: u32,
    quantity: String,
    series: f64,
    integral: Option<f64>,
}

fn table_rows(max_n: u32, cfg: &HarnessConfig) -> Result<Vec<TableRow>> {
    if !(1..=TABLE_MAX_N).contains(&max_n) {
        return Err(Error::domain(format!("--max-n must lie in 1..={TABLE_MAX_N}, got {max_n}")));
    }
    type Route = fn(u32, Delta, &HarnessConfig) -> Result<crate::quadrature::QuadratureResult>;
    type Series = fn(Complex64, &EvalControl) -> Result<Complex64>;
    let families: [(&str, fn(u32) -> u32, Series, Route); 3] = [
        ("lambda", |n| 2 * n + 1, series::dirichlet_lambda, harness::lambda_via_integral),
        ("beta", |n| 2 * n, series::dirichlet_beta, harness::beta_via_integral),
        ("zeta", |n| 2 * n + 1, series::riemann_zeta, harness::zeta_odd_via_integral),
    ];
    let mut rows = Vec::new();
    for n in 1..=max_n {
        for (name, order, series_fn, route) in families {
            let s = order(n);
            let series_value = series_fn(Complex64::new(s as f64, 0.0), &cfg.series)?.re;
            for delta in Delta::BOTH {
                let q = route(n, delta, cfg)?;
                rows.push(TableRow {
                    n,
                    quantity: format!("{name}({s})[delta={}]", delta.label()),
                    series: series_value,
                    integral: q.converged.then_some(q.value.re),
                });
            }
        }
    }
    Ok(rows)
}

fn render_table(rows: &[TableRow], format: Format) -> String {
    let diff = |r: &TableRow| r.integral.map(|v| (v - r.series).abs());
    match format {
        Format::Csv => {
            let mut out = String::from("n,quantity,series_value,integral_value,abs_diff\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.n,
                    r.quantity,
                    fmt_f64(r.series),
                    r.integral.map(fmt_f64).unwrap_or_default(),
                    diff(r).map(fmt_f64).unwrap_or_default()
                ));
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{:>2}  {:<22}  {:>24}  {:>24}  {:>24}\n",
                "n", "quantity", "series", "integral", "abs_diff"
            );
            for r in rows {
                out.push_str(&format!(
                    "{:>2}  {:<22}  {:>24}  {:>24}  {:>24}\n",
                    r.n,
                    r.quantity,
                    fmt_f64(r.series),
                    r.integral.map(fmt_f64).unwrap_or_else(|| "-".into()),
                    diff(r).map(fmt_f64).unwrap_or_else(|| "-".into())
                ));
            }
            out
        }
        Format::Json => {
            let items: Vec<String> = rows
                .iter()
                .map(|r| {
                    format!(
                        "{{\"n\":{},\"quantity\":{},\"series_value\":{},\"integral_value\":{},\"abs_diff\":{}}}",
                        r.n,
                        json_string(&r.quantity),
                        json_f64(r.series),
                        r.integral.map(json_f64).unwrap_or_else(|| "null".into()),
                        diff(r).map(json_f64).unwrap_or_else(|| "null".into())
                    )
                })
                .collect();
            format!("[{}]\n", items.join(","))
        }
    }
}

fn params_compact(case: &harness::IdentityCase) -> String {
    let p = &case.params;
    let mut parts = Vec::new();
    if let Some(z) = p.z {
        parts.push(format!("z={}", fmt_complex(z)));
    }
    if let Some(s) = p.s {
        parts.push(format!("s={}", fmt_complex(s)));
    }
    if let Some(n) = p.n {
        parts.push(format!("n={n}"));
    }
    if let Some(k) = p.k {
        parts.push(format!("k={k}"));
    }
    if let Some(d) = p.delta {
        parts.push(format!("delta={}", d.label()));
    }
    if let Some(a) = p.alpha {
        parts.push(format!("alpha={}", a.label()));
    }
    if let Some(kind) = p.kind {
        parts.push(format!("kind={kind:?}").to_lowercase());
    }
    parts.join(";")
}

fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Csv => {
            let mut out = String::from("id,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,tol,pass,converged\n");
            for c in &report.cases {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{}\n",
                    c.id,
                    params_compact(c),
                    fmt_f64(c.lhs.re),
                    fmt_f64(c.lhs.im),
                    fmt_f64(c.rhs.re),
                    fmt_f64(c.rhs.im),
                    fmt_f64(c.abs_err),
                    fmt_f64(c.tol),
                    c.pass,
                    c.converged
                ));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for c in &report.cases {
                let status = match c.status() {
                    CaseStatus::Passed => "pass",
                    CaseStatus::Failed => "FAIL",
                    CaseStatus::Unconverged => "unconverged",
                };
                out.push_str(&format!("{:<11} {:<12} {:<48} abs_err={:.3e}", status, c.id.as_str(), params_compact(c), c.abs_err));
                if let Some(e) = &c.error {
                    out.push_str(&format!("  ({e})"));
                }
                out.push('\n');
            }
            for e in &report.exhibits {
                out.push_str(&format!(
                    "exhibit: {} value={} reference={}\n",
                    e.label,
                    fmt_complex(e.value),
                    fmt_complex(e.reference)
                ));
            }
            for u in &report.untested {
                out.push_str(&format!("untested: {u}\n"));
            }
            let s = report.summary;
            out.push_str(&format!(
                "suite {}: total {} passed {} failed {} unconverged {}\n",
                report.suite, s.total, s.passed, s.failed, s.unconverged
            ));
            out
        }
    }
}

fn sample_kernel(kernel: KernelArg, z: Complex64, n: usize) -> Result<String> {
    if n < 2 {
        return Err(Error::domain(format!("sample count --n must be at least 2, got {n}")));
    }
    let length = match kernel {
        KernelArg::Sin | KernelArg::Cos => 1.0,
        KernelArg::PoissonSin | KernelArg::PoissonCos => 2.0 * std::f64::consts::PI,
    };
    let mut out = String::from("t,value_re,value_im\n");
    for j in 1..=n {
        let t = j as f64 / (n + 1) as f64 * length;
        let v = match kernel {
            KernelArg::Sin => kernels::kernel_sin(z, t)?,
            KernelArg::Cos => kernels::kernel_cos(z, t)?,
            KernelArg::PoissonSin => kernels::poisson_sin(z, t)?,
            KernelArg::PoissonCos => kernels::poisson_cos(z, t)?,
        }
        .value;
        out.push_str(&format!("{},{},{}\n", fmt_f64(t), fmt_f64(v.re), fmt_f64(v.im)));
    }
    Ok(out)
}

fn kernel_json(csv: &str) -> String {
    let rows: Vec<String> = csv
        .lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            format!("{{\"t\":{},\"value\":{{\"re\":{},\"im\":{}}}}}", f[0], f[1], f[2])
        })
        .collect();
    format!("[{}]\n", rows.join(","))
}

fn harness_config(common: &Common) -> Result<HarnessConfig> {
    let defaults = HarnessConfig::default();
    let series = EvalControl::new(
        common.series_tol.unwrap_or(defaults.series.abs_tol()),
        common.max_terms.unwrap_or(defaults.series.max_terms()),
    )?;
    let quad = match common.tol {
        Some(tol) => QuadControl::with_limits(tol, defaults.quad.max_depth(), defaults.quad.max_evals())?,
        None => defaults.quad,
    };
    Ok(HarnessConfig { series, quad, ..defaults })
}

/// Output text and exit code of a successfully parsed command.
fn execute(cli: &Cli) -> Result<(String, i32)> {
    let cfg = harness_config(&cli.common)?;
    match &cli.command {
        Command::Eval(args) => {
            let e = evaluate(args, &cfg.series)?;
            Ok((render_eval(&e, cli.common.format.unwrap_or(Format::Text)), EXIT_OK))
        }
        Command::Table { max_n } => {
            let rows = table_rows(*max_n, &cfg)?;
            let code = if rows.iter().all(|r| r.integral.is_some()) { EXIT_OK } else { EXIT_NUMERICAL };
            Ok((render_table(&rows, cli.common.format.unwrap_or(Format::Csv)), code))
        }
        Command::Verify { suite } => {
            let report = harness::run_default((*suite).into(), &cfg);
            let s = report.summary;
            let code = if s.failed == 0 && s.unconverged == 0 { EXIT_OK } else { EXIT_NUMERICAL };
            Ok((render_report(&report, cli.common.format.unwrap_or(Format::Json)), code))
        }
        Command::KernelDump { kernel, z, n } => {
            let csv = sample_kernel(*kernel, parse_complex(z)?, *n)?;
            let text = match cli.common.format.unwrap_or(Format::Csv) {
                Format::Json => kernel_json(&csv),
                Format::Text | Format::Csv => csv,
            };
            Ok((text, EXIT_OK))
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let (text, code) = match execute(&cli) {
        Ok(result) => result,
        Err(e) => {
            let _ = writeln!(err, "legchi: {e}");
            return exit_code(&e);
        }
    };
    let written = match &cli.common.output {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "legchi: cannot write output: {e}");
        return EXIT_USAGE;
    }
    code
}

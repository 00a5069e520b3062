//! Command-line surface. Results go to `out`, diagnostics to `err`.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use ratrec_core::gb::convert_gb;
use ratrec_core::{
    check_annihilates, classify_cfinite, convert_la, somos_generate, unroll_holonomic, DiffPoly, Error, HolonomicEq,
    Limits, Method, RatRecEq, Rational,
};
use ratrec_core::verify::VerificationReport;
use thiserror::Error;

use crate::bench::{bench, render_table, Deadline};
use crate::json::{from_json, Decoded};
use crate::parse::{parse_equation, parse_holonomic, parse_rationals, ParseError};
use crate::print::{print_equation, Format};
use crate::random::{random_holonomic, UNIT_COEFFS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;
pub const EXIT_NOT_FOUND: i32 = 4;
pub const EXIT_VIOLATIONS: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "ratrec", version, about = "Convert holonomic recurrences into simple rational recursions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    La,
    Gb,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::La => Method::La,
            MethodArg::Gb => Method::Gb,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Convert a holonomic equation.
    Convert {
        /// File holding the equation as text or as a JSON record.
        eqfile: Option<PathBuf>,
        #[arg(long)]
        expr: Option<String>,
        #[arg(long, value_enum, default_value = "la")]
        method: MethodArg,
        /// Iteration bound for the GB method (defaults to the degree).
        #[arg(long)]
        userbound: Option<u32>,
        /// Seconds before giving up.
        #[arg(long, default_value_t = 300.0)]
        timeout: f64,
        #[arg(long)]
        json: bool,
        /// Check the output against this many unrolled terms.
        #[arg(long, requires = "inits")]
        verify_terms: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        inits: Option<String>,
    },
    /// Check that a recursion annihilates the sequence of a holonomic equation.
    Verify {
        #[arg(long)]
        eq: String,
        /// Equation such as `s(n+2)*(10*s(n)-s(n+1)) = 2*s(n+1)*(8*s(n)+s(n+1))`.
        #[arg(long)]
        ratrec: String,
        #[arg(long, allow_hyphen_values = true)]
        inits: String,
        #[arg(long, default_value_t = 100)]
        terms: usize,
    },
    /// Time both methods on equations read from files, one per line.
    Bench {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "gb,la")]
        methods: Vec<MethodArg>,
        #[arg(long, default_value_t = 300.0)]
        timeout: f64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Print a seeded random holonomic equation.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        /// Comma-separated coefficient set.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Integer sequence from a monic integer equation, with its rational recursion.
    Somos {
        #[arg(long)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        inits: String,
        #[arg(long, default_value_t = 20)]
        terms: usize,
        #[arg(long, value_enum, default_value = "la")]
        method: MethodArg,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("verification found {0} violation(s)")]
    Violations(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => EXIT_USAGE,
            CliError::Core(Error::Timeout(_)) => EXIT_TIMEOUT,
            CliError::Core(Error::NotFoundWithinBound { .. }) => EXIT_NOT_FOUND,
            CliError::Core(
                Error::Unsupported(_)
                | Error::NotHolonomic(_)
                | Error::ArityError { .. }
                | Error::NotSomosEligible(_)
                | Error::ZeroPolynomial,
            ) => EXIT_USAGE,
            CliError::Core(_) | CliError::Io(_) => 1,
            CliError::Violations(_) => EXIT_VIOLATIONS,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{}", text);
            } else {
                let _ = write!(out, "{}", text);
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            e.exit_code()
        }
    }
}

fn seconds(t: f64) -> Result<Duration, CliError> {
    if !(t.is_finite() && t > 0.0) {
        return Err(CliError::Usage("timeout must be a positive number of seconds".into()));
    }
    Ok(Duration::from_secs_f64(t))
}

fn load_holonomic(file: Option<&Path>, expr: Option<&str>) -> Result<HolonomicEq, CliError> {
    match (file, expr) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either EQFILE or --expr, not both".into())),
        (None, None) => Err(CliError::Usage("no equation given; use EQFILE or --expr".into())),
        (None, Some(e)) => Ok(parse_holonomic(e)?),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)?;
            if text.trim_start().starts_with('{') {
                match from_json(&text).map_err(|e| CliError::Usage(e.to_string()))? {
                    Decoded::Holonomic(h) => Ok(h),
                    Decoded::Diff(p) => HolonomicEq::from_diffpoly(&p).map_err(CliError::from),
                    Decoded::RatRec(_) => Err(CliError::Usage("expected a holonomic equation, got a ratrec record".into())),
                }
            } else {
                Ok(parse_holonomic(text.trim())?)
            }
        }
    }
}

fn report_line(r: &VerificationReport) -> String {
    format!(
        "checked n = {}..{}: {} hold, {} singular, {} violations",
        r.range.start,
        r.range.end,
        r.hold_count,
        r.singular_indices.len(),
        r.violations.len()
    )
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Convert { eqfile, expr, method, userbound, timeout, json, verify_terms, inits } => {
            let h = load_holonomic(eqfile.as_deref(), expr.as_deref())?;
            let deadline = Deadline::after(seconds(timeout)?);
            let limits = Limits::with_budget(&deadline);
            let r = match method {
                MethodArg::La => convert_la(&h)?,
                MethodArg::Gb => convert_gb(&h, userbound, limits)?,
            };
            if json {
                writeln!(out, "{}", print_equation(&r, Format::Json).expect("json accepts every kind"))?;
            } else {
                writeln!(out, "{}", print_equation(&r, Format::Solved).expect("ratrec prints solved"))?;
                if let Some(c) = classify_cfinite(&r) {
                    let coeffs: Vec<String> = c.coefficients.iter().map(|x| x.to_string()).collect();
                    writeln!(out, "C-finite: constant {}, coefficients [{}]", c.constant, coeffs.join(", "))?;
                }
            }
            if let Some(n) = verify_terms {
                let inits = parse_rationals(inits.as_deref().unwrap_or(""))?;
                let report = verify_against(&h, &inits, &DiffPoly::new(r.to_diffpoly().into_body()), n)?;
                writeln!(out, "{}", report_line(&report))?;
                if !report.passed() {
                    return Err(CliError::Violations(report.violations.len()));
                }
            }
            Ok(())
        }
        Command::Verify { eq, ratrec, inits, terms } => {
            let h = parse_holonomic(&eq)?;
            let target = parse_equation(&ratrec)?;
            let inits = parse_rationals(&inits)?;
            let report = verify_against(&h, &inits, &target, terms)?;
            writeln!(out, "{}", report_line(&report))?;
            for v in report.violations.iter().take(5) {
                writeln!(out, "violation at n = {}: {} != {}", v.index, v.lhs, v.rhs)?;
            }
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::Violations(report.violations.len()))
            }
        }
        Command::Bench { inputs, methods, timeout, json, workers } => {
            let timeout = seconds(timeout)?;
            let mut eqs = Vec::new();
            for path in &inputs {
                eqs.extend(read_bench_file(path)?);
            }
            let methods: Vec<Method> = methods.into_iter().map(Method::from).collect();
            let workers = workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let rows = bench(&eqs, &methods, timeout, workers);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialize"))?;
            } else {
                write!(out, "{}", render_table(&rows, timeout))?;
            }
            Ok(())
        }
        Command::Random { seed, max_order, max_degree, coeffs, json } => {
            if max_order == 0 {
                return Err(CliError::Usage("--max-order must be at least 1".into()));
            }
            let set: Vec<i64> = match coeffs {
                None => UNIT_COEFFS.to_vec(),
                Some(text) => text
                    .split(',')
                    .map(|t| t.trim().parse::<i64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| CliError::Usage(format!("bad coefficient set '{}'", text)))?,
            };
            if set.iter().all(|&c| c == 0) {
                return Err(CliError::Usage("coefficient set needs a nonzero value".into()));
            }
            let h = random_holonomic(seed, max_order, max_degree, &set);
            let doc = if json { Format::Json } else { Format::Zero };
            writeln!(out, "{}", print_equation(&h, doc).expect("holonomic prints in zero and json"))?;
            Ok(())
        }
        Command::Somos { expr, inits, terms, method } => {
            let h = parse_holonomic(&expr)?;
            let ints: Vec<BigInt> = parse_rationals(&inits)?
                .into_iter()
                .map(|r| {
                    if r.is_integer() {
                        Ok(r.to_integer())
                    } else {
                        Err(CliError::Usage(format!("initial value {} is not an integer", r)))
                    }
                })
                .collect::<Result<_, _>>()?;
            let (table, r) = somos_generate(&h, &ints, terms, method.into(), Limits::unlimited())?;
            let values: Vec<String> = table.defined().map(|v| v.to_string()).collect();
            writeln!(out, "{}", values.join(", "))?;
            writeln!(out, "{}", print_equation(&r, Format::Solved).expect("ratrec prints solved"))?;
            Ok(())
        }
    }
}

fn verify_against(h: &HolonomicEq, inits: &[Rational], target: &DiffPoly, terms: usize) -> Result<VerificationReport, CliError> {
    let order = target.order() as usize;
    let table = unroll_holonomic(h, inits, terms + order)?;
    let r: Option<RatRecEq> = target.to_ratrec_form().ok().filter(|r| r.is_n_free());
    Ok(match &r {
        Some(r) => check_annihilates(r, &table, 0..terms + 1),
        None => check_annihilates(target, &table, 0..terms + 1),
    })
}

/// Lines `id: equation` or bare equations; `#` starts a comment.
pub fn read_bench_file(path: &Path) -> Result<Vec<(String, HolonomicEq)>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let stem = path.file_stem().map_or_else(|| "input".to_string(), |s| s.to_string_lossy().into_owned());
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (id, expr) = match line.split_once(':') {
            Some((id, e)) => (id.trim().to_string(), e),
            None => (format!("{}:{}", stem, lineno + 1), line),
        };
        out.push((id, parse_holonomic(expr)?));
    }
    Ok(out)
}

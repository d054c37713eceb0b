//! Command-line front end: parameter reports, point and lattice dumps,
//! code construction, duals, CSV sweeps, and the verification battery.
//!
//! Exit codes: 0 on success, 1 on a runtime or verification failure, 2 on
//! a usage error (bad flags, unsupported curve, field too large).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::codes::{
    build_code, code_dimension, dual_spec, gv_compare, min_distance_bruteforce, CodesError,
    DEFAULT_DISTANCE_BUDGET,
};
use crate::curve::{curve_new, CurveError, CurveParams};
use crate::lattice::{omega_enumerate, omega_prime_transform, DivisorSpec};
use crate::linalg::LinalgError;
use crate::verify::run_battery;

#[derive(Parser, Debug)]
#[command(
    name = "ghcode",
    about = "Multi-point evaluation codes on generalized Hermitian curves",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CurveArgs {
    /// Base prime power q.
    #[arg(long)]
    q: u64,
    /// Odd extension degree c >= 3 with gcd(char, (c+1)/2) = 1.
    #[arg(long)]
    c: u32,
}

#[derive(Args, Debug)]
struct SpecArgs {
    /// Coefficient of the place at infinity.
    #[arg(long, allow_negative_numbers = true)]
    v: i64,
    /// Coefficient of the degree q^(a-1) - 1 place.
    #[arg(long, allow_negative_numbers = true)]
    r: i64,
    /// Coefficient of the degree q^(b-1) place.
    #[arg(long, allow_negative_numbers = true)]
    s: i64,
    /// Coefficient of the degree q - 1 place.
    #[arg(long, allow_negative_numbers = true)]
    t: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the derived curve constants on one line.
    Params(CurveArgs),
    /// List the affine evaluation points as `alpha beta` encodings.
    Points(CurveArgs),
    /// List the exponent triples of a spec's lattice set.
    Omega {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        spec: SpecArgs,
        /// Apply the monomial basis change before printing.
        #[arg(long)]
        prime: bool,
    },
    /// Build a code and print the summary line `n k goppa_lb degG`.
    Code {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        spec: SpecArgs,
        /// Write the generator matrix to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Verify orthogonality and rank sum against the dual code.
        #[arg(long)]
        check_dual: bool,
        /// Sweep every codeword class for the exact minimum distance.
        #[arg(long)]
        min_dist: bool,
    },
    /// Print the dual spec.
    Dual {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// CSV of code parameters over a sweep of v with r, s, t fixed.
    Table {
        #[command(flatten)]
        curve: CurveArgs,
        /// Sweep bounds as vmin:vmax:step.
        #[arg(long, value_parser = parse_sweep, allow_hyphen_values = true)]
        sweep: Sweep,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        s: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        t: i64,
    },
    /// CSV comparing swept one-point codes against the GV rate.
    GvCompare {
        #[command(flatten)]
        curve: CurveArgs,
        /// Sweep bounds as vmin:vmax:step.
        #[arg(long, value_parser = parse_sweep, allow_hyphen_values = true)]
        sweep: Sweep,
    },
    /// Run the verification battery; exits nonzero on any failure.
    Verify {
        #[command(flatten)]
        curve: CurveArgs,
        /// Seed for the randomized sections.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    lo: i64,
    hi: i64,
    step: i64,
}

impl Sweep {
    fn values(&self) -> impl Iterator<Item = i64> + '_ {
        (self.lo..=self.hi).step_by(self.step as usize)
    }
}

fn parse_sweep(text: &str) -> Result<Sweep, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let [lo, hi, step] = parts.as_slice() else {
        return Err("expected vmin:vmax:step".into());
    };
    let parse = |part: &str| part.parse::<i64>().map_err(|e| format!("{part}: {e}"));
    let (lo, hi, step) = (parse(lo)?, parse(hi)?, parse(step)?);
    if step < 1 {
        return Err("step must be at least 1".into());
    }
    if lo > hi {
        return Err("vmin must not exceed vmax".into());
    }
    Ok(Sweep { lo, hi, step })
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Runtime(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Runtime(msg) => f.write_str(msg),
        }
    }
}

impl From<CurveError> for CliError {
    fn from(err: CurveError) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<CodesError> for CliError {
    fn from(err: CodesError) -> Self {
        CliError::Runtime(err.to_string())
    }
}

impl From<LinalgError> for CliError {
    fn from(err: LinalgError) -> Self {
        CliError::Runtime(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Runtime(err.to_string())
    }
}

/// Parses the process arguments and runs the selected command against
/// standard output.
pub fn entry() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    match run(cli, &mut out) {
        Ok(status) => {
            if out.flush().is_err() {
                return ExitCode::from(1);
            }
            status
        }
        Err(err) => {
            let _ = out.flush();
            eprintln!("error: {err}");
            match err {
                CliError::Usage(_) => ExitCode::from(2),
                CliError::Runtime(_) => ExitCode::from(1),
            }
        }
    }
}

fn curve(args: &CurveArgs) -> Result<CurveParams, CliError> {
    Ok(curve_new(args.q, args.c)?)
}

fn spec_of(args: &SpecArgs) -> DivisorSpec {
    DivisorSpec::new(args.v, args.r, args.s, args.t)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Params(curve_args) => {
            let cp = curve(&curve_args)?;
            writeln!(
                out,
                "a={} b={} g={} n={} v0={} A={} B={}",
                cp.a(),
                cp.b(),
                cp.genus(),
                cp.n(),
                cp.v0(),
                cp.dual_s_shift(),
                cp.dual_t_shift()
            )?;
        }
        Command::Points(curve_args) => {
            let cp = curve(&curve_args)?;
            for pt in cp.points() {
                writeln!(out, "{} {}", pt.alpha.0, pt.beta.0)?;
            }
        }
        Command::Omega { curve: curve_args, spec, prime } => {
            let cp = curve(&curve_args)?;
            let mut triples = omega_enumerate(&cp, spec_of(&spec));
            if prime {
                triples = omega_prime_transform(&cp, &triples);
            }
            for (i, j, k) in triples {
                writeln!(out, "{i} {j} {k}")?;
            }
        }
        Command::Code { curve: curve_args, spec, out: path, check_dual, min_dist } => {
            let cp = curve(&curve_args)?;
            let spec = spec_of(&spec);
            let code = build_code(&cp, spec)?;
            if let Some(path) = path {
                let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
                code.generator().write_to(&mut file)?;
                file.flush()?;
            }
            writeln!(
                out,
                "{} {} {} {}",
                code.n(),
                code.dim(),
                code.goppa_lower_bound(),
                code.degree()
            )?;
            if check_dual {
                let dual = build_code(&cp, dual_spec(&cp, spec))?;
                let prod = code.generator().mul_transpose(dual.generator())?;
                if !prod.is_zero() || code.dim() + dual.dim() != cp.n() {
                    return Err(CliError::Runtime(format!(
                        "dual check failed: ranks {} + {}, orthogonal: {}",
                        code.dim(),
                        dual.dim(),
                        prod.is_zero()
                    )));
                }
                writeln!(out, "dual_check=ok")?;
            }
            if min_dist {
                let dist = min_distance_bruteforce(&code, DEFAULT_DISTANCE_BUDGET)?;
                writeln!(out, "min_dist={dist}")?;
            }
        }
        Command::Dual { curve: curve_args, spec } => {
            let cp = curve(&curve_args)?;
            let dual = dual_spec(&cp, spec_of(&spec));
            writeln!(out, "v={} r={} s={} t={}", dual.v, dual.r, dual.s, dual.t)?;
        }
        Command::Table { curve: curve_args, sweep, r, s, t } => {
            let cp = curve(&curve_args)?;
            writeln!(out, "v,degG,k,goppa_lb")?;
            for v in sweep.values() {
                let spec = DivisorSpec::new(v, r, s, t);
                let deg = spec.degree(&cp);
                let k = code_dimension(&cp, spec);
                writeln!(out, "{v},{deg},{k},{}", cp.n() as i64 - deg)?;
            }
        }
        Command::GvCompare { curve: curve_args, sweep } => {
            let cp = curve(&curve_args)?;
            let specs: Vec<DivisorSpec> = sweep
                .values()
                .map(|v| DivisorSpec::new(v, 0, 0, 0))
                .collect();
            writeln!(
                out,
                "# gv_rate convention: 1 for delta <= 0, 0 for delta >= 1 - 1/l"
            )?;
            writeln!(out, "degG,k,goppa_lb,delta,rate,gv_rate,beats_gv")?;
            for row in gv_compare(&cp, &specs) {
                writeln!(
                    out,
                    "{},{},{},{:.6},{:.6},{:.6},{}",
                    row.degree,
                    row.dim,
                    row.goppa_lb,
                    row.delta,
                    row.rate,
                    row.gv_rate,
                    u8::from(row.beats_gv)
                )?;
            }
        }
        Command::Verify { curve: curve_args, seed } => {
            let cp = curve(&curve_args)?;
            let report = run_battery(&cp, seed);
            for section in &report.sections {
                let status = if section.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{}: {} ({})", section.name, status, section.detail)?;
            }
            let all = report.all_passed();
            writeln!(out, "result: {}", if all { "PASS" } else { "FAIL" })?;
            if !all {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

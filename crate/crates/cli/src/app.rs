//! Argument parsing and subcommand dispatch.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use fourcycle::identities::{root_order_checks, verify_identity_suite, IdentityStatus};
use fourcycle::{
    membership, realize, realize_via_criterion, Complex, CriterionContext, CycleMatrix4, Error,
    Regime, Tolerance,
};
use serde_json::json;

use crate::trace::{self, Curve};
use crate::{sample, svg, CliError, EXIT_CONSTRUCTION, EXIT_OK, EXIT_OUTSIDE};

/// Band used by `sample` when `--tol-band` is not given.
pub const SAMPLE_BAND: f64 = 1e-7;

const SAMPLE_HELP: &str = "\
CSV columns:
  seed,index   generator key of the matrix
  a1..a4       self-loop weights, i.i.d. uniform on [0, 1)
  re,im        one eigenvalue (four rows per matrix)
  status       region verdict of the eigenvalue
Floats are written with 17 significant digits.
Exits 3 if any eigenvalue is classified Outside.";

const TRACE_HELP: &str = "\
CSV columns:
  curve   CR (segment 1-x+ix), CL (left curve G = 0) or REAL (segment endpoints)
  param   x on CR, alpha of (alpha, 0, 0, 0) on CL, the real coordinate on REAL
  re,im   the boundary point
  G       G(re, im) = (im^2 + re^2 + re)^2 + 2 re^2 - im^2
Floats are written with 17 significant digits.";

const CHECK_HELP: &str = "\
With --csv the verdict is printed as re,im,status,a_check,right_check,g_check,
where the checks are a, 1 - a - |b| and G(a, |b|).
Exits 3 if the point is Outside.";

#[derive(Debug, Parser)]
#[command(name = "fourcycle", version, about = "Spectral region of 4-cycle stochastic matrices")]
pub struct Cli {
    /// Residual bound for accepting an eigenvalue of a constructed matrix
    #[arg(long, global = true, value_name = "EPS")]
    pub tol_residual: Option<f64>,
    /// Absolute band on constraint values for boundary classification
    #[arg(long, global = true, value_name = "EPS")]
    pub tol_band: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Criterion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveArg {
    #[value(name = "CR", alias = "cr")]
    Cr,
    #[value(name = "CL", alias = "cl")]
    Cl,
    #[value(alias = "REGION")]
    Region,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a point against the region (JSON verdict)
    #[command(allow_negative_numbers = true, after_help = CHECK_HELP)]
    Check {
        re: f64,
        im: f64,
        /// Print a CSV row instead of JSON
        #[arg(long)]
        csv: bool,
    },
    /// Build a 4-cycle matrix having the point as an eigenvalue (JSON)
    #[command(allow_negative_numbers = true)]
    Realize {
        re: f64,
        im: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Eigenvalues of the matrix with self-loops a1..a4 (JSON)
    #[command(allow_negative_numbers = true)]
    Spectrum { a1: f64, a2: f64, a3: f64, a4: f64 },
    /// Eigenvalues of N random matrices as CSV
    #[command(after_help = SAMPLE_HELP)]
    Sample {
        n: u64,
        #[arg(value_name = "SEED")]
        seed_pos: Option<u64>,
        #[arg(value_name = "OUT")]
        out_pos: Option<PathBuf>,
        /// Generator seed (default 0)
        #[arg(long)]
        seed: Option<u64>,
        /// Output file (default stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the boundary curves as CSV, optionally rendering an SVG
    #[command(after_help = TRACE_HELP)]
    Trace {
        #[arg(value_enum)]
        curve: CurveArg,
        n: usize,
        #[arg(value_name = "OUT")]
        out_pos: Option<PathBuf>,
        /// Output file (default stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write an 800x800 SVG of the region built from the same points
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Argument-criterion diagnostics m, M, regime, U, max Psi (JSON)
    #[command(allow_negative_numbers = true)]
    Psi { re: f64, im: f64 },
    /// Check the exact polynomial identity suite
    Verify,
}

fn tolerance(cli: &Cli, default_band: f64) -> Result<Tolerance, CliError> {
    let band = cli.tol_band.unwrap_or(default_band);
    let mut tol = Tolerance::default()
        .with_boundary_band(band)
        .map_err(|e| CliError::usage(e.to_string()))?;
    if let Some(r) = cli.tol_residual {
        tol = tol
            .with_eigen_residual(r)
            .map_err(|e| CliError::usage(e.to_string()))?;
    }
    Ok(tol)
}

fn point(re: f64, im: f64) -> Result<Complex, CliError> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex::new(re, im))
    } else {
        Err(CliError::usage("coordinates must be finite"))
    }
}

fn one_of<T>(pos: Option<T>, flag: Option<T>, name: &str) -> Result<Option<T>, CliError> {
    match (pos, flag) {
        (Some(_), Some(_)) => Err(CliError::usage(format!(
            "{name} given both positionally and as --{name}"
        ))),
        (p, f) => Ok(p.or(f)),
    }
}

fn print_json(out: &mut impl Write, value: &serde_json::Value) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value).expect("JSON value"))
}

/// Writes through `write` into `path`, or into `stdout` when `path` is `None`.
fn emit(
    path: Option<&Path>,
    stdout: &mut impl Write,
    write: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let file = File::create(p)
                .map_err(|e| CliError::new(crate::EXIT_IO, format!("{}: {e}", p.display())))?;
            let mut w = BufWriter::new(file);
            write(&mut w)?;
            w.flush()?;
        }
        None => write(stdout)?,
    }
    Ok(())
}

/// Runs a parsed command, writing results to `stdout` and notes to `stderr`.
/// Returns the exit code for completed runs.
pub fn execute(cli: &Cli, stdout: &mut impl Write, stderr: &mut impl Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Check { re, im, csv } => {
            let tol = tolerance(cli, Tolerance::default().boundary_band())?;
            let lam = point(*re, *im)?;
            let v = membership(lam, &tol);
            if *csv {
                writeln!(stdout, "re,im,status,a_check,right_check,g_check")?;
                writeln!(
                    stdout,
                    "{},{},{},{},{},{}",
                    crate::fmt_f64(lam.re),
                    crate::fmt_f64(lam.im),
                    v.status.as_str(),
                    crate::fmt_f64(v.binding.a),
                    crate::fmt_f64(v.binding.right),
                    crate::fmt_f64(v.binding.g)
                )?;
            } else {
                print_json(
                    stdout,
                    &json!({
                        "re": lam.re,
                        "im": lam.im,
                        "status": v.status.as_str(),
                        "binding": v.binding,
                    }),
                )?;
            }
            Ok(if v.status.is_outside() { EXIT_OUTSIDE } else { EXIT_OK })
        }
        Command::Realize { re, im, method } => {
            let tol = tolerance(cli, Tolerance::default().boundary_band())?;
            let lam = point(*re, *im)?;
            let built = match method {
                MethodArg::Auto => realize(lam, &tol),
                MethodArg::Criterion => realize_via_criterion(lam, &tol),
            };
            match built {
                Ok(r) => {
                    print_json(stdout, &serde_json::to_value(r).expect("realization JSON"))?;
                    Ok(EXIT_OK)
                }
                Err(Error::OutsideRegion) => {
                    writeln!(stderr, "{}", Error::OutsideRegion)?;
                    Ok(EXIT_OUTSIDE)
                }
                Err(e) => Err(CliError::construction(e)),
            }
        }
        Command::Spectrum { a1, a2, a3, a4 } => {
            let tol = tolerance(cli, Tolerance::default().boundary_band())?;
            let matrix =
                CycleMatrix4::new([*a1, *a2, *a3, *a4]).map_err(|e| CliError::usage(e.to_string()))?;
            let spectrum = matrix.spectrum(&tol).map_err(CliError::construction)?;
            let eigenvalues: Vec<[f64; 2]> = spectrum.iter().map(|z| [z.re, z.im]).collect();
            print_json(
                stdout,
                &json!({ "alpha": matrix.alpha(), "eigenvalues": eigenvalues }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Sample {
            n,
            seed_pos,
            out_pos,
            seed,
            out,
        } => {
            let seed = one_of(*seed_pos, *seed, "seed")?.unwrap_or(0);
            let out = one_of(out_pos.clone(), out.clone(), "out")?;
            if *n == 0 {
                return Err(CliError::usage("N must be at least 1"));
            }
            let tol = tolerance(cli, SAMPLE_BAND)?;
            let records = sample::sample_records(*n, seed, &tol).map_err(CliError::construction)?;
            emit(out.as_deref(), stdout, |w| sample::write_csv(&records, w))?;
            writeln!(stderr, "{}", sample::summary_line(*n, &records))?;
            Ok(sample::exit_code(&records))
        }
        Command::Trace {
            curve,
            n,
            out_pos,
            out,
            svg: svg_path,
        } => {
            let out = one_of(out_pos.clone(), out.clone(), "out")?;
            if *n < 2 {
                return Err(CliError::usage("N must be at least 2"));
            }
            let tol = tolerance(cli, Tolerance::default().boundary_band())?;
            let curve = match curve {
                CurveArg::Cr => Curve::Cr,
                CurveArg::Cl => Curve::Cl,
                CurveArg::Region => Curve::Region,
            };
            let rows = trace::rows(curve, *n, &tol).map_err(CliError::construction)?;
            emit(out.as_deref(), stdout, |w| trace::write_csv(&rows, w))?;
            if let Some(path) = svg_path {
                // the drawing always needs both curves
                let region = if curve == Curve::Region {
                    rows
                } else {
                    trace::rows(Curve::Region, *n, &tol).map_err(CliError::construction)?
                };
                let doc = svg::render(&region);
                emit(Some(path), stdout, |w| w.write_all(doc.as_bytes()))?;
            }
            Ok(EXIT_OK)
        }
        Command::Psi { re, im } => {
            let lam = point(*re, *im)?;
            let conjugated = lam.im < 0.0;
            let upper = if conjugated { lam.conj() } else { lam };
            let ctx = CriterionContext::new(upper).map_err(|e| CliError::usage(e.to_string()))?;
            let max_psi = match ctx.regime() {
                Regime::Tight => json!(ctx.max_psi()),
                Regime::Unbounded => serde_json::Value::Null,
            };
            print_json(
                stdout,
                &json!({
                    "re": upper.re,
                    "im": upper.im,
                    "conjugated": conjugated,
                    "m": ctx.m(),
                    "M": ctx.big_m(),
                    "regime": ctx.regime(),
                    "U": ctx.u_max(),
                    "maxPsi": max_psi,
                    "maxPsiClosedForm": ctx.max_psi_closed_form(),
                }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify => {
            let mut failed = false;
            writeln!(stdout, "{:<4} {:<14} description", "id", "status")?;
            for report in verify_identity_suite() {
                let status = match &report.status {
                    IdentityStatus::ZeroPolynomial => "ZeroPolynomial".to_string(),
                    IdentityStatus::Failed(_) => {
                        failed = true;
                        "Failed".to_string()
                    }
                };
                writeln!(stdout, "{:<4} {:<14} {}", report.id, status, report.description)?;
                if let IdentityStatus::Failed(residual) = &report.status {
                    writeln!(stdout, "     residual: {residual}")?;
                }
            }
            writeln!(stdout)?;
            writeln!(stdout, "{:<6} {:<10} {:<10}", "a", "s->3a^2", "s->s0")?;
            for check in root_order_checks() {
                failed |= !(check.above_three_a_sq && check.above_n_root);
                writeln!(
                    stdout,
                    "{:<6} {:<10} {:<10}",
                    check.a.to_string(),
                    check.above_three_a_sq,
                    check.above_n_root
                )?;
            }
            Ok(if failed { EXIT_CONSTRUCTION } else { EXIT_OK })
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { crate::EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = match execute(&cli, &mut out, &mut err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    };
    match out.flush() {
        Ok(()) => code,
        Err(_) => crate::EXIT_IO,
    }
}

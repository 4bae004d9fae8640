//! Command-line front end: text parsing, argument handling and command
//! execution for the `laspa` binary.
//!
//! Coefficient lists are given constant term first: `"24,-50,35,-10,1"`
//! is `24 - 50z + 35z^2 - 10z^3 + z^4`.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use laspa_core::{
    a_priori_radius_bound, convergence_radius, find_all_roots, render_basins, viz, Complex64,
    ConvergenceDisk, Error as CoreError, Polynomial, RasterConfig, RootEstimate, RootSet,
    SolveConfig,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at entry {index}: {token:?}")]
pub struct ParseError {
    /// 1-based position of the offending entry.
    pub index: usize,
    pub token: String,
}

fn parse_real(s: &str) -> Option<f64> {
    // reject spellings like "inf" and "nan" that f64::from_str accepts
    if !s
        .bytes()
        .all(|b| b.is_ascii_digit() || b"+-.eE".contains(&b))
    {
        return None;
    }
    s.parse::<f64>().ok().filter(|x| x.is_finite())
}

fn parse_entry(entry: &str) -> Option<Complex64> {
    let Some(body) = entry.strip_suffix('i') else {
        return parse_real(entry).map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))?;
    let re = parse_real(&body[..split])?;
    let im_text = &body[split..];
    if im_text.len() < 2 {
        return None;
    }
    let im = parse_real(im_text)?;
    Some(Complex64::new(re, im))
}

/// Parses `"a"` or `"a+bi"` / `"a-bi"` entries separated by commas.
pub fn parse_complex(text: &str) -> Result<Complex64, ParseError> {
    parse_entry(text).ok_or_else(|| ParseError {
        index: 1,
        token: text.to_string(),
    })
}

pub fn parse_complex_list(text: &str) -> Result<Vec<Complex64>, ParseError> {
    text.split(',')
        .enumerate()
        .map(|(i, entry)| {
            parse_entry(entry).ok_or_else(|| ParseError {
                index: i + 1,
                token: entry.to_string(),
            })
        })
        .collect()
}

/// Inverse of [`parse_complex_list`]; uses shortest round-trip formatting.
pub fn format_complex_list(xs: &[Complex64]) -> String {
    xs.iter()
        .map(|z| {
            let sign = if z.im.is_sign_negative() { '-' } else { '+' };
            format!("{:e}{sign}{:e}i", z.re, z.im.abs())
        })
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Parser)]
#[command(
    name = "laspa",
    version,
    about = "Certified Laguerre polynomial rootfinding"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Find all roots; prints "re im residual certified" per root.
    Solve {
        #[command(flatten)]
        input: PolyInput,
        /// Relative residual tolerance for the Laguerre iteration.
        #[arg(long)]
        tol: Option<f64>,
        /// Maximum Laguerre steps per root.
        #[arg(long = "max-iter")]
        max_iter: Option<usize>,
        /// Power-sum order used for seeding.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Convergence disk radius for every root, then the a priori bound.
    Radius {
        #[command(flatten)]
        input: PolyInput,
    },
    /// Render a basin-of-attraction image as binary PPM.
    Render {
        /// Roots as a comma-separated complex list.
        #[arg(long, allow_hyphen_values = true)]
        roots: String,
        #[arg(long, default_value = "0+0i", allow_hyphen_values = true)]
        center: String,
        #[arg(long, default_value_t = 4.0)]
        side: f64,
        #[arg(long, default_value_t = 256)]
        px: usize,
        #[arg(long = "max-iter", default_value_t = 64)]
        max_iter: usize,
        #[arg(long)]
        out: PathBuf,
        /// Optional sidecar file with per-root pixel counts.
        #[arg(long)]
        stats: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PolyInput {
    /// Coefficients, constant term first, e.g. "24,-50,35,-10,1".
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// Roots; the polynomial is their monic product.
    #[arg(long, allow_hyphen_values = true)]
    pub roots: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PolySource {
    Coeffs(Vec<Complex64>),
    Roots(Vec<Complex64>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Solve {
        input: PolySource,
        cfg: SolveConfig,
    },
    Radius {
        input: PolySource,
    },
    Render {
        roots: Vec<Complex64>,
        raster: RasterConfig,
        out_path: PathBuf,
        stats_path: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Numeric(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Numeric(_) | CliError::Io(_) => 1,
        }
    }
}

fn numeric(e: impl ToString) -> CliError {
    CliError::Numeric(e.to_string())
}

fn poly_source(input: PolyInput) -> Result<PolySource, ParseError> {
    match (input.coeffs, input.roots) {
        (Some(c), _) => parse_complex_list(&c).map(PolySource::Coeffs),
        (None, Some(r)) => parse_complex_list(&r).map(PolySource::Roots),
        (None, None) => Err(ParseError {
            index: 0,
            token: String::new(),
        }),
    }
}

impl Command {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        Ok(match cli.command {
            CliCommand::Solve {
                input,
                tol,
                max_iter,
                order,
            } => {
                let mut cfg = SolveConfig::default();
                if let Some(tol) = tol {
                    cfg.iteration.residual_tol = tol;
                }
                if let Some(m) = max_iter {
                    cfg.iteration.max_iters = m;
                }
                if let Some(order) = order {
                    cfg.spa.order = order;
                }
                Command::Solve {
                    input: poly_source(input)?,
                    cfg,
                }
            }
            CliCommand::Radius { input } => Command::Radius {
                input: poly_source(input)?,
            },
            CliCommand::Render {
                roots,
                center,
                side,
                px,
                max_iter,
                out,
                stats,
            } => Command::Render {
                roots: parse_complex_list(&roots)?,
                raster: RasterConfig::new(parse_complex(&center)?, side, px, max_iter)
                    .map_err(numeric)?,
                out_path: out,
                stats_path: stats,
            },
        })
    }
}

fn build_polynomial(input: &PolySource) -> Result<Polynomial, CliError> {
    match input {
        PolySource::Coeffs(c) => Polynomial::new(c.clone()),
        PolySource::Roots(r) => Polynomial::from_roots(r, Complex64::new(1.0, 0.0)),
    }
    .map_err(numeric)
}

fn write_roots(out: &mut impl Write, roots: &[RootEstimate]) -> io::Result<()> {
    for r in roots {
        writeln!(
            out,
            "{:.16e} {:.16e} {:.16e} {}",
            r.value.re + 0.0,
            r.value.im + 0.0,
            r.residual,
            r.certified
        )?;
    }
    Ok(())
}

fn execute(cmd: &Command, out: &mut impl Write, err: &mut impl Write) -> Result<(), CliError> {
    match cmd {
        Command::Solve { input, cfg } => {
            let p = build_polynomial(input)?;
            match find_all_roots(&p, cfg) {
                Ok(roots) => write_roots(out, &roots)?,
                Err(failure) => {
                    write_roots(out, &failure.partial)?;
                    return Err(numeric(failure));
                }
            }
        }
        Command::Radius { input } => {
            let p = build_polynomial(input)?;
            if p.degree() < 4 {
                return Err(CliError::Numeric("degree must exceed 3".into()));
            }
            let roots = find_all_roots(&p, &SolveConfig::default()).map_err(numeric)?;
            for r in &roots {
                let disk = convergence_radius(&p, r.value).map_err(numeric)?;
                // adding 0.0 turns -0.0 into 0.0
                let (re, im) = (r.value.re + 0.0, r.value.im + 0.0);
                writeln!(out, "{re:.16e} {im:.16e} {:.16e}", disk.radius)?;
            }
            let bound = a_priori_radius_bound(&p).map_err(numeric)?;
            writeln!(out, "apriori {bound:.16e}")?;
        }
        Command::Render {
            roots,
            raster,
            out_path,
            stats_path,
        } => {
            let rs = RootSet::new(roots.clone()).map_err(numeric)?;
            let disks = render_disks(&rs, err)?;
            let img = render_basins(&rs, &disks, raster);
            let mut file = BufWriter::new(File::create(out_path)?);
            viz::write_ppm(&img, rs.len(), &mut file)?;
            if let Some(path) = stats_path {
                viz::write_stats(&img, rs.len(), BufWriter::new(File::create(path)?))?;
            }
            writeln!(
                out,
                "wrote {} {}x{}",
                out_path.display(),
                raster.px,
                raster.px
            )?;
        }
    }
    Ok(())
}

/// Convergence disks for degree >= 4; otherwise (or if any root fails the
/// simple-root check) an empty list, which selects proximity stopping.
fn render_disks(rs: &RootSet, err: &mut impl Write) -> Result<Vec<ConvergenceDisk>, CliError> {
    if rs.len() < 4 {
        return Ok(Vec::new());
    }
    let p = Polynomial::from_roots(rs.roots(), Complex64::new(1.0, 0.0)).map_err(numeric)?;
    let disks: Result<Vec<_>, CoreError> = rs
        .roots()
        .iter()
        .map(|&r| convergence_radius(&p, r))
        .collect();
    match disks {
        Ok(d) => Ok(d),
        Err(e) => {
            writeln!(err, "warning: {e}; using proximity stopping")?;
            Ok(Vec::new())
        }
    }
}

/// Runs a parsed command, writing results to `out` and diagnostics to
/// `err`. Returns the process exit status.
pub fn run_command(cmd: &Command, out: &mut impl Write, err: &mut impl Write) -> i32 {
    match execute(cmd, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run(
    args: impl IntoIterator<Item = String>,
    out: &mut impl Write,
    err: &mut impl Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match Command::from_cli(cli) {
        Ok(cmd) => run_command(&cmd, out, err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn parses_real_and_complex_entries() {
        assert_eq!(
            parse_complex_list("24,-50,35,-10,1").unwrap(),
            [24.0, -50.0, 35.0, -10.0, 1.0].map(|x| c(x, 0.0)).to_vec()
        );
        assert_eq!(
            parse_complex_list("1,0+1i,-1,0-1i").unwrap(),
            vec![c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)]
        );
        assert_eq!(
            parse_complex_list("1.5e-3-2E+2i,-3e1+4.25i").unwrap(),
            vec![c(1.5e-3, -200.0), c(-30.0, 4.25)]
        );
    }

    #[test]
    fn parse_errors_carry_entry_index() {
        let e = parse_complex_list("1,,2").unwrap_err();
        assert_eq!(e.index, 2);
        assert_eq!(e.token, "");
        for bad in ["1 + 2i", "abc", "1+i", "inf", "nan", "1+2", "1e", "2i"] {
            assert!(parse_complex_list(bad).is_err(), "{bad}");
        }
        assert_eq!(parse_complex_list("1,2,x").unwrap_err().index, 3);
    }

    #[test]
    fn format_then_parse_is_identity_on_samples() {
        let xs = vec![c(0.1, -0.0), c(-1e-300, 2.5e10), c(3.0, -4.0)];
        assert_eq!(parse_complex_list(&format_complex_list(&xs)).unwrap(), xs);
    }
}

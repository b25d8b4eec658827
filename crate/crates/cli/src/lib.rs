//! `dce` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error (bad flags or out-of-domain
//! arguments), 2 computation or output failure.

pub mod args;
pub mod config;
pub mod emit;

use std::f64::consts::PI;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::Parser;

use dce_core::genform::validate_delta_approx;
use dce_core::quadrature::{creation_rate_for, rate_ratio_with};
use dce_core::spectrum::{resonance_zeta_with, rho_with, spectrum_grid};
use dce_core::sweep::{classify, linspace, maximize_over_zeta_with, sweep_grid_with, Quantity};
use dce_core::{CircuitParams, Error, QuadratureConfig, ReferencePoint};

use args::{Cli, Command, Common, FormatArg, QuantityArg};
use emit::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;

/// Environment variable capping sweep parallelism.
pub const THREADS_ENV: &str = "DCE_THREADS";

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Profile(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

fn ghz_to_rad(f_ghz: f64) -> f64 {
    2.0 * PI * f_ghz * 1e9
}

impl Common {
    fn quadrature(&self) -> Result<QuadratureConfig, Failure> {
        let mut cfg = QuadratureConfig::default();
        if let Some(v) = self.rel_tol {
            cfg.rel_tol = v;
        }
        if let Some(v) = self.abs_tol {
            cfg.abs_tol = v;
        }
        if let Some(v) = self.max_subdivisions {
            cfg.max_subdivisions = v;
        }
        cfg.check()?;
        Ok(cfg)
    }

    fn reference(&self) -> ReferencePoint {
        let mut r = ReferencePoint::WILSON;
        if let Some(v) = self.ref_gamma0 {
            r.gamma0 = v;
        }
        if let Some(v) = self.ref_alpha0 {
            r.alpha0 = v;
        }
        if let Some(v) = self.ref_f0_ghz {
            r.omega0 = ghz_to_rad(v);
        }
        if let Some(v) = self.ref_v {
            r.v = v;
        }
        if let Some(v) = self.epsilon {
            r.epsilon = v;
        }
        r
    }

    fn checked_reference(&self) -> Result<ReferencePoint, Failure> {
        let r = self.reference();
        let report = r.as_params().validate();
        match report.violations.first() {
            Some(v) => Err(Failure::Usage(format!("invalid reference: {v}"))),
            None => Ok(r),
        }
    }

    fn format(&self) -> Option<Format> {
        self.format.map(|f| match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        })
    }
}

fn quantity(q: QuantityArg) -> Quantity {
    match q {
        QuantityArg::Rho => Quantity::Rho,
        QuantityArg::RateRatio => Quantity::RateRatio,
    }
}

fn threads() -> Result<Option<usize>, Failure> {
    match std::env::var(THREADS_ENV) {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Failure::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got `{s}`"
            ))),
        },
        Err(_) => Ok(None),
    }
}

fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Runs one command and returns the text to emit plus the sink.
fn execute(cli: Cli) -> Result<(String, Common), Failure> {
    let out = match cli.command {
        Command::Spectrum {
            point,
            points,
            common,
        } => {
            let r = common.checked_reference()?;
            let groups = r.groups(point.xi, point.zeta)?;
            let s = spectrum_grid(&groups, r.epsilon, points)?;
            (
                emit::spectrum(&s, common.format().unwrap_or(Format::Csv)),
                common,
            )
        }
        Command::Rate {
            point,
            absolute,
            common,
        } => {
            let r = common.checked_reference()?;
            let cfg = common.quadrature()?;
            let groups = r.groups(point.xi, point.zeta)?;
            let rate = creation_rate_for(&groups, r.epsilon, r.omega0, &cfg)?;
            let ratio = rate_ratio_with(&r, point.xi, point.zeta, &cfg)?;
            let mut fields = vec![
                ("rate_ratio", ratio),
                ("rate_per_second", rate.per_second),
                ("band_integral", rate.band_integral.value),
                ("error_estimate", rate.band_integral.error_estimate),
                ("xi", point.xi),
                ("zeta", point.zeta),
            ];
            if absolute {
                fields.swap(0, 1);
            }
            (emit::scalars(&fields, common.format()), common)
        }
        Command::Rho { point, common } => {
            let r = common.checked_reference()?;
            let value = rho_with(&r, point.xi, point.zeta)?;
            let fields = [("rho", value), ("xi", point.xi), ("zeta", point.zeta)];
            (emit::scalars(&fields, common.format()), common)
        }
        Command::Sweep {
            xi_min,
            xi_max,
            xi_points,
            zeta_min,
            zeta_max,
            zeta_points,
            quantity: q,
            common,
        } => {
            if xi_points == 0 || zeta_points == 0 {
                return Err(Failure::Usage("grid sizes must be at least 1".into()));
            }
            let r = common.checked_reference()?;
            let cfg = common.quadrature()?;
            let xi = linspace(xi_min, xi_max, xi_points);
            let zeta = linspace(zeta_min, zeta_max, zeta_points);
            let mut result = sweep_grid_with(&r, &xi, &zeta, quantity(q), &cfg, threads()?)?;
            if !common.no_timestamp {
                result.metadata.generated_at = Some(now());
            }
            (
                emit::sweep(&result, common.format().unwrap_or(Format::Json)),
                common,
            )
        }
        Command::Maximize {
            xi,
            quantity: q,
            zeta_lo,
            zeta_hi,
            common,
        } => {
            let r = common.checked_reference()?;
            let cfg = common.quadrature()?;
            let (lo, hi) = match (zeta_lo, zeta_hi) {
                (Some(lo), Some(hi)) => (lo, hi),
                (lo, hi) => {
                    let star = resonance_zeta_with(&r, xi)?;
                    (lo.unwrap_or(0.5 * star), hi.unwrap_or(1.5 * star))
                }
            };
            let q = quantity(q);
            let m = maximize_over_zeta_with(&r, xi, (lo, hi), q, &cfg)?;
            (
                emit::maximum(xi, q.as_str(), &m, common.format().unwrap_or(Format::Csv)),
                common,
            )
        }
        Command::Classify {
            point,
            points,
            sharp_fwhm,
            common,
        } => {
            if points < 201 {
                return Err(Failure::Usage(format!(
                    "--points must be at least 201, got {points}"
                )));
            }
            let r = common.checked_reference()?;
            let groups = r.groups(point.xi, point.zeta)?;
            let report = classify(&spectrum_grid(&groups, r.epsilon, points)?, sharp_fwhm)?;
            (
                emit::peaks(&report, common.format().unwrap_or(Format::Json)),
                common,
            )
        }
        Command::ValidateDelta {
            point,
            omega0_tau,
            probes,
            tol,
            common,
        } => {
            let r = common.checked_reference()?;
            let cfg = common.quadrature()?;
            let groups = r.groups(point.xi, point.zeta)?;
            let report = validate_delta_approx(&groups, r.epsilon, omega0_tau, &probes, tol, &cfg)?;
            (
                emit::delta(&report, common.format().unwrap_or(Format::Json)),
                common,
            )
        }
        Command::ValidateParams {
            point,
            gamma0,
            alpha0,
            f0_ghz,
            v,
            common,
        } => {
            let r = common.reference();
            let mut p = CircuitParams::from_dimensionless(point.xi, point.zeta, &r)?;
            if let Some(x) = gamma0 {
                p.gamma0 = x;
            }
            if let Some(x) = alpha0 {
                p.alpha0 = x;
            }
            if let Some(x) = f0_ghz {
                p.omega0 = ghz_to_rad(x);
            }
            if let Some(x) = v {
                p.v = x;
            }
            let report = p.validate();
            (
                emit::validation(&p, &report, common.format().unwrap_or(Format::Json)),
                common,
            )
        }
    };
    Ok(out)
}

fn write_output(text: &str, common: &Common, stdout: &mut dyn Write) -> std::io::Result<()> {
    match &common.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            w.write_all(text.as_bytes())?;
            w.flush()
        }
        None => {
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code.
pub fn run<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let argv = match config::expand(&argv) {
        Ok(a) => a,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if code == EXIT_OK {
                let _ = write!(stdout, "{e}");
            } else {
                let _ = write!(stderr, "{}", e.render());
            }
            return code;
        }
    };
    match execute(cli) {
        Ok((text, common)) => match write_output(&text, &common, stdout) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                EXIT_COMPUTE
            }
        },
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            let _ = writeln!(
                stderr,
                "\nUsage: dce <COMMAND> [OPTIONS]\nTry 'dce --help' for more information."
            );
            EXIT_USAGE
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_COMPUTE
        }
    }
}

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "dce",
    version,
    about = "Dynamical Casimir photon spectra and creation rates for a SQUID-terminated line",
    args_override_self = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the closed-form spectrum N(omega/omega0) on [0, 1].
    Spectrum {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 2001)]
        points: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Photon creation rate; prints R(xi, zeta)/R(1, 1) by default.
    Rate {
        #[command(flatten)]
        point: Point,
        /// Print the rate in photons per second instead of the ratio.
        #[arg(long)]
        absolute: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Enhancement rho(xi, zeta) of N at half the drive frequency.
    Rho {
        #[command(flatten)]
        point: Point,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate rho or rate_ratio on a (xi, zeta) grid.
    Sweep {
        #[arg(long, default_value_t = 0.5)]
        xi_min: f64,
        #[arg(long, default_value_t = 1.5)]
        xi_max: f64,
        #[arg(long, default_value_t = 50)]
        xi_points: usize,
        #[arg(long, default_value_t = 0.0)]
        zeta_min: f64,
        #[arg(long, default_value_t = 120.0)]
        zeta_max: f64,
        #[arg(long, default_value_t = 121)]
        zeta_points: usize,
        #[arg(long, value_enum, default_value_t = QuantityArg::Rho)]
        quantity: QuantityArg,
        #[command(flatten)]
        common: Common,
    },
    /// Golden-section maximization over zeta at fixed xi.
    Maximize {
        #[arg(long)]
        xi: f64,
        #[arg(long, value_enum, default_value_t = QuantityArg::Rho)]
        quantity: QuantityArg,
        /// Lower end of the zeta bracket (default: half the resonance zeta).
        #[arg(long)]
        zeta_lo: Option<f64>,
        /// Upper end of the zeta bracket (default: 1.5x the resonance zeta).
        #[arg(long)]
        zeta_hi: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Count peaks and classify the spectrum shape.
    Classify {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 2001)]
        points: usize,
        /// FWHM (in omega/omega0) below which a single peak is a sharp resonance.
        #[arg(long, default_value_t = dce_core::sweep::SHARP_FWHM)]
        sharp_fwhm: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the general drive integral with the closed form.
    ValidateDelta {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 5000.0)]
        omega0_tau: f64,
        /// Comma-separated probe frequencies omega/omega0.
        #[arg(long, value_delimiter = ',', default_value = "0.25,0.5,0.75")]
        probes: Vec<f64>,
        #[arg(long, default_value_t = 0.02)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Check a physical parameter set; raw values override (xi, zeta).
    ValidateParams {
        #[command(flatten)]
        point: Point,
        /// Robin length gamma0 in metres.
        #[arg(long, allow_negative_numbers = true)]
        gamma0: Option<f64>,
        /// alpha0 in s^2/m.
        #[arg(long, allow_negative_numbers = true)]
        alpha0: Option<f64>,
        /// Drive frequency in GHz (ordinary frequency).
        #[arg(long, allow_negative_numbers = true)]
        f0_ghz: Option<f64>,
        /// Line velocity in m/s.
        #[arg(long, allow_negative_numbers = true)]
        v: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Point {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub xi: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub zeta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QuantityArg {
    Rho,
    #[value(name = "rate_ratio", alias = "rate-ratio")]
    RateRatio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Write results here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// key=value file providing defaults for any flag.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub rel_tol: Option<f64>,
    #[arg(long)]
    pub abs_tol: Option<f64>,
    #[arg(long)]
    pub max_subdivisions: Option<usize>,
    /// Omit the generation timestamp from sweep metadata.
    #[arg(long)]
    pub no_timestamp: bool,
    /// Modulation depth (overrides the reference epsilon).
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Expert: reference gamma0 in metres.
    #[arg(long, allow_negative_numbers = true)]
    pub ref_gamma0: Option<f64>,
    /// Expert: reference alpha0 in s^2/m.
    #[arg(long)]
    pub ref_alpha0: Option<f64>,
    /// Expert: reference drive frequency in GHz.
    #[arg(long)]
    pub ref_f0_ghz: Option<f64>,
    /// Expert: reference line velocity in m/s.
    #[arg(long)]
    pub ref_v: Option<f64>,
}

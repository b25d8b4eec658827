//! General first-order spectrum for an arbitrary drive `f(t)`, and a check of
//! the long-drive (Dirac-delta) limit that produces [`crate::spectrum`].
//!
//! For a drive with Fourier transform `F(ω) = ∫ f(t) e^{iωt} dt`,
//!
//! ```text
//! N(ω) = (2ε²γ₀²/πv²) · ω/D(ω) · ∫₀^∞ (dω'/2π) ω' |F(ω+ω')|² / D(ω')
//! D(ω) = (1 + γ₀α₀ω²)² + γ₀²ω²/v²
//! ```
//!
//! `N` is a photon number per unit angular frequency (units of s). For the
//! damped cosine `cos(ω₀t)e^{−|t|/τ}` with `ω₀τ ≫ 1`, `N/τ` tends to the
//! closed-form density.

use std::f64::consts::PI;
use std::io::Read;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::{CircuitParams, DimensionlessGroups, ReferencePoint};
use crate::quadrature::{integrate_adaptive_with_breaks, QuadratureConfig};
use crate::spectrum::spectral_density;

/// Harmonic-damped drives are integrated over `|t| ≤ SUPPORT_TAUS·τ`.
pub const SUPPORT_TAUS: f64 = 20.0;

/// End samples of a tabulated drive must be below this fraction of `max|f|`.
pub const END_DECAY: f64 = 1e-3;

/// Smallest `ω₀τ` accepted by [`validate_delta_approx`].
pub const MIN_OMEGA0_TAU: f64 = 10.0;

/// Sampled drive, linearly interpolated between samples and zero outside.
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedProfile {
    times: Vec<f64>,
    values: Vec<f64>,
}

impl TabulatedProfile {
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if times.len() != values.len() {
            return Err(Error::Profile(format!(
                "{} times but {} values",
                times.len(),
                values.len()
            )));
        }
        if times.len() < 2 {
            return Err(Error::Profile("need at least two samples".into()));
        }
        if let Some(i) = times.iter().chain(&values).position(|x| !x.is_finite()) {
            return Err(Error::Profile(format!("non-finite entry at position {i}")));
        }
        if let Some(i) = times.windows(2).position(|w| !(w[1] > w[0])) {
            return Err(Error::Profile(format!(
                "sample times must be strictly increasing (row {})",
                i + 2
            )));
        }
        let peak = values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        if peak >= 1.0 {
            return Err(Error::Profile(format!(
                "|f| must stay below 1, found {peak}"
            )));
        }
        let first = values[0].abs();
        let last = values[values.len() - 1].abs();
        if peak > 0.0 && (first >= END_DECAY * peak || last >= END_DECAY * peak) {
            return Err(Error::Profile(format!(
                "drive must decay at both ends (|f| < {END_DECAY}·max|f|), got {first} and {last}"
            )));
        }
        Ok(TabulatedProfile { times, values })
    }

    /// Reads a two-column CSV `time_s,f` with a mandatory header row.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = rdr
            .headers()
            .map_err(|e| Error::Profile(e.to_string()))?
            .clone();
        if headers.len() != 2 || &headers[0] != "time_s" || &headers[1] != "f" {
            return Err(Error::Profile(format!(
                "expected header `time_s,f`, got `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut times = Vec::new();
        let mut values = Vec::new();
        for (row, record) in rdr.records().enumerate() {
            let record = record.map_err(|e| Error::Profile(e.to_string()))?;
            let parse = |i: usize| -> Result<f64> {
                record[i]
                    .parse::<f64>()
                    .map_err(|e| Error::Profile(format!("row {}: `{}`: {e}", row + 2, &record[i])))
            };
            times.push(parse(0)?);
            values.push(parse(1)?);
        }
        Self::new(times, values)
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value_at(&self, t: f64) -> f64 {
        let n = self.times.len();
        if t < self.times[0] || t > self.times[n - 1] {
            return 0.0;
        }
        let i = self.times.partition_point(|&x| x <= t).clamp(1, n - 1);
        let (t0, t1) = (self.times[i - 1], self.times[i]);
        let (f0, f1) = (self.values[i - 1], self.values[i]);
        f0 + (f1 - f0) * (t - t0) / (t1 - t0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum DriveProfile {
    /// `f(t) = cos(ω₀t)·e^{−|t|/τ}`.
    HarmonicDamped {
        omega0: f64,
        tau: f64,
    },
    Tabulated(TabulatedProfile),
}

impl DriveProfile {
    pub fn harmonic_damped(omega0: f64, tau: f64) -> Result<Self> {
        if !(omega0 > 0.0 && omega0.is_finite()) {
            return Err(Error::domain(format!(
                "omega0 must be positive, got {omega0}"
            )));
        }
        if !(tau > 0.0 && tau.is_finite()) {
            return Err(Error::domain(format!("tau must be positive, got {tau}")));
        }
        Ok(DriveProfile::HarmonicDamped { omega0, tau })
    }

    pub fn value_at(&self, t: f64) -> f64 {
        match self {
            DriveProfile::HarmonicDamped { omega0, tau } => {
                (omega0 * t).cos() * (-t.abs() / tau).exp()
            }
            DriveProfile::Tabulated(tab) => tab.value_at(t),
        }
    }

    /// Time interval outside which the drive is treated as zero.
    pub fn support(&self) -> (f64, f64) {
        match self {
            DriveProfile::HarmonicDamped { tau, .. } => (-SUPPORT_TAUS * tau, SUPPORT_TAUS * tau),
            DriveProfile::Tabulated(tab) => (tab.times[0], tab.times[tab.times.len() - 1]),
        }
    }

    /// Characteristic duration: `τ` for the damped cosine, half the sampled
    /// span for tabulated drives.
    pub fn time_scale(&self) -> f64 {
        match self {
            DriveProfile::HarmonicDamped { tau, .. } => *tau,
            DriveProfile::Tabulated(_) => {
                let (a, b) = self.support();
                0.5 * (b - a)
            }
        }
    }

    /// Points where the drive is not smooth; quadrature panels must not
    /// straddle them.
    fn kinks(&self) -> Vec<f64> {
        match self {
            DriveProfile::HarmonicDamped { .. } => {
                let (a, b) = self.support();
                vec![a, 0.0, b]
            }
            DriveProfile::Tabulated(tab) => tab.times.clone(),
        }
    }

    /// Highest angular frequency present in the drive itself.
    fn intrinsic_frequency(&self) -> f64 {
        match self {
            DriveProfile::HarmonicDamped { omega0, .. } => *omega0,
            DriveProfile::Tabulated(_) => 0.0,
        }
    }
}

/// Closed-form transform of the damped cosine: a Lorentzian pair at `±ω₀`.
pub fn drive_ft_analytic(profile: &DriveProfile, omega: f64) -> Result<f64> {
    match profile {
        DriveProfile::HarmonicDamped { omega0, tau } => Ok(lorentzian_pair(omega, *omega0, *tau)),
        DriveProfile::Tabulated(_) => Err(Error::domain(
            "analytic transform exists only for the harmonic-damped drive",
        )),
    }
}

fn lorentzian_pair(omega: f64, omega0: f64, tau: f64) -> f64 {
    let lo = (omega - omega0) * tau;
    let hi = (omega + omega0) * tau;
    tau / (1.0 + lo * lo) + tau / (1.0 + hi * hi)
}

const MAX_REFINEMENTS: u32 = 12;

/// Composite 10-point Gauss–Legendre rule on `n` equal panels of `[a, b]`.
fn composite_panels<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64, n: usize) -> Complex64 {
    const X: [f64; 5] = [
        0.148_874_338_981_631_210_884_826_001_129_720,
        0.433_395_394_129_247_190_799_265_943_165_784,
        0.679_409_568_299_024_406_234_327_365_114_874,
        0.865_063_366_688_984_510_732_096_688_423_493,
        0.973_906_528_517_171_720_077_964_012_084_452,
    ];
    const W: [f64; 5] = [
        0.295_524_224_714_752_870_173_892_994_651_338,
        0.269_266_719_309_996_355_091_226_921_569_469,
        0.219_086_362_515_982_043_995_534_934_228_163,
        0.149_451_349_150_580_593_145_776_339_657_697,
        0.066_671_344_308_688_137_593_568_809_893_332,
    ];
    let h = (b - a) / n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let c = a + (k as f64 + 0.5) * h;
        let r = 0.5 * h;
        for j in 0..5 {
            sum += W[j] * (f(c - r * X[j]) + f(c + r * X[j])) * r;
        }
    }
    sum
}

/// `∫ f(t)·e^{iωt} dt` over the profile's support by composite quadrature.
///
/// Panels are sized to a quarter of the fastest oscillation and the panel
/// count is doubled until successive estimates agree to
/// `max(rel_tol·|F|, abs_tol·time_scale)`.
pub fn drive_ft_numeric(
    profile: &DriveProfile,
    omega: f64,
    cfg: &QuadratureConfig,
) -> Result<Complex64> {
    cfg.check()?;
    if !omega.is_finite() {
        return Err(Error::domain(format!("omega must be finite, got {omega}")));
    }
    let integrand = |t: f64| {
        let (s, c) = (omega * t).sin_cos();
        profile.value_at(t) * Complex64::new(c, s)
    };
    let fastest = omega.abs() + profile.intrinsic_frequency();
    let quarter_period = if fastest > 0.0 {
        0.5 * PI / fastest
    } else {
        f64::INFINITY
    };
    let kinks = profile.kinks();
    let segments: Vec<(f64, f64, usize)> = kinks
        .windows(2)
        .map(|w| {
            let n = ((w[1] - w[0]) / quarter_period).ceil().max(1.0) as usize;
            (w[0], w[1], n)
        })
        .collect();
    let estimate = |level: u32| -> Complex64 {
        segments
            .iter()
            .map(|&(a, b, n)| composite_panels(&integrand, a, b, n << level))
            .sum()
    };

    let floor = cfg.abs_tol * profile.time_scale();
    let mut previous = estimate(0);
    for level in 1..=MAX_REFINEMENTS {
        let current = estimate(level);
        let change = (current - previous).norm();
        if !current.re.is_finite() || !current.im.is_finite() {
            return Err(Error::NonFinite {
                at: omega,
                value: current.norm(),
            });
        }
        if change <= (cfg.rel_tol * current.norm()).max(floor) {
            return Ok(current);
        }
        previous = current;
    }
    Err(Error::NotConverged {
        value: previous.norm(),
        error: f64::NAN,
        subdivisions: segments.iter().map(|s| s.2 << MAX_REFINEMENTS).sum(),
    })
}

/// Evaluates the general spectrum `N(ω)` (units of s) for drive `profile`.
///
/// The harmonic-damped transform is taken in closed form; tabulated drives are
/// transformed numerically at every inner quadrature node. The inner integral
/// is truncated at `ω' = 5ω_s + 50/T`, where `ω_s` is the drive carrier (or
/// `params.omega0` for tabulated drives) and `T` the profile's time scale.
pub fn spectral_density_general(
    omega: f64,
    params: &CircuitParams,
    profile: &DriveProfile,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(Error::domain(format!(
            "omega must be positive, got {omega}"
        )));
    }
    let scale = match profile {
        DriveProfile::HarmonicDamped { omega0, .. } => *omega0,
        DriveProfile::Tabulated(_) => params.omega0,
    };
    let duration = profile.time_scale();
    let width = scale * duration;
    let omega_frac = omega / scale;

    // Work in x = ω'/scale with the response written in the same units.
    let a = params.gamma0 * params.alpha0 * scale * scale;
    let g = params.gamma0 * scale / params.v;
    let response = |x: f64| {
        let re = 1.0 + a * x * x;
        re * re + g * g * x * x
    };
    let transform_sq = |x: f64| -> Result<f64> {
        let w = scale * (omega_frac + x);
        let f = match profile {
            DriveProfile::HarmonicDamped { .. } => drive_ft_analytic(profile, w)?,
            DriveProfile::Tabulated(_) => drive_ft_numeric(profile, w, cfg)?.norm(),
        } / duration;
        Ok(f * f)
    };

    let cutoff = 5.0 + 50.0 / width;
    let mut breaks = Vec::new();
    for centre in [(omega_frac - 1.0).abs(), omega_frac + 1.0] {
        breaks.push(centre);
        for k in [1.0, 10.0, 100.0] {
            breaks.push(centre - k / width);
            breaks.push(centre + k / width);
        }
    }
    if a < 0.0 {
        let root = (-1.0 / a).sqrt();
        breaks.push(root);
        for k in [1.0, 3.0, 10.0] {
            breaks.push(root - k * g.abs() * root);
            breaks.push(root + k * g.abs() * root);
        }
    }

    // The closure cannot return Result, so the first failure is parked here.
    let mut failure = None;
    let inner = integrate_adaptive_with_breaks(
        |x| match transform_sq(x) {
            Ok(f2) => x * f2 / response(x),
            Err(e) => {
                failure.get_or_insert(e);
                0.0
            }
        },
        0.0,
        cutoff,
        &breaks,
        cfg,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    let inner = inner.require_converged()?;

    let eps2 = params.epsilon * params.epsilon;
    let n_per_duration = (2.0 * eps2 * g * g / PI)
        * (omega_frac / response(omega_frac))
        * (width / (2.0 * PI))
        * inner.value;
    Ok(n_per_duration * duration)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaProbe {
    pub omega_frac: f64,
    /// General-form `N/τ`.
    pub general: f64,
    /// Closed-form density.
    pub closed_form: f64,
    pub rel_deviation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeltaReport {
    pub omega0_tau: f64,
    pub tol: f64,
    pub probes: Vec<DeltaProbe>,
}

impl DeltaReport {
    pub fn passed(&self) -> bool {
        self.probes.iter().all(|p| p.pass)
    }

    pub fn max_deviation(&self) -> f64 {
        self.probes.iter().fold(0.0, |m, p| m.max(p.rel_deviation))
    }
}

/// Physical parameters realizing `groups` at the reference drive frequency
/// and line velocity.
fn params_for_groups(groups: &DimensionlessGroups, epsilon: f64) -> Result<CircuitParams> {
    let r = ReferencePoint::WILSON;
    if groups.g == 0.0 {
        return Err(Error::domain(
            "g = 0: no coupling, the delta check is undefined",
        ));
    }
    let gamma0 = groups.g * r.v / r.omega0;
    Ok(CircuitParams {
        gamma0,
        alpha0: groups.a / (gamma0 * r.omega0 * r.omega0),
        omega0: r.omega0,
        epsilon,
        v: r.v,
    })
}

/// Compares `spectral_density_general / τ` for the damped-cosine drive with
/// the closed-form density at each probe `Ω`.
pub fn validate_delta_approx(
    groups: &DimensionlessGroups,
    epsilon: f64,
    omega0_tau: f64,
    probe_fracs: &[f64],
    tol: f64,
    cfg: &QuadratureConfig,
) -> Result<DeltaReport> {
    if !(omega0_tau >= MIN_OMEGA0_TAU) {
        return Err(Error::domain(format!(
            "omega0*tau = {omega0_tau} is outside the long-drive regime (needs >= {MIN_OMEGA0_TAU})"
        )));
    }
    if let Some(w) = probe_fracs.iter().find(|w| !(**w > 0.0 && **w < 1.0)) {
        return Err(Error::domain(format!(
            "probe omega/omega0 = {w} not in (0, 1)"
        )));
    }
    let params = params_for_groups(groups, epsilon)?;
    let tau = omega0_tau / params.omega0;
    let profile = DriveProfile::harmonic_damped(params.omega0, tau)?;

    let probes = probe_fracs
        .iter()
        .map(|&w| {
            let general =
                spectral_density_general(w * params.omega0, &params, &profile, cfg)? / tau;
            let closed_form = spectral_density(w, groups, epsilon);
            let rel_deviation = ((general - closed_form) / closed_form).abs();
            Ok(DeltaProbe {
                omega_frac: w,
                general,
                closed_form,
                rel_deviation,
                pass: rel_deviation <= tol,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DeltaReport {
        omega0_tau,
        tol,
        probes,
    })
}

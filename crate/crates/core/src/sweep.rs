//! Parameter-space exploration over `(ξ, ζ)`: dense grids, 1-D maximization
//! along ζ, and shape classification of sampled spectra.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::params::{DimensionlessGroups, ReferencePoint};
use crate::quadrature::{rate_ratio_with, QuadratureConfig};
use crate::spectrum::{rho_with, spectrum_grid, Spectrum};

/// Default FWHM (in Ω) below which a single peak counts as a sharp resonance.
pub const SHARP_FWHM: f64 = 0.1;

/// Bracket width at which the golden-section search stops, relative to ζ.
pub const ZETA_REL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    Rho,
    RateRatio,
}

impl Quantity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Quantity::Rho => "rho",
            Quantity::RateRatio => "rate_ratio",
        }
    }

    pub fn evaluate(
        &self,
        reference: &ReferencePoint,
        xi: f64,
        zeta: f64,
        cfg: &QuadratureConfig,
    ) -> Result<f64> {
        match self {
            Quantity::Rho => rho_with(reference, xi, zeta),
            Quantity::RateRatio => rate_ratio_with(reference, xi, zeta, cfg),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rho" => Ok(Quantity::Rho),
            "rate_ratio" | "rate-ratio" => Ok(Quantity::RateRatio),
            other => Err(Error::domain(format!(
                "unknown quantity `{other}` (expected rho or rate_ratio)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepMetadata {
    pub reference: ReferencePoint,
    pub epsilon: f64,
    /// Seconds since the Unix epoch; `None` when suppressed.
    pub generated_at: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub quantity: Quantity,
    pub xi_grid: Vec<f64>,
    pub zeta_grid: Vec<f64>,
    /// `values[i][j]` is the quantity at `(xi_grid[i], zeta_grid[j])`.
    pub values: Vec<Vec<f64>>,
    pub metadata: SweepMetadata,
}

impl SweepResult {
    /// Column index and value of the maximum along ζ for row `xi_index`.
    pub fn row_max(&self, xi_index: usize) -> (usize, f64) {
        self.values[xi_index].iter().copied().enumerate().fold(
            (0, f64::NEG_INFINITY),
            |b, (j, v)| if v > b.1 { (j, v) } else { b },
        )
    }
}

/// `n` evenly spaced values from `lo` to `hi` inclusive (`[lo]` when `n = 1`).
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { hi } else { lo + i as f64 * step })
                .collect()
        }
    }
}

/// Evaluates `quantity` on the Cartesian grid `xi_grid × zeta_grid`.
///
/// Cells run data-parallel (on at most `threads` workers when given). If any
/// cell fails, the error of the first failing cell in row-major order is
/// returned with its location.
pub fn sweep_grid(
    xi_grid: &[f64],
    zeta_grid: &[f64],
    quantity: Quantity,
    cfg: &QuadratureConfig,
    threads: Option<usize>,
) -> Result<SweepResult> {
    sweep_grid_with(
        &ReferencePoint::WILSON,
        xi_grid,
        zeta_grid,
        quantity,
        cfg,
        threads,
    )
}

pub fn sweep_grid_with(
    reference: &ReferencePoint,
    xi_grid: &[f64],
    zeta_grid: &[f64],
    quantity: Quantity,
    cfg: &QuadratureConfig,
    threads: Option<usize>,
) -> Result<SweepResult> {
    if xi_grid.is_empty() || zeta_grid.is_empty() {
        return Err(Error::domain("sweep ranges must be non-empty"));
    }
    if let Some(x) = xi_grid.iter().find(|x| !(**x > 0.0 && x.is_finite())) {
        return Err(Error::domain(format!("xi grid value {x} is not positive")));
    }
    if let Some(z) = zeta_grid.iter().find(|z| !(**z >= 0.0 && z.is_finite())) {
        return Err(Error::domain(format!("zeta grid value {z} is negative")));
    }
    cfg.check()?;

    let n_zeta = zeta_grid.len();
    let run = || -> Vec<Result<f64>> {
        (0..xi_grid.len() * n_zeta)
            .into_par_iter()
            .map(|k| {
                let (xi, zeta) = (xi_grid[k / n_zeta], zeta_grid[k % n_zeta]);
                quantity
                    .evaluate(reference, xi, zeta, cfg)
                    .and_then(|v| {
                        if v.is_finite() && v >= 0.0 {
                            Ok(v)
                        } else {
                            Err(Error::NonFinite { at: zeta, value: v })
                        }
                    })
                    .map_err(|e| Error::Cell {
                        xi,
                        zeta,
                        source: Box::new(e),
                    })
            })
            .collect()
    };
    let cells = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::domain(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    let flat = cells.into_iter().collect::<Result<Vec<f64>>>()?;
    let values = flat.chunks(n_zeta).map(<[f64]>::to_vec).collect();

    Ok(SweepResult {
        quantity,
        xi_grid: xi_grid.to_vec(),
        zeta_grid: zeta_grid.to_vec(),
        values,
        metadata: SweepMetadata {
            reference: *reference,
            epsilon: reference.epsilon,
            generated_at: None,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub zeta_star: f64,
    pub value: f64,
}

/// Golden-section maximization of `quantity(ξ, ·)` over `zeta_bracket`.
///
/// The bracket must hold a single interior maximum; seed it from
/// [`crate::spectrum::resonance_zeta`] ± 50%.
pub fn maximize_over_zeta(
    xi: f64,
    zeta_bracket: (f64, f64),
    quantity: Quantity,
    cfg: &QuadratureConfig,
) -> Result<Maximum> {
    maximize_over_zeta_with(&ReferencePoint::WILSON, xi, zeta_bracket, quantity, cfg)
}

pub fn maximize_over_zeta_with(
    reference: &ReferencePoint,
    xi: f64,
    zeta_bracket: (f64, f64),
    quantity: Quantity,
    cfg: &QuadratureConfig,
) -> Result<Maximum> {
    let (lo0, hi0) = zeta_bracket;
    if !(lo0 >= 0.0 && hi0 > lo0 && hi0.is_finite()) {
        return Err(Error::domain(format!(
            "invalid zeta bracket [{lo0}, {hi0}]"
        )));
    }
    let f = |z: f64| quantity.evaluate(reference, xi, z, cfg);

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (lo0, hi0);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    while hi - lo > ZETA_REL_TOL * hi.abs().max(1.0) {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
        }
    }
    let (zeta_star, value) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };

    // A maximum pinned to an end means the bracket missed the peak.
    let edge = 1e-6 * (hi0 - lo0);
    if zeta_star - lo0 <= edge || hi0 - zeta_star <= edge {
        return Err(Error::Bracket {
            lo: lo0,
            hi: hi0,
            at: zeta_star,
        });
    }
    Ok(Maximum { zeta_star, value })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Parabolic,
    TwoPeak,
    SharpResonance,
}

impl Shape {
    pub fn as_str(&self) -> &'static str {
        match self {
            Shape::Parabolic => "parabolic",
            Shape::TwoPeak => "two-peak",
            Shape::SharpResonance => "sharp-resonance",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PeakReport {
    pub n_peaks: usize,
    pub peak_positions: Vec<f64>,
    pub peak_heights: Vec<f64>,
    pub shape: Shape,
}

/// Strict interior local maxima of `y`. Runs of exactly equal samples are
/// merged into one candidate located at the run's midpoint.
pub fn find_peaks(x: &[f64], y: &[f64]) -> Vec<(f64, f64)> {
    let n = y.len();
    let mut peaks = Vec::new();
    let mut i = 1;
    while i + 1 < n {
        let mut j = i;
        while j + 1 < n && y[j + 1] == y[i] {
            j += 1;
        }
        if j + 1 < n && y[i - 1] < y[i] && y[j + 1] < y[i] {
            peaks.push((0.5 * (x[i] + x[j]), y[i]));
        }
        i = j + 1;
    }
    peaks
}

/// Full width at half maximum of the peak at sample `peak`, with linear
/// interpolation of the half-height crossings. `None` if either side never
/// drops to half height.
pub fn fwhm(x: &[f64], y: &[f64], peak: usize) -> Option<f64> {
    let half = 0.5 * y[peak];
    let cross = |i: usize, j: usize| x[i] + (half - y[i]) * (x[j] - x[i]) / (y[j] - y[i]);
    let left = (1..=peak)
        .rev()
        .find(|&i| y[i - 1] <= half)
        .map(|i| cross(i - 1, i))?;
    let right = (peak..y.len() - 1)
        .find(|&i| y[i + 1] <= half)
        .map(|i| cross(i, i + 1))?;
    Some(right - left)
}

/// Classifies a sampled spectrum with the default FWHM threshold.
pub fn classify_spectrum(
    groups: &DimensionlessGroups,
    epsilon: f64,
    n_points: usize,
) -> Result<PeakReport> {
    classify_spectrum_with(groups, epsilon, n_points, SHARP_FWHM)
}

pub fn classify_spectrum_with(
    groups: &DimensionlessGroups,
    epsilon: f64,
    n_points: usize,
    sharp_fwhm: f64,
) -> Result<PeakReport> {
    if n_points < 201 {
        return Err(Error::domain(format!(
            "classification needs at least 201 points, got {n_points}"
        )));
    }
    classify(&spectrum_grid(groups, epsilon, n_points)?, sharp_fwhm)
}

/// Classifies an already sampled spectrum.
pub fn classify(spectrum: &Spectrum, sharp_fwhm: f64) -> Result<PeakReport> {
    let (x, y) = (&spectrum.omega_frac, &spectrum.density);
    let peaks = find_peaks(x, y);
    let shape = match peaks.len() {
        2 => Shape::TwoPeak,
        1 => {
            let (i, _) = spectrum.max();
            let width = fwhm(x, y, i).ok_or_else(|| {
                Error::DegenerateGrid("peak never falls to half height inside the band".into())
            })?;
            if width < sharp_fwhm {
                Shape::SharpResonance
            } else {
                Shape::Parabolic
            }
        }
        n => {
            return Err(Error::DegenerateGrid(format!(
                "found {n} interior maxima; expected one or two"
            )))
        }
    };
    Ok(PeakReport {
        n_peaks: peaks.len(),
        peak_positions: peaks.iter().map(|p| p.0).collect(),
        peak_heights: peaks.iter().map(|p| p.1).collect(),
        shape,
    })
}

//! One-dimensional integration: a globally adaptive Gauss–Kronrod (7/15)
//! integrator with caller-supplied breakpoints, and a composite trapezoid rule
//! kept deliberately simple so it can serve as an independent check.

mod rate;

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

pub use rate::{
    band_integral_half, creation_rate, creation_rate_for, rate_integrand, rate_ratio,
    rate_ratio_with, CreationRate,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-8,
            abs_tol: 1e-12,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureConfig {
    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        QuadratureConfig { rel_tol, ..self }
    }

    pub fn with_abs_tol(self, abs_tol: f64) -> Self {
        QuadratureConfig { abs_tol, ..self }
    }

    pub fn with_max_subdivisions(self, max_subdivisions: usize) -> Self {
        QuadratureConfig {
            max_subdivisions,
            ..self
        }
    }

    pub fn check(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::domain("rel_tol must be positive"));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::domain("abs_tol must be non-negative"));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::domain("max_subdivisions must be at least 1"));
        }
        Ok(())
    }

    fn tolerance(&self, value: f64) -> f64 {
        (self.rel_tol * value.abs()).max(self.abs_tol)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    pub error_estimate: f64,
    pub subdivisions_used: usize,
    pub converged: bool,
}

impl IntegralResult {
    /// Turns a non-converged result into [`Error::NotConverged`].
    pub fn require_converged(self) -> Result<Self> {
        if self.converged {
            Ok(self)
        } else {
            Err(Error::NotConverged {
                value: self.value,
                error: self.error_estimate,
                subdivisions: self.subdivisions_used,
            })
        }
    }
}

// Kronrod abscissae on [0, 1] (odd indices are the embedded Gauss points).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn eval<F: FnMut(f64) -> f64>(f: &mut F, x: f64) -> Result<f64> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(Error::NonFinite { at: x, value: y })
    }
}

/// Single 15-point Kronrod panel with QUADPACK-style error rescaling.
fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> Result<(f64, f64)> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = eval(f, center)?;
    let mut res_k = fc * WGK[7];
    let mut res_g = fc * WG[3];
    let mut res_abs = res_k.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(f, center - dx)?;
        let f2 = eval(f, center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    res_abs *= half.abs();
    res_asc *= half.abs();

    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok((value, err))
}

#[derive(Debug)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Adaptive integral of `f` over `[a, b]`.
///
/// Non-convergence is reported through `converged = false`; a NaN or infinite
/// sample aborts with [`Error::NonFinite`].
pub fn integrate_adaptive<F: FnMut(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    integrate_adaptive_with_breaks(f, a, b, &[], cfg)
}

/// Like [`integrate_adaptive`], but the initial partition is split at every
/// breakpoint that falls strictly inside `(a, b)`. Use this to seed the
/// integrator around features narrower than its first panels.
pub fn integrate_adaptive_with_breaks<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    breaks: &[f64],
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    cfg.check()?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!(
            "integration requires finite a < b, got [{a}, {b}]"
        )));
    }

    let mut edges: Vec<f64> = breaks
        .iter()
        .copied()
        .filter(|x| x.is_finite() && *x > a && *x < b)
        .collect();
    edges.push(a);
    edges.push(b);
    edges.sort_by(f64::total_cmp);
    edges.dedup();

    let mut heap = BinaryHeap::with_capacity(cfg.max_subdivisions.max(edges.len()));
    let mut total = 0.0;
    let mut total_err = 0.0;
    for w in edges.windows(2) {
        let (value, error) = gk15(&mut f, w[0], w[1])?;
        total += value;
        total_err += error;
        heap.push(Panel {
            a: w[0],
            b: w[1],
            value,
            error,
        });
    }

    loop {
        if total_err <= cfg.tolerance(total) {
            return Ok(IntegralResult {
                value: total,
                error_estimate: total_err,
                subdivisions_used: heap.len(),
                converged: true,
            });
        }
        if heap.len() >= cfg.max_subdivisions {
            break;
        }
        let worst = heap.pop().expect("partition is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            // Panel already at floating-point resolution.
            heap.push(worst);
            break;
        }
        let (v1, e1) = gk15(&mut f, worst.a, mid)?;
        let (v2, e2) = gk15(&mut f, mid, worst.b)?;
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        heap.push(Panel {
            a: worst.a,
            b: mid,
            value: v1,
            error: e1,
        });
        heap.push(Panel {
            a: mid,
            b: worst.b,
            value: v2,
            error: e2,
        });
    }

    // The running sums drift after many updates; resum before reporting.
    let value = heap.iter().map(|p| p.value).sum::<f64>();
    let error_estimate = heap.iter().map(|p| p.error).sum::<f64>();
    Ok(IntegralResult {
        value,
        error_estimate,
        subdivisions_used: heap.len(),
        converged: error_estimate <= cfg.tolerance(value),
    })
}

/// Composite trapezoid rule with `n_panels` equal panels.
pub fn integrate_trapezoid<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    n_panels: usize,
) -> Result<f64> {
    if !(a < b) {
        return Err(Error::domain(format!(
            "integration requires a < b, got [{a}, {b}]"
        )));
    }
    if n_panels < 1 {
        return Err(Error::domain("n_panels must be at least 1"));
    }
    let h = (b - a) / n_panels as f64;
    let mut sum = 0.5 * (eval(&mut f, a)? + eval(&mut f, b)?);
    for i in 1..n_panels {
        sum += eval(&mut f, a + i as f64 * h)?;
    }
    Ok(sum * h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_exactness() {
        let r = integrate_adaptive(|x| x * x, 0.0, 1.0, &QuadratureConfig::default()).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0 / 3.0).abs() < 1e-10);
        assert!(r.error_estimate >= 0.0);
    }

    #[test]
    fn narrow_lorentzian() {
        let cfg = QuadratureConfig::default();
        let r = integrate_adaptive(|x| 1.0 / (1.0 + (x * 1e3).powi(2)), -1.0, 1.0, &cfg).unwrap();
        assert!(r.converged);
        // Exact: 2·atan(1000)/1000.
        let exact = 2.0 * (1e3f64).atan() / 1e3;
        assert_relative_eq!(r.value, exact, max_relative = cfg.rel_tol);
        assert_relative_eq!(r.value, PI / 1e3, max_relative = 1e-3);
        assert!(r.subdivisions_used > 1);
    }

    #[test]
    fn zero_integrand() {
        let r = integrate_adaptive(|_| 0.0, 0.0, 5.0, &QuadratureConfig::default()).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.converged);
    }

    #[test]
    fn nan_is_a_hard_error() {
        let err = integrate_adaptive(
            |x| if x > 0.5 { f64::NAN } else { x },
            0.0,
            1.0,
            &QuadratureConfig::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonFinite { .. }));
        assert!(integrate_trapezoid(|_| f64::NAN, 0.0, 1.0, 4).is_err());
    }

    #[test]
    fn budget_exhaustion_reports_not_converged() {
        let cfg = QuadratureConfig::default()
            .with_max_subdivisions(1)
            .with_rel_tol(1e-14);
        let r = integrate_adaptive(|x| (50.0 * x).sin().abs(), 0.0, 3.0, &cfg).unwrap();
        assert!(!r.converged);
        assert!(r.require_converged().is_err());
    }

    #[test]
    fn converged_respects_tolerance() {
        let cfg = QuadratureConfig::default();
        let r = integrate_adaptive(|x| (-x * x).exp(), -3.0, 4.0, &cfg).unwrap();
        assert!(r.converged);
        assert!(r.error_estimate <= (cfg.rel_tol * r.value.abs()).max(cfg.abs_tol));
    }

    #[test]
    fn breakpoints_rescue_a_hidden_spike() {
        // A spike too narrow for the first panel's nodes to see.
        let spike = |x: f64| (-((x - 0.3137) / 1e-7).powi(2)).exp();
        let exact = 1e-7 * PI.sqrt();
        let cfg = QuadratureConfig::default().with_abs_tol(0.0);
        let blind = integrate_adaptive(spike, 0.0, 1.0, &cfg).unwrap();
        assert!(blind.value < 0.5 * exact);
        let seeded =
            integrate_adaptive_with_breaks(spike, 0.0, 1.0, &[0.3137 - 1e-6, 0.3137 + 1e-6], &cfg)
                .unwrap();
        assert_relative_eq!(seeded.value, exact, max_relative = 1e-8);
    }

    #[test]
    fn bad_bounds() {
        let cfg = QuadratureConfig::default();
        assert!(integrate_adaptive(|x| x, 1.0, 1.0, &cfg).is_err());
        assert!(integrate_adaptive(|x| x, 2.0, 1.0, &cfg).is_err());
        assert!(integrate_trapezoid(|x| x, 0.0, 1.0, 0).is_err());
        let bad = QuadratureConfig {
            rel_tol: 0.0,
            ..cfg
        };
        assert!(integrate_adaptive(|x| x, 0.0, 1.0, &bad).is_err());
    }

    #[test]
    fn trapezoid_examples() {
        assert_eq!(integrate_trapezoid(|x| x, 0.0, 1.0, 1).unwrap(), 0.5);
        assert_eq!(integrate_trapezoid(|x| x * x, 0.0, 1.0, 2).unwrap(), 0.375);
    }
}

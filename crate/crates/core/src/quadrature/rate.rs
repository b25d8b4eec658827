//! Photon creation rate: the band integral of the closed-form spectrum.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{integrate_adaptive_with_breaks, IntegralResult, QuadratureConfig};
use crate::error::Result;
use crate::params::{DimensionlessGroups, ReferencePoint};
use crate::spectrum::spectral_density;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CreationRate {
    /// `∫₀¹ N(Ω) dΩ`, dimensionless.
    pub band_integral: IntegralResult,
    /// Photons per second, `ω₀ · ∫₀¹ N(Ω) dΩ`.
    pub per_second: f64,
}

/// Integrand of the band integral, `Ω ↦ N(Ω)`.
pub fn rate_integrand(groups: DimensionlessGroups, epsilon: f64) -> impl Fn(f64) -> f64 {
    move |w| spectral_density(w, &groups, epsilon)
}

/// Panel seeds around the resonance `1 + AΩ² = 0` and its mirror image
/// `1 − Ω_r`, scaled by the local width `|g|·Ω_r`.
fn resonance_breaks(groups: &DimensionlessGroups) -> Vec<f64> {
    let mut breaks = vec![0.5];
    if let Some(root) = groups.resonance_frac() {
        let width = groups.g.abs() * root;
        for k in [1.0, 3.0, 10.0] {
            for centre in [root, 1.0 - root] {
                breaks.push(centre - k * width);
                breaks.push(centre + k * width);
            }
        }
        breaks.push(root);
        breaks.push(1.0 - root);
    }
    breaks
}

/// Creation rate at the reference drive frequency.
pub fn creation_rate(
    groups: &DimensionlessGroups,
    epsilon: f64,
    cfg: &QuadratureConfig,
) -> Result<CreationRate> {
    creation_rate_for(groups, epsilon, ReferencePoint::WILSON.omega0, cfg)
}

/// Creation rate for an explicit drive frequency `omega0` (rad/s).
pub fn creation_rate_for(
    groups: &DimensionlessGroups,
    epsilon: f64,
    omega0: f64,
    cfg: &QuadratureConfig,
) -> Result<CreationRate> {
    let band = integrate_adaptive_with_breaks(
        rate_integrand(*groups, epsilon),
        0.0,
        1.0,
        &resonance_breaks(groups),
        cfg,
    )?
    .require_converged()?;
    Ok(CreationRate {
        band_integral: band,
        per_second: omega0 * band.value,
    })
}

/// Twice the integral over `[0, ½]`. Agrees with the full band integral
/// because the spectrum is symmetric under `Ω → 1 − Ω`.
pub fn band_integral_half(
    groups: &DimensionlessGroups,
    epsilon: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let half = integrate_adaptive_with_breaks(
        rate_integrand(*groups, epsilon),
        0.0,
        0.5,
        &resonance_breaks(groups),
        cfg,
    )?
    .require_converged()?;
    Ok(2.0 * half.value)
}

type BaselineKey = (u64, u64, usize, [u64; 5]);

fn baseline_key(reference: &ReferencePoint, cfg: &QuadratureConfig) -> BaselineKey {
    (
        cfg.rel_tol.to_bits(),
        cfg.abs_tol.to_bits(),
        cfg.max_subdivisions,
        [
            reference.gamma0.to_bits(),
            reference.alpha0.to_bits(),
            reference.omega0.to_bits(),
            reference.epsilon.to_bits(),
            reference.v.to_bits(),
        ],
    )
}

/// Band integral at `(ξ, ζ) = (1, 1)`, computed once per reference and config.
fn baseline(reference: &ReferencePoint, cfg: &QuadratureConfig) -> Result<f64> {
    static CACHE: OnceLock<Mutex<HashMap<BaselineKey, f64>>> = OnceLock::new();
    let key = baseline_key(reference, cfg);
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&key) {
        return Ok(*v);
    }
    let groups = reference.groups(1.0, 1.0)?;
    let value = creation_rate_for(&groups, reference.epsilon, reference.omega0, cfg)?
        .band_integral
        .value;
    Ok(*cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .entry(key)
        .or_insert(value))
}

/// `R(ξ, ζ) / R(1, 1)` at the reference point.
pub fn rate_ratio(xi: f64, zeta: f64, cfg: &QuadratureConfig) -> Result<f64> {
    rate_ratio_with(&ReferencePoint::WILSON, xi, zeta, cfg)
}

pub fn rate_ratio_with(
    reference: &ReferencePoint,
    xi: f64,
    zeta: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let groups = reference.groups(xi, zeta)?;
    let base = baseline(reference, cfg)?;
    let rate = creation_rate_for(&groups, reference.epsilon, reference.omega0, cfg)?;
    Ok(rate.band_integral.value / base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_trapezoid;
    use approx::assert_relative_eq;

    fn groups(xi: f64, zeta: f64) -> DimensionlessGroups {
        DimensionlessGroups::at(xi, zeta).unwrap()
    }

    #[test]
    fn reference_rate_matches_trapezoid() {
        let cfg = QuadratureConfig::default();
        let r = creation_rate(&groups(1.0, 1.0), 0.25, &cfg).unwrap();
        assert!(r.per_second > 0.0 && r.per_second.is_finite());
        let trap =
            integrate_trapezoid(rate_integrand(groups(1.0, 1.0), 0.25), 0.0, 1.0, 100_000).unwrap();
        assert_relative_eq!(r.band_integral.value, trap, max_relative = 1e-6);
    }

    #[test]
    fn zero_modulation_gives_zero_rate() {
        let r = creation_rate(&groups(1.0, 1.0), 0.0, &QuadratureConfig::default()).unwrap();
        assert_eq!(r.per_second, 0.0);
    }

    #[test]
    fn enhancement_at_zeta_12() {
        let cfg = QuadratureConfig::default();
        let r12 = creation_rate(&groups(1.0, 12.0), 0.25, &cfg).unwrap();
        let r1 = creation_rate(&groups(1.0, 1.0), 0.25, &cfg).unwrap();
        assert_relative_eq!(r12.per_second / r1.per_second, 3.95, max_relative = 1e-2);
    }

    #[test]
    fn ratio_examples() {
        let cfg = QuadratureConfig::default();
        assert_eq!(rate_ratio(1.0, 1.0, &cfg).unwrap(), 1.0);
        assert_relative_eq!(
            rate_ratio(1.0, 15.0, &cfg).unwrap(),
            6.78,
            max_relative = 1e-3
        );
        let star = crate::spectrum::resonance_zeta(1.0).unwrap();
        let peak = rate_ratio(1.0, star, &cfg).unwrap();
        assert!(peak > 3e2 && peak < 3.6e2, "{peak}");
    }

    #[test]
    fn half_band_agrees() {
        let cfg = QuadratureConfig::default();
        for zeta in [0.0, 1.0, 12.0, 53.0] {
            let g = groups(1.0, zeta);
            let full = creation_rate(&g, 0.25, &cfg).unwrap().band_integral.value;
            let half = band_integral_half(&g, 0.25, &cfg).unwrap();
            assert_relative_eq!(full, half, max_relative = 2.0 * cfg.rel_tol);
        }
    }

    #[test]
    fn resonance_seeds_are_in_band_only_when_resonant() {
        assert_eq!(resonance_breaks(&groups(1.0, 1.0)), vec![0.5]);
        let b = resonance_breaks(&groups(1.0, 53.0));
        assert_eq!(b.len(), 15);
    }
}

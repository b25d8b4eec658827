//! Closed-form photon spectrum in the long-drive limit.
//!
//! With `Ω = ω/ω₀` the density per unit drive time is
//!
//! ```text
//! N(Ω) = ε²g²/(2π) · Ω(1−Ω)·Θ(1−Ω) / [D(Ω)·D(1−Ω)],   D(Ω) = (1 + AΩ²)² + g²Ω²
//! ```
//!
//! `N` is dimensionless (photons per unit angular frequency per unit time).
//! Multiplying by `ω₀` and integrating over `Ω` gives photons per second.
//!
//! `D(Ω) ≥ g²Ω² > 0` for `g ≠ 0` and `Ω > 0`, so the density is finite for
//! every physical parameter set. The case `g = 0` with `1 + AΩ² = 0` is a true
//! pole; [`crate::params::CircuitParams::validate`] rejects `γ₀ = 0`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::params::{DimensionlessGroups, ReferencePoint};

/// Default number of grid points, endpoints included.
pub const DEFAULT_POINTS: usize = 2001;

/// Response denominator `D(Ω) = (1 + AΩ²)² + g²Ω²`.
pub fn denominator(omega_frac: f64, groups: &DimensionlessGroups) -> f64 {
    let w2 = omega_frac * omega_frac;
    let re = 1.0 + groups.a * w2;
    re * re + groups.g * groups.g * w2
}

/// Spectral density `N(Ω)` per unit drive time.
///
/// Zero for `Ω ≥ 1` (no emission above the drive frequency) and for `Ω ≤ 0`.
pub fn spectral_density(omega_frac: f64, groups: &DimensionlessGroups, epsilon: f64) -> f64 {
    if !(omega_frac > 0.0 && omega_frac < 1.0) {
        return 0.0;
    }
    let partner = 1.0 - omega_frac;
    let prefactor = epsilon * epsilon * groups.g * groups.g / (2.0 * PI);
    prefactor * omega_frac * partner
        / (denominator(omega_frac, groups) * denominator(partner, groups))
}

/// A sampled spectrum on a uniform grid over `Ω ∈ [0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub omega_frac: Vec<f64>,
    pub density: Vec<f64>,
    pub groups: DimensionlessGroups,
    pub epsilon: f64,
}

impl Spectrum {
    /// Angular frequencies (rad/s) of the grid for drive frequency `omega0`.
    pub fn angular_frequencies(&self, omega0: f64) -> Vec<f64> {
        self.omega_frac.iter().map(|w| w * omega0).collect()
    }

    /// Index and value of the largest sample.
    pub fn max(&self) -> (usize, f64) {
        self.density
            .iter()
            .copied()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, v)| {
                if v > best.1 {
                    (i, v)
                } else {
                    best
                }
            })
    }

    pub fn len(&self) -> usize {
        self.density.len()
    }

    pub fn is_empty(&self) -> bool {
        self.density.is_empty()
    }
}

/// Uniform grid `Ω_i = i/(n−1)`, `i = 0..n`.
pub fn uniform_grid(n_points: usize) -> Vec<f64> {
    let last = (n_points - 1) as f64;
    (0..n_points).map(|i| i as f64 / last).collect()
}

/// Samples [`spectral_density`] on a uniform grid of `n_points` over `[0, 1]`.
pub fn spectrum_grid(
    groups: &DimensionlessGroups,
    epsilon: f64,
    n_points: usize,
) -> Result<Spectrum> {
    if n_points < 3 {
        return Err(Error::domain(format!(
            "spectrum grid needs at least 3 points, got {n_points}"
        )));
    }
    let omega_frac = uniform_grid(n_points);
    let density = omega_frac
        .iter()
        .map(|&w| spectral_density(w, groups, epsilon))
        .collect();
    Ok(Spectrum {
        omega_frac,
        density,
        groups: *groups,
        epsilon,
    })
}

/// Enhancement of the density at half the drive frequency relative to the
/// reference point, `N(½; ξ, ζ) / N(½; 1, 1)`.
pub fn rho(xi: f64, zeta: f64) -> Result<f64> {
    rho_with(&ReferencePoint::WILSON, xi, zeta)
}

pub fn rho_with(reference: &ReferencePoint, xi: f64, zeta: f64) -> Result<f64> {
    let groups = reference.groups(xi, zeta)?;
    let base = reference.groups(1.0, 1.0)?;
    let ratio = denominator(0.5, &base) / denominator(0.5, &groups);
    Ok(xi * xi * ratio * ratio)
}

/// The ζ that puts the resonance `1 + AΩ² = 0` at `Ω = ½` for the given ξ,
/// i.e. the maximizer of [`rho`] along ζ.
pub fn resonance_zeta(xi: f64) -> Result<f64> {
    resonance_zeta_with(&ReferencePoint::WILSON, xi)
}

pub fn resonance_zeta_with(reference: &ReferencePoint, xi: f64) -> Result<f64> {
    if !(xi > 0.0 && xi.is_finite()) {
        return Err(Error::domain(format!(
            "xi must be positive and finite, got {xi}"
        )));
    }
    let a_ref = reference.a_ref();
    if !(a_ref < 0.0) {
        return Err(Error::domain(
            "reference has γ₀·α₀ ≥ 0: 1 + AΩ² never vanishes, no resonance exists",
        ));
    }
    Ok(-4.0 / (xi * a_ref))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn groups(xi: f64, zeta: f64) -> DimensionlessGroups {
        DimensionlessGroups::at(xi, zeta).unwrap()
    }

    #[test]
    fn denominator_examples() {
        assert_eq!(denominator(0.0, &groups(3.0, 40.0)), 1.0);
        assert_relative_eq!(
            denominator(0.5, &groups(1.0, 1.0)),
            0.97666,
            max_relative = 1e-5
        );
        // 1 + AΩ² ≈ 0 at ζ = 52.94, leaving g²/4.
        assert_relative_eq!(
            denominator(0.5, &groups(1.0, 52.94)),
            0.014078,
            max_relative = 1e-4
        );
    }

    #[test]
    fn density_examples() {
        assert_relative_eq!(
            spectral_density(0.5, &groups(1.0, 1.0), 0.25),
            1.468e-4,
            max_relative = 1e-3
        );
        assert_eq!(spectral_density(1.3, &groups(1.0, 1.0), 0.25), 0.0);
        assert_eq!(spectral_density(1.0, &groups(1.0, 12.0), 0.25), 0.0);
        assert_eq!(spectral_density(0.0, &groups(1.0, 12.0), 0.25), 0.0);
    }

    #[test]
    fn grid_shape() {
        let s = spectrum_grid(&groups(1.0, 1.0), 0.25, 2001).unwrap();
        assert_eq!(s.len(), 2001);
        assert_eq!(s.omega_frac[0], 0.0);
        assert_eq!(s.omega_frac[2000], 1.0);
        assert_eq!(s.omega_frac[1000], 0.5);
        assert_eq!(s.max().0, 1000);
        assert!(spectrum_grid(&groups(1.0, 1.0), 0.25, 2).is_err());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(1.0, 1.0).unwrap(), 1.0);
        assert_relative_eq!(rho(1.0, 53.0).unwrap(), 4.81e3, max_relative = 2e-3);
        assert_relative_eq!(rho(0.6, 88.0).unwrap(), 1.33e4, max_relative = 3e-3);
        assert!(rho(0.0, 1.0).is_err());
        assert!(rho(1.0, -1.0).is_err());
    }

    #[test]
    fn rho_is_the_density_ratio() {
        let num = spectral_density(0.5, &groups(0.6, 88.0), 0.25);
        let den = spectral_density(0.5, &groups(1.0, 1.0), 0.25);
        assert_relative_eq!(rho(0.6, 88.0).unwrap(), num / den, max_relative = 1e-12);
    }

    #[test]
    fn resonance_zeta_examples() {
        assert_relative_eq!(resonance_zeta(1.0).unwrap(), 52.94, max_relative = 1e-3);
        assert_relative_eq!(resonance_zeta(0.6).unwrap(), 88.23, max_relative = 1e-3);
        assert_relative_eq!(resonance_zeta(2.0).unwrap(), 26.47, max_relative = 1e-3);
        assert!(resonance_zeta(0.0).is_err());
        let flipped = ReferencePoint {
            gamma0: 0.44e-3,
            ..ReferencePoint::WILSON
        };
        assert!(resonance_zeta_with(&flipped, 1.0).is_err());
    }

    #[test]
    fn resonance_zeta_cross_checked_by_scan() {
        let star = resonance_zeta(2.0).unwrap();
        let step = 0.01;
        let best = (0..10_000)
            .map(|i| i as f64 * step)
            .max_by(|a, b| rho(2.0, *a).unwrap().total_cmp(&rho(2.0, *b).unwrap()))
            .unwrap();
        assert!((best - star).abs() <= step);
    }
}

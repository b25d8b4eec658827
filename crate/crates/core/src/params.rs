//! Physical operating point, the experimental reference, and the reduction to
//! the two dimensionless groups that fix the spectrum.
//!
//! All quantities are SI and all frequencies are angular (rad/s). The boundary
//! parameters enter the spectrum only through
//!
//! * `A = γ₀·α₀·ω₀²`
//! * `g = γ₀·ω₀ / v`
//!
//! so every downstream formula works on `(A, g, Ω = ω/ω₀)`.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};

/// A physical operating point of the SQUID-terminated line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircuitParams {
    /// Static Robin length γ₀ (m). Signed; negative at the experimental point.
    pub gamma0: f64,
    /// Second-time-derivative weight α₀ = L₀C (s²/m).
    pub alpha0: f64,
    /// Drive angular frequency ω₀ (rad/s).
    pub omega0: f64,
    /// Modulation depth ε of the Josephson energy.
    pub epsilon: f64,
    /// Phase velocity in the line (m/s).
    pub v: f64,
}

/// Reference operating point against which ξ and ζ are measured.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferencePoint {
    /// γ₀ at the reference (m).
    pub gamma0: f64,
    /// α₀ at the reference (s²/m).
    pub alpha0: f64,
    /// ω₀ (rad/s).
    pub omega0: f64,
    pub epsilon: f64,
    /// m/s
    pub v: f64,
}

impl ReferencePoint {
    /// Operating point of the 2011 SQUID experiment (Wilson et al.).
    pub const WILSON: ReferencePoint = ReferencePoint {
        gamma0: -0.44e-3,
        alpha0: 0.41e-19,
        omega0: 2.0 * PI * 10.30e9,
        epsilon: 0.25,
        v: 1.2e8,
    };

    /// `A` at the reference point, `γ₀α₀ω₀²`.
    pub fn a_ref(&self) -> f64 {
        self.gamma0 * self.alpha0 * self.omega0 * self.omega0
    }

    /// `g` at the reference point, `γ₀ω₀/v`.
    pub fn g_ref(&self) -> f64 {
        self.gamma0 * self.omega0 / self.v
    }

    /// Dimensionless groups for the point `(ξ, ζ)` relative to this reference.
    pub fn groups(&self, xi: f64, zeta: f64) -> Result<DimensionlessGroups> {
        check_xi_zeta(xi, zeta)?;
        Ok(DimensionlessGroups {
            xi,
            zeta,
            a: xi * zeta * self.a_ref(),
            g: xi * self.g_ref(),
        })
    }

    pub fn as_params(&self) -> CircuitParams {
        CircuitParams {
            gamma0: self.gamma0,
            alpha0: self.alpha0,
            omega0: self.omega0,
            epsilon: self.epsilon,
            v: self.v,
        }
    }
}

impl Default for ReferencePoint {
    fn default() -> Self {
        Self::WILSON
    }
}

fn check_xi_zeta(xi: f64, zeta: f64) -> Result<()> {
    if !(xi > 0.0 && xi.is_finite()) {
        return Err(Error::domain(format!(
            "xi must be positive and finite, got {xi}"
        )));
    }
    if !(zeta >= 0.0 && zeta.is_finite()) {
        return Err(Error::domain(format!(
            "zeta must be non-negative and finite, got {zeta}"
        )));
    }
    Ok(())
}

/// The groups `(A, g)` that fully determine the spectrum shape, together with
/// the `(ξ, ζ)` coordinates they were recovered against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessGroups {
    pub xi: f64,
    pub zeta: f64,
    /// `γ₀α₀ω₀²`
    pub a: f64,
    /// `γ₀ω₀/v`
    pub g: f64,
}

impl DimensionlessGroups {
    /// Groups at `(ξ, ζ)` relative to [`ReferencePoint::WILSON`].
    pub fn at(xi: f64, zeta: f64) -> Result<Self> {
        ReferencePoint::WILSON.groups(xi, zeta)
    }

    /// Builds groups directly from `(A, g)`; ξ and ζ are recovered against
    /// `reference` (ζ is NaN when ξ or the reference `A` vanishes).
    pub fn from_ag(a: f64, g: f64, reference: &ReferencePoint) -> Self {
        let xi = g / reference.g_ref();
        let zeta = a / (xi * reference.a_ref());
        DimensionlessGroups { xi, zeta, a, g }
    }

    /// In-band root `Ω_r ∈ (0, 1)` of `1 + A·Ω² = 0`, if one exists.
    pub fn resonance_frac(&self) -> Option<f64> {
        if self.a < 0.0 {
            let root = (-1.0 / self.a).sqrt();
            (root > 0.0 && root < 1.0).then_some(root)
        } else {
            None
        }
    }
}

impl CircuitParams {
    /// Physical parameters at `(ξ, ζ)`: `γ₀ = ξ·γ₀exp`, `α₀ = ζ·α₀exp`, the
    /// remaining fields copied from `reference`.
    pub fn from_dimensionless(xi: f64, zeta: f64, reference: &ReferencePoint) -> Result<Self> {
        check_xi_zeta(xi, zeta)?;
        Ok(CircuitParams {
            gamma0: xi * reference.gamma0,
            alpha0: zeta * reference.alpha0,
            omega0: reference.omega0,
            epsilon: reference.epsilon,
            v: reference.v,
        })
    }

    pub fn a(&self) -> f64 {
        self.gamma0 * self.alpha0 * self.omega0 * self.omega0
    }

    pub fn g(&self) -> f64 {
        self.gamma0 * self.omega0 / self.v
    }

    /// Nondimensionalizes against `reference`. ξ and ζ are the ratios of γ₀
    /// and α₀ to the reference values.
    pub fn to_groups(&self, reference: &ReferencePoint) -> DimensionlessGroups {
        DimensionlessGroups {
            xi: self.gamma0 / reference.gamma0,
            zeta: self.alpha0 / reference.alpha0,
            a: self.a(),
            g: self.g(),
        }
    }

    /// Full contract check. Never fails; problems are returned as data.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let fields = [
            ("gamma0", self.gamma0),
            ("alpha0", self.alpha0),
            ("omega0", self.omega0),
            ("epsilon", self.epsilon),
            ("v", self.v),
        ];
        for (name, value) in fields {
            if !value.is_finite() {
                report.violations.push(Violation::NonFinite(name));
            }
        }
        if !(self.omega0 > 0.0) {
            report.violations.push(Violation::NonPositiveOmega0);
        }
        if !(self.v > 0.0) {
            report.violations.push(Violation::NonPositiveVelocity);
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            report.violations.push(Violation::ModulationDepth);
        }
        if self.alpha0 < 0.0 {
            report.violations.push(Violation::NegativeAlpha0);
        }
        if self.gamma0 == 0.0 {
            report.violations.push(Violation::ZeroGamma0);
        }
        if self.gamma0 * self.alpha0 > 0.0 {
            report.advisories.push(Advisory::NoResonance);
        }
        report
    }
}

/// Hard contract violations: the spectrum formulas do not apply.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Violation {
    NonFinite(&'static str),
    NonPositiveOmega0,
    NonPositiveVelocity,
    ModulationDepth,
    NegativeAlpha0,
    ZeroGamma0,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonFinite(name) => write!(f, "{name} is not finite"),
            Violation::NonPositiveOmega0 => f.write_str("drive frequency omega0 must be positive"),
            Violation::NonPositiveVelocity => f.write_str("line velocity v must be positive"),
            Violation::ModulationDepth => {
                f.write_str("modulation depth out of perturbative range (0 < epsilon < 1)")
            }
            Violation::NegativeAlpha0 => f.write_str("alpha0 must be non-negative"),
            Violation::ZeroGamma0 => f.write_str(
                "gamma0 = 0 gives g = 0: the resonance 1+γ₀α₀ω² = 0 becomes a true pole",
            ),
        }
    }
}

/// Soft findings: the parameters are usable but worth a note.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Advisory {
    /// `γ₀·α₀ > 0`.
    NoResonance,
}

impl fmt::Display for Advisory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Advisory::NoResonance => f.write_str("no resonance: 1+γ₀α₀ω² never vanishes"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub advisories: Vec<Advisory>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const R: ReferencePoint = ReferencePoint::WILSON;

    #[test]
    fn reference_constants() {
        assert_eq!(R.gamma0, -0.44e-3);
        assert_eq!(R.alpha0, 0.41e-19);
        assert_relative_eq!(R.omega0, 2.0 * PI * 1.030e10, max_relative = 1e-15);
        assert_eq!(R.epsilon, 0.25);
        assert_eq!(R.v, 1.2e8);
    }

    #[test]
    fn reference_groups() {
        assert_relative_eq!(R.a_ref(), -7.556e-2, max_relative = 1e-3);
        assert_relative_eq!(R.g_ref(), -2.373e-1, max_relative = 1e-3);
    }

    #[test]
    fn from_dimensionless_examples() {
        let p = CircuitParams::from_dimensionless(1.0, 1.0, &R).unwrap();
        assert_eq!(p.gamma0, -0.44e-3);
        assert_eq!(p.alpha0, 0.41e-19);

        let p = CircuitParams::from_dimensionless(1.0, 0.0, &R).unwrap();
        assert_eq!(p.alpha0, 0.0);

        let p = CircuitParams::from_dimensionless(0.6, 88.0, &R).unwrap();
        assert_relative_eq!(p.gamma0, -0.264e-3, max_relative = 1e-14);
        assert_relative_eq!(p.alpha0, 3.608e-18, max_relative = 1e-14);
        assert_eq!(p.omega0, R.omega0);
        assert_eq!(p.v, R.v);
    }

    #[test]
    fn from_dimensionless_rejects_bad_coordinates() {
        assert!(CircuitParams::from_dimensionless(0.0, 1.0, &R).is_err());
        assert!(CircuitParams::from_dimensionless(-1.0, 1.0, &R).is_err());
        assert!(CircuitParams::from_dimensionless(1.0, -0.1, &R).is_err());
        assert!(CircuitParams::from_dimensionless(f64::NAN, 1.0, &R).is_err());
    }

    #[test]
    fn to_groups_examples() {
        let gr = CircuitParams::from_dimensionless(1.0, 1.0, &R)
            .unwrap()
            .to_groups(&R);
        assert_relative_eq!(gr.a, -7.556e-2, max_relative = 1e-3);
        assert_relative_eq!(gr.g, -2.373e-1, max_relative = 1e-3);
        assert_eq!(gr.xi, 1.0);
        assert_eq!(gr.zeta, 1.0);

        let gr = CircuitParams::from_dimensionless(1.0, 0.0, &R)
            .unwrap()
            .to_groups(&R);
        assert_eq!(gr.a, 0.0);

        let gr = CircuitParams::from_dimensionless(1.0, 53.0, &R)
            .unwrap()
            .to_groups(&R);
        assert_relative_eq!(gr.a, 53.0 * R.a_ref(), max_relative = 1e-14);
        assert_relative_eq!(gr.a, -4.004, max_relative = 1e-3);
    }

    #[test]
    fn groups_agree_between_routes() {
        let direct = R.groups(0.6, 88.0).unwrap();
        let via = CircuitParams::from_dimensionless(0.6, 88.0, &R)
            .unwrap()
            .to_groups(&R);
        assert_relative_eq!(direct.a, via.a, max_relative = 1e-14);
        assert_relative_eq!(direct.g, via.g, max_relative = 1e-14);
    }

    #[test]
    fn from_ag_recovers_coordinates() {
        let gr = R.groups(1.7, 23.0).unwrap();
        let back = DimensionlessGroups::from_ag(gr.a, gr.g, &R);
        assert_relative_eq!(back.xi, 1.7, max_relative = 1e-14);
        assert_relative_eq!(back.zeta, 23.0, max_relative = 1e-14);
    }

    #[test]
    fn resonance_frac() {
        assert_eq!(
            DimensionlessGroups::at(1.0, 1.0).unwrap().resonance_frac(),
            None
        );
        let gr = DimensionlessGroups::at(1.0, -4.0 / R.a_ref()).unwrap();
        assert_relative_eq!(gr.resonance_frac().unwrap(), 0.5, max_relative = 1e-14);
        assert_eq!(
            DimensionlessGroups::at(1.0, 0.0).unwrap().resonance_frac(),
            None
        );
    }

    #[test]
    fn validate_reference_is_clean() {
        let rep = R.as_params().validate();
        assert!(rep.is_valid());
        assert!(rep.advisories.is_empty(), "{:?}", rep.advisories);
    }

    #[test]
    fn validate_flags_modulation_depth() {
        let p = CircuitParams {
            epsilon: 1.5,
            ..R.as_params()
        };
        let rep = p.validate();
        assert_eq!(rep.violations, vec![Violation::ModulationDepth]);
        assert!(rep.violations[0]
            .to_string()
            .contains("modulation depth out of perturbative range"));
    }

    #[test]
    fn validate_advises_no_resonance() {
        let p = CircuitParams {
            gamma0: 0.44e-3,
            ..R.as_params()
        };
        let rep = p.validate();
        assert!(rep.is_valid());
        assert_eq!(rep.advisories, vec![Advisory::NoResonance]);
        assert_eq!(
            rep.advisories[0].to_string(),
            "no resonance: 1+γ₀α₀ω² never vanishes"
        );
    }

    #[test]
    fn validate_hard_violations() {
        let p = CircuitParams {
            omega0: 0.0,
            v: -1.0,
            gamma0: 0.0,
            ..R.as_params()
        };
        let rep = p.validate();
        assert!(rep.violations.contains(&Violation::NonPositiveOmega0));
        assert!(rep.violations.contains(&Violation::NonPositiveVelocity));
        assert!(rep.violations.contains(&Violation::ZeroGamma0));
    }
}

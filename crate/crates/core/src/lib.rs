//! First-order dynamical Casimir spectrum of a SQUID-terminated waveguide with
//! a generalized time-dependent Robin boundary condition.
//!
//! * [`params`]: physical operating point, reference constants, `(ξ, ζ)` and
//!   the dimensionless groups `(A, g)`.
//! * [`spectrum`]: closed-form density `N(Ω)`, the enhancement `ρ(ξ, ζ)` and
//!   the resonance locus.
//! * [`genform`]: the general spectral integral for arbitrary drives and the
//!   check of its long-drive limit.
//! * [`quadrature`]: adaptive and trapezoid integration, creation rates.
//! * [`sweep`]: grids over `(ξ, ζ)`, maximization along ζ, peak
//!   classification.

// Quadrature tables keep their published digits, and `!(x > 0.0)` is the
// NaN-rejecting comparison used throughout.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod genform;
pub mod params;
pub mod quadrature;
pub mod spectrum;
pub mod sweep;

pub use error::{Error, Result};
pub use params::{CircuitParams, DimensionlessGroups, ReferencePoint};
pub use quadrature::{IntegralResult, QuadratureConfig};
pub use spectrum::Spectrum;
pub use sweep::{PeakReport, Quantity, Shape, SweepResult};

//! wasm-bindgen bindings behind the static demo page in `www/`.
//!
//! Three operations are exported: the spectrum at one `(ξ, ζ)` with its shape
//! classification, a `log₁₀ ρ` map over a grid, and a cut of the rate ratio
//! along `ζ`. Each one is a plain Rust function (tested natively) wrapped by a
//! thin `#[wasm_bindgen]` shim that turns errors into JS exceptions.

use wasm_bindgen::prelude::*;

use dce_core::quadrature::rate_ratio;
use dce_core::spectrum::{resonance_zeta, rho, spectrum_grid};
use dce_core::sweep::{classify, linspace, SHARP_FWHM};
use dce_core::{DimensionlessGroups, QuadratureConfig, ReferencePoint, Result};

/// Grid sizes above this are refused so a slider drag cannot hang the page.
pub const MAX_CELLS: usize = 250_000;

/// Spectrum samples plus the peak classification.
#[wasm_bindgen]
#[derive(Debug, Clone)]
pub struct SpectrumView {
    omega_frac: Vec<f64>,
    density: Vec<f64>,
    peak_positions: Vec<f64>,
    shape: String,
    a: f64,
    g: f64,
}

#[wasm_bindgen]
impl SpectrumView {
    #[wasm_bindgen(getter)]
    pub fn omega_frac(&self) -> Vec<f64> {
        self.omega_frac.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn density(&self) -> Vec<f64> {
        self.density.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn peak_positions(&self) -> Vec<f64> {
        self.peak_positions.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn shape(&self) -> String {
        self.shape.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[wasm_bindgen(getter)]
    pub fn g(&self) -> f64 {
        self.g
    }
}

pub fn spectrum_view(xi: f64, zeta: f64, points: usize) -> Result<SpectrumView> {
    let groups = DimensionlessGroups::at(xi, zeta)?;
    let s = spectrum_grid(&groups, ReferencePoint::WILSON.epsilon, points)?;
    let report = classify(&s, SHARP_FWHM)?;
    Ok(SpectrumView {
        peak_positions: report.peak_positions,
        shape: report.shape.as_str().to_string(),
        a: groups.a,
        g: groups.g,
        omega_frac: s.omega_frac,
        density: s.density,
    })
}

/// Row-major `log₁₀ ρ` over `xi_points × zeta_points`.
pub fn log_rho_map(
    xi: (f64, f64),
    xi_points: usize,
    zeta: (f64, f64),
    zeta_points: usize,
) -> Result<Vec<f64>> {
    if xi_points * zeta_points > MAX_CELLS {
        return Err(dce_core::Error::DegenerateGrid(format!(
            "{xi_points}x{zeta_points} grid exceeds {MAX_CELLS} cells"
        )));
    }
    let zetas = linspace(zeta.0, zeta.1, zeta_points);
    let mut out = Vec::with_capacity(xi_points * zeta_points);
    for x in linspace(xi.0, xi.1, xi_points) {
        for &z in &zetas {
            out.push(rho(x, z)?.log10());
        }
    }
    Ok(out)
}

/// Rate ratio `R(ξ, ζ)/R(1, 1)` along a line of `ζ` values.
pub fn rate_cut(xi: f64, zeta: (f64, f64), points: usize) -> Result<Vec<f64>> {
    let cfg = QuadratureConfig::default().with_rel_tol(1e-6);
    linspace(zeta.0, zeta.1, points)
        .into_iter()
        .map(|z| rate_ratio(xi, z, &cfg))
        .collect()
}

fn js(e: dce_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen(js_name = spectrum)]
pub fn spectrum_js(
    xi: f64,
    zeta: f64,
    points: usize,
) -> std::result::Result<SpectrumView, JsError> {
    spectrum_view(xi, zeta, points).map_err(js)
}

#[wasm_bindgen(js_name = logRhoMap)]
pub fn log_rho_map_js(
    xi_min: f64,
    xi_max: f64,
    xi_points: usize,
    zeta_min: f64,
    zeta_max: f64,
    zeta_points: usize,
) -> std::result::Result<Vec<f64>, JsError> {
    log_rho_map(
        (xi_min, xi_max),
        xi_points,
        (zeta_min, zeta_max),
        zeta_points,
    )
    .map_err(js)
}

#[wasm_bindgen(js_name = rateCut)]
pub fn rate_cut_js(
    xi: f64,
    zeta_min: f64,
    zeta_max: f64,
    points: usize,
) -> std::result::Result<Vec<f64>, JsError> {
    rate_cut(xi, (zeta_min, zeta_max), points).map_err(js)
}

/// `ζ` at which `ρ(ξ, ·)` peaks, or NaN when there is none.
#[wasm_bindgen(js_name = resonanceZeta)]
pub fn resonance_zeta_js(xi: f64) -> f64 {
    resonance_zeta(xi).unwrap_or(f64::NAN)
}

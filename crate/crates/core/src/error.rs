use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The integrand (or a user-supplied function) returned NaN or infinity.
    #[error("non-finite value {value} at x = {at}")]
    NonFinite { at: f64, value: f64 },

    /// Quadrature exhausted its budget without meeting the tolerance.
    #[error(
        "no convergence: estimate {value:e} with error {error:e} after {subdivisions} subdivisions"
    )]
    NotConverged {
        value: f64,
        error: f64,
        subdivisions: usize,
    },

    /// The maximizer's bracket does not contain an interior maximum.
    #[error("bracket [{lo}, {hi}] does not enclose an interior maximum (best at {at})")]
    Bracket { lo: f64, hi: f64, at: f64 },

    /// A sweep cell failed; carries the grid location.
    #[error("sweep cell (xi = {xi}, zeta = {zeta}) failed: {source}")]
    Cell {
        xi: f64,
        zeta: f64,
        #[source]
        source: Box<Error>,
    },

    /// Peak classification could not resolve the sampled curve.
    #[error("degenerate grid: {0}")]
    DegenerateGrid(String),

    /// Malformed tabulated drive data.
    #[error("invalid drive profile: {0}")]
    Profile(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

use num_complex::Complex64;
use thiserror::Error;

use crate::distrib::SweepPoint;
use crate::quad::IntegralResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument sits on (or within the pole tolerance of) a non-positive integer.
    #[error("gamma-family pole at z = {at}")]
    Pole { at: i64 },

    #[error("invalid argument: {0}")]
    Domain(String),

    /// Adaptive quadrature exhausted its budget; the best estimate is attached.
    #[error(
        "quadrature did not converge: value {re:e}{im:+e}i, error estimate {err:e} after {evals} evaluations",
        re = best.value.re,
        im = best.value.im,
        err = best.error_estimate,
        evals = best.evaluations
    )]
    NonConvergence { best: IntegralResult },

    #[error("series did not converge after {terms} terms (partial sum {partial})")]
    SeriesNonConvergence { partial: Complex64, terms: usize },

    /// A ladder sweep stopped part-way; points computed before the failure are kept.
    #[error("sweep failed at parameter {at:e}: {source}")]
    Sweep {
        at: f64,
        completed: Vec<SweepPoint>,
        source: Box<Error>,
    },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Rejects NaN/∞ escaping a computation.
pub(crate) fn finite(z: Complex64, what: &str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Domain(format!("{what} is not finite ({z})")))
    }
}

//! Crate-wide error type.

/// Everything that can go wrong across dispersion evaluation, speed solving,
/// simulation, front tracking, and the CLI plumbing.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Hypothesis (H) fails: the spreading-speed theory needs
    /// `alpha + beta > 0` and `alpha + a + beta > 1`.
    #[error(
        "hypothesis (H) fails for template [{alpha}, {a}, {beta}]: \
         requires alpha+beta > 0 and alpha+a+beta > 1"
    )]
    Hypothesis { alpha: f64, a: f64, beta: f64 },

    /// An exponential evaluation left the finite double range.
    #[error("evaluation overflow in {what} at mu = {mu}")]
    Overflow { what: &'static str, mu: f64 },

    /// A configuration value violates a structural invariant.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Not enough data to produce the requested estimate.
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// Two results that must agree disagree; indicates a solver defect.
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),

    /// The integrator produced a non-finite value.
    #[error("numerical blow-up at t = {time}, site {site}")]
    Blowup { time: f64, site: i64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

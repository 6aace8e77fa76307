use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the region where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series hit its term cap before the certified tail bound met the tolerance.
    #[error("series did not converge: tail bound {tail_bound:e} > {abs_tol:e} after {terms} terms")]
    NonConvergence {
        terms: usize,
        tail_bound: f64,
        abs_tol: f64,
    },

    /// The integrand produced a non-finite value or failed internally.
    #[error("integrand fault at t = {abscissa}: {reason}")]
    IntegrandFault { abscissa: f64, reason: String },

    /// A kernel denominator vanished numerically for an interior `z`.
    #[error("kernel denominator underflow ({denominator:e}) at t = {t}")]
    KernelFault { t: f64, denominator: f64 },

    #[error("invalid control: {0}")]
    InvalidControl(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

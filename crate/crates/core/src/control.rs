use crate::error::{Error, Result};

/// Smallest absolute tolerance a series evaluation may be asked for.
pub const ABS_TOL_FLOOR: f64 = 1e-14;

/// Truncation policy for series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalControl {
    abs_tol: f64,
    max_terms: usize,
}

impl EvalControl {
    pub fn new(abs_tol: f64, max_terms: usize) -> Result<Self> {
        if !(abs_tol >= ABS_TOL_FLOOR) || !abs_tol.is_finite() {
            return Err(Error::InvalidControl(format!(
                "abs_tol must be finite and at least {ABS_TOL_FLOOR:e}, got {abs_tol:e}"
            )));
        }
        if max_terms == 0 {
            return Err(Error::InvalidControl("max_terms must be at least 1".into()));
        }
        Ok(Self { abs_tol, max_terms })
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for EvalControl {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            max_terms: 1_000_000,
        }
    }
}

/// Stopping policy for adaptive quadrature.
///
/// Unlike [`EvalControl`] there is no tolerance floor: an unreachable tolerance simply
/// yields a result with `converged == false`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadControl {
    abs_tol: f64,
    max_depth: u32,
    max_evals: usize,
    integrand_noise: f64,
}

impl QuadControl {
    pub const DEFAULT_MAX_DEPTH: u32 = 40;
    pub const DEFAULT_MAX_EVALS: usize = 1_000_000;

    pub fn new(abs_tol: f64) -> Result<Self> {
        Self::with_limits(abs_tol, Self::DEFAULT_MAX_DEPTH, Self::DEFAULT_MAX_EVALS)
    }

    pub fn with_limits(abs_tol: f64, max_depth: u32, max_evals: usize) -> Result<Self> {
        if !(abs_tol > 0.0) || !abs_tol.is_finite() {
            return Err(Error::InvalidControl(format!(
                "quadrature abs_tol must be positive and finite, got {abs_tol:e}"
            )));
        }
        if max_evals == 0 {
            return Err(Error::InvalidControl("max_evals must be at least 1".into()));
        }
        Ok(Self {
            abs_tol,
            max_depth,
            max_evals,
            integrand_noise: 0.0,
        })
    }

    /// Declares that integrand values are only known to within `noise` in absolute value.
    ///
    /// Panels whose two estimates already agree to `noise × width` are not refined further,
    /// since the disagreement can no longer be told apart from the integrand's own error.
    /// Their error contribution is still the observed disagreement.
    pub fn with_integrand_noise(self, noise: f64) -> Result<Self> {
        if !(noise >= 0.0) || !noise.is_finite() {
            return Err(Error::InvalidControl(format!(
                "integrand noise must be non-negative and finite, got {noise:e}"
            )));
        }
        Ok(Self {
            integrand_noise: noise,
            ..self
        })
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }

    pub fn max_evals(&self) -> usize {
        self.max_evals
    }

    pub fn integrand_noise(&self) -> f64 {
        self.integrand_noise
    }
}

impl Default for QuadControl {
    fn default() -> Self {
        Self {
            abs_tol: 1e-11,
            max_depth: Self::DEFAULT_MAX_DEPTH,
            max_evals: Self::DEFAULT_MAX_EVALS,
            integrand_noise: 0.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_tolerance_below_floor() {
        assert!(EvalControl::new(1e-15, 10).is_err());
        assert!(EvalControl::new(f64::NAN, 10).is_err());
        assert!(EvalControl::new(1e-14, 10).is_ok());
    }

    #[test]
    fn rejects_zero_terms() {
        assert!(EvalControl::new(1e-10, 0).is_err());
    }

    #[test]
    fn quad_control_accepts_tiny_tolerance() {
        assert!(QuadControl::new(1e-20).is_ok());
        assert!(QuadControl::new(0.0).is_err());
        assert!(QuadControl::with_limits(1e-10, 40, 0).is_err());
    }
}

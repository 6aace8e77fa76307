//! Legendre chi function and its integral representations.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`] evaluates the Dirichlet-type series (χ_s, Li_s, ζ, λ, β and the odd
//!   sine/cosine series `S`, `C`) with certified truncation bounds.
//! * [`euler`] builds Euler polynomials in exact rational arithmetic and the closed
//!   forms of `S` and `C` at integer orders.
//! * [`kernels`] evaluates the rational trigonometric kernels that turn the series into
//!   integrals, including their boundary limits.
//! * [`quadrature`] is a globally adaptive Gauss–Legendre integrator whose nodes never
//!   touch panel endpoints, so removable endpoint singularities are never sampled.
//! * [`harness`] computes both sides of each integral identity and collects residuals.
//! * [`cli`] is the command-line front end used by the `legchi` binary.

pub mod cli;
pub mod control;
pub mod error;
pub mod euler;
pub mod format;
pub mod harness;
pub mod kernels;
pub mod quadrature;
pub mod series;
mod trig;

pub use control::{EvalControl, QuadControl};
pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Complex number used for arguments `z`, `s` and function values.
pub type ComplexValue = Complex64;

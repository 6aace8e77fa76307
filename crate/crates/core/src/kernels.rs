//! Rational trigonometric kernels of the integral representations.
//!
//! `kernel_sin` and `kernel_cos` take the reduced variable `t` (angle `πt`), the
//! Poisson-type kernels take the angle itself. Denominators are evaluated in the
//! cancellation-free forms
//!
//! ```text
//! 1 − 2w cos(2πt) + w²  = (1 − w)² + 4w sin²(πt)      (w = z²)
//! 1 − 2z cos θ + z²     = (1 − z)² + 4z sin²(θ/2)
//! ```
//!
//! which are polynomial identities and therefore hold for complex `z` as well.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::trig::{cos_pi, sin_pi};

/// Denominators below this magnitude are treated as a numerical fault for interior `z`.
pub const DENOMINATOR_FLOOR: f64 = 1e-12;

/// Denominators below this magnitude are flagged as near-singular in diagnostics.
const GUARD_THRESHOLD: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Regular,
    /// The stable denominator was small enough that the naive form would lose digits.
    NearSingularGuarded,
    /// `z` was a registered boundary point and the limit closed form was used.
    LimitSubstituted,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelEval {
    pub value: Complex64,
    pub regime: Regime,
}

fn check_z(z: Complex64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain(format!("z must be finite, got {z}")));
    }
    Ok(())
}

fn check_t(t: f64) -> Result<()> {
    if !t.is_finite() {
        return Err(Error::domain(format!("t must be finite, got {t}")));
    }
    Ok(())
}

fn interior(name: &str, z: Complex64) -> Result<()> {
    if z.norm() >= 1.0 {
        return Err(Error::domain(format!(
            "{name} requires |z| < 1 or a registered boundary point, got |z| = {}",
            z.norm()
        )));
    }
    Ok(())
}

fn guarded(numerator: Complex64, denominator: Complex64, t: f64) -> Result<KernelEval> {
    let mag = denominator.norm();
    if mag < DENOMINATOR_FLOOR {
        return Err(Error::KernelFault {
            t,
            denominator: mag,
        });
    }
    let regime = if mag < GUARD_THRESHOLD {
        Regime::NearSingularGuarded
    } else {
        Regime::Regular
    };
    Ok(KernelEval {
        value: numerator / denominator,
        regime,
    })
}

/// `(1 − w)² + 4w sin²`, with `w = z²`.
#[inline]
fn double_angle_denominator(w: Complex64, sin: f64) -> Complex64 {
    let one_minus = Complex64::new(1.0, 0.0) - w;
    one_minus * one_minus + w * (4.0 * sin * sin)
}

pub(crate) fn kernel_sin_parts(z: Complex64, sin: f64, t: f64) -> Result<KernelEval> {
    let w = z * z;
    let numerator = z * (Complex64::new(1.0, 0.0) + w) * (2.0 * sin);
    guarded(numerator, double_angle_denominator(w, sin), t)
}

pub(crate) fn kernel_cos_parts(z: Complex64, sin: f64, cos: f64, t: f64) -> Result<KernelEval> {
    let w = z * z;
    let numerator = z * (Complex64::new(1.0, 0.0) - w) * (2.0 * cos);
    guarded(numerator, double_angle_denominator(w, sin), t)
}

/// `2z(1+z²) sin(πt) / (1 − 2z² cos(2πt) + z⁴)`.
///
/// At exactly `z = 1` the limit `csc(πt)` is returned.
pub fn kernel_sin(z: Complex64, t: f64) -> Result<KernelEval> {
    check_z(z)?;
    check_t(t)?;
    let sin = sin_pi(t);
    if z == Complex64::new(1.0, 0.0) {
        if sin == 0.0 {
            return Err(Error::domain(format!(
                "kernel_sin at z = 1 is singular at integer t, got t = {t}"
            )));
        }
        return Ok(KernelEval {
            value: Complex64::new(1.0 / sin, 0.0),
            regime: Regime::LimitSubstituted,
        });
    }
    interior("kernel_sin", z)?;
    kernel_sin_parts(z, sin, t)
}

/// `2z(1−z²) cos(πt) / (1 − 2z² cos(2πt) + z⁴)`.
///
/// At exactly `z = i` the limit `i·sec(πt)` is returned.
pub fn kernel_cos(z: Complex64, t: f64) -> Result<KernelEval> {
    check_z(z)?;
    check_t(t)?;
    let cos = cos_pi(t);
    if z == Complex64::new(0.0, 1.0) {
        if cos == 0.0 {
            return Err(Error::domain(format!(
                "kernel_cos at z = i is singular at half-integer t, got t = {t}"
            )));
        }
        return Ok(KernelEval {
            value: Complex64::new(0.0, 1.0 / cos),
            regime: Regime::LimitSubstituted,
        });
    }
    interior("kernel_cos", z)?;
    kernel_cos_parts(z, sin_pi(t), cos, t)
}

fn check_angle(t: f64) -> Result<()> {
    check_t(t)?;
    if !(0.0..=2.0 * std::f64::consts::PI).contains(&t) {
        return Err(Error::domain(format!("t must lie in [0, 2π], got {t}")));
    }
    Ok(())
}

/// `(1 − z)² + 4z sin²(θ/2)`.
#[inline]
fn single_angle_denominator(z: Complex64, theta: f64) -> Complex64 {
    let half = (0.5 * theta).sin();
    let one_minus = Complex64::new(1.0, 0.0) - z;
    one_minus * one_minus + z * (4.0 * half * half)
}

/// Conjugate Poisson-type kernel `2z sin t / (1 − 2z cos t + z²)`.
pub fn poisson_sin(z: Complex64, t: f64) -> Result<KernelEval> {
    check_z(z)?;
    check_angle(t)?;
    interior("poisson_sin", z)?;
    guarded(z * (2.0 * t.sin()), single_angle_denominator(z, t), t)
}

/// Poisson kernel `(1 − z²) / (1 − 2z cos t + z²)`.
pub fn poisson_cos(z: Complex64, t: f64) -> Result<KernelEval> {
    check_z(z)?;
    check_angle(t)?;
    interior("poisson_cos", z)?;
    guarded(
        Complex64::new(1.0, 0.0) - z * z,
        single_angle_denominator(z, t),
        t,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn naive_sin(z: f64, t: f64) -> f64 {
        2.0 * z * (1.0 + z * z) * (PI * t).sin()
            / (1.0 - 2.0 * z * z * (2.0 * PI * t).cos() + z.powi(4))
    }

    #[test]
    fn kernel_sin_examples() {
        assert_eq!(kernel_sin(c(0.0), 0.3).unwrap().value, c(0.0));
        let v = kernel_sin(c(0.5), 0.25).unwrap();
        assert!((v.value.re - 1.25 * (PI / 4.0).sin() / 1.0625).abs() < 1e-15);
        assert!((v.value.re - 0.831_890_330_807_703).abs() < 1e-12);
        assert_eq!(v.regime, Regime::Regular);
        let v = kernel_sin(c(1.0), 0.25).unwrap();
        assert!((v.value.re - SQRT_2).abs() < 1e-15);
        assert_eq!(v.regime, Regime::LimitSubstituted);
    }

    #[test]
    fn kernel_cos_examples() {
        assert_eq!(kernel_cos(c(0.0), 0.3).unwrap().value, c(0.0));
        let v = kernel_cos(c(0.5), 0.0).unwrap().value;
        assert!((v.re - 0.75 / 0.5625).abs() < 1e-15);
        let v = kernel_cos(Complex64::new(0.0, 1.0), 0.0).unwrap();
        assert_eq!(v.value, Complex64::new(0.0, 1.0));
        assert_eq!(v.regime, Regime::LimitSubstituted);
        assert!(kernel_cos(Complex64::new(0.0, 1.0), 0.5).is_err());
    }

    #[test]
    fn poisson_examples() {
        assert_eq!(poisson_sin(c(0.0), 1.0).unwrap().value, c(0.0));
        assert!((poisson_sin(c(0.5), FRAC_PI_2).unwrap().value.re - 0.8).abs() < 1e-15);
        assert!(poisson_sin(c(0.5), PI).unwrap().value.re.abs() < 1e-15);
        assert_eq!(poisson_cos(c(0.0), 1.0).unwrap().value, c(1.0));
        assert!((poisson_cos(c(0.5), FRAC_PI_2).unwrap().value.re - 0.6).abs() < 1e-15);
        assert!((poisson_cos(c(0.5), 0.0).unwrap().value.re - 3.0).abs() < 1e-15);
    }

    #[test]
    fn boundary_points_are_literal_only() {
        assert!(kernel_sin(c(-1.0), 0.3).is_err());
        assert!(kernel_sin(Complex64::new(0.0, 1.0), 0.3).is_err());
        assert!(kernel_cos(c(1.0), 0.3).is_err());
        assert!(kernel_sin(c(1.0), 0.0).is_err());
        assert!(poisson_sin(c(1.0), 0.3).is_err());
        assert!(poisson_cos(c(0.5), 7.0).is_err());
        // Just inside the disk the interior closed form applies.
        let v = kernel_sin(c(1.0 - 1e-9), 0.25).unwrap();
        assert_eq!(v.regime, Regime::Regular);
    }

    #[test]
    fn stable_denominator_matches_naive_form() {
        for &z in &[0.1, 0.5, 0.9] {
            for i in 1..20 {
                let t = i as f64 / 20.0;
                let v = kernel_sin(c(z), t).unwrap().value.re;
                assert!((v - naive_sin(z, t)).abs() < 1e-13, "z={z} t={t}");
            }
        }
    }

    #[test]
    fn near_boundary_regime_is_flagged() {
        let z = c(1.0 - 1e-5);
        let v = kernel_sin(z, 1e-7).unwrap();
        assert_eq!(v.regime, Regime::NearSingularGuarded);
    }

    #[test]
    fn reflection_symmetry() {
        for &z in &[0.2, 0.5, 0.8, -0.6] {
            for &t in &[0.1, 0.3, 0.45] {
                let a = kernel_sin(c(z), 1.0 - t).unwrap().value;
                let b = kernel_sin(c(z), t).unwrap().value;
                assert!((a - b).norm() < 1e-12);
                let a = kernel_cos(c(z), 1.0 - t).unwrap().value;
                let b = kernel_cos(c(z), t).unwrap().value;
                assert!((a + b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn odd_part_of_conjugate_poisson() {
        let zs = [
            c(0.1),
            c(0.45),
            c(0.8),
            Complex64::new(0.3, 0.4),
            Complex64::new(0.0, 0.6),
        ];
        let ts = [0.05, 0.2, 0.5, 0.77, 0.95];
        for &z in &zs {
            for &t in &ts {
                let k = kernel_sin(z, t).unwrap().value;
                let plus = poisson_sin(z, PI * t).unwrap().value;
                let minus = poisson_sin(-z, PI * t).unwrap().value;
                assert!((k - 0.5 * (plus - minus)).norm() < 1e-12, "z={z} t={t}");
                let k = kernel_cos(z, t).unwrap().value;
                let plus = poisson_cos(z, PI * t).unwrap().value;
                let minus = poisson_cos(-z, PI * t).unwrap().value;
                assert!((k - 0.5 * (plus - minus)).norm() < 1e-12, "z={z} t={t}");
            }
        }
    }

    #[test]
    fn approaches_cosecant_limit() {
        let t = 0.25;
        let limit = 1.0 / (PI * t).sin();
        let r3 = (kernel_sin(c(1.0 - 1e-3), t).unwrap().value.re - limit).abs();
        let r5 = (kernel_sin(c(1.0 - 1e-5), t).unwrap().value.re - limit).abs();
        assert!(r5 < r3);
        assert!(r5 < 1e-3);
    }

    #[test]
    fn approaches_secant_limit() {
        let t = 0.2;
        let limit = Complex64::new(0.0, 1.0 / (PI * t).cos());
        let z = Complex64::new(0.0, 1.0 - 1e-6);
        let v = kernel_cos(z, t).unwrap().value;
        assert!((v - limit).norm() < 1e-4);
    }
}

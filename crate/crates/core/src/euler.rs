//! Euler polynomials in exact rational arithmetic.
//!
//! `E_n(x)` is built from the Euler numbers through its expansion about `x = 1/2`,
//!
//! ```text
//! E_n(x) = Σ_j C(n, j) · (E_j / 2^j) · (x − 1/2)^{n−j},
//! ```
//!
//! and then re-expanded in powers of `x`. Both forms are kept; the floating-point
//! evaluator picks whichever has no cancellation at the requested point.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Highest supported degree.
pub const MAX_DEGREE: usize = 64;

pub type Rational = BigRational;

/// `E_n(x)` with exact coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct EulerPolynomial {
    degree: usize,
    /// Ascending powers of `x`.
    coeffs: Vec<Rational>,
    /// Ascending powers of `x − 1/2`.
    centered: Vec<Rational>,
    coeffs_f64: Vec<f64>,
    centered_f64: Vec<f64>,
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one(); n + 1];
    for k in 1..n {
        row[k] = &row[k - 1] * BigInt::from(n - k + 1) / BigInt::from(k);
    }
    row
}

/// Euler numbers `E_0, …, E_n` from the secant recurrence
/// `Σ_{j=0}^{m} C(2m, 2j) E_{2j} = 0` for `m ≥ 1`.
pub fn euler_numbers(n: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); n + 1];
    e[0] = BigInt::one();
    for m in 1..=n / 2 {
        let row = binomial_row(2 * m);
        let mut acc = BigInt::zero();
        for j in 0..m {
            acc += &row[2 * j] * &e[2 * j];
        }
        e[2 * m] = -acc;
    }
    e
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational coefficient fits in f64")
}

/// Builds `E_n`.
pub fn euler_polynomial(n: usize) -> Result<EulerPolynomial> {
    if n > MAX_DEGREE {
        return Err(Error::domain(format!(
            "Euler polynomial degree {n} exceeds the cap {MAX_DEGREE}"
        )));
    }
    let numbers = euler_numbers(n);
    let row = binomial_row(n);

    // Coefficient of (x - 1/2)^{n-j} is C(n, j) E_j / 2^j.
    let mut centered = vec![Rational::zero(); n + 1];
    for j in 0..=n {
        let scale = BigInt::one() << j;
        centered[n - j] = Rational::new(&row[j] * &numbers[j], scale);
    }

    // (x - 1/2)^m = Σ_i C(m, i) x^i (-1/2)^{m-i}
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (m, cm) in centered.iter().enumerate() {
        if cm.is_zero() {
            continue;
        }
        let mrow = binomial_row(m);
        for i in 0..=m {
            let shift = m - i;
            let mut term = Rational::new(mrow[i].clone(), BigInt::one() << shift) * cm;
            if shift % 2 == 1 {
                term = -term;
            }
            coeffs[i] += term;
        }
    }

    let coeffs_f64 = coeffs.iter().map(to_f64).collect();
    let centered_f64 = centered.iter().map(to_f64).collect();
    Ok(EulerPolynomial {
        degree: n,
        coeffs,
        centered,
        coeffs_f64,
        centered_f64,
    })
}

/// Shared, lazily built `E_n` for `n ≤ MAX_DEGREE`.
pub fn cached(n: usize) -> Result<&'static EulerPolynomial> {
    static TABLE: [OnceLock<EulerPolynomial>; MAX_DEGREE + 1] =
        [const { OnceLock::new() }; MAX_DEGREE + 1];
    if n > MAX_DEGREE {
        return Err(Error::domain(format!(
            "Euler polynomial degree {n} exceeds the cap {MAX_DEGREE}"
        )));
    }
    Ok(TABLE[n].get_or_init(|| euler_polynomial(n).expect("degree checked")))
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn horner_abs(coeffs: &[f64], x: f64) -> f64 {
    let ax = x.abs();
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * ax + c.abs())
}

impl EulerPolynomial {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Exact coefficients in ascending powers of `x`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact coefficients in ascending powers of `x − 1/2`.
    pub fn centered_coeffs(&self) -> &[Rational] {
        &self.centered
    }

    pub fn eval_exact(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in binary64.
    ///
    /// On `[0, 1]` the variable is chosen so that the nearest zero of interest sits at
    /// the origin: `x` on `[0, 1/4]`, `x − 1/2` on `(1/4, 3/4)` and the reflection
    /// `E_n(x) = (−1)^n E_n(1 − x)` on `[3/4, 1]`. Each shift is exact in floating point.
    pub fn evaluate(&self, x: f64) -> f64 {
        let (coeffs, u, sign) = self.route(x);
        sign * horner(coeffs, u)
    }

    /// Rounding-error bound for [`evaluate`](Self::evaluate) at `x`.
    pub fn rounding_bound(&self, x: f64) -> f64 {
        let (coeffs, u, _) = self.route(x);
        // Horner with n multiply-adds plus one rounding per coefficient conversion.
        let n = (2 * self.degree + 1) as f64;
        let gamma = n * f64::EPSILON / (1.0 - n * f64::EPSILON);
        gamma * horner_abs(coeffs, u)
    }

    fn route(&self, x: f64) -> (&[f64], f64, f64) {
        if (0.25..0.75).contains(&x) {
            (&self.centered_f64, x - 0.5, 1.0)
        } else if (0.75..=1.0).contains(&x) {
            let sign = if self.degree % 2 == 0 { 1.0 } else { -1.0 };
            (&self.coeffs_f64, 1.0 - x, sign)
        } else {
            (&self.coeffs_f64, x, 1.0)
        }
    }
}

/// Free-function form of [`EulerPolynomial::evaluate`].
pub fn evaluate(p: &EulerPolynomial, x: f64) -> f64 {
    p.evaluate(x)
}

/// `π^{2n+1} / (4 (2n)!)`.
pub fn sin_prefactor(n: u32) -> f64 {
    (1..=2 * n).fold(PI / 4.0, |acc, j| acc * (PI / j as f64))
}

/// `π^{2n} / (4 (2n−1)!)`, for `n ≥ 1`.
pub fn cos_prefactor(n: u32) -> f64 {
    (1..2 * n).fold(PI / 4.0, |acc, j| acc * (PI / j as f64))
}

fn sign(n: u32) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn check_unit(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::domain(format!("x must lie in [0, 1], got {x}")))
    }
}

/// `S(2n+1, πx) = (−1)^n π^{2n+1} / (4 (2n)!) · E_{2n}(x)` for `x ∈ [0, 1]`.
///
/// For `n = 0` the series is the square wave `π/4`, defined only on the open interval.
pub fn closed_form_s(n: u32, x: f64) -> Result<f64> {
    check_unit(x)?;
    if n == 0 {
        if x == 0.0 || x == 1.0 {
            return Err(Error::domain(
                "closed_form_S with n = 0 requires 0 < x < 1".to_string(),
            ));
        }
        return Ok(PI / 4.0);
    }
    let p = cached(2 * n as usize)?;
    Ok(sign(n) * sin_prefactor(n) * p.evaluate(x))
}

/// `C(2n, πx) = (−1)^n π^{2n} / (4 (2n−1)!) · E_{2n−1}(x)` for `x ∈ [0, 1]`, `n ≥ 1`.
pub fn closed_form_c(n: u32, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("closed_form_C requires n >= 1".to_string()));
    }
    check_unit(x)?;
    let p = cached(2 * n as usize - 1)?;
    Ok(sign(n) * cos_prefactor(n) * p.evaluate(x))
}

/// Leading coefficient test used by the invariants.
pub fn is_monic(p: &EulerPolynomial) -> bool {
    p.coeffs.last().is_some_and(|c| c.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn coeffs(n: usize) -> Vec<Rational> {
        euler_polynomial(n).unwrap().coeffs().to_vec()
    }

    #[test]
    fn low_degree_examples() {
        assert_eq!(coeffs(0), vec![q(1, 1)]);
        assert_eq!(coeffs(1), vec![q(-1, 2), q(1, 1)]);
        assert_eq!(coeffs(2), vec![q(0, 1), q(-1, 1), q(1, 1)]);
        assert_eq!(coeffs(3), vec![q(1, 4), q(0, 1), q(-3, 2), q(1, 1)]);
        assert_eq!(
            coeffs(4),
            vec![q(0, 1), q(1, 1), q(0, 1), q(-2, 1), q(1, 1)]
        );
    }

    #[test]
    fn euler_number_values() {
        let e: Vec<i64> = euler_numbers(10)
            .iter()
            .map(|v| v.to_i64().unwrap())
            .collect();
        assert_eq!(e, vec![1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521]);
    }

    #[test]
    fn evaluate_examples() {
        let e1 = euler_polynomial(1).unwrap();
        let e2 = euler_polynomial(2).unwrap();
        let e4 = euler_polynomial(4).unwrap();
        assert_eq!(e1.evaluate(0.5), 0.0);
        assert_eq!(e2.evaluate(0.5), -0.25);
        assert_eq!(e4.evaluate(0.5), 5.0 / 16.0);
        assert_eq!(evaluate(&e4, 0.0), 0.0);
        assert_eq!(evaluate(&e4, 1.0), 0.0);
    }

    #[test]
    fn degree_cap() {
        assert!(euler_polynomial(64).is_ok());
        assert!(euler_polynomial(65).is_err());
        assert!(cached(65).is_err());
    }

    #[test]
    fn structural_invariants() {
        let half = q(1, 2);
        let numbers = euler_numbers(40);
        for n in 0..=40usize {
            let p = euler_polynomial(n).unwrap();
            assert!(is_monic(&p), "E_{n} monic");
            let mid = p.eval_exact(&half);
            assert_eq!(
                mid,
                Rational::new(numbers[n].clone(), BigInt::one() << n),
                "E_{n}(1/2)"
            );
            if n >= 1 {
                let ends = p.eval_exact(&Rational::zero()) + p.eval_exact(&Rational::one());
                assert!(ends.is_zero(), "E_{n}(0) + E_{n}(1)");
            }
        }
    }

    #[test]
    fn reflection_symmetry_is_exact() {
        // E_n(1 - x) = (-1)^n E_n(x) coefficientwise: expand the left side.
        for n in 0..=30usize {
            let p = euler_polynomial(n).unwrap();
            let mut reflected = vec![Rational::zero(); n + 1];
            for (m, c) in p.coeffs().iter().enumerate() {
                let row = binomial_row(m);
                for (i, b) in row.iter().enumerate() {
                    let mut term = c * Rational::from_integer(b.clone());
                    if i % 2 == 1 {
                        term = -term;
                    }
                    reflected[i] += term;
                }
            }
            for (a, b) in reflected.iter().zip(p.coeffs()) {
                let expected = if n % 2 == 0 { b.clone() } else { -b.clone() };
                assert_eq!(*a, expected, "degree {n}");
            }
        }
    }

    #[test]
    fn complement_identity_is_exact() {
        // E_n(x+1) + E_n(x) = 2 x^n, coefficientwise.
        for n in 0..=30usize {
            let p = euler_polynomial(n).unwrap();
            let mut shifted = vec![Rational::zero(); n + 1];
            for (m, c) in p.coeffs().iter().enumerate() {
                for (i, b) in binomial_row(m).iter().enumerate() {
                    shifted[i] += c * Rational::from_integer(b.clone());
                }
            }
            for i in 0..=n {
                let sum = &shifted[i] + &p.coeffs()[i];
                let expected = if i == n { q(2, 1) } else { Rational::zero() };
                assert_eq!(sum, expected, "degree {n}, power {i}");
            }
        }
    }

    #[test]
    fn generating_function_small_t() {
        // Σ_{n≤20} E_n(x) tⁿ/n! against 2e^{tx}/(e^t+1), t well inside the radius π.
        for t in [0.1, 0.5] {
            for x in [0.0, 0.3, 1.0] {
                let mut partial = 0.0;
                let mut tn_over_fact = 1.0;
                for n in 0..=20usize {
                    if n > 0 {
                        tn_over_fact *= t / n as f64;
                    }
                    partial += cached(n).unwrap().evaluate(x) * tn_over_fact;
                }
                let exact = 2.0 * (t * x).exp() / (t.exp() + 1.0);
                assert!((partial - exact).abs() < 1e-12, "t={t} x={x}");
            }
        }
    }

    #[test]
    fn floating_evaluation_matches_exact() {
        for n in [1usize, 2, 5, 6, 11, 12] {
            let p = euler_polynomial(n).unwrap();
            for i in 0..=64 {
                let x = i as f64 / 64.0;
                let exact = p.eval_exact(&Rational::from_f64(x).unwrap()).to_f64().unwrap();
                let got = p.evaluate(x);
                assert!(
                    (got - exact).abs() <= p.rounding_bound(x) + f64::EPSILON * exact.abs(),
                    "n={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_s(1, 0.0).unwrap(), 0.0);
        let b3 = PI.powi(3) / 32.0;
        assert!((closed_form_s(1, 0.5).unwrap() - b3).abs() < 1e-15);
        assert!((closed_form_s(1, 0.25).unwrap() - 3.0 * PI.powi(3) / 128.0).abs() < 1e-15);
        assert!(closed_form_s(0, 0.0).is_err());
        assert!((closed_form_s(0, 0.3).unwrap() - PI / 4.0).abs() < 1e-16);
        assert!(closed_form_s(1, 1.5).is_err());

        assert_eq!(closed_form_c(1, 0.5).unwrap(), 0.0);
        assert!((closed_form_c(1, 0.0).unwrap() - PI * PI / 8.0).abs() < 1e-15);
        // 11π⁴/1536
        assert!((closed_form_c(2, 0.25).unwrap() - 11.0 * PI.powi(4) / 1536.0).abs() < 1e-14);
        assert!(closed_form_c(0, 0.5).is_err());
    }

    #[test]
    fn prefactors() {
        assert!((sin_prefactor(1) - PI.powi(3) / 8.0).abs() < 1e-14);
        assert!((cos_prefactor(1) - PI.powi(2) / 4.0).abs() < 1e-15);
        assert!((sin_prefactor(3) - PI.powi(7) / (4.0 * 720.0)).abs() < 1e-13);
        assert!((cos_prefactor(3) - PI.powi(6) / (4.0 * 120.0)).abs() < 1e-13);
    }
}

//! Two-sided verification of the integral representations.
//!
//! Each identity is evaluated once through its series or closed form and once through
//! quadrature of the corresponding kernel integral; the pair is stored as an
//! [`IdentityCase`] and collected into a [`VerificationReport`].

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::control::{EvalControl, QuadControl};
use crate::error::{Error, Result};
use crate::euler;
use crate::format::{json_complex, json_f64, json_string};
use crate::kernels::{self, kernel_cos_parts, kernel_sin_parts};
use crate::quadrature::{try_integrate, try_integrate_removable, QuadratureResult};
use crate::series::{self, TrigSeries};

pub use crate::series::TrigKind as Kind;

/// Largest `|z|` accepted by the integral routes.
pub const MAX_Z: f64 = 0.95;
/// Largest `n` accepted by the Euler-polynomial routes.
pub const MAX_N: u32 = 6;

/// Upper limit `δ` of the reduced-variable integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Delta {
    Half,
    One,
}

impl Delta {
    pub const BOTH: [Delta; 2] = [Delta::Half, Delta::One];

    pub fn value(self) -> f64 {
        match self {
            Delta::Half => 0.5,
            Delta::One => 1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Delta::Half => "1/2",
            Delta::One => "1",
        }
    }
}

/// Fraction `α` of the full period `2π` in the angle-variable integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alpha {
    Quarter,
    Half,
    One,
}

impl Alpha {
    pub fn value(self) -> f64 {
        match self {
            Alpha::Quarter => 0.25,
            Alpha::Half => 0.5,
            Alpha::One => 1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Alpha::Quarter => "1/4",
            Alpha::Half => "1/2",
            Alpha::One => "1",
        }
    }
}

/// `Odd` yields χ_{2n+1} from `E_{2n}`, `Even` yields χ_{2n} from `E_{2n−1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Odd,
    Even,
}

fn kind_label(kind: Kind) -> &'static str {
    match kind {
        Kind::Sin => "sin",
        Kind::Cos => "cos",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[allow(non_camel_case_types)]
pub enum IdentityId {
    T1_8a,
    T1_8b,
    T2_9a,
    T2_9b,
    C_10a,
    C_10b,
    R2_zeta,
    L1_11a,
    L1_11b,
    L2_15a,
    L2_15b,
    E16_quarter,
}

impl IdentityId {
    pub const ALL: [IdentityId; 12] = [
        IdentityId::T1_8a,
        IdentityId::T1_8b,
        IdentityId::T2_9a,
        IdentityId::T2_9b,
        IdentityId::C_10a,
        IdentityId::C_10b,
        IdentityId::R2_zeta,
        IdentityId::L1_11a,
        IdentityId::L1_11b,
        IdentityId::L2_15a,
        IdentityId::L2_15b,
        IdentityId::E16_quarter,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::T1_8a => "T1_8a",
            IdentityId::T1_8b => "T1_8b",
            IdentityId::T2_9a => "T2_9a",
            IdentityId::T2_9b => "T2_9b",
            IdentityId::C_10a => "C_10a",
            IdentityId::C_10b => "C_10b",
            IdentityId::R2_zeta => "R2_zeta",
            IdentityId::L1_11a => "L1_11a",
            IdentityId::L1_11b => "L1_11b",
            IdentityId::L2_15a => "L2_15a",
            IdentityId::L2_15b => "L2_15b",
            IdentityId::E16_quarter => "E16_quarter",
        }
    }

    /// Lemma identities are written integral-first; the others series-first.
    pub fn integral_on_left(self) -> bool {
        matches!(
            self,
            IdentityId::L1_11a
                | IdentityId::L1_11b
                | IdentityId::L2_15a
                | IdentityId::L2_15b
                | IdentityId::E16_quarter
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameters of a single case; only the fields meaningful for the identity are set.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Params {
    pub z: Option<Complex64>,
    pub s: Option<Complex64>,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub delta: Option<Delta>,
    pub alpha: Option<Alpha>,
    pub kind: Option<Kind>,
}

impl Params {
    fn to_json(&self) -> String {
        let mut fields = Vec::new();
        if let Some(z) = self.z {
            fields.push(format!("\"z\":{}", json_complex(z)));
        }
        if let Some(s) = self.s {
            fields.push(format!("\"s\":{}", json_complex(s)));
        }
        if let Some(n) = self.n {
            fields.push(format!("\"n\":{n}"));
        }
        if let Some(k) = self.k {
            fields.push(format!("\"k\":{k}"));
        }
        if let Some(d) = self.delta {
            fields.push(format!("\"delta\":\"{}\"", d.label()));
        }
        if let Some(a) = self.alpha {
            fields.push(format!("\"alpha\":\"{}\"", a.label()));
        }
        if let Some(kind) = self.kind {
            fields.push(format!("\"kind\":\"{}\"", kind_label(kind)));
        }
        format!("{{{}}}", fields.join(","))
    }

    /// Same parameters with `delta` removed, for pairing δ = 1/2 with δ = 1.
    fn without_delta(&self) -> Params {
        Params {
            delta: None,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub params: Params,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    pub tol: f64,
    /// `abs_err <= tol`.
    pub pass: bool,
    /// Quadrature met its tolerance on the integral side.
    pub converged: bool,
    /// Error estimate of the integral side (quadrature plus propagated series tail).
    pub error_estimate: f64,
    /// Set when the case could not be evaluated at all.
    pub error: Option<String>,
}

impl IdentityCase {
    fn new(
        id: IdentityId,
        params: Params,
        lhs: Complex64,
        rhs: Complex64,
        tol: f64,
        integral: &QuadratureResult,
    ) -> Self {
        let abs_err = (lhs - rhs).norm();
        Self {
            id,
            params,
            lhs,
            rhs,
            abs_err,
            tol,
            pass: abs_err <= tol,
            converged: integral.converged,
            error_estimate: integral.error_estimate,
            error: None,
        }
    }

    fn failed(id: IdentityId, params: Params, tol: f64, err: &Error) -> Self {
        Self {
            id,
            params,
            lhs: Complex64::new(f64::NAN, f64::NAN),
            rhs: Complex64::new(f64::NAN, f64::NAN),
            abs_err: f64::INFINITY,
            tol,
            pass: false,
            converged: true,
            error_estimate: f64::INFINITY,
            error: Some(err.to_string()),
        }
    }

    pub fn integral_value(&self) -> Complex64 {
        if self.id.integral_on_left() {
            self.lhs
        } else {
            self.rhs
        }
    }

    pub fn status(&self) -> CaseStatus {
        if !self.converged {
            CaseStatus::Unconverged
        } else if self.pass {
            CaseStatus::Passed
        } else {
            CaseStatus::Failed
        }
    }

    fn to_json(&self) -> String {
        let mut out = format!(
            "{{\"id\":{},\"params\":{},\"lhs\":{},\"rhs\":{},\"abs_err\":{},\"tol\":{},\"pass\":{},\"converged\":{},\"error_estimate\":{}",
            json_string(self.id.as_str()),
            self.params.to_json(),
            json_complex(self.lhs),
            json_complex(self.rhs),
            json_f64(self.abs_err),
            json_f64(self.tol),
            self.pass,
            self.converged,
            json_f64(self.error_estimate),
        );
        if let Some(e) = &self.error {
            out.push_str(&format!(",\"error\":{}", json_string(e)));
        }
        out.push('}');
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseStatus {
    Passed,
    Failed,
    Unconverged,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub unconverged: usize,
}

/// A documented numerical side result that is not itself a pass/fail identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Exhibit {
    pub label: String,
    pub params: Params,
    pub value: Complex64,
    pub reference: Complex64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<IdentityCase>,
    pub summary: Summary,
    pub exhibits: Vec<Exhibit>,
    pub untested: Vec<String>,
}

impl VerificationReport {
    fn assemble(suite: &str, mut cases: Vec<IdentityCase>, exhibits: Vec<Exhibit>, untested: Vec<String>) -> Self {
        cases.sort_by_key(|c| c.id);
        let mut summary = Summary {
            total: cases.len(),
            ..Summary::default()
        };
        for c in &cases {
            match c.status() {
                CaseStatus::Passed => summary.passed += 1,
                CaseStatus::Failed => summary.failed += 1,
                CaseStatus::Unconverged => summary.unconverged += 1,
            }
        }
        Self {
            suite: suite.to_string(),
            cases,
            summary,
            exhibits,
            untested,
        }
    }

    /// Pairs of cases that differ only in δ, as `(δ = 1/2, δ = 1)`.
    pub fn delta_pairs(&self) -> Vec<(&IdentityCase, &IdentityCase)> {
        let mut pairs = Vec::new();
        for half in self.cases.iter().filter(|c| c.params.delta == Some(Delta::Half)) {
            let key = half.params.without_delta();
            if let Some(one) = self.cases.iter().find(|c| {
                c.id == half.id
                    && c.params.delta == Some(Delta::One)
                    && c.params.without_delta() == key
            }) {
                pairs.push((half, one));
            }
        }
        pairs
    }

    pub fn to_json(&self) -> String {
        let cases: Vec<String> = self.cases.iter().map(IdentityCase::to_json).collect();
        let exhibits: Vec<String> = self
            .exhibits
            .iter()
            .map(|e| {
                format!(
                    "{{\"label\":{},\"params\":{},\"value\":{},\"reference\":{},\"abs_diff\":{}}}",
                    json_string(&e.label),
                    e.params.to_json(),
                    json_complex(e.value),
                    json_complex(e.reference),
                    json_f64((e.value - e.reference).norm()),
                )
            })
            .collect();
        let untested: Vec<String> = self.untested.iter().map(|u| json_string(u)).collect();
        format!(
            "{{\"suite\":{},\"cases\":[{}],\"summary\":{{\"total\":{},\"passed\":{},\"failed\":{},\"unconverged\":{}}},\"exhibits\":[{}],\"untested\":[{}]}}\n",
            json_string(&self.suite),
            cases.join(","),
            self.summary.total,
            self.summary.passed,
            self.summary.failed,
            self.summary.unconverged,
            exhibits.join(","),
            untested.join(","),
        )
    }
}

/// Tolerances used by the harness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarnessConfig {
    pub series: EvalControl,
    pub quad: QuadControl,
    /// Pass tolerance for theorem and corollary cases.
    pub identity_tol: f64,
    /// Pass tolerance for lemma cases.
    pub lemma_tol: f64,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self {
            series: EvalControl::default(),
            quad: QuadControl::default(),
            identity_tol: 1e-8,
            lemma_tol: 1e-9,
        }
    }
}

fn check_z(z: Complex64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > MAX_Z {
        return Err(Error::domain(format!(
            "integral routes require |z| <= {MAX_Z}, got z = {z}"
        )));
    }
    Ok(())
}

fn check_n(n: u32) -> Result<()> {
    if !(1..=MAX_N).contains(&n) {
        return Err(Error::domain(format!("n must lie in 1..={MAX_N}, got {n}")));
    }
    Ok(())
}

fn as_integer(s: Complex64) -> Option<u32> {
    (s.im == 0.0 && s.re.fract() == 0.0 && s.re >= 1.0 && s.re <= 2.0 * MAX_N as f64 + 1.0)
        .then_some(s.re as u32)
}

fn sign(n: u32) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Source of `S(s, πt)` or `C(s, πt)` inside the Theorem-1 integrand.
enum SeriesFactor {
    Closed { kind: Kind, n: u32 },
    Direct(TrigSeries),
}

impl SeriesFactor {
    fn new(kind: Kind, s: Complex64, ctl: &EvalControl) -> Result<Self> {
        match (kind, as_integer(s)) {
            (Kind::Sin, Some(m)) if m % 2 == 1 && m >= 3 => Ok(Self::Closed { kind, n: (m - 1) / 2 }),
            (Kind::Cos, Some(m)) if m % 2 == 0 => Ok(Self::Closed { kind, n: m / 2 }),
            _ => TrigSeries::new(kind, s, ctl).map(Self::Direct),
        }
    }

    fn tail_bound(&self) -> f64 {
        match self {
            Self::Closed { .. } => 0.0,
            Self::Direct(series) => series.tail_bound(),
        }
    }

    fn at(&self, t: f64) -> Result<Complex64> {
        match self {
            Self::Closed { kind: Kind::Sin, n } => Ok(euler::closed_form_s(*n, t)?.into()),
            Self::Closed { kind: Kind::Cos, n } => Ok(euler::closed_form_c(*n, t)?.into()),
            Self::Direct(series) => Ok(series.eval(PI * t)),
        }
    }
}

/// `(1/δ) ∫₀^δ S(s, πt) K_sin(z, t) dt` or the cosine analogue; both equal `χ_s(z)`.
///
/// The order `s` must have `Re s >= 3`, or be an odd integer (sine kind) or even integer
/// (cosine kind) for which the Euler closed form replaces the series. The returned error
/// estimate includes the propagated series truncation, using
/// `(1/δ)∫|K| ≤ 2|z| / (1 − |z|²)`.
pub fn chi_via_integral(
    z: Complex64,
    s: Complex64,
    delta: Delta,
    kind: Kind,
    cfg: &HarnessConfig,
) -> Result<QuadratureResult> {
    check_z(z)?;
    let factor = SeriesFactor::new(kind, s, &cfg.series)?;
    let d = delta.value();
    let r = z.norm();
    // |K| <= 2|z| / (1 − |z|²), so the truncated series perturbs the integrand by at most this.
    let propagated = factor.tail_bound() * 2.0 * r / (1.0 - r * r);
    let quad = cfg.quad.with_integrand_noise(propagated)?;
    let integral = try_integrate(
        |t| {
            let kernel = match kind {
                Kind::Sin => kernels::kernel_sin(z, t)?,
                Kind::Cos => kernels::kernel_cos(z, t)?,
            };
            Ok::<_, Error>(factor.at(t)? * kernel.value)
        },
        0.0,
        d,
        &quad,
    )?;
    let mut result = integral.scaled(Complex64::new(1.0 / d, 0.0));
    result.error_estimate += propagated;
    Ok(result)
}

/// χ_{2n+1}(z) (odd parity) or χ_{2n}(z) (even parity) from the Euler-polynomial integrals.
pub fn chi_via_euler(
    z: Complex64,
    n: u32,
    delta: Delta,
    parity: Parity,
    cfg: &HarnessConfig,
) -> Result<QuadratureResult> {
    check_z(z)?;
    check_n(n)?;
    let d = delta.value();
    let (poly, prefactor) = match parity {
        Parity::Odd => (euler::cached(2 * n as usize)?, euler::sin_prefactor(n)),
        Parity::Even => (euler::cached(2 * n as usize - 1)?, euler::cos_prefactor(n)),
    };
    let integral = try_integrate(
        |t| {
            let kernel = match parity {
                Parity::Odd => kernels::kernel_sin(z, t)?,
                Parity::Even => kernels::kernel_cos(z, t)?,
            };
            Ok::<_, Error>(kernel.value * poly.evaluate(t))
        },
        0.0,
        d,
        &cfg.quad,
    )?;
    Ok(integral.scaled(Complex64::new(sign(n) * prefactor / d, 0.0)))
}

/// λ(2n+1) from `∫₀^δ E_{2n}(t) csc(πt) dt`; singular endpoints are panel edges.
pub fn lambda_via_integral(n: u32, delta: Delta, cfg: &HarnessConfig) -> Result<QuadratureResult> {
    check_n(n)?;
    let poly = euler::cached(2 * n as usize)?;
    let d = delta.value();
    let singular: &[f64] = match delta {
        Delta::Half => &[0.0],
        Delta::One => &[0.0, 1.0],
    };
    let one = Complex64::new(1.0, 0.0);
    let integral = try_integrate_removable(
        |t| Ok::<_, Error>(kernels::kernel_sin(one, t)?.value.re * poly.evaluate(t)),
        0.0,
        d,
        singular,
        &cfg.quad,
    )?;
    Ok(integral.scaled(Complex64::new(sign(n) * euler::sin_prefactor(n) / d, 0.0)))
}

/// β(2n) from `∫₀^δ E_{2n−1}(t) sec(πt) dt`, split at `t = 1/2`.
pub fn beta_via_integral(n: u32, delta: Delta, cfg: &HarnessConfig) -> Result<QuadratureResult> {
    check_n(n)?;
    let poly = euler::cached(2 * n as usize - 1)?;
    let d = delta.value();
    let i = Complex64::new(0.0, 1.0);
    // kernel_cos(i, t) = i·sec(πt)
    let integral = try_integrate_removable(
        |t| Ok::<_, Error>(kernels::kernel_cos(i, t)?.value.im * poly.evaluate(t)),
        0.0,
        d,
        &[0.5],
        &cfg.quad,
    )?;
    Ok(integral.scaled(Complex64::new(sign(n) * euler::cos_prefactor(n) / d, 0.0)))
}

/// ζ(2n+1) = 2^{2n+1} / (2^{2n+1} − 1) · λ(2n+1).
pub fn zeta_odd_via_integral(n: u32, delta: Delta, cfg: &HarnessConfig) -> Result<QuadratureResult> {
    let lambda = lambda_via_integral(n, delta, cfg)?;
    let p = 2f64.powi(2 * n as i32 + 1);
    Ok(lambda.scaled(Complex64::new(p / (p - 1.0), 0.0)))
}

fn check_lemma_z(z: f64) -> Result<()> {
    if !z.is_finite() || z.abs() > MAX_Z {
        return Err(Error::domain(format!("lemma checks require |z| <= {MAX_Z}, got {z}")));
    }
    Ok(())
}

/// `∫₀^{2απ} sin(nt)·P_sin(z,t) dt` (or the cosine pair) against `2απ zⁿ`.
pub fn lemma1_residual(n: u32, z: f64, alpha: Alpha, kind: Kind, cfg: &HarnessConfig) -> Result<IdentityCase> {
    check_lemma_z(z)?;
    if !(1..=10).contains(&n) {
        return Err(Error::domain(format!("lemma 1 checks require 1 <= n <= 10, got {n}")));
    }
    if alpha == Alpha::Quarter {
        return Err(Error::domain("lemma 1 holds for alpha = 1/2 and alpha = 1 only".to_string()));
    }
    let zc = Complex64::new(z, 0.0);
    let nf = n as f64;
    let upper = 2.0 * alpha.value() * PI;
    let integral = try_integrate(
        |t| {
            Ok::<_, Error>(match kind {
                Kind::Sin => (nf * t).sin() * kernels::poisson_sin(zc, t)?.value,
                Kind::Cos => (nf * t).cos() * kernels::poisson_cos(zc, t)?.value,
            })
        },
        0.0,
        upper,
        &cfg.quad,
    )?;
    let closed = Complex64::new(upper * z.powi(n as i32), 0.0);
    let id = match kind {
        Kind::Sin => IdentityId::L1_11a,
        Kind::Cos => IdentityId::L1_11b,
    };
    let params = Params {
        z: Some(zc),
        n: Some(n),
        alpha: Some(alpha),
        kind: Some(kind),
        ..Params::default()
    };
    Ok(IdentityCase::new(id, params, integral.value, closed, cfg.lemma_tol, &integral))
}

/// Integrates `trig((2k+1)θ)·K(z, θ)` over `[0, upper]` with the double-angle kernels.
fn odd_harmonic_integral(
    k: u32,
    z: f64,
    upper: f64,
    harmonic: Kind,
    kernel: Kind,
    cfg: &HarnessConfig,
) -> Result<QuadratureResult> {
    let zc = Complex64::new(z, 0.0);
    let m = (2 * k + 1) as f64;
    try_integrate(
        |theta| {
            let (s, c) = theta.sin_cos();
            let kv = match kernel {
                Kind::Sin => kernel_sin_parts(zc, s, theta)?.value,
                Kind::Cos => kernel_cos_parts(zc, s, c, theta)?.value,
            };
            let h = match harmonic {
                Kind::Sin => (m * theta).sin(),
                Kind::Cos => (m * theta).cos(),
            };
            Ok::<_, Error>(kv * h)
        },
        0.0,
        upper,
        &cfg.quad,
    )
}

fn check_k(k: u32) -> Result<()> {
    if k > 10 {
        return Err(Error::domain(format!("k must lie in 0..=10, got {k}")));
    }
    Ok(())
}

/// `∫₀^{δπ} trig((2k+1)t)·K(z, t) dt` against `δπ z^{2k+1}`.
///
/// The cosine kind pairs the cosine kernel with `cos((2k+1)t)`, matching the cosine
/// series it expands; [`sine_harmonic_cosine_kernel_exhibit`] evaluates the sine pairing.
pub fn lemma2_residual(k: u32, z: f64, delta: Delta, kind: Kind, cfg: &HarnessConfig) -> Result<IdentityCase> {
    check_lemma_z(z)?;
    check_k(k)?;
    let upper = delta.value() * PI;
    let integral = odd_harmonic_integral(k, z, upper, kind, kind, cfg)?;
    let closed = Complex64::new(upper * z.powi(2 * k as i32 + 1), 0.0);
    let id = match kind {
        Kind::Sin => IdentityId::L2_15a,
        Kind::Cos => IdentityId::L2_15b,
    };
    let params = Params {
        z: Some(Complex64::new(z, 0.0)),
        k: Some(k),
        delta: Some(delta),
        kind: Some(kind),
        ..Params::default()
    };
    Ok(IdentityCase::new(id, params, integral.value, closed, cfg.lemma_tol, &integral))
}

/// The sine-kernel identity over a quarter period: `∫₀^{π/2} … = (π/2) z^{2k+1}`.
pub fn eq16_quarter_residual(k: u32, z: f64, cfg: &HarnessConfig) -> Result<IdentityCase> {
    check_lemma_z(z)?;
    check_k(k)?;
    let upper = 2.0 * Alpha::Quarter.value() * PI;
    let integral = odd_harmonic_integral(k, z, upper, Kind::Sin, Kind::Sin, cfg)?;
    let closed = Complex64::new(upper * z.powi(2 * k as i32 + 1), 0.0);
    let params = Params {
        z: Some(Complex64::new(z, 0.0)),
        k: Some(k),
        alpha: Some(Alpha::Quarter),
        ..Params::default()
    };
    Ok(IdentityCase::new(IdentityId::E16_quarter, params, integral.value, closed, cfg.lemma_tol, &integral))
}

/// The cosine kernel integrated against `sin((2k+1)t)` at `k = 1, z = 1/2, δ = 1/2`,
/// next to the value `δπ z^{2k+1}` it would need to match.
pub fn sine_harmonic_cosine_kernel_exhibit(cfg: &HarnessConfig) -> Result<Exhibit> {
    let (k, z, delta) = (1, 0.5, Delta::Half);
    let upper = delta.value() * PI;
    let integral = odd_harmonic_integral(k, z, upper, Kind::Sin, Kind::Cos, cfg)?;
    Ok(Exhibit {
        label: "L2_15b integrand with sin((2k+1)t) in place of cos((2k+1)t)".to_string(),
        params: Params {
            z: Some(Complex64::new(z, 0.0)),
            k: Some(k),
            delta: Some(delta),
            kind: Some(Kind::Cos),
            ..Params::default()
        },
        value: integral.value,
        reference: Complex64::new(upper * z.powi(3), 0.0),
    })
}

/// Which identity families a run covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemmas,
    Theorem1,
    Theorem2,
    Corollary,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Corollary => "corollary",
            Suite::All => "all",
        }
    }

    pub fn ids(self) -> Vec<IdentityId> {
        use IdentityId::*;
        match self {
            Suite::Lemmas => vec![L1_11a, L1_11b, L2_15a, L2_15b, E16_quarter],
            Suite::Theorem1 => vec![T1_8a, T1_8b],
            Suite::Theorem2 => vec![T2_9a, T2_9b],
            Suite::Corollary => vec![C_10a, C_10b, R2_zeta],
            Suite::All => IdentityId::ALL.to_vec(),
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemmas" => Ok(Suite::Lemmas),
            "theorem1" => Ok(Suite::Theorem1),
            "theorem2" => Ok(Suite::Theorem2),
            "corollary" => Ok(Suite::Corollary),
            "all" => Ok(Suite::All),
            other => Err(Error::domain(format!(
                "unknown suite {other:?}; expected lemmas, theorem1, theorem2, corollary or all"
            ))),
        }
    }
}

/// Parameter grid for [`run_suite`].
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub name: String,
    pub ids: Vec<IdentityId>,
    /// `z` values for the theorem checks (complex allowed).
    pub theorem_z: Vec<Complex64>,
    /// Orders `s` for the first theorem, each with the kinds it is checked for.
    pub theorem1_s: Vec<(Complex64, Vec<Kind>)>,
    /// `n` for the Euler-polynomial theorem and the corollary.
    pub n_values: Vec<u32>,
    pub deltas: Vec<Delta>,
    /// Real `z` values for the lemma checks.
    pub lemma_z: Vec<f64>,
    pub lemma_n: Vec<u32>,
    pub lemma_k: Vec<u32>,
}

impl Grid {
    /// The default verification grid for a suite.
    pub fn for_suite(suite: Suite) -> Self {
        let c = |re, im| Complex64::new(re, im);
        Self {
            name: suite.name().to_string(),
            ids: suite.ids(),
            theorem_z: vec![
                c(0.1, 0.0),
                c(0.3, 0.0),
                c(0.5, 0.0),
                c(0.7, 0.0),
                c(0.9, 0.0),
                c(0.3, 0.4),
                c(0.0, 0.5),
            ],
            theorem1_s: vec![
                (c(2.0, 0.0), vec![Kind::Cos]),
                (c(3.0, 0.0), vec![Kind::Sin, Kind::Cos]),
                (c(4.0, 0.0), vec![Kind::Sin, Kind::Cos]),
                (c(5.0, 0.0), vec![Kind::Sin, Kind::Cos]),
                (c(3.0, 1.0), vec![Kind::Sin]),
            ],
            n_values: vec![1, 2, 3],
            deltas: Delta::BOTH.to_vec(),
            lemma_z: vec![0.0, 0.25, 0.5, 0.75, 0.9],
            lemma_n: (1..=10).collect(),
            lemma_k: (0..=10).collect(),
        }
    }

    /// Theorem and lemma families at `z = 0` only.
    pub fn sanity() -> Self {
        let mut ids = Suite::Lemmas.ids();
        ids.extend(Suite::Theorem1.ids());
        ids.extend(Suite::Theorem2.ids());
        Self {
            name: "sanity".to_string(),
            ids,
            theorem_z: vec![Complex64::new(0.0, 0.0)],
            lemma_z: vec![0.0],
            ..Self::for_suite(Suite::All)
        }
    }
}

/// Executes every case of the grid in a fixed order. Individual failures become data.
pub fn run_suite(grid: &Grid, cfg: &HarnessConfig) -> VerificationReport {
    let mut cases = Vec::new();
    let mut exhibits = Vec::new();
    let mut untested = Vec::new();
    let has = |id: IdentityId| grid.ids.contains(&id);
    let record = |cases: &mut Vec<IdentityCase>, id, params: Params, tol, r: Result<IdentityCase>| {
        cases.push(r.unwrap_or_else(|e| IdentityCase::failed(id, params, tol, &e)));
    };

    for kind in [Kind::Sin, Kind::Cos] {
        let id = match kind {
            Kind::Sin => IdentityId::T1_8a,
            Kind::Cos => IdentityId::T1_8b,
        };
        if !has(id) {
            continue;
        }
        for (s, kinds) in &grid.theorem1_s {
            if !kinds.contains(&kind) {
                continue;
            }
            for &z in &grid.theorem_z {
                for &delta in &grid.deltas {
                    let params = Params {
                        z: Some(z),
                        s: Some(*s),
                        delta: Some(delta),
                        kind: Some(kind),
                        ..Params::default()
                    };
                    let r = series::chi(z, *s, &cfg.series).and_then(|lhs| {
                        let q = chi_via_integral(z, *s, delta, kind, cfg)?;
                        Ok(IdentityCase::new(id, params.clone(), lhs, q.value, cfg.identity_tol, &q))
                    });
                    record(&mut cases, id, params, cfg.identity_tol, r);
                }
            }
        }
        untested.push(format!(
            "{id}: 1 < Re s < 3 for non-integer s (no certified series for the integrand)"
        ));
    }

    for parity in [Parity::Odd, Parity::Even] {
        let id = match parity {
            Parity::Odd => IdentityId::T2_9a,
            Parity::Even => IdentityId::T2_9b,
        };
        if !has(id) {
            continue;
        }
        for &n in &grid.n_values {
            let order = match parity {
                Parity::Odd => 2 * n + 1,
                Parity::Even => 2 * n,
            };
            for &z in &grid.theorem_z {
                for &delta in &grid.deltas {
                    let params = Params {
                        z: Some(z),
                        n: Some(n),
                        delta: Some(delta),
                        ..Params::default()
                    };
                    let r = series::chi(z, Complex64::new(order as f64, 0.0), &cfg.series).and_then(|lhs| {
                        let q = chi_via_euler(z, n, delta, parity, cfg)?;
                        Ok(IdentityCase::new(id, params.clone(), lhs, q.value, cfg.identity_tol, &q))
                    });
                    record(&mut cases, id, params, cfg.identity_tol, r);
                }
            }
        }
    }

    type Route = fn(u32, Delta, &HarnessConfig) -> Result<QuadratureResult>;
    let corollary: [(IdentityId, Route, fn(u32) -> f64); 3] = [
        (IdentityId::C_10a, lambda_via_integral, |n| (2 * n + 1) as f64),
        (IdentityId::C_10b, beta_via_integral, |n| (2 * n) as f64),
        (IdentityId::R2_zeta, zeta_odd_via_integral, |n| (2 * n + 1) as f64),
    ];
    for (id, route, order) in corollary {
        if !has(id) {
            continue;
        }
        for &n in &grid.n_values {
            for &delta in &grid.deltas {
                let params = Params {
                    n: Some(n),
                    delta: Some(delta),
                    ..Params::default()
                };
                let s = Complex64::new(order(n), 0.0);
                let lhs = match id {
                    IdentityId::C_10a => series::dirichlet_lambda(s, &cfg.series),
                    IdentityId::C_10b => series::dirichlet_beta(s, &cfg.series),
                    _ => series::riemann_zeta(s, &cfg.series),
                };
                let r = lhs.and_then(|lhs| {
                    let q = route(n, delta, cfg)?;
                    Ok(IdentityCase::new(id, params.clone(), lhs, q.value, cfg.identity_tol, &q))
                });
                record(&mut cases, id, params, cfg.identity_tol, r);
            }
        }
    }

    for kind in [Kind::Sin, Kind::Cos] {
        let id = match kind {
            Kind::Sin => IdentityId::L1_11a,
            Kind::Cos => IdentityId::L1_11b,
        };
        if !has(id) {
            continue;
        }
        for &n in &grid.lemma_n {
            for &z in &grid.lemma_z {
                for alpha in [Alpha::Half, Alpha::One] {
                    let params = Params {
                        z: Some(Complex64::new(z, 0.0)),
                        n: Some(n),
                        alpha: Some(alpha),
                        kind: Some(kind),
                        ..Params::default()
                    };
                    record(&mut cases, id, params, cfg.lemma_tol, lemma1_residual(n, z, alpha, kind, cfg));
                }
            }
        }
    }

    for kind in [Kind::Sin, Kind::Cos] {
        let id = match kind {
            Kind::Sin => IdentityId::L2_15a,
            Kind::Cos => IdentityId::L2_15b,
        };
        if !has(id) {
            continue;
        }
        for &k in &grid.lemma_k {
            for &z in &grid.lemma_z {
                for &delta in &grid.deltas {
                    let params = Params {
                        z: Some(Complex64::new(z, 0.0)),
                        k: Some(k),
                        delta: Some(delta),
                        kind: Some(kind),
                        ..Params::default()
                    };
                    record(&mut cases, id, params, cfg.lemma_tol, lemma2_residual(k, z, delta, kind, cfg));
                }
            }
        }
        if kind == Kind::Cos {
            if let Ok(ex) = sine_harmonic_cosine_kernel_exhibit(cfg) {
                exhibits.push(ex);
            }
        }
    }

    if has(IdentityId::E16_quarter) {
        for &k in &grid.lemma_k {
            for &z in &grid.lemma_z {
                let params = Params {
                    z: Some(Complex64::new(z, 0.0)),
                    k: Some(k),
                    alpha: Some(Alpha::Quarter),
                    ..Params::default()
                };
                record(&mut cases, IdentityId::E16_quarter, params, cfg.lemma_tol, eq16_quarter_residual(k, z, cfg));
            }
        }
    }

    VerificationReport::assemble(&grid.name, cases, exhibits, untested)
}

/// Convenience wrapper running the default grid of a suite.
pub fn run_default(suite: Suite, cfg: &HarnessConfig) -> VerificationReport {
    run_suite(&Grid::for_suite(suite), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> HarnessConfig {
        HarnessConfig::default()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn chi_via_integral_examples() {
        let v = chi_via_integral(c(0.0), c(3.0), Delta::One, Kind::Sin, &cfg()).unwrap();
        assert_eq!(v.value, c(0.0));
        let v = chi_via_integral(c(0.5), c(3.0), Delta::Half, Kind::Sin, &cfg()).unwrap();
        assert!((v.value.re - 0.504_905_519_133_468_5).abs() < 1e-10);
        let v = chi_via_integral(c(0.5), c(2.0), Delta::One, Kind::Cos, &cfg()).unwrap();
        assert!((v.value.re - 0.515_327_366_694_329_4).abs() < 1e-10);
        assert!(chi_via_integral(c(0.5), c(2.0), Delta::One, Kind::Sin, &cfg()).is_err());
        assert!(chi_via_integral(c(0.96), c(3.0), Delta::One, Kind::Sin, &cfg()).is_err());
    }

    #[test]
    fn chi_via_euler_examples() {
        let v = chi_via_euler(c(0.0), 1, Delta::One, Parity::Odd, &cfg()).unwrap();
        assert_eq!(v.value, c(0.0));
        let v = chi_via_euler(c(0.5), 1, Delta::Half, Parity::Odd, &cfg()).unwrap();
        assert!((v.value.re - 0.504_905_519_133_468_5).abs() < 1e-10);
        let v = chi_via_euler(c(0.5), 1, Delta::One, Parity::Even, &cfg()).unwrap();
        assert!((v.value.re - 0.515_327_366_694_329_4).abs() < 1e-10);
        assert!(chi_via_euler(c(0.5), 7, Delta::One, Parity::Even, &cfg()).is_err());
        assert!(chi_via_euler(c(0.5), 0, Delta::One, Parity::Even, &cfg()).is_err());
    }

    #[test]
    fn corollary_examples() {
        let lam3 = 1.051_799_790_264_645;
        for delta in Delta::BOTH {
            let v = lambda_via_integral(1, delta, &cfg()).unwrap();
            assert!((v.value.re - lam3).abs() < 1e-10, "{delta:?}");
            assert!(v.converged);
        }
        let v = lambda_via_integral(2, Delta::Half, &cfg()).unwrap();
        assert!((v.value.re - 1.004_523_762_795_139_6).abs() < 1e-10);
        let catalan = 0.915_965_594_177_219;
        for delta in Delta::BOTH {
            let v = beta_via_integral(1, delta, &cfg()).unwrap();
            assert!((v.value.re - catalan).abs() < 1e-10);
        }
        let v = beta_via_integral(2, Delta::One, &cfg()).unwrap();
        assert!((v.value.re - 0.988_944_551_741_105_3).abs() < 1e-10);
        let v = zeta_odd_via_integral(1, Delta::Half, &cfg()).unwrap();
        assert!((v.value.re - 1.202_056_903_159_594_3).abs() < 1e-10);
        let v = zeta_odd_via_integral(2, Delta::Half, &cfg()).unwrap();
        assert!((v.value.re - 1.036_927_755_143_37).abs() < 1e-10);
        let v = zeta_odd_via_integral(1, Delta::One, &cfg()).unwrap();
        assert!((v.value.re - 1.202_056_903_159_594_3).abs() < 1e-10);
    }

    #[test]
    fn lemma_examples() {
        let case = lemma1_residual(1, 0.0, Alpha::One, Kind::Sin, &cfg()).unwrap();
        assert!(case.pass && case.lhs.norm() < 1e-15 && case.rhs == c(0.0));
        let case = lemma1_residual(2, 0.5, Alpha::One, Kind::Sin, &cfg()).unwrap();
        assert!((case.rhs.re - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!(case.pass, "{case:?}");
        let case = lemma1_residual(3, 0.7, Alpha::Half, Kind::Cos, &cfg()).unwrap();
        assert!((case.rhs.re - 1.077_566_280_181_299).abs() < 1e-12);
        assert!(case.pass);
        assert!(lemma1_residual(3, 0.7, Alpha::Quarter, Kind::Cos, &cfg()).is_err());

        let case = lemma2_residual(0, 0.0, Delta::One, Kind::Sin, &cfg()).unwrap();
        assert!(case.pass);
        let case = lemma2_residual(1, 0.5, Delta::One, Kind::Sin, &cfg()).unwrap();
        assert!((case.rhs.re - PI / 8.0).abs() < 1e-15 && case.pass);
        let case = lemma2_residual(2, 0.6, Delta::Half, Kind::Cos, &cfg()).unwrap();
        assert!((case.rhs.re - 0.122_145_122_371_571_16).abs() < 1e-12 && case.pass);

        let case = eq16_quarter_residual(0, 0.0, &cfg()).unwrap();
        assert!(case.pass);
        let case = eq16_quarter_residual(0, 0.5, &cfg()).unwrap();
        assert!((case.rhs.re - PI / 4.0).abs() < 1e-15 && case.pass);
        let case = eq16_quarter_residual(1, 0.8, &cfg()).unwrap();
        assert!((case.rhs.re - 0.804_247_719_318_987).abs() < 1e-12 && case.pass);
    }

    #[test]
    fn sine_harmonic_breaks_cosine_kernel_identity() {
        let ex = sine_harmonic_cosine_kernel_exhibit(&cfg()).unwrap();
        assert!((ex.value - ex.reference).norm() > 1e-3);
    }

    #[test]
    fn sanity_grid_passes() {
        let report = run_suite(&Grid::sanity(), &cfg());
        assert!(report.summary.total > 0);
        assert_eq!(report.summary.passed, report.summary.total, "{:?}", report.summary);
    }

    #[test]
    fn starved_budget_marks_unconverged() {
        let mut grid = Grid::for_suite(Suite::Lemmas);
        grid.lemma_z = vec![0.75];
        grid.lemma_n = vec![3];
        grid.lemma_k = vec![1];
        let cfg = HarnessConfig {
            quad: QuadControl::with_limits(1e-14, 40, 100).unwrap(),
            ..cfg()
        };
        let report = run_suite(&grid, &cfg);
        assert!(report.summary.unconverged > 0);
        assert_eq!(report.summary.failed, 0);
        let s = report.summary;
        assert_eq!(s.total, s.passed + s.failed + s.unconverged);
    }

    #[test]
    fn case_invariants() {
        let report = run_suite(&Grid::sanity(), &cfg());
        for case in &report.cases {
            assert_eq!(case.abs_err, (case.lhs - case.rhs).norm());
            assert_eq!(case.pass, case.abs_err <= case.tol);
        }
        let mut ids: Vec<_> = report.cases.iter().map(|c| c.id).collect();
        let sorted = {
            let mut v = ids.clone();
            v.sort();
            v
        };
        assert_eq!(ids, sorted);
        ids.dedup();
        assert!(ids.len() >= 9);
    }

    #[test]
    fn errors_become_failed_cases() {
        let mut grid = Grid::sanity();
        grid.ids = vec![IdentityId::L1_11a];
        grid.lemma_z = vec![0.99];
        grid.lemma_n = vec![1];
        let report = run_suite(&grid, &cfg());
        assert_eq!(report.summary.failed, 2);
        assert!(report.cases[0].error.is_some());
        assert!(report.to_json().contains("\"abs_err\":null"));
    }
}

//! Globally adaptive Gauss–Legendre quadrature on finite intervals.
//!
//! Each panel carries a 15-point estimate over the whole panel and one over each half.
//! The panel error is the difference of the two levels, floored at the rounding level of
//! the half-panel sums. The panel with the largest error is bisected until the summed
//! error meets the tolerance, the depth cap is reached everywhere, or the evaluation
//! budget runs out. Gauss nodes are strictly interior, so panel endpoints (and hence any
//! removable singularity placed on one) are never sampled.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::control::QuadControl;
use crate::error::{Error, Result};

const RULE_POINTS: usize = 15;
const ROUNDOFF_FACTOR: f64 = 50.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl QuadratureResult {
    /// Multiplies value and error estimate by a constant prefactor.
    pub fn scaled(self, factor: Complex64) -> Self {
        Self {
            value: self.value * factor,
            error_estimate: self.error_estimate * factor.norm(),
            ..self
        }
    }
}

/// Values an integrand may return.
pub trait IntegrandValue {
    fn into_complex(self) -> Complex64;
}

impl IntegrandValue for f64 {
    fn into_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
}

impl IntegrandValue for Complex64 {
    fn into_complex(self) -> Complex64 {
        self
    }
}

struct GaussRule {
    nodes: [f64; RULE_POINTS],
    weights: [f64; RULE_POINTS],
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn gauss_rule() -> &'static GaussRule {
    static RULE: OnceLock<GaussRule> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = RULE_POINTS;
        let mut nodes = [0.0; RULE_POINTS];
        let mut weights = [0.0; RULE_POINTS];
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        GaussRule { nodes, weights }
    })
}

#[derive(Debug, Clone, Copy)]
struct Estimate {
    value: Complex64,
    abs: f64,
}

struct Evaluator<F> {
    f: F,
    evaluations: usize,
}

impl<F, V> Evaluator<F>
where
    F: FnMut(f64) -> Result<V>,
    V: IntegrandValue,
{
    fn rule(&mut self, a: f64, b: f64) -> Result<Estimate> {
        let rule = gauss_rule();
        let center = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut value = Complex64::new(0.0, 0.0);
        let mut abs = 0.0;
        for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
            let t = center + half * x;
            let v = (self.f)(t)
                .map_err(|e| Error::IntegrandFault {
                    abscissa: t,
                    reason: e.to_string(),
                })?
                .into_complex();
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::IntegrandFault {
                    abscissa: t,
                    reason: format!("non-finite value {v}"),
                });
            }
            value += v * *w;
            abs += v.norm() * *w;
        }
        self.evaluations += RULE_POINTS;
        Ok(Estimate {
            value: value * half,
            abs: abs * half.abs(),
        })
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    depth: u32,
    left: Estimate,
    right: Estimate,
    error: f64,
    /// Refinement cannot improve this panel (roundoff or integrand noise).
    resolved: bool,
    retired: bool,
}

impl Panel {
    fn new(a: f64, b: f64, depth: u32, noise: f64, whole: Estimate, left: Estimate, right: Estimate) -> Self {
        let fine = left.value + right.value;
        let diff = (whole.value - fine).norm();
        let floor = ROUNDOFF_FACTOR * (left.abs + right.abs);
        let noise_floor = noise * (b - a);
        Self {
            a,
            b,
            depth,
            left,
            right,
            error: diff.max(floor),
            resolved: diff <= floor.max(noise_floor),
            retired: false,
        }
    }

    fn value(&self) -> Complex64 {
        self.left.value + self.right.value
    }
}

/// Heap entry: largest error first, ties broken by creation order.
#[derive(Debug, Clone, Copy)]
struct Ranked {
    error: f64,
    seq: usize,
}

impl PartialEq for Ranked {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Ranked {}

impl PartialOrd for Ranked {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ranked {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

fn check_interval(a: f64, b: f64) -> Result<()> {
    if !(a.is_finite() && b.is_finite()) || a >= b {
        return Err(Error::domain(format!(
            "integration interval must be finite with a < b, got [{a}, {b}]"
        )));
    }
    Ok(())
}

fn adaptive<F, V>(eval: &mut Evaluator<F>, a: f64, b: f64, ctl: &QuadControl) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Result<V>,
    V: IntegrandValue,
{
    let start = eval.evaluations;
    let mid = 0.5 * (a + b);
    let whole = eval.rule(a, b)?;
    let left = eval.rule(a, mid)?;
    let right = eval.rule(mid, b)?;
    let mut panels = vec![Panel::new(a, b, 0, ctl.integrand_noise(), whole, left, right)];
    let mut heap = BinaryHeap::new();
    let splittable = |p: &Panel| p.depth < ctl.max_depth() && !p.resolved;
    if splittable(&panels[0]) {
        heap.push(Ranked {
            error: panels[0].error,
            seq: 0,
        });
    }
    let mut total = panels[0].error;
    let split_cost = 4 * RULE_POINTS;

    while total > ctl.abs_tol() {
        let Some(top) = heap.pop() else { break };
        if eval.evaluations - start + split_cost > ctl.max_evals() {
            break;
        }
        let parent = panels[top.seq];
        let m = 0.5 * (parent.a + parent.b);
        let children = [(parent.a, m, parent.left), (m, parent.b, parent.right)];
        // The parent keeps its slot so heap indices stay valid.
        total -= parent.error;
        panels[top.seq].retired = true;
        for (lo, hi, whole) in children {
            let cm = 0.5 * (lo + hi);
            let l = eval.rule(lo, cm)?;
            let r = eval.rule(cm, hi)?;
            let child = Panel::new(lo, hi, parent.depth + 1, ctl.integrand_noise(), whole, l, r);
            total += child.error;
            let seq = panels.len();
            if splittable(&child) {
                heap.push(Ranked {
                    error: child.error,
                    seq,
                });
            }
            panels.push(child);
        }
    }

    let mut leaves: Vec<&Panel> = panels.iter().filter(|p| !p.retired).collect();
    leaves.sort_by(|x, y| x.a.total_cmp(&y.a));
    let mut value = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    for p in &leaves {
        value += p.value();
        error += p.error;
    }
    let evaluations = eval.evaluations - start;
    Ok(QuadratureResult {
        value,
        error_estimate: error,
        evaluations,
        converged: error <= ctl.abs_tol() && evaluations <= ctl.max_evals(),
    })
}

/// Integrates a fallible integrand over `[a, b]`.
pub fn try_integrate<F, V>(f: F, a: f64, b: f64, ctl: &QuadControl) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Result<V>,
    V: IntegrandValue,
{
    check_interval(a, b)?;
    let mut eval = Evaluator { f, evaluations: 0 };
    adaptive(&mut eval, a, b, ctl)
}

/// Integrates `f` over `[a, b]`. A non-finite integrand value is reported as
/// [`Error::IntegrandFault`] carrying the abscissa.
pub fn integrate<F, V>(mut f: F, a: f64, b: f64, ctl: &QuadControl) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> V,
    V: IntegrandValue,
{
    try_integrate(|t| Ok::<V, Error>(f(t)), a, b, ctl)
}

/// Like [`try_integrate`], but every point of `singular` becomes a panel endpoint.
///
/// The tolerance and the evaluation budget are shared between sub-intervals in
/// proportion to their length; values and error estimates are summed left to right.
pub fn try_integrate_removable<F, V>(
    f: F,
    a: f64,
    b: f64,
    singular: &[f64],
    ctl: &QuadControl,
) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Result<V>,
    V: IntegrandValue,
{
    check_interval(a, b)?;
    if let Some(p) = singular.iter().find(|&&p| !(a..=b).contains(&p)) {
        return Err(Error::domain(format!(
            "singular point {p} lies outside [{a}, {b}]"
        )));
    }
    let mut cuts: Vec<f64> = singular.iter().copied().filter(|&p| p > a && p < b).collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut edges = Vec::with_capacity(cuts.len() + 2);
    edges.push(a);
    edges.extend(cuts);
    edges.push(b);

    let length = b - a;
    let mut eval = Evaluator { f, evaluations: 0 };
    let mut value = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    let mut converged = true;
    for w in edges.windows(2) {
        let share = (w[1] - w[0]) / length;
        let piece_ctl = QuadControl::with_limits(
            ctl.abs_tol() * share,
            ctl.max_depth(),
            ((ctl.max_evals() as f64 * share) as usize).max(1),
        )?;
        let piece = adaptive(&mut eval, w[0], w[1], &piece_ctl)?;
        value += piece.value;
        error += piece.error_estimate;
        converged &= piece.converged;
    }
    Ok(QuadratureResult {
        value,
        error_estimate: error,
        evaluations: eval.evaluations,
        converged: converged && error <= ctl.abs_tol(),
    })
}

pub fn integrate_removable<F, V>(
    mut f: F,
    a: f64,
    b: f64,
    singular: &[f64],
    ctl: &QuadControl,
) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> V,
    V: IntegrandValue,
{
    try_integrate_removable(|t| Ok::<V, Error>(f(t)), a, b, singular, ctl)
}

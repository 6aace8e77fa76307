use std::f64::consts::PI;

use approx::assert_abs_diff_eq;
use legendre_chi::euler;
use legendre_chi::harness::{self, Delta, HarnessConfig, Kind, Parity};
use legendre_chi::kernels;
use legendre_chi::quadrature::{integrate, integrate_removable};
use legendre_chi::series;
use legendre_chi::{Complex64, EvalControl, QuadControl};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn corollary_integrands_converge_at_tight_tolerance() {
    let ctl = QuadControl::new(1e-10).unwrap();
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    for n in 1..=3usize {
        let even = euler::cached(2 * n).unwrap();
        let odd = euler::cached(2 * n - 1).unwrap();
        for (delta, points) in [(0.5, vec![0.0]), (1.0, vec![0.0, 1.0])] {
            let r = integrate_removable(
                |t| kernels::kernel_sin(one, t).unwrap().value.re * even.evaluate(t),
                0.0,
                delta,
                &points,
                &ctl,
            )
            .unwrap();
            assert!(r.converged, "csc n={n} delta={delta}: {r:?}");
            let r = integrate_removable(
                |t| kernels::kernel_cos(i, t).unwrap().value.im * odd.evaluate(t),
                0.0,
                delta,
                &[0.5],
                &ctl,
            )
            .unwrap();
            assert!(r.converged, "sec n={n} delta={delta}: {r:?}");
        }
    }
}

#[test]
fn lambda_is_the_boundary_limit_of_chi() {
    // Richardson in h = 1 − z from the two points nearest the boundary, checked against the
    // three-point sequence for consistency.
    let ctl = EvalControl::default();
    let cfg = HarnessConfig::default();
    for n in 1..=3u32 {
        let s = c((2 * n + 1) as f64, 0.0);
        let f = |h: f64| series::chi(c(1.0 - h, 0.0), s, &ctl).unwrap().re;
        let (h1, h2, h3) = (0.1, 0.01, 0.001);
        let (f1, f2, f3) = (f(h1), f(h2), f(h3));
        let r23 = (h2 * f3 - h3 * f2) / (h2 - h3);
        let r12 = (h1 * f2 - h2 * f1) / (h1 - h2);
        assert!((r23 - r12).abs() < 1e-2);
        for delta in Delta::BOTH {
            let lambda = harness::lambda_via_integral(n, delta, &cfg).unwrap().value.re;
            assert!((lambda - r23).abs() < 1e-4, "n={n}: {lambda} vs {r23}");
        }
    }
}

#[test]
fn chi_on_the_imaginary_axis_is_an_alternating_series() {
    let ctl = EvalControl::default();
    let cfg = HarnessConfig::default();
    let alternating: f64 = (0..60)
        .map(|k| {
            let m = (2 * k + 1) as f64;
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * 0.5f64.powi(2 * k + 1) / (m * m)
        })
        .sum();
    let v = series::chi(c(0.0, 0.5), c(2.0, 0.0), &ctl).unwrap();
    assert!(v.re.abs() < 1e-15);
    assert_abs_diff_eq!(v.im, alternating, epsilon = 1e-10);
    let q = harness::chi_via_euler(c(0.0, 0.5), 1, Delta::One, Parity::Even, &cfg).unwrap();
    assert_abs_diff_eq!(q.value.im, alternating, epsilon = 1e-10);
    assert!(q.value.re.abs() < 1e-10);
}

#[test]
fn termwise_harmonic_integrals_rebuild_chi() {
    let (z, s) = (0.5, 3.0);
    let cfg = HarnessConfig::default();
    let ctl = QuadControl::default();
    let zc = c(z, 0.0);
    for delta in Delta::BOTH {
        let d = delta.value();
        let mut rebuilt = 0.0;
        let mut bound = 0.0;
        for k in 0..=30u32 {
            let m = (2 * k + 1) as f64;
            // ∫₀^{δπ} sin(mθ) K(z, θ/π) dθ in the reduced variable.
            let r = integrate(
                |t| PI * (m * PI * t).sin() * kernels::kernel_sin(zc, t).unwrap().value.re,
                0.0,
                d,
                &ctl,
            )
            .unwrap();
            if k <= 10 {
                let lemma = harness::lemma2_residual(k, z, delta, Kind::Sin, &cfg).unwrap();
                assert!((lemma.lhs.re - r.value.re).abs() < 1e-12, "k={k}");
            }
            rebuilt += r.value.re / (d * PI * m.powf(s));
            bound += r.error_estimate / (d * PI * m.powf(s));
        }
        let via_integral = harness::chi_via_integral(zc, c(s, 0.0), delta, Kind::Sin, &cfg).unwrap();
        let allowed = bound + via_integral.error_estimate + 1e-15;
        assert!(
            (rebuilt - via_integral.value.re).abs() <= allowed,
            "{rebuilt} vs {} (allowed {allowed:e})",
            via_integral.value.re
        );
    }
}

#[test]
fn integral_routes_agree_with_each_other() {
    // Sine-kind trigonometric route against the Euler-polynomial route at the same order.
    let cfg = HarnessConfig::default();
    for z in [c(0.3, 0.4), c(0.7, 0.0)] {
        for n in 1..=2u32 {
            let s = c((2 * n + 1) as f64, 0.0);
            let trig = harness::chi_via_integral(z, s, Delta::Half, Kind::Sin, &cfg).unwrap();
            let euler = harness::chi_via_euler(z, n, Delta::One, Parity::Odd, &cfg).unwrap();
            assert!((trig.value - euler.value).norm() < 1e-10);
        }
    }
}

#[test]
fn theorem_integrals_reject_out_of_range_input() {
    let cfg = HarnessConfig::default();
    assert!(harness::chi_via_integral(c(0.5, 0.0), c(2.5, 0.0), Delta::One, Kind::Sin, &cfg).is_err());
    assert!(harness::chi_via_integral(c(0.0, 0.99), c(3.0, 0.0), Delta::One, Kind::Sin, &cfg).is_err());
    assert!(harness::lambda_via_integral(0, Delta::One, &cfg).is_err());
    assert!(harness::beta_via_integral(7, Delta::One, &cfg).is_err());
    assert!(harness::lemma2_residual(11, 0.5, Delta::One, Kind::Sin, &cfg).is_err());
    assert!(harness::eq16_quarter_residual(0, 0.96, &cfg).is_err());
}

#[test]
fn verification_report_schema() {
    let report = harness::run_default(harness::Suite::Corollary, &HarnessConfig::default());
    let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(json["suite"], "corollary");
    let cases = json["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 18);
    for case in cases {
        for key in ["id", "params", "lhs", "rhs", "abs_err", "tol", "pass", "converged"] {
            assert!(case.get(key).is_some(), "missing {key}");
        }
    }
    for id in ["C_10a", "C_10b", "R2_zeta"] {
        for n in 1..=3 {
            let deltas: Vec<_> = cases
                .iter()
                .filter(|c| c["id"] == id && c["params"]["n"] == n)
                .map(|c| c["params"]["delta"].as_str().unwrap().to_string())
                .collect();
            assert_eq!(deltas, ["1/2", "1"], "{id} n={n}");
        }
    }
    let summary = &json["summary"];
    assert_eq!(summary["total"], 18);
    assert_eq!(summary["passed"], 18);
}

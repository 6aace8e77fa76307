//! Integrates functions with removable singularities at the interval ends and in the interior.

use legendre_chi::euler;
use legendre_chi::quadrature::{integrate, integrate_removable};
use legendre_chi::QuadControl;

fn main() -> legendre_chi::Result<()> {
    let ctl = QuadControl::default();
    let pi = std::f64::consts::PI;

    // sin(t)/t on [0, 1]: the left endpoint is never sampled.
    let si = integrate(|t: f64| t.sin() / t, 0.0, 1.0, &ctl)?;
    println!("Si(1) = {:.16} (+- {:.1e}, {} evaluations)", si.value.re, si.error_estimate, si.evaluations);

    // E_2(t) csc(pi t) vanishes to first order at both ends.
    let e2 = euler::cached(2)?;
    let csc = integrate_removable(|t| e2.evaluate(t) / (pi * t).sin(), 0.0, 1.0, &[0.0, 1.0], &ctl)?;
    println!("int_0^1 E_2 csc = {:.16} (+- {:.1e})", csc.value.re, csc.error_estimate);

    // E_1(t) sec(pi t) has a removable point at t = 1/2.
    let e1 = euler::cached(1)?;
    let sec = integrate_removable(|t| e1.evaluate(t) / (pi * t).cos(), 0.0, 0.5, &[0.5], &ctl)?;
    println!("int_0^1/2 E_1 sec = {:.16} (+- {:.1e})", sec.value.re, sec.error_estimate);

    // A budget that is too small is reported, not raised.
    let starved = integrate(|t: f64| (40.0 * t).sin().abs(), 0.0, 1.0, &QuadControl::with_limits(1e-14, 40, 200)?)?;
    println!("starved run: converged = {}, estimate {:.1e}", starved.converged, starved.error_estimate);
    Ok(())
}

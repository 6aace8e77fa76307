//! Evaluates the chi function and its relatives with their certified truncation bounds.
//!
//! Run with `cargo run --example chi_values`.

use legendre_chi::series;
use legendre_chi::{Complex64, EvalControl};

fn main() -> legendre_chi::Result<()> {
    let ctl = EvalControl::default();
    let points = [
        (Complex64::new(0.5, 0.0), Complex64::new(2.0, 0.0)),
        (Complex64::new(0.5, 0.0), Complex64::new(3.0, 0.0)),
        (Complex64::new(0.0, 0.5), Complex64::new(2.0, 0.0)),
        (Complex64::new(0.3, 0.4), Complex64::new(3.0, 1.0)),
        (Complex64::new(0.99, 0.0), Complex64::new(2.5, 0.0)),
    ];
    println!("{:<14} {:<8} {:>42} {:>10} {:>8}", "z", "s", "chi_s(z)", "bound", "terms");
    for (z, s) in points {
        let sum = series::chi_with_bound(z, s, &ctl)?;
        let other = series::chi_from_polylog(z, s, &ctl)?;
        println!(
            "{:<14} {:<8} {:>20.16} {:>+20.16}i {:>10.1e} {:>8}   |chi - polylog route| = {:.1e}",
            z.to_string(),
            s.to_string(),
            sum.value.re,
            sum.value.im,
            sum.tail_bound,
            sum.terms,
            (sum.value - other).norm()
        );
    }

    println!();
    for s in [2.0, 3.0, 4.0, 5.0] {
        let s = Complex64::new(s, 0.0);
        println!(
            "s = {}: zeta = {:.16}  lambda = {:.16}  beta = {:.16}",
            s.re,
            series::riemann_zeta(s, &ctl)?.re,
            series::dirichlet_lambda(s, &ctl)?.re,
            series::dirichlet_beta(s, &ctl)?.re
        );
    }

    let x = std::f64::consts::FRAC_PI_4;
    println!();
    println!("S(3, pi/4) = {:.16}", series::sin_series(Complex64::new(3.0, 0.0), x, &ctl)?.re);
    println!("C(4, pi/4) = {:.16}", series::cos_series(Complex64::new(4.0, 0.0), x, &ctl)?.re);
    Ok(())
}

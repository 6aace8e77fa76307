//! Samples the four integral kernels, including the two boundary limits.

use legendre_chi::kernels::{kernel_cos, kernel_sin, poisson_cos, poisson_sin, Regime};
use legendre_chi::Complex64;

fn main() -> legendre_chi::Result<()> {
    let z = Complex64::new(0.5, 0.0);
    println!("{:>6} {:>12} {:>12} {:>12} {:>12}", "t", "sin", "cos", "P_sin", "P_cos");
    for j in 1..10 {
        let t = j as f64 / 10.0;
        println!(
            "{t:>6.2} {:>12.8} {:>12.8} {:>12.8} {:>12.8}",
            kernel_sin(z, t)?.value.re,
            kernel_cos(z, t)?.value.re,
            poisson_sin(z, 2.0 * std::f64::consts::PI * t)?.value.re,
            poisson_cos(z, 2.0 * std::f64::consts::PI * t)?.value.re,
        );
    }

    println!();
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    for t in [0.1, 0.25, 0.4] {
        let csc = kernel_sin(one, t)?;
        let sec = kernel_cos(i, t)?;
        assert_eq!(csc.regime, Regime::LimitSubstituted);
        println!("t = {t}: K_sin(1, t) = {:.12} (csc {:.12}), K_cos(i, t) = {}", csc.value.re, 1.0 / (std::f64::consts::PI * t).sin(), sec.value);
    }

    let near = kernel_sin(Complex64::new(1.0 - 1e-5, 0.0), 0.25)?;
    println!("z = 1 - 1e-5, t = 1/4: {:.10} ({:?})", near.value.re, near.regime);
    Ok(())
}

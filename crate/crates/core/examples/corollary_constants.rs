//! Recovers lambda(2n+1), beta(2n) and zeta(2n+1) from Euler-polynomial integrals.

use legendre_chi::harness::{beta_via_integral, lambda_via_integral, zeta_odd_via_integral, Delta, HarnessConfig};
use legendre_chi::series;
use legendre_chi::Complex64;

fn main() -> legendre_chi::Result<()> {
    let cfg = HarnessConfig::default();
    for n in 1..=6u32 {
        let odd = Complex64::new((2 * n + 1) as f64, 0.0);
        let even = Complex64::new((2 * n) as f64, 0.0);
        for delta in Delta::BOTH {
            let lambda = lambda_via_integral(n, delta, &cfg)?;
            let beta = beta_via_integral(n, delta, &cfg)?;
            let zeta = zeta_odd_via_integral(n, delta, &cfg)?;
            println!(
                "n={n} delta={:<3} lambda({}) {:.15} [{:.1e}]  beta({}) {:.15} [{:.1e}]  zeta({}) {:.15} [{:.1e}]",
                delta.label(),
                2 * n + 1,
                lambda.value.re,
                (lambda.value - series::dirichlet_lambda(odd, &cfg.series)?).norm(),
                2 * n,
                beta.value.re,
                (beta.value - series::dirichlet_beta(even, &cfg.series)?).norm(),
                2 * n + 1,
                zeta.value.re,
                (zeta.value - series::riemann_zeta(odd, &cfg.series)?).norm(),
            );
        }
    }
    Ok(())
}

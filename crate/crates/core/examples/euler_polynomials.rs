use legendre_chi::euler;
use legendre_chi::series;
use legendre_chi::{Complex64, EvalControl};

fn main() -> legendre_chi::Result<()> {
    for n in 0..=6 {
        let p = euler::euler_polynomial(n)?;
        let terms: Vec<String> = p
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(k, c)| format!("({c})x^{k}"))
            .collect();
        println!("E_{n}(x) = {}", terms.join(" + "));
    }

    println!();
    println!("Euler numbers: {:?}", euler::euler_numbers(10).iter().map(|e| e.to_string()).collect::<Vec<_>>());

    // Closed forms of the odd trigonometric series at rational multiples of pi.
    let ctl = EvalControl::default();
    println!();
    for n in 1..=3u32 {
        for x in [0.1, 0.25, 0.5] {
            let closed = euler::closed_form_s(n, x)?;
            let summed = series::sin_series(Complex64::new((2 * n + 1) as f64, 0.0), std::f64::consts::PI * x, &ctl)?.re;
            println!("S({}, {x}pi): closed {closed:.15}  series {summed:.15}", 2 * n + 1);
        }
    }
    Ok(())
}

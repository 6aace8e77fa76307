//! `sin(πt)` and `cos(πt)` with exact argument reduction.
//!
//! Reducing `t` before multiplying by π keeps full relative accuracy near the zeros at
//! integer (sine) and half-integer (cosine) arguments, where the integrands of the
//! boundary identities divide by these values.

pub(crate) fn sin_pi(t: f64) -> f64 {
    if !t.is_finite() {
        return f64::NAN;
    }
    // sin(π t) has period 2; reduce to r in [-1, 1].
    let mut r = t % 2.0;
    if r > 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    // Fold to [-1/2, 1/2] using sin(π(1 - r)) = sin(π r).
    if r > 0.5 {
        r = 1.0 - r;
    } else if r < -0.5 {
        r = -1.0 - r;
    }
    (std::f64::consts::PI * r).sin()
}

pub(crate) fn cos_pi(t: f64) -> f64 {
    if !t.is_finite() {
        return f64::NAN;
    }
    let r = (t % 2.0).abs();
    // cos(π r) = sin(π (1/2 - r)); 0.5 - r is exact for r in [1/4, 1].
    if r <= 1.0 {
        sin_pi(0.5 - r)
    } else {
        sin_pi(r - 1.5)
    }
}

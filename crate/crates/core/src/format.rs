//! Fixed, locale-free text formatting shared by the CSV and JSON writers.

use num_complex::Complex64;

/// 17 significant digits in scientific notation; empty for non-finite values.
///
/// Negative zero is written as `0`, so sign-of-zero noise never reaches golden files.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{:.16e}", x + 0.0)
    } else {
        String::new()
    }
}

pub(crate) fn json_f64(x: f64) -> String {
    if x.is_finite() {
        fmt_f64(x)
    } else {
        "null".to_string()
    }
}

pub(crate) fn json_complex(v: Complex64) -> String {
    format!("{{\"re\":{},\"im\":{}}}", json_f64(v.re), json_f64(v.im))
}

pub(crate) fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("string serialisation cannot fail")
}

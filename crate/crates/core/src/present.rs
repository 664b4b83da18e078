//! Rounding conventions for published-table style output, and the number
//! format used in machine-readable output.

/// Two significant digits in the form `2.2e2`.
pub fn sig2(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mut e = v.abs().log10().floor() as i32;
    let mut m = v / 10f64.powi(e);
    if (m * 10.0).round() / 10.0 >= 10.0 {
        e += 1;
        m = v / 10f64.powi(e);
    }
    format!("{m:.1}e{e}")
}

/// A probability as a percentage with one decimal.
pub fn percent1(p: f64) -> String {
    format!("{:.1}", p * 100.0)
}

/// Two decimals.
pub fn dec2(v: f64) -> String {
    format!("{v:.2}")
}

/// Shortest representation that parses back to the same value; scientific
/// below `1e-3` in magnitude.
pub fn number(v: f64) -> String {
    if v != 0.0 && v.abs() < 1e-3 {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

/// Rounds `v` to two significant digits.
pub fn round_sig2(v: f64) -> f64 {
    sig2(v).parse().unwrap_or(v)
}

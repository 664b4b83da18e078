#![allow(dead_code)]

pub mod printed;

use binom_rare::present::round_sig2;

/// Integer sample size agrees with a two-significant-digit printed value.
pub fn same_sig2(n: u64, printed: f64) -> bool {
    (round_sig2(n as f64) - printed).abs() <= 1e-9 * printed.abs()
}

/// Percentage points between a probability and a printed percentage.
pub fn pp_gap(p: f64, printed_percent: f64) -> f64 {
    (p * 100.0 - printed_percent).abs()
}

/// Slack for binary representation of printed decimals.
pub const REPR: f64 = 1e-9;

/// (p, n grid) ladders used by the published tables.
pub const LADDER: [f64; 5] = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5];

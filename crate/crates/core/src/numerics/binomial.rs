//! Binomial probabilities in log space and the truncated support used by
//! exact coverage enumeration.

use super::{deviance_term, stirling_error, LogProb, Probability};
use std::f64::consts::PI;

/// `ln P(X = x)` for `X ~ Binomial(n, p)`.
///
/// Uses the saddle-point decomposition into Stirling errors and deviance
/// terms, so the result keeps full relative precision for `n` in the
/// hundreds of millions. Edge probabilities follow the limit conventions:
/// at `p = 0` all mass sits on `x = 0`, at `p = 1` on `x = n`.
///
/// # Panics
/// If `x > n`.
pub fn log_binomial_pmf(n: u64, x: u64, p: Probability) -> LogProb {
    assert!(x <= n, "binomial outcome {x} exceeds trials {n}");
    let p = p.value();
    let q = 1.0 - p;
    if p == 0.0 {
        return if x == 0 { LogProb::CERTAIN } else { LogProb::IMPOSSIBLE };
    }
    if q == 0.0 {
        return if x == n { LogProb::CERTAIN } else { LogProb::IMPOSSIBLE };
    }
    let nf = n as f64;
    if x == 0 {
        return LogProb::saturating(nf * (-p).ln_1p());
    }
    if x == n {
        return LogProb::saturating(nf * p.ln());
    }
    let xf = x as f64;
    let yf = (n - x) as f64;
    let core = stirling_error(nf)
        - stirling_error(xf)
        - stirling_error(yf)
        - deviance_term(xf, nf * p)
        - deviance_term(yf, nf * q);
    let spread = (2.0 * PI).ln() + xf.ln() + (-xf / nf).ln_1p();
    LogProb::saturating(core - 0.5 * spread)
}

/// A contiguous range of binomial outcomes and the probability mass it holds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinomialWindow {
    pub lo: u64,
    pub hi: u64,
    pub mass: f64,
}

impl BinomialWindow {
    pub fn len(&self) -> u64 {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u64) -> bool {
        (self.lo..=self.hi).contains(&x)
    }
}

/// Outcome range around the mode holding all but `tail_tol` of the mass.
///
/// A non-positive `tail_tol` asks for the full support.
pub fn binomial_window(n: u64, p: Probability, tail_tol: f64) -> BinomialWindow {
    let (lo, weights) = windowed_pmf(n, p, tail_tol);
    BinomialWindow {
        lo,
        hi: lo + weights.len() as u64 - 1,
        mass: weights.iter().sum(),
    }
}

/// The window of [`binomial_window`] together with its pmf values, indexed
/// from the returned lower end.
///
/// Grows greedily from the mode, always absorbing the heavier neighbour, so
/// the result is the shortest contiguous window reaching `1 - tail_tol`. It
/// keeps growing while a neighbour still carries more than `tail_tol / n`.
pub fn windowed_pmf(n: u64, p: Probability, tail_tol: f64) -> (u64, Vec<f64>) {
    let pmf = |x: u64| log_binomial_pmf(n, x, p).value().exp();
    if tail_tol <= 0.0 || !p.is_interior() {
        return (0, (0..=n).map(pmf).collect());
    }
    let mode = (((n as f64 + 1.0) * p.value()).floor() as u64).min(n);
    let mut left: Vec<f64> = Vec::new();
    let mut right: Vec<f64> = vec![pmf(mode)];
    let mut inside = right[0];
    let (mut lo, mut hi) = (mode, mode);
    let pointwise = tail_tol / n.max(1) as f64;
    let mut next_left = if lo > 0 { pmf(lo - 1) } else { -1.0 };
    let mut next_right = if hi < n { pmf(hi + 1) } else { -1.0 };
    loop {
        let heavier = next_left.max(next_right);
        if heavier < 0.0 {
            break;
        }
        if inside >= 1.0 - tail_tol && heavier <= pointwise {
            break;
        }
        if next_left >= next_right {
            lo -= 1;
            inside += next_left;
            left.push(next_left);
            next_left = if lo > 0 { pmf(lo - 1) } else { -1.0 };
        } else {
            hi += 1;
            inside += next_right;
            right.push(next_right);
            next_right = if hi < n { pmf(hi + 1) } else { -1.0 };
        }
    }
    left.reverse();
    left.extend(right);
    (lo, left)
}

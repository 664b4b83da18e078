//! Regularized incomplete beta function and its inverse.

use super::{deviance_term, stirling_error, BetaShape, Probability};
use crate::error::{Error, Result};
use std::f64::consts::PI;

const CF_TOLERANCE: f64 = 1e-15;
const CF_BASE_ITERATIONS: usize = 500;
const TINY: f64 = 1e-300;

/// `x^a (1-x)^b / B(a, b)` in saddle-point form.
///
/// Writing the gamma functions through their Stirling errors turns the
/// power terms into two deviance terms, which stay accurate for shapes in
/// the millions where `ln B(a, b)` would cancel catastrophically.
fn power_terms(x: f64, a: f64, b: f64) -> f64 {
    let y = 1.0 - x;
    if x <= 0.0 || y <= 0.0 {
        return 0.0;
    }
    let n = a + b;
    let log_core = stirling_error(n) - stirling_error(a) - stirling_error(b)
        - deviance_term(a, n * x)
        - deviance_term(b, n * y);
    (a * b / (2.0 * PI * n)).sqrt() * log_core.exp()
}

/// Continued-fraction budget scales with the width of the beta bulk; the
/// Lentz iteration needs O(sqrt(ab/(a+b))) terms near the mean.
fn cf_budget(a: f64, b: f64) -> usize {
    let spread = (a * b / (a + b)).sqrt();
    CF_BASE_ITERATIONS + (4.0 * spread).ceil() as usize
}

/// Lentz evaluation of the incomplete-beta continued fraction.
fn continued_fraction(x: f64, a: f64, b: f64) -> Result<f64> {
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    let budget = cf_budget(a, b);
    for m in 1..=budget {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < CF_TOLERANCE {
            return Ok(h);
        }
    }
    Err(Error::NonConvergence {
        routine: "incomplete beta continued fraction",
        iterations: budget,
    })
}

/// Lower-tail `I_x(a, b)` returned as `(value, complement)` so callers in
/// the upper tail keep relative precision.
fn inc_beta_pair(x: f64, a: f64, b: f64) -> Result<(f64, f64)> {
    if x <= 0.0 {
        return Ok((0.0, 1.0));
    }
    if x >= 1.0 {
        return Ok((1.0, 0.0));
    }
    let front = power_terms(x, a, b);
    if x < (a + 1.0) / (a + b + 2.0) {
        let v = (front * continued_fraction(x, a, b)? / a).min(1.0);
        Ok((v, 1.0 - v))
    } else {
        let w = (front * continued_fraction(1.0 - x, b, a)? / b).min(1.0);
        Ok((1.0 - w, w))
    }
}

/// Regularized incomplete beta function `I_x(a, b)`.
pub fn reg_inc_beta(x: Probability, shape: BetaShape) -> Result<Probability> {
    let (v, _) = inc_beta_pair(x.value(), shape.a(), shape.b())?;
    Ok(Probability::clamped(v))
}

/// Starting point for the quantile iteration (normal/Wilson-Hilferty style
/// approximation for large shapes, tail power law otherwise).
fn initial_guess(q: f64, a: f64, b: f64) -> f64 {
    if a >= 1.0 && b >= 1.0 {
        let pp = if q < 0.5 { q } else { 1.0 - q };
        let t = (-2.0 * pp.ln()).sqrt();
        let mut x = (2.307_53 + t * 0.270_61) / (1.0 + t * (0.992_29 + t * 0.044_81)) - t;
        if q < 0.5 {
            x = -x;
        }
        let al = (x * x - 3.0) / 6.0;
        let h = 2.0 / (1.0 / (2.0 * a - 1.0) + 1.0 / (2.0 * b - 1.0));
        let w = x * (al + h).sqrt() / h
            - (1.0 / (2.0 * b - 1.0) - 1.0 / (2.0 * a - 1.0)) * (al + 5.0 / 6.0 - 2.0 / (3.0 * h));
        a / (a + b * (2.0 * w).exp())
    } else {
        let lna = (a / (a + b)).ln();
        let lnb = (b / (a + b)).ln();
        let t = (a * lna).exp() / a;
        let u = (b * lnb).exp() / b;
        let w = t + u;
        if q < t / w {
            (a * w * q).powf(1.0 / a)
        } else {
            1.0 - (b * w * (1.0 - q)).powf(1.0 / b)
        }
    }
}

/// The `q`-quantile of Beta(a, b): `x` with `I_x(a, b) = q`.
///
/// Safeguarded Newton iteration inside a shrinking bracket; a Newton step
/// that leaves the bracket is replaced by bisection.
pub fn beta_quantile(q: Probability, shape: BetaShape) -> Result<Probability> {
    let q = q.value();
    if q <= 0.0 {
        return Ok(Probability::ZERO);
    }
    if q >= 1.0 {
        return Ok(Probability::ONE);
    }
    let (a, b) = (shape.a(), shape.b());
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut x = initial_guess(q, a, b);
    if !(x > 0.0 && x < 1.0) {
        x = 0.5;
    }
    const MAX_STEPS: usize = 300;
    for _ in 0..MAX_STEPS {
        let (lower, upper) = inc_beta_pair(x, a, b)?;
        // residual measured on whichever tail keeps relative precision
        let f = if q <= 0.5 { lower - q } else { (1.0 - q) - upper };
        if f == 0.0 {
            return Ok(Probability::clamped(x));
        }
        if f < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let density = power_terms(x, a, b) / (x * (1.0 - x));
        let mut next = x - f / density;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = if lo > 0.0 && hi / lo > 16.0 {
                (lo * hi).sqrt()
            } else if lo == 0.0 {
                0.0625 * hi
            } else {
                0.5 * (lo + hi)
            };
        }
        let step = (next - x).abs();
        x = next;
        // relative to the nearer endpoint, but no finer than one ulp of x
        let tol = (1e-15 * x.min(1.0 - x)).max(0.5 * f64::EPSILON * x).max(1e-300);
        if step <= tol || hi - lo <= 4.0 * f64::EPSILON * hi {
            return Ok(Probability::clamped(x));
        }
    }
    Err(Error::NonConvergence {
        routine: "beta quantile",
        iterations: MAX_STEPS,
    })
}

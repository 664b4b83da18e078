//! Standard normal distribution: CDF via erfc, quantile via a rational
//! approximation polished with one Halley step.

use super::Probability;
use crate::error::{domain, Result};
use std::f64::consts::{FRAC_1_SQRT_2, PI};

const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// erf via the all-positive series `2/sqrt(pi) e^{-t^2} sum (2t^2)^k t / (2k+1)!!`.
fn erf_series(t: f64) -> f64 {
    let t2 = t * t;
    let mut term = t;
    let mut sum = t;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= 2.0 * t2 / (2.0 * k + 1.0);
        let next = sum + term;
        if next == sum {
            break;
        }
        sum = next;
    }
    2.0 / PI.sqrt() * (-t2).exp() * sum
}

/// erfc for `t >= 2` via the Laplace continued fraction (modified Lentz).
fn erfc_continued_fraction(t: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = t;
    let mut c = t;
    let mut d = 0.0;
    for k in 1..5000 {
        let a = k as f64 * 0.5;
        d = t + a * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = t + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-t * t).exp() / (PI.sqrt() * f)
}

fn erfc(t: f64) -> f64 {
    if t < 0.0 {
        2.0 - erfc(-t)
    } else if t < 2.0 {
        1.0 - erf_series(t)
    } else {
        erfc_continued_fraction(t)
    }
}

/// Standard normal CDF, accurate to full relative precision in the lower tail.
pub fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z * FRAC_1_SQRT_2)
}

// Rational approximation coefficients (relative error ~1.15e-9 before polishing).
#[allow(clippy::excessive_precision)]
const A: [f64; 6] = [
    -3.969_683_028_665_376e1,
    2.209_460_984_245_205e2,
    -2.759_285_104_469_687e2,
    1.383_577_518_672_690e2,
    -3.066_479_806_614_716e1,
    2.506_628_277_459_239,
];
const B: [f64; 5] = [
    -5.447_609_879_822_406e1,
    1.615_858_368_580_409e2,
    -1.556_989_798_598_866e2,
    6.680_131_188_771_972e1,
    -1.328_068_155_288_572e1,
];
const C: [f64; 6] = [
    -7.784_894_002_430_293e-3,
    -3.223_964_580_411_365e-1,
    -2.400_758_277_161_838,
    -2.549_732_539_343_734,
    4.374_664_141_464_968,
    2.938_163_982_698_783,
];
const D: [f64; 4] = [
    7.784_695_709_041_462e-3,
    3.224_671_290_700_398e-1,
    2.445_134_137_142_996,
    3.754_408_661_907_416,
];
const LOW_REGION: f64 = 0.024_25;

/// Quantile for `0 < q <= 0.5`.
fn lower_quantile(q: f64) -> f64 {
    let x = if q < LOW_REGION {
        let r = (-2.0 * q.ln()).sqrt();
        (((((C[0] * r + C[1]) * r + C[2]) * r + C[3]) * r + C[4]) * r + C[5])
            / ((((D[0] * r + D[1]) * r + D[2]) * r + D[3]) * r + 1.0)
    } else {
        let u = q - 0.5;
        let r = u * u;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * u
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    };
    // Halley refinement on the CDF
    let e = normal_cdf(x) - q;
    let u = e * SQRT_2PI * (0.5 * x * x).exp();
    if u.is_finite() {
        x - u / (1.0 + 0.5 * x * u)
    } else {
        x
    }
}

/// The `q`-quantile of the standard normal distribution.
///
/// Upper-half arguments are reduced to the lower half, so
/// `normal_quantile(q) == -normal_quantile(1 - q)` whenever `1 - q` is exact.
pub fn normal_quantile(q: Probability) -> Result<f64> {
    let q = q.value();
    if q <= 0.0 || q >= 1.0 {
        return Err(domain(format!("normal quantile of {q} is infinite")));
    }
    if q > 0.5 {
        Ok(-lower_quantile(1.0 - q))
    } else {
        Ok(lower_quantile(q))
    }
}

/// Two-sided critical value `z_{alpha/2}`, the `1 - alpha/2` quantile.
pub(crate) fn critical_value(alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(domain(format!("significance level {alpha} is outside (0, 1)")));
    }
    Ok(-lower_quantile(0.5 * alpha))
}

//! Special-function kernel: normal quantiles, the regularized incomplete beta
//! function and its inverse, and numerically stable binomial probabilities.
//!
//! Every routine here is a pure function of its arguments.

mod beta;
mod binomial;
mod gamma;
pub(crate) mod normal;

pub use beta::{beta_quantile, reg_inc_beta};
pub use binomial::{binomial_window, log_binomial_pmf, windowed_pmf, BinomialWindow};
pub use gamma::ln_gamma;
pub use normal::{normal_cdf, normal_quantile};

pub(crate) use gamma::{deviance_term, stirling_error};

use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};

/// A probability in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Probability(f64);

impl Probability {
    pub const ZERO: Probability = Probability(0.0);
    pub const ONE: Probability = Probability(1.0);

    /// Rejects NaN and values outside `[0, 1]`.
    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || !(0.0..=1.0).contains(&value) {
            return Err(domain(format!("probability {value} is outside [0, 1]")));
        }
        Ok(Probability(value))
    }

    /// Clamps a finite real into `[0, 1]`. NaN maps to zero.
    pub fn clamped(value: f64) -> Self {
        if value.is_nan() {
            Probability(0.0)
        } else {
            Probability(value.clamp(0.0, 1.0))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn complement(self) -> Probability {
        Probability(1.0 - self.0)
    }

    /// True when strictly inside `(0, 1)`.
    pub fn is_interior(self) -> bool {
        self.0 > 0.0 && self.0 < 1.0
    }
}

impl TryFrom<f64> for Probability {
    type Error = crate::error::Error;
    fn try_from(v: f64) -> Result<Self> {
        Probability::new(v)
    }
}

impl From<Probability> for f64 {
    fn from(p: Probability) -> f64 {
        p.0
    }
}

impl std::fmt::Display for Probability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Natural logarithm of a probability, in `[-inf, 0]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LogProb(f64);

impl LogProb {
    pub const CERTAIN: LogProb = LogProb(0.0);
    pub const IMPOSSIBLE: LogProb = LogProb(f64::NEG_INFINITY);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value > 0.0 {
            return Err(domain(format!("log-probability {value} is not in [-inf, 0]")));
        }
        Ok(LogProb(value))
    }

    /// Rounding can push an exact log-probability of zero a hair above it.
    pub(crate) fn saturating(value: f64) -> Self {
        LogProb(value.min(0.0))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn exp(self) -> Probability {
        Probability(self.0.exp())
    }
}

/// Shape parameters of a beta distribution; real-valued, both positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaShape {
    a: f64,
    b: f64,
}

impl BetaShape {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite() && b > 0.0 && b.is_finite()) {
            return Err(domain(format!("beta shapes must be positive, got ({a}, {b})")));
        }
        Ok(BetaShape { a, b })
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn swapped(&self) -> BetaShape {
        BetaShape { a: self.b, b: self.a }
    }
}

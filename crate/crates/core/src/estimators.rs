//! The four interval estimators for a binomial proportion.
//!
//! Every interval is returned with both its raw bounds (straight from the
//! formula, possibly outside `[0, 1]`) and the bounds clipped to `[0, 1]`.

use crate::error::{domain, Error, Result};
use crate::numerics::{beta_quantile, BetaShape, Probability};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which interval method is in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EstimatorKind {
    Wald,
    ClopperPearson,
    Wilson,
    AgrestiCoull,
}

impl EstimatorKind {
    pub const ALL: [EstimatorKind; 4] = [
        EstimatorKind::Wald,
        EstimatorKind::ClopperPearson,
        EstimatorKind::Wilson,
        EstimatorKind::AgrestiCoull,
    ];

    /// Stable machine name.
    pub fn name(self) -> &'static str {
        match self {
            EstimatorKind::Wald => "wald",
            EstimatorKind::ClopperPearson => "clopper-pearson",
            EstimatorKind::Wilson => "wilson",
            EstimatorKind::AgrestiCoull => "agresti-coull",
        }
    }

    /// Column label used in tables: W, CP, WS, AC.
    pub fn label(self) -> &'static str {
        match self {
            EstimatorKind::Wald => "W",
            EstimatorKind::ClopperPearson => "CP",
            EstimatorKind::Wilson => "WS",
            EstimatorKind::AgrestiCoull => "AC",
        }
    }
}

impl fmt::Display for EstimatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EstimatorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lowered = s.to_ascii_lowercase();
        EstimatorKind::ALL
            .into_iter()
            .find(|k| k.name() == lowered || k.label().eq_ignore_ascii_case(&lowered))
            .ok_or_else(|| domain(format!("unknown estimator '{s}'")))
    }
}

/// Observed data: `x` successes in `n` trials, at significance `alpha`.
///
/// The success count is stored as a real so that a reported proportion can
/// be used directly (`x = p_hat * n`) when the integer count is unknown, and
/// so that planners can evaluate intervals at `x = n p*`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observation {
    successes: f64,
    trials: u64,
    alpha: f64,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(domain(format!("significance level {alpha} is outside (0, 1)")))
    }
}

impl Observation {
    pub fn new(x: u64, n: u64, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(domain("number of trials must be at least 1"));
        }
        if x > n {
            return Err(domain(format!("successes {x} exceed trials {n}")));
        }
        check_alpha(alpha)?;
        Ok(Observation { successes: x as f64, trials: n, alpha })
    }

    /// An observation specified by its proportion rather than its count.
    pub fn from_proportion(p_hat: f64, n: u64, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(domain("number of trials must be at least 1"));
        }
        let p_hat = Probability::new(p_hat)?.value();
        check_alpha(alpha)?;
        Ok(Observation { successes: p_hat * n as f64, trials: n, alpha })
    }

    pub fn successes(&self) -> f64 {
        self.successes
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn p_hat(&self) -> f64 {
        self.successes / self.trials as f64
    }
}

/// Lower and upper confidence bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub raw_lower: f64,
    pub raw_upper: f64,
    pub lower: Probability,
    pub upper: Probability,
}

impl Interval {
    pub fn from_raw(raw_lower: f64, raw_upper: f64) -> Self {
        debug_assert!(raw_lower <= raw_upper, "{raw_lower} > {raw_upper}");
        Interval {
            raw_lower,
            raw_upper,
            lower: Probability::clamped(raw_lower),
            upper: Probability::clamped(raw_upper),
        }
    }

    /// Width of the clipped interval.
    pub fn width(&self) -> f64 {
        self.upper.value() - self.lower.value()
    }

    /// Width straight from the formula.
    pub fn raw_width(&self) -> f64 {
        self.raw_upper - self.raw_lower
    }

    /// Inclusive containment against the clipped bounds.
    pub fn covers(&self, p: f64) -> bool {
        self.lower.value() <= p && p <= self.upper.value()
    }

    /// Zero-width interval: `[0, 0]` or `[1, 1]`.
    pub fn is_degenerate(&self) -> bool {
        self.lower == self.upper
    }
}

/// Structural properties of each method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PropertyFlags {
    /// Symmetric about the observed proportion.
    pub symmetric: bool,
    /// Never collapses to `[0, 0]` or `[1, 1]`.
    pub non_degenerate: bool,
    /// Raw bounds always inside `[0, 1]`.
    pub bounds_conforming: bool,
    /// Expressible in closed form.
    pub closed_form: bool,
}

pub fn properties(kind: EstimatorKind) -> PropertyFlags {
    let (symmetric, non_degenerate, bounds_conforming, closed_form) = match kind {
        EstimatorKind::Wald => (true, false, false, true),
        EstimatorKind::ClopperPearson => (false, true, true, false),
        EstimatorKind::Wilson => (false, true, true, true),
        EstimatorKind::AgrestiCoull => (false, true, false, true),
    };
    PropertyFlags { symmetric, non_degenerate, bounds_conforming, closed_form }
}

/// An estimator bound to a significance level, with its critical value
/// computed once. Use this when evaluating many outcomes at the same `alpha`.
#[derive(Debug, Clone, Copy)]
pub struct IntervalEstimator {
    kind: EstimatorKind,
    alpha: f64,
    z: f64,
}

impl IntervalEstimator {
    pub fn new(kind: EstimatorKind, alpha: f64) -> Result<Self> {
        let z = crate::numerics::normal::critical_value(alpha)?;
        Ok(IntervalEstimator { kind, alpha, z })
    }

    pub fn kind(&self) -> EstimatorKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The two-sided critical value `z_{alpha/2}`.
    pub fn z(&self) -> f64 {
        self.z
    }

    /// Interval for `x` (possibly fractional) successes out of `n`.
    pub fn bounds(&self, x: f64, n: u64) -> Result<Interval> {
        let nf = n as f64;
        let z = self.z;
        let z2 = z * z;
        let p_hat = x / nf;
        let q_hat = (nf - x) / nf;
        let interval = match self.kind {
            EstimatorKind::Wald => {
                let h = z * (p_hat * q_hat / nf).sqrt();
                Interval::from_raw(p_hat - h, p_hat + h)
            }
            EstimatorKind::ClopperPearson => {
                let lower = if x <= 0.0 {
                    0.0
                } else {
                    let s = BetaShape::new(x, nf - x + 1.0)?;
                    beta_quantile(Probability::new(0.5 * self.alpha)?, s)?.value()
                };
                let upper = if x >= nf {
                    1.0
                } else {
                    let s = BetaShape::new(x + 1.0, nf - x)?;
                    beta_quantile(Probability::new(1.0 - 0.5 * self.alpha)?, s)?.value()
                };
                Interval::from_raw(lower, upper)
            }
            EstimatorKind::Wilson => {
                // Rationalized bounds: L = p^2 / (p + z^2/2n + z r), and the mirror
                // for 1 - U; no cancellation, exact 0 and 1 at the extremes.
                let shift = z2 / (2.0 * nf);
                let root = z * (p_hat * q_hat / nf + z2 / (4.0 * nf * nf)).sqrt();
                let lower = p_hat * p_hat / (p_hat + shift + root);
                let upper = 1.0 - q_hat * q_hat / (q_hat + shift + root);
                Interval::from_raw(lower, upper)
            }
            EstimatorKind::AgrestiCoull => {
                let n_adj = nf + z2;
                let p_adj = (x + 0.5 * z2) / n_adj;
                let h = z * (p_adj * (1.0 - p_adj) / n_adj).sqrt();
                Interval::from_raw(p_adj - h, p_adj + h)
            }
        };
        Ok(interval)
    }

    pub fn interval(&self, obs: &Observation) -> Result<Interval> {
        self.bounds(obs.successes(), obs.trials())
    }
}

/// Wald interval `p_hat +/- z sqrt(p_hat (1 - p_hat) / n)`.
pub fn wald_interval(obs: &Observation) -> Interval {
    // the Wald branch has no fallible steps once alpha is validated
    interval(EstimatorKind::Wald, obs).expect("validated observation")
}

/// Clopper-Pearson interval from beta quantiles.
pub fn clopper_pearson_interval(obs: &Observation) -> Result<Interval> {
    interval(EstimatorKind::ClopperPearson, obs)
}

/// Wilson score interval.
pub fn wilson_interval(obs: &Observation) -> Interval {
    interval(EstimatorKind::Wilson, obs).expect("validated observation")
}

/// Agresti-Coull interval around `p~ = (x + z^2/2) / (n + z^2)`.
pub fn agresti_coull_interval(obs: &Observation) -> Interval {
    interval(EstimatorKind::AgrestiCoull, obs).expect("validated observation")
}

/// Dispatch on `kind`. Only Clopper-Pearson can fail (quantile non-convergence).
pub fn interval(kind: EstimatorKind, obs: &Observation) -> Result<Interval> {
    IntervalEstimator::new(kind, obs.alpha())?.interval(obs)
}

//! Sample-size planning: the smallest `n` whose interval, evaluated at the
//! anticipated proportion `p*`, has margin of error at most `ε`.

use crate::error::{domain, Error, Result};
use crate::estimators::{EstimatorKind, IntervalEstimator};
use crate::numerics::normal::critical_value;
use crate::numerics::{beta_quantile, BetaShape, Probability};
use serde::Serialize;
use std::fmt;

/// Largest sample size any search will consider.
pub const SEARCH_LIMIT: u64 = 10_000_000_000;

/// How the target margin is stated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Margin {
    /// Absolute half-width `ε`.
    Absolute(f64),
    /// Relative half-width `ε̃_R = ε / p*`.
    Relative(f64),
}

/// Non-fatal remarks attached to a plan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlanWarning {
    /// `ε̃_R > 1`: the margin exceeds the proportion itself.
    RelativeMarginAboveOne,
    /// `ε̃_R` outside the recommended `[0.1, 0.5]`.
    OutsideRecommendedRange,
}

impl fmt::Display for PlanWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlanWarning::RelativeMarginAboveOne => "relative margin exceeds 1",
            PlanWarning::OutsideRecommendedRange => "relative margin outside [0.1, 0.5]",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanRequest {
    p_star: Probability,
    epsilon: f64,
    alpha: f64,
    z: f64,
}

impl PlanRequest {
    pub fn new(p_star: f64, margin: Margin, alpha: f64) -> Result<Self> {
        let p_star = Probability::new(p_star)?;
        if !p_star.is_interior() {
            return Err(domain(format!("anticipated proportion {p_star} must lie inside (0, 1)")));
        }
        let epsilon = match margin {
            Margin::Absolute(e) => e,
            Margin::Relative(r) => relative_to_absolute(r, p_star),
        };
        if !(epsilon > 0.0 && epsilon.is_finite()) {
            return Err(domain(format!("margin of error {epsilon} must be positive")));
        }
        let z = critical_value(alpha)?;
        Ok(PlanRequest { p_star, epsilon, alpha, z })
    }

    pub fn p_star(&self) -> Probability {
        self.p_star
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn eps_r_tilde(&self) -> f64 {
        self.epsilon / self.p_star.value()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn warnings(&self) -> Vec<PlanWarning> {
        let r = self.eps_r_tilde();
        let mut out = Vec::new();
        if r > 1.0 {
            out.push(PlanWarning::RelativeMarginAboveOne);
        }
        if !(0.1..=0.5).contains(&r) {
            out.push(PlanWarning::OutsideRecommendedRange);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlanMethod {
    ClosedForm,
    Search,
}

impl fmt::Display for PlanMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PlanMethod::ClosedForm => "closed-form",
            PlanMethod::Search => "search",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlanResult {
    pub kind: EstimatorKind,
    pub n: u64,
    pub method: PlanMethod,
    /// Answer from the other method, when one was run.
    pub cross_check_n: Option<u64>,
    /// Set when the two methods differ by more than one.
    pub discrepancy: Option<String>,
    pub warnings: Vec<PlanWarning>,
}

impl PlanResult {
    fn new(req: &PlanRequest, kind: EstimatorKind, n: u64, method: PlanMethod) -> Self {
        PlanResult { kind, n, method, cross_check_n: None, discrepancy: None, warnings: req.warnings() }
    }

    fn with_cross_check(mut self, other: Option<u64>, what: &str) -> Self {
        self.cross_check_n = other;
        self.discrepancy = match other {
            Some(m) if m.abs_diff(self.n) > 1 => {
                Some(format!("{what} gives {m}, {} by {}", self.n, self.method))
            }
            None => Some(format!("{what} has no real solution")),
            _ => None,
        };
        self
    }
}

// A ceiling that does not bump a value sitting on an integer up by one
// because of the last bit.
fn ceil_tolerant(v: f64) -> u64 {
    let r = v.round();
    let n = if (v - r).abs() <= 1e-12 * v.abs().max(1.0) { r } else { v.ceil() };
    n.max(1.0) as u64
}

/// Half-width that the planners drive below `ε`, at `x = n p*`.
pub fn planned_margin(kind: EstimatorKind, n: u64, req: &PlanRequest) -> Result<f64> {
    let p = req.p_star.value();
    match kind {
        EstimatorKind::ClopperPearson => {
            let (lb, ub) = cp_distances(n, req)?;
            Ok(lb.max(ub))
        }
        _ => {
            let est = IntervalEstimator::new(kind, req.alpha)?;
            let ci = est.bounds(n as f64 * p, n)?;
            Ok(0.5 * ci.raw_width())
        }
    }
}

fn cp_lower_distance(n: u64, req: &PlanRequest) -> Result<f64> {
    let p = req.p_star.value();
    let nf = n as f64;
    let x = nf * p;
    let lower = beta_quantile(Probability::new(0.5 * req.alpha)?, BetaShape::new(x, nf - x + 1.0)?)?;
    Ok(p - lower.value())
}

fn cp_upper_distance(n: u64, req: &PlanRequest) -> Result<f64> {
    let p = req.p_star.value();
    let nf = n as f64;
    let x = nf * p;
    let upper =
        beta_quantile(Probability::new(1.0 - 0.5 * req.alpha)?, BetaShape::new(x + 1.0, nf - x)?)?;
    Ok(upper.value() - p)
}

fn cp_distances(n: u64, req: &PlanRequest) -> Result<(f64, f64)> {
    Ok((cp_lower_distance(n, req)?, cp_upper_distance(n, req)?))
}

/// Smallest `n` with `ok(n)`, assuming `ok` is eventually true and mostly
/// monotone. Doubles to bracket, bisects, then scans `scan` below the
/// answer for an earlier success.
fn smallest_satisfying(scan: u64, mut ok: impl FnMut(u64) -> Result<bool>) -> Result<u64> {
    let mut hi = 1u64;
    while !ok(hi)? {
        if hi >= SEARCH_LIMIT {
            return Err(Error::Resource(format!("no sample size up to {SEARCH_LIMIT} meets the margin")));
        }
        hi = (hi * 2).min(SEARCH_LIMIT);
    }
    let mut lo = hi / 2; // fails, or zero
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    for m in hi.saturating_sub(scan).max(1)..hi {
        if ok(m)? {
            return Ok(m);
        }
    }
    Ok(hi)
}

/// Uniform search on [`planned_margin`]. Works for every estimator.
pub fn generic_sample_size(kind: EstimatorKind, req: &PlanRequest) -> Result<PlanResult> {
    let n = smallest_satisfying(5, |n| Ok(planned_margin(kind, n, req)? <= req.epsilon))?;
    Ok(PlanResult::new(req, kind, n, PlanMethod::Search))
}

fn wald_closed_form(req: &PlanRequest) -> u64 {
    let p = req.p_star.value();
    ceil_tolerant(req.z * req.z * p * (1.0 - p) / (req.epsilon * req.epsilon))
}

/// `n = ⌈z² p*(1 − p*) / ε²⌉`.
pub fn wald_sample_size(req: &PlanRequest) -> Result<PlanResult> {
    let n = wald_closed_form(req);
    Ok(PlanResult::new(req, EstimatorKind::Wald, n, PlanMethod::ClosedForm))
}

/// Larger root of the quadratic obtained by setting the score half-width
/// at `p*` equal to `ε`. `None` when the root is not a positive real.
pub fn wilson_closed_form(req: &PlanRequest) -> Option<u64> {
    let pq = req.p_star.value() * (1.0 - req.p_star.value());
    let e2 = req.epsilon * req.epsilon;
    let z2 = req.z * req.z;
    let radicand = e2 * (1.0 - 4.0 * pq) + pq * pq;
    let n = z2 / (2.0 * e2) * ((pq - 2.0 * e2) + radicand.sqrt());
    (n.is_finite() && n > 0.0).then(|| ceil_tolerant(n))
}

/// Closed form, cross-checked against the search; the search answer is used
/// when the closed form has no positive root.
pub fn wilson_sample_size(req: &PlanRequest) -> Result<PlanResult> {
    let searched = generic_sample_size(EstimatorKind::Wilson, req)?.n;
    Ok(match wilson_closed_form(req) {
        Some(n) => PlanResult::new(req, EstimatorKind::Wilson, n, PlanMethod::ClosedForm)
            .with_cross_check(Some(searched), "search"),
        None => PlanResult::new(req, EstimatorKind::Wilson, searched, PlanMethod::Search)
            .with_cross_check(None, "closed form"),
    })
}

/// The cube-root expression printed for the Agresti-Coull planner, taken
/// literally: the larger real value of `∛((Δ₁ ± √(Δ₁² − 4Δ₀³)) / 2)`.
/// `None` when the inner root is not real.
pub fn agresti_coull_cubic(req: &PlanRequest) -> Option<f64> {
    let pq = req.p_star.value() * (1.0 - req.p_star.value());
    let e2 = req.epsilon * req.epsilon;
    let z = req.z;
    let s = 3.0 * e2 + pq;
    let d0 = 16.0 * z.powi(4) * s * s - 24.0 * e2 * z * z * (6.0 * e2 - 1.0);
    let d1 = 128.0 * z.powi(6) * s.powi(3) - 288.0 * e2 * z.powi(4) * s * (6.0 * e2 - 1.0)
        + 432.0 * e2 * e2 * z.powi(6) * (4.0 * e2 - 1.0);
    let disc = d1 * d1 - 4.0 * d0.powi(3);
    if !disc.is_finite() || disc < 0.0 {
        return None;
    }
    let root = disc.sqrt();
    let plus = (0.5 * (d1 + root)).cbrt();
    let minus = (0.5 * (d1 - root)).cbrt();
    Some(plus.max(minus))
}

/// Search on the adjusted half-width. The printed cubic is evaluated as a
/// cross-check only.
pub fn agresti_coull_sample_size(req: &PlanRequest) -> Result<PlanResult> {
    let searched = generic_sample_size(EstimatorKind::AgrestiCoull, req)?.n;
    let cubic = agresti_coull_cubic(req).filter(|v| v.is_finite() && *v > 0.0).map(ceil_tolerant);
    Ok(PlanResult::new(req, EstimatorKind::AgrestiCoull, searched, PlanMethod::Search)
        .with_cross_check(cubic, "printed cubic"))
}

/// `max(n_LB, n_UB)`, each the smallest `n` at which the distance from `p*`
/// to that bound is at most `ε`, with `x = n p*` kept real.
pub fn clopper_pearson_sample_size(req: &PlanRequest) -> Result<PlanResult> {
    let n_lb = smallest_satisfying(2, |n| Ok(cp_lower_distance(n, req)? <= req.epsilon))?;
    let n_ub = smallest_satisfying(2, |n| Ok(cp_upper_distance(n, req)? <= req.epsilon))?;
    let n = n_lb.max(n_ub);
    let searched = generic_sample_size(EstimatorKind::ClopperPearson, req)?.n;
    Ok(PlanResult::new(req, EstimatorKind::ClopperPearson, n, PlanMethod::Search)
        .with_cross_check(Some(searched), "joint search"))
}

/// The dedicated planner for `kind`.
pub fn sample_size(kind: EstimatorKind, req: &PlanRequest) -> Result<PlanResult> {
    match kind {
        EstimatorKind::Wald => {
            let searched = generic_sample_size(kind, req)?.n;
            Ok(wald_sample_size(req)?.with_cross_check(Some(searched), "search"))
        }
        EstimatorKind::ClopperPearson => clopper_pearson_sample_size(req),
        EstimatorKind::Wilson => wilson_sample_size(req),
        EstimatorKind::AgrestiCoull => agresti_coull_sample_size(req),
    }
}

/// Largest `ε̃_R` keeping `n p* ≥ a` under the Wald plan:
/// `√(z² (1 − p*) / a)`.
pub fn eps_r_threshold(p_star: Probability, alpha: f64, a: f64) -> Result<f64> {
    if a.is_nan() || a <= 0.0 {
        return Err(domain(format!("count threshold {a} must be positive")));
    }
    let z = critical_value(alpha)?;
    Ok((z * z * (1.0 - p_star.value()) / a).sqrt())
}

/// `ε = ε̃_R · p*`.
pub fn relative_to_absolute(eps_r_tilde: f64, p_star: Probability) -> f64 {
    eps_r_tilde * p_star.value()
}

//! Exact performance metrics of an interval method at a design point:
//! coverage probability, expected width, expected (relative) margin of
//! error, and tolerance-band classification.
//!
//! Every metric is an expectation over the binomial outcome `x`, summed over
//! the central window that carries all but `tail_tol` of the mass.

use crate::error::{domain, Result};
use crate::estimators::{EstimatorKind, IntervalEstimator};
use crate::numerics::{windowed_pmf, Probability};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

/// Default mass left out of the enumeration window.
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

/// Estimator, sample size, true proportion and significance level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DesignPoint {
    pub kind: EstimatorKind,
    pub n: u64,
    pub p: Probability,
    pub alpha: f64,
}

impl DesignPoint {
    pub fn new(kind: EstimatorKind, n: u64, p: f64, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(domain("sample size must be at least 1"));
        }
        let p = Probability::new(p)?;
        if !p.is_interior() {
            return Err(domain(format!("true proportion {} must lie strictly inside (0, 1)", p)));
        }
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(domain(format!("significance level {alpha} is outside (0, 1)")));
        }
        Ok(DesignPoint { kind, n, p, alpha })
    }
}

/// Performance category, strictest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ToleranceBand {
    Target,
    Acceptable,
    MinimallyAcceptable,
    Unacceptable,
}

impl ToleranceBand {
    pub fn name(self) -> &'static str {
        match self {
            ToleranceBand::Target => "target",
            ToleranceBand::Acceptable => "acceptable",
            ToleranceBand::MinimallyAcceptable => "minimally-acceptable",
            ToleranceBand::Unacceptable => "unacceptable",
        }
    }

    fn from_rank(rank: usize) -> Self {
        [
            ToleranceBand::Target,
            ToleranceBand::Acceptable,
            ToleranceBand::MinimallyAcceptable,
            ToleranceBand::Unacceptable,
        ][rank.min(3)]
    }
}

impl fmt::Display for ToleranceBand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which bounds enter the expected width.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundView {
    /// Bounds as produced by the formula, even when they leave `[0, 1]`.
    #[default]
    Raw,
    /// Bounds clipped to `[0, 1]`.
    Clipped,
}

/// Knobs for the enumeration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub tail_tol: f64,
    pub width_bounds: BoundView,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { tail_tol: DEFAULT_TAIL_TOL, width_bounds: BoundView::Raw }
    }
}

/// Metrics for one design point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub kind: EstimatorKind,
    pub n: u64,
    pub p: Probability,
    pub p_star: Probability,
    pub alpha: f64,
    pub cpr: Probability,
    pub ew: f64,
    pub emoe: f64,
    pub eps_r: f64,
    pub coverage_band: ToleranceBand,
    pub moe_band: ToleranceBand,
}

impl EvalResult {
    /// Both coverage and relative margin of error are on target.
    pub fn is_target(&self) -> bool {
        self.coverage_band == ToleranceBand::Target && self.moe_band == ToleranceBand::Target
    }
}

/// Raw sums: coverage and expected width.
fn enumerate(d: &DesignPoint, opts: &EvalOptions) -> Result<(f64, f64)> {
    let est = IntervalEstimator::new(d.kind, d.alpha)?;
    let p = d.p.value();
    let (lo, pmf) = windowed_pmf(d.n, d.p, opts.tail_tol);
    let mut coverage = 0.0;
    let mut width = 0.0;
    for (i, &w) in pmf.iter().enumerate() {
        let x = lo + i as u64;
        let ci = est.bounds(x as f64, d.n)?;
        if ci.covers(p) {
            coverage += w;
        }
        width += w * match opts.width_bounds {
            BoundView::Raw => ci.raw_width(),
            BoundView::Clipped => ci.width(),
        };
    }
    Ok((coverage, width))
}

/// Probability that the interval covers `p`.
pub fn coverage_probability(d: &DesignPoint) -> Result<Probability> {
    coverage_probability_with(d, &EvalOptions::default())
}

pub fn coverage_probability_with(d: &DesignPoint, opts: &EvalOptions) -> Result<Probability> {
    Ok(Probability::clamped(enumerate(d, opts)?.0))
}

/// Expected interval width.
pub fn expected_width(d: &DesignPoint) -> Result<f64> {
    expected_width_with(d, &EvalOptions::default())
}

pub fn expected_width_with(d: &DesignPoint, opts: &EvalOptions) -> Result<f64> {
    Ok(enumerate(d, opts)?.1)
}

/// Expected margin of error, half the expected width.
pub fn expected_moe(d: &DesignPoint) -> Result<f64> {
    Ok(expected_width(d)? / 2.0)
}

/// Expected margin of error relative to `p_star`.
pub fn relative_moe(d: &DesignPoint, p_star: Probability) -> Result<f64> {
    if p_star.value() <= 0.0 {
        return Err(domain("reference proportion must be positive"));
    }
    Ok(expected_moe(d)? / p_star.value())
}

/// All metrics at once, with one pass over the outcomes.
pub fn evaluate(d: &DesignPoint, p_star: Probability, opts: &EvalOptions) -> Result<EvalResult> {
    if p_star.value() <= 0.0 {
        return Err(domain("reference proportion must be positive"));
    }
    let (coverage, ew) = enumerate(d, opts)?;
    let cpr = Probability::clamped(coverage);
    let emoe = ew / 2.0;
    let eps_r = emoe / p_star.value();
    let (coverage_band, moe_band) = classify(cpr, eps_r, d.alpha);
    Ok(EvalResult {
        kind: d.kind,
        n: d.n,
        p: d.p,
        p_star,
        alpha: d.alpha,
        cpr,
        ew,
        emoe,
        eps_r,
        coverage_band,
        moe_band,
    })
}

// Absorbs representation error such as 0.96 * 100 - 95 = 1.0000000000000142.
const BAND_SLACK: f64 = 1e-9;

/// Tolerance bands for coverage and relative margin of error. Coverage bands
/// are 1, 2 and 3 percentage points around the nominal level; ε_R bands end
/// at 0.5, 0.75 and 1. Boundaries belong to the better band.
pub fn classify(cpr: Probability, eps_r: f64, alpha: f64) -> (ToleranceBand, ToleranceBand) {
    let gap = (cpr.value() * 100.0 - (1.0 - alpha) * 100.0).abs();
    let coverage_rank = [1.0, 2.0, 3.0]
        .iter()
        .position(|&edge| gap <= edge + BAND_SLACK)
        .unwrap_or(3);
    let moe_rank = [0.5, 0.75, 1.0]
        .iter()
        .position(|&edge| eps_r <= edge + BAND_SLACK)
        .unwrap_or(3);
    (ToleranceBand::from_rank(coverage_rank), ToleranceBand::from_rank(moe_rank))
}

/// Rows of a grid evaluation plus the per-estimator annotations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridReport {
    pub rows: Vec<EvalResult>,
    /// First grid `n` at which both bands are Target, per estimator.
    pub first_target: Vec<(EstimatorKind, Option<u64>)>,
}

impl GridReport {
    pub fn first_target(&self, kind: EstimatorKind) -> Option<u64> {
        self.first_target.iter().find(|(k, _)| *k == kind).and_then(|(_, n)| *n)
    }

    /// Smallest grid `n` from which every later grid point is on target.
    pub fn target_from(&self, kind: EstimatorKind) -> Option<u64> {
        let rows: Vec<_> = self.rows.iter().filter(|r| r.kind == kind).collect();
        let tail = rows.iter().rev().take_while(|r| r.is_target()).count();
        (tail > 0).then(|| rows[rows.len() - tail].n)
    }

    pub fn rows_for(&self, kind: EstimatorKind) -> impl Iterator<Item = &EvalResult> {
        self.rows.iter().filter(move |r| r.kind == kind)
    }
}

/// Evaluates every `(kind, n)` pair. Rows are ordered by estimator, then by
/// the order of `n_grid`. Cells are computed in parallel.
pub fn evaluate_grid(
    kinds: &[EstimatorKind],
    n_grid: &[u64],
    p: Probability,
    p_star: Probability,
    alpha: f64,
    opts: &EvalOptions,
) -> Result<GridReport> {
    let cells: Vec<(EstimatorKind, u64)> =
        kinds.iter().flat_map(|&k| n_grid.iter().map(move |&n| (k, n))).collect();
    let rows = cells
        .par_iter()
        .map(|&(kind, n)| {
            let d = DesignPoint::new(kind, n, p.value(), alpha)?;
            evaluate(&d, p_star, opts)
        })
        .collect::<Result<Vec<_>>>()?;
    let first_target = kinds
        .iter()
        .map(|&k| (k, rows.iter().find(|r| r.kind == k && r.is_target()).map(|r| r.n)))
        .collect();
    Ok(GridReport { rows, first_target })
}

/// `start, start + step, ...` up to and including `end`. Empty when
/// `start > end`.
pub fn n_range(start: u64, end: u64, step: u64) -> Vec<u64> {
    if step == 0 || start > end || start == 0 {
        return Vec::new();
    }
    (start..=end).step_by(step as usize).collect()
}

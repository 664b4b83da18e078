//! Drivers that recompute the published tables: sample-size comparisons,
//! margin-of-error schemes, count thresholds and performance grids.

use crate::error::Result;
use crate::estimators::EstimatorKind;
use crate::evaluation::{evaluate_grid, DesignPoint, EvalOptions, GridReport};
use crate::numerics::Probability;
use crate::planning::{eps_r_threshold, sample_size, Margin, PlanRequest, PlanResult};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Anticipated proportions used throughout: `10^-1 .. 10^-5`.
pub const P_LADDER: [f64; 5] = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5];

/// Relative margins for the variable-margin table.
pub const EPS_R_LADDER: [f64; 7] = [0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.75];

/// A fixed margin-of-error scheme. With `p_star = None` the plan uses the
/// true `p` as its anticipated value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Scheme {
    pub id: u8,
    pub epsilon: f64,
    pub p_star: Option<f64>,
}

pub const SCHEMES: [Scheme; 4] = [
    Scheme { id: 1, epsilon: 4e-2, p_star: None },
    Scheme { id: 2, epsilon: 4e-2, p_star: Some(0.5) },
    Scheme { id: 3, epsilon: 4e-4, p_star: None },
    Scheme { id: 4, epsilon: 4e-4, p_star: Some(0.5) },
];

/// Identifier of a reproducible table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableId {
    SampleSizes,
    FixedMargin,
    VariableMargin,
    Thresholds,
    SmallN1,
    LargeN1,
    SmallN5,
    LargeN5,
    FixedMarginAll,
    WideMarginAll,
}

impl TableId {
    pub const ALL: [TableId; 10] = [
        TableId::SampleSizes,
        TableId::FixedMargin,
        TableId::VariableMargin,
        TableId::Thresholds,
        TableId::SmallN1,
        TableId::LargeN1,
        TableId::SmallN5,
        TableId::LargeN5,
        TableId::FixedMarginAll,
        TableId::WideMarginAll,
    ];

    /// Command-line name: 1, 2, 3, 4, 6, 7, 8, 9, B1, B2.
    pub fn code(self) -> &'static str {
        match self {
            TableId::SampleSizes => "1",
            TableId::FixedMargin => "2",
            TableId::VariableMargin => "3",
            TableId::Thresholds => "4",
            TableId::SmallN1 => "6",
            TableId::LargeN1 => "7",
            TableId::SmallN5 => "8",
            TableId::LargeN5 => "9",
            TableId::FixedMarginAll => "B1",
            TableId::WideMarginAll => "B2",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            TableId::SampleSizes => "Sample sizes for a relative margin of 0.4",
            TableId::FixedMargin => "Wald sample size and coverage, fixed margin schemes",
            TableId::VariableMargin => "Wald sample size and coverage, relative margins",
            TableId::Thresholds => "Relative margin thresholds for n p* >= a",
            TableId::SmallN1 => "95% interval performance, p = p* = 0.1, small n",
            TableId::LargeN1 => "95% interval performance, p = p* = 0.1, large n",
            TableId::SmallN5 => "95% interval performance, p = p* = 1e-5, small n",
            TableId::LargeN5 => "95% interval performance, p = p* = 1e-5, large n",
            TableId::FixedMarginAll => "Coverage of all methods, fixed margin schemes",
            TableId::WideMarginAll => "Coverage of all methods, relative margin 0.75",
        }
    }

    /// The `(p, n grid)` of a performance table.
    pub fn performance_grid(self) -> Option<(f64, Vec<u64>)> {
        let steps = |a: u64, b: u64, s: u64| (a..=b).step_by(s as usize).collect::<Vec<_>>();
        match self {
            TableId::SmallN1 => Some((1e-1, steps(10, 140, 10))),
            TableId::LargeN1 => Some((1e-1, steps(150, 350, 10))),
            TableId::SmallN5 => Some((1e-5, steps(750_000, 1_400_000, 50_000))),
            TableId::LargeN5 => Some((1e-5, steps(1_500_000, 2_500_000, 50_000))),
            _ => None,
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for TableId {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        TableId::ALL
            .into_iter()
            .find(|t| t.code().eq_ignore_ascii_case(s))
            .ok_or_else(|| crate::error::domain(format!("unknown table '{s}'")))
    }
}

/// Planned sample sizes for one anticipated proportion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlanRow {
    pub p_star: f64,
    pub epsilon: f64,
    pub plans: Vec<PlanResult>,
}

/// Sample sizes of each estimator at relative margin `eps_r` across
/// [`P_LADDER`].
pub fn sample_size_table(kinds: &[EstimatorKind], eps_r: f64, alpha: f64) -> Result<Vec<PlanRow>> {
    P_LADDER
        .par_iter()
        .map(|&p_star| {
            let req = PlanRequest::new(p_star, Margin::Relative(eps_r), alpha)?;
            let plans = kinds.iter().map(|&k| sample_size(k, &req)).collect::<Result<Vec<_>>>()?;
            Ok(PlanRow { p_star, epsilon: req.epsilon(), plans })
        })
        .collect()
}

/// Coverage of several estimators at one planned Wald sample size.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverageRow {
    pub p: f64,
    pub p_star: f64,
    pub epsilon: f64,
    pub n: u64,
    pub coverage: Vec<(EstimatorKind, Probability)>,
}

impl CoverageRow {
    pub fn cpr(&self, kind: EstimatorKind) -> Option<Probability> {
        self.coverage.iter().find(|(k, _)| *k == kind).map(|(_, c)| *c)
    }
}

fn coverage_row(
    kinds: &[EstimatorKind],
    p: f64,
    p_star: f64,
    margin: Margin,
    alpha: f64,
    opts: &EvalOptions,
) -> Result<CoverageRow> {
    let req = PlanRequest::new(p_star, margin, alpha)?;
    let n = sample_size(EstimatorKind::Wald, &req)?.n;
    let coverage = kinds
        .par_iter()
        .map(|&k| {
            let d = DesignPoint::new(k, n, p, alpha)?;
            Ok((k, crate::evaluation::coverage_probability_with(&d, opts)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoverageRow { p, p_star, epsilon: req.epsilon(), n, coverage })
}

/// The four fixed schemes across the `p` ladder, scheme-major. The sample
/// size is the Wald plan; coverage is evaluated at the true `p`.
pub fn fixed_margin_table(
    kinds: &[EstimatorKind],
    alpha: f64,
    opts: &EvalOptions,
) -> Result<Vec<(Scheme, CoverageRow)>> {
    let cells: Vec<(Scheme, f64)> =
        SCHEMES.iter().flat_map(|&s| P_LADDER.iter().map(move |&p| (s, p))).collect();
    cells
        .par_iter()
        .map(|&(s, p)| {
            let p_star = s.p_star.unwrap_or(p);
            Ok((s, coverage_row(kinds, p, p_star, Margin::Absolute(s.epsilon), alpha, opts)?))
        })
        .collect()
}

/// Wald plans at each relative margin with coverage at `p = p*`,
/// `p*`-major.
pub fn variable_margin_table(
    kinds: &[EstimatorKind],
    eps_rs: &[f64],
    alpha: f64,
    opts: &EvalOptions,
) -> Result<Vec<(f64, CoverageRow)>> {
    let cells: Vec<(f64, f64)> =
        P_LADDER.iter().flat_map(|&p| eps_rs.iter().map(move |&r| (p, r))).collect();
    cells
        .par_iter()
        .map(|&(p, r)| Ok((r, coverage_row(kinds, p, p, Margin::Relative(r), alpha, opts)?)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThresholdRow {
    pub p_star: f64,
    pub a: f64,
    pub alpha: f64,
    pub threshold: f64,
}

/// Thresholds over a `p* × a × alpha` grid, in that nesting order.
pub fn threshold_table(p_stars: &[f64], counts: &[f64], alphas: &[f64]) -> Result<Vec<ThresholdRow>> {
    let mut rows = Vec::with_capacity(p_stars.len() * counts.len() * alphas.len());
    for &p_star in p_stars {
        for &a in counts {
            for &alpha in alphas {
                let threshold = eps_r_threshold(Probability::new(p_star)?, alpha, a)?;
                rows.push(ThresholdRow { p_star, a, alpha, threshold });
            }
        }
    }
    Ok(rows)
}

/// One of the `p = p*` performance tables.
pub fn performance_table(id: TableId, alpha: f64, opts: &EvalOptions) -> Result<Option<GridReport>> {
    let Some((p, grid)) = id.performance_grid() else {
        return Ok(None);
    };
    let p = Probability::new(p)?;
    evaluate_grid(&EstimatorKind::ALL, &grid, p, p, alpha, opts).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_codes_round_trip() {
        for t in TableId::ALL {
            assert_eq!(t.code().parse::<TableId>().unwrap(), t);
        }
        assert_eq!("b1".parse::<TableId>().unwrap(), TableId::FixedMarginAll);
        assert!("5".parse::<TableId>().is_err());
    }

    #[test]
    fn grids() {
        assert_eq!(TableId::SmallN1.performance_grid().unwrap().1.len(), 14);
        assert_eq!(TableId::LargeN1.performance_grid().unwrap().1.len(), 21);
        assert_eq!(TableId::SmallN5.performance_grid().unwrap().1.len(), 14);
        assert_eq!(TableId::LargeN5.performance_grid().unwrap().1.len(), 21);
        assert!(TableId::Thresholds.performance_grid().is_none());
    }

    #[test]
    fn threshold_nesting() {
        let rows = threshold_table(&[0.1], &[5.0, 10.0], &[0.1, 0.05]).unwrap();
        let keys: Vec<_> = rows.iter().map(|r| (r.a, r.alpha)).collect();
        assert_eq!(keys, vec![(5.0, 0.1), (5.0, 0.05), (10.0, 0.1), (10.0, 0.05)]);
    }
}

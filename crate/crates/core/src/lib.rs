//! Binomial proportion confidence intervals for rare events.
//!
//! The crate computes the Wald, Clopper-Pearson, Wilson and Agresti-Coull
//! intervals, evaluates their exact coverage probability and expected
//! (relative) margin of error by enumeration over the binomial support,
//! solves sample-size planning problems for each method, and classifies
//! performance against coverage and relative-margin tolerance bands.

pub mod case_study;
pub mod cli;
pub mod error;
pub mod estimators;
pub mod evaluation;
pub mod numerics;
pub mod planning;
pub mod present;
pub mod reproduce;

pub use error::{Error, Result};
pub use estimators::{EstimatorKind, Interval, IntervalEstimator, Observation, PropertyFlags};
pub use evaluation::{DesignPoint, EvalOptions, EvalResult, ToleranceBand};
pub use numerics::Probability;
pub use planning::{Margin, PlanMethod, PlanRequest, PlanResult, PlanWarning};

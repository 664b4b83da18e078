use super::report::{Cell, Report};
use super::{CaseStudyArgs, EvaluateArgs, IntervalArgs, PlanArgs, SweepArgs, ThresholdsArgs};
use crate::case_study::{analyze, replan, CaseStudy};
use crate::error::{domain, Result};
use crate::estimators::{EstimatorKind, IntervalEstimator, Observation};
use crate::evaluation::{evaluate_grid, n_range, EvalOptions, EvalResult, GridReport};
use crate::numerics::Probability;
use crate::planning::{sample_size, Margin, PlanRequest};
use crate::present::{dec2, number, percent1, sig2};
use crate::reproduce::{self, TableId, EPS_R_LADDER, P_LADDER, SCHEMES};
use serde_json::Value;

// Four significant digits for text output.
fn approx(v: f64) -> Cell {
    let text = if v != 0.0 && v.abs() < 1e-3 { format!("{v:.3e}") } else { format!("{v:.4}") };
    Cell::shown(v, text)
}

fn finite(v: f64, f: impl Fn(f64) -> Cell) -> Cell {
    if v.is_finite() {
        f(v)
    } else {
        Cell::Empty
    }
}

fn kinds_meta(kinds: &[EstimatorKind]) -> Value {
    kinds.iter().map(|k| Value::String(k.name().into())).collect()
}

pub(super) fn interval(a: &IntervalArgs, alpha: f64) -> Result<Report> {
    let obs = match (a.x, a.p_hat) {
        (Some(x), _) => Observation::new(x, a.n, alpha)?,
        (None, Some(p)) => Observation::from_proportion(p, a.n, alpha)?,
        (None, None) => return Err(domain("give --x or --p-hat")),
    };
    let mut r = Report::new(
        format!("{:.0}% intervals for x = {} of n = {}", 100.0 * (1.0 - alpha), number(obs.successes()), a.n),
        &[
            "estimator", "x", "n", "alpha", "p_hat", "raw_lower", "raw_upper", "lower", "upper",
            "realized_eps_r", "degenerate",
        ],
    )
    .meta("command", "interval")
    .meta("estimators", kinds_meta(&a.estimator.0))
    .meta("x", obs.successes())
    .meta("n", a.n)
    .meta("alpha", alpha);
    for &kind in &a.estimator.0 {
        let ci = IntervalEstimator::new(kind, alpha)?.interval(&obs)?;
        let realized = 0.5 * ci.raw_width() / obs.p_hat();
        if ci.is_degenerate() {
            r.notes.push(format!(
                "{kind} interval is degenerate at [{}, {}]",
                ci.lower.value(),
                ci.upper.value()
            ));
        }
        r.push(vec![
            Cell::text(kind.name()),
            Cell::Num(obs.successes()),
            Cell::Int(a.n),
            Cell::Num(alpha),
            approx(obs.p_hat()),
            approx(ci.raw_lower),
            approx(ci.raw_upper),
            approx(ci.lower.value()),
            approx(ci.upper.value()),
            finite(realized, approx),
            Cell::text(if ci.is_degenerate() { "true" } else { "false" }),
        ]);
    }
    Ok(r)
}

fn evaluate_row(e: &EvalResult) -> Result<Vec<Cell>> {
    // interval at the expected count n p
    let ci = IntervalEstimator::new(e.kind, e.alpha)?.bounds(e.n as f64 * e.p.value(), e.n)?;
    Ok(vec![
        Cell::text(e.kind.name()),
        Cell::Int(e.n),
        Cell::Num(e.p.value()),
        Cell::Num(e.p_star.value()),
        Cell::Num(e.alpha),
        approx(ci.lower.value()),
        approx(ci.upper.value()),
        Cell::banded(e.cpr.value(), percent1(e.cpr.value()), e.coverage_band),
        Cell::shown(e.ew, format!("{:.4e}", e.ew)),
        Cell::shown(e.emoe, format!("{:.4e}", e.emoe)),
        Cell::banded(e.eps_r, dec2(e.eps_r), e.moe_band),
        Cell::text(e.coverage_band.name()),
        Cell::text(e.moe_band.name()),
    ])
}

const REPORT_ROW: [&str; 13] = [
    "estimator", "n", "p", "p_star", "alpha", "lower", "upper", "cpr", "ew", "emoe", "eps_r",
    "coverage_band", "moe_band",
];

fn probability(v: f64, what: &str) -> Result<Probability> {
    let p = Probability::new(v).map_err(|_| domain(format!("{what} = {v} is outside (0, 1)")))?;
    if !p.is_interior() {
        return Err(domain(format!("{what} = {v} is outside (0, 1)")));
    }
    Ok(p)
}

fn first_target_note(grid: &GridReport) -> String {
    let parts: Vec<String> = grid
        .first_target
        .iter()
        .map(|(k, n)| format!("{} {}", k.label(), n.map_or("none".to_string(), |n| n.to_string())))
        .collect();
    format!("first n with both bands on target: {}", parts.join(", "))
}

pub(super) fn evaluate(a: &EvaluateArgs, alpha: f64, opts: &EvalOptions) -> Result<Report> {
    let p = probability(a.p, "p")?;
    let p_star = probability(a.p_star.unwrap_or(a.p), "p*")?;
    let grid = match (a.n, a.n_start, a.n_end) {
        (Some(n), None, None) => vec![n],
        (None, Some(s), Some(e)) => n_range(s, e, a.n_step),
        _ => return Err(domain("give either --n or --n-start with --n-end")),
    };
    if grid.is_empty() || grid.contains(&0) {
        return Err(domain("the sample size grid is empty"));
    }
    let report = evaluate_grid(&a.estimator.0, &grid, p, p_star, alpha, opts)?;
    let mut r = Report::new(
        format!(
            "{:.0}% interval performance at p = {}, p* = {}",
            100.0 * (1.0 - alpha),
            number(a.p),
            number(p_star.value())
        ),
        &REPORT_ROW,
    )
    .meta("command", "evaluate")
    .meta("estimators", kinds_meta(&a.estimator.0))
    .meta("p", p.value())
    .meta("p_star", p_star.value())
    .meta("alpha", alpha)
    .meta("tail_tol", opts.tail_tol)
    .meta("n", grid.iter().map(|&n| Value::from(n)).collect::<Value>());
    for e in &report.rows {
        r.push(evaluate_row(e)?);
    }
    if grid.len() > 1 {
        r.notes.push(first_target_note(&report));
    }
    Ok(r)
}

pub(super) fn plan(a: &PlanArgs, alpha: f64) -> Result<Report> {
    let margin = match (a.epsilon, a.eps_r) {
        (Some(e), None) => Margin::Absolute(e),
        (None, Some(r)) => Margin::Relative(r),
        _ => return Err(domain("give exactly one of --epsilon and --eps-r")),
    };
    let req = PlanRequest::new(a.p_star, margin, alpha)?;
    let mut r = Report::new(
        format!("Sample sizes for p* = {}, epsilon = {}", number(a.p_star), approx_text(req.epsilon())),
        &["estimator", "p_star", "epsilon", "eps_r", "n", "n_2sig", "method", "cross_check_n", "discrepancy"],
    )
    .meta("command", "plan")
    .meta("estimators", kinds_meta(&a.estimator.0))
    .meta("p_star", a.p_star)
    .meta("epsilon", req.epsilon())
    .meta("alpha", alpha);
    for w in req.warnings() {
        r.notes.push(format!("{w} (eps_r = {})", approx_text(req.eps_r_tilde())));
    }
    for &kind in &a.estimator.0 {
        let p = sample_size(kind, &req)?;
        if let Some(d) = &p.discrepancy {
            r.notes.push(format!("{kind}: {d}"));
        }
        r.push(vec![
            Cell::text(kind.name()),
            Cell::Num(a.p_star),
            approx(req.epsilon()),
            approx(req.eps_r_tilde()),
            Cell::Int(p.n),
            Cell::text(sig2(p.n as f64)),
            Cell::text(p.method.to_string()),
            p.cross_check_n.map_or(Cell::Empty, Cell::Int),
            p.discrepancy.clone().map_or(Cell::Empty, Cell::Text),
        ]);
    }
    Ok(r)
}

pub(super) fn sweep(a: &SweepArgs, alpha: f64, opts: &EvalOptions) -> Result<Report> {
    let p = probability(a.p, "p")?;
    let p_star = probability(a.p_star.unwrap_or(a.p), "p*")?;
    let grid = n_range(a.n_start, a.n_end, a.n_step);
    let mut r = Report::new(
        format!("Sweep at p = {}, n = {}..{} step {}", number(a.p), a.n_start, a.n_end, a.n_step),
        &["row_type", "estimator", "n", "cpr", "eps_r", "coverage_band", "moe_band"],
    )
    .meta("command", "sweep")
    .meta("estimators", kinds_meta(&a.estimator.0))
    .meta("p", p.value())
    .meta("p_star", p_star.value())
    .meta("alpha", alpha);
    if grid.is_empty() {
        return Ok(r);
    }
    let report = evaluate_grid(&a.estimator.0, &grid, p, p_star, alpha, opts)?;
    let row = |kind: &str, e: &EvalResult| {
        vec![
            Cell::text(kind),
            Cell::text(e.kind.name()),
            Cell::Int(e.n),
            Cell::banded(e.cpr.value(), percent1(e.cpr.value()), e.coverage_band),
            Cell::banded(e.eps_r, dec2(e.eps_r), e.moe_band),
            Cell::text(e.coverage_band.name()),
            Cell::text(e.moe_band.name()),
        ]
    };
    for e in &report.rows {
        r.push(row("point", e));
    }
    for &kind in &a.estimator.0 {
        for (label, n) in [("first_target", report.first_target(kind)), ("target_from", report.target_from(kind))] {
            match n.and_then(|n| report.rows_for(kind).find(|e| e.n == n)) {
                Some(e) => r.push(row(label, e)),
                None => r.push(vec![
                    Cell::text(label),
                    Cell::text(kind.name()),
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                    Cell::Empty,
                ]),
            }
        }
    }
    Ok(r)
}

fn exponent_label(p: f64) -> String {
    format!("1e{}", p.log10().round() as i32)
}

pub(super) fn tables(id: TableId, alpha: f64, opts: &EvalOptions) -> Result<Report> {
    let all = EstimatorKind::ALL;
    let base = |cols: &[&str]| {
        Report::new(format!("Table {}: {}", id.code(), id.title()), cols)
            .meta("command", "tables")
            .meta("table", id.code())
            .meta("alpha", alpha)
    };
    let pct = |c: Option<Probability>| c.map_or(Cell::Empty, |c| Cell::text(percent1(c.value())));
    let r = match id {
        TableId::SampleSizes => {
            let mut r = base(&["p_star", "epsilon", "W", "CP", "WS", "AC"]);
            for row in reproduce::sample_size_table(&all, 0.4, alpha)? {
                let mut cells = vec![Cell::text(exponent_label(row.p_star)), Cell::text(sig2(row.epsilon))];
                cells.extend(row.plans.iter().map(|p| Cell::text(sig2(p.n as f64))));
                r.push(cells);
            }
            r
        }
        TableId::FixedMargin => {
            let mut r = base(&[
                "p", "s1_n", "s1_cpr", "s2_n", "s2_cpr", "s3_n", "s3_cpr", "s4_n", "s4_cpr",
            ]);
            let rows = reproduce::fixed_margin_table(&[EstimatorKind::Wald], alpha, opts)?;
            for (i, &p) in P_LADDER.iter().enumerate() {
                let mut cells = vec![Cell::text(exponent_label(p))];
                for s in 0..SCHEMES.len() {
                    let (_, row) = &rows[s * P_LADDER.len() + i];
                    cells.push(Cell::text(sig2(row.n as f64)));
                    cells.push(pct(row.cpr(EstimatorKind::Wald)));
                }
                r.push(cells);
            }
            r
        }
        TableId::VariableMargin => {
            let headers: Vec<String> = EPS_R_LADDER
                .iter()
                .flat_map(|e| [format!("n_{e}"), format!("cpr_{e}")])
                .collect();
            let mut cols = vec!["p_star"];
            cols.extend(headers.iter().map(String::as_str));
            let mut r = base(&cols);
            let rows = reproduce::variable_margin_table(&[EstimatorKind::Wald], &EPS_R_LADDER, alpha, opts)?;
            for chunk in rows.chunks(EPS_R_LADDER.len()) {
                let mut cells = vec![Cell::text(exponent_label(chunk[0].1.p))];
                for (_, row) in chunk {
                    cells.push(Cell::text(sig2(row.n as f64)));
                    cells.push(pct(row.cpr(EstimatorKind::Wald)));
                }
                r.push(cells);
            }
            r
        }
        TableId::Thresholds => {
            let alphas = [0.1, 0.05, 0.01];
            let counts = [5.0, 10.0];
            let mut r = base(&[
                "p_star", "a5_alpha0.1", "a5_alpha0.05", "a5_alpha0.01", "a10_alpha0.1", "a10_alpha0.05",
                "a10_alpha0.01",
            ]);
            let rows = reproduce::threshold_table(&P_LADDER, &counts, &alphas)?;
            for chunk in rows.chunks(alphas.len() * counts.len()) {
                let mut cells = vec![Cell::text(exponent_label(chunk[0].p_star))];
                cells.extend(chunk.iter().map(|t| Cell::text(dec2(t.threshold))));
                r.push(cells);
            }
            r
        }
        TableId::SmallN1 | TableId::LargeN1 | TableId::SmallN5 | TableId::LargeN5 => {
            let mut r = base(&[
                "n", "W_cpr", "W_eps_r", "CP_cpr", "CP_eps_r", "WS_cpr", "WS_eps_r", "AC_cpr", "AC_eps_r",
            ]);
            let grid = reproduce::performance_table(id, alpha, opts)?.expect("performance table");
            let (_, ns) = id.performance_grid().expect("performance table");
            for n in ns {
                let mut cells = vec![Cell::Int(n)];
                for kind in all {
                    let e = grid.rows_for(kind).find(|e| e.n == n).expect("grid row");
                    cells.push(Cell::Label { text: percent1(e.cpr.value()), band: e.coverage_band });
                    cells.push(Cell::Label { text: dec2(e.eps_r), band: e.moe_band });
                }
                r.push(cells);
            }
            r
        }
        TableId::FixedMarginAll => {
            let mut r = base(&["scheme", "p", "n", "W", "CP", "WS", "AC"]);
            for (s, row) in reproduce::fixed_margin_table(&all, alpha, opts)? {
                let mut cells = vec![Cell::Int(s.id as u64), Cell::text(exponent_label(row.p)), Cell::Int(row.n)];
                cells.extend(all.iter().map(|&k| pct(row.cpr(k))));
                r.push(cells);
            }
            r
        }
        TableId::WideMarginAll => {
            let mut r = base(&["p_star", "n", "W", "CP", "WS", "AC"]);
            for (_, row) in reproduce::variable_margin_table(&all, &[0.75], alpha, opts)? {
                let mut cells = vec![Cell::text(exponent_label(row.p)), Cell::Int(row.n)];
                cells.extend(all.iter().map(|&k| pct(row.cpr(k))));
                r.push(cells);
            }
            r
        }
    };
    Ok(r)
}

pub(super) fn case_study(a: &CaseStudyArgs, opts: &EvalOptions) -> Result<Report> {
    let study = CaseStudy::get(a.name);
    if a.replan {
        let mut r = Report::new(
            format!("Wald plans around the {} estimate", a.name),
            &["n", "epsilon", "eps_r", "lower", "upper"],
        )
        .meta("command", "case-study")
        .meta("name", a.name.name())
        .meta("alpha", study.alpha);
        for row in replan(&study, &a.eps_r)? {
            r.push(vec![
                Cell::Int(row.n),
                Cell::shown(row.epsilon, format!("{:.3}", row.epsilon)),
                Cell::shown(row.eps_r, dec2(row.eps_r)),
                Cell::shown(row.interval.lower.value(), format!("{:.3}", row.interval.lower.value())),
                Cell::shown(row.interval.upper.value(), format!("{:.3}", row.interval.upper.value())),
            ]);
        }
        return Ok(r);
    }
    let rep = analyze(&study, opts)?;
    let mut r = Report::new(
        format!(
            "Case study {}: p_hat = {}, n = {}, coverage evaluated at p = {}",
            a.name,
            approx_text(rep.p_hat),
            study.n,
            approx_text(study.eval_p)
        ),
        &[
            "estimator", "n", "p_hat", "lower", "upper", "realized_eps_r", "verdict", "eval_p", "cpr",
            "eps_r", "coverage_band", "moe_band",
        ],
    )
    .meta("command", "case-study")
    .meta("name", a.name.name())
    .meta("n", study.n)
    .meta("alpha", study.alpha)
    .meta("eval_p", study.eval_p);
    for row in &rep.rows {
        r.push(vec![
            Cell::text(row.kind.name()),
            Cell::Int(study.n),
            approx(rep.p_hat),
            approx(row.interval.lower.value()),
            approx(row.interval.upper.value()),
            Cell::shown(row.realized_eps_r, format!("{:.3}", row.realized_eps_r)),
            Cell::text(row.verdict.to_string()),
            approx(study.eval_p),
            Cell::banded(row.cpr.value(), percent1(row.cpr.value()), row.coverage_band),
            Cell::banded(row.eps_r, format!("{:.3}", row.eps_r), row.moe_band),
            Cell::text(row.coverage_band.name()),
            Cell::text(row.moe_band.name()),
        ]);
    }
    Ok(r)
}

fn approx_text(v: f64) -> String {
    match approx(v) {
        Cell::Shown { text, .. } => text,
        _ => unreachable!(),
    }
}

pub(super) fn thresholds(a: &ThresholdsArgs) -> Result<Report> {
    let mut r = Report::new("Relative margin thresholds sqrt(z^2 (1 - p*) / a)", &["p_star", "a", "alpha", "threshold"])
        .meta("command", "thresholds");
    for t in reproduce::threshold_table(&a.p_star, &a.a, &a.alphas)? {
        r.push(vec![
            Cell::Num(t.p_star),
            Cell::Num(t.a),
            Cell::Num(t.alpha),
            Cell::shown(t.threshold, dec2(t.threshold)),
        ]);
    }
    Ok(r)
}

//! Coverage oscillation over a sample-size grid, with the first n where
//! both coverage and relative margin are on target.
use binom_rare::evaluation::{evaluate_grid, n_range};
use binom_rare::{EstimatorKind, Probability};

fn main() -> binom_rare::Result<()> {
    let p = Probability::new(0.1)?;
    let grid = n_range(100, 800, 20);
    let report = evaluate_grid(&EstimatorKind::ALL, &grid, p, p, 0.01, &Default::default())?;
    for kind in EstimatorKind::ALL {
        let cprs: Vec<String> = report.rows_for(kind).take(10).map(|e| format!("{:.1}", 100.0 * e.cpr.value())).collect();
        println!("{:>16}  first on target at {:?}, stays on target from {:?}", kind.name(), report.first_target(kind), report.target_from(kind));
        println!("{:>16}  CPr over n=100..280: {}", "", cprs.join(" "));
    }
    Ok(())
}

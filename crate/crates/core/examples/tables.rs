//! Regenerates the planning and coverage tables.
use binom_rare::reproduce::{fixed_margin_table, sample_size_table, threshold_table, variable_margin_table, P_LADDER};
use binom_rare::EstimatorKind;

fn main() -> binom_rare::Result<()> {
    println!("sample sizes at eps_r = 0.4");
    for row in sample_size_table(&EstimatorKind::ALL, 0.4, 0.05)? {
        let ns: Vec<String> = row.plans.iter().map(|p| binom_rare::present::sig2(p.n as f64)).collect();
        println!("  p* = {:<7} {}", row.p_star, ns.join("  "));
    }
    println!("Wald plans under fixed margins, coverage at the true p");
    for (scheme, row) in fixed_margin_table(&[EstimatorKind::Wald], 0.05, &Default::default())? {
        let c = row.cpr(EstimatorKind::Wald).unwrap().value();
        println!("  scheme {} p = {:<7} n = {:<8} CPr {:.1}%", scheme.id, row.p, row.n, 100.0 * c);
    }
    println!("Wald plans at eps_r = 0.75");
    for (_, row) in variable_margin_table(&EstimatorKind::ALL, &[0.75], 0.05, &Default::default())? {
        let c: Vec<String> = row.coverage.iter().map(|(k, c)| format!("{} {:.1}", k.label(), 100.0 * c.value())).collect();
        println!("  p = {:<7} n = {:<8} {}", row.p, row.n, c.join("  "));
    }
    println!("count thresholds");
    for r in threshold_table(&P_LADDER[..2], &[5.0, 10.0], &[0.05])? {
        println!("  p* = {:<5} a = {:<3} {:.2}", r.p_star, r.a, r.threshold);
    }
    Ok(())
}

//! The three worked data sets: observed intervals, their coverage at an
//! assumed rate, and Wald re-plans for the ADHD prevalence.
use binom_rare::case_study::{analyze, replan, CaseId, CaseStudy};

fn main() -> binom_rare::Result<()> {
    for id in CaseId::ALL {
        let study = CaseStudy::get(id);
        let report = analyze(&study, &Default::default())?;
        println!("{} (n = {}, p_hat = {:.3e})", id, study.n, report.p_hat);
        for r in &report.rows {
            println!(
                "  {:>16} [{:.4e}, {:.4e}] realized eps_r {:.3} ({}) CPr {:.1}% expected eps_r {:.3}",
                r.kind.name(),
                r.interval.lower.value(),
                r.interval.upper.value(),
                r.realized_eps_r,
                r.verdict,
                100.0 * r.cpr.value(),
                r.eps_r
            );
        }
    }
    for row in replan(&CaseStudy::get(CaseId::Adhd), &[0.1, 0.15, 0.2, 0.25])? {
        println!("ADHD eps_r {:.3}: n = {}", row.eps_r, row.n);
    }
    Ok(())
}

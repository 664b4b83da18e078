//! Exact coverage, expected width and tolerance bands at one design point.
use binom_rare::evaluation::evaluate;
use binom_rare::{DesignPoint, EstimatorKind, EvalOptions, Probability};

fn main() -> binom_rare::Result<()> {
    let (n, p) = (2_500_000, 1e-5);
    let opts = EvalOptions::default();
    for kind in EstimatorKind::ALL {
        let r = evaluate(&DesignPoint::new(kind, n, p, 0.05)?, Probability::new(p)?, &opts)?;
        println!(
            "{:>16}  CPr {:.2}%  EW {:.3e}  eps_r {:.3}  bands {}/{}",
            kind.name(),
            100.0 * r.cpr.value(),
            r.ew,
            r.eps_r,
            r.coverage_band.name(),
            r.moe_band.name()
        );
    }
    Ok(())
}

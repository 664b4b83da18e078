//! Four 95% intervals for 8 events in 21 720 trials.
use binom_rare::{estimators::interval, EstimatorKind, Observation};

fn main() -> binom_rare::Result<()> {
    let obs = Observation::new(8, 21_720, 0.05)?;
    println!("p_hat = {:.4e}", obs.p_hat());
    for kind in EstimatorKind::ALL {
        let ci = interval(kind, &obs)?;
        let eps_r = 0.5 * ci.raw_width() / obs.p_hat();
        println!("{:>16}  [{:.4e}, {:.4e}]  eps_r {:.3}", kind.name(), ci.lower.value(), ci.upper.value(), eps_r);
    }
    // Wald collapses when nothing is observed; the others do not
    let zero = Observation::new(0, 50, 0.05)?;
    for kind in EstimatorKind::ALL {
        let ci = interval(kind, &zero)?;
        println!("x=0 {:>16}  [{:.4}, {:.4}] degenerate={}", kind.name(), ci.lower.value(), ci.upper.value(), ci.is_degenerate());
    }
    Ok(())
}

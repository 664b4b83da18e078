//! Sample sizes for a 40% relative margin across rare proportions.
use binom_rare::planning::{sample_size, Margin, PlanRequest};
use binom_rare::EstimatorKind;

fn main() -> binom_rare::Result<()> {
    for p_star in [1e-1, 1e-2, 1e-3, 1e-4, 1e-5] {
        let req = PlanRequest::new(p_star, Margin::Relative(0.4), 0.05)?;
        print!("p* = {p_star:<7} eps = {:.1e}", req.epsilon());
        for kind in EstimatorKind::ALL {
            let plan = sample_size(kind, &req)?;
            print!("  {} {:>9} ({})", kind.label(), plan.n, plan.method);
        }
        println!();
    }
    // an absolute margin, as for a survey
    let req = PlanRequest::new(0.1, Margin::Absolute(0.04), 0.05)?;
    let cp = sample_size(EstimatorKind::ClopperPearson, &req)?;
    println!("CP for p*=0.1, eps=0.04: n = {} (joint search {:?})", cp.n, cp.cross_check_n);
    Ok(())
}

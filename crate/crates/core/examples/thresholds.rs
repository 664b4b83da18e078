//! Largest relative margin that still expects at least `a` events.
use binom_rare::planning::eps_r_threshold;
use binom_rare::Probability;

fn main() -> binom_rare::Result<()> {
    for p in [1e-1, 1e-3, 1e-5] {
        for a in [5.0, 10.0] {
            let t: Vec<String> = [0.1, 0.05, 0.01]
                .iter()
                .map(|&alpha| eps_r_threshold(Probability::new(p).unwrap(), alpha, a).map(|v| format!("{v:.2}")))
                .collect::<binom_rare::Result<_>>()?;
            println!("p* = {p:<6} a = {a:<3} alpha 0.1/0.05/0.01: {}", t.join(" / "));
        }
    }
    Ok(())
}

//! How often h equals h_f on random graphs, for a few sizes.

use hadwiger::bramble::TouchingKind;
use hadwiger::fractional::fractional_hadwiger;
use hadwiger::graph::random_gnp;
use hadwiger::minor::hadwiger_number;
use hadwiger::Rational;

fn main() -> hadwiger::Result<()> {
    let samples = 40;
    for n in [5, 7, 9] {
        let (mut equal, mut sum_h, mut sum_hf) = (0, Rational::zero(), Rational::zero());
        for seed in 0..samples {
            let g = random_gnp(n, 0.5, seed)?;
            let (h, _) = hadwiger_number(&g)?;
            let hf = fractional_hadwiger(&g, TouchingKind::Weak)?.value;
            equal += (Rational::from(h) == hf) as usize;
            sum_h = sum_h + Rational::from(h);
            sum_hf = sum_hf + hf;
        }
        let count = Rational::from(samples as usize);
        println!(
            "n={n}: mean h {:.3}, mean h_f {:.3}, h = h_f in {equal}/{samples}",
            (&sum_h / &count).to_f64(),
            (&sum_hf / &count).to_f64()
        );
    }
    Ok(())
}

//! r-integral Hadwiger numbers two ways: an integer program over brambles and
//! a clique-minor search in the blow-up.

use hadwiger::bramble::TouchingKind;
use hadwiger::fractional::{r_integral_hadwiger_via_blowup, r_integral_hadwiger_via_ilp};
use hadwiger::graph::{blowup_empty, cycle};
use hadwiger::minor::hadwiger_number;
use hadwiger::Rational;

fn main() -> hadwiger::Result<()> {
    let g = cycle(5)?;
    for r in 1..=3u64 {
        let (ilp, cert) = r_integral_hadwiger_via_ilp(&g, r, TouchingKind::Weak)?;
        let (blowup, model) = r_integral_hadwiger_via_blowup(&g, r)?;
        println!(
            "h_{r}(C5) = {ilp} by ILP, {blowup} from a K{} minor of C5[{r}]",
            model.order()
        );
        assert_eq!(ilp, blowup);
        if r == 2 {
            print!("{}", cert.to_text());
        }

        let (strong, _) = r_integral_hadwiger_via_ilp(&g, r, TouchingKind::Strong)?;
        let (h, _) = hadwiger_number(&blowup_empty(&g, r as usize)?)?;
        println!("  h'_{r}(C5) = {strong}; h(C5({r})) = {h} = {r} * {strong}");
        assert_eq!(Rational::from(h), Rational::from(r) * strong);
    }
    Ok(())
}

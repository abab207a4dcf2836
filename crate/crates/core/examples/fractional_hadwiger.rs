//! Fractional Hadwiger numbers of a few graphs, weak and strong, with the
//! weighted bramble and LP dual that certify each value.

use hadwiger::bramble::TouchingKind;
use hadwiger::fractional::{evaluate_certificate, fractional_hadwiger};
use hadwiger::graph::{complete, cycle, graph6_decode, grid};

fn main() -> hadwiger::Result<()> {
    let graphs = [
        ("K5", complete(5)?),
        ("C7", cycle(7)?),
        ("grid(3)", grid(3)?),
        ("Cr", graph6_decode("Cr")?),
    ];
    for (name, g) in &graphs {
        let weak = fractional_hadwiger(g, TouchingKind::Weak)?;
        let strong = fractional_hadwiger(g, TouchingKind::Strong)?;
        println!(
            "{name}: h_f = {} ({}), h'_f = {}",
            weak.value, weak.status, strong.value
        );
        assert_eq!(evaluate_certificate(g, &weak.certificate)?, weak.value);
    }

    let hf = fractional_hadwiger(&graphs[1].1, TouchingKind::Weak)?;
    println!("\ncertificate for C7:\n{}", hf.certificate.to_text());
    if let Some(dual) = &hf.dual {
        let dual: Vec<String> = dual.iter().map(ToString::to_string).collect();
        println!("dual vertex weights: {}", dual.join(" "));
    }
    Ok(())
}

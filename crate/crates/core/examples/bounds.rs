//! Upper bounds on h_f checked exactly, and the greedy extraction of a clique
//! minor from a fractional certificate.

use hadwiger::bounds::{
    bound_report, extraction_lower_bound, greedy_disjoint_extract, hf_upper_from_bounded,
};
use hadwiger::bramble::TouchingKind;
use hadwiger::fractional::fractional_hadwiger;
use hadwiger::graph::random_gnp;
use hadwiger::minor::Breadth;

fn main() -> hadwiger::Result<()> {
    let g = random_gnp(10, 0.5, 7)?;
    let report = bound_report(&g)?;
    println!(
        "{} n={} m={} h={} h_f={} h'_f={}",
        report.graph, report.n, report.m, report.h, report.hf, report.hpf
    );
    for e in &report.entries {
        println!(
            "  {:<28} lhs={} rhs={}{} -> {:?}",
            e.name,
            e.lhs,
            if e.sqrt { "sqrt " } else { "" },
            e.rhs,
            e.verdict
        );
    }

    let hf = fractional_hadwiger(&g, TouchingKind::Weak)?;
    let model = greedy_disjoint_extract(&g, &hf.certificate)?;
    println!(
        "greedy extraction: K{} (guaranteed at least {})",
        model.order(),
        extraction_lower_bound(g.order(), &hf.value)
    );

    for d in 1..=4 {
        println!(
            "breadth {d}: h_f <= {}",
            hf_upper_from_bounded(&g, Breadth::new(d)?)?
        );
    }
    Ok(())
}

//! Search a small witness graph, then use its blow-up as a huge graph with a
//! certified bound on its Hadwiger number, queried without building it.

use hadwiger::construct::{emit_construction, search_witness, Mode, SearchMode, WitnessSpec};
use hadwiger::graph::graph6_encode;

fn main() -> hadwiger::Result<()> {
    let spec = WitnessSpec {
        n0: 5,
        mode: Mode::Thomason,
        s: None,
        d: None,
        search: SearchMode::Exhaustive,
    };
    let w = search_witness(&spec)?;
    println!(
        "witness {} after {} classes: epsilon {} (d={}, s={}; complement d={})",
        graph6_encode(&w.graph),
        w.examined,
        w.epsilon,
        w.evidence.d,
        w.evidence.s,
        w.complement.as_ref().map_or(0, |c| c.d)
    );

    let big = emit_construction(&w, 1_000_000)?;
    println!(
        "blow-up on {} vertices: h <= {}, complement h <= {}",
        big.order(),
        big.hadwiger_bound(),
        big.complement_hadwiger_bound()
            .expect("thomason mode bounds both sides")
    );
    for (u, v) in [(0, 1), (0, 999_999), (17, 4_000_017), (123_456, 2_654_321)] {
        println!("  {u} ~ {v}: {}", big.adjacent(u, v)?);
    }

    let small = emit_construction(&w, 2)?;
    println!("factor 2 has {} edges", small.edges().count());
    Ok(())
}

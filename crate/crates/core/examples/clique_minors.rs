//! Largest clique minor of the Petersen graph, with its branch sets, plus a
//! breadth-limited search.

use hadwiger::minor::{
    hadwiger_number, has_clique_minor, max_clique_minor_bounded, verify_minor_model, Breadth,
};
use hadwiger::Graph;

fn main() -> hadwiger::Result<()> {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let edges: Vec<_> = outer.chain(spokes).chain(inner).collect();
    let petersen = Graph::from_edges(10, &edges)?;

    let (h, model) = hadwiger_number(&petersen)?;
    println!("h(Petersen) = {h}");
    print!("{}", model.to_text());
    verify_minor_model(&petersen, &model).expect("model verifies");
    println!(
        "K6 minor: {:?}",
        has_clique_minor(&petersen, 6, None)?.map(|m| m.order())
    );

    for d in 1..=3 {
        let (s, m) = max_clique_minor_bounded(&petersen, Breadth::new(d)?)?;
        println!("breadth <= {d}: K{s} (largest branch set {})", m.breadth());
    }
    Ok(())
}

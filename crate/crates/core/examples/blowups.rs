//! Lexicographic products and blow-ups, and the adjacency oracle that answers
//! the same questions without materializing anything.

use hadwiger::graph::{
    blowup_adjacency_oracle, blowup_complete, blowup_empty, complete, graph6_encode,
    lexicographic_product, path, BlowupVertex,
};

fn main() -> hadwiger::Result<()> {
    let g = path(3)?;
    let product = lexicographic_product(&g, &complete(2)?)?;
    println!(
        "P3 . K2: n={} m={} {}",
        product.order(),
        product.size(),
        graph6_encode(&product)
    );
    println!("P3[2] equals it: {}", product == blowup_complete(&g, 2)?);
    println!("P3(2): m={}", blowup_empty(&g, 2)?.size());

    let t = 1 << 20;
    let a = BlowupVertex::new(0, 5);
    for b in [
        BlowupVertex::new(0, 9),
        BlowupVertex::new(1, t - 1),
        BlowupVertex::new(2, 0),
    ] {
        println!(
            "{a:?} ~ {b:?}: G[t] {}, G(t) {}",
            blowup_adjacency_oracle(&g, t, a, b, true)?,
            blowup_adjacency_oracle(&g, t, a, b, false)?
        );
    }
    Ok(())
}

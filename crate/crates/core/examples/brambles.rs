//! Brambles on small graphs: enumeration, the bramble number with its
//! hitting set, and the cross certificate on grids.

use hadwiger::bramble::{
    bramble_number, grid_cross_certificate, grid_hook_family, maximal_brambles, validate_bramble,
    TouchingKind,
};
use hadwiger::graph::{cycle, grid};

fn main() -> hadwiger::Result<()> {
    let c4 = cycle(4)?;
    for kind in [TouchingKind::Weak, TouchingKind::Strong] {
        println!(
            "C4 has {} maximal {kind} brambles",
            maximal_brambles(&c4, kind, None)?.len()
        );
    }

    let g = grid(3)?;
    let bn = bramble_number(&g)?;
    println!(
        "bramble number of grid(3) = {}, hit by {}",
        bn.value, bn.hitting_set
    );
    println!("witnessing bramble has {} sets", bn.bramble.sets.len());

    let (crosses, weights) = grid_cross_certificate(4)?;
    println!(
        "grid(4) crosses: {:?}",
        validate_bramble(&grid(4)?, &crosses, TouchingKind::Weak)
    );
    for (s, w) in crosses.iter().zip(&weights) {
        println!("  {w}: {s}");
    }
    let hooks = grid_hook_family(3)?;
    match validate_bramble(&g, &hooks, TouchingKind::Weak) {
        Ok(()) => println!("hooks form a bramble"),
        Err(e) => println!("hooks on grid(3) are not a bramble: {e}"),
    }
    Ok(())
}

//! Treewidth with a checked tree decomposition, separation number, grid
//! minors, and a side-by-side table of the width parameters.

use hadwiger::graph::{complete, cycle, grid, path, random_gnp};
use hadwiger::width::{co_movement_table, comparability_report, separation_number, treewidth};

fn main() -> hadwiger::Result<()> {
    let g = grid(3)?;
    let (tw, td) = treewidth(&g)?;
    td.validate(&g).expect("decomposition is valid");
    println!("treewidth(grid(3)) = {tw}");
    print!("{}", td.to_text());

    let sep = separation_number(&g)?;
    println!(
        "separation number = {} (worst subgraph {})",
        sep.value, sep.witness.subgraph
    );

    let graphs = vec![
        grid(2)?,
        g,
        complete(5)?,
        path(5)?,
        cycle(6)?,
        random_gnp(8, 0.4, 1)?,
    ];
    let reports = comparability_report(&graphs)?;
    print!("{}", co_movement_table(&reports));
    Ok(())
}

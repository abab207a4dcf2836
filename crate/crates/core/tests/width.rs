use hadwiger::bramble::bramble_number;
use hadwiger::construct::isomorphism_classes;
use hadwiger::graph::{complete, cycle, grid, path, random_gnp};
use hadwiger::width::{
    comparability_report, max_grid_minor, separation_number, treewidth, TreeDecomposition,
};
use hadwiger::{Graph, VertexSet};
use proptest::prelude::*;

/// Treewidth as the best elimination order, trying every permutation.
fn elimination_oracle(g: &Graph) -> usize {
    fn permute(order: &mut Vec<usize>, k: usize, g: &Graph, best: &mut usize) {
        if k == order.len() {
            let n = g.order();
            let mut adj: Vec<Vec<bool>> = (0..n)
                .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
                .collect();
            let mut gone = vec![false; n];
            let mut width = 0;
            for &v in order.iter() {
                let nbrs: Vec<usize> = (0..n).filter(|&u| !gone[u] && adj[v][u]).collect();
                width = width.max(nbrs.len());
                for &a in &nbrs {
                    for &b in &nbrs {
                        if a != b {
                            adj[a][b] = true;
                        }
                    }
                }
                gone[v] = true;
            }
            *best = (*best).min(width);
            return;
        }
        for i in k..order.len() {
            order.swap(k, i);
            permute(order, k + 1, g, best);
            order.swap(k, i);
        }
    }
    let mut best = usize::MAX;
    permute(&mut (0..g.order()).collect(), 0, g, &mut best);
    best
}

#[test]
fn treewidth_of_grid3_by_elimination_orders() {
    let g = grid(3).unwrap();
    let (tw, td) = treewidth(&g).unwrap();
    assert_eq!(tw, 3);
    assert_eq!(elimination_oracle(&g), 3);
    td.validate(&g).unwrap();
}

#[test]
fn treewidth_matches_oracle_on_small_classes() {
    for n in 1..=6 {
        for g in isomorphism_classes(n).unwrap() {
            let (tw, td) = treewidth(&g).unwrap();
            assert_eq!(tw, elimination_oracle(&g), "{g:?}");
            assert_eq!(td.width(), tw);
            td.validate(&g).unwrap();
        }
    }
}

#[test]
fn bramble_number_is_treewidth_plus_one() {
    for g in [
        grid(3).unwrap(),
        cycle(8).unwrap(),
        complete(6).unwrap(),
        path(7).unwrap(),
    ] {
        let (tw, _) = treewidth(&g).unwrap();
        let bn = bramble_number(&g).unwrap();
        assert_eq!(bn.value, tw + 1);
        assert_eq!(bn.hitting_set.len(), bn.value);
        assert!(bn
            .bramble
            .sets
            .iter()
            .all(|s| s.intersects(&bn.hitting_set)));
    }
}

#[test]
fn decomposition_text_round_trip_and_tampering() {
    let g = grid(3).unwrap();
    let (_, td) = treewidth(&g).unwrap();
    let back = TreeDecomposition::from_text(&td.to_text()).unwrap();
    assert_eq!(back, td);
    let mut broken = td.clone();
    for bag in &mut broken.bags {
        *bag = VertexSet::new(9, bag.members().iter().copied().filter(|&v| v != 4)).unwrap();
    }
    assert!(broken.validate(&g).is_err());
}

#[test]
fn separation_is_monotone_under_induced_subgraphs() {
    for n in 2..=6 {
        for g in isomorphism_classes(n).unwrap() {
            let s = separation_number(&g).unwrap();
            assert!(s.witness.is_valid(&g));
            for v in 0..n {
                let sub = g.without_vertex(v).unwrap();
                assert!(separation_number(&sub).unwrap().value <= s.value);
            }
        }
    }
}

#[test]
fn grid_minor_sizes() {
    assert_eq!(max_grid_minor(&grid(2).unwrap()).unwrap().0, 2);
    assert_eq!(max_grid_minor(&grid(3).unwrap()).unwrap().0, 3);
    assert_eq!(max_grid_minor(&path(5).unwrap()).unwrap().0, 1);
    assert_eq!(max_grid_minor(&complete(5).unwrap()).unwrap().0, 2);
}

#[test]
fn comparability_rows() {
    let reports =
        comparability_report(&[grid(2).unwrap(), grid(3).unwrap(), complete(5).unwrap()]).unwrap();
    assert_eq!(reports.len(), 3);
    assert!(reports
        .iter()
        .all(|r| r.grid_le_treewidth && r.bramble_eq_treewidth_plus_one));
    let p5 = &comparability_report(&[path(5).unwrap()]).unwrap()[0];
    assert_eq!(
        (
            p5.treewidth,
            p5.bramble_number,
            p5.separation_number,
            p5.max_grid_minor
        ),
        (1, 2, 1, 1)
    );
    assert!(comparability_report(&[]).unwrap().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decompositions_are_valid(n in 1usize..=11, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = random_gnp(n, p, seed).unwrap();
        let (tw, td) = treewidth(&g).unwrap();
        prop_assert!(td.validate(&g).is_ok());
        prop_assert_eq!(td.width(), tw);
        let (r, _) = max_grid_minor(&g).unwrap();
        prop_assert!(g.size() == 0 || r <= tw);
    }
}

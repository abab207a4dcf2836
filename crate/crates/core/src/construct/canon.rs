//! Canonical labelling of small graphs by individualization and refinement,
//! and enumeration of isomorphism classes by vertex augmentation.

use std::collections::BTreeSet;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for class enumeration.
pub const CLASS_ENUMERATION_CAP: usize = 8;

/// Canonical code: the upper triangle of the relabelled adjacency matrix,
/// row by row, packed into bits (pair `(i, j)` with `i < j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub n: usize,
    pub bits: u128,
}

fn code_of(adj: &[Mask], perm_pos: &[usize]) -> u128 {
    // perm_pos[v] = new label of v
    let n = adj.len();
    let mut inv = vec![0; n];
    for (v, &p) in perm_pos.iter().enumerate() {
        inv[p] = v;
    }
    let mut code = 0u128;
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[inv[i]] >> inv[j] & 1 == 1 {
                code |= 1 << k;
            }
            k += 1;
        }
    }
    code
}

/// Splits cells by neighbour counts into earlier cells until stable. The
/// result depends only on the graph's structure and the input cell order.
fn refine(adj: &[Mask], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<Mask> = cells
            .iter()
            .map(|c| c.iter().fold(0, |a, &v| a | bits::bit(v)))
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|&m| bits::count(adj[v] & m)).collect(), v))
                .collect();
            keyed.sort();
            let mut group: Vec<usize> = Vec::new();
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(std::mem::take(&mut group));
                }
                group.push(keyed[i].1);
            }
            next.push(group);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search(adj: &[Mask], cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut pos = vec![0; adj.len()];
            for (i, c) in cells.iter().enumerate() {
                pos[c[0]] = i;
            }
            let code = code_of(adj, &pos);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, pos));
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut split = cells[..i].to_vec();
                split.push(vec![v]);
                split.push(cells[i].iter().copied().filter(|&u| u != v).collect());
                split.extend_from_slice(&cells[i + 1..]);
                search(adj, refine(adj, split), best);
            }
        }
    }
}

/// Canonical code and the relabelling (`new_label[v]`) that produces it.
pub(crate) fn canonical_labelling(adj: &[Mask]) -> (CanonicalCode, Vec<usize>) {
    let n = adj.len();
    let start = refine(adj, vec![(0..n).collect()]);
    let mut best = None;
    search(adj, start, &mut best);
    let (bits, pos) = best.expect("at least one leaf");
    (CanonicalCode { n, bits }, pos)
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    if g.order() > 16 {
        return Err(Error::Capacity(
            "canonical codes are limited to 16 vertices".into(),
        ));
    }
    Ok(canonical_labelling(&g.masks("canonical form")?).0)
}

pub fn graph_from_code(code: CanonicalCode) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..code.n {
        for j in i + 1..code.n {
            if code.bits >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(code.n, &edges).expect("codes describe valid graphs")
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(graph_from_code(canonical_code(g)?))
}

/// One canonical representative per isomorphism class on `n` vertices,
/// ordered by canonical code.
pub fn isomorphism_classes(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > CLASS_ENUMERATION_CAP {
        return Err(Error::Capacity(format!(
            "class enumeration supports 1..={CLASS_ENUMERATION_CAP} vertices, got {n}"
        )));
    }
    let mut level: BTreeSet<CanonicalCode> = BTreeSet::new();
    level.insert(CanonicalCode { n: 1, bits: 0 });
    for k in 1..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let g = graph_from_code(*code);
            let base: Vec<Mask> = g.masks("class enumeration")?;
            for nb in 0..(1 as Mask) << k {
                let mut adj: Vec<Mask> = base
                    .iter()
                    .enumerate()
                    .map(|(v, &a)| a | (nb >> v & 1) << k)
                    .collect();
                adj.push(nb);
                next.insert(canonical_labelling(&adj).0);
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(graph_from_code).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path, random_gnp};

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| isomorphism_classes(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn relabelled_graphs_share_a_code() {
        for seed in 0..30 {
            let g = random_gnp(9, 0.4, seed).unwrap();
            let perm: Vec<usize> = (0..9).map(|i| (i * 4 + seed as usize) % 9).collect();
            let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
            let h = Graph::from_edges(9, &edges).unwrap();
            assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        }
        assert_ne!(
            canonical_code(&path(5).unwrap()).unwrap(),
            canonical_code(&cycle(5).unwrap()).unwrap()
        );
    }
}

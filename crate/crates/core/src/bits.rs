//! Bit-mask helpers for the exhaustive searches, which all work on graphs
//! small enough that a vertex set fits in one `u128`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) type Mask = u128;

pub(crate) const MASK_BITS: usize = 128;

#[inline]
pub(crate) fn bit(v: usize) -> Mask {
    1u128 << v
}

#[inline]
pub(crate) fn full(n: usize) -> Mask {
    if n >= MASK_BITS {
        !0
    } else {
        (1u128 << n) - 1
    }
}

#[inline]
pub(crate) fn count(m: Mask) -> usize {
    m.count_ones() as usize
}

#[inline]
pub(crate) fn lowest(m: Mask) -> usize {
    m.trailing_zeros() as usize
}

pub(crate) fn iter(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Open neighbourhood of a set: every vertex adjacent to some member.
#[inline]
pub(crate) fn neighborhood(adj: &[Mask], set: Mask) -> Mask {
    iter(set).fold(0, |acc, v| acc | adj[v])
}

/// Vertices reachable from `seed` inside `within` (seed is intersected with `within`).
pub(crate) fn reach(adj: &[Mask], within: Mask, seed: Mask) -> Mask {
    let mut comp = seed & within;
    let mut frontier = comp;
    while frontier != 0 {
        let next = neighborhood(adj, frontier) & within & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

pub(crate) fn is_connected(adj: &[Mask], set: Mask) -> bool {
    if set == 0 {
        return false;
    }
    reach(adj, set, set & set.wrapping_neg()) == set
}

/// Connected components of `within`, each as a mask, ordered by lowest vertex.
pub(crate) fn components(adj: &[Mask], within: Mask) -> Vec<Mask> {
    let mut rest = within;
    let mut out = Vec::new();
    while rest != 0 {
        let c = reach(adj, rest, rest & rest.wrapping_neg());
        out.push(c);
        rest &= !c;
    }
    out
}

/// Adjacency masks of `g`, or a capacity error when `g` is too large for the
/// exhaustive routines.
pub(crate) fn adjacency(g: &Graph, what: &str) -> Result<Vec<Mask>> {
    if g.order() > MASK_BITS {
        return Err(Error::Capacity(format!(
            "{what} supports at most {MASK_BITS} vertices, got {}",
            g.order()
        )));
    }
    Ok((0..g.order())
        .map(|v| g.neighbors(v).fold(0, |acc, u| acc | bit(u)))
        .collect())
}

/// Upper bound on the clique number of `G[within]` by greedy colouring.
pub(crate) fn greedy_colors(adj: &[Mask], within: Mask) -> usize {
    let mut uncolored = within;
    let mut colors = 0;
    while uncolored != 0 {
        colors += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = lowest(avail);
            uncolored &= !bit(v);
            avail &= !bit(v) & !adj[v];
        }
    }
    colors
}

/// Size of a greedy (minimum-degree first) independent set of `G[within]`.
pub(crate) fn greedy_independent(adj: &[Mask], within: Mask) -> usize {
    let mut left = within;
    let mut size = 0;
    while left != 0 {
        let v = iter(left)
            .min_by_key(|&v| count(adj[v] & left))
            .expect("nonempty");
        size += 1;
        left &= !bit(v) & !adj[v];
    }
    size
}

/// Exact clique number of `G[within]` (simple branch and bound, small graphs).
pub(crate) fn clique_number(adj: &[Mask], within: Mask) -> (usize, Mask) {
    fn go(adj: &[Mask], cur: Mask, cand: Mask, best: &mut (usize, Mask)) {
        if cand == 0 {
            if count(cur) > best.0 {
                *best = (count(cur), cur);
            }
            return;
        }
        if count(cur) + greedy_colors(adj, cand) <= best.0 {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if count(cur) + count(rest) <= best.0 {
                return;
            }
            let v = lowest(rest);
            rest &= !bit(v);
            go(adj, cur | bit(v), rest & adj[v], best);
        }
    }
    let mut best = (0, 0);
    go(adj, 0, within, &mut best);
    best
}

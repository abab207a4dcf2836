//! Simple undirected graphs stored as a symmetric bit matrix, plus the vertex
//! sets and blow-up coordinates used throughout the crate.

mod edgelist;
mod generators;
mod graph6;
mod product;

pub use edgelist::{edge_list_decode, edge_list_encode};
pub use generators::{complete, cycle, empty, grid, path, random_gnp};
pub use graph6::{graph6_decode, graph6_encode};
pub use product::{
    blowup_adjacency_oracle, blowup_complete, blowup_empty, lexicographic_product,
    lexicographic_product_with_cap, BlowupVertex,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};

/// Largest graph that may be materialized. The blow-up oracle is not bound by it.
pub const DEFAULT_VERTEX_CAP: usize = 4096;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > DEFAULT_VERTEX_CAP {
            return Err(Error::SizeCap {
                requested: n as u128,
                cap: DEFAULT_VERTEX_CAP,
            });
        }
        let words = n.div_ceil(64);
        Ok(Graph {
            n,
            words,
            rows: vec![0; words * n],
        })
    }

    /// Builds a graph from an edge list; duplicate pairs collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// The complement graph on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut h = Graph::edgeless(self.n).expect("same order as an existing graph");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    h.set_edge(u, v);
                }
            }
        }
        h
    }

    /// Induced subgraph on `vertices` (relabelled in the given order).
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut h = Graph::edgeless(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.set_edge(i, j);
                }
            }
        }
        Ok(h)
    }

    /// Copy of the graph with edge `{u, v}` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut h = self.clone();
        if self.has_edge(u, v) {
            h.rows[u * h.words + v / 64] &= !(1 << (v % 64));
            h.rows[v * h.words + u / 64] &= !(1 << (u % 64));
        }
        h
    }

    /// Copy of the graph with vertex `v` deleted; later vertices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// True when `set` induces a connected subgraph (the empty set does not).
    pub fn induces_connected(&self, set: &VertexSet) -> bool {
        let members = set.members();
        let Some(&first) = members.first() else {
            return false;
        };
        let mut seen = vec![first];
        let mut stack = vec![first];
        while let Some(u) = stack.pop() {
            for &w in members {
                if !seen.contains(&w) && self.has_edge(u, w) {
                    seen.push(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == members.len()
    }

    /// True when some edge joins a vertex of `a` to a vertex of `b`.
    pub fn joined(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.members()
            .iter()
            .any(|&u| b.members().iter().any(|&v| self.has_edge(u, v)))
    }

    pub(crate) fn masks(&self, what: &str) -> Result<Vec<Mask>> {
        bits::adjacency(self, what)
    }

    /// Checks the symmetry and loop-freeness invariants of the stored matrix.
    pub fn check_invariants(&self) -> bool {
        (0..self.n).all(|u| {
            !self.has_edge(u, u) && (0..self.n).all(|v| self.has_edge(u, v) == self.has_edge(v, u))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({}, {:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// A subset of the vertices of a host graph, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet {
    host_n: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(host_n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.iter().find(|&&v| v >= host_n) {
            return Err(Error::Range(format!(
                "vertex {v} outside host of order {host_n}"
            )));
        }
        Ok(VertexSet { host_n, members })
    }

    pub(crate) fn from_mask(host_n: usize, mask: Mask) -> Self {
        VertexSet {
            host_n,
            members: bits::iter(mask).collect(),
        }
    }

    pub(crate) fn mask(&self) -> Mask {
        self.members.iter().fold(0, |acc, &v| acc | bits::bit(v))
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.members.iter().any(|&v| other.contains(v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.members)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Canonical order on vertex sets: by size, then lexicographically.
pub fn canonical_cmp(a: &VertexSet, b: &VertexSet) -> std::cmp::Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.members.cmp(&b.members))
}

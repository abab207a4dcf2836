//! Treewidth, separation number and grid minors, with certificates, and a
//! report that puts them side by side.

use std::fmt;

use serde::Serialize;

use crate::bits::{self, Mask};
use crate::bramble::bramble_number;
use crate::bramble::TouchingKind;
use crate::error::{Error, Result};
use crate::fractional::{fractional_hadwiger, Status};
use crate::graph::{graph6_encode, grid, Graph, VertexSet};
use crate::minor::{hadwiger_number, has_minor, parse_set_line, MinorModel, Pattern};
use crate::rational::Rational;

/// Largest graph the subset dynamic program for treewidth accepts.
pub const TREEWIDTH_CAP: usize = 14;
/// Largest graph the separation-number sweep accepts.
pub const SEPARATION_CAP: usize = 12;

/// Bags joined in a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub host_n: usize,
    pub bags: Vec<VertexSet>,
    pub tree_edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionViolation {
    HostMismatch {
        decomposition: usize,
        graph: usize,
    },
    NotATree,
    UncoveredVertex {
        vertex: usize,
    },
    UncoveredEdge {
        u: usize,
        v: usize,
    },
    /// The bags holding `vertex` are not connected in the tree.
    NotSubtree {
        vertex: usize,
    },
}

impl fmt::Display for DecompositionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionViolation::HostMismatch {
                decomposition,
                graph,
            } => write!(
                f,
                "host mismatch: decomposition is for {decomposition} vertices, graph has {graph}"
            ),
            DecompositionViolation::NotATree => write!(f, "bag graph is not a tree"),
            DecompositionViolation::UncoveredVertex { vertex } => {
                write!(f, "vertex {vertex} is in no bag")
            }
            DecompositionViolation::UncoveredEdge { u, v } => {
                write!(f, "edge {u}-{v} is in no bag")
            }
            DecompositionViolation::NotSubtree { vertex } => {
                write!(f, "bags containing vertex {vertex} do not form a subtree")
            }
        }
    }
}

impl TreeDecomposition {
    /// Largest bag size minus one (`-1` style empty decompositions report 0).
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(1)
            .saturating_sub(1)
    }

    /// Checks the cover, edge and subtree properties.
    pub fn validate(&self, g: &Graph) -> Result<(), DecompositionViolation> {
        let n = g.order();
        if self.host_n != n || self.bags.iter().any(|b| b.host_n() != n) {
            return Err(DecompositionViolation::HostMismatch {
                decomposition: self.host_n,
                graph: n,
            });
        }
        let k = self.bags.len();
        if k == 0
            || self.tree_edges.len() != k - 1
            || self
                .tree_edges
                .iter()
                .any(|&(a, b)| a >= k || b >= k || a == b)
        {
            return Err(DecompositionViolation::NotATree);
        }
        let connected_bags = |keep: &dyn Fn(usize) -> bool| -> bool {
            let start = match (0..k).find(|&i| keep(i)) {
                Some(s) => s,
                None => return true,
            };
            let mut seen = vec![false; k];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &(a, b) in &self.tree_edges {
                    for (p, q) in [(a, b), (b, a)] {
                        if p == x && keep(q) && !seen[q] {
                            seen[q] = true;
                            stack.push(q);
                        }
                    }
                }
            }
            (0..k).all(|i| !keep(i) || seen[i])
        };
        if !connected_bags(&|_| true) {
            return Err(DecompositionViolation::NotATree);
        }
        for v in 0..n {
            if !self.bags.iter().any(|b| b.contains(v)) {
                return Err(DecompositionViolation::UncoveredVertex { vertex: v });
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return Err(DecompositionViolation::UncoveredEdge { u, v });
            }
        }
        for v in 0..n {
            if !connected_bags(&|i| self.bags[i].contains(v)) {
                return Err(DecompositionViolation::NotSubtree { vertex: v });
            }
        }
        Ok(())
    }

    /// `tree-decomposition <n>`, then `bag: v ...` lines, then `edge i j`.
    pub fn to_text(&self) -> String {
        let mut out = format!("tree-decomposition {}\n", self.host_n);
        for b in &self.bags {
            out.push_str(&format!("bag: {b}\n"));
        }
        for (a, b) in &self.tree_edges {
            out.push_str(&format!("edge {a} {b}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse {
            offset: 0,
            message: m.to_string(),
        };
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().unwrap_or_default();
        let host_n: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["tree-decomposition", n] => n.parse().map_err(|_| bad("bad host order"))?,
            _ => return Err(bad("expected `tree-decomposition <n>`")),
        };
        let mut bags = Vec::new();
        let mut tree_edges = Vec::new();
        for line in lines {
            if let Some(rest) = line.strip_prefix("bag:") {
                bags.push(parse_set_line(host_n, rest)?);
            } else if let Some(rest) = line.strip_prefix("edge") {
                let ends: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| bad("bad bag index")))
                    .collect::<Result<_>>()?;
                match ends.as_slice() {
                    [a, b] => tree_edges.push((*a, *b)),
                    _ => return Err(bad("expected `edge i j`")),
                }
            } else {
                return Err(bad("expected a `bag:` or `edge` line"));
            }
        }
        Ok(TreeDecomposition {
            host_n,
            bags,
            tree_edges,
        })
    }
}

/// Vertices outside `set ∪ {v}` reachable from `v` through `set`.
fn q_set(adj: &[Mask], set: Mask, v: usize) -> Mask {
    let inside = bits::reach(adj, set | bits::bit(v), bits::bit(v));
    bits::neighborhood(adj, inside) & !set & !bits::bit(v)
}

/// Exact treewidth by dynamic programming over vertex subsets, with a tree
/// decomposition built from the optimal elimination order.
pub fn treewidth(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    let n = g.order();
    if n > TREEWIDTH_CAP {
        return Err(Error::Capacity(format!(
            "treewidth is exponential; {n} vertices exceeds the cap of {TREEWIDTH_CAP}"
        )));
    }
    let adj = g.masks("treewidth")?;
    let size = 1usize << n;
    // best[S]: least possible max |Q| when S is eliminated first.
    let mut best = vec![u8::MAX; size];
    let mut choice = vec![0u8; size];
    best[0] = 0;
    for s in 1..size {
        let sm = s as Mask;
        for v in bits::iter(sm) {
            let rest = s & !(1 << v);
            let q = bits::count(q_set(&adj, rest as Mask, v)) as u8;
            let cost = best[rest].max(q);
            if cost < best[s] {
                best[s] = cost;
                choice[s] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut s = size - 1;
    while s != 0 {
        let v = choice[s] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    let td = decomposition_from_order(&adj, &order);
    let w = best[size - 1] as usize;
    debug_assert_eq!(td.width(), w);
    Ok((w, td))
}

/// One bag per vertex: the vertex with its later neighbours in the filled
/// graph, hung below the earliest of those neighbours.
fn decomposition_from_order(adj: &[Mask], order: &[usize]) -> TreeDecomposition {
    let n = adj.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut tree_edges = Vec::new();
    let mut roots = Vec::new();
    let mut eliminated: Mask = 0;
    for (i, &v) in order.iter().enumerate() {
        let later = q_set(adj, eliminated, v);
        bags.push(VertexSet::from_mask(n, later | bits::bit(v)));
        match bits::iter(later).min_by_key(|&u| pos[u]) {
            Some(u) => tree_edges.push((i, pos[u])),
            None => roots.push(i),
        }
        eliminated |= bits::bit(v);
    }
    // Components give separate trees; chain their roots.
    for w in roots.windows(2) {
        tree_edges.push((w[0], w[1]));
    }
    TreeDecomposition {
        host_n: n,
        bags,
        tree_edges,
    }
}

/// A separation of an induced subgraph: no edges between `v1` and `v2`,
/// each of size at most `floor(2n'/3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorWitness {
    pub subgraph: VertexSet,
    pub v0: VertexSet,
    pub v1: VertexSet,
    pub v2: VertexSet,
}

impl SeparatorWitness {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let (sub, a, b, c) = (
            self.subgraph.mask(),
            self.v0.mask(),
            self.v1.mask(),
            self.v2.mask(),
        );
        let limit = 2 * bits::count(sub) / 3;
        let adj = match g.masks("separator check") {
            Ok(a) => a,
            Err(_) => return false,
        };
        a & b == 0
            && a & c == 0
            && b & c == 0
            && a | b | c == sub
            && bits::count(b) <= limit
            && bits::count(c) <= limit
            && bits::neighborhood(&adj, b) & c == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationNumber {
    pub value: usize,
    /// The induced subgraph needing the largest separator, with one of its
    /// smallest separations.
    pub witness: SeparatorWitness,
}

/// Smallest separator of `G[sub]`, returning `(V0, V1, V2)`.
fn min_separator(adj: &[Mask], sub: Mask) -> (Mask, Mask, Mask) {
    let k = bits::count(sub);
    let limit = 2 * k / 3;
    let members: Vec<usize> = bits::iter(sub).collect();
    for size in 0..=k {
        // Subsets of `sub` with `size` members, in colex order over `members`.
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let v0 = idx.iter().fold(0, |acc, &i| acc | bits::bit(members[i]));
            if let Some((v1, v2)) = split(adj, sub & !v0, limit) {
                return (v0, v1, v2);
            }
            // Next combination.
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if idx[i] < k - size + i {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    i = usize::MAX;
                    break;
                }
            }
            if i != usize::MAX {
                break;
            }
        }
    }
    unreachable!("V0 = V always separates")
}

/// Groups the components of `rest` into two sides of at most `limit` each.
fn split(adj: &[Mask], rest: Mask, limit: usize) -> Option<(Mask, Mask)> {
    let total = bits::count(rest);
    if total > 2 * limit {
        return None;
    }
    let comps = bits::components(adj, rest);
    // reachable[s] = some union of components has exactly s vertices.
    let mut reach: Vec<Option<Mask>> = vec![None; total + 1];
    reach[0] = Some(0);
    for &c in &comps {
        let sz = bits::count(c);
        for s in (sz..=total).rev() {
            if reach[s].is_none() {
                if let Some(prev) = reach[s - sz] {
                    reach[s] = Some(prev | c);
                }
            }
        }
    }
    (total.saturating_sub(limit)..=limit.min(total))
        .find_map(|s| reach[s])
        .map(|side| (side, rest & !side))
}

/// Largest, over nonempty induced subgraphs, of the smallest separator.
pub fn separation_number(g: &Graph) -> Result<SeparationNumber> {
    let n = g.order();
    if n > SEPARATION_CAP {
        return Err(Error::Capacity(format!(
            "separation number sweeps all subsets; {n} vertices exceeds the cap of {SEPARATION_CAP}"
        )));
    }
    let adj = g.masks("separation number")?;
    let mut best: Option<(usize, Mask, (Mask, Mask, Mask))> = None;
    for sub in 1..(1 as Mask) << n {
        // Putting all but floor(2k/3) vertices into V0 always works, so
        // sets with ceil(k/3) <= best cannot improve on it.
        let k = bits::count(sub);
        if best.is_some_and(|(b, _, _)| k - 2 * k / 3 <= b) {
            continue;
        }
        let sep = min_separator(&adj, sub);
        let s = bits::count(sep.0);
        if best.is_none_or(|(b, _, _)| s > b) {
            best = Some((s, sub, sep));
        }
    }
    let (value, sub, (v0, v1, v2)) = best.expect("nonempty graph");
    Ok(SeparationNumber {
        value,
        witness: SeparatorWitness {
            subgraph: VertexSet::from_mask(n, sub),
            v0: VertexSet::from_mask(n, v0),
            v1: VertexSet::from_mask(n, v1),
            v2: VertexSet::from_mask(n, v2),
        },
    })
}

/// Largest `r` such that the `r × r` grid is a minor.
pub fn max_grid_minor(g: &Graph) -> Result<(usize, MinorModel)> {
    let mut best = (
        1,
        has_minor(g, &grid(1)?)?.expect("a single vertex is always a minor"),
    );
    let mut r = 2;
    while r * r <= g.order() && 2 * r * (r - 1) <= g.size() {
        match has_minor(g, &grid(r)?)? {
            Some(m) => best = (r, m),
            None => break,
        }
        r += 1;
    }
    Ok(best)
}

/// One graph's parameters, their certificates, and the two relations
/// between them that are checked.
#[derive(Clone, Debug, Serialize)]
pub struct ParamReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub h: usize,
    pub hf: Rational,
    pub hf_status: Status,
    pub treewidth: usize,
    pub bramble_number: usize,
    pub separation_number: usize,
    pub max_grid_minor: usize,
    /// Treewidth is at least the side of any grid minor.
    pub grid_le_treewidth: bool,
    /// Bramble number equals treewidth plus one.
    pub bramble_eq_treewidth_plus_one: bool,
    pub certificates: ParamCertificates,
}

#[derive(Clone, Debug, Serialize)]
pub struct ParamCertificates {
    pub h: String,
    pub hf: String,
    pub treewidth: String,
    pub grid: String,
    pub separator: [String; 4],
}

pub fn param_report(g: &Graph) -> Result<ParamReport> {
    let (h, hm) = hadwiger_number(g)?;
    let hf = fractional_hadwiger(g, TouchingKind::Weak)?;
    let (tw, td) = treewidth(g)?;
    let bn = bramble_number(g)?;
    let sep = separation_number(g)?;
    let (r, gm) = max_grid_minor(g)?;
    debug_assert!(matches!(gm.pattern, Pattern::PatternGraph(_)));
    let w = &sep.witness;
    Ok(ParamReport {
        graph: graph6_encode(g),
        n: g.order(),
        m: g.size(),
        h,
        hf: hf.value.clone(),
        hf_status: hf.status,
        treewidth: tw,
        bramble_number: bn.value,
        separation_number: sep.value,
        max_grid_minor: r,
        grid_le_treewidth: tw >= r,
        bramble_eq_treewidth_plus_one: bn.value == tw + 1,
        certificates: ParamCertificates {
            h: hm.to_text(),
            hf: hf.certificate.to_text(),
            treewidth: td.to_text(),
            grid: gm.to_text(),
            separator: [
                w.subgraph.to_string(),
                w.v0.to_string(),
                w.v1.to_string(),
                w.v2.to_string(),
            ],
        },
    })
}

pub fn comparability_report(graphs: &[Graph]) -> Result<Vec<ParamReport>> {
    graphs.iter().map(param_report).collect()
}

/// Plain-text table of the width parameters, sorted by treewidth, for
/// eyeballing how they move together. Nothing is asserted about it.
pub fn co_movement_table(reports: &[ParamReport]) -> String {
    let mut rows: Vec<&ParamReport> = reports.iter().collect();
    rows.sort_by_key(|r| {
        (
            r.treewidth,
            r.bramble_number,
            r.separation_number,
            r.max_grid_minor,
        )
    });
    let mut out = String::from("graph\tn\ttw\tbn\tsep\tgrid\th\thf\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.graph,
            r.n,
            r.treewidth,
            r.bramble_number,
            r.separation_number,
            r.max_grid_minor,
            r.h,
            r.hf
        ));
    }
    out
}

//! Brambles and strong brambles: connected-set enumeration, touching,
//! validation, maximal families, the bramble number and the grid crosses.

pub(crate) mod cliques;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::minor::parse_set_line;
use crate::rational::Rational;
use cliques::TouchGraph;

/// Default limit on the number of connected sets enumerated.
pub const CONNECTED_SET_CAP: usize = 1 << 20;
/// Default limit on the number of maximal brambles enumerated.
pub const MAXIMAL_BRAMBLE_CAP: usize = 1_000_000;
/// Hitting sets are found by enumerating vertex subsets, so hosts stay small.
pub const HITTING_SET_CAP: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TouchingKind {
    /// Sets meet or are joined by an edge.
    Weak,
    /// Sets are joined by an edge; a set touches itself only through an
    /// internal edge.
    Strong,
}

impl fmt::Display for TouchingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TouchingKind::Weak => "weak",
            TouchingKind::Strong => "strong",
        })
    }
}

impl FromStr for TouchingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(TouchingKind::Weak),
            "strong" => Ok(TouchingKind::Strong),
            _ => Err(Error::Parse {
                offset: 0,
                message: format!("unknown touching kind {s:?}"),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrambleFamily {
    pub host_n: usize,
    pub sets: Vec<VertexSet>,
    pub kind: TouchingKind,
}

/// Why a family fails to be a bramble.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BrambleViolation {
    HostMismatch {
        family: usize,
        graph: usize,
    },
    EmptySet {
        index: usize,
    },
    DuplicateSet {
        first: usize,
        second: usize,
    },
    Disconnected {
        index: usize,
    },
    /// `first == second` means a strong member has no internal edge.
    NotTouching {
        first: usize,
        second: usize,
    },
}

impl fmt::Display for BrambleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrambleViolation::HostMismatch { family, graph } => {
                write!(
                    f,
                    "host mismatch: certificate is for {family} vertices, graph has {graph}"
                )
            }
            BrambleViolation::EmptySet { index } => write!(f, "set {index} is empty"),
            BrambleViolation::DuplicateSet { first, second } => {
                write!(f, "sets {first} and {second} are identical")
            }
            BrambleViolation::Disconnected { index } => write!(f, "disconnected set: set {index}"),
            BrambleViolation::NotTouching { first, second } if first == second => {
                write!(f, "non-touching pair: set {first} has no internal edge")
            }
            BrambleViolation::NotTouching { first, second } => {
                write!(f, "non-touching pair: sets {first} and {second}")
            }
        }
    }
}

impl BrambleFamily {
    /// A kind header, then one sorted set per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("bramble {} {}\n", self.host_n, self.kind);
        for s in &self.sets {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().unwrap_or_default();
        let (host_n, kind) = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["bramble", n, kind] => (
                n.parse().map_err(|_| parse_err("bad host order"))?,
                kind.parse()?,
            ),
            _ => return Err(parse_err("expected `bramble <n> weak|strong`")),
        };
        let sets = lines
            .map(|l| parse_set_line(host_n, l))
            .collect::<Result<_>>()?;
        Ok(BrambleFamily { host_n, sets, kind })
    }
}

fn parse_err(message: &str) -> Error {
    Error::Parse {
        offset: 0,
        message: message.to_string(),
    }
}

/// Connected vertex sets of size at most `max_size` (all sizes when `None`),
/// ordered by size and then lexicographically.
pub fn enumerate_connected_sets(g: &Graph, max_size: Option<usize>) -> Result<Vec<VertexSet>> {
    let adj = g.masks("connected-set enumeration")?;
    let masks = connected_masks(&adj, max_size, CONNECTED_SET_CAP)?;
    Ok(masks
        .into_iter()
        .map(|m| VertexSet::from_mask(g.order(), m))
        .collect())
}

pub(crate) fn connected_masks(
    adj: &[Mask],
    max_size: Option<usize>,
    cap: usize,
) -> Result<Vec<Mask>> {
    let n = adj.len();
    let limit = max_size.unwrap_or(n).min(n);
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    for v in 0..n {
        // Sets whose smallest vertex is v.
        let above = bits::full(n) & !bits::full(v + 1);
        let start = bits::bit(v);
        extend(
            adj,
            above,
            start,
            adj[v] & above,
            start | adj[v],
            limit,
            cap,
            &mut out,
        )?;
    }
    out.sort_by(|&a, &b| mask_cmp(a, b));
    Ok(out)
}

// ESU-style extension: every connected set is produced exactly once.
#[allow(clippy::too_many_arguments)]
fn extend(
    adj: &[Mask],
    above: Mask,
    set: Mask,
    mut ext: Mask,
    closed: Mask,
    limit: usize,
    cap: usize,
    out: &mut Vec<Mask>,
) -> Result<()> {
    if out.len() == cap {
        return Err(Error::Capacity(format!(
            "more than {cap} connected sets; lower max_size or the vertex count"
        )));
    }
    out.push(set);
    if bits::count(set) == limit {
        return Ok(());
    }
    while ext != 0 {
        let w = bits::lowest(ext);
        ext &= !bits::bit(w);
        let fresh = adj[w] & above & !closed;
        extend(
            adj,
            above,
            set | bits::bit(w),
            ext | fresh,
            closed | adj[w],
            limit,
            cap,
            out,
        )?;
    }
    Ok(())
}

/// Size first, then lexicographic on sorted members.
pub(crate) fn mask_cmp(a: Mask, b: Mask) -> std::cmp::Ordering {
    bits::count(a)
        .cmp(&bits::count(b))
        .then_with(|| bits::iter(a).cmp(bits::iter(b)))
}

pub(crate) fn touch_masks(adj: &[Mask], a: Mask, b: Mask, kind: TouchingKind) -> bool {
    let joined = bits::neighborhood(adj, a) & b != 0;
    match kind {
        TouchingKind::Weak => joined || a & b != 0,
        TouchingKind::Strong => joined,
    }
}

/// Symmetric touching test; with `a == b` and strong touching this asks for
/// an edge inside `a`.
pub fn touches(g: &Graph, a: &VertexSet, b: &VertexSet, kind: TouchingKind) -> bool {
    let joined = g.joined(a, b);
    match kind {
        TouchingKind::Weak => joined || a.intersects(b),
        TouchingKind::Strong => joined,
    }
}

/// Checks connectivity and pairwise touching, reporting the first failure.
pub fn validate_bramble(
    g: &Graph,
    sets: &[VertexSet],
    kind: TouchingKind,
) -> Result<(), BrambleViolation> {
    for (i, s) in sets.iter().enumerate() {
        if s.host_n() != g.order() {
            return Err(BrambleViolation::HostMismatch {
                family: s.host_n(),
                graph: g.order(),
            });
        }
        if s.is_empty() {
            return Err(BrambleViolation::EmptySet { index: i });
        }
        if !g.induces_connected(s) {
            return Err(BrambleViolation::Disconnected { index: i });
        }
    }
    for i in 0..sets.len() {
        let first_other = if kind == TouchingKind::Strong {
            i
        } else {
            i + 1
        };
        for j in first_other..sets.len() {
            if !touches(g, &sets[i], &sets[j], kind) {
                return Err(BrambleViolation::NotTouching {
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(())
}

/// Candidate members for `kind`: connected sets that touch themselves.
pub(crate) fn touch_graph(
    adj: &[Mask],
    kind: TouchingKind,
    max_size: Option<usize>,
) -> Result<TouchGraph> {
    touch_graph_over(adj, kind, max_size, true)
}

/// With `self_touching_only == false` every connected set is a candidate and
/// only distinct members are required to touch.
pub(crate) fn touch_graph_over(
    adj: &[Mask],
    kind: TouchingKind,
    max_size: Option<usize>,
    self_touching_only: bool,
) -> Result<TouchGraph> {
    let mut sets = connected_masks(adj, max_size, CONNECTED_SET_CAP)?;
    if self_touching_only {
        sets.retain(|&s| touch_masks(adj, s, s, kind));
    }
    let closed: Vec<Mask> = sets
        .iter()
        .map(|&s| match kind {
            TouchingKind::Weak => s | bits::neighborhood(adj, s),
            TouchingKind::Strong => bits::neighborhood(adj, s),
        })
        .collect();
    let index: std::collections::HashMap<Mask, usize> =
        sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    Ok(TouchGraph::build(sets, |a, b| closed[index[&a]] & b != 0))
}

/// Every inclusion-maximal bramble over the connected sets of size at most
/// `max_size`. Any weighted bramble extends to one of these with zero
/// weights, so optimizing over them loses nothing.
pub fn maximal_brambles(
    g: &Graph,
    kind: TouchingKind,
    max_size: Option<usize>,
) -> Result<Vec<BrambleFamily>> {
    let adj = g.masks("bramble enumeration")?;
    let tg = touch_graph(&adj, kind, max_size)?;
    let cliques = tg.maximal_cliques(MAXIMAL_BRAMBLE_CAP).ok_or_else(|| {
        Error::Capacity(format!("more than {MAXIMAL_BRAMBLE_CAP} maximal brambles"))
    })?;
    Ok(cliques
        .into_iter()
        .map(|c| BrambleFamily {
            host_n: g.order(),
            sets: c
                .iter()
                .map(|&i| VertexSet::from_mask(g.order(), tg.sets[i]))
                .collect(),
            kind,
        })
        .collect())
}

/// Smallest vertex set meeting every member (first in colex order among the
/// smallest).
pub fn min_hitting_set(host_n: usize, sets: &[VertexSet]) -> Result<VertexSet> {
    if host_n > HITTING_SET_CAP {
        return Err(Error::Capacity(format!(
            "hitting sets are exhaustive; {host_n} vertices exceeds {HITTING_SET_CAP}"
        )));
    }
    let masks: Vec<Mask> = sets.iter().map(VertexSet::mask).collect();
    Ok(VertexSet::from_mask(
        host_n,
        cliques::min_hitting_set(host_n, &masks).1,
    ))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrambleNumber {
    pub value: usize,
    /// A bramble of that order.
    pub bramble: BrambleFamily,
    /// One of its smallest hitting sets.
    pub hitting_set: VertexSet,
}

struct Order<'a> {
    n: usize,
    sets: &'a [Mask],
}

impl cliques::CliqueObjective for Order<'_> {
    type Value = usize;

    fn score(&mut self, family: &[usize]) -> usize {
        let masks: Vec<Mask> = family.iter().map(|&i| self.sets[i]).collect();
        cliques::min_hitting_set(self.n, &masks).0
    }

    fn may_beat(&mut self, family: &[usize], best: &usize) -> bool {
        let masks: Vec<Mask> = family.iter().map(|&i| self.sets[i]).collect();
        let minimal = cliques::minimal_members(&masks);
        bits::count(cliques::greedy_hitting_set(&minimal)) > *best
            && cliques::hitting_set_of_size(self.n, &minimal, *best).is_none()
    }
}

/// Largest order (minimum hitting-set size) of a bramble.
pub fn bramble_number(g: &Graph) -> Result<BrambleNumber> {
    let n = g.order();
    if n > HITTING_SET_CAP {
        return Err(Error::Capacity(format!(
            "bramble number is exhaustive; {n} vertices exceeds {HITTING_SET_CAP}"
        )));
    }
    let adj = g.masks("bramble number")?;
    let tg = touch_graph(&adj, TouchingKind::Weak, None)?;
    let mut obj = Order { n, sets: &tg.sets };
    let found = tg.best_clique(&mut obj, None);
    let (value, family) = found.best.expect("a nonempty graph has a bramble");
    let masks: Vec<Mask> = family.iter().map(|&i| tg.sets[i]).collect();
    let (size, hit) = cliques::min_hitting_set(n, &masks);
    debug_assert_eq!(size, value);
    Ok(BrambleNumber {
        value,
        bramble: BrambleFamily {
            host_n: n,
            sets: masks.iter().map(|&m| VertexSet::from_mask(n, m)).collect(),
            kind: TouchingKind::Weak,
        },
        hitting_set: VertexSet::from_mask(n, hit),
    })
}

/// Crosses `C_i = row i ∪ column i` of the `k × k` grid, each at weight 1/2.
/// Cell `(x, y)` lies in `C_x` and `C_y` only, so no vertex is overloaded.
pub fn grid_cross_certificate(k: usize) -> Result<(Vec<VertexSet>, Vec<Rational>)> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "grid side must be at least 1".into(),
        ));
    }
    let n = k * k;
    let sets = (0..k)
        .map(|i| VertexSet::new(n, (0..k).flat_map(|j| [i * k + j, j * k + i])))
        .collect::<Result<Vec<_>>>()?;
    Ok((sets, vec![Rational::new(1, 2); k]))
}

/// Hooks `P_i`: cell `(i, i)` with the cells below it in column `i` and to
/// its right in row `i`. These are not pairwise touching once `k >= 3`.
pub fn grid_hook_family(k: usize) -> Result<Vec<VertexSet>> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "grid side must be at least 1".into(),
        ));
    }
    let n = k * k;
    (0..k)
        .map(|i| VertexSet::new(n, (i..k).flat_map(|j| [i * k + j, j * k + i])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, grid, path};

    fn vs(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::new(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn connected_set_counts() {
        assert_eq!(
            enumerate_connected_sets(&path(3).unwrap(), None)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            enumerate_connected_sets(&cycle(4).unwrap(), None)
                .unwrap()
                .len(),
            13
        );
        assert_eq!(
            enumerate_connected_sets(&complete(1).unwrap(), None)
                .unwrap()
                .len(),
            1
        );
        let c4 = enumerate_connected_sets(&cycle(4).unwrap(), Some(2)).unwrap();
        assert_eq!(c4.len(), 8);
        assert_eq!(c4[0], vs(4, &[0]));
        assert_eq!(c4[4], vs(4, &[0, 1]));
        assert_eq!(c4[5], vs(4, &[0, 3]));
    }

    #[test]
    fn touching_examples() {
        let g = cycle(4).unwrap();
        assert!(!touches(&g, &vs(4, &[0]), &vs(4, &[2]), TouchingKind::Weak));
        assert!(touches(
            &g,
            &vs(4, &[0, 1]),
            &vs(4, &[2, 3]),
            TouchingKind::Weak
        ));
        assert!(!touches(
            &g,
            &vs(4, &[0]),
            &vs(4, &[0]),
            TouchingKind::Strong
        ));
        assert!(touches(
            &g,
            &vs(4, &[0, 1]),
            &vs(4, &[0, 1]),
            TouchingKind::Strong
        ));
    }

    #[test]
    fn validation_examples() {
        let g = cycle(4).unwrap();
        let sets = [vs(4, &[0]), vs(4, &[1]), vs(4, &[2, 3])];
        assert_eq!(validate_bramble(&g, &sets, TouchingKind::Weak), Ok(()));
        let g3 = grid(3).unwrap();
        assert_eq!(
            validate_bramble(&g3, &grid_hook_family(3).unwrap(), TouchingKind::Weak),
            Err(BrambleViolation::NotTouching {
                first: 0,
                second: 2
            })
        );
        let (crosses, _) = grid_cross_certificate(3).unwrap();
        assert_eq!(validate_bramble(&g3, &crosses, TouchingKind::Weak), Ok(()));
        let bad = [vs(4, &[0, 2])];
        assert_eq!(
            validate_bramble(&g, &bad, TouchingKind::Weak),
            Err(BrambleViolation::Disconnected { index: 0 })
        );
    }

    #[test]
    fn maximal_families_of_k2() {
        let g = complete(2).unwrap();
        let weak = maximal_brambles(&g, TouchingKind::Weak, None).unwrap();
        assert_eq!(weak.len(), 1);
        assert_eq!(weak[0].sets, vec![vs(2, &[0]), vs(2, &[1]), vs(2, &[0, 1])]);
        let strong = maximal_brambles(&g, TouchingKind::Strong, None).unwrap();
        assert_eq!(strong.len(), 1);
        assert_eq!(strong[0].sets, vec![vs(2, &[0, 1])]);
    }

    #[test]
    fn bramble_numbers() {
        for n in 1..=5 {
            assert_eq!(bramble_number(&complete(n).unwrap()).unwrap().value, n);
        }
        for n in 2..=6 {
            assert_eq!(bramble_number(&path(n).unwrap()).unwrap().value, 2);
        }
        let b = bramble_number(&grid(3).unwrap()).unwrap();
        assert_eq!(b.value, 4);
        assert_eq!(b.hitting_set.len(), 4);
        assert_eq!(
            validate_bramble(&grid(3).unwrap(), &b.bramble.sets, TouchingKind::Weak),
            Ok(())
        );
    }

    #[test]
    fn text_round_trip() {
        let fam = BrambleFamily {
            host_n: 4,
            sets: vec![vs(4, &[0]), vs(4, &[1, 2])],
            kind: TouchingKind::Strong,
        };
        assert_eq!(fam.to_text(), "bramble 4 strong\n0\n1 2\n");
        assert_eq!(BrambleFamily::from_text(&fam.to_text()).unwrap(), fam);
    }
}

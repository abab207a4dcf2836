//! Clique and pattern minors with checkable certificates.

mod search;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::graph::{graph6_decode, graph6_encode, Graph, VertexSet};

/// Largest host the exhaustive minor searches accept.
pub const MINOR_SEARCH_CAP: usize = 128;

/// What a minor model realizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// `K_t`: every pair of branch sets is joined by an edge.
    CliqueOrder(usize),
    /// A general pattern graph; branch set `i` stands for pattern vertex `i`.
    PatternGraph(Graph),
}

/// Disjoint connected branch sets realizing a clique or pattern minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub host_n: usize,
    pub branch_sets: Vec<VertexSet>,
    pub pattern: Pattern,
}

/// Maximum branch-set size allowed in a bounded-breadth search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Breadth(usize);

impl Breadth {
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("breadth must be at least 1".into()));
        }
        Ok(Breadth(d))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

/// First condition a candidate model violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelViolation {
    HostMismatch {
        model: usize,
        graph: usize,
    },
    WrongSetCount {
        expected: usize,
        found: usize,
    },
    EmptySet {
        index: usize,
    },
    Overlap {
        first: usize,
        second: usize,
        vertex: usize,
    },
    Disconnected {
        index: usize,
    },
    MissingCrossEdge {
        first: usize,
        second: usize,
    },
}

impl fmt::Display for ModelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelViolation::HostMismatch { model, graph } => {
                write!(
                    f,
                    "host mismatch: model is for {model} vertices, graph has {graph}"
                )
            }
            ModelViolation::WrongSetCount { expected, found } => {
                write!(f, "pattern needs {expected} branch sets, model has {found}")
            }
            ModelViolation::EmptySet { index } => write!(f, "branch set {index} is empty"),
            ModelViolation::Overlap {
                first,
                second,
                vertex,
            } => {
                write!(
                    f,
                    "branch sets {first} and {second} overlap at vertex {vertex}"
                )
            }
            ModelViolation::Disconnected { index } => {
                write!(f, "branch set {index} is disconnected")
            }
            ModelViolation::MissingCrossEdge { first, second } => {
                write!(
                    f,
                    "missing cross edge between branch sets {first} and {second}"
                )
            }
        }
    }
}

impl MinorModel {
    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }

    /// Largest branch set.
    pub fn breadth(&self) -> usize {
        self.branch_sets
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(0)
    }

    /// Canonical text: a header line, then one sorted branch set per line.
    pub fn to_text(&self) -> String {
        let mut out = match &self.pattern {
            Pattern::CliqueOrder(t) => format!("minor {} clique {}\n", self.host_n, t),
            Pattern::PatternGraph(h) => {
                format!("minor {} pattern {}\n", self.host_n, graph6_encode(h))
            }
        };
        for s in &self.branch_sets {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| parse_err("empty minor certificate"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let (host_n, pattern) = match fields.as_slice() {
            ["minor", n, "clique", t] => (
                n.parse().map_err(|_| parse_err("bad host order"))?,
                Pattern::CliqueOrder(t.parse().map_err(|_| parse_err("bad clique order"))?),
            ),
            ["minor", n, "pattern", g6] => (
                n.parse().map_err(|_| parse_err("bad host order"))?,
                Pattern::PatternGraph(graph6_decode(g6)?),
            ),
            _ => {
                return Err(parse_err(
                    "expected `minor <n> clique <t>` or `minor <n> pattern <graph6>`",
                ))
            }
        };
        let branch_sets = lines
            .map(|l| parse_set_line(host_n, l))
            .collect::<Result<Vec<_>>>()?;
        Ok(MinorModel {
            host_n,
            branch_sets,
            pattern,
        })
    }
}

fn parse_err(message: &str) -> Error {
    Error::Parse {
        offset: 0,
        message: message.to_string(),
    }
}

pub(crate) fn parse_set_line(host_n: usize, line: &str) -> Result<VertexSet> {
    let members = line
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(&format!("bad vertex {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    VertexSet::new(host_n, members)
}

/// Checks every model condition, reporting the first violation found.
pub fn verify_minor_model(g: &Graph, model: &MinorModel) -> Result<(), ModelViolation> {
    if model.host_n != g.order() {
        return Err(ModelViolation::HostMismatch {
            model: model.host_n,
            graph: g.order(),
        });
    }
    let expected = match &model.pattern {
        Pattern::CliqueOrder(t) => *t,
        Pattern::PatternGraph(h) => h.order(),
    };
    if model.branch_sets.len() != expected {
        return Err(ModelViolation::WrongSetCount {
            expected,
            found: model.branch_sets.len(),
        });
    }
    let sets = &model.branch_sets;
    for (i, s) in sets.iter().enumerate() {
        if s.is_empty() {
            return Err(ModelViolation::EmptySet { index: i });
        }
        if s.host_n() != g.order() {
            return Err(ModelViolation::HostMismatch {
                model: s.host_n(),
                graph: g.order(),
            });
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if let Some(&v) = sets[i].members().iter().find(|&&v| sets[j].contains(v)) {
                return Err(ModelViolation::Overlap {
                    first: i,
                    second: j,
                    vertex: v,
                });
            }
        }
    }
    for (i, s) in sets.iter().enumerate() {
        if !g.induces_connected(s) {
            return Err(ModelViolation::Disconnected { index: i });
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let needed = match &model.pattern {
                Pattern::CliqueOrder(_) => true,
                Pattern::PatternGraph(h) => h.has_edge(i, j),
            };
            if needed && !g.joined(&sets[i], &sets[j]) {
                return Err(ModelViolation::MissingCrossEdge {
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(())
}

fn binom2(t: usize) -> usize {
    t * t.saturating_sub(1) / 2
}

fn clique_search(
    adj: &[Mask],
    within: Mask,
    t: usize,
    breadth: Option<usize>,
    allow_unused: bool,
) -> Option<Vec<Mask>> {
    let required: Vec<Mask> = (0..t).map(|i| bits::full(t) & !bits::bit(i)).collect();
    search::search(&search::Problem {
        adj,
        within,
        slots: t,
        required,
        interchangeable: true,
        breadth,
        allow_unused,
    })
}

fn model_from_masks(n: usize, masks: &[Mask], pattern: Pattern) -> MinorModel {
    MinorModel {
        host_n: n,
        branch_sets: masks.iter().map(|&m| VertexSet::from_mask(n, m)).collect(),
        pattern,
    }
}

/// Finds a `K_t` model (with every branch set of size at most `breadth`, if
/// given), or proves none exists. The search is complete and deterministic.
pub fn has_clique_minor(
    g: &Graph,
    t: usize,
    breadth: Option<Breadth>,
) -> Result<Option<MinorModel>> {
    if t == 0 {
        return Err(Error::InvalidArgument(
            "clique order must be at least 1".into(),
        ));
    }
    let adj = g.masks("minor search")?;
    Ok(clique_masks(&adj, t, breadth.map(Breadth::get))
        .map(|m| model_from_masks(g.order(), &m, Pattern::CliqueOrder(t))))
}

pub(crate) fn clique_masks(adj: &[Mask], t: usize, breadth: Option<usize>) -> Option<Vec<Mask>> {
    let n = adj.len();
    let all = bits::full(n);
    if t > n {
        return None;
    }
    if t == 1 {
        // First vertex in the search order.
        let v = (0..n).min_by_key(|&v| (std::cmp::Reverse(bits::count(adj[v])), v))?;
        return Some(vec![bits::bit(v)]);
    }
    let m: usize = adj.iter().map(|a| bits::count(*a)).sum::<usize>() / 2;
    if m < binom2(t) {
        return None;
    }
    match breadth {
        Some(d) => clique_search(adj, all, t, Some(d), true),
        None => bits::components(adj, all).into_iter().find_map(|comp| {
            let cm: usize = bits::iter(comp)
                .map(|v| bits::count(adj[v] & comp))
                .sum::<usize>()
                / 2;
            if bits::count(comp) < t || cm < binom2(t) {
                return None;
            }
            clique_search(adj, comp, t, None, false)
        }),
    }
}

/// Hadwiger number with a certificate model.
pub fn hadwiger_number(g: &Graph) -> Result<(usize, MinorModel)> {
    let adj = g.masks("Hadwiger number")?;
    let (h, masks) = hadwiger_masks(&adj, None);
    Ok((
        h,
        model_from_masks(g.order(), &masks, Pattern::CliqueOrder(h)),
    ))
}

pub(crate) fn hadwiger_masks(adj: &[Mask], breadth: Option<usize>) -> (usize, Vec<Mask>) {
    let n = adj.len();
    let start = if breadth.is_none() {
        bits::clique_number(adj, bits::full(n)).0.max(1)
    } else {
        1
    };
    let mut best = (
        start,
        clique_masks(adj, start, breadth).expect("a clique is a minor"),
    );
    for t in start + 1..=n {
        match clique_masks(adj, t, breadth) {
            Some(m) => best = (t, m),
            None => break,
        }
    }
    best
}

/// Largest clique minor whose branch sets have at most `d` vertices.
pub fn max_clique_minor_bounded(g: &Graph, d: Breadth) -> Result<(usize, MinorModel)> {
    let adj = g.masks("bounded clique minor")?;
    let (t, masks) = hadwiger_masks(&adj, Some(d.get()));
    Ok((
        t,
        model_from_masks(g.order(), &masks, Pattern::CliqueOrder(t)),
    ))
}

/// Finds a model of `h` as a minor of `g`, or proves none exists.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<Option<MinorModel>> {
    let adj = g.masks("minor search")?;
    let k = h.order();
    if k > g.order() || h.size() > g.size() {
        return Ok(None);
    }
    let required: Vec<Mask> = (0..k)
        .map(|i| h.neighbors(i).fold(0, |acc, j| acc | bits::bit(j)))
        .collect();
    let found = search::search(&search::Problem {
        adj: &adj,
        within: bits::full(g.order()),
        slots: k,
        required,
        interchangeable: false,
        breadth: None,
        allow_unused: !g.is_connected(),
    });
    Ok(found.map(|m| model_from_masks(g.order(), &m, Pattern::PatternGraph(h.clone()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty, grid, path, random_gnp};

    fn sets(n: usize, s: &[&[usize]]) -> Vec<VertexSet> {
        s.iter()
            .map(|m| VertexSet::new(n, m.iter().copied()).unwrap())
            .collect()
    }

    #[test]
    fn verify_examples() {
        let c4 = cycle(4).unwrap();
        let ok = MinorModel {
            host_n: 4,
            branch_sets: sets(4, &[&[0], &[1], &[2, 3]]),
            pattern: Pattern::CliqueOrder(3),
        };
        assert_eq!(verify_minor_model(&c4, &ok), Ok(()));
        let antipodal = MinorModel {
            host_n: 4,
            branch_sets: sets(4, &[&[0], &[2]]),
            pattern: Pattern::CliqueOrder(2),
        };
        assert_eq!(
            verify_minor_model(&c4, &antipodal),
            Err(ModelViolation::MissingCrossEdge {
                first: 0,
                second: 1
            })
        );
        let p3 = path(3).unwrap();
        let split = MinorModel {
            host_n: 3,
            branch_sets: sets(3, &[&[0, 2]]),
            pattern: Pattern::CliqueOrder(1),
        };
        assert_eq!(
            verify_minor_model(&p3, &split),
            Err(ModelViolation::Disconnected { index: 0 })
        );
        let overlap = MinorModel {
            host_n: 4,
            branch_sets: sets(4, &[&[0, 1], &[1, 2]]),
            pattern: Pattern::CliqueOrder(2),
        };
        assert_eq!(
            verify_minor_model(&c4, &overlap),
            Err(ModelViolation::Overlap {
                first: 0,
                second: 1,
                vertex: 1
            })
        );
        let wrong_host = MinorModel { host_n: 5, ..ok };
        assert!(matches!(
            verify_minor_model(&c4, &wrong_host),
            Err(ModelViolation::HostMismatch { .. })
        ));
    }

    #[test]
    fn clique_minor_examples() {
        let k5 = complete(5).unwrap();
        let m = has_clique_minor(&k5, 5, None).unwrap().unwrap();
        assert!(m.branch_sets.iter().all(|s| s.len() == 1));
        assert!(has_clique_minor(&cycle(4).unwrap(), 4, None)
            .unwrap()
            .is_none());
        let g3 = grid(3).unwrap();
        let m = has_clique_minor(&g3, 4, Some(Breadth::new(3).unwrap()))
            .unwrap()
            .unwrap();
        assert_eq!(verify_minor_model(&g3, &m), Ok(()));
        assert!(m.breadth() <= 3);
    }

    #[test]
    fn hadwiger_examples() {
        for n in 1..7 {
            assert_eq!(hadwiger_number(&complete(n).unwrap()).unwrap().0, n);
        }
        assert_eq!(hadwiger_number(&cycle(4).unwrap()).unwrap().0, 3);
        let (h, cert) = hadwiger_number(&grid(3).unwrap()).unwrap();
        assert_eq!(h, 4);
        assert_eq!(verify_minor_model(&grid(3).unwrap(), &cert), Ok(()));
        assert_eq!(hadwiger_number(&empty(3).unwrap()).unwrap().0, 1);
        assert_eq!(hadwiger_number(&path(5).unwrap()).unwrap().0, 2);
    }

    #[test]
    fn bounded_examples() {
        let one = Breadth::new(1).unwrap();
        assert_eq!(
            max_clique_minor_bounded(&complete(5).unwrap(), one)
                .unwrap()
                .0,
            5
        );
        assert_eq!(
            max_clique_minor_bounded(&cycle(6).unwrap(), one).unwrap().0,
            2
        );
        assert!(Breadth::new(0).is_err());
        let c6 = cycle(6).unwrap();
        assert_eq!(
            max_clique_minor_bounded(&c6, Breadth::new(2).unwrap())
                .unwrap()
                .0,
            3
        );
    }

    #[test]
    fn pattern_minor_examples() {
        let g3 = grid(3).unwrap();
        let g2 = grid(2).unwrap();
        let m = has_minor(&g3, &g2).unwrap().unwrap();
        assert_eq!(verify_minor_model(&g3, &m), Ok(()));
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert!(has_minor(&tree, &complete(3).unwrap()).unwrap().is_none());
        let k1 = complete(1).unwrap();
        for g in [tree, g3, empty(4).unwrap()] {
            let m = has_minor(&g, &k1).unwrap().unwrap();
            assert_eq!(m.order(), 1);
        }
        let two_points = empty(2).unwrap();
        assert!(has_minor(&empty(3).unwrap(), &two_points)
            .unwrap()
            .is_some());
        assert!(has_minor(&complete(1).unwrap(), &two_points)
            .unwrap()
            .is_none());
    }

    #[test]
    fn text_round_trip() {
        let (_, m) = hadwiger_number(&grid(3).unwrap()).unwrap();
        assert_eq!(MinorModel::from_text(&m.to_text()).unwrap(), m);
        let p = has_minor(&grid(3).unwrap(), &grid(2).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(MinorModel::from_text(&p.to_text()).unwrap(), p);
        assert!(MinorModel::from_text("bramble 3 weak\n").is_err());
    }

    #[test]
    fn search_models_always_verify() {
        for seed in 0..40 {
            let g = random_gnp(8, 0.45, seed).unwrap();
            let (h, cert) = hadwiger_number(&g).unwrap();
            assert_eq!(cert.order(), h);
            assert_eq!(verify_minor_model(&g, &cert), Ok(()));
            for d in 1..4 {
                let (_, m) = max_clique_minor_bounded(&g, Breadth::new(d).unwrap()).unwrap();
                assert_eq!(verify_minor_model(&g, &m), Ok(()));
                assert!(m.breadth() <= d);
            }
        }
    }
}

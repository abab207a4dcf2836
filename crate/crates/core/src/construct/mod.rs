//! Witness search for dense graphs whose blow-ups have small Hadwiger
//! number, and explicit blow-up handles that never materialize the graph.

pub mod canon;

use serde::{Deserialize, Serialize};

use crate::bounds::hf_upper_from_parts;
use crate::error::{Error, Result};
use crate::graph::{
    blowup_adjacency_oracle, blowup_complete, graph6_encode, random_gnp, BlowupVertex, Graph,
};
use crate::minor::{hadwiger_masks, max_clique_minor_bounded, Breadth};
use crate::rational::Rational;
pub use canon::{
    canonical_code, canonical_form, graph_from_code, isomorphism_classes, CanonicalCode,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Mode {
    /// Edge density at least `p`; bound `h_f(G)` only.
    Mader { p: Rational },
    /// Bound both `h_f(G)` and `h_f` of the complement.
    Thomason,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SearchMode {
    /// One representative per isomorphism class.
    Exhaustive,
    /// `count` seeded graphs, sample `i` drawn with seed `seed + i`.
    Sampled { count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessSpec {
    pub n0: usize,
    pub mode: Mode,
    /// Only accept graphs with no `K_s` minor of breadth at most `d`.
    pub s: Option<usize>,
    /// Fix the breadth instead of choosing the best one per graph.
    pub d: Option<usize>,
    pub search: SearchMode,
}

impl WitnessSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n0 == 0 {
            return Err(Error::InvalidArgument("n0 must be at least 1".into()));
        }
        if self.s == Some(0) || self.d == Some(0) {
            return Err(Error::InvalidArgument("s and d must be at least 1".into()));
        }
        if let Mode::Mader { p } = &self.mode {
            if !(p.is_positive() && *p < Rational::one()) {
                return Err(Error::InvalidArgument(format!(
                    "density p must lie strictly between 0 and 1, got {p}"
                )));
            }
        }
        if self.search == SearchMode::Exhaustive && self.n0 > canon::CLASS_ENUMERATION_CAP {
            return Err(Error::Capacity(format!(
                "exhaustive search needs n0 <= {}",
                canon::CLASS_ENUMERATION_CAP
            )));
        }
        Ok(())
    }

    /// Fewest edges a graph needs to count as density `p`.
    pub fn min_edges(&self) -> usize {
        match &self.mode {
            Mode::Mader { p } => {
                let pairs = Rational::from(self.n0 * self.n0.saturating_sub(1) / 2);
                let need = (p * &pairs).ceil();
                need.try_into().expect("edge counts fit in usize")
            }
            Mode::Thomason => 0,
        }
    }
}

/// Evidence for one side (the graph or its complement).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideEvidence {
    pub d: usize,
    /// Largest clique minor of breadth at most `d`.
    pub s: usize,
    /// `n0/d + d·s`, a certified upper bound on `h_f`.
    pub hf_upper: Rational,
    pub epsilon: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(serialize_with = "ser_graph6", deserialize_with = "de_graph6")]
    pub graph: Graph,
    pub mode: Mode,
    pub evidence: SideEvidence,
    pub complement: Option<SideEvidence>,
    /// The objective: the largest epsilon over the sides considered.
    pub epsilon: Rational,
    /// Isomorphism classes (exhaustive) or samples examined.
    pub examined: usize,
    /// Of those, how many met the density and `s` filters.
    pub feasible: usize,
}

fn ser_graph6<S: serde::Serializer>(g: &Graph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&graph6_encode(g))
}

fn de_graph6<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
    let s = String::deserialize(d)?;
    crate::graph::graph6_decode(&s).map_err(serde::de::Error::custom)
}

/// Best breadth for one side, or `None` when a `K_s` filter rejects it.
fn side(g: &Graph, spec: &WitnessSpec) -> Result<Option<SideEvidence>> {
    let n = g.order();
    let adj = g.masks("witness search")?;
    let ds: Vec<usize> = match spec.d {
        Some(d) => vec![d],
        None => (1..=n).collect(),
    };
    let mut best: Option<SideEvidence> = None;
    for d in ds {
        let (s, _) = hadwiger_masks(&adj, Some(d));
        if spec.d.is_some() && spec.s.is_some_and(|limit| s >= limit) {
            return Ok(None);
        }
        let hf_upper = hf_upper_from_parts(n, d, s);
        if best.as_ref().is_none_or(|b| hf_upper < b.hf_upper) {
            best = Some(SideEvidence {
                d,
                s,
                epsilon: &hf_upper / &Rational::from(n),
                hf_upper,
            });
        }
    }
    if spec.d.is_none() {
        if let Some(limit) = spec.s {
            // Without a fixed breadth the filter is on the chosen one.
            if best.as_ref().is_some_and(|b| b.s >= limit) {
                return Ok(None);
            }
        }
    }
    Ok(best)
}

/// Searches for the graph with the smallest certified epsilon. Ties go to
/// the smaller canonical code.
pub fn search_witness(spec: &WitnessSpec) -> Result<Witness> {
    spec.validate()?;
    let candidates: Vec<Graph> = match &spec.search {
        SearchMode::Exhaustive => isomorphism_classes(spec.n0)?,
        SearchMode::Sampled { count, seed } => {
            let p = match &spec.mode {
                Mode::Mader { p } => p.to_f64(),
                Mode::Thomason => 0.5,
            };
            (0..*count as u64)
                .map(|i| random_gnp(spec.n0, p, seed.wrapping_add(i)))
                .collect::<Result<_>>()?
        }
    };
    let examined = candidates.len();
    let min_edges = spec.min_edges();
    let mut feasible = 0;
    let mut best: Option<(Rational, CanonicalCode, Witness)> = None;
    for g in candidates {
        if g.size() < min_edges {
            continue;
        }
        let Some(ev) = side(&g, spec)? else { continue };
        let comp = match spec.mode {
            Mode::Thomason => match side(&g.complement(), spec)? {
                Some(c) => Some(c),
                None => continue,
            },
            Mode::Mader { .. } => None,
        };
        feasible += 1;
        let epsilon = match &comp {
            Some(c) => ev.epsilon.clone().max(c.epsilon.clone()),
            None => ev.epsilon.clone(),
        };
        let code = canonical_code(&g)?;
        if best
            .as_ref()
            .is_none_or(|(e, c, _)| (&epsilon, &code) < (e, c))
        {
            best = Some((
                epsilon.clone(),
                code,
                Witness {
                    graph: g,
                    mode: spec.mode.clone(),
                    evidence: ev,
                    complement: comp,
                    epsilon,
                    examined: 0,
                    feasible: 0,
                },
            ));
        }
    }
    match best {
        Some((_, _, mut w)) => {
            w.examined = examined;
            w.feasible = feasible;
            Ok(w)
        }
        None => Err(Error::Infeasible(format!(
            "no candidate on {} vertices meets the density and minor filters ({examined} examined)",
            spec.n0
        ))),
    }
}

/// Recomputes a witness's evidence from scratch.
pub fn check_evidence(w: &Witness) -> Result<bool> {
    let recheck = |g: &Graph, ev: &SideEvidence| -> Result<bool> {
        let (s, _) = max_clique_minor_bounded(g, Breadth::new(ev.d)?)?;
        Ok(s == ev.s && hf_upper_from_parts(g.order(), ev.d, s) == ev.hf_upper)
    };
    let mut ok = recheck(&w.graph, &w.evidence)?;
    if let Some(c) = &w.complement {
        ok &= recheck(&w.graph.complement(), c)?;
    }
    Ok(ok)
}

/// The complete blow-up `G[t]` of a witness, answered by the adjacency
/// oracle. Its complement is the blow-up `complement(G)(t)`, so it carries
/// the complement's bound too.
#[derive(Clone, Debug)]
pub struct Construction {
    base: Graph,
    t: usize,
    hf_upper: Rational,
    complement_hf_upper: Option<Rational>,
}

pub fn emit_construction(w: &Witness, t: usize) -> Result<Construction> {
    if t == 0 {
        return Err(Error::InvalidArgument(
            "blow-up factor must be at least 1".into(),
        ));
    }
    Ok(Construction {
        base: w.graph.clone(),
        t,
        hf_upper: w.evidence.hf_upper.clone(),
        complement_hf_upper: w.complement.as_ref().map(|c| c.hf_upper.clone()),
    })
}

impl Construction {
    pub fn order(&self) -> u64 {
        self.base.order() as u64 * self.t as u64
    }

    pub fn factor(&self) -> usize {
        self.t
    }

    /// `h(G[t]) = t·h_t(G) <= t·h_f(G)`, bounded with the witness evidence.
    pub fn hadwiger_bound(&self) -> Rational {
        Rational::from(self.t) * self.hf_upper.clone()
    }

    /// The bound as a fraction of the order.
    pub fn epsilon(&self) -> Rational {
        &self.hadwiger_bound() / &Rational::from(self.order())
    }

    pub fn complement_hadwiger_bound(&self) -> Option<Rational> {
        self.complement_hf_upper
            .as_ref()
            .map(|u| Rational::from(self.t) * u.clone())
    }

    pub fn adjacent(&self, u: u64, v: u64) -> Result<bool> {
        for x in [u, v] {
            if x >= self.order() {
                return Err(Error::Range(format!(
                    "vertex {x} outside the construction of order {}",
                    self.order()
                )));
            }
        }
        blowup_adjacency_oracle(
            &self.base,
            self.t,
            BlowupVertex::from_index(u, self.t),
            BlowupVertex::from_index(v, self.t),
            true,
        )
    }

    /// Edges `u < v` in lexicographic order, generated on demand.
    pub fn edges(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| {
            (u + 1..n).filter_map(move |v| self.adjacent(u, v).expect("in range").then_some((u, v)))
        })
    }

    /// The blow-up as an ordinary graph (subject to the vertex cap).
    pub fn materialize(&self) -> Result<Graph> {
        blowup_complete(&self.base, self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    fn spec(n0: usize, mode: Mode, search: SearchMode) -> WitnessSpec {
        WitnessSpec {
            n0,
            mode,
            s: None,
            d: None,
            search,
        }
    }

    #[test]
    fn thomason_exhaustive_small() {
        let w = search_witness(&spec(4, Mode::Thomason, SearchMode::Exhaustive)).unwrap();
        assert_eq!(w.examined, 11);
        assert!(check_evidence(&w).unwrap());
        let c = emit_construction(&w, 1).unwrap();
        assert_eq!(c.materialize().unwrap(), w.graph);
    }

    #[test]
    fn mader_density_filter() {
        let s = spec(
            5,
            Mode::Mader {
                p: Rational::new(9, 10),
            },
            SearchMode::Exhaustive,
        );
        assert_eq!(s.min_edges(), 9);
        let w = search_witness(&s).unwrap();
        assert_eq!(w.feasible, 2);
        assert!(w.graph.size() >= 9);
        let none = WitnessSpec { s: Some(1), ..s };
        assert!(matches!(search_witness(&none), Err(Error::Infeasible(_))));
    }

    #[test]
    fn sampled_is_deterministic() {
        let s = spec(
            6,
            Mode::Thomason,
            SearchMode::Sampled { count: 40, seed: 3 },
        );
        assert_eq!(search_witness(&s).unwrap(), search_witness(&s).unwrap());
    }

    #[test]
    fn big_handle_answers_queries() {
        let w = search_witness(&spec(
            6,
            Mode::Thomason,
            SearchMode::Sampled { count: 10, seed: 1 },
        ))
        .unwrap();
        let c = emit_construction(&w, 100_000).unwrap();
        assert_eq!(c.order(), 600_000);
        let expected = w.graph.has_edge(0, 5);
        assert_eq!(c.adjacent(17, 599_999).unwrap(), expected);
        assert!(c.adjacent(0, 600_000).is_err());
        let k = emit_construction(
            &Witness {
                graph: complete(2).unwrap(),
                ..w
            },
            3,
        )
        .unwrap();
        assert_eq!(k.edges().count(), 15);
    }
}

//! The inequalities relating `h`, `h_f` and `m`, checked exactly, and the
//! greedy extraction of disjoint members from a weighted bramble.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bramble::TouchingKind;
use crate::error::{Error, Result};
use crate::fractional::{
    evaluate_certificate, fractional_hadwiger, HadwigerValue, WeightedBramble,
};
use crate::graph::{canonical_cmp, graph6_encode, Graph, VertexSet};
use crate::minor::{hadwiger_number, max_clique_minor_bounded, Breadth, MinorModel, Pattern};
use crate::rational::{isqrt_ceil, Rational};

/// Outcome of one inequality. `Undetermined` only arises when `h_f` is known
/// as an interval that straddles the bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Violated,
    Undetermined,
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Undetermined => "undetermined",
        })
    }
}

/// `lhs <= rhs`, or `lhs <= sqrt(rhs)` when `sqrt` is set. The left side may
/// be an interval `[lhs, lhs_upper]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub lhs: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_upper: Option<Rational>,
    pub rhs: Rational,
    pub sqrt: bool,
    pub verdict: Verdict,
}

impl BoundEntry {
    fn new(
        name: &str,
        lhs: Rational,
        lhs_upper: Option<Rational>,
        rhs: Rational,
        sqrt: bool,
    ) -> Self {
        let le = |x: &Rational| if sqrt { x.square() <= rhs } else { *x <= rhs };
        let verdict = if !le(&lhs) {
            Verdict::Violated
        } else if lhs_upper.as_ref().is_none_or(le) {
            Verdict::Holds
        } else {
            Verdict::Undetermined
        };
        BoundEntry {
            name: name.to_string(),
            lhs,
            lhs_upper,
            rhs,
            sqrt,
            verdict,
        }
    }

    /// Equality on both sides, for recording tight cases.
    pub fn is_tight(&self) -> bool {
        self.lhs_upper.is_none()
            && if self.sqrt {
                self.lhs.square() == self.rhs
            } else {
                self.lhs == self.rhs
            }
    }
}

fn hf_interval(hf: &HadwigerValue) -> (Rational, Option<Rational>) {
    if hf.is_exact() {
        (hf.value.clone(), None)
    } else {
        (hf.value.clone(), Some(hf.upper.clone()))
    }
}

/// `h_f <= sqrt(2 h n)`.
pub fn sqrt_bound_entry(n: usize, h: usize, hf: &HadwigerValue) -> BoundEntry {
    let (lo, hi) = hf_interval(hf);
    BoundEntry::new("hf <= sqrt(2hn)", lo, hi, Rational::from(2 * h * n), true)
}

/// `h_f <= sqrt(3m + 1)` and `C(h, 2) <= m`.
pub fn edge_bound_entries(m: usize, h: usize, hf: &HadwigerValue) -> [BoundEntry; 2] {
    let (lo, hi) = hf_interval(hf);
    [
        BoundEntry::new("hf <= sqrt(3m+1)", lo, hi, Rational::from(3 * m + 1), true),
        BoundEntry::new(
            "C(h,2) <= m",
            Rational::from(h * h.saturating_sub(1) / 2),
            None,
            Rational::from(m),
            false,
        ),
    ]
}

pub fn check_sqrt_bound(g: &Graph) -> Result<BoundEntry> {
    let (h, _) = hadwiger_number(g)?;
    let hf = fractional_hadwiger(g, TouchingKind::Weak)?;
    Ok(sqrt_bound_entry(g.order(), h, &hf))
}

pub fn check_edge_bound(g: &Graph) -> Result<[BoundEntry; 2]> {
    let (h, _) = hadwiger_number(g)?;
    let hf = fractional_hadwiger(g, TouchingKind::Weak)?;
    Ok(edge_bound_entries(g.size(), h, &hf))
}

/// Invariants of one graph together with every inequality check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub h: usize,
    pub hf: Rational,
    pub hf_upper: Rational,
    pub hpf: Rational,
    pub hpf_upper: Rational,
    pub entries: Vec<BoundEntry>,
}

pub fn bound_report(g: &Graph) -> Result<BoundReport> {
    let (h, _) = hadwiger_number(g)?;
    let hf = fractional_hadwiger(g, TouchingKind::Weak)?;
    let hpf = fractional_hadwiger(g, TouchingKind::Strong)?;
    let mut entries = vec![sqrt_bound_entry(g.order(), h, &hf)];
    entries.extend(edge_bound_entries(g.size(), h, &hf));
    entries.push(BoundEntry::new(
        "h <= hf",
        Rational::from(h),
        None,
        hf.upper.clone(),
        false,
    ));
    Ok(BoundReport {
        graph: graph6_encode(g),
        n: g.order(),
        m: g.size(),
        h,
        hf: hf.value,
        hf_upper: hf.upper,
        hpf: hpf.value,
        hpf_upper: hpf.upper,
        entries,
    })
}

/// Repeatedly keeps a smallest positive-weight member (first in canonical
/// order) and discards every member meeting it. The kept members are
/// disjoint and pairwise touching, so they form a clique-minor model; there
/// are at least `value² / (2n)` of them.
pub fn greedy_disjoint_extract(g: &Graph, cert: &WeightedBramble) -> Result<MinorModel> {
    evaluate_certificate(g, cert)?;
    let mut pool: Vec<&VertexSet> = cert
        .family
        .sets
        .iter()
        .zip(&cert.weights)
        .filter(|(_, w)| w.is_positive())
        .map(|(s, _)| s)
        .collect();
    pool.sort_by(|a, b| canonical_cmp(a, b));
    let mut kept: Vec<VertexSet> = Vec::new();
    while let Some(&first) = pool.first() {
        kept.push(first.clone());
        pool.retain(|s| !s.intersects(first));
    }
    Ok(MinorModel {
        host_n: g.order(),
        pattern: Pattern::CliqueOrder(kept.len()),
        branch_sets: kept,
    })
}

/// The guaranteed size `ceil(value² / (2n))` of the greedy extraction.
pub fn extraction_lower_bound(n: usize, value: &Rational) -> BigInt {
    (value.square() / Rational::from(2 * n)).ceil()
}

/// `h(G) <= eps·n`.
pub fn epsilon_hadwiger_check(g: &Graph, eps: &Rational) -> Result<bool> {
    let (h, _) = hadwiger_number(g)?;
    Ok(Rational::from(h) <= eps * &Rational::from(g.order()))
}

/// `n/d + d·s` with `s` the largest clique minor of breadth at most `d`.
/// Members with more than `d` vertices carry total weight at most `n/d`;
/// the remaining ones yield a breadth-`d` clique minor greedily.
pub fn hf_upper_from_bounded(g: &Graph, d: Breadth) -> Result<Rational> {
    let (s, _) = max_clique_minor_bounded(g, d)?;
    Ok(hf_upper_from_parts(g.order(), d.get(), s))
}

pub(crate) fn hf_upper_from_parts(n: usize, d: usize, s: usize) -> Rational {
    Rational::new(n as i64, d as i64) + Rational::from(d * s)
}

/// Cheap certified upper bound on `h_f`: the least of `n`,
/// `ceil(sqrt(3m+1))` and `ceil(sqrt(2hn))`.
pub fn hf_upper_bound(g: &Graph) -> Result<Rational> {
    let n = g.order();
    let (h, _) = hadwiger_number(g)?;
    let a = isqrt_ceil(&BigInt::from(3 * g.size() + 1));
    let b = isqrt_ceil(&BigInt::from(2 * h * n));
    let best = a.min(b).min(BigInt::from(n));
    if best < BigInt::from(h) {
        return Err(Error::InvalidArgument("upper bound below h".into()));
    }
    Ok(Rational::from(best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bramble::{grid_cross_certificate, BrambleFamily};
    use crate::graph::{complete, cycle, grid};
    use crate::minor::verify_minor_model;

    #[test]
    fn spec_examples() {
        let k5 = complete(5).unwrap();
        let e = check_sqrt_bound(&k5).unwrap();
        assert_eq!(
            (e.lhs.square(), e.rhs.clone(), e.verdict),
            (Rational::from(25u64), Rational::from(50u64), Verdict::Holds)
        );
        let c4 = cycle(4).unwrap();
        assert_eq!(check_sqrt_bound(&c4).unwrap().rhs, Rational::from(24u64));
        let [a, b] = check_edge_bound(&c4).unwrap();
        assert!(a.verdict.holds() && b.verdict.holds());
        assert_eq!(a.rhs, Rational::from(13u64));
        let [a, _] = check_edge_bound(&complete(1).unwrap()).unwrap();
        assert!(a.is_tight());
        let [_, b] = check_edge_bound(&complete(4).unwrap()).unwrap();
        assert!(b.is_tight());
        assert!(check_sqrt_bound(&grid(3).unwrap()).unwrap().verdict.holds());
    }

    #[test]
    fn epsilon_checks() {
        let g = grid(3).unwrap();
        assert!(epsilon_hadwiger_check(&g, &Rational::new(1, 2)).unwrap());
        assert!(!epsilon_hadwiger_check(&g, &Rational::new(1, 3)).unwrap());
        assert!(epsilon_hadwiger_check(&complete(6).unwrap(), &Rational::one()).unwrap());
    }

    #[test]
    fn extraction_examples() {
        let g = grid(4).unwrap();
        let (sets, weights) = grid_cross_certificate(4).unwrap();
        let cert = WeightedBramble {
            family: BrambleFamily {
                host_n: 16,
                sets,
                kind: TouchingKind::Weak,
            },
            weights,
        };
        let model = greedy_disjoint_extract(&g, &cert).unwrap();
        assert!(model.order() >= 1);
        assert_eq!(verify_minor_model(&g, &model), Ok(()));
        let empty = WeightedBramble {
            family: BrambleFamily {
                host_n: 16,
                sets: vec![],
                kind: TouchingKind::Weak,
            },
            weights: vec![],
        };
        assert_eq!(greedy_disjoint_extract(&g, &empty).unwrap().order(), 0);
        assert_eq!(
            extraction_lower_bound(3, &Rational::from(3u64)),
            BigInt::from(2)
        );
    }

    #[test]
    fn bounded_breadth_upper_bound() {
        assert_eq!(
            hf_upper_from_bounded(&complete(1).unwrap(), Breadth::new(1).unwrap()).unwrap(),
            Rational::from(2u64)
        );
        assert_eq!(
            hf_upper_from_bounded(&cycle(4).unwrap(), Breadth::new(4).unwrap()).unwrap(),
            Rational::from(13u64)
        );
    }

    #[test]
    fn interval_verdicts() {
        let e = BoundEntry::new(
            "x",
            Rational::from(2u64),
            Some(Rational::from(4u64)),
            Rational::from(9u64),
            true,
        );
        assert_eq!(e.verdict, Verdict::Undetermined);
        let e = BoundEntry::new(
            "x",
            Rational::from(4u64),
            Some(Rational::from(5u64)),
            Rational::from(9u64),
            true,
        );
        assert_eq!(e.verdict, Verdict::Violated);
    }
}

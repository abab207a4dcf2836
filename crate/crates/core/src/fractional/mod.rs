//! Exact fractional and `r`-integral Hadwiger numbers with rational
//! certificates.

pub(crate) mod ilp;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::bramble::cliques::{self, CliqueObjective};
use crate::bramble::{
    touch_graph, touch_graph_over, BrambleFamily, BrambleViolation, TouchingKind,
};
use crate::error::{Error, Result};
use crate::graph::{blowup_complete, Graph, VertexSet};
use crate::lp::LinearProgram;
use crate::minor::{hadwiger_number, parse_set_line, MinorModel};
use crate::rational::Rational;
use ilp::Item;

/// A bramble with one exact weight per member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedBramble {
    pub family: BrambleFamily,
    pub weights: Vec<Rational>,
}

impl WeightedBramble {
    pub fn value(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// Header `weighted-bramble <n> <kind>`, then `p/q: v1 v2 ...` lines.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "weighted-bramble {} {}\n",
            self.family.host_n, self.family.kind
        );
        for (s, w) in self.family.sets.iter().zip(&self.weights) {
            out.push_str(&format!("{w}: {s}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().unwrap_or_default();
        let (host_n, kind) = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["weighted-bramble", n, kind] => (
                n.parse::<usize>()
                    .map_err(|_| parse_err("bad host order"))?,
                kind.parse::<TouchingKind>()?,
            ),
            _ => return Err(parse_err("expected `weighted-bramble <n> weak|strong`")),
        };
        let mut sets = Vec::new();
        let mut weights = Vec::new();
        for line in lines {
            let (w, rest) = line
                .split_once(':')
                .ok_or_else(|| parse_err("expected `p/q: v1 v2 ...`"))?;
            weights.push(w.trim().parse::<Rational>()?);
            sets.push(parse_set_line(host_n, rest)?);
        }
        Ok(WeightedBramble {
            family: BrambleFamily { host_n, sets, kind },
            weights,
        })
    }
}

fn parse_err(message: &str) -> Error {
    Error::Parse {
        offset: 0,
        message: message.to_string(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exact,
    LowerBound,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Exact => "exact",
            Status::LowerBound => "lower-bound",
        })
    }
}

/// A certified value. When the search stopped early `value` is only a lower
/// bound and `upper` closes the interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HadwigerValue {
    pub value: Rational,
    pub status: Status,
    pub certificate: WeightedBramble,
    /// Fractional vertex cover matching `value` on the certificate's support.
    pub dual: Option<Vec<Rational>>,
    pub upper: Rational,
}

impl HadwigerValue {
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpWeights {
    pub opt: Rational,
    pub weights: Vec<Rational>,
    /// Optimal fractional vertex cover; sums to `opt`.
    pub dual: Vec<Rational>,
}

/// Maximize the total weight of `sets` with every vertex load at most 1.
pub fn lp_max_weight(n: usize, sets: &[VertexSet]) -> Result<LpWeights> {
    if let Some(s) = sets.iter().find(|s| s.host_n() != n) {
        return Err(Error::InvalidArgument(format!(
            "set for a host of order {} in an LP over {n} vertices",
            s.host_n()
        )));
    }
    let mut lp = LinearProgram::new(vec![Rational::one(); n]);
    for s in sets {
        lp.add_column(
            Rational::one(),
            s.members().iter().map(|&v| (v, Rational::one())).collect(),
        );
    }
    let sol = lp.solve()?;
    Ok(LpWeights {
        opt: sol.objective,
        weights: sol.primal,
        dual: sol.dual,
    })
}

fn lp_over_masks(n: usize, sets: &[Mask]) -> (Rational, Vec<Rational>, Vec<Rational>) {
    let mut lp = LinearProgram::new(vec![Rational::one(); n]);
    for &s in sets {
        lp.add_column(
            Rational::one(),
            bits::iter(s).map(|v| (v, Rational::one())).collect(),
        );
    }
    let sol = lp.solve().expect("packing LPs are feasible and bounded");
    (sol.objective, sol.primal, sol.dual)
}

/// Knobs for the maximal-bramble sweep.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchLimits {
    /// Stop after this many branch-and-bound nodes, reporting a lower bound.
    pub node_budget: Option<u64>,
    /// Only consider members with at most this many vertices; the result
    /// is then a lower bound unless the cap is at least `n`.
    pub max_set_size: Option<usize>,
}

struct Fractional<'a> {
    n: usize,
    sets: &'a [Mask],
}

impl Fractional<'_> {
    fn minimal(&self, family: &[usize]) -> Vec<Mask> {
        let masks: Vec<Mask> = family.iter().map(|&i| self.sets[i]).collect();
        cliques::minimal_members(&masks)
    }
}

impl CliqueObjective for Fractional<'_> {
    type Value = Rational;

    fn score(&mut self, family: &[usize]) -> Rational {
        lp_over_masks(self.n, &self.minimal(family)).0
    }

    fn may_beat(&mut self, family: &[usize], best: &Rational) -> bool {
        let minimal = self.minimal(family);
        // The hitting number bounds the LP from above and is cheap.
        let greedy = bits::count(cliques::greedy_hitting_set(&minimal));
        if Rational::from(greedy) <= *best {
            return false;
        }
        lp_over_masks(self.n, &minimal).0 > *best
    }
}

/// `h_f` for weak touching, `h'_f` for strong touching.
pub fn fractional_hadwiger(g: &Graph, kind: TouchingKind) -> Result<HadwigerValue> {
    fractional_hadwiger_with(g, kind, SearchLimits::default())
}

pub fn fractional_hadwiger_with(
    g: &Graph,
    kind: TouchingKind,
    limits: SearchLimits,
) -> Result<HadwigerValue> {
    let n = g.order();
    let adj = g.masks("fractional Hadwiger number")?;
    let tg = touch_graph(&adj, kind, limits.max_set_size)?;
    let mut obj = Fractional { n, sets: &tg.sets };
    let found = tg.best_clique(&mut obj, limits.node_budget);
    let family = found.best.map(|(_, f)| f).unwrap_or_default();
    let minimal = obj.minimal(&family);
    let (opt, weights, dual) = lp_over_masks(n, &minimal);
    let (sets, weights): (Vec<Mask>, Vec<Rational>) = minimal
        .into_iter()
        .zip(weights)
        .filter(|(_, w)| w.is_positive())
        .unzip();
    let certificate = WeightedBramble {
        family: BrambleFamily {
            host_n: n,
            sets: sets
                .into_iter()
                .map(|m| VertexSet::from_mask(n, m))
                .collect(),
            kind,
        },
        weights,
    };
    let complete = found.complete && limits.max_set_size.is_none_or(|d| d >= n);
    if complete {
        Ok(HadwigerValue {
            upper: opt.clone(),
            value: opt,
            status: Status::Exact,
            certificate,
            dual: Some(dual),
        })
    } else {
        let mut upper = crate::bounds::hf_upper_bound(g)?;
        if kind == TouchingKind::Strong {
            // h'_f <= n / 2: every member has two vertices.
            upper = upper.min(Rational::new(n as i64, 2));
        }
        Ok(HadwigerValue {
            value: opt,
            status: Status::LowerBound,
            certificate,
            dual: Some(dual),
            upper,
        })
    }
}

struct Integral<'a> {
    n: usize,
    r: u64,
    items: &'a [Item],
}

impl Integral<'_> {
    fn reduced(&self, family: &[usize]) -> Vec<Item> {
        let items: Vec<Item> = family.iter().map(|&i| self.items[i]).collect();
        ilp::undominated(&items)
            .into_iter()
            .map(|i| items[i])
            .collect()
    }
}

impl CliqueObjective for Integral<'_> {
    type Value = u64;

    fn score(&mut self, family: &[usize]) -> u64 {
        ilp::solve(self.n, self.r, &self.reduced(family)).0
    }

    fn may_beat(&mut self, family: &[usize], best: &u64) -> bool {
        let items = self.reduced(family);
        let sets: Vec<Mask> = items.iter().map(|it| it.set).collect();
        let greedy = bits::count(cliques::greedy_hitting_set(&sets)) as u64;
        self.r * greedy > *best && ilp::relaxation_bound(self.n, self.r, &items) > *best
    }
}

/// `h_r` with every weight a multiple of `1/r`, by branch and bound over the
/// integer multiplicities `k_B = r·w(B)`.
///
/// Strong touching computes `h'_r`, read with multiplicities: two distinct
/// members must be joined by an edge, and a member may carry more than `1/r`
/// only if it contains an edge. This is the reading for which
/// `h(G(r)) = r·h'_r(G)` holds.
pub fn r_integral_hadwiger_via_ilp(
    g: &Graph,
    r: u64,
    kind: TouchingKind,
) -> Result<(Rational, WeightedBramble)> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let n = g.order();
    let adj = g.masks("r-integral Hadwiger number")?;
    let tg = touch_graph_over(&adj, kind, None, false)?;
    let items: Vec<Item> = tg
        .sets
        .iter()
        .map(|&s| Item {
            set: s,
            cap: match kind {
                TouchingKind::Strong if bits::count(s) == 1 => Some(1),
                _ => None,
            },
        })
        .collect();
    let mut obj = Integral {
        n,
        r,
        items: &items,
    };
    let found = tg.best_clique(&mut obj, None);
    let family = found.best.map(|(_, f)| f).unwrap_or_default();
    let reduced = obj.reduced(&family);
    let (total, ks) = ilp::solve(n, r, &reduced);
    let rr = Rational::from(r);
    let (sets, weights): (Vec<VertexSet>, Vec<Rational>) = reduced
        .iter()
        .zip(&ks)
        .filter(|(_, &k)| k > 0)
        .map(|(it, &k)| {
            (
                VertexSet::from_mask(n, it.set),
                Rational::from(k) / rr.clone(),
            )
        })
        .unzip();
    let cert = WeightedBramble {
        family: BrambleFamily {
            host_n: n,
            sets,
            kind,
        },
        weights,
    };
    Ok((Rational::from(total) / rr, cert))
}

/// `h(G[r]) / r` by minor search on the complete blow-up.
pub fn r_integral_hadwiger_via_blowup(g: &Graph, r: u64) -> Result<(Rational, MinorModel)> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let big = blowup_complete(g, r as usize)?;
    let (h, model) = hadwiger_number(&big)?;
    Ok((Rational::new(h as i64, r as i64), model))
}

/// Projects a clique-minor model of `G[r]` (or `G(r)`) onto `G`: each branch
/// set becomes the set of base vertices it uses, with weight `1/r` per copy.
pub fn project_blowup_model(
    g: &Graph,
    r: u64,
    model: &MinorModel,
    kind: TouchingKind,
) -> Result<WeightedBramble> {
    let n = g.order();
    if r == 0 || model.host_n != n * r as usize {
        return Err(Error::InvalidArgument(format!(
            "model on {} vertices is not on a blow-up of order {n}·{r}",
            model.host_n
        )));
    }
    let mut projected: Vec<(Mask, u64)> = Vec::new();
    for bs in &model.branch_sets {
        let m = bs
            .members()
            .iter()
            .fold(0, |acc, &x| acc | bits::bit(x / r as usize));
        match projected.iter_mut().find(|(s, _)| *s == m) {
            Some((_, c)) => *c += 1,
            None => projected.push((m, 1)),
        }
    }
    projected.sort_by(|a, b| crate::bramble::mask_cmp(a.0, b.0));
    let rr = Rational::from(r);
    Ok(WeightedBramble {
        family: BrambleFamily {
            host_n: n,
            sets: projected
                .iter()
                .map(|&(m, _)| VertexSet::from_mask(n, m))
                .collect(),
            kind,
        },
        weights: projected
            .iter()
            .map(|&(_, c)| Rational::from(c) / rr.clone())
            .collect(),
    })
}

/// Validates the certificate and returns its exact value.
pub fn evaluate_certificate(g: &Graph, cert: &WeightedBramble) -> Result<Rational> {
    check_certificate(g, cert, None)
}

/// Like [`evaluate_certificate`] but also requires weights in `(1/r)·Z` and,
/// for strong certificates, lets an edgeless member carry weight `1/r`.
pub fn evaluate_integral_certificate(
    g: &Graph,
    cert: &WeightedBramble,
    r: u64,
) -> Result<Rational> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    if let Some(i) = cert.weights.iter().position(|w| !w.is_multiple_of_recip(r)) {
        return Err(Error::InvalidCertificate(format!(
            "weight {} of set {i} is not a multiple of 1/{r}",
            cert.weights[i]
        )));
    }
    check_certificate(g, cert, Some(r))
}

fn check_certificate(g: &Graph, cert: &WeightedBramble, relaxed: Option<u64>) -> Result<Rational> {
    let n = g.order();
    let fam = &cert.family;
    let invalid = |v: BrambleViolation| Error::InvalidCertificate(v.to_string());
    if fam.host_n != n {
        return Err(invalid(BrambleViolation::HostMismatch {
            family: fam.host_n,
            graph: n,
        }));
    }
    if fam.sets.len() != cert.weights.len() {
        return Err(Error::InvalidCertificate(format!(
            "{} sets but {} weights",
            fam.sets.len(),
            cert.weights.len()
        )));
    }
    if let Some(i) = cert.weights.iter().position(Rational::is_negative) {
        return Err(Error::InvalidCertificate(format!(
            "negative weight on set {i}"
        )));
    }
    for (i, s) in fam.sets.iter().enumerate() {
        if s.host_n() != n {
            return Err(invalid(BrambleViolation::HostMismatch {
                family: s.host_n(),
                graph: n,
            }));
        }
        if s.is_empty() {
            return Err(invalid(BrambleViolation::EmptySet { index: i }));
        }
        if !g.induces_connected(s) {
            return Err(invalid(BrambleViolation::Disconnected { index: i }));
        }
    }
    for i in 0..fam.sets.len() {
        for j in i..fam.sets.len() {
            let ok = if i == j {
                match (fam.kind, relaxed) {
                    (TouchingKind::Weak, _) => true,
                    (TouchingKind::Strong, r) => {
                        crate::bramble::touches(g, &fam.sets[i], &fam.sets[i], fam.kind)
                            || r.is_some_and(|r| cert.weights[i] <= Rational::new(1, r as i64))
                    }
                }
            } else {
                crate::bramble::touches(g, &fam.sets[i], &fam.sets[j], fam.kind)
            };
            if !ok {
                return Err(invalid(BrambleViolation::NotTouching {
                    first: i,
                    second: j,
                }));
            }
        }
    }
    let mut load = vec![Rational::zero(); n];
    for (s, w) in fam.sets.iter().zip(&cert.weights) {
        for &v in s.members() {
            load[v] += w;
        }
    }
    if let Some(v) = (0..n).find(|&v| load[v] > Rational::one()) {
        return Err(Error::InvalidCertificate(format!(
            "vertex overload: load {} at vertex {v}",
            load[v]
        )));
    }
    Ok(cert.value())
}

//! Clique machinery over the touching relation between vertex sets.

use crate::bits::{self, Mask};

/// Dense bit set over `0..len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn and_not(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn and_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
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
}

/// Sets as graph vertices, joined when they touch.
pub(crate) struct TouchGraph {
    pub sets: Vec<Mask>,
    pub adj: Vec<BitSet>,
}

impl TouchGraph {
    /// `touch(a, b)` decides adjacency for `a != b`.
    pub fn build(sets: Vec<Mask>, touch: impl Fn(Mask, Mask) -> bool) -> Self {
        let k = sets.len();
        let mut adj = vec![BitSet::new(k); k];
        for i in 0..k {
            for j in i + 1..k {
                if touch(sets[i], sets[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        TouchGraph { sets, adj }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    fn pivot(&self, p: &BitSet, x: &BitSet) -> usize {
        p.iter()
            .chain(x.iter())
            .max_by_key(|&u| (p.and_count(&self.adj[u]), std::cmp::Reverse(u)))
            .expect("pivot is only chosen from a nonempty P or X")
    }

    /// Every maximal clique, sorted, in a deterministic order: the top level
    /// follows a degeneracy ordering, deeper levels use Tomita pivoting.
    /// Returns `None` when more than `cap` cliques exist.
    pub fn maximal_cliques(&self, cap: usize) -> Option<Vec<Vec<usize>>> {
        let k = self.len();
        let mut out = Vec::new();
        if k == 0 {
            return Some(out);
        }
        let order = self.degeneracy_order();
        let mut p = BitSet::full(k);
        let mut x = BitSet::new(k);
        for v in order {
            p.remove(v);
            let mut r = vec![v];
            if !self.bk(
                &mut r,
                self.adj[v].and(&p),
                self.adj[v].and(&x),
                &mut out,
                cap,
            ) {
                return None;
            }
            x.insert(v);
        }
        for c in &mut out {
            c.sort_unstable();
        }
        Some(out)
    }

    fn bk(
        &self,
        r: &mut Vec<usize>,
        mut p: BitSet,
        mut x: BitSet,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> bool {
        if p.is_empty() {
            if x.is_empty() {
                if out.len() == cap {
                    return false;
                }
                out.push(r.clone());
            }
            return true;
        }
        let u = self.pivot(&p, &x);
        let cands: Vec<usize> = p.and_not(&self.adj[u]).iter().collect();
        for v in cands {
            r.push(v);
            let ok = self.bk(r, p.and(&self.adj[v]), x.and(&self.adj[v]), out, cap);
            r.pop();
            if !ok {
                return false;
            }
            p.remove(v);
            x.insert(v);
        }
        true
    }

    fn degeneracy_order(&self) -> Vec<usize> {
        let k = self.len();
        let mut deg: Vec<usize> = self.adj.iter().map(BitSet::len).collect();
        let mut done = vec![false; k];
        let mut order = Vec::with_capacity(k);
        for _ in 0..k {
            let v = (0..k)
                .filter(|&v| !done[v])
                .min_by_key(|&v| (deg[v], v))
                .expect("vertices remain");
            done[v] = true;
            order.push(v);
            for u in self.adj[v].iter() {
                if !done[u] {
                    deg[u] -= 1;
                }
            }
        }
        order
    }

    /// Branch and bound for the clique maximizing a monotone objective.
    pub fn best_clique<O: CliqueObjective>(
        &self,
        obj: &mut O,
        node_budget: Option<u64>,
    ) -> BestClique<O::Value> {
        let mut st = BnB {
            tg: self,
            obj,
            best: None,
            nodes: 0,
            budget: node_budget,
            exhausted: false,
        };
        let mut r = Vec::new();
        st.go(&mut r, BitSet::full(self.len()), BitSet::new(self.len()));
        BestClique {
            best: st.best,
            complete: !st.exhausted,
        }
    }
}

/// An objective that never decreases when sets are added to the family.
pub(crate) trait CliqueObjective {
    type Value: Ord + Clone;
    fn score(&mut self, family: &[usize]) -> Self::Value;
    /// May any clique inside `family` score strictly above `best`?
    fn may_beat(&mut self, family: &[usize], best: &Self::Value) -> bool;
}

pub(crate) struct BestClique<V> {
    pub best: Option<(V, Vec<usize>)>,
    pub complete: bool,
}

struct BnB<'a, O: CliqueObjective> {
    tg: &'a TouchGraph,
    obj: &'a mut O,
    best: Option<(O::Value, Vec<usize>)>,
    nodes: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl<O: CliqueObjective> BnB<'_, O> {
    fn go(&mut self, r: &mut Vec<usize>, mut p: BitSet, mut x: BitSet) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                self.exhausted = true;
                return;
            }
        }
        if p.is_empty() {
            if x.is_empty() {
                let v = self.obj.score(r);
                if self.best.as_ref().is_none_or(|(b, _)| v > *b) {
                    let mut fam = r.clone();
                    fam.sort_unstable();
                    self.best = Some((v, fam));
                }
            }
            return;
        }
        if let Some((b, _)) = &self.best {
            let mut fam: Vec<usize> = r.clone();
            fam.extend(p.iter());
            let b = b.clone();
            if !self.obj.may_beat(&fam, &b) {
                return;
            }
        }
        let u = self.tg.pivot(&p, &x);
        let cands: Vec<usize> = p.and_not(&self.tg.adj[u]).iter().collect();
        for v in cands {
            r.push(v);
            let np = p.and(&self.tg.adj[v]);
            let nx = x.and(&self.tg.adj[v]);
            self.go(r, np, nx);
            r.pop();
            p.remove(v);
            x.insert(v);
            if self.exhausted {
                return;
            }
        }
    }
}

/// Minimum number of vertices meeting every set (exhaustive; sets are masks
/// over at most `n <= 32` vertices).
pub(crate) fn min_hitting_set(n: usize, family: &[Mask]) -> (usize, Mask) {
    let minimal = minimal_members(family);
    if minimal.is_empty() {
        return (0, 0);
    }
    let greedy = greedy_hitting_set(&minimal);
    let mut best = (bits::count(greedy), greedy);
    for size in 1..best.0 {
        if let Some(h) = hitting_set_of_size(n, &minimal, size) {
            best = (size, h);
            break;
        }
    }
    best
}

/// Inclusion-minimal members, deduplicated.
pub(crate) fn minimal_members(family: &[Mask]) -> Vec<Mask> {
    let mut sorted: Vec<Mask> = family.to_vec();
    sorted.sort_by_key(|&m| (bits::count(m), m));
    sorted.dedup();
    let mut out: Vec<Mask> = Vec::new();
    for m in sorted {
        if !out.iter().any(|&s| s & !m == 0) {
            out.push(m);
        }
    }
    out
}

pub(crate) fn greedy_hitting_set(family: &[Mask]) -> Mask {
    let mut left: Vec<Mask> = family.to_vec();
    let mut hit: Mask = 0;
    while !left.is_empty() {
        let all = left.iter().fold(0, |a, &m| a | m);
        let v = bits::iter(all)
            .max_by_key(|&v| {
                (
                    left.iter().filter(|&&m| m >> v & 1 == 1).count(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("nonempty sets");
        hit |= bits::bit(v);
        left.retain(|&m| m >> v & 1 == 0);
    }
    hit
}

/// A hitting set with exactly `size` vertices, first in colex order.
pub(crate) fn hitting_set_of_size(n: usize, family: &[Mask], size: usize) -> Option<Mask> {
    if size == 0 {
        return family.is_empty().then_some(0);
    }
    if size > n {
        return None;
    }
    let mut c: u64 = (1u64 << size) - 1;
    let limit = 1u64 << n;
    while c < limit {
        let m = c as Mask;
        if family.iter().all(|&s| s & m != 0) {
            return Some(m);
        }
        // Gosper's hack: next integer with the same popcount.
        let lo = c & c.wrapping_neg();
        let ripple = c + lo;
        c = (((ripple ^ c) >> 2) / lo) | ripple;
    }
    None
}

//! Integer packing over a bramble support: maximize the total multiplicity
//! `sum k_B` with `sum_{B ∋ v} k_B <= r` and optional per-set caps.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::bits::{self, Mask};
use crate::lp::LinearProgram;
use crate::rational::Rational;

/// One candidate member; `cap` bounds its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Item {
    pub set: Mask,
    pub cap: Option<u64>,
}

/// Drops members another member dominates: a subset with at least the same
/// cap does everything the superset does at no more load.
pub(crate) fn undominated(items: &[Item]) -> Vec<usize> {
    let cap_ge = |a: Option<u64>, b: Option<u64>| match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x >= y,
    };
    (0..items.len())
        .filter(|&i| {
            !(0..items.len()).any(|j| {
                let (a, b) = (items[j], items[i]);
                j != i
                    && a.set & b.set == a.set
                    && cap_ge(a.cap, b.cap)
                    && (a.set != b.set || a.cap != b.cap || j < i)
            })
        })
        .collect()
}

/// LP relaxation with lower bounds `lo` (substituted out) and upper bounds
/// `hi`. `None` when the bounds are inconsistent with the loads.
pub(crate) fn relaxation(
    n: usize,
    r: u64,
    items: &[Item],
    lo: &[u64],
    hi: &[Option<u64>],
) -> Option<(Rational, Vec<Rational>)> {
    let mut rhs = Vec::with_capacity(n);
    for v in 0..n {
        let used: u64 = items
            .iter()
            .zip(lo)
            .filter(|(it, _)| it.set >> v & 1 == 1)
            .map(|(_, &l)| l)
            .sum();
        if used > r {
            return None;
        }
        rhs.push(Rational::from(r - used));
    }
    let mut cap_rows = Vec::new();
    for (i, h) in hi.iter().enumerate() {
        if let Some(h) = *h {
            if h < lo[i] {
                return None;
            }
            cap_rows.push((i, h - lo[i]));
        }
    }
    for &(_, slack) in &cap_rows {
        rhs.push(Rational::from(slack));
    }
    let mut lp = LinearProgram::new(rhs);
    for (i, it) in items.iter().enumerate() {
        let mut entries: Vec<(usize, Rational)> =
            bits::iter(it.set).map(|v| (v, Rational::one())).collect();
        if let Some(row) = cap_rows.iter().position(|&(j, _)| j == i) {
            entries.push((n + row, Rational::one()));
        }
        lp.add_column(Rational::one(), entries);
    }
    let sol = lp.solve().expect("packing LPs are feasible and bounded");
    let shift: u64 = lo.iter().sum();
    let x: Vec<Rational> = sol
        .primal
        .iter()
        .zip(lo)
        .map(|(y, &l)| y + &Rational::from(l))
        .collect();
    Some((sol.objective + Rational::from(shift), x))
}

/// Upper bound on the integer optimum: the floor of the relaxation.
pub(crate) fn relaxation_bound(n: usize, r: u64, items: &[Item]) -> u64 {
    let hi: Vec<Option<u64>> = items.iter().map(|it| it.cap).collect();
    let lo = vec![0; items.len()];
    let (v, _) = relaxation(n, r, items, &lo, &hi).expect("zero lower bounds are feasible");
    to_u64(&v.floor())
}

fn to_u64(x: &BigInt) -> u64 {
    x.to_u64()
        .expect("multiplicities are small non-negative integers")
}

struct Node {
    bound: Rational,
    seq: Reverse<u64>,
    lo: Vec<u64>,
    hi: Vec<Option<u64>>,
    x: Vec<Rational>,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.bound == other.bound && self.seq == other.seq
    }
}
impl Eq for Node {}
impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Node {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (&self.bound, self.seq).cmp(&(&other.bound, other.seq))
    }
}

/// Exact integer optimum and multiplicities. Best-bound order, branching on
/// the first fractional member, down branch first.
pub(crate) fn solve(n: usize, r: u64, items: &[Item]) -> (u64, Vec<u64>) {
    let k = items.len();
    let mut best: (u64, Vec<u64>) = (0, vec![0; k]);
    let mut seq = 0u64;
    let mut heap = BinaryHeap::new();
    let hi0: Vec<Option<u64>> = items.iter().map(|it| it.cap).collect();
    let lo0 = vec![0; k];
    if let Some((bound, x)) = relaxation(n, r, items, &lo0, &hi0) {
        heap.push(Node {
            bound,
            seq: Reverse(seq),
            lo: lo0,
            hi: hi0,
            x,
        });
    }
    while let Some(node) = heap.pop() {
        if to_u64(&node.bound.floor()) <= best.0 {
            break;
        }
        match node.x.iter().position(|v| !v.is_integer()) {
            None => {
                let ks: Vec<u64> = node.x.iter().map(|v| to_u64(v.numer())).collect();
                let total: u64 = ks.iter().sum();
                if total > best.0 {
                    best = (total, ks);
                }
            }
            Some(i) => {
                let f = to_u64(&node.x[i].floor());
                let mut down_hi = node.hi.clone();
                down_hi[i] = Some(f);
                let mut up_lo = node.lo.clone();
                up_lo[i] = f + 1;
                for (lo, hi) in [(node.lo.clone(), down_hi), (up_lo, node.hi.clone())] {
                    if let Some((bound, x)) = relaxation(n, r, items, &lo, &hi) {
                        seq += 1;
                        heap.push(Node {
                            bound,
                            seq: Reverse(seq),
                            lo,
                            hi,
                            x,
                        });
                    }
                }
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn item(set: Mask) -> Item {
        Item { set, cap: None }
    }

    #[test]
    fn triangle_edges() {
        // Three pairwise-meeting edges of a triangle: LP 3/2, ILP 1 at r = 1,
        // 3 at r = 2.
        let items = [item(0b011), item(0b110), item(0b101)];
        assert_eq!(solve(3, 1, &items).0, 1);
        assert_eq!(solve(3, 2, &items).0, 3);
        assert_eq!(relaxation_bound(3, 1, &items), 1);
    }

    #[test]
    fn caps_bind() {
        let items = [Item {
            set: 0b1,
            cap: Some(1),
        }];
        assert_eq!(solve(1, 3, &items), (1, vec![1]));
        assert_eq!(solve(1, 3, &[item(0b1)]), (3, vec![3]));
    }

    #[test]
    fn domination() {
        let items = [
            item(0b11),
            item(0b01),
            Item {
                set: 0b10,
                cap: Some(1),
            },
            item(0b01),
        ];
        assert_eq!(undominated(&items), vec![1, 2]);
    }
}

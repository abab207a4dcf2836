//! Branch-and-bound search for minor models.
//!
//! Vertices are visited in descending-degree order (ties by index). Each one
//! joins an existing branch set, opens a new one, or (when unused vertices are
//! allowed) is left out. A partial assignment is pruned as soon as a branch
//! set can no longer become connected through unassigned vertices, a required
//! pair of branch sets can no longer be joined, or too few unassigned vertices
//! remain to fill the missing branch sets.
//!
//! On a connected host without a breadth bound every model extends to one
//! covering all vertices (absorb leftovers into an adjacent branch set), so
//! that case runs without the "unused" option.
//!
//! Twins (vertices with equal neighbourhoods apart from each other) that sit
//! next to each other in the visiting order can be swapped by an automorphism,
//! so the later twin never takes a choice ranked below the earlier twin's
//! (existing branch sets by index, then the newly opened one, then "unused").

use crate::bits::{self, Mask};

pub(crate) struct Problem<'a> {
    pub adj: &'a [Mask],
    /// Restrict the search to these host vertices.
    pub within: Mask,
    pub slots: usize,
    /// `required[i]` has bit `j` set when branch sets `i` and `j` must be joined.
    pub required: Vec<Mask>,
    /// Branch sets are interchangeable (clique patterns): open them in order.
    pub interchangeable: bool,
    pub breadth: Option<usize>,
    pub allow_unused: bool,
}

const UNUSED: usize = usize::MAX;

struct State<'a> {
    p: &'a Problem<'a>,
    order: Vec<usize>,
    twin_prev: Vec<bool>,
    keys: Vec<usize>,
    sets: Vec<Mask>,
    opened: usize,
    nodes: u64,
}

pub(crate) fn search(p: &Problem<'_>) -> Option<Vec<Mask>> {
    if p.slots == 0 {
        return Some(Vec::new());
    }
    if bits::count(p.within) < p.slots {
        return None;
    }
    let mut st = State::new(p);
    if st.dfs(0, p.within) {
        Some(st.sets)
    } else {
        None
    }
}

impl<'a> State<'a> {
    fn new(p: &'a Problem<'a>) -> Self {
        let mut order: Vec<usize> = bits::iter(p.within).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(bits::count(p.adj[v] & p.within)), v));
        let twins = |u: usize, v: usize| {
            p.adj[u] & p.within & !bits::bit(v) == p.adj[v] & p.within & !bits::bit(u)
        };
        let twin_prev = (0..order.len())
            .map(|i| i > 0 && twins(order[i - 1], order[i]))
            .collect();
        State {
            p,
            keys: vec![UNUSED; order.len()],
            order,
            twin_prev,
            sets: vec![0; p.slots],
            opened: 0,
            nodes: 0,
        }
    }

    fn complete(&self) -> bool {
        let adj = self.p.adj;
        if self
            .sets
            .iter()
            .any(|&s| s == 0 || !bits::is_connected(adj, s))
        {
            return false;
        }
        (0..self.p.slots).all(|i| {
            let nb = bits::neighborhood(adj, self.sets[i]);
            bits::iter(self.p.required[i]).all(|j| j <= i || nb & self.sets[j] != 0)
        })
    }

    fn dfs(&mut self, pos: usize, unassigned: Mask) -> bool {
        self.nodes += 1;
        if self.sets.iter().all(|&s| s != 0) && self.complete() {
            return true;
        }
        if pos == self.order.len() {
            return false;
        }
        let v = self.order[pos];
        let rest = unassigned & !bits::bit(v);
        let k = self.p.slots;

        let mut choices: Vec<usize> = Vec::with_capacity(k + 1);
        if self.p.interchangeable {
            if self.opened < k {
                choices.push(self.opened);
            }
            choices.extend(0..self.opened);
        } else {
            choices.extend((0..k).filter(|&i| self.sets[i] != 0));
            choices.extend((0..k).filter(|&i| self.sets[i] == 0));
        }
        let floor = if self.twin_prev[pos] {
            self.keys[pos - 1]
        } else {
            0
        };
        for slot in choices {
            if slot < floor {
                continue;
            }
            self.keys[pos] = slot;
            let was_empty = self.sets[slot] == 0;
            self.sets[slot] |= bits::bit(v);
            if was_empty && self.p.interchangeable {
                self.opened += 1;
            }
            let ok = self.feasible(rest, Some(slot)) && self.dfs(pos + 1, rest);
            if ok {
                return true;
            }
            self.sets[slot] &= !bits::bit(v);
            if was_empty && self.p.interchangeable {
                self.opened -= 1;
            }
        }
        self.keys[pos] = UNUSED;
        if self.p.allow_unused && self.feasible(rest, None) && self.dfs(pos + 1, rest) {
            return true;
        }
        false
    }

    fn feasible(&self, rest: Mask, touched: Option<usize>) -> bool {
        let p = self.p;
        let adj = p.adj;
        if let (Some(d), Some(slot)) = (p.breadth, touched) {
            if bits::count(self.sets[slot]) > d {
                return false;
            }
        }
        let empty = self.sets.iter().filter(|&&s| s == 0).count();
        let free = bits::count(rest);
        if empty > free {
            return false;
        }
        if p.interchangeable && empty > 0 {
            // New branch sets drawn from `rest`: singletons among them form a
            // clique, the others use at least two vertices each.
            let omega = bits::greedy_colors(adj, rest).min(free);
            if empty > (free + omega) / 2 {
                return false;
            }
            // Within an independent set only one new branch set fits entirely.
            if free > 0 && empty > 1 + free - bits::greedy_independent(adj, rest) {
                return false;
            }
        }
        let mut reach = [0 as Mask; 128];
        let mut covered: Mask = 0;
        for (i, &s) in self.sets.iter().enumerate() {
            if s == 0 {
                continue;
            }
            let r = bits::reach(adj, s | rest, s & s.wrapping_neg());
            if r & s != s {
                return false;
            }
            if let Some(d) = p.breadth {
                // A set that must still grow has to do so within `d` vertices.
                if bits::count(s) > d {
                    return false;
                }
            }
            reach[i] = r;
            covered |= r;
        }
        for i in 0..p.slots {
            if self.sets[i] == 0 {
                continue;
            }
            let ext = reach[i] | bits::neighborhood(adj, reach[i]);
            for j in bits::iter(p.required[i]) {
                if j > i && self.sets[j] != 0 && ext & reach[j] == 0 {
                    return false;
                }
            }
        }
        if !p.allow_unused && empty == 0 && rest & !covered != 0 {
            return false;
        }
        true
    }
}

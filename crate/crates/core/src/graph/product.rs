use serde::{Deserialize, Serialize};

use super::{complete, empty, Graph, DEFAULT_VERTEX_CAP};
use crate::error::{Error, Result};

/// Lexicographic product `G . H` under the default vertex cap. Vertex `(u, v)`
/// is encoded as `u * |H| + v`.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph> {
    lexicographic_product_with_cap(g, h, DEFAULT_VERTEX_CAP)
}

pub fn lexicographic_product_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<Graph> {
    let (gn, hn) = (g.order(), h.order());
    let requested = gn as u128 * hn as u128;
    if requested > cap.min(DEFAULT_VERTEX_CAP) as u128 {
        return Err(Error::SizeCap {
            requested,
            cap: cap.min(DEFAULT_VERTEX_CAP),
        });
    }
    let mut p = Graph::edgeless(gn * hn)?;
    for u1 in 0..gn {
        for v1 in 0..hn {
            for v2 in v1 + 1..hn {
                if h.has_edge(v1, v2) {
                    p.set_edge(u1 * hn + v1, u1 * hn + v2);
                }
            }
        }
        for u2 in g.neighbors(u1).filter(|&u2| u2 > u1) {
            for v1 in 0..hn {
                for v2 in 0..hn {
                    p.set_edge(u1 * hn + v1, u2 * hn + v2);
                }
            }
        }
    }
    Ok(p)
}

/// `G(t) = G . I_t`.
pub fn blowup_empty(g: &Graph, t: usize) -> Result<Graph> {
    lexicographic_product(g, &empty(t)?)
}

/// `G[t] = G . K_t`.
pub fn blowup_complete(g: &Graph, t: usize) -> Result<Graph> {
    lexicographic_product(g, &complete(t)?)
}

/// A vertex of a blow-up: copy `copy` of base vertex `base`. Its index in the
/// materialized blow-up is `base * t + copy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlowupVertex {
    pub base: usize,
    pub copy: usize,
}

impl BlowupVertex {
    pub fn new(base: usize, copy: usize) -> Self {
        BlowupVertex { base, copy }
    }

    pub fn from_index(index: u64, t: usize) -> Self {
        BlowupVertex {
            base: (index / t as u64) as usize,
            copy: (index % t as u64) as usize,
        }
    }

    pub fn index(&self, t: usize) -> u64 {
        self.base as u64 * t as u64 + self.copy as u64
    }

    fn check(&self, g: &Graph, t: usize) -> Result<()> {
        if self.base >= g.order() || self.copy >= t {
            return Err(Error::Range(format!(
                "blow-up vertex ({}, {}) outside {} classes of {} copies",
                self.base,
                self.copy,
                g.order(),
                t
            )));
        }
        Ok(())
    }
}

/// Adjacency in `G[t]` (`complete`) or `G(t)` without building either graph.
pub fn blowup_adjacency_oracle(
    g: &Graph,
    t: usize,
    a: BlowupVertex,
    b: BlowupVertex,
    complete: bool,
) -> Result<bool> {
    if t == 0 {
        return Err(Error::InvalidArgument(
            "blow-up factor must be at least 1".into(),
        ));
    }
    a.check(g, t)?;
    b.check(g, t)?;
    if a.base == b.base {
        Ok(complete && a.copy != b.copy)
    } else {
        Ok(g.has_edge(a.base, b.base))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn product_examples() {
        let c4 = cycle(4).unwrap();
        let k2 = complete(2).unwrap();
        let p = lexicographic_product(&c4, &k2).unwrap();
        assert_eq!((p.order(), p.size()), (8, 20));
        assert_eq!(lexicographic_product(&c4, &empty(1).unwrap()).unwrap(), c4);
        assert_eq!(
            lexicographic_product(&k2, &k2).unwrap(),
            complete(4).unwrap()
        );
    }

    #[test]
    fn blowup_examples() {
        let g = path(4).unwrap();
        assert_eq!(blowup_complete(&g, 1).unwrap(), g);
        let k33 = blowup_empty(&complete(2).unwrap(), 3).unwrap();
        assert_eq!(k33.size(), 9);
        assert!((0..3).all(|a| (3..6).all(|b| k33.has_edge(a, b))));
        let c = blowup_complete(&cycle(4).unwrap(), 2).unwrap();
        assert_eq!((c.order(), c.size()), (8, 20));
    }

    #[test]
    fn product_respects_cap() {
        let k = complete(100).unwrap();
        assert!(matches!(
            lexicographic_product(&k, &k),
            Err(Error::SizeCap {
                requested: 10000,
                ..
            })
        ));
        assert!(lexicographic_product_with_cap(&k, &complete(2).unwrap(), 150).is_err());
    }

    #[test]
    fn oracle_examples() {
        let k2 = complete(2).unwrap();
        let t = 1_000_000;
        let q = |a, b, c| blowup_adjacency_oracle(&k2, t, a, b, c).unwrap();
        assert!(q(
            BlowupVertex::new(0, 17),
            BlowupVertex::new(1, 999_999),
            false
        ));
        assert!(!q(BlowupVertex::new(0, 3), BlowupVertex::new(0, 4), false));
        assert!(q(BlowupVertex::new(0, 3), BlowupVertex::new(0, 4), true));
        assert!(blowup_adjacency_oracle(
            &k2,
            t,
            BlowupVertex::new(2, 0),
            BlowupVertex::new(0, 0),
            true
        )
        .is_err());
        assert!(blowup_adjacency_oracle(
            &k2,
            t,
            BlowupVertex::new(0, t),
            BlowupVertex::new(0, 0),
            true
        )
        .is_err());
    }

    #[test]
    fn oracle_matches_materialized_c4() {
        let c4 = cycle(4).unwrap();
        let big = blowup_complete(&c4, 2).unwrap();
        let mut pairs = 0;
        for i in 0..8u64 {
            for j in i + 1..8 {
                let (a, b) = (
                    BlowupVertex::from_index(i, 2),
                    BlowupVertex::from_index(j, 2),
                );
                assert_eq!(
                    blowup_adjacency_oracle(&c4, 2, a, b, true).unwrap(),
                    big.has_edge(i as usize, j as usize)
                );
                pairs += 1;
            }
        }
        assert_eq!(pairs, 28);
    }
}

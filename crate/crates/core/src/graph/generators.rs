use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::edgeless(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.set_edge(u, v);
        }
    }
    Ok(g)
}

/// Edgeless graph `I_n`.
pub fn empty(n: usize) -> Result<Graph> {
    Graph::edgeless(n)
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    let mut g = Graph::edgeless(n)?;
    for v in 1..n {
        g.set_edge(v - 1, v);
    }
    Ok(g)
}

/// Cycle `0 - 1 - ... - (n-1) - 0`; needs `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let mut g = path(n)?;
    g.set_edge(n - 1, 0);
    Ok(g)
}

/// The `k x k` grid; cell `(r, c)` is vertex `r * k + c`.
pub fn grid(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::EmptyGraph);
    }
    let n = k.checked_mul(k).ok_or(Error::SizeCap {
        requested: (k as u128) * (k as u128),
        cap: super::DEFAULT_VERTEX_CAP,
    })?;
    let mut g = Graph::edgeless(n)?;
    for r in 0..k {
        for c in 0..k {
            let v = r * k + c;
            if c + 1 < k {
                g.set_edge(v, v + 1);
            }
            if r + 1 < k {
                g.set_edge(v, v + k);
            }
        }
    }
    Ok(g)
}

/// Erdős–Rényi `G(n, p)`.
///
/// The stream is ChaCha8 keyed with `ChaCha8Rng::seed_from_u64(seed)`. Pairs
/// are visited in the order `(0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1)`
/// and each consumes exactly one `next_u64()` draw `x`; the pair becomes an
/// edge iff `x < floor(p * 2^64)`. With `p = 1` every draw qualifies.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!(
            "edge probability must lie in [0, 1], got {p}"
        )));
    }
    // Scaling by a power of two is exact, so the threshold is platform independent.
    let threshold = (p * 18_446_744_073_709_551_616.0).floor() as u128;
    let mut g = Graph::edgeless(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for u in 0..n {
        for v in u + 1..n {
            if (rng.next_u64() as u128) < threshold {
                g.set_edge(u, v);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_sizes() {
        assert_eq!(complete(5).unwrap().size(), 10);
        assert_eq!(empty(4).unwrap().size(), 0);
        assert_eq!(path(4).unwrap().size(), 3);
        assert_eq!(cycle(6).unwrap().size(), 6);
        let g3 = grid(3).unwrap();
        assert_eq!((g3.order(), g3.size()), (9, 12));
        assert_eq!(grid(1).unwrap().size(), 0);
        assert!(cycle(2).is_err());
        assert!(grid(0).is_err());
    }

    #[test]
    fn gnp_degenerate_probabilities() {
        assert_eq!(random_gnp(7, 0.0, 3).unwrap().size(), 0);
        assert_eq!(random_gnp(7, 1.0, 3).unwrap(), complete(7).unwrap());
        assert!(random_gnp(3, 1.5, 0).is_err());
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = random_gnp(8, 0.5, 42).unwrap();
        let b = random_gnp(8, 0.5, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(
            random_gnp(12, 0.5, 1).unwrap(),
            random_gnp(12, 0.5, 2).unwrap()
        );
    }

    #[test]
    fn generators_respect_invariants() {
        for n in 1..7 {
            for g in [
                complete(n),
                empty(n),
                path(n),
                grid(n),
                random_gnp(n, 0.4, n as u64),
            ] {
                assert!(g.unwrap().check_invariants());
            }
        }
    }
}

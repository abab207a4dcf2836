//! The graph6 text format: a size prefix followed by the upper triangle of
//! the adjacency matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte with an offset of 63.

use super::{Graph, DEFAULT_VERTEX_CAP};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph> {
    let raw = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match raw.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, raw.as_bytes()),
    };
    let err = |at: usize, message: &str| Error::Parse {
        offset: skip + at,
        message: message.to_string(),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(
                i,
                &format!("byte 0x{b:02x} outside the graph6 range 63..=126"),
            ));
        }
    }
    let (n, mut pos) = match body {
        [] => return Err(err(0, "empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err(2, "truncated 8-byte size prefix"));
            }
            (
                rest[..6]
                    .iter()
                    .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize),
                8,
            )
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(1, "truncated 4-byte size prefix"));
            }
            (
                rest[..3]
                    .iter()
                    .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize),
                4,
            )
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n == 0 {
        return Err(err(0, "graph has no vertices"));
    }
    if n > DEFAULT_VERTEX_CAP {
        return Err(Error::SizeCap {
            requested: n as u128,
            cap: DEFAULT_VERTEX_CAP,
        });
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if body.len() - pos != need {
        return Err(err(
            pos,
            &format!(
                "expected {need} adjacency bytes for n = {n}, found {}",
                body.len() - pos
            ),
        ));
    }
    let mut g = Graph::edgeless(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    pos += need;
    if bits % 6 != 0 {
        let pad = (body[pos - 1] - 63) & ((1 << (6 - bits % 6)) - 1);
        if pad != 0 {
            return Err(err(pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, grid, path, random_gnp};

    #[test]
    fn known_strings() {
        assert_eq!(graph6_encode(&complete(1).unwrap()), "@");
        assert_eq!(graph6_encode(&complete(2).unwrap()), "A_");
        assert_eq!(graph6_encode(&complete(4).unwrap()), "C~");
        assert_eq!(graph6_encode(&cycle(5).unwrap()), "Dhc");
        assert_eq!(graph6_encode(&path(3).unwrap()), "Bg");
    }

    #[test]
    fn round_trips() {
        let g = grid(3).unwrap();
        assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
        let big = random_gnp(70, 0.3, 9).unwrap();
        let s = graph6_encode(&big);
        assert!(s.starts_with('~'));
        assert_eq!(graph6_decode(&s).unwrap(), big);
        assert_eq!(graph6_decode(">>graph6<<Dhc\n").unwrap(), cycle(5).unwrap());
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            graph6_decode("garbage\x01"),
            Err(Error::Parse { offset: 7, .. })
        ));
        assert!(matches!(
            graph6_decode(""),
            Err(Error::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            graph6_decode("D"),
            Err(Error::Parse { offset: 1, .. })
        ));
        assert!(matches!(graph6_decode("?"), Err(Error::Parse { .. })));
        // "B@" sets a padding bit for n = 3.
        assert!(matches!(
            graph6_decode("B@"),
            Err(Error::Parse { offset: 1, .. })
        ));
    }
}

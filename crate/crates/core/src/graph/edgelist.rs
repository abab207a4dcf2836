//! Plain edge-list text: a header line `n m` followed by `m` lines `u v`.
//! Blank lines and lines starting with `#` are ignored.

use super::Graph;
use crate::error::{Error, Result};

pub fn edge_list_encode(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn edge_list_decode(text: &str) -> Result<Graph> {
    let mut offset = 0;
    let mut rows = Vec::new();
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if !trimmed.is_empty() && !trimmed.starts_with('#') {
            rows.push((offset, trimmed));
        }
        offset += line.len();
    }
    let parse_pair = |(at, line): (usize, &str)| -> Result<(usize, usize)> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::Parse {
            offset: at,
            message: format!("expected two non-negative integers, got {line:?}"),
        };
        if fields.len() != 2 {
            return Err(bad());
        }
        Ok((
            fields[0].parse().map_err(|_| bad())?,
            fields[1].parse().map_err(|_| bad())?,
        ))
    };
    let Some(&header) = rows.first() else {
        return Err(Error::Parse {
            offset: 0,
            message: "missing `n m` header".into(),
        });
    };
    let (n, m) = parse_pair(header)?;
    if rows.len() - 1 != m {
        return Err(Error::Parse {
            offset,
            message: format!("header announces {m} edges, found {}", rows.len() - 1),
        });
    }
    let edges = rows[1..]
        .iter()
        .map(|&r| parse_pair(r))
        .collect::<Result<Vec<_>>>()?;
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::grid;

    #[test]
    fn round_trip_and_comments() {
        let g = grid(3).unwrap();
        assert_eq!(edge_list_decode(&edge_list_encode(&g)).unwrap(), g);
        let c4 = edge_list_decode("# square\n4 4\n0 1\n1 2\n\n2 3\n3 0\n").unwrap();
        assert_eq!(c4.size(), 4);
    }

    #[test]
    fn errors() {
        assert!(edge_list_decode("").is_err());
        assert!(edge_list_decode("3 2\n0 1\n").is_err());
        assert!(matches!(
            edge_list_decode("3 1\n0 x\n"),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(
            edge_list_decode("3 1\n1 1\n"),
            Err(Error::SelfLoop { v: 1 })
        ));
    }
}

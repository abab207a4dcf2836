//! Graph sources shared by the subcommands.

use std::fs;

use hadwiger::graph::{
    complete, cycle, edge_list_decode, empty, graph6_decode, grid, path, random_gnp,
};
use hadwiger::{Graph, Rational};

use crate::CliError;

/// Parses `p/q`, an integer, or a decimal such as `0.35` exactly.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        if int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) && !frac.is_empty() {
            let digits = format!("{int}{frac}");
            let digits = match digits.trim_start_matches('0') {
                "" => "0",
                d => d,
            };
            let scale = format!("1{}", "0".repeat(frac.len()));
            return format!("{digits}/{scale}")
                .parse()
                .map_err(|e| CliError::Usage(format!("bad number {s:?}: {e}")));
        }
    }
    s.parse()
        .map_err(|e| CliError::Usage(format!("bad number {s:?}: {e}")))
}

/// `complete:n`, `empty:n`, `path:n`, `cycle:n`, `grid:k` or `gnp:n:p:seed`.
pub fn generate(spec: &str) -> Result<Graph, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> Result<usize, CliError> {
        s.parse()
            .map_err(|_| CliError::Usage(format!("bad size {s:?} in generator {spec:?}")))
    };
    let g = match parts.as_slice() {
        ["complete", n] => complete(num(n)?),
        ["empty", n] => empty(num(n)?),
        ["path", n] => path(num(n)?),
        ["cycle", n] => cycle(num(n)?),
        ["grid", k] => grid(num(k)?),
        ["gnp", n, p, seed] => {
            let seed: u64 = seed
                .parse()
                .map_err(|_| CliError::Usage(format!("bad seed {seed:?}")))?;
            random_gnp(num(n)?, parse_rational(p)?.to_f64(), seed)
        }
        _ => {
            return Err(CliError::Usage(format!(
                "unknown generator {spec:?}; expected complete:n, empty:n, path:n, cycle:n, grid:k or gnp:n:p:seed"
            )))
        }
    };
    g.map_err(|e| CliError::Usage(e.to_string()))
}

fn read(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))
}

#[derive(Clone, Debug, Default, clap::Args)]
pub struct GraphSource {
    /// graph6 string (repeatable)
    #[arg(long = "g6")]
    pub g6: Vec<String>,
    /// Generator spec such as grid:3 or gnp:10:1/2:7 (repeatable)
    #[arg(long = "gen")]
    pub generate: Vec<String>,
    /// Edge-list file `n m` then `u v` lines (repeatable)
    #[arg(long = "edges")]
    pub edges: Vec<String>,
    /// File with one graph6 string per line (repeatable)
    #[arg(long = "g6-file")]
    pub g6_file: Vec<String>,
}

impl GraphSource {
    pub fn is_empty(&self) -> bool {
        self.g6.is_empty()
            && self.generate.is_empty()
            && self.edges.is_empty()
            && self.g6_file.is_empty()
    }

    pub fn load(&self) -> Result<Vec<Graph>, CliError> {
        let mut out = Vec::new();
        let bad = |e: hadwiger::Error| CliError::Usage(e.to_string());
        for s in &self.g6 {
            out.push(graph6_decode(s).map_err(bad)?);
        }
        for s in &self.generate {
            out.push(generate(s)?);
        }
        for f in &self.edges {
            out.push(edge_list_decode(&read(f)?).map_err(bad)?);
        }
        for f in &self.g6_file {
            for line in read(f)?.lines().map(str::trim).filter(|l| !l.is_empty()) {
                out.push(graph6_decode(line).map_err(bad)?);
            }
        }
        if out.is_empty() {
            return Err(CliError::Usage(
                "no graph given; use --g6, --gen, --edges or --g6-file".into(),
            ));
        }
        Ok(out)
    }

    pub fn load_one(&self) -> Result<Graph, CliError> {
        let mut all = self.load()?;
        if all.len() != 1 {
            return Err(CliError::Usage(format!(
                "expected exactly one graph, got {}",
                all.len()
            )));
        }
        Ok(all.remove(0))
    }
}

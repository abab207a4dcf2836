use std::io::Write;

use serde_json::json;

use hadwiger::construct::{emit_construction, search_witness, Mode, SearchMode, WitnessSpec};

use crate::{parse_rational, CliError, Config};

/// Largest blow-up whose full edge list is streamed; beyond this use --query.
pub const STREAM_CAP: u64 = 4096;

#[derive(clap::Args, Debug)]
pub struct ConstructArgs {
    /// Order of the witness graph
    #[arg(long)]
    pub n0: Option<usize>,
    /// mader or thomason
    #[arg(long)]
    pub mode: Option<String>,
    /// Edge density for mader mode, as p/q or a decimal
    #[arg(long)]
    pub p: Option<String>,
    /// Reject graphs with a K_s minor of breadth at most d
    #[arg(long)]
    pub s: Option<usize>,
    /// Fix the breadth instead of choosing it per graph
    #[arg(long)]
    pub d: Option<usize>,
    /// Examine one graph per isomorphism class
    #[arg(long, conflicts_with = "samples")]
    pub exhaustive: bool,
    /// Examine this many seeded random graphs instead
    #[arg(long)]
    pub samples: Option<usize>,
    /// Sample i uses seed + i
    #[arg(long)]
    pub seed: Option<u64>,
    /// Blow the witness up by this factor
    #[arg(long)]
    pub emit: Option<usize>,
    /// Answer one adjacency query in the blow-up instead of streaming edges
    #[arg(long, num_args = 2, value_names = ["U", "V"], requires = "emit")]
    pub query: Option<Vec<u64>>,
}

pub fn run(mut a: ConstructArgs, config: &Config, out: &mut dyn Write) -> Result<i32, CliError> {
    config.fill(&mut a.n0, "n0")?;
    config.fill(&mut a.mode, "mode")?;
    config.fill(&mut a.p, "p")?;
    config.fill(&mut a.s, "s")?;
    config.fill(&mut a.d, "d")?;
    config.fill(&mut a.samples, "samples")?;
    config.fill(&mut a.seed, "seed")?;
    config.fill(&mut a.emit, "emit")?;
    if !a.exhaustive && a.samples.is_none() {
        let mut ex = None;
        config.fill(&mut ex, "exhaustive")?;
        a.exhaustive = ex.unwrap_or(false);
    }
    let n0 =
        a.n0.ok_or_else(|| CliError::Usage("construct needs --n0".into()))?;
    let mode = match a.mode.as_deref() {
        Some("thomason") => Mode::Thomason,
        Some("mader") => {
            let p =
                a.p.as_deref()
                    .ok_or_else(|| CliError::Usage("mader mode needs --p".into()))?;
            Mode::Mader {
                p: parse_rational(p)?,
            }
        }
        Some(other) => {
            return Err(CliError::Usage(format!(
                "unknown mode {other:?}; use mader or thomason"
            )))
        }
        None => {
            return Err(CliError::Usage(
                "construct needs --mode mader|thomason".into(),
            ))
        }
    };
    let search = match (a.exhaustive, a.samples) {
        (true, _) => SearchMode::Exhaustive,
        (false, Some(count)) => SearchMode::Sampled {
            count,
            seed: a.seed.unwrap_or(0),
        },
        (false, None) => {
            return Err(CliError::Usage(
                "construct needs --exhaustive or --samples".into(),
            ))
        }
    };
    let spec = WitnessSpec {
        n0,
        mode,
        s: a.s,
        d: a.d,
        search,
    };
    spec.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let w = search_witness(&spec)?;
    writeln!(
        out,
        "{}",
        serde_json::to_string(&w).map_err(|e| CliError::Failure(e.to_string()))?
    )?;
    let Some(t) = a.emit else { return Ok(0) };
    let c = emit_construction(&w, t)?;
    writeln!(
        out,
        "{}",
        json!({
            "order": c.order(),
            "factor": t,
            "hadwiger_bound": c.hadwiger_bound(),
            "epsilon": c.epsilon(),
            "complement_hadwiger_bound": c.complement_hadwiger_bound(),
        })
    )?;
    match a.query.as_deref() {
        Some(&[u, v]) => {
            let adjacent = c
                .adjacent(u, v)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            writeln!(out, "{}", json!({"u": u, "v": v, "adjacent": adjacent}))?;
        }
        Some(_) => unreachable!("clap enforces two values"),
        None => {
            if c.order() > STREAM_CAP {
                return Err(CliError::Failure(format!(
                    "edge stream limited to {STREAM_CAP} vertices (blow-up has {}); use --query u v",
                    c.order()
                )));
            }
            for (u, v) in c.edges() {
                writeln!(out, "{u} {v}")?;
            }
        }
    }
    Ok(0)
}

use std::io::Write;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use hadwiger::bounds::{edge_bound_entries, sqrt_bound_entry};
use hadwiger::bramble::{bramble_number, TouchingKind};
use hadwiger::fractional::{
    fractional_hadwiger_with, r_integral_hadwiger_via_ilp, HadwigerValue, SearchLimits,
};
use hadwiger::graph::graph6_encode;
use hadwiger::minor::hadwiger_number;
use hadwiger::width::{max_grid_minor, separation_number, treewidth};
use hadwiger::Graph;

use crate::{CliError, Config, GraphSource};

pub const PARAMS: &[&str] = &[
    "h", "hf", "hpf", "hr", "hpr", "tw", "bn", "sep", "grid", "bounds",
];

#[derive(clap::Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Comma-separated subset of h,hf,hpf,hr,hpr,tw,bn,sep,grid,bounds
    #[arg(long)]
    pub params: Option<String>,
    /// Denominator for hr and hpr
    #[arg(long)]
    pub r: Option<u64>,
    /// Node budget for the h_f sweep; exhausted runs report an interval
    #[arg(long)]
    pub budget: Option<u64>,
}

pub fn run(
    mut a: ComputeArgs,
    config: &Config,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    config.fill(&mut a.params, "params")?;
    config.fill(&mut a.r, "r")?;
    config.fill(&mut a.budget, "budget")?;
    let params: Vec<String> = a
        .params
        .as_deref()
        .unwrap_or("h,hf")
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect();
    if let Some(bad) = params.iter().find(|p| !PARAMS.contains(&p.as_str())) {
        return Err(CliError::Usage(format!(
            "unknown param {bad:?}; choose from {}",
            PARAMS.join(",")
        )));
    }
    let r = a.r.unwrap_or(2);
    if r == 0 {
        return Err(CliError::Usage("--r must be at least 1".into()));
    }
    let graphs = a.source.load()?;
    let limits = SearchLimits {
        node_budget: a.budget,
        max_set_size: None,
    };
    let rows: Vec<Value> = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| row(g, &params, r, limits))
            .collect()
    });
    for row in rows {
        writeln!(out, "{row}")?;
    }
    Ok(0)
}

fn hf_json(obj: &mut Map<String, Value>, key: &str, v: &HadwigerValue) {
    obj.insert(key.into(), json!(v.value));
    obj.insert(format!("{key}_status"), json!(v.status));
    obj.insert(format!("{key}_upper"), json!(v.upper));
    obj.insert(format!("{key}_certificate"), json!(v.certificate.to_text()));
    if let Some(d) = &v.dual {
        obj.insert(format!("{key}_dual"), json!(d));
    }
}

fn row(g: &Graph, params: &[String], r: u64, limits: SearchLimits) -> Value {
    let mut obj = Map::new();
    obj.insert("graph".into(), json!(graph6_encode(g)));
    obj.insert("n".into(), json!(g.order()));
    obj.insert("m".into(), json!(g.size()));
    let wants = |p: &str| params.iter().any(|x| x == p);
    let mut h_cache = None;
    let mut hf_cache = None;
    for p in params {
        let res: Result<(), hadwiger::Error> = (|| {
            match p.as_str() {
                "h" | "bounds" if h_cache.is_none() => {
                    h_cache = Some(hadwiger_number(g)?);
                }
                _ => {}
            }
            match p.as_str() {
                "hf" | "bounds" if hf_cache.is_none() => {
                    hf_cache = Some(fractional_hadwiger_with(g, TouchingKind::Weak, limits)?);
                }
                _ => {}
            }
            match p.as_str() {
                "h" => {
                    let (h, model) = h_cache.as_ref().expect("computed above");
                    obj.insert("h".into(), json!(h));
                    obj.insert("h_certificate".into(), json!(model.to_text()));
                }
                "hf" => hf_json(&mut obj, "hf", hf_cache.as_ref().expect("computed above")),
                "hpf" => hf_json(
                    &mut obj,
                    "hpf",
                    &fractional_hadwiger_with(g, TouchingKind::Strong, limits)?,
                ),
                "hr" | "hpr" => {
                    let kind = if p == "hr" {
                        TouchingKind::Weak
                    } else {
                        TouchingKind::Strong
                    };
                    let (v, cert) = r_integral_hadwiger_via_ilp(g, r, kind)?;
                    obj.insert(p.clone(), json!(v));
                    obj.insert(format!("{p}_r"), json!(r));
                    obj.insert(format!("{p}_certificate"), json!(cert.to_text()));
                }
                "tw" => {
                    let (w, td) = treewidth(g)?;
                    obj.insert("tw".into(), json!(w));
                    obj.insert("tw_certificate".into(), json!(td.to_text()));
                }
                "bn" => {
                    let b = bramble_number(g)?;
                    obj.insert("bn".into(), json!(b.value));
                    obj.insert("bn_certificate".into(), json!(b.bramble.to_text()));
                    obj.insert("bn_hitting_set".into(), json!(b.hitting_set.to_string()));
                }
                "sep" => {
                    let s = separation_number(g)?;
                    let w = &s.witness;
                    obj.insert("sep".into(), json!(s.value));
                    obj.insert(
                        "sep_witness".into(),
                        json!({
                            "subgraph": w.subgraph.to_string(),
                            "v0": w.v0.to_string(),
                            "v1": w.v1.to_string(),
                            "v2": w.v2.to_string(),
                        }),
                    );
                }
                "grid" => {
                    let (k, model) = max_grid_minor(g)?;
                    obj.insert("grid".into(), json!(k));
                    obj.insert("grid_certificate".into(), json!(model.to_text()));
                }
                "bounds" => {
                    let (h, _) = h_cache.as_ref().expect("computed above");
                    let hf = hf_cache.as_ref().expect("computed above");
                    let mut entries = vec![sqrt_bound_entry(g.order(), *h, hf)];
                    entries.extend(edge_bound_entries(g.size(), *h, hf));
                    obj.insert("bounds".into(), json!(entries));
                    if !wants("hf") {
                        obj.insert("hf".into(), json!(hf.value));
                    }
                }
                _ => unreachable!("params are validated"),
            }
            Ok(())
        })();
        if let Err(e) = res {
            obj.insert(format!("{p}_error"), json!(e.to_string()));
        }
    }
    Value::Object(obj)
}

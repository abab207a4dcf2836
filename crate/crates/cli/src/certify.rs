use std::io::Write;

use serde_json::{json, Value};

use hadwiger::bramble::{validate_bramble, BrambleFamily, BrambleViolation};
use hadwiger::fractional::{evaluate_certificate, evaluate_integral_certificate, WeightedBramble};
use hadwiger::minor::{verify_minor_model, MinorModel};
use hadwiger::width::TreeDecomposition;

use crate::{CliError, GraphSource};

#[derive(clap::Args, Debug)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub source: GraphSource,
    /// Certificate file: a minor model, bramble, weighted bramble or tree decomposition
    #[arg(long)]
    pub cert: String,
    /// Also require weights to be multiples of 1/r
    #[arg(long)]
    pub r: Option<u64>,
}

pub fn run(a: CertifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let g = a.source.load_one()?;
    let text = std::fs::read_to_string(&a.cert)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", a.cert)))?;
    let kind = text.split_whitespace().next().unwrap_or_default();
    let parse = |e: hadwiger::Error| CliError::Usage(format!("malformed certificate: {e}"));
    let verdict: Result<Value, String> = match kind {
        "minor" => {
            let m = MinorModel::from_text(&text).map_err(parse)?;
            verify_minor_model(&g, &m)
                .map(|()| json!({"order": m.order()}))
                .map_err(|v| v.to_string())
        }
        "bramble" => {
            let b = BrambleFamily::from_text(&text).map_err(parse)?;
            if b.host_n != g.order() {
                Err(BrambleViolation::HostMismatch {
                    family: b.host_n,
                    graph: g.order(),
                }
                .to_string())
            } else {
                validate_bramble(&g, &b.sets, b.kind)
                    .map(|()| json!({"sets": b.sets.len()}))
                    .map_err(|v| v.to_string())
            }
        }
        "weighted-bramble" => {
            let w = WeightedBramble::from_text(&text).map_err(parse)?;
            let value = match a.r {
                Some(r) => evaluate_integral_certificate(&g, &w, r),
                None => evaluate_certificate(&g, &w),
            };
            value
                .map(|v| json!({"value": v}))
                .map_err(|e| match e {
                    hadwiger::Error::InvalidCertificate(m) => m,
                    other => other.to_string(),
                })
        }
        "tree-decomposition" => {
            let td = TreeDecomposition::from_text(&text).map_err(parse)?;
            td.validate(&g)
                .map(|()| json!({"width": td.width()}))
                .map_err(|v| v.to_string())
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown certificate kind {other:?}; expected minor, bramble, weighted-bramble or tree-decomposition"
            )))
        }
    };
    let (code, mut obj) = match verdict {
        Ok(extra) => (0, extra),
        Err(violation) => (1, json!({"violation": violation})),
    };
    let map = obj.as_object_mut().expect("objects above");
    map.insert("kind".into(), json!(kind));
    map.insert("valid".into(), json!(code == 0));
    writeln!(out, "{obj}")?;
    Ok(code)
}

use std::io::Write;

use rayon::prelude::*;

use hadwiger::bramble::TouchingKind;
use hadwiger::fractional::{fractional_hadwiger_with, HadwigerValue, SearchLimits};
use hadwiger::graph::random_gnp;
use hadwiger::minor::hadwiger_number;
use hadwiger::Rational;

use crate::{parse_rational, CliError, Config};

#[derive(clap::Args, Debug)]
pub struct SurveyArgs {
    /// Vertices per sample
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability, as p/q or a decimal
    #[arg(long)]
    pub p: Option<String>,
    /// Number of G(n, p) samples
    #[arg(long)]
    pub samples: Option<usize>,
    /// Sample i uses seed + i
    #[arg(long)]
    pub seed: Option<u64>,
    /// Node budget for each h_f sweep; exhausted rows carry an interval
    #[arg(long)]
    pub budget: Option<u64>,
}

/// One sampled graph.
#[derive(Clone, Debug)]
pub struct SurveyRow {
    pub sample: usize,
    pub seed: u64,
    pub m: usize,
    pub h: usize,
    pub hf: HadwigerValue,
}

impl SurveyRow {
    /// `Some(true)` / `Some(false)` when decided, `None` inside an interval.
    pub fn h_equals_hf(&self) -> Option<bool> {
        let h = Rational::from(self.h);
        if self.hf.value > h {
            Some(false)
        } else if self.hf.upper == h {
            Some(true)
        } else {
            None
        }
    }
}

pub const HEADER: &str = "sample,seed,n,p,m,h,hf,hf_status,hf_upper,h_le_hf,h_eq_hf,ratio_display";

pub fn run(
    mut a: SurveyArgs,
    config: &Config,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    config.fill(&mut a.n, "n")?;
    config.fill(&mut a.p, "p")?;
    config.fill(&mut a.samples, "samples")?;
    config.fill(&mut a.seed, "seed")?;
    config.fill(&mut a.budget, "budget")?;
    let need = |what: &str| CliError::Usage(format!("survey needs --{what}"));
    let n = a.n.ok_or_else(|| need("n"))?;
    let p = parse_rational(a.p.as_deref().ok_or_else(|| need("p"))?)?;
    if p.is_negative() || p > Rational::one() {
        return Err(CliError::Usage(format!("p must lie in [0, 1], got {p}")));
    }
    let samples = a.samples.ok_or_else(|| need("samples"))?;
    let seed = a.seed.unwrap_or(0);
    let limits = SearchLimits {
        node_budget: a.budget,
        max_set_size: None,
    };
    let rows: Vec<SurveyRow> = pool.install(|| {
        (0..samples)
            .into_par_iter()
            .map(|i| -> Result<SurveyRow, CliError> {
                let s = seed.wrapping_add(i as u64);
                let g = random_gnp(n, p.to_f64(), s)?;
                let (h, _) = hadwiger_number(&g)?;
                let hf = fractional_hadwiger_with(&g, TouchingKind::Weak, limits)?;
                Ok(SurveyRow {
                    sample: i,
                    seed: s,
                    m: g.size(),
                    h,
                    hf,
                })
            })
            .collect::<Result<_, _>>()
    })?;
    write_csv(n, &p, &rows, out)?;
    Ok(0)
}

/// `hf·sqrt(log_b n)/n` with `b = 1/(1-p)`, for display only.
fn ratio_display(n: usize, p: &Rational, hf: &Rational) -> String {
    let pf = p.to_f64();
    if !(0.0 < pf && pf < 1.0) || n < 2 {
        return String::new();
    }
    let log_b_n = (n as f64).ln() / -(1.0 - pf).ln();
    format!("{:.6}", hf.to_f64() * log_b_n.sqrt() / n as f64)
}

pub fn write_csv(
    n: usize,
    p: &Rational,
    rows: &[SurveyRow],
    out: &mut dyn Write,
) -> std::io::Result<()> {
    writeln!(out, "{HEADER}")?;
    for r in rows {
        let eq = match r.h_equals_hf() {
            Some(b) => b.to_string(),
            None => "unknown".into(),
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            r.sample,
            r.seed,
            n,
            p,
            r.m,
            r.h,
            r.hf.value,
            r.hf.status,
            r.hf.upper,
            Rational::from(r.h) <= r.hf.value,
            eq,
            ratio_display(n, p, &r.hf.value)
        )?;
    }
    let k = rows.len().max(1);
    let mean_h: Rational =
        rows.iter().map(|r| Rational::from(r.h)).sum::<Rational>() / Rational::from(k);
    let mean_hf: Rational =
        rows.iter().map(|r| r.hf.value.clone()).sum::<Rational>() / Rational::from(k);
    let equal = rows
        .iter()
        .filter(|r| r.h_equals_hf() == Some(true))
        .count();
    let undecided = rows.iter().filter(|r| r.h_equals_hf().is_none()).count();
    writeln!(
        out,
        "# summary samples={} mean_h={} mean_hf={} frac_h_eq_hf={} undecided={} mean_h_display={:.4} mean_hf_display={:.4}",
        rows.len(),
        mean_h,
        mean_hf,
        Rational::from(equal) / Rational::from(k),
        undecided,
        mean_h.to_f64(),
        mean_hf.to_f64()
    )
}

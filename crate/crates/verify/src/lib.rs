//! Plumbing for the acceptance suite: a failure collector, a runner that
//! prints one verdict line per criterion, and an in-process CLI driver.

use std::time::Instant;

pub struct Outcome {
    pub ok: bool,
    pub detail: String,
}

/// Collects failures without stopping at the first one.
#[derive(Default)]
pub struct Check {
    failures: Vec<String>,
    count: usize,
}

impl Check {
    pub fn that(&mut self, cond: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !cond {
            self.failures.push(what());
        }
    }

    pub fn finish(self, summary: String) -> Outcome {
        let ok = self.failures.is_empty();
        let mut detail = format!("{} checks; {summary}", self.count);
        if !ok {
            let shown: Vec<&String> = self.failures.iter().take(5).collect();
            detail.push_str(&format!("; {} failed, e.g. {shown:?}", self.failures.len()));
        }
        Outcome { ok, detail }
    }
}

pub type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + 'a>);

/// Runs the criteria in order, printing `criterion N [name]: PASS|FAIL`
/// lines. Returns the numbers of the failed ones.
pub fn run_criteria(criteria: &[Criterion<'_>]) -> Vec<usize> {
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} [{name}]: {verdict} ({:.1}s) {}",
            i + 1,
            t.elapsed().as_secs_f64(),
            o.detail
        );
        if !o.ok {
            failed.push(i + 1);
        }
    }
    failed
}

/// Runs the CLI in process; returns the exit code and stdout then stderr.
pub fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hadwiger").chain(args.iter().copied());
    let code = hadwiger_cli::run(argv, &mut out, &mut err);
    let text = String::from_utf8_lossy(&out).into_owned() + &String::from_utf8_lossy(&err);
    (code, text)
}

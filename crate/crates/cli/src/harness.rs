//! Suite configuration, case execution and the exit-code contract.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use capelli_core::ring::{set_term_budget, TermBudgetExceeded};
use capelli_core::weylreal::Report;
use capelli_core::Partition;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::suites;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Ccr,
    Pairing,
    Euler,
    SchurWeyl,
    Howe,
    CapelliT,
    FftSl,
    ImmanantIdentities,
    PreimmExpansions,
    JmSpectrum,
    Centrality,
    QimmEqualities,
    Eigenvalues,
    HigherCapelliWeyl,
    HigherCapelliT,
    All,
}

impl Suite {
    pub const EACH: [Suite; 15] = [
        Suite::Ccr,
        Suite::Pairing,
        Suite::Euler,
        Suite::SchurWeyl,
        Suite::Howe,
        Suite::CapelliT,
        Suite::FftSl,
        Suite::ImmanantIdentities,
        Suite::PreimmExpansions,
        Suite::JmSpectrum,
        Suite::Centrality,
        Suite::QimmEqualities,
        Suite::Eigenvalues,
        Suite::HigherCapelliWeyl,
        Suite::HigherCapelliT,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ccr => "ccr",
            Suite::Pairing => "pairing",
            Suite::Euler => "euler",
            Suite::SchurWeyl => "schur-weyl",
            Suite::Howe => "howe",
            Suite::CapelliT => "capelli-t",
            Suite::FftSl => "fft-sl",
            Suite::ImmanantIdentities => "immanant-identities",
            Suite::PreimmExpansions => "preimm-expansions",
            Suite::JmSpectrum => "jm-spectrum",
            Suite::Centrality => "centrality",
            Suite::QimmEqualities => "qimm-equalities",
            Suite::Eigenvalues => "eigenvalues",
            Suite::HigherCapelliWeyl => "higher-capelli-weyl",
            Suite::HigherCapelliT => "higher-capelli-t",
            Suite::All => "all",
        }
    }
}

/// Everything a suite needs. Size parameters left at `None` select the
/// suite's default sweep.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub n: Option<usize>,
    pub nprime: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    pub r: Option<usize>,
    pub m: Option<usize>,
    pub lambda: Option<Partition>,
    pub mu: Option<Partition>,
    pub seed: u64,
    pub modular: bool,
    pub parallel: bool,
    pub max_terms: Option<usize>,
    pub timings: bool,
    pub inject_failure: bool,
}

impl SuiteConfig {
    /// The parameters that determine the result, as recorded in reports.
    /// Execution flags (parallelism, timings) are left out so they cannot change the output.
    pub fn to_params(&self) -> BTreeMap<String, Value> {
        let mut out = BTreeMap::new();
        let sizes = [
            ("n", self.n),
            ("nprime", self.nprime),
            ("p", self.p),
            ("q", self.q),
            ("r", self.r),
            ("m", self.m),
        ];
        for (k, v) in sizes {
            if let Some(v) = v {
                out.insert(k.to_string(), Value::from(v));
            }
        }
        if let Some(l) = &self.lambda {
            out.insert("lambda".into(), Value::from(l.to_string()));
        }
        if let Some(m) = &self.mu {
            out.insert("mu".into(), Value::from(m.to_string()));
        }
        out.insert("seed".into(), Value::from(self.seed));
        if self.modular {
            out.insert("modular".into(), Value::from(true));
        }
        if let Some(t) = self.max_terms {
            out.insert("max_terms".into(), Value::from(t));
        }
        out
    }

    pub fn has_size_flags(&self) -> bool {
        self.n.is_some()
            || self.nprime.is_some()
            || self.p.is_some()
            || self.q.is_some()
            || self.r.is_some()
            || self.m.is_some()
            || self.lambda.is_some()
            || self.mu.is_some()
    }
}

/// A parameter outside what the suite supports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamError(pub String);

impl std::fmt::Display for ParamError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

type CaseFn = Box<dyn Fn() -> capelli_core::Result<Report> + Send + Sync>;

/// One independent verification case.
pub struct Case {
    pub label: String,
    run: CaseFn,
}

pub fn case(
    label: impl Into<String>,
    f: impl Fn() -> capelli_core::Result<Report> + Send + Sync + 'static,
) -> Case {
    Case {
        label: label.into(),
        run: Box::new(f),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Passed,
    Failed,
    Budget,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: BTreeMap<String, Value>,
    pub passed: bool,
    pub cases: Vec<Report>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub suite: String,
    pub passed: bool,
    pub exit_code: i32,
    pub suites: Vec<SuiteReport>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One line per case, then a summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            for c in &s.cases {
                let params: Vec<String> = c
                    .parameters
                    .iter()
                    .map(|(k, v)| format!("{k}={}", plain(v)))
                    .collect();
                if c.equal {
                    out.push_str(&format!(
                        "ok    {} {} [{}]",
                        s.suite,
                        c.theorem,
                        params.join(" ")
                    ));
                } else {
                    let mut what: Vec<String> =
                        c.failures().iter().map(|f| f.to_string()).collect();
                    what.extend(
                        c.notes
                            .iter()
                            .filter(|n| n.starts_with("term budget"))
                            .cloned(),
                    );
                    out.push_str(&format!(
                        "FAIL  {} {} [{}]: {}",
                        s.suite,
                        c.theorem,
                        params.join(" "),
                        what.join("; ")
                    ));
                }
                if let Some(ms) = c.elapsed_ms {
                    out.push_str(&format!(" ({ms} ms)"));
                }
                out.push('\n');
            }
            let ok = s.cases.iter().filter(|c| c.equal).count();
            out.push_str(&format!(
                "{}: {ok}/{} cases passed\n",
                s.suite,
                s.cases.len()
            ));
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        v => v.to_string(),
    }
}

/// Keeps term-budget aborts from printing a panic message; the harness reports them.
pub fn install_panic_hook() {
    let default = panic::take_hook();
    panic::set_hook(Box::new(move |info| {
        if info
            .payload()
            .downcast_ref::<TermBudgetExceeded>()
            .is_none()
        {
            default(info);
        }
    }));
}

fn run_case(c: &Case, timings: bool) -> (Report, Status) {
    let start = Instant::now();
    let result = panic::catch_unwind(AssertUnwindSafe(|| (c.run)()));
    let (mut report, status) = match result {
        Ok(Ok(r)) => {
            let s = if r.equal {
                Status::Passed
            } else {
                Status::Failed
            };
            (r, s)
        }
        Ok(Err(e)) => {
            let mut r = Report::new(&c.label);
            r.check(format!("error: {e}"), false);
            (r, Status::Failed)
        }
        Err(payload) => match payload.downcast::<TermBudgetExceeded>() {
            Ok(b) => {
                let mut r = Report::new(&c.label);
                r.equal = false;
                r.note(format!(
                    "term budget exceeded: {} terms > {}",
                    b.terms, b.budget
                ));
                (r, Status::Budget)
            }
            Err(other) => panic::resume_unwind(other),
        },
    };
    report.elapsed_ms = if timings {
        Some(start.elapsed().as_millis() as u64)
    } else {
        None
    };
    (report, status)
}

fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<(SuiteReport, Status), ParamError> {
    let cases = suites::cases(suite, cfg)?;
    let results: Vec<(Report, Status)> = if cfg.parallel {
        cases.par_iter().map(|c| run_case(c, cfg.timings)).collect()
    } else {
        cases.iter().map(|c| run_case(c, cfg.timings)).collect()
    };
    let mut status = Status::Passed;
    let mut reports = Vec::with_capacity(results.len());
    for (k, (mut r, s)) in results.into_iter().enumerate() {
        let s = if cfg.inject_failure && k == 0 && s == Status::Passed {
            r.check("injected failure", false);
            Status::Failed
        } else {
            s
        };
        status = match (status, s) {
            (Status::Budget, _) | (_, Status::Budget) => Status::Budget,
            (Status::Failed, _) | (_, Status::Failed) => Status::Failed,
            _ => Status::Passed,
        };
        reports.push(r);
    }
    let report = SuiteReport {
        suite: suite.name().to_string(),
        config: cfg.to_params(),
        passed: status == Status::Passed,
        cases: reports,
    };
    Ok((report, status))
}

/// Runs a suite (or every suite for `all`). Parameter errors map to exit code 2.
pub fn run_verify(suite: Suite, cfg: &SuiteConfig) -> Result<RunReport, ParamError> {
    if suite == Suite::All && cfg.has_size_flags() {
        return Err(ParamError(
            "`all` runs each suite's default sweep and takes no size parameters".into(),
        ));
    }
    let list: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    // validate everything before running anything
    for &s in &list {
        suites::cases(s, cfg)?;
    }
    set_term_budget(cfg.max_terms);
    let mut out = Vec::new();
    let mut worst = Status::Passed;
    for s in list {
        let run = run_suite(s, cfg);
        let (r, st) = match run {
            Ok(x) => x,
            Err(e) => {
                set_term_budget(None);
                return Err(e);
            }
        };
        if st == Status::Budget || (st == Status::Failed && worst == Status::Passed) {
            worst = st;
        }
        out.push(r);
    }
    set_term_budget(None);
    let exit_code = match worst {
        Status::Passed => EXIT_OK,
        Status::Failed => EXIT_FAILED,
        Status::Budget => EXIT_BUDGET,
    };
    Ok(RunReport {
        suite: suite.name().to_string(),
        passed: worst == Status::Passed,
        exit_code,
        suites: out,
    })
}

/// `Some(v)` checked against `valid`, or the default sweep.
pub fn pick(
    name: &str,
    flag: Option<usize>,
    default: impl IntoIterator<Item = usize>,
    valid: std::ops::RangeInclusive<usize>,
) -> Result<Vec<usize>, ParamError> {
    match flag {
        Some(v) if valid.contains(&v) => Ok(vec![v]),
        Some(v) => Err(ParamError(format!(
            "--{name} {v} is outside the supported range {}..={}",
            valid.start(),
            valid.end()
        ))),
        None => Ok(default.into_iter().collect()),
    }
}

//! The acceptance sweep: each criterion at its default parameters and time limit.

use std::time::{Duration, Instant};

use capelli_cli::{run_verify, Suite, SuiteConfig};

struct Criterion {
    id: usize,
    name: &'static str,
    suites: &'static [Suite],
    limit: Duration,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 11] = [
    Criterion {
        id: 1,
        name: "CCR analogue",
        suites: &[Suite::Ccr],
        limit: secs(5),
    },
    Criterion {
        id: 2,
        name: "pairing and Euler operators",
        suites: &[Suite::Pairing, Suite::Euler],
        limit: secs(10),
    },
    Criterion {
        id: 3,
        name: "Schur-Weyl generalization",
        suites: &[Suite::SchurWeyl],
        limit: secs(60),
    },
    Criterion {
        id: 4,
        name: "Howe analogue",
        suites: &[Suite::Howe],
        limit: secs(120),
    },
    Criterion {
        id: 5,
        name: "Capelli identity on T",
        suites: &[Suite::CapelliT],
        limit: secs(120),
    },
    Criterion {
        id: 6,
        name: "FFT for SL_n",
        suites: &[Suite::FftSl],
        limit: secs(120),
    },
    Criterion {
        id: 7,
        name: "immanants",
        suites: &[Suite::ImmanantIdentities, Suite::PreimmExpansions],
        limit: secs(60),
    },
    Criterion {
        id: 8,
        name: "Jucys-Murphy spectra",
        suites: &[Suite::JmSpectrum],
        limit: secs(30),
    },
    Criterion {
        id: 9,
        name: "quantum immanants",
        suites: &[Suite::Centrality, Suite::QimmEqualities],
        limit: secs(300),
    },
    Criterion {
        id: 10,
        name: "eigenvalues",
        suites: &[Suite::Eigenvalues],
        limit: secs(60),
    },
    Criterion {
        id: 11,
        name: "higher Capelli identities",
        suites: &[Suite::HigherCapelliWeyl, Suite::HigherCapelliT],
        limit: secs(300),
    },
];

fn json_of(suite: Suite, cfg: &SuiteConfig) -> (bool, String) {
    let report = run_verify(suite, cfg).expect("default sweeps take valid parameters");
    (report.passed, report.to_json())
}

#[test]
fn acceptance() {
    let cfg = SuiteConfig::default();
    let mut failures = Vec::new();
    let mut first_runs = Vec::new();

    for c in &CRITERIA {
        let start = Instant::now();
        let mut passed = true;
        for &s in c.suites {
            let (ok, json) = json_of(s, &cfg);
            passed &= ok;
            first_runs.push((s, json));
        }
        let elapsed = start.elapsed();
        let in_time = elapsed < c.limit;
        let ok = passed && in_time;
        println!(
            "criterion {:>2} {}: {} ({:.2} s, limit {} s{})",
            c.id,
            c.name,
            if ok { "pass" } else { "FAIL" },
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            if passed { "" } else { ", checks failed" },
        );
        if !ok {
            failures.push(c.id);
        }
    }

    // a second sequential run and a parallel run must reproduce every report byte for byte
    let parallel = SuiteConfig {
        parallel: true,
        ..SuiteConfig::default()
    };
    let mut differing = Vec::new();
    for (s, json) in &first_runs {
        if json_of(*s, &cfg).1 != *json || json_of(*s, &parallel).1 != *json {
            differing.push(s.name());
        }
    }
    let ok = differing.is_empty();
    println!(
        "criterion 12 determinism: {}{}",
        if ok { "pass" } else { "FAIL" },
        if ok {
            String::new()
        } else {
            format!(" ({})", differing.join(", "))
        },
    );
    if !ok {
        failures.push(12);
    }

    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}

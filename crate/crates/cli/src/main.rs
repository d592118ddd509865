use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

use capelli_cli::compute::{compute, ComputeArgs, What};
use capelli_cli::harness::{install_panic_hook, EXIT_BUDGET, EXIT_OK, EXIT_USAGE};
use capelli_cli::{run_verify, Suite, SuiteConfig};
use capelli_core::ring::{set_term_budget, TermBudgetExceeded};
use capelli_core::Partition;
use clap::{Parser, Subcommand};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "capelli",
    version,
    about = "Exact verification of Capelli type identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exit 0 iff every check holds.
    Verify(VerifyArgs),
    /// Print one object in canonical form.
    Compute {
        #[arg(value_enum)]
        what: What,
        #[command(flatten)]
        args: ComputeArgs,
        /// Write a JSON record to this path ("-" for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Abort with exit code 3 once an intermediate exceeds this many terms.
        #[arg(long)]
        max_terms: Option<usize>,
    },
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    nprime: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Tensor degree for higher-capelli-t.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    lambda: Option<Partition>,
    #[arg(long)]
    mu: Option<Partition>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report to this path ("-" for stdout).
    #[arg(long)]
    json: Option<PathBuf>,
    /// Run independent cases in parallel; the report order does not change.
    #[arg(long)]
    parallel: bool,
    /// Abort with exit code 3 once an intermediate exceeds this many terms.
    #[arg(long)]
    max_terms: Option<usize>,
    /// Compute commutant ranks modulo 2^61 - 1 (a lower bound, exact when the bound is met).
    #[arg(long)]
    modular: bool,
    /// Record wall-clock times in the report, which makes it run-dependent.
    #[arg(long)]
    timings: bool,
    #[arg(long, hide = true)]
    inject_failure: bool,
}

fn write_json(path: &PathBuf, body: &str) -> Result<(), String> {
    if path.as_os_str() == "-" {
        print!("{body}");
        Ok(())
    } else {
        std::fs::write(path, body).map_err(|e| format!("cannot write {}: {e}", path.display()))
    }
}

fn verify(a: VerifyArgs) -> i32 {
    let cfg = SuiteConfig {
        n: a.n,
        nprime: a.nprime,
        p: a.p,
        q: a.q,
        r: a.r,
        m: a.m,
        lambda: a.lambda,
        mu: a.mu,
        seed: a.seed,
        modular: a.modular,
        parallel: a.parallel,
        max_terms: a.max_terms,
        timings: a.timings,
        inject_failure: a.inject_failure,
    };
    let report = match run_verify(a.suite, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let to_stdout = a.json.as_ref().is_some_and(|p| p.as_os_str() == "-");
    if !to_stdout {
        print!("{}", report.to_text());
    }
    if let Some(path) = &a.json {
        if let Err(e) = write_json(path, &report.to_json()) {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    }
    report.exit_code
}

fn compute_cmd(
    what: What,
    args: ComputeArgs,
    json_path: Option<PathBuf>,
    max_terms: Option<usize>,
) -> i32 {
    set_term_budget(max_terms);
    let result = panic::catch_unwind(AssertUnwindSafe(|| compute(what, &args)));
    set_term_budget(None);
    let (value, params) = match result {
        Ok(Ok(v)) => v,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
        Err(payload) => match payload.downcast::<TermBudgetExceeded>() {
            Ok(b) => {
                eprintln!(
                    "error: term budget exceeded: {} terms > {}",
                    b.terms, b.budget
                );
                return EXIT_BUDGET;
            }
            Err(other) => panic::resume_unwind(other),
        },
    };
    match &json_path {
        Some(path) => {
            let what = serde_json::to_value(format!("{what:?}")).unwrap_or_default();
            let record = json!({ "what": what, "parameters": params, "value": value });
            let mut body = serde_json::to_string_pretty(&record).expect("json");
            body.push('\n');
            if let Err(e) = write_json(path, &body) {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
            if path.as_os_str() != "-" {
                println!("{value}");
            }
        }
        None => println!("{value}"),
    }
    EXIT_OK
}

fn main() -> ExitCode {
    install_panic_hook();
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Compute {
            what,
            args,
            json,
            max_terms,
        } => compute_cmd(what, args, json, max_terms),
    };
    ExitCode::from(code as u8)
}

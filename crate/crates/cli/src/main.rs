use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclohopf::adjoint::{solution_space, solve_adjoint, Ad2Form, AdjointError};
use cyclohopf::braided_adjoint::build_h_ad;
use cyclohopf::constructions::{
    coideal_comodule_algebra, comodule_algebra_k, regular_comodule_algebra, trivial_comodule_algebra,
};
use cyclohopf::json::{document, emit_json};
use cyclohopf::scalar::{make_field, parse_rational};
use cyclohopf::suites;
use cyclohopf::{AdjointProblem, Condition, TaftSetup, VerificationReport};

const TAFT_BASIS: &str = "taft: x^a g^b at index a*n+b";
const ADJOINT_BASIS: &str = "adjoint: alpha(e_x (x) e_k) coordinate l at index (x*dimK+k)*dimK+l; taft: x^a g^b at a*n+b";

#[derive(Parser, Debug)]
#[command(name = "cyclohopf", version, about = "Exact Taft algebra, Yetter-Drinfeld and adjoint algebra computations")]
struct Cli {
    /// Seed for the pseudo-random field axiom spot checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the JSON document here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include per-claim timings in the report
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Comodule {
    /// K(d, xi)
    K,
    Regular,
    Trivial,
    /// The coideal subalgebra kC_d
    Coideal,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum Suite {
    Field,
    Hopf,
    Rmatrix,
    Adjoint,
    Braided,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the Taft algebra by bosonization and check it
    Taft {
        #[arg(long)]
        n: usize,
    },
    /// Solve an adjoint algebra problem
    Adjoint {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value = "0")]
        xi: String,
        /// Comma separated subset of ad1,ad2,ad3
        #[arg(long, default_value = "ad1,ad2,ad3")]
        conditions: String,
        #[arg(long, value_enum, default_value_t = Comodule::K)]
        comodule: Comodule,
        /// Solve for alpha(x (x) 1) only, using Ad3 to inflate
        #[arg(long)]
        reduced: bool,
        /// Use R-bar in place of R in the conditions
        #[arg(long)]
        rbar: bool,
        /// Impose the literal form of Ad2 without the k_{-1} factor
        #[arg(long)]
        literal_ad2: bool,
    },
    /// Build the braided adjoint algebra and check it against the given modules
    BraidedAdjoint {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "trivial,regular")]
        modules: Vec<String>,
    },
    /// Run a verification suite over a list of n
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
    },
    /// Summarize a previously written report
    Report {
        #[arg(long)]
        json: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Math,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn setup(n: usize) -> Result<Arc<TaftSetup>, Failure> {
    TaftSetup::new(n).map(Arc::new).map_err(usage)
}

fn write_out(cli: &Cli, doc: &Value) -> Result<(), Failure> {
    let text = emit_json(doc);
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Writes the document, prints the summary on stderr, and maps failures to exit code 1.
fn finish(cli: &Cli, n: usize, convention: &str, mut payload: Value, mut report: VerificationReport) -> Result<(), Failure> {
    let dups = report.finalize();
    if !dups.is_empty() {
        return Err(Failure::Usage(format!("duplicate claim ids: {dups:?}")));
    }
    payload["report"] = report.to_json(cli.timing);
    payload["summary"] = json!(report.summary_line());
    write_out(cli, &document(&make_field(n), convention, payload))?;
    eprintln!("{}", report.summary_line());
    if report.all_passed() {
        Ok(())
    } else {
        for e in report.failures() {
            eprintln!("FAIL {}", e.claim_id);
        }
        Err(Failure::Math)
    }
}

fn lcm(ns: &[usize]) -> usize {
    ns.iter().fold(1, |acc, &n| num_integer::lcm(acc, n.max(1)))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Taft { n } => {
            let s = setup(*n)?;
            let report = suites::hopf_suite(*n).map_err(usage)?;
            let payload = json!({ "n": n, "taft": s.taft.to_json() });
            finish(cli, *n, TAFT_BASIS, payload, report)
        }
        Command::Adjoint { n, d, xi, conditions, comodule, reduced, rbar, literal_ad2 } => {
            let s = setup(*n)?;
            let conds = Condition::parse_list(conditions)
                .ok_or_else(|| Failure::Usage(format!("cannot parse conditions '{conditions}'")))?;
            let xi_r = parse_rational(xi).map_err(usage)?;
            let (comod, desc) = match comodule {
                Comodule::K => {
                    let k = comodule_algebra_k(&s, *d, xi_r).map_err(usage)?;
                    let desc = k.describe();
                    (k.comod, desc)
                }
                Comodule::Regular => (regular_comodule_algebra(&s), json!("regular")),
                Comodule::Trivial => (trivial_comodule_algebra(&s), json!("trivial")),
                Comodule::Coideal => (coideal_comodule_algebra(&s, *d).map_err(usage)?, json!({ "coideal_d": d })),
            };
            let conds: Vec<Condition> = conds.into_iter().collect();
            let form = if *literal_ad2 { Ad2Form::Literal } else { Ad2Form::Corrected };
            let p = AdjointProblem::new(s.clone(), comod, &conds)
                .with_reduced(*reduced)
                .with_rbar(*rbar)
                .with_ad2_form(form);
            let mut payload = json!({ "comodule": desc });
            let algebra_problem = p.has(Condition::Ad1) && p.has(Condition::Ad3);
            let solved = if algebra_problem { Some(solve_adjoint(&p)) } else { None };
            let report = match solved {
                Some(Ok(a)) => {
                    payload["dim"] = json!(a.dim());
                    payload["adjoint"] = a.to_json();
                    suites::structure_checks(&a, "adjoint")
                }
                // Without Ad1 and Ad3 the solutions need not form an algebra; report the space only.
                None | Some(Err(AdjointError::ClosureFailure { .. })) => {
                    let basis = solution_space(&p).map_err(usage)?;
                    payload["dim"] = json!(basis.dim());
                    payload["problem"] = p.describe();
                    payload["structure"] = json!("not checked: the solutions need not form an algebra");
                    VerificationReport::new()
                }
                Some(Err(e)) => return Err(usage(e)),
            };
            finish(cli, *n, ADJOINT_BASIS, payload, report)
        }
        Command::BraidedAdjoint { n, modules } => {
            let report = suites::braided_adjoint_suite(*n, modules).map_err(Failure::Usage)?;
            let h = build_h_ad(setup(*n)?);
            let payload = json!({ "n": n, "modules": modules, "h_ad": h.to_json() });
            finish(cli, *n, TAFT_BASIS, payload, report)
        }
        Command::Verify { suite, n } => {
            let mut report = VerificationReport::new();
            let want = |s: Suite| *suite == s || *suite == Suite::All;
            for &k in n {
                if k == 0 {
                    return Err(Failure::Usage("n must be positive".into()));
                }
                if want(Suite::Field) {
                    report.extend(suites::field_suite(k, cli.seed));
                }
                if want(Suite::Hopf) {
                    report.extend(suites::hopf_suite(k).map_err(usage)?);
                }
                if want(Suite::Rmatrix) {
                    report.extend(suites::rmatrix_suite(k));
                }
                if want(Suite::Adjoint) {
                    report.extend(suites::adjoint_suite(k).map_err(usage)?);
                }
                if want(Suite::Braided) {
                    let names = vec!["trivial".to_string(), "regular".to_string()];
                    report.extend(suites::braided_adjoint_suite(k, &names).map_err(Failure::Usage)?);
                }
            }
            let payload = json!({ "suite": format!("{suite:?}").to_lowercase(), "n": n, "seed": cli.seed });
            finish(cli, lcm(n), TAFT_BASIS, payload, report)
        }
        Command::Report { json: path } => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let doc: Value = serde_json::from_str(&text).map_err(usage)?;
            let entries = doc.get("report").unwrap_or(&doc);
            let report = VerificationReport::from_json(entries)
                .ok_or_else(|| Failure::Usage("no report entries found".into()))?;
            println!("{}", report.summary_line());
            for e in report.failures() {
                println!("FAIL {}", e.claim_id);
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Math)
            }
        }
    }
}

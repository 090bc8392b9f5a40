//! `maxcomm`: JSON front end for the computations in `maxcomm-core`.
//!
//! Exit status is 0 when every verification holds, 2 when a mathematical
//! check fails, and 1 for usage, parse and unsupported-domain errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use maxcomm_core::constructions::{self, Lemma1Variant, LemmaCheck};
use maxcomm_core::json::{
    decomposition_to_json, domain_from_json, enumeration_to_json, generator_from_json, subspace_to_json,
};
use maxcomm_core::oracle::{self, unit_absorption};
use maxcomm_core::{
    algebra_closure, centralizer_basis, decompose, is_commutative, is_maximal_commutative, DMat, Domain, Error,
    Subalgebra,
};

const GOLDEN_DIR_VAR: &str = "MAXCOMM_GOLDEN_DIR";

#[derive(Parser)]
#[command(name = "maxcomm", version, about = "Maximal commutative subalgebras of matrix rings over division rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Instance {
    /// Division ring: Q, F<p>, H (Hamilton quaternions), quat(a,b), or a JSON domain object.
    #[arg(long)]
    domain: String,
    /// Matrix size.
    #[arg(long)]
    n: usize,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Generators {
    #[command(flatten)]
    instance: Instance,
    /// JSON list of generators (names like "N", "i*N", "E1,2", or matrices); prefix with @ to read a file.
    #[arg(long, default_value = "[]")]
    gens: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Sweep,
}

#[derive(Subcommand)]
enum Command {
    /// Centralizer of the generators in M_n(D).
    Centralizer(Generators),
    /// Smallest unital subalgebra containing the generators.
    Closure(Generators),
    /// Check the structure theorem on the closure of the generators.
    Verify {
        #[command(flatten)]
        gens: Generators,
        /// Seed for the random unit-absorption samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        samples: usize,
    },
    /// Split the closure of the generators into local factors.
    Decompose(Generators),
    /// Centralizer of the Jordan block (or its L-multiples) against the claimed direct sum.
    Lemma1 {
        #[command(flatten)]
        instance: Instance,
        /// plainN or LN.
        #[arg(long, default_value = "plainN")]
        variant: String,
    },
    /// Centralizer of D E_{1,n} against the membership predicate.
    Lemma2(Instance),
    /// Banded ring from the centralizer of L N and D E_{1,n}.
    Example1(Instance),
    /// The ring L[N].
    Example2(Instance),
    /// Maximal commutative subrings of M_n(F_p) by brute force.
    Enumerate {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: Mode,
        #[arg(long, default_value_t = 2)]
        max_gens: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compare with a golden report; relative paths fall back to $MAXCOMM_GOLDEN_DIR.
        #[arg(long)]
        check: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotCommutative | Error::RadicalCertificationFailed(_) | Error::NotASubalgebra(_) => {
                Failure::Verification(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(Value, bool), Failure>;

fn parse_domain(s: &str) -> Result<Domain, Failure> {
    let s = s.trim();
    if s.starts_with('{') {
        let v: Value = serde_json::from_str(s).map_err(|e| Failure::Usage(format!("bad domain JSON: {e}")))?;
        Ok(domain_from_json(&v)?)
    } else {
        Ok(s.parse()?)
    }
}

fn read_gens(domain: &Domain, n: usize, raw: &str) -> Result<Vec<DMat>, Failure> {
    let text = match raw.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?,
        None => raw.to_string(),
    };
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("bad --gens JSON: {e}")))?;
    let items = v.as_array().ok_or_else(|| Failure::Usage("--gens must be a JSON list".into()))?;
    items.iter().map(|g| generator_from_json(domain, n, g).map_err(Failure::from)).collect()
}

fn instance(i: &Instance) -> Result<Domain, Failure> {
    if i.n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    parse_domain(&i.domain)
}

fn closure_of(g: &Generators) -> Result<Subalgebra, Failure> {
    let domain = instance(&g.instance)?;
    let gens = read_gens(&domain, g.instance.n, &g.gens)?;
    Ok(algebra_closure(&domain, g.instance.n, &gens))
}

fn lemma_json(check: &LemmaCheck) -> (Value, bool) {
    let equal = check.equal();
    let v = json!({
        "claimDimZ": check.claimed.dim_z(),
        "computedDimZ": check.computed.dim_z(),
        "equal": equal,
        "claimed": subspace_to_json(&check.claimed),
        "computed": subspace_to_json(&check.computed),
    });
    (v, equal)
}

fn golden_path(p: &Path) -> PathBuf {
    if p.is_absolute() || p.exists() {
        return p.to_path_buf();
    }
    match std::env::var_os(GOLDEN_DIR_VAR) {
        Some(dir) => Path::new(&dir).join(p),
        None => p.to_path_buf(),
    }
}

fn run(command: Command) -> (Outcome, Option<PathBuf>) {
    match command {
        Command::Centralizer(g) => {
            let out = g.instance.out.clone();
            let res = (|| {
                let domain = instance(&g.instance)?;
                let gens = read_gens(&domain, g.instance.n, &g.gens)?;
                Ok((subspace_to_json(&centralizer_basis(&domain, g.instance.n, &gens)), true))
            })();
            (res, out)
        }
        Command::Closure(g) => {
            let out = g.instance.out.clone();
            let res = closure_of(&g).map(|s| {
                let mut v = subspace_to_json(s.space());
                v["commutative"] = json!(is_commutative(&s));
                (v, true)
            });
            (res, out)
        }
        Command::Verify { gens, seed, samples } => {
            let out = gens.instance.out.clone();
            let res = (|| {
                let s = closure_of(&gens)?;
                let commutative = is_commutative(&s);
                if !commutative {
                    return Ok((json!({ "commutative": false, "passed": false }), false));
                }
                let maximal = is_maximal_commutative(&s)?;
                let absorption = unit_absorption(&s, samples, seed);
                let checks = if maximal { Some(oracle::verify_theorem(&s)?) } else { None };
                let passed = maximal && absorption.passed() && checks.as_ref().is_some_and(|c| c.passed());
                let v = json!({
                    "commutative": true,
                    "maximal": maximal,
                    "dimZ": s.dim_z(),
                    "seed": seed,
                    "unitAbsorption": absorption,
                    "checks": checks,
                    "passed": passed,
                });
                Ok((v, passed))
            })();
            (res, out)
        }
        Command::Decompose(g) => {
            let out = g.instance.out.clone();
            let res = (|| {
                let s = closure_of(&g)?;
                let r = decompose(&s)?;
                let ok = r.j_equals_n
                    && r.nil_index_at_most_n
                    && r.reduced_implies_fields
                    && (!r.maximal || r.factor_count_at_most_n);
                Ok((decomposition_to_json(&r), ok))
            })();
            (res, out)
        }
        Command::Lemma1 { instance: i, variant } => {
            let out = i.out.clone();
            let res = (|| {
                let domain = instance(&i)?;
                let variant: Lemma1Variant = variant.parse()?;
                Ok(lemma_json(&constructions::lemma1_verify(&domain, i.n, variant)?))
            })();
            (res, out)
        }
        Command::Lemma2(i) => {
            let out = i.out.clone();
            let res = (|| {
                let domain = instance(&i)?;
                Ok(lemma_json(&constructions::lemma2_verify(&domain, i.n)?))
            })();
            (res, out)
        }
        Command::Example1(i) => {
            let out = i.out.clone();
            let res = (|| {
                let domain = instance(&i)?;
                let check = constructions::example1_verify(&domain, i.n)?;
                let ring = constructions::example1_ring(&domain, i.n)?;
                let mut v = serde_json::to_value(&check).expect("check serializes");
                v["ring"] = subspace_to_json(ring.space());
                v["passed"] = json!(check.all_hold());
                Ok((v, check.all_hold()))
            })();
            (res, out)
        }
        Command::Example2(i) => {
            let out = i.out.clone();
            let res = (|| {
                let domain = instance(&i)?;
                let check = constructions::example2_verify(&domain, i.n)?;
                let ring = constructions::example2_ring(&domain, i.n)?;
                let mut v = serde_json::to_value(&check).expect("check serializes");
                v["ring"] = subspace_to_json(ring.space());
                v["passed"] = json!(check.all_hold(i.n));
                Ok((v, check.all_hold(i.n)))
            })();
            (res, out)
        }
        Command::Enumerate { p, n, mode, max_gens, out, check } => {
            let res = (|| {
                let report = match mode {
                    Mode::Exhaustive => oracle::enumerate_exhaustive(p, n)?,
                    Mode::Sweep => oracle::sweep_generated(p, n, max_gens)?,
                };
                let v = enumeration_to_json(&report);
                let mut ok = report.all_theorem_checks_passed();
                if let Some(golden) = check {
                    let path = golden_path(&golden);
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    let expected: Value = serde_json::from_str(&text)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                    if expected != v {
                        eprintln!("report differs from golden file {}", path.display());
                        ok = false;
                    }
                }
                Ok((v, ok))
            })();
            (res, out)
        }
    }
}

fn emit(v: &Value, out: Option<&Path>) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(v).expect("JSON values serialize");
    text.push('\n');
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (outcome, out) = run(cli.command);
    match outcome {
        Ok((v, ok)) => {
            if let Err(e) = emit(&v, out.as_deref()) {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(2)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}

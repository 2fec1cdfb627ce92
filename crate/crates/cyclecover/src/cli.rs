//! Command-line frontend: resolve an instance from a file or generator spec,
//! run the requested computation, print a JSON report to stdout and a short
//! summary to stderr. Exit 0 on success, 2 when a checked inequality fails,
//! 1 on operational errors (reported as structured JSON).

use crate::arith::{rational_string, ArithError, FieldSpec};
use crate::complex::{binomial, ComplexError, SimplicialComplex};
use crate::decomp::{build_decomposition_tree, validate_tree, DecompError};
use crate::extremal::{
    gamma_bruteforce, gamma_partition, max_circuit_exact, max_circuit_greedy, s_profile,
    ExtremalError, DEFAULT_BUDGET,
};
use crate::gen::{generate, GenError, GenSpec, Generated};
use crate::matroid::{LinearMatroid, MatroidError};
use crate::verify::{
    analyze_complex, analyze_matroid, verify_lnpr, AnalyzeOptions, VerifyError,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot access {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl CliError {
    /// Stable machine-readable discriminant for the error JSON.
    fn kind(&self) -> &'static str {
        fn extremal(e: &ExtremalError) -> &'static str {
            match e {
                ExtremalError::HasLoops { .. } => "HasLoops",
                ExtremalError::NoCircuitExists => "NoCircuitExists",
                ExtremalError::EmptyGroundSet => "EmptyGroundSet",
                ExtremalError::BudgetExceeded { .. } => "BudgetExceeded",
                ExtremalError::GroundSetTooLarge { .. } => "GroundSetTooLarge",
            }
        }
        fn matroid(e: &MatroidError) -> &'static str {
            match e {
                MatroidError::GroundSetTooLarge { .. } => "GroundSetTooLarge",
                MatroidError::Parse { .. } => "ParseError",
                _ => "MatroidError",
            }
        }
        fn decomp(e: &DecompError) -> &'static str {
            match e {
                DecompError::NotConnected { .. } => "NotConnected",
                DecompError::HasLoops { .. } => "HasLoops",
                DecompError::TooSmall { .. } => "TooSmall",
                DecompError::SearchBudgetExceeded { .. } => "BudgetExceeded",
                DecompError::Matroid(inner) => matroid(inner),
            }
        }
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Io { .. } => "Io",
            CliError::Arith(_) => "InvalidField",
            CliError::Complex(ComplexError::Parse { .. }) => "ParseError",
            CliError::Complex(_) => "ValidationError",
            CliError::Matroid(e) => matroid(e),
            CliError::Extremal(e) => extremal(e),
            CliError::Decomp(e) => decomp(e),
            CliError::Gen(GenError::Parse { .. }) => "ParseError",
            CliError::Gen(GenError::UnknownFamily { .. }) => "UnknownFamily",
            CliError::Gen(_) => "InvalidParameters",
            CliError::Verify(VerifyError::Extremal(e)) => extremal(e),
            CliError::Verify(VerifyError::Matroid(e)) => matroid(e),
            CliError::Verify(VerifyError::Decomp(e)) => decomp(e),
            CliError::Verify(VerifyError::NeedsPrimeField) => "NeedsPrimeField",
            CliError::Verify(VerifyError::NotPure) => "NotPure",
            CliError::Verify(VerifyError::NoCycles) => "NoCycles",
            CliError::Verify(_) => "InvalidParameters",
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "cyclecover",
    version,
    about = "Exact cycle, covering, and decomposition analysis for simplicial complexes and linear matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate an instance and print it in its file format
    Generate(InstanceArgs),
    /// Full report: invariants, extremal quantities, and every verdict
    Analyze(InstanceArgs),
    /// Maximum simple cycle (largest circuit), exact unless --heuristic
    MaxCycle(InstanceArgs),
    /// Covering number with a certified partition into independent sets
    Gamma(InstanceArgs),
    /// Circuit-contraction decomposition tree, built and validated
    Decompose(DecomposeArgs),
    /// Inequality verdicts only; exits 2 when any fails
    Verify(InstanceArgs),
    /// Brute-force reference computations (guardrailed; see --force)
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
struct InstanceArgs {
    /// Input file, facet or matrix format (auto-detected by first line)
    #[arg(long = "in", value_name = "PATH", conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// Generator spec, e.g. complete-complex:n=5,d=2 or vector-space:q=2,k=3
    #[arg(long = "gen", value_name = "SPEC")]
    gen: Option<String>,
    /// Coefficient field: a prime or "rational"
    #[arg(long, default_value = "2", value_name = "p|rational")]
    field: String,
    /// Seed for all randomized pieces
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Node budget for exact circuit searches
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_name = "NODES")]
    budget: u64,
    /// Lift the exhaustive-computation guardrails
    #[arg(long)]
    force: bool,
    /// Accept a heuristic lower bound for c when the budget runs out
    #[arg(long)]
    heuristic: bool,
    /// Write the report here (atomically) instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    #[command(flatten)]
    common: InstanceArgs,
    /// Emit GraphViz DOT instead of JSON
    #[arg(long)]
    dot: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    common: InstanceArgs,
    /// Reference computation to run
    #[arg(long, value_enum)]
    op: OracleOp,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OracleOp {
    /// Exhaustive covering number and exact density
    Gamma,
    /// Size profile s(i) for i up to the rank
    SProfile,
    /// Every circuit, sorted by size then lexicographically
    Circuits,
    /// Maximum circuit by full enumeration
    MaxCycle,
}

enum Instance {
    Complex(SimplicialComplex),
    Matroid(LinearMatroid),
}

struct Resolved {
    instance: Instance,
    field: FieldSpec,
    genspec: Option<GenSpec>,
    source: Option<String>,
}

impl Resolved {
    /// Where the instance came from, embedded in every report.
    fn provenance(&self) -> Value {
        match (&self.genspec, &self.source) {
            (Some(spec), _) => json!({ "gen_spec": spec.to_json() }),
            (_, Some(path)) => json!({ "source": path }),
            _ => Value::Null,
        }
    }

    /// The matroid under study: the instance itself, or the boundary matroid
    /// of the complex in its top dimension.
    fn matroid(&self) -> Result<LinearMatroid, CliError> {
        match &self.instance {
            Instance::Matroid(m) => Ok(m.clone()),
            Instance::Complex(k) => {
                Ok(LinearMatroid::from_complex(k, k.dimension(), self.field)?)
            }
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// Facet files hold whitespace-separated vertex lines; matrix files start
/// with a "field" declaration. Comments and blank lines are skipped.
fn detect_matrix(text: &str) -> bool {
    text.lines()
        .map(|l| l.split_once('#').map_or(l, |(head, _)| head).trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("field"))
}

fn resolve(args: &InstanceArgs) -> Result<Resolved, CliError> {
    let field = FieldSpec::parse(&args.field)?;
    if let Some(spec_text) = &args.gen {
        let spec = GenSpec::parse(spec_text, field, args.seed)?;
        let instance = match generate(&spec)? {
            Generated::Complex(k) => Instance::Complex(k),
            Generated::Matroid(m) => Instance::Matroid(m),
        };
        return Ok(Resolved { instance, field, genspec: Some(spec), source: None });
    }
    if let Some(path) = &args.input {
        let text = read_file(path)?;
        let instance = if detect_matrix(&text) {
            Instance::Matroid(LinearMatroid::parse_matrix_text(&text)?)
        } else {
            Instance::Complex(SimplicialComplex::parse_facet_text(&text)?)
        };
        return Ok(Resolved {
            instance,
            field,
            genspec: None,
            source: Some(path.display().to_string()),
        });
    }
    Err(CliError::Usage("exactly one of --in or --gen is required".to_string()))
}

fn options(args: &InstanceArgs) -> AnalyzeOptions {
    AnalyzeOptions {
        budget: args.budget,
        force: args.force,
        heuristic: args.heuristic,
        seed: args.seed,
    }
}

/// What one invocation produced: the payload for stdout (or --out), a
/// one-line summary for stderr, and the exit code.
struct Outcome {
    exit: i32,
    payload: Option<String>,
    summary: String,
}

fn labels_of(m: &LinearMatroid, elems: &[usize]) -> Vec<String> {
    elems.iter().map(|&e| m.label(e).to_string()).collect()
}

fn json_payload(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn cmd_generate(args: &InstanceArgs) -> Result<Outcome, CliError> {
    if args.input.is_some() {
        return Err(CliError::Usage("generate takes --gen, not --in".to_string()));
    }
    let spec_text = args
        .gen
        .as_ref()
        .ok_or_else(|| CliError::Usage("generate requires --gen <spec>".to_string()))?;
    let field = FieldSpec::parse(&args.field)?;
    let spec = GenSpec::parse(spec_text, field, args.seed)?;
    let generated = generate(&spec)?;
    let summary = format!("generate: {} (seed {})", spec.family, spec.seed);
    Ok(Outcome { exit: 0, payload: Some(generated.to_text()), summary })
}

fn cmd_analyze(args: &InstanceArgs) -> Result<Outcome, CliError> {
    let resolved = resolve(args)?;
    let opts = options(args);
    let report = match &resolved.instance {
        Instance::Complex(k) => analyze_complex(k, k.dimension(), resolved.field, &opts)?,
        Instance::Matroid(m) => analyze_matroid(m, &opts)?,
    };
    let mut v = report.to_json();
    v["instance"]["provenance"] = resolved.provenance();
    let all = report.all_hold();
    let gamma = report.gamma.map_or("n/a".to_string(), |g| g.to_string());
    let summary = format!(
        "analyze: c={}{}, gamma={}, {} verdicts, {}",
        report.c,
        if report.c_exact { "" } else { " (lower bound)" },
        gamma,
        report.verdicts.len(),
        if all { "all hold" } else { "FAILED" },
    );
    Ok(Outcome {
        exit: if all { 0 } else { 2 },
        payload: Some(json_payload(&v)),
        summary,
    })
}

/// Least x with C(x+1, d+1) equal to the family size, if any: the parameter
/// at which the colex rank bound is stated.
fn solve_rank_parameter(d: usize, s: u64) -> Option<u64> {
    let mut x = d as u64;
    loop {
        let b = binomial(x + 1, d as u64 + 1);
        if b == s {
            return Some(x);
        }
        if b > s {
            return None;
        }
        x += 1;
    }
}

fn cmd_verify(args: &InstanceArgs) -> Result<Outcome, CliError> {
    let resolved = resolve(args)?;
    let opts = options(args);
    let report = match &resolved.instance {
        Instance::Complex(k) => analyze_complex(k, k.dimension(), resolved.field, &opts)?,
        Instance::Matroid(m) => analyze_matroid(m, &opts)?,
    };
    let mut verdicts: Vec<Value> = report.verdicts.iter().map(|v| v.to_json()).collect();
    let mut all = report.all_hold();

    // Colex-prefix families additionally admit the rank lower bound at the
    // parameter their size encodes; complete complexes are the extreme case.
    let lnpr_params = match resolved.genspec.as_ref().map(|s| &s.family) {
        Some(crate::gen::Family::ColexFamily { n, d, s }) => {
            solve_rank_parameter(*d, *s).map(|x| (*n, *d, x))
        }
        Some(crate::gen::Family::CompleteComplex { n, d }) => Some((*n, *d, *n as u64 - 1)),
        _ => None,
    };
    let mut notes = report.notes.clone();
    if let Some((n, d, x)) = lnpr_params {
        let verdict = verify_lnpr(n, d, x, resolved.field)?;
        all &= verdict.holds;
        verdicts.push(verdict.to_json());
        notes.push(
            "a lower bound on the size profile cannot by itself cap the covering number; \
             the exact colex rank bound is what gets verified"
                .to_string(),
        );
    }

    let mut instance = report.instance.clone();
    instance["provenance"] = resolved.provenance();
    let failed = verdicts.iter().filter(|v| v["holds"] == false).count();
    let v = json!({
        "instance": instance,
        "c": report.c,
        "c_exact": report.c_exact,
        "gamma": report.gamma,
        "verdicts": verdicts,
        "all_hold": all,
        "notes": notes,
    });
    let summary = format!(
        "verify: {} verdicts, {}",
        v["verdicts"].as_array().map_or(0, Vec::len),
        if all { "all hold".to_string() } else { format!("{failed} FAILED") },
    );
    Ok(Outcome { exit: if all { 0 } else { 2 }, payload: Some(json_payload(&v)), summary })
}

fn cmd_max_cycle(args: &InstanceArgs) -> Result<Outcome, CliError> {
    let resolved = resolve(args)?;
    let m = resolved.matroid()?;
    let result = match max_circuit_exact(&m, args.budget) {
        Ok(r) => Some(r),
        Err(ExtremalError::NoCircuitExists) => None,
        Err(ExtremalError::BudgetExceeded { best, .. }) if args.heuristic => match best {
            Some(b) => Some(b),
            None => Some(max_circuit_greedy(&m, 8, args.seed)?),
        },
        Err(e) => return Err(e.into()),
    };
    let (v, summary) = match result {
        Some(r) => (
            json!({
                "instance": resolved.provenance(),
                "c": r.size(),
                "circuit": labels_of(&m, &r.circuit),
                "exact": r.exact,
                "nodes": r.nodes,
            }),
            format!(
                "max-cycle: c={}{} ({} nodes)",
                r.size(),
                if r.exact { "" } else { " (lower bound)" },
                r.nodes
            ),
        ),
        None => (
            json!({
                "instance": resolved.provenance(),
                "c": 0,
                "circuit": Value::Null,
                "exact": true,
                "nodes": 0,
            }),
            "max-cycle: no circuit exists".to_string(),
        ),
    };
    Ok(Outcome { exit: 0, payload: Some(json_payload(&v)), summary })
}

fn cmd_gamma(args: &InstanceArgs) -> Result<Outcome, CliError> {
    let resolved = resolve(args)?;
    let m = resolved.matroid()?;
    let cover = gamma_partition(&m)?;
    let blocks: Vec<Vec<String>> = cover.partition.iter().map(|b| labels_of(&m, b)).collect();
    let v = json!({
        "instance": resolved.provenance(),
        "gamma": cover.gamma,
        "partition": blocks,
        "witness": labels_of(&m, &cover.witness),
    });
    let summary = format!("gamma: {} independent classes cover {} elements", cover.gamma, m.n_elements());
    Ok(Outcome { exit: 0, payload: Some(json_payload(&v)), summary })
}

fn cmd_decompose(args: &DecomposeArgs) -> Result<Outcome, CliError> {
    let resolved = resolve(&args.common)?;
    let m = resolved.matroid()?;
    let tree = build_decomposition_tree(&m, args.common.budget)?;
    if args.dot {
        let summary = format!(
            "decompose: {} nodes, depth {} (dot)",
            tree.node_count(),
            tree.depth()
        );
        return Ok(Outcome { exit: 0, payload: Some(tree.to_dot()), summary });
    }
    let report = validate_tree(&tree, args.common.budget);
    let v = json!({
        "instance": resolved.provenance(),
        "tree": tree.to_json(),
        "validation": serde_json::to_value(&report).expect("report serializes"),
    });
    let summary = format!(
        "decompose: {} nodes, depth {}, max circuit {}, validation {}",
        tree.node_count(),
        tree.depth(),
        tree.max_circuit_size(),
        if report.passed { "passed" } else { "FAILED" },
    );
    Ok(Outcome {
        exit: if report.passed { 0 } else { 2 },
        payload: Some(json_payload(&v)),
        summary,
    })
}

fn cmd_oracle(args: &OracleArgs) -> Result<Outcome, CliError> {
    let resolved = resolve(&args.common)?;
    let m = resolved.matroid()?;
    let force = args.common.force;
    let (v, summary) = match args.op {
        OracleOp::Gamma => {
            let r = gamma_bruteforce(&m, force)?;
            (
                json!({
                    "instance": resolved.provenance(),
                    "gamma": r.gamma,
                    "density": rational_string(&r.density),
                    "argmax": labels_of(&m, &r.argmax),
                }),
                format!("oracle gamma: {} (density {})", r.gamma, rational_string(&r.density)),
            )
        }
        OracleOp::SProfile => {
            let profile = s_profile(&m, m.rank(), force)?;
            let summary = format!("oracle s-profile: {} entries", profile.len());
            (json!({ "instance": resolved.provenance(), "s_profile": profile }), summary)
        }
        OracleOp::Circuits => {
            let list = m.enumerate_circuits(None, None, force)?;
            let circuits: Vec<Vec<String>> =
                list.circuits.iter().map(|c| labels_of(&m, c)).collect();
            let summary = format!("oracle circuits: {} found", circuits.len());
            (
                json!({
                    "instance": resolved.provenance(),
                    "count": circuits.len(),
                    "circuits": circuits,
                }),
                summary,
            )
        }
        OracleOp::MaxCycle => {
            let list = m.enumerate_circuits(None, None, force)?;
            let best = list.circuits.iter().max_by_key(|c| c.len());
            let (c, circuit) = match best {
                // Ties sort lexicographically, so the first of maximum size
                // is the least one.
                Some(max) => {
                    let first = list
                        .circuits
                        .iter()
                        .find(|c| c.len() == max.len())
                        .expect("max exists");
                    (first.len(), json!(labels_of(&m, first)))
                }
                None => (0, Value::Null),
            };
            (
                json!({ "instance": resolved.provenance(), "c": c, "circuit": circuit }),
                format!("oracle max-cycle: c={c}"),
            )
        }
    };
    Ok(Outcome { exit: 0, payload: Some(json_payload(&v)), summary })
}

/// Writes via a sibling temp file plus rename, so partial reports never
/// appear at the target path.
fn write_atomic(path: &Path, content: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    let tmp = path.with_file_name(format!(
        ".{}.tmp{}",
        path.file_name().map_or_else(|| "out".into(), |n| n.to_string_lossy()),
        std::process::id(),
    ));
    fs::write(&tmp, content).map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::MaxCycle(a) => cmd_max_cycle(a),
        Command::Gamma(a) => cmd_gamma(a),
        Command::Decompose(a) => cmd_decompose(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Oracle(a) => cmd_oracle(a),
    }
}

fn out_path(cli: &Cli) -> Option<&PathBuf> {
    let common = match &cli.command {
        Command::Generate(a)
        | Command::Analyze(a)
        | Command::MaxCycle(a)
        | Command::Gamma(a)
        | Command::Verify(a) => a,
        Command::Decompose(a) => &a.common,
        Command::Oracle(a) => &a.common,
    };
    common.out.as_ref()
}

/// Full invocation with the output channel abstracted, for in-process tests.
fn evaluate<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version render on stdout and succeed; real usage
            // errors go to stderr with the operational exit code.
            return Outcome {
                exit: if e.use_stderr() { 1 } else { 0 },
                payload: (!e.use_stderr()).then(|| e.to_string()),
                summary: if e.use_stderr() { e.to_string() } else { String::new() },
            };
        }
    };
    match dispatch(&cli) {
        Ok(mut outcome) => {
            if let Some(path) = out_path(&cli) {
                if let Some(payload) = outcome.payload.take() {
                    if let Err(e) = write_atomic(path, &payload) {
                        return Outcome {
                            exit: 1,
                            payload: Some(json_payload(&json!({
                                "error": { "kind": e.kind(), "message": e.to_string() },
                            }))),
                            summary: format!("error: {e}"),
                        };
                    }
                    outcome.summary.push_str(&format!(" -> {}", path.display()));
                }
            }
            outcome
        }
        Err(e) => Outcome {
            exit: 1,
            payload: Some(json_payload(&json!({
                "error": { "kind": e.kind(), "message": e.to_string() },
            }))),
            summary: format!("error: {e}"),
        },
    }
}

/// Entry point: returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let outcome = evaluate(args);
    if let Some(payload) = &outcome.payload {
        print!("{payload}");
    }
    if !outcome.summary.is_empty() {
        eprintln!("{}", outcome.summary);
    }
    outcome.exit
}

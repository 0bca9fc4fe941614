//! `stpps`: command-line front end for exact submodular partition
//! sequences, {s,t}-separating k-partition approximation, and hypergraph
//! orientation.
//!
//! Every command reads an input file, runs the corresponding solver, and
//! writes a machine-readable *run report* to stdout: a JSON object with the
//! command echo, the SHA-256 digest of the input, a status, the oracle call
//! count, and the result payload. Reports are deterministic for a given
//! input and flags — timing goes to stderr only. Curves can additionally be
//! exported as CSV.
//!
//! Exit codes: 0 success, 2 infeasible with certificate, 3 invalid input or
//! budget exceeded, 4 internal inconsistency.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use sha2::{Digest, Sha256};

use stpps_core::error::{Error, Result};
use stpps_core::hypergraph::{HyperEdge, Hypergraph, Orientation};
use stpps_core::instance::{parse_instance, Instance};
use stpps_core::kpartition::{
    approx_st_k_partition, exact_st_k_partition, monotone_ratio, posimodular_ratio,
    InterpolationBranch, KPartitionMode, KPartitionResult,
};
use stpps_core::oracle::{perturb_strict, recommended_strict_eps, StrictMode};
use stpps_core::orientation::{
    check_feasibility, find_orientation, max_ell_given_k, max_k_given_ell, reorient_k1_k2,
    FeasibilityVerdict, OrientationVerdict,
};
use stpps_core::pps::{
    compute_pps, compute_st_pps, curve, validate_sequence, CurveMode, PartitionSequence,
};
use stpps_core::value::{format_rat, rat_int, Value};
use stpps_core::{ElemSet, GroundSet, SubmodularOracle};

/// Exact solvers for principal partition sequences of submodular
/// functions, {s,t}-separating k-partitions, and hypergraph orientation.
#[derive(Parser)]
#[command(name = "stpps", version, about)]
struct Cli {
    /// Worker threads for independent sub-solves. Accepted for forward
    /// compatibility; all solvers currently run sequentially and the
    /// output does not depend on this value.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

/// Output format for sequence/curve commands.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    /// Run report as JSON (canonical).
    Json,
    /// Raw curve CSV (curves only).
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the principal partition sequence of an instance.
    Pps {
        /// Instance JSON file.
        instance: PathBuf,
        /// Compute the {s,t}-separating variant (requires terminals).
        #[arg(long)]
        st: bool,
        /// Output format; csv emits the envelope curve instead.
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        out: OutFormat,
    },
    /// Compute the parametric lower-envelope curve of an instance.
    Curve {
        /// Instance JSON file.
        instance: PathBuf,
        /// Restrict to {s,t}-separating partitions (requires terminals).
        #[arg(long)]
        st: bool,
        /// Output format (default csv).
        #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
        out: OutFormat,
    },
    /// Find a minimum-value {s,t}-separating k-partition (approximate by
    /// default, exhaustive with --exact).
    Kpart {
        /// Instance JSON file (must declare terminals).
        instance: PathBuf,
        /// Number of blocks, 2 ≤ k ≤ n.
        #[arg(short, long)]
        k: usize,
        /// Solve exactly by enumeration instead of approximating.
        #[arg(long)]
        exact: bool,
        /// Refuse to run on ground sets larger than this.
        #[arg(long)]
        budget_n: Option<usize>,
    },
    /// Hypergraph orientation: feasibility, synthesis, and optimization.
    Orient {
        #[command(subcommand)]
        action: OrientAction,
    },
    /// Validate a partition-sequence file against an instance.
    Validate {
        /// Sequence JSON (bare export or a `pps` run report).
        sequence: PathBuf,
        /// Instance JSON file.
        instance: PathBuf,
    },
    /// Generate a random instance JSON on stdout (deterministic by seed).
    Gen {
        /// Function family to generate.
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Ground-set size (≥ 3; terminals are the first/last elements).
        #[arg(long)]
        n: usize,
        /// RNG seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Common inputs of the orientation commands.
#[derive(clap::Args)]
struct OrientInput {
    /// Hypergraph file: `n m` / `mult v…` text, or a JSON mirror with
    /// optional labels and terminals.
    hypergraph: PathBuf,
    /// Source terminal (label or index); overrides the file.
    #[arg(long)]
    s: Option<String>,
    /// Sink terminal (label or index); overrides the file.
    #[arg(long)]
    t: Option<String>,
}

#[derive(Subcommand)]
enum OrientAction {
    /// Decide whether a (k,(s,t),l)-hyperarc-connected orientation exists.
    Check {
        #[command(flatten)]
        input: OrientInput,
        /// Global in-degree demand k.
        #[arg(short, long)]
        k: u64,
        /// Extra demand l on sets containing t but not s.
        #[arg(short, long)]
        l: u64,
    },
    /// Construct such an orientation (or a violating partition).
    Find {
        #[command(flatten)]
        input: OrientInput,
        #[arg(short, long)]
        k: u64,
        #[arg(short, long)]
        l: u64,
    },
    /// Largest feasible l for fixed k, with a certificate partition.
    Maxell {
        #[command(flatten)]
        input: OrientInput,
        #[arg(short, long)]
        k: u64,
    },
    /// Largest feasible k for fixed l, with both ratio certificates.
    Maxk {
        #[command(flatten)]
        input: OrientInput,
        #[arg(short, long)]
        l: u64,
    },
    /// Reorient a (k,(s,t),l)-feasible hypergraph into one that is
    /// simultaneously (k,(s,t),k1)- and (k,(t,s),k2)-connected.
    Reorient {
        #[command(flatten)]
        input: OrientInput,
        #[arg(short, long)]
        k: u64,
        #[arg(short, long)]
        l: u64,
        /// s→t demand; k1 ≥ k and k1 + k2 = l + k.
        #[arg(long)]
        k1: u64,
        /// t→s demand; k2 ≥ k.
        #[arg(long)]
        k2: u64,
    },
}

/// Instance families `gen` can produce.
#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// Weighted graph cut function (symmetric, posimodular).
    GraphCut,
    /// Weighted hypergraph cut function.
    HypergraphCut,
    /// Weighted coverage function (monotone).
    Coverage,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            let report = json!({
                "status": status_name(&e),
                "error": e.to_string(),
            });
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
            e.exit_code()
        }
    };
    eprintln!("elapsed: {} ms", started.elapsed().as_millis());
    ExitCode::from(code as u8)
}

fn status_name(e: &Error) -> &'static str {
    match e {
        Error::Infeasible(_) => "infeasible",
        Error::InvalidInput(_) | Error::BudgetExceeded(_) => "invalid",
        Error::InternalInconsistency(_) => "internal",
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<Instance> {
    parse_instance(&read_file(path)?)
}

/// Prints the run report and returns the exit code for `status`.
fn emit(
    command: &str,
    options: serde_json::Value,
    digest: &str,
    oracle_calls: u64,
    status: &str,
    result: serde_json::Value,
) -> i32 {
    let report = json!({
        "command": command,
        "options": options,
        "instance_digest": digest,
        "status": status,
        "oracle_calls": oracle_calls,
        "result": result,
    });
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    match status {
        "ok" => 0,
        "infeasible" => 2,
        "invalid" => 3,
        _ => 4,
    }
}

/// Serializes an exact value: a plain rational string when the symbolic
/// tier is unused, otherwise both coefficients.
fn value_json(v: &Value) -> serde_json::Value {
    if v.is_pure() {
        json!(format_rat(&v.base))
    } else {
        json!({
            "base": format_rat(&v.base),
            "eps_card": format_rat(&v.eps_card),
        })
    }
}

fn curve_mode(oracle_ground: &GroundSet, st: bool) -> Result<CurveMode> {
    if st {
        let (s, t) = oracle_ground.terminals()?;
        Ok(CurveMode::St(s, t))
    } else {
        Ok(CurveMode::All)
    }
}

/// Extended curve CSV: the core columns plus the attainer partition that
/// takes over at each breakpoint.
fn curve_csv(c: &stpps_core::PiecewiseLinearCurve, ground: &GroundSet) -> String {
    let mut out = String::from("lambda,value,left_slope,right_slope,attainer\n");
    let segments = c.segments();
    for (i, bp) in c.breakpoints().iter().enumerate() {
        let left = -(segments[i].size as i64);
        let right = -(segments[i + 1].size as i64);
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            format_rat(bp),
            format_rat(&c.value_at(bp)),
            left,
            right,
            segments[i + 1].partition.format(ground).replace(',', ";"),
        ));
    }
    out
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Pps { instance, st, out } => cmd_pps(&instance, st, out),
        Command::Curve { instance, st, out } => cmd_curve(&instance, st, out),
        Command::Kpart {
            instance,
            k,
            exact,
            budget_n,
        } => cmd_kpart(&instance, k, exact, budget_n),
        Command::Orient { action } => cmd_orient(action),
        Command::Validate { sequence, instance } => cmd_validate(&sequence, &instance),
        Command::Gen { kind, n, seed } => cmd_gen(kind, n, seed),
    }
}

fn cmd_pps(path: &Path, st: bool, out: OutFormat) -> Result<i32> {
    let inst = load_instance(path)?;
    let oracle = inst.oracle.cached();
    let mode = curve_mode(oracle.ground(), st)?;
    if out == OutFormat::Csv {
        // CSV export is the envelope curve of the input oracle.
        let c = curve(&oracle, mode)?;
        print!("{}", curve_csv(&c, oracle.ground()));
        return Ok(0);
    }
    let outcome = match mode {
        CurveMode::All => compute_pps(&oracle)?,
        CurveMode::St(s, t) => compute_st_pps(&oracle, s, t)?,
    };
    let result = json!({
        "sequence": outcome.sequence.to_json(oracle.ground()),
        "perturbed": outcome.perturbed,
    });
    Ok(emit(
        "pps",
        json!({"st": st}),
        &inst.digest,
        oracle.call_count(),
        "ok",
        result,
    ))
}

fn cmd_curve(path: &Path, st: bool, out: OutFormat) -> Result<i32> {
    let inst = load_instance(path)?;
    let oracle = inst.oracle.cached();
    let mode = curve_mode(oracle.ground(), st)?;
    let c = curve(&oracle, mode)?;
    if out == OutFormat::Csv {
        print!("{}", curve_csv(&c, oracle.ground()));
        return Ok(0);
    }
    let result = json!({
        "breakpoints": c.breakpoints().iter().map(format_rat).collect::<Vec<_>>(),
        "segments": c
            .segments()
            .iter()
            .map(|seg| json!({
                "blocks": seg.size,
                "value": format_rat(&seg.value),
                "partition": seg.partition.format(oracle.ground()),
            }))
            .collect::<Vec<_>>(),
    });
    Ok(emit(
        "curve",
        json!({"st": st}),
        &inst.digest,
        oracle.call_count(),
        "ok",
        result,
    ))
}

fn branch_name(b: InterpolationBranch) -> &'static str {
    match b {
        InterpolationBranch::CheapestSplit => "cheapest_split",
        InterpolationBranch::SplitWithCrossMerged => "split_with_cross_merged",
        InterpolationBranch::SplitWithCrossAlone => "split_with_cross_alone",
        InterpolationBranch::MergeExpensive => "merge_expensive",
    }
}

fn kpart_json(res: &KPartitionResult, ground: &GroundSet) -> serde_json::Value {
    let mode = match res.mode {
        KPartitionMode::ExactFromSequence(i) => {
            json!({"kind": "sequence_exact", "member_index": i})
        }
        KPartitionMode::Interpolated(b) => {
            json!({"kind": "interpolated", "branch": branch_name(b)})
        }
        KPartitionMode::BruteForce => json!({"kind": "brute_force"}),
    };
    let bounds = res.bounds.as_ref().map(|b| {
        json!({
            "coarser_member_value": value_json(&b.f_prev),
            "finer_member_value": value_json(&b.f_next),
            "upper_submodular": value_json(&b.upper_submodular),
            "upper_posimodular": b.upper_posimodular.as_ref().map(value_json),
            "upper_monotone": b.upper_monotone.as_ref().map(value_json),
            "lower_interpolation": value_json(&b.lower_interpolation),
            "lower_prev": value_json(&b.lower_prev),
        })
    });
    json!({
        "partition": res.partition.format(ground),
        "value": value_json(&res.value),
        "mode": mode,
        "bounds": bounds,
        "candidates": res
            .candidates
            .iter()
            .map(|(b, v)| json!({"branch": branch_name(*b), "value": value_json(v)}))
            .collect::<Vec<_>>(),
    })
}

fn cmd_kpart(path: &Path, k: usize, exact: bool, budget_n: Option<usize>) -> Result<i32> {
    let inst = load_instance(path)?;
    if let Some(limit) = budget_n {
        if inst.oracle.n() > limit {
            return Err(Error::BudgetExceeded(format!(
                "ground set has {} elements, budget is {limit}",
                inst.oracle.n()
            )));
        }
    }
    let (s, t) = inst.terminals()?;
    let oracle = inst.oracle.cached();
    let res = if exact {
        exact_st_k_partition(&oracle, s, t, k)?
    } else {
        approx_st_k_partition(&oracle, s, t, k)?
    };
    let n = oracle.n();
    let mut result = kpart_json(&res, oracle.ground());
    result["k"] = json!(k);
    result["guarantees"] = json!({
        "posimodular_ratio": format_rat(&posimodular_ratio(n)),
        "monotone_ratio": format_rat(&monotone_ratio(n)),
    });
    Ok(emit(
        "kpart",
        json!({"k": k, "exact": exact}),
        &inst.digest,
        oracle.call_count(),
        "ok",
        result,
    ))
}

/// Parses a terminal given as a label or a 0-based index.
fn resolve_vertex(ground: &GroundSet, token: &str) -> Result<usize> {
    if let Some(i) = ground.index_of(token) {
        return Ok(i);
    }
    token
        .parse::<usize>()
        .ok()
        .filter(|&i| i < ground.n())
        .ok_or_else(|| Error::InvalidInput(format!("unknown vertex {token:?}")))
}

/// Loads a hypergraph from the `n m` text format or its JSON mirror and
/// resolves terminals (flags override the file's own declaration).
fn load_hypergraph(input: &OrientInput) -> Result<(Hypergraph, usize, usize, String)> {
    let text = read_file(&input.hypergraph)?;
    let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
    let trimmed = text.trim_start();
    let (g, file_s, file_t) = if trimmed.starts_with('{') {
        parse_hypergraph_json(trimmed)?
    } else {
        (Hypergraph::parse_text(&text)?, None, None)
    };
    let pick = |flag: &Option<String>, file: Option<usize>, name: &str| match flag {
        Some(tok) => resolve_vertex(g.ground(), tok),
        None => file.ok_or_else(|| {
            Error::InvalidInput(format!(
                "terminal {name} is neither in the file nor given as a flag"
            ))
        }),
    };
    let s = pick(&input.s, file_s, "s")?;
    let t = pick(&input.t, file_t, "t")?;
    let g = g.with_terminals(s, t)?;
    Ok((g, s, t, digest))
}

/// JSON mirror: `{"n", "labels"?, "s"?, "t"?, "edges": [{"vertices": [...],
/// "mult"?}]}`; vertices are labels or indices.
fn parse_hypergraph_json(text: &str) -> Result<(Hypergraph, Option<usize>, Option<usize>)> {
    let bad = |msg: String| Error::InvalidInput(format!("hypergraph JSON: {msg}"));
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| bad(format!("parse error: {e}")))?;
    let n = v["n"].as_u64().ok_or_else(|| bad("missing \"n\"".into()))? as usize;
    let labels: Vec<String> = match v.get("labels") {
        None | Some(serde_json::Value::Null) => (0..n).map(|i| format!("v{i}")).collect(),
        Some(serde_json::Value::Array(items)) => items
            .iter()
            .map(|l| {
                l.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| bad("labels must be strings".into()))
            })
            .collect::<Result<_>>()?,
        Some(other) => return Err(bad(format!("bad labels: {other}"))),
    };
    let ground = GroundSet::new(labels, None, None)?;
    let vertex = |item: &serde_json::Value| -> Result<usize> {
        if let Some(s) = item.as_str() {
            return resolve_vertex(&ground, s);
        }
        item.as_u64()
            .map(|i| i as usize)
            .filter(|&i| i < n)
            .ok_or_else(|| bad(format!("bad vertex {item}")))
    };
    let edges = v["edges"]
        .as_array()
        .ok_or_else(|| bad("missing \"edges\"".into()))?
        .iter()
        .map(|e| {
            let verts = e["vertices"]
                .as_array()
                .ok_or_else(|| bad("edge without \"vertices\"".into()))?
                .iter()
                .map(vertex)
                .collect::<Result<Vec<_>>>()?;
            let mult = e.get("mult").map_or(Ok(1), |m| {
                m.as_u64()
                    .filter(|&m| m > 0)
                    .ok_or_else(|| bad("bad \"mult\"".into()))
            })?;
            Ok(HyperEdge {
                vertices: ElemSet::from_indices(verts),
                mult,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let terminal = |key: &str| -> Result<Option<usize>> {
        match v.get(key) {
            None | Some(serde_json::Value::Null) => Ok(None),
            Some(serde_json::Value::String(tok)) => resolve_vertex(&ground, tok).map(Some),
            Some(item) => vertex(item).map(Some),
        }
    };
    let (s, t) = (terminal("s")?, terminal("t")?);
    Ok((Hypergraph::new(ground, edges)?, s, t))
}

fn orientation_json(o: &Orientation) -> serde_json::Value {
    json!({
        "text": o.to_text(),
        "heads": o.heads(),
    })
}

fn cmd_orient(action: OrientAction) -> Result<i32> {
    match action {
        OrientAction::Check { input, k, l } => {
            let (g, s, t, digest) = load_hypergraph(&input)?;
            let check = check_feasibility(&g, s, t, k, l)?;
            let (status, result) = match check.verdict {
                FeasibilityVerdict::Feasible => {
                    ("ok", json!({"feasible": true, "checked": check.checked}))
                }
                FeasibilityVerdict::Infeasible(p) => (
                    "infeasible",
                    json!({
                        "feasible": false,
                        "witness": p.format(g.ground()),
                        "checked": check.checked,
                    }),
                ),
            };
            Ok(emit(
                "orient check",
                json!({"s": s, "t": t, "k": k, "l": l}),
                &digest,
                0,
                status,
                result,
            ))
        }
        OrientAction::Find { input, k, l } => {
            let (g, s, t, digest) = load_hypergraph(&input)?;
            let cert = find_orientation(&g, s, t, k, l)?;
            let (status, result) = match cert.verdict {
                OrientationVerdict::Feasible(o) => (
                    "ok",
                    json!({
                        "feasible": true,
                        "orientation": orientation_json(&o),
                        "checked": cert.checked,
                    }),
                ),
                OrientationVerdict::Infeasible(p) => (
                    "infeasible",
                    json!({
                        "feasible": false,
                        "witness": p.format(g.ground()),
                        "checked": cert.checked,
                    }),
                ),
            };
            Ok(emit(
                "orient find",
                json!({"s": s, "t": t, "k": k, "l": l}),
                &digest,
                0,
                status,
                result,
            ))
        }
        OrientAction::Maxell { input, k } => {
            let (g, s, t, digest) = load_hypergraph(&input)?;
            let (ell, certificate) = max_ell_given_k(&g, s, t, k)?;
            Ok(emit(
                "orient maxell",
                json!({"s": s, "t": t, "k": k}),
                &digest,
                0,
                "ok",
                json!({
                    "l": ell,
                    "certificate": certificate.format(g.ground()),
                }),
            ))
        }
        OrientAction::Maxk { input, l } => {
            let (g, s, t, digest) = load_hypergraph(&input)?;
            let res = max_k_given_ell(&g, s, t, l)?;
            Ok(emit(
                "orient maxk",
                json!({"s": s, "t": t, "l": l}),
                &digest,
                0,
                "ok",
                json!({
                    "k": res.k_star,
                    "alpha": res.alpha,
                    "alpha_partition": res.alpha_partition.format(g.ground()),
                    "beta": res.beta,
                    "beta_partition": res.beta_partition.format(g.ground()),
                }),
            ))
        }
        OrientAction::Reorient {
            input,
            k,
            l,
            k1,
            k2,
        } => {
            let (g, s, t, digest) = load_hypergraph(&input)?;
            let o = reorient_k1_k2(&g, s, t, k, l, k1, k2)?;
            Ok(emit(
                "orient reorient",
                json!({"s": s, "t": t, "k": k, "l": l, "k1": k1, "k2": k2}),
                &digest,
                0,
                "ok",
                json!({"orientation": orientation_json(&o)}),
            ))
        }
    }
}

fn cmd_validate(sequence_path: &Path, instance_path: &Path) -> Result<i32> {
    let inst = load_instance(instance_path)?;
    let text = read_file(sequence_path)?;
    let v: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("sequence file: parse error: {e}")))?;
    // Accept either a bare sequence export or a full `pps` run report.
    let (seq_json, perturbed) = if v.get("partitions").is_some() {
        (&v, false)
    } else {
        let inner = &v["result"]["sequence"];
        if inner.is_null() {
            return Err(Error::InvalidInput(
                "sequence file has neither \"partitions\" nor a pps report".into(),
            ));
        }
        (inner, v["result"]["perturbed"].as_bool().unwrap_or(false))
    };
    let seq = PartitionSequence::from_json(seq_json, inst.ground())?;
    // A sequence built under the internal strictness perturbation attains
    // the perturbed envelopes; rebuild the same deterministic oracle.
    let oracle: SubmodularOracle = if perturbed {
        let eps = recommended_strict_eps(&inst.oracle).ok_or_else(|| {
            Error::InvalidInput(
                "sequence claims a perturbed oracle, but the instance has no \
                 value granularity to rebuild it"
                    .into(),
            )
        })?;
        perturb_strict(&inst.oracle, StrictMode::Auto, eps)?
    } else {
        inst.oracle.clone()
    };
    let oracle = oracle.cached();
    let report = validate_sequence(&seq, &oracle)?;
    let status = if report.is_valid() { "ok" } else { "invalid" };
    Ok(emit(
        "validate",
        json!({"perturbed": perturbed}),
        &inst.digest,
        oracle.call_count(),
        status,
        json!({
            "valid": report.is_valid(),
            "violations": report.violations,
        }),
    ))
}

fn cmd_gen(kind: GenKind, n: usize, seed: u64) -> Result<i32> {
    if !(3..=stpps_core::MAX_GROUND).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "gen needs 3 ≤ n ≤ {}, got {n}",
            stpps_core::MAX_GROUND
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels = vec!["s".to_string()];
    labels.extend((1..n - 1).map(|i| format!("v{i}")));
    labels.push("t".to_string());
    let rand_weight = |rng: &mut ChaCha8Rng| {
        format_rat(&(rat_int(rng.gen_range(1..=6)) / rat_int(rng.gen_range(1..=4))))
    };
    let function = match kind {
        GenKind::GraphCut => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.6) {
                        edges.push(json!([u, v, rand_weight(&mut rng)]));
                    }
                }
            }
            // Keep the instance connected enough to be interesting: ensure
            // a spanning path exists.
            for u in 0..n - 1 {
                edges.push(json!([u, u + 1, rand_weight(&mut rng)]));
            }
            json!({"kind": "graph_cut", "edges": edges})
        }
        GenKind::HypergraphCut => {
            let m = 2 * n;
            let edges: Vec<_> = (0..m)
                .map(|_| {
                    let size = rng.gen_range(2..=3.min(n));
                    let mut verts = Vec::new();
                    while verts.len() < size {
                        let v = rng.gen_range(0..n);
                        if !verts.contains(&v) {
                            verts.push(v);
                        }
                    }
                    json!({"vertices": verts, "weight": rand_weight(&mut rng)})
                })
                .collect();
            json!({"kind": "hypergraph_cut", "edges": edges})
        }
        GenKind::Coverage => {
            let items = 2 * n;
            let covers: Vec<_> = (0..n)
                .map(|_| (0..items).filter(|_| rng.gen_bool(0.4)).collect::<Vec<_>>())
                .collect();
            let weights: Vec<_> = (0..items).map(|_| rand_weight(&mut rng)).collect();
            json!({"kind": "coverage", "covers": covers, "item_weights": weights})
        }
    };
    let instance = json!({
        "n": n,
        "labels": labels,
        "s": "s",
        "t": "t",
        "function": function,
    });
    println!("{}", serde_json::to_string_pretty(&instance).unwrap());
    Ok(0)
}

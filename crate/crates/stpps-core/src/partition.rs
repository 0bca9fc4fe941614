//! Canonical set partitions and refinement predicates.
//!
//! A [`Partition`] is a family of pairwise-disjoint nonempty blocks covering
//! the ground set, stored canonically: blocks sorted by smallest element, so
//! equality is structural and tie-breaking is deterministic.
//!
//! Two refinement relations drive the partition sequences of this crate:
//!
//! * **Refinement up to one set** — 𝒬 refines 𝒫 (every block of 𝒬 lies in a
//!   block of 𝒫), and all of 𝒫 survives in 𝒬 except a single block X, which
//!   is split into proper sub-blocks.
//! * **{s,t}-refinement along (X, Y)** — a crossing exchange step between two
//!   {s,t}-separating partitions: X ∈ 𝒫∖𝒬 and Y ∈ 𝒬∖𝒫 form an intersecting
//!   pair that is *not* {s,t}-uncrossable, every other block of 𝒬 refines 𝒫,
//!   every other block of 𝒫 is inside Y or disjoint from it, and the count
//!   |{A∈𝒫 : A⊆Y}| ≤ |{B∈𝒬 : B⊆X}| holds. The "up to two sets" variant
//!   additionally demands that blocks of 𝒫 outside X∪Y survive into 𝒬.
//!
//! An intersecting pair (X, Y) — X∩Y, X∖Y, Y∖X all nonempty — is
//! *{s,t}-uncrossable* when |{s,t} ∩ (X∖Y)| ≠ 1 or |{s,t} ∩ (Y∖X)| ≠ 1,
//! i.e. when the pair fails to split the terminals across both differences.

use crate::error::{Error, Result};
use crate::ground::{ElemSet, GroundSet};
use std::fmt;

/// A canonical partition of {0, …, n−1} into nonempty blocks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<ElemSet>,
}

impl Partition {
    /// Builds a partition from blocks, validating disjointness and coverage;
    /// blocks are put into canonical order (sorted by smallest element).
    pub fn new(n: usize, mut blocks: Vec<ElemSet>) -> Result<Self> {
        let mut seen = ElemSet::empty();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidInput("empty partition block".into()));
            }
            if !seen.is_disjoint(*b) {
                return Err(Error::InvalidInput(
                    "partition blocks are not pairwise disjoint".into(),
                ));
            }
            seen = seen.union(*b);
        }
        if seen != ElemSet::full(n) {
            return Err(Error::InvalidInput(
                "partition blocks do not cover the ground set".into(),
            ));
        }
        blocks.sort_by_key(|b| b.min_elem());
        Ok(Partition { n, blocks })
    }

    /// The one-block partition {V}.
    #[must_use]
    pub fn trivial(n: usize) -> Self {
        Partition {
            n,
            blocks: vec![ElemSet::full(n)],
        }
    }

    /// The all-singletons partition.
    #[must_use]
    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            blocks: (0..n).map(ElemSet::singleton).collect(),
        }
    }

    /// Builds a partition from a block-assignment vector (`assign[i]` is the
    /// block id of element i; ids need not be contiguous).
    #[must_use]
    pub fn from_assignment(assign: &[usize]) -> Self {
        let mut by_id: std::collections::BTreeMap<usize, ElemSet> =
            std::collections::BTreeMap::new();
        for (i, &id) in assign.iter().enumerate() {
            let entry = by_id.entry(id).or_insert_with(ElemSet::empty);
            *entry = entry.insert(i);
        }
        let mut blocks: Vec<ElemSet> = by_id.into_values().collect();
        blocks.sort_by_key(|b| b.min_elem());
        Partition {
            n: assign.len(),
            blocks,
        }
    }

    /// Ground-set size.
    #[must_use]
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Blocks in canonical order.
    #[must_use]
    pub fn blocks(&self) -> &[ElemSet] {
        &self.blocks
    }

    /// Number of blocks |𝒫|.
    #[must_use]
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The block containing element `i`.
    #[must_use]
    pub fn block_of(&self, i: usize) -> ElemSet {
        *self
            .blocks
            .iter()
            .find(|b| b.contains(i))
            .expect("partition covers the ground set")
    }

    /// True iff `set` is one of the blocks.
    #[must_use]
    pub fn has_block(&self, set: ElemSet) -> bool {
        self.blocks.contains(&set)
    }

    /// True iff no block contains both terminals.
    #[must_use]
    pub fn is_st_separating(&self, s: usize, t: usize) -> bool {
        self.blocks
            .iter()
            .all(|b| !(b.contains(s) && b.contains(t)))
    }

    /// Blocks of `self` that are not blocks of `other`.
    #[must_use]
    pub fn blocks_not_in(&self, other: &Partition) -> Vec<ElemSet> {
        self.blocks
            .iter()
            .copied()
            .filter(|b| !other.has_block(*b))
            .collect()
    }

    /// Formats the partition with ground-set labels: blocks separated by
    /// `|`, elements by `,` — e.g. `s,a|b,c,d,e,t`.
    #[must_use]
    pub fn format(&self, ground: &GroundSet) -> String {
        self.blocks
            .iter()
            .map(|b| ground.format_set(*b))
            .collect::<Vec<_>>()
            .join("|")
    }

    /// Parses the `|`/`,` text form against a ground set.
    pub fn parse(text: &str, ground: &GroundSet) -> Result<Self> {
        let mut blocks = Vec::new();
        for block_text in text.split('|') {
            let mut set = ElemSet::empty();
            for label in block_text.split(',') {
                let label = label.trim();
                if label.is_empty() {
                    return Err(Error::InvalidInput(format!(
                        "empty element label in partition text {text:?}"
                    )));
                }
                let idx = ground.index_of(label).ok_or_else(|| {
                    Error::InvalidInput(format!("unknown element label {label:?}"))
                })?;
                set = set.insert(idx);
            }
            blocks.push(set);
        }
        Partition::new(ground.n(), blocks)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            let elems: Vec<String> = b.iter().map(|i| i.to_string()).collect();
            write!(f, "{}", elems.join(","))?;
        }
        Ok(())
    }
}

/// True iff the intersecting pair (X, Y) is {s,t}-uncrossable:
/// |{s,t} ∩ (X∖Y)| ≠ 1 or |{s,t} ∩ (Y∖X)| ≠ 1.
#[must_use]
pub fn is_st_uncrossable(x: ElemSet, y: ElemSet, s: usize, t: usize) -> bool {
    let st = ElemSet::from_indices([s, t]);
    let in_xy = st.intersection(x.difference(y)).len();
    let in_yx = st.intersection(y.difference(x)).len();
    in_xy != 1 || in_yx != 1
}

/// All intersecting pairs (i, j), i < j, within a family of sets.
#[must_use]
pub fn intersecting_pairs(family: &[ElemSet]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if family[i].is_intersecting_with(family[j]) {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// True iff `q` is a refinement of `p`: every block of `q` is contained in a
/// block of `p`. The partitions must be distinct.
pub fn is_refinement(q: &Partition, p: &Partition) -> Result<bool> {
    check_distinct_same_ground(q, p)?;
    Ok(q.blocks()
        .iter()
        .all(|b| p.blocks().iter().any(|a| b.is_subset_of(*a))))
}

/// Refinement up to one set: `q` refines `p` and all blocks of `p` survive in
/// `q` except a single block X, split into proper sub-blocks. Returns the
/// refined block X when the predicate holds.
pub fn is_refinement_up_to_one_set(q: &Partition, p: &Partition) -> Result<Option<ElemSet>> {
    check_distinct_same_ground(q, p)?;
    let p_only = p.blocks_not_in(q);
    if p_only.len() != 1 {
        return Ok(None);
    }
    let x = p_only[0];
    let q_only = q.blocks_not_in(p);
    if q_only.iter().all(|b| b.is_subset_of(x) && *b != x) {
        Ok(Some(x))
    } else {
        Ok(None)
    }
}

/// {s,t}-refinement of `p` into `q` along the designated pair (X, Y):
/// evaluates the four conditions (intersecting non-uncrossable pair,
/// refinement of everything but Y, Y-compatibility of everything but X, and
/// the containment-count inequality).
pub fn is_st_refinement_along(
    q: &Partition,
    p: &Partition,
    x: ElemSet,
    y: ElemSet,
    s: usize,
    t: usize,
) -> Result<bool> {
    check_distinct_same_ground(q, p)?;
    if !p.is_st_separating(s, t) || !q.is_st_separating(s, t) {
        return Err(Error::InvalidInput(
            "{s,t}-refinement requires {s,t}-separating partitions".into(),
        ));
    }
    if !p.has_block(x) || q.has_block(x) {
        return Err(Error::InvalidInput(
            "X must be a block of the coarser partition only".into(),
        ));
    }
    if !q.has_block(y) || p.has_block(y) {
        return Err(Error::InvalidInput(
            "Y must be a block of the finer partition only".into(),
        ));
    }
    // (a) X and Y are intersecting and not {s,t}-uncrossable.
    if !x.is_intersecting_with(y) || is_st_uncrossable(x, y, s, t) {
        return Ok(false);
    }
    // (b) every block of 𝒬 other than Y is contained in a block of 𝒫.
    let cond_b = q
        .blocks()
        .iter()
        .filter(|&&b| b != y)
        .all(|b| p.blocks().iter().any(|a| b.is_subset_of(*a)));
    if !cond_b {
        return Ok(false);
    }
    // (c) every block of 𝒫 other than X is inside Y or disjoint from it.
    let cond_c = p
        .blocks()
        .iter()
        .filter(|&&a| a != x)
        .all(|a| a.is_disjoint(y) || a.is_subset_of(y));
    if !cond_c {
        return Ok(false);
    }
    // (d) |{A∈𝒫 : A⊆Y}| ≤ |{B∈𝒬 : B⊆X}|.
    let in_y = p.blocks().iter().filter(|a| a.is_subset_of(y)).count();
    let in_x = q.blocks().iter().filter(|b| b.is_subset_of(x)).count();
    Ok(in_y <= in_x)
}

/// {s,t}-refinement: true iff some pair (X, Y) with X ∈ 𝒫∖𝒬, Y ∈ 𝒬∖𝒫
/// satisfies [`is_st_refinement_along`]. Returns a witnessing pair.
pub fn is_st_refinement(
    q: &Partition,
    p: &Partition,
    s: usize,
    t: usize,
) -> Result<Option<(ElemSet, ElemSet)>> {
    check_distinct_same_ground(q, p)?;
    for x in p.blocks_not_in(q) {
        for y in q.blocks_not_in(p) {
            if is_st_refinement_along(q, p, x, y, s, t)? {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// {s,t}-refinement up to two sets: an {s,t}-refinement along some (X, Y)
/// such that additionally every block of 𝒫 outside X∪Y is a block of 𝒬.
/// Returns a witnessing pair.
pub fn is_st_refinement_up_to_two_sets(
    q: &Partition,
    p: &Partition,
    s: usize,
    t: usize,
) -> Result<Option<(ElemSet, ElemSet)>> {
    check_distinct_same_ground(q, p)?;
    for x in p.blocks_not_in(q) {
        for y in q.blocks_not_in(p) {
            if is_st_refinement_along(q, p, x, y, s, t)? {
                let outside = x.union(y).complement(p.ground_size());
                let survives = p
                    .blocks()
                    .iter()
                    .filter(|a| a.is_subset_of(outside))
                    .all(|a| q.has_block(*a));
                if survives {
                    return Ok(Some((x, y)));
                }
            }
        }
    }
    Ok(None)
}

fn check_distinct_same_ground(q: &Partition, p: &Partition) -> Result<()> {
    if q.ground_size() != p.ground_size() {
        return Err(Error::InvalidInput(
            "partitions are over different ground sets".into(),
        ));
    }
    if q == p {
        return Err(Error::InvalidInput(
            "refinement predicates require distinct partitions".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(n: usize, blocks: &[&[usize]]) -> Partition {
        Partition::new(
            n,
            blocks
                .iter()
                .map(|b| ElemSet::from_indices(b.iter().copied()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn construction_and_canonical_order() {
        let p = part(4, &[&[2, 3], &[0], &[1]]);
        assert_eq!(p.num_blocks(), 3);
        assert_eq!(p.blocks()[0], ElemSet::singleton(0));
        assert_eq!(p.blocks()[2], ElemSet::from_indices([2, 3]));
        assert!(Partition::new(3, vec![ElemSet::from_indices([0, 1])]).is_err());
        assert!(Partition::new(
            3,
            vec![ElemSet::from_indices([0, 1]), ElemSet::from_indices([1, 2])]
        )
        .is_err());
        assert!(Partition::new(2, vec![ElemSet::full(2), ElemSet::empty()]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = GroundSet::new(
            ["s", "a", "b", "c", "d", "e", "t"]
                .iter()
                .map(|l| l.to_string())
                .collect(),
            Some(0),
            Some(6),
        )
        .unwrap();
        let p = Partition::parse("s,a|b,c,d,e,t", &g).unwrap();
        assert_eq!(p.num_blocks(), 2);
        assert_eq!(p.format(&g), "s,a|b,c,d,e,t");
        let q = Partition::parse(&p.format(&g), &g).unwrap();
        assert_eq!(p, q);
        assert!(Partition::parse("s,a|b", &g).is_err());
        assert!(Partition::parse("s,z", &g).is_err());
    }

    #[test]
    fn st_separating_predicate() {
        // s=0, t=3
        assert!(part(4, &[&[0, 1], &[3], &[2]]).is_st_separating(0, 3));
        assert!(!part(4, &[&[0, 3], &[1], &[2]]).is_st_separating(0, 3));
        assert!(Partition::singletons(4).is_st_separating(0, 3));
    }

    #[test]
    fn refinement_predicates() {
        let p = Partition::trivial(3);
        let q = Partition::singletons(3);
        assert!(is_refinement(&q, &p).unwrap());
        assert!(!is_refinement(&p, &q).unwrap());
        assert_eq!(
            is_refinement_up_to_one_set(&q, &p).unwrap(),
            Some(ElemSet::full(3))
        );
        assert!(is_refinement(&q, &q).is_err(), "distinctness required");

        // Splitting one of two blocks: refinement up to one set.
        let p = part(4, &[&[0, 1], &[2, 3]]);
        let q = part(4, &[&[0], &[1], &[2, 3]]);
        assert_eq!(
            is_refinement_up_to_one_set(&q, &p).unwrap(),
            Some(ElemSet::from_indices([0, 1]))
        );
        // Splitting both blocks: a refinement but not up to one set.
        let r = part(4, &[&[0], &[1], &[2], &[3]]);
        assert!(is_refinement(&r, &p).unwrap());
        assert_eq!(is_refinement_up_to_one_set(&r, &p).unwrap(), None);
        // Crossing blocks: not a refinement at all.
        let c = part(4, &[&[0, 2], &[1, 3]]);
        assert!(!is_refinement(&c, &p).unwrap());
    }

    #[test]
    fn uncrossable_pairs() {
        // s=0, t=3.
        let x = ElemSet::from_indices([0, 1]);
        let y = ElemSet::from_indices([1, 3]);
        assert!(x.is_intersecting_with(y));
        assert!(
            !is_st_uncrossable(x, y, 0, 3),
            "s and t split across the pair"
        );
        let y2 = ElemSet::from_indices([1, 2]);
        assert!(is_st_uncrossable(x, y2, 0, 3), "t outside both sets");
        assert_eq!(
            intersecting_pairs(&[x, y, y2]),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        assert!(intersecting_pairs(&[x, ElemSet::from_indices([2, 3])]).is_empty());
    }

    #[test]
    fn st_refinement_exchange_step() {
        // Ground {0..4}, s=0, t=4. 𝒫 = {0|1|2,3,4}, 𝒬 = {0,1,2|3|4}:
        // X = {2,3,4} leaves 𝒫, Y = {0,1,2} enters; they intersect in {2},
        // split s and t across the differences, and the surviving blocks
        // satisfy the containment conditions.
        let p = part(5, &[&[0], &[1], &[2, 3, 4]]);
        let q = part(5, &[&[0, 1, 2], &[3], &[4]]);
        let x = ElemSet::from_indices([2, 3, 4]);
        let y = ElemSet::from_indices([0, 1, 2]);
        assert!(is_st_refinement_along(&q, &p, x, y, 0, 4).unwrap());
        assert_eq!(is_st_refinement(&q, &p, 0, 4).unwrap(), Some((x, y)));
        assert_eq!(
            is_st_refinement_up_to_two_sets(&q, &p, 0, 4).unwrap(),
            Some((x, y))
        );
        // A plain refinement has no intersecting pair, so it is never an
        // {s,t}-refinement.
        let r = part(5, &[&[0], &[1], &[2], &[3, 4]]);
        assert_eq!(is_st_refinement(&r, &p, 0, 4).unwrap(), None);
        // Wrong designated pair direction is rejected.
        assert!(is_st_refinement_along(&q, &p, y, x, 0, 4).is_err());
        // Non-separating inputs are rejected.
        let bad = part(5, &[&[0, 4], &[1], &[2, 3]]);
        assert!(is_st_refinement(&bad, &p, 0, 4).is_err());
    }

    #[test]
    fn refinement_grows_block_count() {
        // Spot-check the size observations on an exhaustive n=4 sweep.
        let parts: Vec<Partition> =
            crate::reference::enumerate_partitions(4, crate::reference::PartitionFilter::All)
                .unwrap()
                .collect();
        for p in &parts {
            for q in &parts {
                if p == q {
                    continue;
                }
                if is_refinement(q, p).unwrap() {
                    assert!(q.num_blocks() > p.num_blocks());
                }
                if q.is_st_separating(0, 3)
                    && p.is_st_separating(0, 3)
                    && is_st_refinement(q, p, 0, 3).unwrap().is_some()
                {
                    assert!(q.num_blocks() >= p.num_blocks());
                }
            }
        }
    }
}

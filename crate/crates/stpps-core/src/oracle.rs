//! Submodular function oracles: evaluation interface, built-in families,
//! perturbation wrappers, and exhaustive property checkers.
//!
//! A [`SubmodularOracle`] is a pure evaluator f : 2^V → Value over a
//! [`GroundSet`], carrying structural claims ([`OracleFlags`]) and an
//! optional *granularity* γ: a positive rational such that every difference
//! of partition values f(𝒫) − f(𝒬) is an integer multiple of γ. Granularity
//! is what makes the strictness perturbation constructive: to make f
//! strictly submodular on intersecting pairs while preserving its minimizing
//! partitions (per cardinality class), it suffices to add ε·d_w or ε·e_w
//! with ε below the minimum nonzero partition-value gap divided by 4·C(n,2),
//! and γ bounds that gap from below.
//!
//! Two perturbations are provided:
//!
//! * [`perturb_cardinality`] — adds ±ε_card per nonempty set *symbolically*
//!   (the infinitesimal tier of [`Value`]), so lexicographic minimization
//!   finds minimum- or maximum-cardinality members among the true minimizers
//!   without any numeric ε.
//! * [`perturb_strict`] — adds ε·d_w(X) with d_w(X) = |X|·|V∖X| (symmetric
//!   mode) or ε·e_w(X) = ε·(d_w(X) + C(|X|,2)) (monotone mode), numerically,
//!   making the function strictly submodular on intersecting pairs while
//!   preserving symmetry resp. monotonicity, and posimodularity in both
//!   modes.
//!
//! Built-in families: weighted graph cut, weighted hypergraph cut, weighted
//! coverage, directed-hypergraph in-degree, and explicit value tables. All
//! use f(∅) = 0 except tables, which state the empty value explicitly.

use crate::error::{Error, Result};
use crate::ground::{ElemSet, GroundSet};
use crate::partition::Partition;
use crate::value::{rat_gcd, rat_int, Rat, Value};
use num::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

/// Structural claims about a set function. Flags are trusted by algorithms
/// (they select approximation bounds and perturbation modes) and are
/// spot-verified by the exhaustive checkers on small ground sets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OracleFlags {
    /// f(A) = f(V∖A) for all A.
    pub symmetric: bool,
    /// f(A) ≤ f(B) whenever A ⊆ B.
    pub monotone: bool,
    /// f(A) + f(B) ≥ f(A∖B) + f(B∖A) for all A, B.
    pub posimodular: bool,
    /// f(A) ≥ 0 for all A.
    pub nonnegative: bool,
    /// Strict submodularity on every intersecting pair.
    pub strictly_submodular: bool,
}

type EvalFn = Arc<dyn Fn(ElemSet) -> Value + Send + Sync>;

/// A pure set-function evaluator with structural metadata.
#[derive(Clone)]
pub struct SubmodularOracle {
    ground: Arc<GroundSet>,
    eval_fn: EvalFn,
    flags: OracleFlags,
    granularity: Option<Rat>,
    tier_used: bool,
    calls: Arc<AtomicU64>,
}

impl SubmodularOracle {
    /// Wraps an arbitrary pure evaluation closure.
    #[must_use]
    pub fn from_fn<F>(
        ground: GroundSet,
        flags: OracleFlags,
        granularity: Option<Rat>,
        eval: F,
    ) -> Self
    where
        F: Fn(ElemSet) -> Value + Send + Sync + 'static,
    {
        SubmodularOracle {
            ground: Arc::new(ground),
            eval_fn: Arc::new(eval),
            flags,
            granularity,
            tier_used: false,
            calls: Arc::new(AtomicU64::new(0)),
        }
    }

    /// Evaluates f on a subset of the ground set.
    #[must_use]
    pub fn eval(&self, set: ElemSet) -> Value {
        self.calls.fetch_add(1, Ordering::Relaxed);
        (self.eval_fn)(set)
    }

    /// The ground set.
    #[must_use]
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Ground-set size.
    #[must_use]
    pub fn n(&self) -> usize {
        self.ground.n()
    }

    /// Structural flags.
    #[must_use]
    pub fn flags(&self) -> OracleFlags {
        self.flags
    }

    /// Returns a copy with the given flags (used by wrappers and tests).
    #[must_use]
    pub fn with_flags(mut self, flags: OracleFlags) -> Self {
        self.flags = flags;
        self
    }

    /// Value granularity γ, if known.
    #[must_use]
    pub fn granularity(&self) -> Option<&Rat> {
        self.granularity.as_ref()
    }

    /// True iff the symbolic cardinality tier is already occupied.
    #[must_use]
    pub fn tier_used(&self) -> bool {
        self.tier_used
    }

    /// Number of oracle evaluations so far (shared across clones).
    #[must_use]
    pub fn call_count(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }

    /// Returns a memoizing wrapper: evaluations are cached by bitmask, so
    /// repeated minimizations over the same oracle pay for each subset once.
    /// Shares the call counter with `self` (cache hits are not new calls).
    #[must_use]
    pub fn cached(&self) -> SubmodularOracle {
        let inner = self.clone();
        let cache: Mutex<HashMap<u64, Value>> = Mutex::new(HashMap::new());
        SubmodularOracle {
            ground: Arc::clone(&self.ground),
            eval_fn: Arc::new(move |set: ElemSet| {
                if let Some(v) = cache.lock().unwrap().get(&set.bits()) {
                    return v.clone();
                }
                let v = inner.eval(set);
                cache.lock().unwrap().insert(set.bits(), v.clone());
                v
            }),
            flags: self.flags,
            granularity: self.granularity.clone(),
            tier_used: self.tier_used,
            calls: Arc::clone(&self.calls),
        }
    }
}

/// f(𝒫) = Σ_{P∈𝒫} f(P): the total value of a partition.
pub fn evaluate_partition(oracle: &SubmodularOracle, p: &Partition) -> Result<Value> {
    if p.ground_size() != oracle.n() {
        return Err(Error::InvalidInput(
            "partition is over a different ground set than the oracle".into(),
        ));
    }
    let mut total = Value::zero();
    for b in p.blocks() {
        total += &oracle.eval(*b);
    }
    Ok(total)
}

fn weights_granularity<'a, I: IntoIterator<Item = &'a Rat>>(weights: I) -> Rat {
    let mut g = Rat::zero();
    for w in weights {
        g = rat_gcd(&g, w);
    }
    if g.is_zero() {
        Rat::one()
    } else {
        g
    }
}

/// Weighted graph cut function: f(U) = total weight of edges with exactly
/// one endpoint in U. Symmetric, posimodular, nonnegative; γ = gcd of the
/// edge weights.
pub fn make_graph_cut(
    ground: GroundSet,
    edges: Vec<(usize, usize, Rat)>,
) -> Result<SubmodularOracle> {
    let n = ground.n();
    for &(u, v, ref w) in &edges {
        if u >= n || v >= n || u == v {
            return Err(Error::InvalidInput(format!(
                "invalid edge ({u},{v}) for n={n}"
            )));
        }
        if w.is_negative() {
            return Err(Error::InvalidInput("negative edge weight".into()));
        }
    }
    let granularity = weights_granularity(edges.iter().map(|(_, _, w)| w));
    let flags = OracleFlags {
        symmetric: true,
        monotone: false,
        posimodular: true,
        nonnegative: true,
        strictly_submodular: false,
    };
    Ok(SubmodularOracle::from_fn(
        ground,
        flags,
        Some(granularity),
        move |set: ElemSet| {
            let mut total = Rat::zero();
            for (u, v, w) in &edges {
                if set.contains(*u) != set.contains(*v) {
                    total += w;
                }
            }
            Value::from_rat(total)
        },
    ))
}

/// Weighted hypergraph cut function: f(U) = total weight of hyperedges that
/// intersect both U and V∖U. Symmetric, posimodular, nonnegative.
pub fn make_hypergraph_cut(
    ground: GroundSet,
    edges: Vec<(ElemSet, Rat)>,
) -> Result<SubmodularOracle> {
    let full = ground.full_set();
    for (e, w) in &edges {
        if e.is_empty() {
            return Err(Error::InvalidInput("empty hyperedge".into()));
        }
        if !e.is_subset_of(full) {
            return Err(Error::InvalidInput(
                "hyperedge outside the ground set".into(),
            ));
        }
        if w.is_negative() {
            return Err(Error::InvalidInput("negative hyperedge weight".into()));
        }
    }
    let granularity = weights_granularity(edges.iter().map(|(_, w)| w));
    let flags = OracleFlags {
        symmetric: true,
        monotone: false,
        posimodular: true,
        nonnegative: true,
        strictly_submodular: false,
    };
    Ok(SubmodularOracle::from_fn(
        ground,
        flags,
        Some(granularity),
        move |set: ElemSet| {
            let mut total = Rat::zero();
            for (e, w) in &edges {
                if !e.intersection(set).is_empty() && !e.difference(set).is_empty() {
                    total += w;
                }
            }
            Value::from_rat(total)
        },
    ))
}

/// Weighted coverage function: element i covers the item set `covers[i]`;
/// f(U) = total weight of items covered by ⋃_{i∈U} covers[i]. Monotone,
/// posimodular (every monotone function is), nonnegative.
pub fn make_coverage(
    ground: GroundSet,
    covers: Vec<Vec<usize>>,
    item_weights: Vec<Rat>,
) -> Result<SubmodularOracle> {
    if covers.len() != ground.n() {
        return Err(Error::InvalidInput(
            "coverage needs one item list per ground element".into(),
        ));
    }
    for w in &item_weights {
        if w.is_negative() {
            return Err(Error::InvalidInput("negative item weight".into()));
        }
    }
    let num_items = item_weights.len();
    let mut cover_masks = Vec::with_capacity(covers.len());
    for items in &covers {
        let mut mask: u128 = 0;
        for &it in items {
            if it >= num_items {
                return Err(Error::InvalidInput(format!(
                    "covered item {it} out of range"
                )));
            }
            mask |= 1u128 << it;
        }
        cover_masks.push(mask);
    }
    if num_items > 128 {
        return Err(Error::InvalidInput(
            "coverage supports at most 128 items".into(),
        ));
    }
    let granularity = weights_granularity(item_weights.iter());
    let flags = OracleFlags {
        symmetric: false,
        monotone: true,
        posimodular: true,
        nonnegative: true,
        strictly_submodular: false,
    };
    Ok(SubmodularOracle::from_fn(
        ground,
        flags,
        Some(granularity),
        move |set: ElemSet| {
            let mut covered: u128 = 0;
            for i in set.iter() {
                covered |= cover_masks[i];
            }
            let mut total = Rat::zero();
            let mut rest = covered;
            while rest != 0 {
                let it = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                total += &item_weights[it];
            }
            Value::from_rat(total)
        },
    ))
}

/// Explicit value table over all 2^n subsets, indexed by bitmask. The ∅
/// entry is required (index 0) and defines f(∅). Submodular only if the
/// table is; flags are supplied by the caller and spot-checked in tests.
pub fn make_table(
    ground: GroundSet,
    values: Vec<Rat>,
    flags: OracleFlags,
) -> Result<SubmodularOracle> {
    let n = ground.n();
    if values.len() != 1usize << n {
        return Err(Error::InvalidInput(format!(
            "table needs {} entries for n={n}, got {}",
            1usize << n,
            values.len()
        )));
    }
    let granularity = {
        let g = values.iter().fold(Rat::zero(), |acc, v| rat_gcd(&acc, v));
        Some(if g.is_zero() { Rat::one() } else { g })
    };
    Ok(SubmodularOracle::from_fn(
        ground,
        flags,
        granularity,
        move |set: ElemSet| Value::from_rat(values[set.bits() as usize].clone()),
    ))
}

/// Cardinality perturbation: maps nonempty U to f(U) ± ε_card on the
/// symbolic infinitesimal tier, leaving ∅ untouched. A partition's value
/// becomes (f(𝒫), ±|𝒫|), so lexicographic minimization selects, among
/// minimizers of f(𝒫) − λ|𝒫|, one of minimum (+1) or maximum (−1)
/// cardinality. The tier can be occupied only once.
pub fn perturb_cardinality(oracle: &SubmodularOracle, sign: i64) -> Result<SubmodularOracle> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidInput("sign must be +1 or −1".into()));
    }
    if oracle.tier_used {
        return Err(Error::InvalidInput(
            "cardinality tier already occupied by a previous perturbation".into(),
        ));
    }
    let inner = oracle.clone();
    let tier = rat_int(sign);
    Ok(SubmodularOracle {
        ground: Arc::clone(&oracle.ground),
        eval_fn: Arc::new(move |set: ElemSet| {
            let v = inner.eval(set);
            if set.is_empty() {
                v
            } else {
                Value::with_tier(v.base, v.eps_card + tier.clone())
            }
        }),
        flags: oracle.flags,
        granularity: oracle.granularity.clone(),
        tier_used: true,
        calls: Arc::clone(&oracle.calls),
    })
}

/// Perturbation mode for [`perturb_strict`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrictMode {
    /// Add ε·|X|·|V∖X| — preserves symmetry.
    Symmetric,
    /// Add ε·(|X|·|V∖X| + C(|X|,2)) — preserves monotonicity.
    Monotone,
    /// Symmetric if the oracle is flagged symmetric, else monotone.
    Auto,
}

/// The ε recommended for [`perturb_strict`] when minimizer preservation per
/// cardinality class is required: γ/(4m+1) with m = C(n,2), strictly below
/// the (1/4m)·gap bound since γ lower-bounds the minimum nonzero
/// partition-value gap.
#[must_use]
pub fn recommended_strict_eps(oracle: &SubmodularOracle) -> Option<Rat> {
    let n = oracle.n() as i64;
    let m = n * (n - 1) / 2;
    oracle.granularity.as_ref().map(|g| g / rat_int(4 * m + 1))
}

/// Strictness perturbation h = f + ε·d_w (symmetric) or h = f + ε·e_w
/// (monotone): h is strictly submodular on every intersecting pair;
/// posimodularity is preserved in both modes; with ε below the gap bound,
/// every h-minimizing partition is f-minimizing among partitions of equal
/// size.
pub fn perturb_strict(
    oracle: &SubmodularOracle,
    mode: StrictMode,
    eps: Rat,
) -> Result<SubmodularOracle> {
    if !eps.is_positive() {
        return Err(Error::InvalidInput(
            "strictness perturbation needs ε > 0".into(),
        ));
    }
    let mode = match mode {
        StrictMode::Auto => {
            if oracle.flags.symmetric {
                StrictMode::Symmetric
            } else {
                StrictMode::Monotone
            }
        }
        m => m,
    };
    let n = oracle.n();
    let inner = oracle.clone();
    let eps_cl = eps.clone();
    let eval = move |set: ElemSet| {
        let k = set.len() as i64;
        let mut extra = rat_int(k * (n as i64 - k));
        if mode == StrictMode::Monotone {
            extra += rat_int(k * (k - 1) / 2);
        }
        let v = inner.eval(set);
        Value::with_tier(v.base + &eps_cl * extra, v.eps_card)
    };
    let flags = OracleFlags {
        symmetric: oracle.flags.symmetric && mode == StrictMode::Symmetric,
        monotone: oracle.flags.monotone && mode == StrictMode::Monotone,
        posimodular: oracle.flags.posimodular,
        nonnegative: oracle.flags.nonnegative,
        strictly_submodular: true,
    };
    let granularity = oracle.granularity.as_ref().map(|g| rat_gcd(g, &eps));
    Ok(SubmodularOracle {
        ground: Arc::clone(&oracle.ground),
        eval_fn: Arc::new(eval),
        flags,
        granularity,
        tier_used: oracle.tier_used,
        calls: Arc::clone(&oracle.calls),
    })
}

/// Outcome of an exhaustive property check: either the property holds, or a
/// witnessing pair of sets violates it.
#[derive(Clone, Debug)]
pub struct PropertyCheck {
    /// True iff no violation was found.
    pub holds: bool,
    /// A violating pair (A, B), when one exists.
    pub witness: Option<(ElemSet, ElemSet)>,
}

impl PropertyCheck {
    fn ok() -> Self {
        PropertyCheck {
            holds: true,
            witness: None,
        }
    }
    fn fail(a: ElemSet, b: ElemSet) -> Self {
        PropertyCheck {
            holds: false,
            witness: Some((a, b)),
        }
    }
}

/// Default ground-set bound for the exhaustive checkers.
pub const DEFAULT_CHECK_BOUND: usize = 12;

fn check_bound(oracle: &SubmodularOracle, bound: usize) -> Result<()> {
    if oracle.n() > bound {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive check refused for n={} > bound {bound}",
            oracle.n()
        )));
    }
    Ok(())
}

fn dense_table(oracle: &SubmodularOracle) -> Vec<Value> {
    (0..1u64 << oracle.n())
        .map(|m| oracle.eval(ElemSet::from_bits(m)))
        .collect()
}

/// Exhaustively verifies submodularity via the local characterization
/// f(A∪{u}) + f(A∪{v}) ≥ f(A) + f(A∪{u,v}) for all A and u ≠ v outside A,
/// which is equivalent to the global inequality. The witness is the pair
/// (A∪{u}, A∪{v}).
pub fn check_submodular(oracle: &SubmodularOracle, bound: usize) -> Result<PropertyCheck> {
    check_bound(oracle, bound)?;
    let n = oracle.n();
    let table = dense_table(oracle);
    for a in 0..1u64 << n {
        for u in 0..n {
            if a >> u & 1 == 1 {
                continue;
            }
            for v in u + 1..n {
                if a >> v & 1 == 1 {
                    continue;
                }
                let au = a | 1 << u;
                let av = a | 1 << v;
                let auv = au | 1 << v;
                let lhs = table[au as usize].clone() + &table[av as usize];
                let rhs = table[a as usize].clone() + &table[auv as usize];
                if lhs < rhs {
                    return Ok(PropertyCheck::fail(
                        ElemSet::from_bits(au),
                        ElemSet::from_bits(av),
                    ));
                }
            }
        }
    }
    Ok(PropertyCheck::ok())
}

/// Exhaustively verifies *strict* submodularity on intersecting pairs:
/// f(A) + f(B) > f(A∩B) + f(A∪B) whenever A∖B, B∖A, A∩B are all nonempty.
pub fn check_strictly_submodular(oracle: &SubmodularOracle, bound: usize) -> Result<PropertyCheck> {
    check_bound(oracle, bound)?;
    let n = oracle.n();
    let table = dense_table(oracle);
    for a in 1u64..1 << n {
        for b in 1u64..1 << n {
            let sa = ElemSet::from_bits(a);
            let sb = ElemSet::from_bits(b);
            if !sa.is_intersecting_with(sb) {
                continue;
            }
            let lhs = table[a as usize].clone() + &table[b as usize];
            let rhs = table[(a & b) as usize].clone() + &table[(a | b) as usize];
            if lhs <= rhs {
                return Ok(PropertyCheck::fail(sa, sb));
            }
        }
    }
    Ok(PropertyCheck::ok())
}

/// Exhaustively verifies posimodularity f(A)+f(B) ≥ f(A∖B)+f(B∖A).
pub fn check_posimodular(oracle: &SubmodularOracle, bound: usize) -> Result<PropertyCheck> {
    check_bound(oracle, bound)?;
    let n = oracle.n();
    let table = dense_table(oracle);
    for a in 0..1u64 << n {
        for b in 0..1u64 << n {
            let lhs = table[a as usize].clone() + &table[b as usize];
            let rhs = table[(a & !b) as usize].clone() + &table[(b & !a) as usize];
            if lhs < rhs {
                return Ok(PropertyCheck::fail(
                    ElemSet::from_bits(a),
                    ElemSet::from_bits(b),
                ));
            }
        }
    }
    Ok(PropertyCheck::ok())
}

/// Exhaustively verifies monotonicity via single-element extensions.
pub fn check_monotone(oracle: &SubmodularOracle, bound: usize) -> Result<PropertyCheck> {
    check_bound(oracle, bound)?;
    let n = oracle.n();
    let table = dense_table(oracle);
    for a in 0..1u64 << n {
        for v in 0..n {
            if a >> v & 1 == 1 {
                continue;
            }
            let av = a | 1 << v;
            if table[a as usize] > table[av as usize] {
                return Ok(PropertyCheck::fail(
                    ElemSet::from_bits(a),
                    ElemSet::from_bits(av),
                ));
            }
        }
    }
    Ok(PropertyCheck::ok())
}

/// Exhaustively verifies symmetry f(A) = f(V∖A).
pub fn check_symmetric(oracle: &SubmodularOracle, bound: usize) -> Result<PropertyCheck> {
    check_bound(oracle, bound)?;
    let n = oracle.n();
    let full = (1u64 << n) - 1;
    let table = dense_table(oracle);
    for a in 0..=full {
        let comp = full & !a;
        if table[a as usize] != table[comp as usize] {
            return Ok(PropertyCheck::fail(
                ElemSet::from_bits(a),
                ElemSet::from_bits(comp),
            ));
        }
    }
    Ok(PropertyCheck::ok())
}

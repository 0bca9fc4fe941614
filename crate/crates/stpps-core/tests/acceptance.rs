//! Acceptance suite: one test per release criterion, each printing a
//! `criterion N: PASS` line when it succeeds (run with `--nocapture` to see
//! them). Every criterion compares the production solvers against the
//! naive enumeration oracles in `reference` or against closed-form
//! expectations, always in exact rational arithmetic.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stpps_core::hypergraph::{make_indegree, HyperEdge, Hypergraph, Orientation};
use stpps_core::kpartition::{
    approx_st_k_partition_with, exact_st_k_partition, monotone_ratio, posimodular_ratio,
};
use stpps_core::oracle::{
    check_strictly_submodular, check_submodular, evaluate_partition, make_coverage, make_graph_cut,
    make_hypergraph_cut, perturb_strict, recommended_strict_eps, StrictMode,
};
use stpps_core::orientation::{
    check_feasibility, delta_partition, find_orientation, max_ell_given_k, max_k_given_ell, p_stkl,
    reorient_k1_k2, singleton_demands, verify_orientation, FeasibilityVerdict, OrientationVerdict,
};
use stpps_core::partition::is_st_uncrossable;
use stpps_core::pps::{compute_pps, compute_st_pps, curve, validate_sequence, CurveMode};
use stpps_core::reference::{
    brute_curve, brute_min_partition, brute_orientations, enumerate_partitions, PartitionFilter,
};
use stpps_core::solver::{min_partition, min_st_partition};
use stpps_core::value::{rat, rat_int, Rat, Value};
use stpps_core::{ElemSet, GroundSet, Partition, SubmodularOracle};

// ---------------------------------------------------------------------------
// Random instance generators (deterministic: every test seeds its own RNG).
// ---------------------------------------------------------------------------

fn random_weight(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(1..=6), rng.gen_range(1..=4))
}

fn random_lambda(rng: &mut ChaCha8Rng) -> Rat {
    rat(rng.gen_range(-12..=18), rng.gen_range(1..=6))
}

fn random_graph_cut(rng: &mut ChaCha8Rng, n: usize) -> SubmodularOracle {
    let ground = GroundSet::with_terminals(n, 0, n - 1).unwrap();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(0.7) {
                edges.push((u, v, random_weight(rng)));
            }
        }
    }
    if edges.is_empty() {
        edges.push((0, n - 1, rat_int(1)));
    }
    make_graph_cut(ground, edges).unwrap()
}

fn random_hypergraph_cut(rng: &mut ChaCha8Rng, n: usize) -> SubmodularOracle {
    let ground = GroundSet::with_terminals(n, 0, n - 1).unwrap();
    let m = n + rng.gen_range(0..n);
    let edges = (0..m)
        .map(|_| {
            let size = rng.gen_range(2..=3.min(n));
            let mut verts: Vec<usize> = Vec::new();
            while verts.len() < size {
                let v = rng.gen_range(0..n);
                if !verts.contains(&v) {
                    verts.push(v);
                }
            }
            (ElemSet::from_indices(verts), random_weight(rng))
        })
        .collect();
    make_hypergraph_cut(ground, edges).unwrap()
}

fn random_coverage(rng: &mut ChaCha8Rng, n: usize) -> SubmodularOracle {
    let ground = GroundSet::with_terminals(n, 0, n - 1).unwrap();
    let items = 2 * n;
    let covers = (0..n)
        .map(|_| (0..items).filter(|_| rng.gen_bool(0.4)).collect())
        .collect();
    let weights = (0..items).map(|_| random_weight(rng)).collect();
    make_coverage(ground, covers, weights).unwrap()
}

/// A random small hypergraph whose orientation space is enumerable
/// (product of edge-size^multiplicity kept small).
fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize) -> Hypergraph {
    loop {
        let m = rng.gen_range(3..=5);
        let edges: Vec<HyperEdge> = (0..m)
            .map(|_| {
                let size = rng.gen_range(2..=3.min(n));
                let mut verts: Vec<usize> = Vec::new();
                while verts.len() < size {
                    let v = rng.gen_range(0..n);
                    if !verts.contains(&v) {
                        verts.push(v);
                    }
                }
                HyperEdge {
                    vertices: ElemSet::from_indices(verts),
                    mult: rng.gen_range(1..=2),
                }
            })
            .collect();
        let product: u64 = edges
            .iter()
            .map(|e| (e.vertices.len() as u64).pow(e.mult as u32))
            .product();
        if product <= 600 {
            let ground = GroundSet::with_terminals(n, 0, n - 1).unwrap();
            return Hypergraph::new(ground, edges).unwrap();
        }
    }
}

/// The weighted regression graph: a light triangle on the first three
/// vertices (weight 25/48 per edge), a unit bridge, and a dense weight-3/8
/// gadget on the last four.
fn weighted_regression_graph() -> SubmodularOracle {
    let labels = ["s", "a", "b", "c", "d", "e", "t"]
        .iter()
        .map(|s| (*s).to_string())
        .collect();
    let ground = GroundSet::new(labels, Some(0), Some(6)).unwrap();
    let light = rat(25, 48);
    let heavy = rat(3, 8);
    let edges = vec![
        (0, 1, light.clone()),
        (1, 2, light.clone()),
        (2, 0, light),
        (2, 3, rat_int(1)),
        (3, 4, heavy.clone()),
        (4, 6, heavy.clone()),
        (6, 5, heavy.clone()),
        (5, 3, heavy.clone()),
        (3, 6, heavy.clone()),
        (4, 5, heavy),
    ];
    make_graph_cut(ground, edges).unwrap()
}

/// Connectivity thresholds of one orientation: (global, t-side, s-side)
/// minima of d^in over the respective cut families.
fn orientation_thresholds(o: &Orientation, s: usize, t: usize) -> (u64, u64, u64) {
    let n = o.base().n();
    let full = (1u64 << n) - 1;
    let (mut all, mut st, mut ts) = (u64::MAX, u64::MAX, u64::MAX);
    for bits in 1..full {
        let set = ElemSet::from_bits(bits);
        let d = o.indegree(set);
        all = all.min(d);
        if set.contains(t) && !set.contains(s) {
            st = st.min(d);
        }
        if set.contains(s) && !set.contains(t) {
            ts = ts.min(d);
        }
    }
    (all, st, ts)
}

// ---------------------------------------------------------------------------
// 1. Regression: the bundled weighted graph has the known unique sequence.
// ---------------------------------------------------------------------------

#[test]
fn criterion_1_weighted_graph_regression_sequence() {
    let start = Instant::now();
    let oracle = weighted_regression_graph();
    let ground = oracle.ground().clone();

    // Exact envelope breakpoints of the terminal-separating curve.
    let c = curve(&oracle, CurveMode::St(0, 6)).unwrap();
    assert_eq!(
        c.breakpoints(),
        &[rat(9, 8), rat(11, 8), rat(25, 16), rat_int(2)],
        "envelope breakpoints"
    );

    // The sequence visits exactly the five known attainers, in order.
    let outcome = compute_st_pps(&oracle, 0, 6).unwrap();
    let got: Vec<String> = outcome
        .sequence
        .partitions
        .iter()
        .map(|p| p.format(&ground))
        .collect();
    assert_eq!(
        got,
        vec![
            "s,a,b|c,d,e,t",
            "s|a|b,c,d,e,t",
            "s,a,b,c|d|e|t",
            "s|a|b,c|d|e|t",
            "s|a|b|c|d|e|t",
        ],
        "sequence attainers"
    );
    assert_eq!(outcome.sequence.critical_values.len(), 4);
    // The first attainer has value 2 under the unperturbed function.
    assert_eq!(
        evaluate_partition(&oracle, &outcome.sequence.partitions[0]).unwrap(),
        Value::from_rat(rat_int(2))
    );
    assert!(start.elapsed().as_secs() < 5, "regression under 5 s");
    println!("criterion 1: PASS");
}

// ---------------------------------------------------------------------------
// 2. Parametric minimum partitions equal exhaustive enumeration.
// ---------------------------------------------------------------------------

#[test]
fn criterion_2_min_partition_matches_enumeration() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC2);
    let mut instances: Vec<SubmodularOracle> = Vec::new();
    for i in 0..70 {
        let n = 3 + (i % 5); // 3..=7
        instances.push(random_graph_cut(&mut rng, n));
        instances.push(random_hypergraph_cut(&mut rng, n));
        instances.push(random_coverage(&mut rng, n));
    }
    assert!(instances.len() >= 200);
    for oracle in &instances {
        let oracle = oracle.cached();
        let (s, t) = oracle.ground().terminals().unwrap();
        for _ in 0..20 {
            let lambda = random_lambda(&mut rng);
            let fast = min_partition(&oracle, &lambda).unwrap();
            let (_, brute) = brute_min_partition(&oracle, PartitionFilter::All, &lambda)
                .unwrap()
                .unwrap();
            assert_eq!(fast.value, brute, "all-partition minimum at λ={lambda}");

            let fast = min_st_partition(&oracle, &lambda, s, t).unwrap();
            let (_, brute) =
                brute_min_partition(&oracle, PartitionFilter::StSeparating(s, t), &lambda)
                    .unwrap()
                    .unwrap();
            assert_eq!(fast.value, brute, "separating minimum at λ={lambda}");
        }
    }
    assert!(start.elapsed().as_secs() < 120, "equivalence under 2 min");
    println!("criterion 2: PASS");
}

// ---------------------------------------------------------------------------
// 3. Every computed sequence validates; breakpoint counts are bounded.
// ---------------------------------------------------------------------------

#[test]
fn criterion_3_sequences_validate_with_zero_violations() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC3);
    let mut corpus = vec![weighted_regression_graph()];
    for n in 4..=6 {
        for _ in 0..4 {
            corpus.push(random_graph_cut(&mut rng, n));
            corpus.push(random_hypergraph_cut(&mut rng, n));
            corpus.push(random_coverage(&mut rng, n));
        }
    }
    for oracle in &corpus {
        let oracle = oracle.cached();
        let n = oracle.n();
        let (s, t) = oracle.ground().terminals().unwrap();

        let plain = compute_pps(&oracle).unwrap();
        let report = validate_sequence(&plain.sequence, &plain.effective_oracle).unwrap();
        assert!(report.is_valid(), "plain sequence: {:?}", report.violations);

        let st = compute_st_pps(&oracle, s, t).unwrap();
        let report = validate_sequence(&st.sequence, &st.effective_oracle).unwrap();
        assert!(
            report.is_valid(),
            "separating sequence: {:?}",
            report.violations
        );

        // Breakpoint bounds: attainer sizes grow strictly between
        // breakpoints, from 1 (plain) or 2 (separating) up to n.
        let c = curve(&oracle, CurveMode::All).unwrap();
        assert!(c.breakpoints().len() < n, "plain breakpoint bound");
        let c = curve(&oracle, CurveMode::St(s, t)).unwrap();
        assert!(
            c.breakpoints().len() <= n - 2,
            "separating breakpoint bound: {} breakpoints for n={n}",
            c.breakpoints().len()
        );
    }
    println!("criterion 3: PASS");
}

// ---------------------------------------------------------------------------
// 4. Approximation ratios hold against exhaustive optima.
// ---------------------------------------------------------------------------

#[test]
fn criterion_4_approximation_ratios_hold() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC4);

    // Posimodular family: graph and hypergraph cut functions.
    let mut posimodular: Vec<SubmodularOracle> = Vec::new();
    for i in 0..50 {
        let n = 4 + (i % 5); // 4..=8
        posimodular.push(random_graph_cut(&mut rng, n));
        posimodular.push(random_hypergraph_cut(&mut rng, n));
    }
    assert!(posimodular.len() >= 100);
    for oracle in &posimodular {
        let oracle = oracle.cached();
        let n = oracle.n();
        let (s, t) = oracle.ground().terminals().unwrap();
        let pps = compute_st_pps(&oracle, s, t).unwrap();
        let ratio = posimodular_ratio(n);
        for k in 2..=n {
            let alg = approx_st_k_partition_with(&oracle, &pps, s, t, k)
                .unwrap()
                .value;
            let opt = exact_st_k_partition(&oracle, s, t, k).unwrap().value;
            assert!(
                alg.base <= &ratio * &opt.base,
                "posimodular ratio failed: n={n} k={k} alg={} opt={}",
                alg.base,
                opt.base
            );
        }
    }

    // Monotone family: coverage functions.
    let mut monotone: Vec<SubmodularOracle> = Vec::new();
    for i in 0..100 {
        let n = 4 + (i % 5);
        monotone.push(random_coverage(&mut rng, n));
    }
    for oracle in &monotone {
        let oracle = oracle.cached();
        let n = oracle.n();
        let (s, t) = oracle.ground().terminals().unwrap();
        let pps = compute_st_pps(&oracle, s, t).unwrap();
        let ratio = monotone_ratio(n);
        for k in 2..=n {
            let alg = approx_st_k_partition_with(&oracle, &pps, s, t, k)
                .unwrap()
                .value;
            let opt = exact_st_k_partition(&oracle, s, t, k).unwrap().value;
            assert!(
                alg.base <= &ratio * &opt.base,
                "monotone ratio failed: n={n} k={k} alg={} opt={}",
                alg.base,
                opt.base
            );
        }
    }
    assert!(start.elapsed().as_secs() < 600, "ratios under 10 min");
    println!("criterion 4: PASS");
}

// ---------------------------------------------------------------------------
// Shared corpus for the orientation criteria: hypergraphs with the
// per-orientation connectivity thresholds enumerated once.
// ---------------------------------------------------------------------------

struct OrientedCorpusEntry {
    g: Hypergraph,
    s: usize,
    t: usize,
    /// (global, t-side, s-side) thresholds of every orientation.
    thresholds: Vec<(u64, u64, u64)>,
}

fn oriented_corpus(seed: u64, count: usize) -> Vec<OrientedCorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = 3 + (i % 3); // 3..=5
            let g = random_hypergraph(&mut rng, n);
            let (s, t) = g.ground().terminals().unwrap();
            let thresholds = brute_orientations(&g)
                .unwrap()
                .map(|o| orientation_thresholds(&o, s, t))
                .collect();
            OrientedCorpusEntry {
                g,
                s,
                t,
                thresholds,
            }
        })
        .collect()
}

/// True iff some orientation satisfies the (k,(s,t),l) demands.
fn enumeration_feasible(entry: &OrientedCorpusEntry, k: u64, l: u64) -> bool {
    entry
        .thresholds
        .iter()
        .any(|&(all, st, _)| all >= k && st >= k.max(l))
}

// ---------------------------------------------------------------------------
// 5. Orientation feasibility decisions are sound and complete.
// ---------------------------------------------------------------------------

#[test]
fn criterion_5_orientation_feasibility_matches_enumeration() {
    let corpus = oriented_corpus(0xC5, 100);
    for entry in &corpus {
        let (g, s, t) = (&entry.g, entry.s, entry.t);
        for k in 0..=2u64 {
            for l in 0..=2u64 {
                let expected = enumeration_feasible(entry, k, l);
                let check = check_feasibility(g, s, t, k, l).unwrap();
                match check.verdict {
                    FeasibilityVerdict::Feasible => {
                        assert!(expected, "claimed feasible, none exists");
                        // Completeness: synthesis must succeed and verify.
                        let cert = find_orientation(g, s, t, k, l).unwrap();
                        let o = match cert.verdict {
                            OrientationVerdict::Feasible(o) => o,
                            OrientationVerdict::Infeasible(_) => {
                                panic!("synthesis disagreed with decision")
                            }
                        };
                        assert!(verify_orientation(&o, s, t, k, l).unwrap().is_none());
                    }
                    FeasibilityVerdict::Infeasible(witness) => {
                        assert!(!expected, "claimed infeasible, one exists");
                        // Soundness: the witness violates the partition
                        // demand inequality arithmetically.
                        let crossing = delta_partition(g, &witness);
                        let demand: u64 = witness
                            .blocks()
                            .iter()
                            .map(|b| p_stkl(*b, g.n(), s, t, k, l))
                            .sum();
                        assert!(
                            crossing < demand,
                            "witness does not violate: {crossing} ≥ {demand}"
                        );
                    }
                }
            }
        }
    }
    println!("criterion 5: PASS");
}

// ---------------------------------------------------------------------------
// 6. The extremal-parameter solvers match enumeration optima exactly.
// ---------------------------------------------------------------------------

#[test]
fn criterion_6_extremal_parameters_match_enumeration() {
    let corpus = oriented_corpus(0xC6, 100);
    for entry in &corpus {
        let (g, s, t) = (&entry.g, entry.s, entry.t);
        for k in 0..=2u64 {
            // Largest l for fixed k, by enumeration.
            let best_l = entry
                .thresholds
                .iter()
                .filter(|&&(all, _, _)| all >= k)
                .map(|&(_, st, _)| st)
                .max();
            match (max_ell_given_k(g, s, t, k), best_l) {
                (Ok((ell, cert)), Some(expected)) => {
                    assert_eq!(ell, expected.max(k), "max l for k={k}");
                    // The certificate ties the optimum to its partition:
                    // l* = |δ(𝒫)| − k(|𝒫|−1).
                    let bound = delta_partition(g, &cert) - k * (cert.num_blocks() as u64 - 1);
                    assert_eq!(ell, bound, "certificate bound for k={k}");
                }
                (Err(_), None) => {}
                (got, want) => panic!(
                    "max-l disagreement for k={k}: solver={:?} enumeration={want:?}",
                    got.map(|(l, _)| l)
                ),
            }
        }
        for l in 0..=2u64 {
            // Largest k for fixed l, by enumeration: an orientation with
            // t-side threshold ≥ l supports any k ≤ min(global, t-side).
            let best_k = entry
                .thresholds
                .iter()
                .filter(|&&(_, st, _)| st >= l)
                .map(|&(all, st, _)| all.min(st))
                .max();
            match (max_k_given_ell(g, s, t, l), best_k) {
                (Ok(res), Some(expected)) => {
                    assert_eq!(res.k_star, expected, "max k for l={l}");
                    assert_eq!(res.k_star, res.alpha.min(res.beta));
                }
                (Err(_), None) => {}
                (got, want) => panic!(
                    "max-k disagreement for l={l}: solver={:?} enumeration={want:?}",
                    got.map(|r| r.k_star)
                ),
            }
        }
    }
    println!("criterion 6: PASS");
}

// ---------------------------------------------------------------------------
// 7. Reorientation satisfies all three cut thresholds for every split.
// ---------------------------------------------------------------------------

#[test]
fn criterion_7_reorientation_meets_all_three_thresholds() {
    let corpus = oriented_corpus(0xC7, 60);
    let mut exercised = 0u32;
    for entry in &corpus {
        let (g, s, t) = (&entry.g, entry.s, entry.t);
        for k in 0..=2u64 {
            for l in k..=2u64 {
                if !enumeration_feasible(entry, k, l) {
                    continue;
                }
                // Every split k1 + k2 = l + k with k1, k2 ≥ k.
                for k1 in k..=l {
                    let k2 = l + k - k1;
                    if k2 < k {
                        continue;
                    }
                    let o = reorient_k1_k2(g, s, t, k, l, k1, k2).unwrap();
                    let (all, st, ts) = orientation_thresholds(&o, s, t);
                    assert!(
                        all >= k && st >= k1 && ts >= k2,
                        "thresholds ({all},{st},{ts}) < demands ({k},{k1},{k2})"
                    );
                    exercised += 1;
                }
            }
        }
    }
    assert!(exercised > 50, "corpus exercised {exercised} splits");
    println!("criterion 7: PASS");
}

// ---------------------------------------------------------------------------
// 8. Module property suites.
// ---------------------------------------------------------------------------

#[test]
fn criterion_8_module_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC8);

    // (a) The strictness perturbation really is strictly submodular and
    // keeps plain submodularity.
    for i in 0..30 {
        let n = 3 + (i % 4); // 3..=6
        let oracle = match i % 3 {
            0 => random_graph_cut(&mut rng, n),
            1 => random_hypergraph_cut(&mut rng, n),
            _ => random_coverage(&mut rng, n),
        };
        let eps = recommended_strict_eps(&oracle).unwrap();
        let strict = perturb_strict(&oracle, StrictMode::Auto, eps).unwrap();
        assert!(check_submodular(&strict, n).unwrap().holds);
        assert!(
            check_strictly_submodular(&strict, n).unwrap().holds,
            "perturbation not strict on instance {i}"
        );
    }

    // (b) The indegree function of any orientation is submodular.
    for i in 0..20 {
        let n = 3 + (i % 4);
        let g = random_hypergraph(&mut rng, n);
        let heads = g
            .edges()
            .iter()
            .map(|e| vec![e.vertices.min_elem().unwrap(); e.mult as usize])
            .collect();
        let o = Orientation::new(g, heads).unwrap();
        assert!(check_submodular(&make_indegree(&o), n).unwrap().holds);
    }

    // (c) Computed curves equal the exhaustive lower envelope: same
    // breakpoints, and pointwise-equal values at 100 random λ.
    for i in 0..12 {
        let n = 4 + (i % 3); // 4..=6
        let oracle = match i % 3 {
            0 => random_graph_cut(&mut rng, n),
            1 => random_hypergraph_cut(&mut rng, n),
            _ => random_coverage(&mut rng, n),
        }
        .cached();
        let (s, t) = oracle.ground().terminals().unwrap();
        for mode in [CurveMode::All, CurveMode::St(s, t)] {
            let fast = curve(&oracle, mode).unwrap();
            let brute = brute_curve(&oracle, mode).unwrap();
            assert_eq!(fast.breakpoints(), brute.breakpoints());
            for _ in 0..100 {
                let lambda = random_lambda(&mut rng);
                assert_eq!(fast.value_at(&lambda), brute.value_at(&lambda));
            }
        }
    }

    // (d) Under a strictly submodular oracle, no two envelope attainers
    // contain an uncrossable pair of intersecting blocks.
    for i in 0..12 {
        let n = 4 + (i % 2); // 4..=5
        let oracle = if i % 2 == 0 {
            random_graph_cut(&mut rng, n)
        } else {
            random_hypergraph_cut(&mut rng, n)
        };
        let eps = recommended_strict_eps(&oracle).unwrap();
        let strict = perturb_strict(&oracle, StrictMode::Auto, eps)
            .unwrap()
            .cached();
        let (s, t) = strict.ground().terminals().unwrap();
        let mut lambdas: Vec<Rat> = (0..6).map(|_| random_lambda(&mut rng)).collect();
        lambdas.extend(
            curve(&strict, CurveMode::St(s, t))
                .unwrap()
                .breakpoints()
                .to_vec(),
        );
        for lambda in &lambdas {
            // All exact attainers of the separating envelope at λ.
            let mut best: Option<Value> = None;
            let mut attainers: Vec<Partition> = Vec::new();
            for p in enumerate_partitions(n, PartitionFilter::StSeparating(s, t)).unwrap() {
                let mut v = evaluate_partition(&strict, &p).unwrap();
                v -= &Value::from_rat(lambda * rat_int(p.num_blocks() as i64));
                match &best {
                    Some(b) if v > *b => {}
                    Some(b) if v == *b => attainers.push(p),
                    _ => {
                        best = Some(v);
                        attainers = vec![p];
                    }
                }
            }
            for p in &attainers {
                for q in &attainers {
                    for x in p.blocks() {
                        for y in q.blocks() {
                            if x.is_intersecting_with(*y) {
                                assert!(
                                    !is_st_uncrossable(*x, *y, s, t),
                                    "uncrossable attainer pair at λ={lambda}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    // (e) The synthesized orientation's indegree vector x satisfies
    // x(V) = |E| and x(Y) ≥ i_G(Y) + p(Y) for every nonempty proper Y,
    // and stays below the per-vertex singleton-demand upper bounds.
    let corpus = oriented_corpus(0xC8 + 1, 40);
    for entry in &corpus {
        let (g, s, t) = (&entry.g, entry.s, entry.t);
        let n = g.n();
        for k in 0..=2u64 {
            for l in 0..=2u64 {
                if !enumeration_feasible(entry, k, l) {
                    continue;
                }
                let cert = find_orientation(g, s, t, k, l).unwrap();
                let o = match cert.verdict {
                    OrientationVerdict::Feasible(o) => o,
                    OrientationVerdict::Infeasible(_) => {
                        panic!("synthesis disagreed with enumeration")
                    }
                };
                let mut x = vec![0u64; n];
                for heads in o.heads() {
                    for &h in heads {
                        x[h] += 1;
                    }
                }
                assert_eq!(x.iter().sum::<u64>(), g.total_copies());
                let bounds = singleton_demands(g, s, t, k, l).unwrap();
                for v in 0..n {
                    assert!(
                        x[v] <= bounds[v],
                        "indegree {} of vertex {v} above its bound {}",
                        x[v],
                        bounds[v]
                    );
                }
                for bits in 1..(1u64 << n) - 1 {
                    let y = ElemSet::from_bits(bits);
                    let x_y: u64 = y.iter().map(|v| x[v]).sum();
                    assert!(
                        x_y >= g.induced_edges(y) + p_stkl(y, n, s, t, k, l),
                        "indegree sum below induced demand on {y:?}"
                    );
                }
            }
        }
    }

    println!("criterion 8: PASS");
}

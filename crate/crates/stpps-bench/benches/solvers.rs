//! Benchmarks of the main solver entry points: parametric minimum
//! partition, full sequence construction, k-partition approximation, and
//! orientation synthesis.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use stpps_bench::{cycle_graph, weighted_regression_graph};
use stpps_core::hypergraph::{HyperEdge, Hypergraph};
use stpps_core::kpartition::approx_st_k_partition;
use stpps_core::orientation::find_orientation;
use stpps_core::pps::{compute_st_pps, curve, CurveMode};
use stpps_core::solver::min_partition;
use stpps_core::value::rat;
use stpps_core::{ElemSet, GroundSet};

fn bench_min_partition(c: &mut Criterion) {
    let oracle = cycle_graph(10);
    let lambda = rat(3, 2);
    c.bench_function("min_partition/cycle10", |b| {
        b.iter(|| min_partition(black_box(&oracle), black_box(&lambda)).unwrap())
    });
}

fn bench_curve(c: &mut Criterion) {
    let oracle = weighted_regression_graph();
    c.bench_function("curve/weighted7_st", |b| {
        b.iter(|| curve(black_box(&oracle), CurveMode::St(0, 6)).unwrap())
    });
}

fn bench_sequence(c: &mut Criterion) {
    let oracle = weighted_regression_graph();
    c.bench_function("st_pps/weighted7", |b| {
        b.iter(|| compute_st_pps(black_box(&oracle), 0, 6).unwrap())
    });
}

fn bench_kpartition(c: &mut Criterion) {
    let oracle = weighted_regression_graph();
    c.bench_function("kpart/weighted7_k4", |b| {
        b.iter(|| approx_st_k_partition(black_box(&oracle), 0, 6, 4).unwrap())
    });
}

fn bench_orientation(c: &mut Criterion) {
    let n = 8;
    let ground = GroundSet::with_default_labels(n);
    let edges = (0..n)
        .flat_map(|i| {
            [
                HyperEdge {
                    vertices: ElemSet::from_indices([i, (i + 1) % n]),
                    mult: 1,
                },
                HyperEdge {
                    vertices: ElemSet::from_indices([i, (i + 3) % n]),
                    mult: 1,
                },
            ]
        })
        .collect();
    let g = Hypergraph::new(ground, edges).unwrap();
    c.bench_function("orient_find/circulant8_k1_l2", |b| {
        b.iter(|| find_orientation(black_box(&g), 0, 4, 1, 2).unwrap())
    });
}

criterion_group!(
    benches,
    bench_min_partition,
    bench_curve,
    bench_sequence,
    bench_kpartition,
    bench_orientation
);
criterion_main!(benches);

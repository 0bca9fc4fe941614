//! Shared fixtures for the solver benchmarks.

use stpps_core::value::{rat, rat_int};
use stpps_core::{GroundSet, SubmodularOracle};

/// The bundled weighted-graph regression instance: a light triangle on
/// {s,a,b} (weight 25/48 per edge), a bridge b–c of weight 1, and a dense
/// gadget on {c,d,e,t} with weight 3/8 per edge.
#[must_use]
pub fn weighted_regression_graph() -> SubmodularOracle {
    let labels = ["s", "a", "b", "c", "d", "e", "t"]
        .iter()
        .map(|s| (*s).to_string())
        .collect();
    let ground = GroundSet::new(labels, Some(0), Some(6)).unwrap();
    let light = || rat(25, 48);
    let heavy = || rat(3, 8);
    let edges = vec![
        (0, 1, light()),
        (1, 2, light()),
        (2, 0, light()),
        (2, 3, rat_int(1)),
        (3, 4, heavy()),
        (4, 6, heavy()),
        (6, 5, heavy()),
        (5, 3, heavy()),
        (3, 6, heavy()),
        (4, 5, heavy()),
    ];
    stpps_core::oracle::make_graph_cut(ground, edges).unwrap()
}

/// An unweighted cycle on n vertices with terminals 0 and n/2.
#[must_use]
pub fn cycle_graph(n: usize) -> SubmodularOracle {
    let ground = GroundSet::with_terminals(n, 0, n / 2).unwrap();
    let edges = (0..n).map(|i| (i, (i + 1) % n, rat_int(1))).collect();
    stpps_core::oracle::make_graph_cut(ground, edges).unwrap()
}

//! Exact algorithms for principal partition sequences of submodular
//! functions, {s,t}-separating submodular k-partition approximation, and
//! hyperarc-connected hypergraph orientation.
//!
//! Everything is computed in exact rational arithmetic ([`value::Rat`]) with
//! an optional symbolic-ε tier ([`value::Value`]) used for cardinality and
//! strictness perturbations, so results are bit-for-bit reproducible.
//!
//! The crate is organised around a small number of layers:
//!
//! - [`ground`], [`partition`], [`value`]: ground sets (≤ 64 elements, bitset
//!   backed), canonical partitions with the refinement predicates, and exact
//!   values.
//! - [`oracle`]: submodular function oracles (graph/hypergraph cuts,
//!   coverage, explicit tables), perturbations, and property checkers.
//! - [`solver`]: submodular function minimization (exhaustive and exact
//!   min-norm-point), Dilworth truncation, and minimum partition variants.
//! - [`pps`]: parametric envelope curves and principal partition sequences.
//! - [`reference`]: brute-force oracles for everything above, used as ground
//!   truth in tests.

pub mod error;
pub mod flow;
pub mod ground;
pub mod hypergraph;
pub mod instance;
pub mod kpartition;
pub mod oracle;
pub mod orientation;
pub mod partition;
pub mod pps;
pub mod reference;
pub mod solver;
pub mod value;

pub use error::{Error, Result};
pub use ground::{ElemSet, GroundSet, MAX_GROUND};
pub use hypergraph::{HyperEdge, Hypergraph, Orientation};
pub use instance::{parse_instance, Instance};
pub use oracle::{OracleFlags, SubmodularOracle};
pub use partition::Partition;
pub use pps::{CurveMode, PartitionSequence, PiecewiseLinearCurve, PpsOutcome};
pub use value::{Rat, Value};

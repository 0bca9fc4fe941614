//! Instance files: JSON descriptions of a ground set with terminals and a
//! submodular function.
//!
//! The schema is
//!
//! ```json
//! {
//!   "n": 3,
//!   "labels": ["s", "a", "t"],
//!   "s": "s",
//!   "t": "t",
//!   "function": { "kind": "graph_cut", "edges": [["s", "a", "1"], ["a", "t", "1"]] }
//! }
//! ```
//!
//! `labels` is optional (defaults to `v0`, `v1`, …); `s`/`t` are optional
//! and may be labels or indices. Rational numbers appear as strings
//! (`"25/48"`) or JSON integers. The supported function kinds:
//!
//! - `graph_cut`: `edges` is a list of `[u, v, weight]` triples.
//! - `hypergraph_cut`: `edges` is a list of `{"vertices": [...],
//!   "weight": w, "mult": m}` objects (`mult` optional, default 1).
//! - `coverage`: `covers[i]` lists the items covered by element i;
//!   `item_weights` gives each item's weight.
//! - `table`: `values` lists all 2^n function values indexed by bitmask
//!   (element i ↔ bit i); `flags` may assert structural properties.
//!
//! Instances hash to a hex digest of their exact byte content, so run
//! reports can tie results to inputs.

use crate::error::{Error, Result};
use crate::ground::{ElemSet, GroundSet};
use crate::oracle::{
    make_coverage, make_graph_cut, make_hypergraph_cut, make_table, OracleFlags, SubmodularOracle,
};
use crate::value::{parse_rat, Rat};
use sha2::{Digest, Sha256};

/// A parsed instance: ground set, oracle, and provenance digest.
#[derive(Clone)]
pub struct Instance {
    /// The oracle built from the function description.
    pub oracle: SubmodularOracle,
    /// The function kind string from the file.
    pub kind: String,
    /// Hex SHA-256 of the raw instance text.
    pub digest: String,
}

impl Instance {
    /// The ground set (shared with the oracle).
    #[must_use]
    pub fn ground(&self) -> &GroundSet {
        self.oracle.ground()
    }

    /// The terminals, when both are declared.
    pub fn terminals(&self) -> Result<(usize, usize)> {
        self.ground().terminals()
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(format!("instance: {}", msg.into()))
}

/// A rational from a JSON string ("p/q" or "p") or integer.
fn json_rat(v: &serde_json::Value) -> Result<Rat> {
    if let Some(s) = v.as_str() {
        return parse_rat(s).map_err(bad);
    }
    if let Some(i) = v.as_i64() {
        return Ok(Rat::from_integer(i.into()));
    }
    Err(bad(format!("expected a rational, got {v}")))
}

/// A vertex from a JSON label string or index.
fn json_vertex(v: &serde_json::Value, ground: &GroundSet) -> Result<usize> {
    if let Some(s) = v.as_str() {
        return ground
            .index_of(s)
            .ok_or_else(|| bad(format!("unknown label {s:?}")));
    }
    if let Some(i) = v.as_u64() {
        let i = i as usize;
        if i < ground.n() {
            return Ok(i);
        }
        return Err(bad(format!("vertex index {i} out of range")));
    }
    Err(bad(format!("expected a vertex label or index, got {v}")))
}

fn json_flags(v: &serde_json::Value) -> OracleFlags {
    let get = |name: &str| v[name].as_bool().unwrap_or(false);
    OracleFlags {
        symmetric: get("symmetric"),
        monotone: get("monotone"),
        posimodular: get("posimodular"),
        nonnegative: get("nonnegative"),
        strictly_submodular: get("strictly_submodular"),
    }
}

/// Parses an instance from JSON text; parse errors carry line/column.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| {
        bad(format!(
            "JSON parse error at line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })?;
    let digest = format!("{:x}", Sha256::digest(text.as_bytes()));
    instance_from_json(&value, digest)
}

/// Builds an instance from parsed JSON (with a caller-supplied digest).
pub fn instance_from_json(value: &serde_json::Value, digest: String) -> Result<Instance> {
    let n = value["n"]
        .as_u64()
        .ok_or_else(|| bad("missing or non-integer \"n\""))? as usize;
    let labels: Vec<String> = match value.get("labels") {
        None | Some(serde_json::Value::Null) => (0..n).map(|i| format!("v{i}")).collect(),
        Some(serde_json::Value::Array(items)) => items
            .iter()
            .map(|l| {
                l.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| bad("labels must be strings"))
            })
            .collect::<Result<_>>()?,
        Some(other) => return Err(bad(format!("bad \"labels\": {other}"))),
    };
    if labels.len() != n {
        return Err(bad("label count differs from n"));
    }
    // Terminals resolve against a label-only ground set first.
    let unterminated = GroundSet::new(labels.clone(), None, None)?;
    let terminal = |key: &str| -> Result<Option<usize>> {
        match value.get(key) {
            None | Some(serde_json::Value::Null) => Ok(None),
            Some(v) => json_vertex(v, &unterminated).map(Some),
        }
    };
    let ground = GroundSet::new(labels, terminal("s")?, terminal("t")?)?;

    let function = &value["function"];
    let kind = function["kind"]
        .as_str()
        .ok_or_else(|| bad("missing \"function.kind\""))?
        .to_string();
    let oracle = match kind.as_str() {
        "graph_cut" => {
            let edges = function["edges"]
                .as_array()
                .ok_or_else(|| bad("graph_cut needs \"edges\""))?
                .iter()
                .map(|e| {
                    let triple = e
                        .as_array()
                        .filter(|a| a.len() == 3)
                        .ok_or_else(|| bad("each edge must be [u, v, w]"))?;
                    Ok((
                        json_vertex(&triple[0], &ground)?,
                        json_vertex(&triple[1], &ground)?,
                        json_rat(&triple[2])?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            make_graph_cut(ground, edges)?
        }
        "hypergraph_cut" => {
            let edges = function["edges"]
                .as_array()
                .ok_or_else(|| bad("hypergraph_cut needs \"edges\""))?
                .iter()
                .map(|e| {
                    let verts = e["vertices"]
                        .as_array()
                        .ok_or_else(|| bad("each edge needs \"vertices\""))?
                        .iter()
                        .map(|v| json_vertex(v, &ground))
                        .collect::<Result<Vec<_>>>()?;
                    let weight = json_rat(&e["weight"])?;
                    let mult = e.get("mult").map_or(Ok(1), |m| {
                        m.as_u64()
                            .ok_or_else(|| bad("\"mult\" must be a positive integer"))
                    })?;
                    if mult == 0 {
                        return Err(bad("\"mult\" must be positive"));
                    }
                    Ok((
                        ElemSet::from_indices(verts),
                        weight * Rat::from_integer((mult as i64).into()),
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            make_hypergraph_cut(ground, edges)?
        }
        "coverage" => {
            let covers = function["covers"]
                .as_array()
                .ok_or_else(|| bad("coverage needs \"covers\""))?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| bad("each cover row must be a list"))?
                        .iter()
                        .map(|i| {
                            i.as_u64()
                                .map(|i| i as usize)
                                .ok_or_else(|| bad("item indices must be integers"))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let item_weights = function["item_weights"]
                .as_array()
                .ok_or_else(|| bad("coverage needs \"item_weights\""))?
                .iter()
                .map(json_rat)
                .collect::<Result<Vec<_>>>()?;
            make_coverage(ground, covers, item_weights)?
        }
        "table" => {
            let values = function["values"]
                .as_array()
                .ok_or_else(|| bad("table needs \"values\""))?
                .iter()
                .map(json_rat)
                .collect::<Result<Vec<_>>>()?;
            let flags = function
                .get("flags")
                .map_or_else(OracleFlags::default, json_flags);
            make_table(ground, values, flags)?
        }
        other => {
            return Err(bad(format!(
                "unknown function kind {other:?} (expected graph_cut, \
                 hypergraph_cut, coverage, or table)"
            )))
        }
    };
    Ok(Instance {
        oracle,
        kind,
        digest,
    })
}

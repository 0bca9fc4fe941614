//! Hypergraphs with edge multiplicities, and their orientations.
//!
//! A [`Hypergraph`] is a vertex set with hyperedges of size ≥ 2, each
//! carrying a positive integer multiplicity (the number of parallel copies —
//! the exact integer-weighted setting). An [`Orientation`] assigns a *head*
//! vertex to every copy; a hyperarc enters a vertex set U when its head lies
//! in U but the arc has a vertex outside U, giving the in-degree function
//!
//! d^in(U) = |{copies e : head(e) ∈ U, e∖U ≠ ∅}|,
//!
//! which is submodular (but neither symmetric, monotone, nor posimodular in
//! general). For any orientation of G and any partition 𝒫, the number of
//! hyperedges meeting at least two parts satisfies
//! |δ_G(𝒫)| = Σ_{P∈𝒫} d^in(P): each crossing edge has its head in exactly one
//! part and leaves it, and non-crossing edges enter no part. This identity
//! reduces partition-connectivity tests on G to partition minimizations of a
//! single in-degree function.
//!
//! Text format: a header line `n m`, then one line per hyperedge
//! `mult v₁ v₂ …` with 0-based vertex indices. Orientations use one line per
//! copy with `head=vᵢ` appended. A JSON mirror of both is provided.

use crate::error::{Error, Result};
use crate::ground::{ElemSet, GroundSet};
use crate::oracle::{OracleFlags, SubmodularOracle};
use crate::partition::Partition;
use crate::value::{rat_int, Value};

/// A hyperedge: vertex set of size ≥ 2 with a positive multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperEdge {
    /// Vertices of the hyperedge.
    pub vertices: ElemSet,
    /// Number of parallel copies.
    pub mult: u64,
}

/// A hypergraph with integer hyperedge multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    ground: GroundSet,
    edges: Vec<HyperEdge>,
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting hyperedges of size < 2 (they cannot
    /// leave any vertex set, so they carry no orientation meaning), edges
    /// outside the ground set, and zero multiplicities.
    pub fn new(ground: GroundSet, edges: Vec<HyperEdge>) -> Result<Self> {
        let full = ground.full_set();
        for e in &edges {
            if e.vertices.len() < 2 {
                return Err(Error::InvalidInput(
                    "hyperedges must have at least 2 vertices".into(),
                ));
            }
            if !e.vertices.is_subset_of(full) {
                return Err(Error::InvalidInput(
                    "hyperedge outside the ground set".into(),
                ));
            }
            if e.mult == 0 {
                return Err(Error::InvalidInput(
                    "hyperedge multiplicity must be positive".into(),
                ));
            }
        }
        Ok(Hypergraph { ground, edges })
    }

    /// The vertex ground set.
    #[must_use]
    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Number of vertices.
    #[must_use]
    pub fn n(&self) -> usize {
        self.ground.n()
    }

    /// Hyperedges with multiplicities.
    #[must_use]
    pub fn edges(&self) -> &[HyperEdge] {
        &self.edges
    }

    /// Total number of hyperedge copies Σ mult.
    #[must_use]
    pub fn total_copies(&self) -> u64 {
        self.edges.iter().map(|e| e.mult).sum()
    }

    /// Multiplicity-weighted degree of a vertex: copies incident to v.
    #[must_use]
    pub fn degree(&self, v: usize) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.vertices.contains(v))
            .map(|e| e.mult)
            .sum()
    }

    /// |δ_G(𝒫)|: multiplicity-weighted number of hyperedges intersecting at
    /// least two parts of the partition.
    #[must_use]
    pub fn delta_partition(&self, p: &Partition) -> u64 {
        self.edges
            .iter()
            .filter(|e| {
                p.blocks()
                    .iter()
                    .filter(|b| !e.vertices.is_disjoint(**b))
                    .count()
                    >= 2
            })
            .map(|e| e.mult)
            .sum()
    }

    /// Multiplicity-weighted number of hyperedges fully inside `set`
    /// (the induced edge count i_G(Y)).
    #[must_use]
    pub fn induced_edges(&self, set: ElemSet) -> u64 {
        self.edges
            .iter()
            .filter(|e| e.vertices.is_subset_of(set))
            .map(|e| e.mult)
            .sum()
    }

    /// Deletes vertex `v` together with all incident hyperedges, reindexing
    /// the remaining vertices downward. Returns the minor and the map from
    /// old indices to new ones.
    pub fn remove_vertex(&self, v: usize) -> Result<(Hypergraph, Vec<Option<usize>>)> {
        let n = self.n();
        if v >= n {
            return Err(Error::InvalidInput(format!("vertex {v} out of range")));
        }
        if n == 1 {
            return Err(Error::InvalidInput("cannot delete the only vertex".into()));
        }
        let mut map = vec![None; n];
        let mut labels = Vec::with_capacity(n - 1);
        for (i, slot) in map.iter_mut().enumerate() {
            if i != v {
                *slot = Some(labels.len());
                labels.push(self.ground.label(i).to_string());
            }
        }
        let remap = |i: usize| map[i].expect("vertex survives deletion");
        let s_index = self.ground.s_index().filter(|&s| s != v).map(remap);
        let t_index = self.ground.t_index().filter(|&t| t != v).map(remap);
        let ground = GroundSet::new(labels, s_index, t_index)?;
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.vertices.contains(v))
            .map(|e| HyperEdge {
                vertices: ElemSet::from_indices(e.vertices.iter().map(remap)),
                mult: e.mult,
            })
            .collect();
        Ok((Hypergraph::new(ground, edges)?, map))
    }

    /// Serializes to the `n m` / `mult v₁ v₂ …` text format.
    #[must_use]
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edges.len());
        for e in &self.edges {
            let verts: Vec<String> = e.vertices.iter().map(|i| i.to_string()).collect();
            out.push_str(&format!("{} {}\n", e.mult, verts.join(" ")));
        }
        out
    }

    /// Parses the text format; vertices are 0-based indices.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidInput("empty hypergraph text".into()))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::InvalidInput("bad hypergraph header".into()))?;
        let m: usize = parts
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::InvalidInput("bad hypergraph header".into()))?;
        let mut edges = Vec::with_capacity(m);
        for (k, line) in lines.enumerate() {
            if k >= m {
                return Err(Error::InvalidInput("more edge lines than declared".into()));
            }
            let mut nums = line.split_whitespace();
            let mult: u64 = nums
                .next()
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| Error::InvalidInput(format!("bad multiplicity on line {k}")))?;
            let mut verts = Vec::new();
            for tok in nums {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad vertex {tok:?} on line {k}")))?;
                if v >= n {
                    return Err(Error::InvalidInput(format!(
                        "vertex {v} out of range on line {k}"
                    )));
                }
                verts.push(v);
            }
            edges.push(HyperEdge {
                vertices: ElemSet::from_indices(verts),
                mult,
            });
        }
        if edges.len() != m {
            return Err(Error::InvalidInput("fewer edge lines than declared".into()));
        }
        Hypergraph::new(GroundSet::with_default_labels(n), edges)
    }

    /// Returns a copy whose ground set carries the given terminals.
    pub fn with_terminals(&self, s: usize, t: usize) -> Result<Hypergraph> {
        let ground = GroundSet::new(self.ground.labels().to_vec(), Some(s), Some(t))?;
        Hypergraph::new(ground, self.edges.clone())
    }
}

/// An orientation of a hypergraph: one head per hyperedge copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    base: Hypergraph,
    /// heads[i][c]: head of copy c of edge i; heads[i].len() = mult of edge i.
    heads: Vec<Vec<usize>>,
}

impl Orientation {
    /// Builds an orientation, validating head membership and copy counts.
    pub fn new(base: Hypergraph, heads: Vec<Vec<usize>>) -> Result<Self> {
        if heads.len() != base.edges().len() {
            return Err(Error::InvalidInput(
                "head list length differs from edge count".into(),
            ));
        }
        for (e, hs) in base.edges().iter().zip(&heads) {
            if hs.len() as u64 != e.mult {
                return Err(Error::InvalidInput(
                    "one head required per hyperedge copy".into(),
                ));
            }
            for &h in hs {
                if !e.vertices.contains(h) {
                    return Err(Error::InvalidInput(format!(
                        "head {h} is not a vertex of its hyperedge"
                    )));
                }
            }
        }
        Ok(Orientation { base, heads })
    }

    /// The underlying hypergraph.
    #[must_use]
    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    /// Heads per edge (one entry per copy).
    #[must_use]
    pub fn heads(&self) -> &[Vec<usize>] {
        &self.heads
    }

    /// Iterates all hyperarc copies as (vertex set, head).
    pub fn copies(&self) -> impl Iterator<Item = (ElemSet, usize)> + '_ {
        self.base
            .edges()
            .iter()
            .zip(&self.heads)
            .flat_map(|(e, hs)| hs.iter().map(move |&h| (e.vertices, h)))
    }

    /// d^in(U): number of copies with head in U and a vertex outside U.
    #[must_use]
    pub fn indegree(&self, set: ElemSet) -> u64 {
        self.copies()
            .filter(|&(verts, h)| set.contains(h) && !verts.difference(set).is_empty())
            .count() as u64
    }

    /// Number of copies with head v.
    #[must_use]
    pub fn head_count(&self, v: usize) -> u64 {
        self.copies().filter(|&(_, h)| h == v).count() as u64
    }

    /// Serializes to text: one line per copy, `1 v₁ v₂ … head=vᵢ`.
    #[must_use]
    pub fn to_text(&self) -> String {
        let copies: Vec<(ElemSet, usize)> = self.copies().collect();
        let mut out = format!("{} {}\n", self.base.n(), copies.len());
        for (verts, h) in copies {
            let vs: Vec<String> = verts.iter().map(|i| i.to_string()).collect();
            out.push_str(&format!("1 {} head={h}\n", vs.join(" ")));
        }
        out
    }

    /// Parses the per-copy text format.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidInput("empty orientation text".into()))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::InvalidInput("bad orientation header".into()))?;
        let m: usize = parts
            .next()
            .and_then(|x| x.parse().ok())
            .ok_or_else(|| Error::InvalidInput("bad orientation header".into()))?;
        let mut edges = Vec::new();
        let mut heads = Vec::new();
        for (k, line) in lines.enumerate() {
            let (edge_part, head_part) = line
                .rsplit_once("head=")
                .ok_or_else(|| Error::InvalidInput(format!("missing head on line {k}")))?;
            let head: usize = head_part
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad head on line {k}")))?;
            let mut nums = edge_part.split_whitespace();
            let mult: u64 = nums
                .next()
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| Error::InvalidInput(format!("bad multiplicity on line {k}")))?;
            if mult != 1 {
                return Err(Error::InvalidInput(
                    "orientation text uses one line per copy (mult 1)".into(),
                ));
            }
            let mut verts = Vec::new();
            for tok in nums {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad vertex {tok:?} on line {k}")))?;
                if v >= n {
                    return Err(Error::InvalidInput(format!(
                        "vertex {v} out of range on line {k}"
                    )));
                }
                verts.push(v);
            }
            edges.push(HyperEdge {
                vertices: ElemSet::from_indices(verts),
                mult: 1,
            });
            heads.push(vec![head]);
        }
        if edges.len() != m {
            return Err(Error::InvalidInput("copy count differs from header".into()));
        }
        let base = Hypergraph::new(GroundSet::with_default_labels(n), edges)?;
        Orientation::new(base, heads)
    }
}

/// In-degree oracle of an orientation: d^in is submodular and nonnegative,
/// with integer values (γ = 1), but carries none of the symmetric /
/// monotone / posimodular structure.
#[must_use]
pub fn make_indegree(orientation: &Orientation) -> SubmodularOracle {
    let copies: Vec<(ElemSet, usize)> = orientation.copies().collect();
    let flags = OracleFlags {
        symmetric: false,
        monotone: false,
        posimodular: false,
        nonnegative: true,
        strictly_submodular: false,
    };
    SubmodularOracle::from_fn(
        orientation.base().ground().clone(),
        flags,
        Some(rat_int(1)),
        move |set: ElemSet| {
            let d = copies
                .iter()
                .filter(|&&(verts, h)| set.contains(h) && !verts.difference(set).is_empty())
                .count();
            Value::from_rat(rat_int(d as i64))
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::check_submodular;

    pub(crate) fn path_sat() -> Hypergraph {
        // Path s(0) – a(1) – t(2) as a 2-uniform hypergraph.
        Hypergraph::new(
            GroundSet::with_terminals(3, 0, 2).unwrap(),
            vec![
                HyperEdge {
                    vertices: ElemSet::from_indices([0, 1]),
                    mult: 1,
                },
                HyperEdge {
                    vertices: ElemSet::from_indices([1, 2]),
                    mult: 1,
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn construction_rejects_degenerate_edges() {
        let g = GroundSet::with_default_labels(3);
        assert!(Hypergraph::new(
            g.clone(),
            vec![HyperEdge {
                vertices: ElemSet::singleton(0),
                mult: 1
            }]
        )
        .is_err());
        assert!(Hypergraph::new(
            g,
            vec![HyperEdge {
                vertices: ElemSet::from_indices([0, 1]),
                mult: 0
            }]
        )
        .is_err());
    }

    #[test]
    fn delta_and_induced_counts() {
        let g = path_sat();
        let p = Partition::new(
            3,
            vec![ElemSet::singleton(0), ElemSet::from_indices([1, 2])],
        )
        .unwrap();
        assert_eq!(g.delta_partition(&p), 1);
        assert_eq!(g.delta_partition(&Partition::singletons(3)), 2);
        assert_eq!(g.delta_partition(&Partition::trivial(3)), 0);
        assert_eq!(g.induced_edges(ElemSet::from_indices([1, 2])), 1);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.total_copies(), 2);
    }

    #[test]
    fn vertex_deletion_reindexes() {
        let g = path_sat();
        let (minor, map) = g.remove_vertex(1).unwrap();
        assert_eq!(minor.n(), 2);
        assert!(minor.edges().is_empty(), "incident edges deleted");
        assert_eq!(map[0], Some(0));
        assert_eq!(map[1], None);
        assert_eq!(map[2], Some(1));
        assert_eq!(minor.ground().s_index(), Some(0));
        assert_eq!(minor.ground().t_index(), Some(1));
        let (minor_s, _) = g.remove_vertex(0).unwrap();
        assert_eq!(minor_s.ground().s_index(), None);
        assert_eq!(minor_s.edges().len(), 1);
    }

    #[test]
    fn text_round_trip() {
        let g = path_sat();
        let parsed = Hypergraph::parse_text(&g.to_text()).unwrap();
        assert_eq!(parsed.edges(), g.edges());
        assert!(Hypergraph::parse_text("").is_err());
        assert!(Hypergraph::parse_text("2 1\n1 0 5").is_err());
    }

    #[test]
    fn orientation_basics() {
        let g = path_sat();
        // Orient s→a (head a=1) and a→t (head t=2).
        let o = Orientation::new(g.clone(), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(o.indegree(ElemSet::from_indices([1, 2])), 1);
        assert_eq!(o.indegree(ElemSet::singleton(0)), 0);
        assert_eq!(o.head_count(2), 1);
        assert!(Orientation::new(g.clone(), vec![vec![2], vec![2]]).is_err());
        assert!(Orientation::new(g.clone(), vec![vec![1]]).is_err());
        let parsed = Orientation::parse_text(&o.to_text()).unwrap();
        assert_eq!(
            parsed.copies().collect::<Vec<_>>(),
            o.copies().collect::<Vec<_>>()
        );
    }

    #[test]
    fn indegree_oracle_is_submodular() {
        let g = path_sat();
        let o = Orientation::new(g, vec![vec![1], vec![2]]).unwrap();
        let d = make_indegree(&o);
        assert!(check_submodular(&d, 8).unwrap().holds);
        assert_eq!(
            d.eval(ElemSet::from_indices([1, 2])),
            Value::from_rat(crate::value::rat_int(1))
        );
    }
}

//! Integer maximum flow on explicit networks.
//!
//! A small Edmonds–Karp implementation (BFS augmenting paths) over `u64`
//! capacities, sufficient for the bipartite indegree-realization networks
//! and the directed-hypergraph connectivity checks, whose capacities are
//! unit or small integers. Besides the flow value, callers can read
//! per-edge flows (for rounding a flow into a head assignment or a path
//! decomposition) and the source side of a minimum cut (for deficiency and
//! violating-set witnesses).

use std::collections::VecDeque;

/// A directed edge with residual bookkeeping; stored alongside its reverse
/// twin at index `idx ^ 1`.
#[derive(Clone, Debug)]
struct FlowEdge {
    to: usize,
    cap: u64,
}

/// A flow network over nodes `0..n`.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    edges: Vec<FlowEdge>,
    original_cap: Vec<u64>,
}

impl FlowNetwork {
    /// An empty network with `n` nodes.
    #[must_use]
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            original_cap: Vec::new(),
        }
    }

    /// Number of nodes.
    #[must_use]
    pub fn num_nodes(&self) -> usize {
        self.adj.len()
    }

    /// Adds a directed edge u → v with the given capacity and returns its
    /// handle for later [`Self::edge_flow`] queries.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: u64) -> usize {
        let idx = self.edges.len();
        self.adj[u].push(idx);
        self.edges.push(FlowEdge { to: v, cap });
        self.original_cap.push(cap);
        self.adj[v].push(idx + 1);
        self.edges.push(FlowEdge { to: u, cap: 0 });
        self.original_cap.push(0);
        idx
    }

    /// Flow currently routed through the edge with the given handle.
    #[must_use]
    pub fn edge_flow(&self, handle: usize) -> u64 {
        // Residual capacity on the reverse twin equals the routed flow.
        self.edges[handle ^ 1].cap
    }

    /// Runs Edmonds–Karp from `s` to `t` and returns the maximum flow
    /// value. Residuals persist, so [`Self::edge_flow`] and
    /// [`Self::source_side_of_min_cut`] reflect the final flow. Calling it
    /// again continues from the current flow (returning 0 more).
    pub fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        assert_ne!(s, t, "flow endpoints must differ");
        let mut total = 0u64;
        loop {
            // BFS for a shortest augmenting path.
            let mut pred: Vec<Option<usize>> = vec![None; self.adj.len()];
            let mut seen = vec![false; self.adj.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &idx in &self.adj[u] {
                    let e = &self.edges[idx];
                    if e.cap > 0 && !seen[e.to] {
                        seen[e.to] = true;
                        pred[e.to] = Some(idx);
                        if e.to == t {
                            break 'bfs;
                        }
                        queue.push_back(e.to);
                    }
                }
            }
            if !seen[t] {
                return total;
            }
            // Bottleneck along the path.
            let mut bottleneck = u64::MAX;
            let mut v = t;
            while v != s {
                let idx = pred[v].unwrap();
                bottleneck = bottleneck.min(self.edges[idx].cap);
                v = self.edges[idx ^ 1].to;
            }
            // Augment.
            let mut v = t;
            while v != s {
                let idx = pred[v].unwrap();
                self.edges[idx].cap -= bottleneck;
                self.edges[idx ^ 1].cap += bottleneck;
                v = self.edges[idx ^ 1].to;
            }
            total += bottleneck;
        }
    }

    /// After a [`Self::max_flow`] call: the set of nodes reachable from `s`
    /// in the residual network — the source side of a minimum s–t cut.
    #[must_use]
    pub fn source_side_of_min_cut(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &idx in &self.adj[u] {
                let e = &self.edges[idx];
                if e.cap > 0 && !seen[e.to] {
                    seen[e.to] = true;
                    queue.push_back(e.to);
                }
            }
        }
        seen
    }

    /// Resets all flow, restoring original capacities.
    pub fn reset(&mut self) {
        for (e, &cap) in self.edges.iter_mut().zip(&self.original_cap) {
            e.cap = cap;
        }
    }
}

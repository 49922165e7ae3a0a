//! Connectivity, diameter and degree statistics, plus the necessary-condition
//! and diameter-bound checks for ordered graphs.

mod audit;
mod cuts;
mod flow;

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use audit::{bracelet_degree_audit, DegreeAudit, Screen};
pub use cuts::{exhaustive_edge_connectivity, exhaustive_vertex_connectivity, EXHAUSTIVE_CUT_LIMIT};

use crate::graph::{Adjacency, Digraph};
use crate::oracle::Verdict;

/// Graph diameter; `Infinite` when some vertex cannot reach another.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Largest BFS distance over all ordered pairs.
pub fn diameter<G: Adjacency + ?Sized>(g: &G) -> Diameter {
    let mut best = 0;
    for v in 0..g.vertex_count() {
        for d in g.bfs_distances(v) {
            match d {
                Some(d) => best = best.max(d),
                None => return Diameter::Infinite,
            }
        }
    }
    Diameter::Finite(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub vertex_count: usize,
    pub directed: bool,
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub min_in_degree: usize,
    pub min_out_degree: usize,
    pub diameter: Diameter,
}

impl ConnectivityReport {
    /// Minimum degree (undirected) or the smaller of minimum in- and out-degree.
    pub fn min_degree(&self) -> usize {
        self.min_in_degree.min(self.min_out_degree)
    }
}

/// Ordered pairs `(s, t)` to run flows on: all pairs for digraphs, `s < t` for graphs.
fn pairs<G: Adjacency + ?Sized>(g: &G) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|s| (0..n).map(move |t| (s, t)))
        .filter(|&(s, t)| s != t && (g.is_directed() || s < t))
        .collect()
}

/// Exact edge connectivity: minimum over terminal pairs of the unit-capacity max flow.
pub fn edge_connectivity<G: Adjacency + Sync + ?Sized>(g: &G) -> usize {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    // every cut separates vertex 0 from some t, in one direction or the other
    let limit = (0..n).map(|v| g.out_neighbors(v).len().min(g.in_neighbors(v).len())).min().unwrap_or(0) as u32;
    let mut terminals: Vec<(usize, usize)> = (1..n).map(|t| (0, t)).collect();
    if g.is_directed() {
        terminals.extend((1..n).map(|t| (t, 0)));
    }
    terminals.par_iter().map(|&(s, t)| flow::local_edge_connectivity(g, s, t, limit)).min().unwrap_or(limit) as usize
}

/// Exact vertex connectivity (`n - 1` when every ordered pair is joined by an arc).
pub fn vertex_connectivity<G: Adjacency + Sync + ?Sized>(g: &G) -> usize {
    let n = g.vertex_count();
    if n < 2 {
        return 0;
    }
    let open: Vec<(usize, usize)> = pairs(g).into_iter().filter(|&(s, t)| !g.has_edge(s, t)).collect();
    let limit = (n - 1) as u32;
    open.par_iter().map(|&(s, t)| flow::local_vertex_connectivity(g, s, t, limit)).min().unwrap_or(limit) as usize
}

pub fn connectivity<G: Adjacency + Sync + ?Sized>(g: &G) -> ConnectivityReport {
    let n = g.vertex_count();
    let min_out_degree = (0..n).map(|v| g.out_neighbors(v).len()).min().unwrap_or(0);
    let min_in_degree = (0..n).map(|v| g.in_neighbors(v).len()).min().unwrap_or(0);
    ConnectivityReport {
        vertex_count: n,
        directed: g.is_directed(),
        vertex_connectivity: vertex_connectivity(g),
        edge_connectivity: edge_connectivity(g),
        min_in_degree,
        min_out_degree,
        diameter: diameter(g),
    }
}

/// Upper bound on the diameter of a `2k`-ordered graph on `n` vertices.
pub fn diameter_bound(n: usize, k: usize) -> i64 {
    (n as i64 - 3).div_euclid(2 * k as i64) + 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiameterBoundReport {
    pub vertex_count: usize,
    pub k: usize,
    /// Order of the supplied verdict.
    pub order: usize,
    /// The verdict certifies `2k`-orderedness (it holds for an order of at least `2k`).
    pub applicable: bool,
    pub diameter: Diameter,
    pub bound: i64,
    /// `bound - diameter`, when the diameter is finite.
    pub slack: Option<i64>,
    /// False only when the bound applies and is exceeded.
    pub ok: bool,
}

/// Compares the diameter with `floor((n-3)/2k) + 2` when `verdict` shows the
/// graph is at least `2k`-ordered.
pub fn check_diameter_bound<G: Adjacency + ?Sized>(g: &G, k: usize, verdict: &Verdict) -> DiameterBoundReport {
    let n = g.vertex_count();
    let d = diameter(g);
    let bound = diameter_bound(n, k.max(1));
    let applicable = verdict.holds() && verdict.order >= 2 * k;
    let slack = d.finite().map(|d| bound - d as i64);
    let ok = !applicable || slack.is_some_and(|s| s >= 0);
    DiameterBoundReport { vertex_count: n, k, order: verdict.order, applicable, diameter: d, bound, slack, ok }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DirectedViolation {
    InDegree { vertex: usize, degree: usize },
    OutDegree { vertex: usize, degree: usize },
    VertexConnectivity { value: usize },
}

impl fmt::Display for DirectedViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DirectedViolation::InDegree { vertex, degree } => write!(f, "vertex {vertex} has in-degree {degree}"),
            DirectedViolation::OutDegree { vertex, degree } => write!(f, "vertex {vertex} has out-degree {degree}"),
            DirectedViolation::VertexConnectivity { value } => write!(f, "vertex connectivity is {value}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DirectedNecessaryReport {
    pub k: usize,
    /// `k - 1`: the minimum in-degree, out-degree and connectivity of a k-ordered digraph.
    pub required: usize,
    pub vertex_connectivity: usize,
    pub violations: Vec<DirectedViolation>,
}

impl DirectedNecessaryReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Lists every vertex with in- or out-degree below `k - 1` and a vertex
/// connectivity below `k - 1`. An empty list is necessary for k-orderedness.
pub fn check_directed_necessary(d: &Digraph, k: usize) -> DirectedNecessaryReport {
    let required = k.saturating_sub(1);
    let mut violations = Vec::new();
    for v in 0..d.vertex_count() {
        if d.in_degree(v) < required {
            violations.push(DirectedViolation::InDegree { vertex: v, degree: d.in_degree(v) });
        }
        if d.out_degree(v) < required {
            violations.push(DirectedViolation::OutDegree { vertex: v, degree: d.out_degree(v) });
        }
    }
    let kappa = vertex_connectivity(d);
    if kappa < required {
        violations.push(DirectedViolation::VertexConnectivity { value: kappa });
    }
    DirectedNecessaryReport { k, required, vertex_connectivity: kappa, violations }
}

#[cfg(test)]
mod tests;

//! Greedy ordered tours and cycles: join consecutive targets by shortest paths,
//! deleting what each path used before the next round. Each construction first
//! measures connectivity and diameter and refuses when the sufficient
//! condition it relies on does not hold.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::repair::{linkage_to_edge_tour, round_robin_pairs};
use super::PathSystem;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Digraph, Graph, VertexId};
use crate::metrics::{diameter, edge_connectivity, vertex_connectivity, Diameter};
use crate::witness::{edge_key, verify_ordered_cycle, EdgeSequence, MarkSequence, OrderedCycle, Tour};

/// Measured connectivity against the required value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gate {
    /// `"edge"` or `"vertex"` connectivity.
    pub kind: &'static str,
    pub connectivity: usize,
    pub diameter: Diameter,
    /// `None` when the diameter is infinite (or zero for the vertex version).
    pub required: Option<usize>,
    pub passed: bool,
}

impl Gate {
    fn new(kind: &'static str, connectivity: usize, diameter: Diameter, required: Option<usize>) -> Self {
        let passed = required.is_some_and(|r| connectivity >= r);
        Self { kind, connectivity, diameter, required, passed }
    }

    fn refuse(&self, what: &str) -> Error {
        let required = self.required.map_or("undefined".to_string(), |r| r.to_string());
        Error::Precondition(format!(
            "{what}: {} connectivity {} < required {required} (diameter {})",
            self.kind, self.connectivity, self.diameter
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyTour {
    pub gate: Gate,
    /// The path found in each round, before repair.
    pub rounds: Vec<Vec<VertexId>>,
    pub swaps: usize,
    pub tour: Tour,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyCycle {
    pub gate: Gate,
    pub rounds: Vec<Vec<VertexId>>,
    pub cycle: OrderedCycle,
}

/// Breadth-first shortest path avoiding `blocked` vertices and `used` edges
/// (and the single edge `forbid`); neighbours are scanned in ascending id order.
fn shortest_path<G: Adjacency + ?Sized>(
    g: &G,
    s: VertexId,
    t: VertexId,
    blocked: &[bool],
    used: &HashSet<(VertexId, VertexId)>,
    forbid: Option<(VertexId, VertexId)>,
) -> Option<Vec<VertexId>> {
    let directed = g.is_directed();
    let mut prev: Vec<Option<VertexId>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut path = vec![t];
            while let Some(p) = prev[*path.last().expect("nonempty")] {
                path.push(p);
            }
            path.reverse();
            return Some(path);
        }
        for &w in g.out_neighbors(u) {
            let key = edge_key(directed, u, w);
            let forbidden = forbid.is_some_and(|(a, b)| edge_key(directed, a, b) == key);
            if seen[w] || (blocked[w] && w != t) || used.contains(&key) || forbidden {
                continue;
            }
            seen[w] = true;
            prev[w] = Some(u);
            queue.push_back(w);
        }
    }
    None
}

fn edge_tour<G: Adjacency + ?Sized>(g: &G, edge_marks: &EdgeSequence, gate: Gate) -> Result<GreedyTour> {
    let directed = g.is_directed();
    let blocked = vec![false; g.vertex_count()];
    let mut used = HashSet::new();
    let mut rounds = Vec::new();
    for (r, (s, t)) in round_robin_pairs(edge_marks).into_iter().enumerate() {
        let path = shortest_path(g, s, t, &blocked, &used, None)
            .ok_or_else(|| Error::Internal(format!("round {} found no path from {s} to {t}", r + 1)))?;
        used.extend(path.windows(2).map(|w| edge_key(directed, w[0], w[1])));
        rounds.push(path);
    }
    let repaired = linkage_to_edge_tour(g, edge_marks, &PathSystem { paths: rounds.clone() })?;
    Ok(GreedyTour { gate, rounds, swaps: repaired.swaps, tour: repaired.tour })
}

fn vertex_cycle<G: Adjacency + ?Sized>(g: &G, marks: &MarkSequence, gate: Gate) -> Result<GreedyCycle> {
    let directed = g.is_directed();
    let ms = marks.as_slice();
    let k = ms.len();
    let mut blocked = vec![false; g.vertex_count()];
    ms.iter().for_each(|&v| blocked[v] = true);
    let mut used = HashSet::new();
    let mut rounds: Vec<Vec<VertexId>> = Vec::new();
    for i in 0..k {
        let (s, t) = (ms[i], ms[(i + 1) % k]);
        // with two marks the closing path must not retrace the first one as a 2-cycle
        let forbid = (k == 2 && i == 1 && rounds[0].len() == 2).then_some((s, t));
        let path = shortest_path(g, s, t, &blocked, &used, forbid)
            .ok_or_else(|| Error::Internal(format!("round {} found no path from {s} to {t}", i + 1)))?;
        path[1..path.len() - 1].iter().for_each(|&v| blocked[v] = true);
        used.extend(path.windows(2).map(|w| edge_key(directed, w[0], w[1])));
        rounds.push(path);
    }
    let vertices: Vec<VertexId> = rounds.iter().flat_map(|p| p[..p.len() - 1].iter().copied()).collect();
    let cycle = OrderedCycle::new(vertices, marks)?;
    if let Err(v) = verify_ordered_cycle(g, &cycle, marks, false) {
        return Err(Error::Internal(format!("greedy cycle fails verification: {v}")));
    }
    Ok(GreedyCycle { gate, rounds, cycle })
}

fn check_k(k: usize, len: usize, min: usize) -> Result<()> {
    if k != len {
        return Err(Error::InvalidParams(format!("k = {k} but {len} targets given")));
    }
    if k < min {
        return Err(Error::Precondition(format!("need k >= {min}, got {k}")));
    }
    Ok(())
}

/// Tour through `k` marked arcs in order, when the edge connectivity is at
/// least `(2k-1) * ceil(d/2) + 1` for diameter `d`.
pub fn greedy_edge_tour(d: &Digraph, edge_marks: &EdgeSequence, k: usize) -> Result<GreedyTour> {
    check_k(k, edge_marks.len(), 1)?;
    let diam = diameter(d);
    let required = diam.finite().map(|dm| (2 * k - 1) * dm.div_ceil(2) + 1);
    let gate = Gate::new("edge", edge_connectivity(d), diam, required);
    if !gate.passed {
        return Err(gate.refuse("greedy edge tour"));
    }
    edge_tour(d, edge_marks, gate)
}

/// Cycle through `k` marks in order, when the vertex connectivity is at least
/// `(k-1) * d` for diameter `d >= 1`.
pub fn greedy_vertex_cycle(d: &Digraph, marks: &MarkSequence, k: usize) -> Result<GreedyCycle> {
    check_k(k, marks.len(), 2)?;
    let diam = diameter(d);
    let required = diam.finite().filter(|&dm| dm >= 1).map(|dm| (k - 1) * dm);
    let gate = Gate::new("vertex", vertex_connectivity(d), diam, required);
    if !gate.passed {
        return Err(gate.refuse("greedy vertex cycle"));
    }
    vertex_cycle(d, marks, gate)
}

#[derive(Debug, Clone)]
pub enum UndirectedTarget {
    Vertices(MarkSequence),
    Edges(EdgeSequence),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum GreedyOutput {
    Cycle(GreedyCycle),
    Tour(GreedyTour),
}

/// Undirected versions of the two greedy constructions, both gated on
/// (edge or vertex) connectivity at least `(2k-1) * d + 1`.
pub fn greedy_undirected(g: &Graph, target: &UndirectedTarget, k: usize) -> Result<GreedyOutput> {
    let diam = diameter(g);
    let required = diam.finite().map(|dm| (2 * k).saturating_sub(1) * dm + 1);
    match target {
        UndirectedTarget::Vertices(marks) => {
            check_k(k, marks.len(), 2)?;
            let gate = Gate::new("vertex", vertex_connectivity(g), diam, required);
            if !gate.passed {
                return Err(gate.refuse("greedy undirected cycle"));
            }
            vertex_cycle(g, marks, gate).map(GreedyOutput::Cycle)
        }
        UndirectedTarget::Edges(edges) => {
            check_k(k, edges.len(), 1)?;
            let gate = Gate::new("edge", edge_connectivity(g), diam, required);
            if !gate.passed {
                return Err(gate.refuse("greedy undirected tour"));
            }
            edge_tour(g, edges, gate).map(GreedyOutput::Tour)
        }
    }
}

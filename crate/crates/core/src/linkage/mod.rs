//! Edge-disjoint path systems and the tours built from them: the swap repair
//! turning a round-robin linkage into an edge-ordered tour, the greedy
//! shortest-path constructions gated on connectivity and diameter, and the
//! extraction of a linkage from an edge-ordered tour.

mod extract;
mod greedy;
mod paths;
mod repair;

use std::collections::HashSet;

use serde::Serialize;

pub use extract::tour_to_linkage;
pub use greedy::{greedy_edge_tour, greedy_undirected, greedy_vertex_cycle, Gate, GreedyCycle, GreedyOutput, GreedyTour, UndirectedTarget};
pub use paths::{find_edge_disjoint_paths, LinkageOptions};
pub use repair::{linkage_to_edge_tour, round_robin_pairs, RepairedTour};

use crate::error::{Error, Result};
use crate::graph::{Adjacency, VertexId};
use crate::witness::edge_key;

/// Terminal pairs `(s_i, t_i)`; vertices may repeat.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TerminalPairs(Vec<(VertexId, VertexId)>);

impl TerminalPairs {
    pub fn new(pairs: Vec<(VertexId, VertexId)>, n: usize) -> Result<Self> {
        if let Some(&v) = pairs.iter().flat_map(|(s, t)| [s, t]).find(|&&v| v >= n) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(Self(pairs))
    }

    pub fn as_slice(&self) -> &[(VertexId, VertexId)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every vertex appearing as a terminal, without repeats, in ascending order.
    pub fn vertices(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.0.iter().flat_map(|&(s, t)| [s, t]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// Path `i` joins `s_i` to `t_i`, listed as a vertex walk (a single vertex when `s_i = t_i`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathSystem {
    pub paths: Vec<Vec<VertexId>>,
}

impl PathSystem {
    /// Endpoints match, every step is an edge, and no edge is used twice
    /// within or across paths.
    pub fn check<G: Adjacency + ?Sized>(&self, g: &G, pairs: &TerminalPairs) -> std::result::Result<(), String> {
        if self.paths.len() != pairs.len() {
            return Err(format!("{} paths for {} pairs", self.paths.len(), pairs.len()));
        }
        let mut used = HashSet::new();
        for (i, (p, &(s, t))) in self.paths.iter().zip(pairs.as_slice()).enumerate() {
            if p.first() != Some(&s) || p.last() != Some(&t) {
                return Err(format!("path {i} does not join {s} to {t}"));
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return Err(format!("path {i} uses non-edge {}-{}", w[0], w[1]));
                }
                if !used.insert(edge_key(g.is_directed(), w[0], w[1])) {
                    return Err(format!("edge {}-{} used twice", w[0], w[1]));
                }
            }
        }
        Ok(())
    }

    pub fn edge_count(&self) -> usize {
        self.paths.iter().map(|p| p.len().saturating_sub(1)).sum()
    }
}

/// Removes closed sub-walks so that no vertex repeats; the edges kept are a subset.
pub(crate) fn shortcut(walk: &[VertexId]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = Vec::with_capacity(walk.len());
    for &v in walk {
        if let Some(i) = out.iter().position(|&u| u == v) {
            out.truncate(i + 1);
        } else {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests;

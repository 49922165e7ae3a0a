//! From a round-robin linkage `v_1 -> u_1 -> v_2 -> ... -> u_k -> v_1` to a tour
//! that traverses each marked edge `e_i = v_i u_i` as the step from `v_i` to `u_i`.

use serde::Serialize;

use super::{PathSystem, TerminalPairs};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, VertexId};
use crate::witness::{edge_key, verify_tour, EdgeSequence, Tour};

/// Pairs `(v_1,u_1), (u_1,v_2), (v_2,u_2), ..., (u_k,v_1)` for marked edges `e_i = (v_i,u_i)`.
pub fn round_robin_pairs(edge_marks: &EdgeSequence) -> Vec<(VertexId, VertexId)> {
    let e = edge_marks.as_slice();
    let k = e.len();
    (0..k).flat_map(|i| [(e[i].0, e[i].1), (e[i].1, e[(i + 1) % k].0)]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepairedTour {
    pub tour: Tour,
    /// Number of paths replaced by their marked edge.
    pub swaps: usize,
    /// The repaired system (path `2i` is exactly `e_i`).
    pub system: PathSystem,
}

fn edge_position<G: Adjacency + ?Sized>(g: &G, path: &[VertexId], u: VertexId, v: VertexId) -> Option<usize> {
    let key = edge_key(g.is_directed(), u, v);
    path.windows(2).position(|w| edge_key(g.is_directed(), w[0], w[1]) == key)
}

/// Repairs `system` (for the round-robin pairs of `edge_marks`) so that the
/// `v_i -> u_i` path is the edge `e_i` itself, then concatenates the paths.
///
/// For each `i` in turn: if `e_i` lies on no other path, path `2i` becomes `e_i`;
/// if it lies on another path `p`, `e_i` is cut out of `p` and replaced by the
/// old path `2i`. Each step fixes one marked edge for good, so at most `k` swaps happen.
pub fn linkage_to_edge_tour<G: Adjacency + ?Sized>(
    g: &G,
    edge_marks: &EdgeSequence,
    system: &PathSystem,
) -> Result<RepairedTour> {
    let pairs = TerminalPairs::new(round_robin_pairs(edge_marks), g.vertex_count())?;
    if let Err(e) = system.check(g, &pairs) {
        return Err(Error::Precondition(format!("not a round-robin linkage for {edge_marks}: {e}")));
    }
    let mut paths = system.paths.clone();
    let mut swaps = 0;
    for (i, &(v, u)) in edge_marks.as_slice().iter().enumerate() {
        if paths[2 * i] == [v, u] {
            continue;
        }
        let old = std::mem::replace(&mut paths[2 * i], vec![v, u]);
        let holder = (0..paths.len()).filter(|&j| j != 2 * i).find_map(|j| edge_position(g, &paths[j], v, u).map(|p| (j, p)));
        if let Some((j, p)) = holder {
            let detour: Vec<VertexId> = if paths[j][p] == v { old } else { old.into_iter().rev().collect() };
            paths[j].splice(p..p + 2, detour);
        }
        swaps += 1;
    }
    let mut walk: Vec<VertexId> = Vec::new();
    for p in &paths {
        if walk.last() == p.first() {
            walk.extend_from_slice(&p[1..]);
        } else {
            walk.extend_from_slice(p);
        }
    }
    // the last path ends back at v_1
    walk.pop();
    let tour = Tour::from_walk(walk);
    if let Err(v) = verify_tour(g, &tour, edge_marks) {
        return Err(Error::Internal(format!("repaired tour fails verification: {v}")));
    }
    Ok(RepairedTour { tour, swaps, system: PathSystem { paths } })
}

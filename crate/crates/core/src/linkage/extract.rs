//! Edge-disjoint paths read off an edge-ordered tour.

use super::{shortcut, PathSystem, TerminalPairs};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, Graph, VertexId};
use crate::oracle::find_ordered_tour;
use crate::witness::{edge_key, EdgeSequence, Tour};

/// Picks distinct edges `x x'` for the terminal occurrences `s_1, t_1, ..., s_k, t_k`
/// with every `x'` outside the terminal set.
fn terminal_edges(g: &Graph, pairs: &TerminalPairs) -> Option<Vec<(VertexId, VertexId)>> {
    let terminals = pairs.vertices();
    let occurrences: Vec<VertexId> = pairs.as_slice().iter().flat_map(|&(s, t)| [s, t]).collect();
    fn pick(
        g: &Graph,
        terminals: &[VertexId],
        occ: &[VertexId],
        chosen: &mut Vec<(VertexId, VertexId)>,
    ) -> bool {
        let Some(&x) = occ.get(chosen.len()) else { return true };
        for &y in g.out_neighbors(x) {
            if terminals.binary_search(&y).is_ok() || chosen.iter().any(|&(a, b)| edge_key(false, a, b) == edge_key(false, x, y)) {
                continue;
            }
            chosen.push((x, y));
            if pick(g, terminals, occ, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(occurrences.len());
    pick(g, &terminals, &occurrences, &mut chosen).then_some(chosen)
}

/// Position in the closed walk where marked edge `e` is traversed, and the
/// index of its endpoint `x` there.
fn occurrence(tour: &Tour, e: (VertexId, VertexId), x: VertexId) -> Option<(usize, usize)> {
    let w = tour.walk();
    let l = w.len();
    let key = edge_key(false, e.0, e.1);
    let i = (0..l).find(|&i| edge_key(false, w[i], w[(i + 1) % l]) == key)?;
    Some((i, if w[i] == x { i } else { i + 1 }))
}

/// Weak linkage for `terminals` through an edge-ordered tour: choose an edge
/// from each terminal occurrence to a non-terminal vertex, find a tour through
/// these `2k` edges in order (exhaustive search with `budget` nodes), and cut
/// it into the `s_i -> t_i` stretches. Needs minimum degree at least `2k`.
///
/// `None` when no suitable edges or no tour exist.
pub fn tour_to_linkage(g: &Graph, terminals: &TerminalPairs, budget: u64) -> Result<Option<PathSystem>> {
    let k = terminals.len();
    let n = g.vertex_count();
    if let Some(&v) = terminals.vertices().iter().find(|&&v| v >= n) {
        return Err(Error::UnknownVertex(v));
    }
    if g.min_degree() < 2 * k {
        return Err(Error::Precondition(format!("minimum degree {} < 2k = {}", g.min_degree(), 2 * k)));
    }
    let Some(edges) = terminal_edges(g, terminals) else { return Ok(None) };
    let marks = EdgeSequence::new(edges.clone(), g)?;
    let Some(mut tour) = find_ordered_tour(g, &marks, budget)?.tour else { return Ok(None) };

    // orient the tour so the marked edges appear forwards
    let forwards = |t: &Tour| {
        let pos: Option<Vec<usize>> = edges.iter().map(|&e| occurrence(t, e, e.0).map(|(i, _)| i)).collect();
        pos.is_some_and(|p| {
            let l = t.len();
            let rel: Vec<usize> = p.iter().map(|&i| (i + l - p[0]) % l).collect();
            rel.windows(2).all(|w| w[0] < w[1])
        })
    };
    if !forwards(&tour) {
        let mut w = tour.walk().to_vec();
        w.reverse();
        tour = Tour::from_walk(w);
        if !forwards(&tour) {
            return Err(Error::Internal("tour does not follow the marked edges".into()));
        }
    }
    let w = tour.walk();
    let l = w.len();
    let (start_edge, _) = occurrence(&tour, edges[0], edges[0].0).expect("marked edge on tour");
    // unroll the closed walk starting at the first marked edge
    let unrolled: Vec<VertexId> = (0..=l).map(|j| w[(start_edge + j) % l]).collect();
    let local = |i: usize| (i + l - start_edge) % l;
    let mut paths = Vec::with_capacity(k);
    for (i, &(s, t)) in terminals.as_slice().iter().enumerate() {
        let (es, xs) = occurrence(&tour, edges[2 * i], s).expect("marked edge on tour");
        let (et, xt) = occurrence(&tour, edges[2 * i + 1], t).expect("marked edge on tour");
        let a = local(es) + (xs != es) as usize;
        let b = local(et) + (xt != et) as usize;
        if a > b {
            return Err(Error::Internal(format!("stretch for pair {i} runs backwards")));
        }
        paths.push(shortcut(&unrolled[a..=b]));
    }
    let system = PathSystem { paths };
    if let Err(e) = system.check(g, terminals) {
        return Err(Error::Internal(format!("extracted system is invalid: {e}")));
    }
    Ok(Some(system))
}

//! Connectivity by brute force over vertex and edge cuts, for cross-checking the flow values.

use crate::error::{Error, Result};
use crate::graph::Adjacency;

/// Largest vertex count accepted by the exhaustive cut checks.
pub const EXHAUSTIVE_CUT_LIMIT: usize = 16;

struct Masks {
    n: usize,
    out: Vec<u32>,
    inn: Vec<u32>,
}

impl Masks {
    fn new<G: Adjacency + ?Sized>(g: &G) -> Result<Self> {
        let n = g.vertex_count();
        if n > EXHAUSTIVE_CUT_LIMIT {
            return Err(Error::TooLarge(format!("exhaustive cuts need n <= {EXHAUSTIVE_CUT_LIMIT}, got {n}")));
        }
        let mask = |vs: &[usize]| vs.iter().fold(0u32, |m, &v| m | (1 << v));
        Ok(Self {
            n,
            out: (0..n).map(|v| mask(g.out_neighbors(v))).collect(),
            inn: (0..n).map(|v| mask(g.in_neighbors(v))).collect(),
        })
    }

    fn reach(&self, start: usize, region: u32, adj: &[u32]) -> u32 {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & region & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    /// `region` induces a strongly connected (connected, when undirected) subgraph.
    fn strongly_connected(&self, region: u32) -> bool {
        if region == 0 {
            return true;
        }
        let s = region.trailing_zeros() as usize;
        self.reach(s, region, &self.out) == region && self.reach(s, region, &self.inn) == region
    }
}

/// Smallest vertex set whose removal leaves at least two vertices that are not
/// (strongly) connected; `n - 1` if there is none.
pub fn exhaustive_vertex_connectivity<G: Adjacency + ?Sized>(g: &G) -> Result<usize> {
    let m = Masks::new(g)?;
    let n = m.n;
    if n < 2 {
        return Ok(0);
    }
    let all = (1u32 << n) - 1;
    let mut best = n - 1;
    for cut in 0..=all {
        let size = cut.count_ones() as usize;
        if size < best && n - size >= 2 && !m.strongly_connected(all & !cut) {
            best = size;
        }
    }
    Ok(best)
}

/// Minimum number of arcs leaving a nonempty proper vertex subset (edges
/// crossing it, when undirected).
pub fn exhaustive_edge_connectivity<G: Adjacency + ?Sized>(g: &G) -> Result<usize> {
    let m = Masks::new(g)?;
    let n = m.n;
    if n < 2 {
        return Ok(0);
    }
    let all = (1u32 << n) - 1;
    let mut best = usize::MAX;
    for s in 1..all {
        let leaving: usize = (0..n).filter(|&v| s >> v & 1 == 1).map(|v| (m.out[v] & !s).count_ones() as usize).sum();
        best = best.min(leaving);
    }
    Ok(best)
}

//! Backtracking search for edge-disjoint path systems.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{PathSystem, TerminalPairs};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, VertexId};
use crate::witness::edge_key;

#[derive(Debug, Clone, Copy)]
pub struct LinkageOptions {
    /// Search-node budget for the whole system.
    pub budget: u64,
    /// Shuffles neighbour order (ChaCha8 with this seed) instead of ascending ids.
    pub seed: Option<u64>,
}

impl Default for LinkageOptions {
    fn default() -> Self {
        Self { budget: crate::oracle::DEFAULT_BUDGET, seed: None }
    }
}

struct Search<'a, G: ?Sized> {
    g: &'a G,
    pairs: &'a [(VertexId, VertexId)],
    order: Vec<Vec<VertexId>>,
    used: HashSet<(VertexId, VertexId)>,
    paths: Vec<Vec<VertexId>>,
    on_path: Vec<bool>,
    nodes: u64,
    budget: u64,
}

impl<G: Adjacency + ?Sized> Search<'_, G> {
    fn key(&self, u: VertexId, v: VertexId) -> (VertexId, VertexId) {
        edge_key(self.g.is_directed(), u, v)
    }

    /// Every remaining pair from `i` on is still connected over unused edges.
    fn feasible(&self, i: usize) -> bool {
        self.pairs[i..].iter().all(|&(s, t)| {
            let mut seen = vec![false; self.g.vertex_count()];
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                if u == t {
                    return true;
                }
                for &w in self.g.out_neighbors(u) {
                    if !seen[w] && !self.used.contains(&self.key(u, w)) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            false
        })
    }

    fn pair(&mut self, i: usize) -> Result<bool> {
        if i == self.pairs.len() {
            return Ok(true);
        }
        if !self.feasible(i) {
            return Ok(false);
        }
        let s = self.pairs[i].0;
        self.paths.push(vec![s]);
        self.on_path[s] = true;
        let found = self.extend(i, s)?;
        self.on_path[s] = false;
        if !found {
            self.paths.pop();
        }
        Ok(found)
    }

    fn extend(&mut self, i: usize, at: VertexId) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceExceeded { budget: self.budget });
        }
        if at == self.pairs[i].1 {
            let path = self.paths[i].clone();
            path.iter().for_each(|&v| self.on_path[v] = false);
            if self.pair(i + 1)? {
                return Ok(true);
            }
            path.iter().for_each(|&v| self.on_path[v] = true);
            return Ok(false);
        }
        for w in self.order[at].clone() {
            let key = self.key(at, w);
            if self.on_path[w] || self.used.contains(&key) {
                continue;
            }
            self.used.insert(key);
            self.on_path[w] = true;
            self.paths[i].push(w);
            if self.extend(i, w)? {
                return Ok(true);
            }
            self.paths[i].pop();
            self.on_path[w] = false;
            self.used.remove(&key);
        }
        Ok(false)
    }
}

/// Searches for pairwise edge-disjoint paths, path `i` from `s_i` to `t_i`.
/// Paths are simple; `None` means no system exists (the search is exhaustive).
pub fn find_edge_disjoint_paths<G: Adjacency + ?Sized>(
    g: &G,
    pairs: &TerminalPairs,
    opts: LinkageOptions,
) -> Result<Option<PathSystem>> {
    let n = g.vertex_count();
    if let Some(&v) = pairs.vertices().iter().find(|&&v| v >= n) {
        return Err(Error::UnknownVertex(v));
    }
    let mut order: Vec<Vec<VertexId>> = (0..n).map(|v| g.out_neighbors(v).to_vec()).collect();
    if let Some(seed) = opts.seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        order.iter_mut().for_each(|o| o.shuffle(&mut rng));
    }
    let mut search = Search {
        g,
        pairs: pairs.as_slice(),
        order,
        used: HashSet::new(),
        paths: Vec::new(),
        on_path: vec![false; n],
        nodes: 0,
        budget: opts.budget,
    };
    if search.pair(0)? {
        let system = PathSystem { paths: search.paths };
        if let Err(e) = system.check(g, pairs) {
            return Err(Error::Internal(format!("path search produced an invalid system: {e}")));
        }
        Ok(Some(system))
    } else {
        Ok(None)
    }
}

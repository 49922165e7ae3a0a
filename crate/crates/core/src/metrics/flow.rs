//! Unit-capacity maximum flow with breadth-first augmentation.

use std::collections::VecDeque;

use crate::graph::{Adjacency, VertexId};

#[derive(Debug, Clone)]
pub(crate) struct FlowNet {
    to: Vec<usize>,
    cap: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl FlowNet {
    pub fn new(n: usize) -> Self {
        Self { to: Vec::new(), cap: Vec::new(), out: vec![Vec::new(); n] }
    }

    /// Adds arc `u -> v` with capacity `c` and its residual twin.
    pub fn add(&mut self, u: usize, v: usize, c: u32) {
        self.out[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.out[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    /// Maximum `s`-`t` flow, stopping early once it reaches `limit`.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit {
            let mut via: Vec<Option<usize>> = vec![None; self.out.len()];
            let mut seen = vec![false; self.out.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &a in &self.out[u] {
                    let w = self.to[a];
                    if self.cap[a] > 0 && !seen[w] {
                        seen[w] = true;
                        via[w] = Some(a);
                        queue.push_back(w);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut v = t;
            while let Some(a) = via[v] {
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Number of arc-disjoint (edge-disjoint when undirected) `s`-`t` paths, capped at `limit`.
pub(crate) fn local_edge_connectivity<G: Adjacency + ?Sized>(g: &G, s: VertexId, t: VertexId, limit: u32) -> u32 {
    let mut net = FlowNet::new(g.vertex_count());
    for u in 0..g.vertex_count() {
        for &v in g.out_neighbors(u) {
            // undirected edges appear once from each side, giving both orientations
            net.add(u, v, 1);
        }
    }
    net.max_flow(s, t, limit)
}

/// Number of internally vertex-disjoint `s`-`t` paths for `s -> t` not an arc, capped at `limit`.
pub(crate) fn local_vertex_connectivity<G: Adjacency + ?Sized>(g: &G, s: VertexId, t: VertexId, limit: u32) -> u32 {
    let n = g.vertex_count();
    // vertex v splits into v (in) and n + v (out)
    let mut net = FlowNet::new(2 * n);
    let big = n as u32 + 1;
    for v in 0..n {
        net.add(v, n + v, if v == s || v == t { big } else { 1 });
        for &w in g.out_neighbors(v) {
            net.add(n + v, w, big);
        }
    }
    net.max_flow(n + s, t, limit)
}

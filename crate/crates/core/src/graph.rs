//! Simple finite graphs and digraphs over dense vertex ids `0..n`.
//!
//! Both types are immutable once built. Neighbor lists are kept sorted so every
//! traversal in the crate visits vertices in ascending id order, which is what
//! makes searches and constructions deterministic.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Read access shared by [`Graph`] and [`Digraph`].
///
/// For undirected graphs `out_neighbors` and `in_neighbors` coincide.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn is_directed(&self) -> bool;
    fn out_neighbors(&self, v: VertexId) -> &[VertexId];
    fn in_neighbors(&self, v: VertexId) -> &[VertexId];

    fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.out_neighbors(u).binary_search(&v).is_ok()
    }

    /// Edge list: unordered pairs `(u, v)` with `u < v` for graphs, arcs for digraphs.
    fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count() {
            for &v in self.out_neighbors(u) {
                if self.is_directed() || u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn edge_count(&self) -> usize {
        let total: usize = (0..self.vertex_count()).map(|v| self.out_neighbors(v).len()).sum();
        if self.is_directed() {
            total
        } else {
            total / 2
        }
    }

    /// Breadth-first distances from `source` along out-arcs; `None` for unreachable vertices.
    fn bfs_distances(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in self.out_neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

fn build_lists(n: usize, arcs: impl IntoIterator<Item = (VertexId, VertexId)>, symmetric: bool)
    -> Result<(Vec<Vec<VertexId>>, Vec<Vec<VertexId>>)>
{
    let mut out = vec![Vec::new(); n];
    let mut inn = vec![Vec::new(); n];
    for (u, v) in arcs {
        if u >= n {
            return Err(Error::UnknownVertex(u));
        }
        if v >= n {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
        }
        out[u].push(v);
        inn[v].push(u);
        if symmetric {
            out[v].push(u);
            inn[u].push(v);
        }
    }
    for (v, list) in out.iter_mut().enumerate() {
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("repeated edge at vertex {v}")));
        }
    }
    for list in &mut inn {
        list.sort_unstable();
    }
    Ok((out, inn))
}

/// Simple undirected graph: symmetric adjacency, no loops, no multi-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let (adj, _) = build_lists(n, edges, true)?;
        Ok(Self { adj })
    }

    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Two-colouring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.adj.len();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap_or(false);
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// Apply a vertex relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self> {
        check_permutation(perm, self.adj.len())?;
        Self::new(self.adj.len(), self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl Adjacency for Graph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }
    fn is_directed(&self) -> bool {
        false
    }
    fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }
    fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }
}

/// Simple digraph: no loops, at most one arc per ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<VertexId>>,
    inn: Vec<Vec<VertexId>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let (out, inn) = build_lists(n, arcs, false)?;
        Ok(Self { out, inn })
    }

    pub fn complete(n: usize) -> Self {
        let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)));
        Self::new(n, arcs).expect("complete digraph is simple")
    }

    pub fn directed_cycle(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!("directed cycle needs at least 2 vertices, got {n}")));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.inn[v].len()
    }

    pub fn min_out_degree(&self) -> usize {
        self.out.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn min_in_degree(&self) -> usize {
        self.inn.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self> {
        check_permutation(perm, self.out.len())?;
        Self::new(self.out.len(), self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl Adjacency for Digraph {
    fn vertex_count(&self) -> usize {
        self.out.len()
    }
    fn is_directed(&self) -> bool {
        true
    }
    fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out[v]
    }
    fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.inn[v]
    }
}

fn check_permutation(perm: &[VertexId], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::InvalidParams(format!("permutation has length {}, expected {n}", perm.len())));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidParams("relabeling is not a permutation".into()));
        }
    }
    Ok(())
}

/// Either kind of graph, for code paths (I/O, CLI) that accept both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(Graph),
    Directed(Digraph),
}

impl AnyGraph {
    pub fn as_dyn(&self) -> &dyn Adjacency {
        match self {
            AnyGraph::Undirected(g) => g,
            AnyGraph::Directed(d) => d,
        }
    }
}

impl From<Graph> for AnyGraph {
    fn from(g: Graph) -> Self {
        AnyGraph::Undirected(g)
    }
}

impl From<Digraph> for AnyGraph {
    fn from(d: Digraph) -> Self {
        AnyGraph::Directed(d)
    }
}

impl<T: Adjacency + ?Sized> Adjacency for &T {
    fn vertex_count(&self) -> usize {
        (**self).vertex_count()
    }
    fn is_directed(&self) -> bool {
        (**self).is_directed()
    }
    fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        (**self).out_neighbors(v)
    }
    fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        (**self).in_neighbors(v)
    }
}

//! Bracelet graphs: vertices split into `m >= 3` cyclically arranged parts,
//! with every vertex of a part joined to every vertex of the two neighbouring
//! parts and to nothing else. The directed variant only has arcs from part `i`
//! to part `i + 1 (mod m)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Adjacency, Digraph, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraceletSpec {
    part_sizes: Vec<usize>,
}

impl BraceletSpec {
    pub fn new(part_sizes: Vec<usize>) -> Result<Self> {
        if part_sizes.len() < 3 {
            return Err(Error::InvalidSpec(format!(
                "a bracelet needs at least 3 parts, got {}",
                part_sizes.len()
            )));
        }
        if let Some(i) = part_sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidSpec(format!("part {i} is empty")));
        }
        Ok(Self { part_sizes })
    }

    pub fn uniform(size: usize, parts: usize) -> Result<Self> {
        Self::new(vec![size; parts])
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn part_count(&self) -> usize {
        self.part_sizes.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.part_sizes.iter().sum()
    }

    /// Degree of every vertex in part `i` of the undirected bracelet.
    pub fn part_degree(&self, i: usize) -> usize {
        let m = self.part_count();
        self.part_sizes[(i + m - 1) % m] + self.part_sizes[(i + 1) % m]
    }

    pub fn min_degree(&self) -> usize {
        (0..self.part_count()).map(|i| self.part_degree(i)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.part_count()).map(|i| self.part_degree(i)).max().unwrap_or(0)
    }

    /// Smallest representative of this spec under rotations and reflections of the parts.
    pub fn dihedral_canonical(&self) -> Vec<usize> {
        let m = self.part_count();
        let s = &self.part_sizes;
        let mut best: Option<Vec<usize>> = None;
        for start in 0..m {
            for reflect in [false, true] {
                let cand: Vec<usize> = (0..m)
                    .map(|j| if reflect { s[(start + m - j) % m] } else { s[(start + j) % m] })
                    .collect();
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        best.unwrap_or_default()
    }
}

/// A bracelet graph together with its part structure.
///
/// Vertices `0..n` are assigned to parts in spec order: part 0 holds
/// `0..sizes[0]`, part 1 the next `sizes[1]` ids, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracelet<G> {
    spec: BraceletSpec,
    parts: Vec<Vec<VertexId>>,
    part_of: Vec<usize>,
    graph: G,
}

pub type BraceletGraph = Bracelet<Graph>;
pub type DirectedBracelet = Bracelet<Digraph>;

impl<G> Bracelet<G> {
    pub fn spec(&self) -> &BraceletSpec {
        &self.spec
    }
    pub fn graph(&self) -> &G {
        &self.graph
    }
    pub fn parts(&self) -> &[Vec<VertexId>] {
        &self.parts
    }
    pub fn part(&self, i: usize) -> &[VertexId] {
        &self.parts[i]
    }
    pub fn part_of(&self, v: VertexId) -> usize {
        self.part_of[v]
    }
    /// Part index of every vertex.
    pub fn part_map(&self) -> &[usize] {
        &self.part_of
    }
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }
    pub fn vertex_count(&self) -> usize {
        self.part_of.len()
    }
    pub fn into_graph(self) -> G {
        self.graph
    }

    /// Part index `i + step (mod m)`, for signed steps.
    pub fn part_offset(&self, i: usize, step: isize) -> usize {
        let m = self.parts.len() as isize;
        (((i as isize + step) % m + m) % m) as usize
    }

    /// Cyclic distance between two parts (the shorter way round).
    pub fn part_distance(&self, i: usize, j: usize) -> usize {
        let m = self.parts.len();
        let d = (i + m - j) % m;
        d.min(m - d)
    }

    pub fn parts_adjacent(&self, i: usize, j: usize) -> bool {
        self.part_distance(i, j) == 1
    }
}

fn partition(spec: &BraceletSpec) -> (Vec<Vec<VertexId>>, Vec<usize>) {
    let mut parts = Vec::with_capacity(spec.part_count());
    let mut part_of = Vec::with_capacity(spec.vertex_count());
    let mut next = 0;
    for (i, &size) in spec.part_sizes().iter().enumerate() {
        parts.push((next..next + size).collect());
        part_of.extend(std::iter::repeat_n(i, size));
        next += size;
    }
    (parts, part_of)
}

/// Undirected bracelet: `u ~ v` iff their part indices differ by ±1 mod m.
pub fn build_bracelet(spec: &BraceletSpec) -> BraceletGraph {
    let (parts, part_of) = partition(spec);
    let m = parts.len();
    let mut edges = Vec::new();
    for i in 0..m {
        let j = (i + 1) % m;
        // with three parts, i+1 and i-1 are distinct, so each pair of parts is visited once
        for &u in &parts[i] {
            for &v in &parts[j] {
                edges.push((u, v));
            }
        }
    }
    let graph = Graph::new(spec.vertex_count(), edges).expect("bracelet edges are simple");
    Bracelet { spec: spec.clone(), parts, part_of, graph }
}

/// Directed bracelet: arcs only from part `i` to part `i + 1 (mod m)`.
pub fn build_directed_bracelet(spec: &BraceletSpec) -> DirectedBracelet {
    let (parts, part_of) = partition(spec);
    let m = parts.len();
    let mut arcs = Vec::new();
    for i in 0..m {
        for &u in &parts[i] {
            for &v in &parts[(i + 1) % m] {
                arcs.push((u, v));
            }
        }
    }
    let graph = Digraph::new(spec.vertex_count(), arcs).expect("bracelet arcs are simple");
    Bracelet { spec: spec.clone(), parts, part_of, graph }
}

/// Bracelet of either orientation, as produced by [`build_any_bracelet`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyBracelet {
    Undirected(BraceletGraph),
    Directed(DirectedBracelet),
}

impl AnyBracelet {
    pub fn spec(&self) -> &BraceletSpec {
        match self {
            AnyBracelet::Undirected(b) => b.spec(),
            AnyBracelet::Directed(b) => b.spec(),
        }
    }
    pub fn is_directed(&self) -> bool {
        matches!(self, AnyBracelet::Directed(_))
    }
}

pub fn build_any_bracelet(spec: &BraceletSpec, directed: bool) -> AnyBracelet {
    if directed {
        AnyBracelet::Directed(build_directed_bracelet(spec))
    } else {
        AnyBracelet::Undirected(build_bracelet(spec))
    }
}

impl<G: Adjacency> Bracelet<G> {
    /// Checks the structural invariants against the stored graph.
    pub fn check_invariants(&self) -> Result<()> {
        let m = self.parts.len();
        let n = self.graph.vertex_count();
        let mut seen = vec![false; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if v >= n || seen[v] || self.part_of[v] != i {
                    return Err(Error::InvalidGraph(format!("part {i} does not partition vertex {v}")));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidGraph("parts do not cover every vertex".into()));
        }
        for u in 0..n {
            for v in 0..n {
                let (pu, pv) = (self.part_of[u], self.part_of[v]);
                let expected = if self.graph.is_directed() {
                    pv == (pu + 1) % m
                } else {
                    u != v && self.part_distance(pu, pv) == 1
                };
                if self.graph.has_edge(u, v) != expected {
                    return Err(Error::InvalidGraph(format!("adjacency of ({u}, {v}) breaks the part rule")));
                }
            }
        }
        Ok(())
    }
}

//! Mark sequences, witness objects and their independent checkers.
//!
//! Every constructor and oracle in the crate hands back an [`OrderedCycle`] or a
//! [`Tour`]; callers are expected to re-check them with [`verify_ordered_cycle`]
//! and [`verify_tour`], which trust nothing stored inside the witness.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Adjacency, VertexId};

/// Ordered sequence of distinct vertices a cycle must visit in (cyclic) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkSequence(Vec<VertexId>);

impl MarkSequence {
    pub fn new(vertices: Vec<VertexId>, n: usize) -> Result<Self> {
        let mut seen = HashSet::new();
        for &v in &vertices {
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidMarks(format!("vertex {v} marked twice")));
            }
        }
        Ok(Self(vertices))
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The same cyclic order started at position `start`.
    pub fn rotated(&self, start: usize) -> Self {
        let k = self.0.len();
        Self((0..k).map(|i| self.0[(start + i) % k]).collect())
    }
}

impl fmt::Display for MarkSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Normalised key for an edge: sorted pair for undirected graphs.
pub fn edge_key(directed: bool, u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if directed || u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Ordered sequence of distinct edges a tour must traverse in order.
///
/// For undirected graphs an edge `(u, v)` may be traversed either way.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeSequence(Vec<(VertexId, VertexId)>);

impl EdgeSequence {
    pub fn new<G: Adjacency + ?Sized>(edges: Vec<(VertexId, VertexId)>, g: &G) -> Result<Self> {
        let mut seen = HashSet::new();
        for &(u, v) in &edges {
            if u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v) {
                return Err(Error::InvalidMarks(format!("({u}, {v}) is not an edge")));
            }
            if !seen.insert(edge_key(g.is_directed(), u, v)) {
                return Err(Error::InvalidMarks(format!("edge ({u}, {v}) marked twice")));
            }
        }
        Ok(Self(edges))
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
}

impl fmt::Display for EdgeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A simple cycle, listed in traversal order, together with the cycle
/// positions of the marks it was built for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedCycle {
    vertices: Vec<VertexId>,
    marked_positions: Vec<usize>,
}

impl OrderedCycle {
    /// Records the positions of `marks` in `vertices`; fails if a mark is absent.
    pub fn new(vertices: Vec<VertexId>, marks: &MarkSequence) -> Result<Self> {
        let mut marked_positions = Vec::with_capacity(marks.len());
        for &m in marks.as_slice() {
            let pos = vertices
                .iter()
                .position(|&v| v == m)
                .ok_or_else(|| Error::InvalidMarks(format!("mark {m} is not on the cycle")))?;
            marked_positions.push(pos);
        }
        Ok(Self { vertices, marked_positions })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn marked_positions(&self) -> &[usize] {
        &self.marked_positions
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.vertices
    }

    /// Consecutive vertex pairs including the closing one.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let l = self.vertices.len();
        (0..l).map(move |i| (self.vertices[i], self.vertices[(i + 1) % l]))
    }
}

impl fmt::Display for OrderedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Why a cycle failed verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleViolation {
    TooShort { len: usize },
    UnknownVertex(VertexId),
    RepeatedVertex(VertexId),
    MissingEdge(VertexId, VertexId),
    MarkNotOnCycle(VertexId),
    OrderViolated,
    NotHamiltonian { covered: usize, n: usize },
}

impl fmt::Display for CycleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleViolation::TooShort { len } => write!(f, "too_short len={len}"),
            CycleViolation::UnknownVertex(v) => write!(f, "unknown_vertex {v}"),
            CycleViolation::RepeatedVertex(v) => write!(f, "repeated_vertex {v}"),
            CycleViolation::MissingEdge(u, v) => write!(f, "missing_edge {u}->{v}"),
            CycleViolation::MarkNotOnCycle(v) => write!(f, "mark_not_on_cycle {v}"),
            CycleViolation::OrderViolated => write!(f, "order_violated"),
            CycleViolation::NotHamiltonian { covered, n } => write!(f, "not_hamiltonian {covered}/{n}"),
        }
    }
}

/// `true` iff `positions`, read from the first one, increase cyclically mod `len`.
fn cyclically_increasing(positions: &[usize], len: usize, backwards: bool) -> bool {
    let Some(&first) = positions.first() else { return true };
    let offsets = positions.iter().map(|&p| {
        if backwards {
            (first + len - p) % len
        } else {
            (p + len - first) % len
        }
    });
    let mut last = None;
    for o in offsets {
        if last.is_some_and(|l| o <= l) {
            return false;
        }
        last = Some(o);
    }
    true
}

/// Independent checker for ordered cycles.
///
/// The cycle must be simple with at least three vertices, every consecutive
/// pair (including last to first) must be an edge, or an arc in traversal
/// direction for digraphs, and the marks must appear in cyclic order. For
/// undirected graphs the reverse traversal direction is also accepted.
pub fn verify_ordered_cycle<G: Adjacency + ?Sized>(
    g: &G,
    cycle: &OrderedCycle,
    marks: &MarkSequence,
    require_hamiltonian: bool,
) -> Result<(), CycleViolation> {
    let vs = cycle.vertices();
    let n = g.vertex_count();
    if vs.len() < 3 {
        return Err(CycleViolation::TooShort { len: vs.len() });
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in vs.iter().enumerate() {
        if v >= n {
            return Err(CycleViolation::UnknownVertex(v));
        }
        if position[v] != usize::MAX {
            return Err(CycleViolation::RepeatedVertex(v));
        }
        position[v] = i;
    }
    for (u, v) in cycle.edges() {
        if !g.has_edge(u, v) {
            return Err(CycleViolation::MissingEdge(u, v));
        }
    }
    let mut mark_positions = Vec::with_capacity(marks.len());
    for &m in marks.as_slice() {
        if m >= n || position[m] == usize::MAX {
            return Err(CycleViolation::MarkNotOnCycle(m));
        }
        mark_positions.push(position[m]);
    }
    let forward = cyclically_increasing(&mark_positions, vs.len(), false);
    let backward = !g.is_directed() && cyclically_increasing(&mark_positions, vs.len(), true);
    if !forward && !backward {
        return Err(CycleViolation::OrderViolated);
    }
    if require_hamiltonian && vs.len() != n {
        return Err(CycleViolation::NotHamiltonian { covered: vs.len(), n });
    }
    Ok(())
}

/// Closed walk with no repeated edge, stored as its vertex sequence: the walk
/// uses edges `(w[i], w[i + 1])` and closes with `(w[last], w[0])`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tour {
    walk: Vec<VertexId>,
}

impl Tour {
    pub fn from_walk(walk: Vec<VertexId>) -> Self {
        Self { walk }
    }

    pub fn walk(&self) -> &[VertexId] {
        &self.walk
    }

    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let l = self.walk.len();
        (0..l).map(move |i| (self.walk[i], self.walk[(i + 1) % l]))
    }
}

impl fmt::Display for Tour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.walk.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TourViolation {
    TooShort { len: usize },
    UnknownVertex(VertexId),
    MissingEdge(VertexId, VertexId),
    RepeatedEdge(VertexId, VertexId),
    MarkNotOnTour(VertexId, VertexId),
    OrderViolated,
}

impl fmt::Display for TourViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TourViolation::TooShort { len } => write!(f, "too_short len={len}"),
            TourViolation::UnknownVertex(v) => write!(f, "unknown_vertex {v}"),
            TourViolation::MissingEdge(u, v) => write!(f, "missing_edge {u}->{v}"),
            TourViolation::RepeatedEdge(u, v) => write!(f, "repeated_edge {u}-{v}"),
            TourViolation::MarkNotOnTour(u, v) => write!(f, "mark_not_on_tour {u}-{v}"),
            TourViolation::OrderViolated => write!(f, "order_violated"),
        }
    }
}

/// Independent checker for edge-ordered tours.
pub fn verify_tour<G: Adjacency + ?Sized>(
    g: &G,
    tour: &Tour,
    edge_marks: &EdgeSequence,
) -> Result<(), TourViolation> {
    let directed = g.is_directed();
    let w = tour.walk();
    if w.len() < 2 {
        return Err(TourViolation::TooShort { len: w.len() });
    }
    if let Some(&v) = w.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(TourViolation::UnknownVertex(v));
    }
    let mut index_of = std::collections::HashMap::new();
    for (i, (u, v)) in tour.edges().enumerate() {
        if !g.has_edge(u, v) {
            return Err(TourViolation::MissingEdge(u, v));
        }
        if index_of.insert(edge_key(directed, u, v), i).is_some() {
            return Err(TourViolation::RepeatedEdge(u, v));
        }
    }
    let mut positions = Vec::with_capacity(edge_marks.len());
    for &(u, v) in edge_marks.as_slice() {
        match index_of.get(&edge_key(directed, u, v)) {
            Some(&i) => positions.push(i),
            None => return Err(TourViolation::MarkNotOnTour(u, v)),
        }
    }
    let forward = cyclically_increasing(&positions, w.len(), false);
    let backward = !directed && cyclically_increasing(&positions, w.len(), true);
    if forward || backward {
        Ok(())
    } else {
        Err(TourViolation::OrderViolated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Digraph, Graph};

    fn marks(v: &[usize], n: usize) -> MarkSequence {
        MarkSequence::new(v.to_vec(), n).unwrap()
    }

    #[test]
    fn c4_cycle_order() {
        let g = Graph::cycle(4).unwrap();
        let c = OrderedCycle::new(vec![0, 1, 2, 3], &marks(&[0, 1, 2], 4)).unwrap();
        assert_eq!(verify_ordered_cycle(&g, &c, &marks(&[0, 1, 2], 4), true), Ok(()));
        // three marks on an undirected cycle always fit one of the two directions
        assert_eq!(verify_ordered_cycle(&g, &c, &marks(&[0, 2, 1], 4), false), Ok(()));
        // 0,2,1,3 is neither forward nor backward along 0-1-2-3
        assert_eq!(
            verify_ordered_cycle(&g, &c, &marks(&[0, 2, 1, 3], 4), false),
            Err(CycleViolation::OrderViolated)
        );
        // reflection accepted for undirected graphs
        assert_eq!(verify_ordered_cycle(&g, &c, &marks(&[2, 1, 0], 4), true), Ok(()));
    }

    #[test]
    fn directed_cycles_have_one_direction() {
        let d = Digraph::directed_cycle(4).unwrap();
        let c = OrderedCycle::new(vec![0, 1, 2, 3], &marks(&[0, 1], 4)).unwrap();
        assert_eq!(verify_ordered_cycle(&d, &c, &marks(&[0, 1, 2], 4), true), Ok(()));
        assert_eq!(
            verify_ordered_cycle(&d, &c, &marks(&[2, 1, 0], 4), true),
            Err(CycleViolation::OrderViolated)
        );
        let rev = OrderedCycle::new(vec![3, 2, 1, 0], &marks(&[0], 4)).unwrap();
        assert_eq!(
            verify_ordered_cycle(&d, &rev, &marks(&[0], 4), false),
            Err(CycleViolation::MissingEdge(3, 2))
        );
    }

    #[test]
    fn structural_violations() {
        let g = Graph::complete(4);
        let m = marks(&[0], 4);
        let short = OrderedCycle::new(vec![0, 1], &m).unwrap();
        assert_eq!(verify_ordered_cycle(&g, &short, &m, false), Err(CycleViolation::TooShort { len: 2 }));
        let rep = OrderedCycle::new(vec![0, 1, 0, 2], &m).unwrap();
        assert_eq!(verify_ordered_cycle(&g, &rep, &m, false), Err(CycleViolation::RepeatedVertex(0)));
        let tri = OrderedCycle::new(vec![0, 1, 2], &m).unwrap();
        assert_eq!(
            verify_ordered_cycle(&g, &tri, &m, true),
            Err(CycleViolation::NotHamiltonian { covered: 3, n: 4 })
        );
        assert_eq!(
            verify_ordered_cycle(&g, &tri, &marks(&[3], 4), false),
            Err(CycleViolation::MarkNotOnCycle(3))
        );
    }

    #[test]
    fn tours_on_c4() {
        let g = Graph::cycle(4).unwrap();
        let em = EdgeSequence::new(vec![(0, 1), (1, 2)], &g).unwrap();
        let t = Tour::from_walk(vec![0, 1, 2, 3]);
        assert_eq!(verify_tour(&g, &t, &em), Ok(()));
        // marked edges may be listed against the traversal orientation
        let em_rev = EdgeSequence::new(vec![(2, 1), (1, 0)], &g).unwrap();
        assert_eq!(verify_tour(&g, &t, &em_rev), Ok(()));
        let repeat = Tour::from_walk(vec![0, 1, 2, 1]);
        assert_eq!(verify_tour(&g, &repeat, &em), Err(TourViolation::RepeatedEdge(2, 1)));
    }

    #[test]
    fn edge_sequence_validation() {
        let g = Graph::cycle(4).unwrap();
        assert!(EdgeSequence::new(vec![(0, 2)], &g).is_err());
        assert!(EdgeSequence::new(vec![(0, 1), (1, 0)], &g).is_err());
        let d = Digraph::complete(3);
        assert!(EdgeSequence::new(vec![(0, 1), (1, 0)], &d).is_ok());
    }
}

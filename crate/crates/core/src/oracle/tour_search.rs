//! Backtracking search for a closed trail through marked edges in a given order.

use crate::error::{Error, Result};
use crate::graph::{Adjacency, VertexId};
use crate::witness::{edge_key, EdgeSequence, Tour};

#[derive(Debug, Clone)]
pub struct TourSearch {
    pub tour: Option<Tour>,
    pub nodes: u64,
}

/// Edge numbering with `u128` usage masks; limits tour searches to 128 edges.
pub(crate) struct EdgeIndex {
    n: usize,
    directed: bool,
    /// Keyed by `edge_key`.
    ids: std::collections::HashMap<(VertexId, VertexId), usize>,
    /// For each vertex, the edges that can be traversed out of it, with the far end.
    leave: Vec<Vec<(usize, VertexId)>>,
}

impl EdgeIndex {
    pub fn new<G: Adjacency + ?Sized>(g: &G) -> Result<Self> {
        let edges = g.edges();
        if edges.len() > 128 {
            return Err(Error::TooLarge(format!("{} edges (limit 128)", edges.len())));
        }
        let n = g.vertex_count();
        let directed = g.is_directed();
        let mut ids = std::collections::HashMap::new();
        let mut leave = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            ids.insert(edge_key(directed, u, v), i);
            leave[u].push((i, v));
            if !directed {
                leave[v].push((i, u));
            }
        }
        for l in &mut leave {
            l.sort_by_key(|&(_, w)| w);
        }
        Ok(Self { n, directed, ids, leave })
    }

    fn id(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.ids.get(&edge_key(self.directed, u, v)).copied()
    }
}

enum Flow {
    Found,
    Dead,
    Exhausted,
}

struct Searcher<'a> {
    idx: &'a EdgeIndex,
    /// Marked edges as traversable orientations.
    marks: Vec<(usize, VertexId, VertexId)>,
    marked: u128,
    start: VertexId,
    budget: u64,
    nodes: u64,
    used: u128,
    walk: Vec<VertexId>,
    seen: Vec<bool>,
    queue: Vec<VertexId>,
}

impl Searcher<'_> {
    /// Vertices reachable from `from` over unused edges outside `forbidden`.
    fn reach(&mut self, from: VertexId, forbidden: u128) {
        self.seen.iter_mut().for_each(|s| *s = false);
        self.queue.clear();
        self.seen[from] = true;
        self.queue.push(from);
        while let Some(u) = self.queue.pop() {
            for &(e, w) in &self.idx.leave[u] {
                if (self.used | forbidden) & (1 << e) == 0 && !self.seen[w] {
                    self.seen[w] = true;
                    self.queue.push(w);
                }
            }
        }
    }

    fn mark_ends(&self, j: usize) -> [Option<VertexId>; 2] {
        let (_, a, b) = self.marks[j];
        [Some(a), (!self.idx.directed).then_some(b)]
    }

    fn feasible(&mut self, cur: VertexId, j: usize) -> bool {
        let k = self.marks.len();
        // next target through free edges only
        self.reach(cur, self.marked);
        let next_ok = if j == k {
            self.seen[self.start]
        } else {
            self.mark_ends(j).into_iter().flatten().any(|v| self.seen[v])
        };
        if !next_ok {
            return false;
        }
        // relaxed: every later mark and the start stay reachable over unused edges
        self.reach(cur, 0);
        if !self.seen[self.start] {
            return false;
        }
        (j..k).all(|i| self.mark_ends(i).into_iter().flatten().any(|v| self.seen[v]))
    }

    fn extend(&mut self, cur: VertexId, j: usize) -> Flow {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Flow::Exhausted;
        }
        let k = self.marks.len();
        if j == k && cur == self.start {
            return Flow::Found;
        }
        if !self.feasible(cur, j) {
            return Flow::Dead;
        }
        if j < k {
            let (e, a, b) = self.marks[j];
            let mut ends = vec![(a, b)];
            if !self.idx.directed {
                ends.push((b, a));
            }
            for (from, to) in ends {
                if from == cur {
                    if let Some(flow) = self.step(e, to, j + 1) {
                        return flow;
                    }
                }
            }
        }
        let leave = self.idx.leave[cur].clone();
        for (e, w) in leave {
            if (self.used | self.marked) & (1 << e) == 0 {
                if let Some(flow) = self.step(e, w, j) {
                    return flow;
                }
            }
        }
        Flow::Dead
    }

    fn step(&mut self, e: usize, w: VertexId, j: usize) -> Option<Flow> {
        self.used |= 1 << e;
        self.walk.push(w);
        match self.extend(w, j) {
            Flow::Dead => {
                self.walk.pop();
                self.used &= !(1 << e);
                None
            }
            other => Some(other),
        }
    }
}

pub(crate) fn search_with_index(idx: &EdgeIndex, edge_marks: &EdgeSequence, budget: u64) -> Result<TourSearch> {
    let mut marks = Vec::with_capacity(edge_marks.len());
    for &(u, v) in edge_marks.as_slice() {
        let e = idx.id(u, v).ok_or_else(|| Error::InvalidMarks(format!("edge {u}-{v} not in graph")))?;
        marks.push((e, u, v));
    }
    let Some(&(e0, a, b)) = marks.first() else {
        return Err(Error::InvalidMarks("need at least one marked edge".into()));
    };
    let marked = marks.iter().fold(0u128, |m, &(e, _, _)| m | (1 << e));
    let mut orientations = vec![(a, b)];
    if !idx.directed {
        orientations.push((b, a));
    }
    let mut nodes = 0;
    for (s, t) in orientations {
        let mut searcher = Searcher {
            idx,
            marks: marks.clone(),
            marked,
            start: s,
            budget: budget.saturating_sub(nodes),
            nodes: 0,
            used: 1 << e0,
            walk: vec![s, t],
            seen: vec![false; idx.n],
            queue: Vec::new(),
        };
        let flow = searcher.extend(t, 1);
        nodes += searcher.nodes;
        match flow {
            Flow::Found => {
                let mut walk = searcher.walk;
                walk.pop();
                return Ok(TourSearch { tour: Some(Tour::from_walk(walk)), nodes });
            }
            Flow::Dead => {}
            Flow::Exhausted => return Err(Error::ResourceExceeded { budget }),
        }
    }
    Ok(TourSearch { tour: None, nodes })
}

/// Exhaustive search for a tour traversing `edge_marks` in order.
///
/// A `None` tour is certified absence; an exhausted budget is an error.
pub fn find_ordered_tour<G: Adjacency + ?Sized>(g: &G, edge_marks: &EdgeSequence, budget: u64) -> Result<TourSearch> {
    let idx = EdgeIndex::new(g)?;
    search_with_index(&idx, edge_marks, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Digraph, Graph};
    use crate::witness::verify_tour;

    const BUDGET: u64 = 1_000_000;

    #[test]
    fn c4_adjacent_edges() {
        let g = Graph::cycle(4).unwrap();
        let m = EdgeSequence::new(vec![(0, 1), (1, 2)], &g).unwrap();
        let t = find_ordered_tour(&g, &m, BUDGET).unwrap().tour.unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(verify_tour(&g, &t, &m), Ok(()));
    }

    #[test]
    fn trees_have_no_tours() {
        let tree = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let m = EdgeSequence::new(vec![(0, 1), (1, 2)], &tree).unwrap();
        assert!(find_ordered_tour(&tree, &m, BUDGET).unwrap().tour.is_none());
    }

    #[test]
    fn complete_digraph_two_arcs() {
        let d = Digraph::complete(4);
        let m = EdgeSequence::new(vec![(0, 1), (2, 3)], &d).unwrap();
        let t = find_ordered_tour(&d, &m, BUDGET).unwrap().tour.unwrap();
        assert_eq!(verify_tour(&d, &t, &m), Ok(()));
    }

    #[test]
    fn digon_tour_allowed_in_digraphs() {
        let d = Digraph::complete(2);
        let m = EdgeSequence::new(vec![(0, 1)], &d).unwrap();
        let t = find_ordered_tour(&d, &m, BUDGET).unwrap().tour.unwrap();
        assert_eq!(t.walk(), &[0, 1]);
    }

    #[test]
    fn undirected_marks_either_direction() {
        // bowtie: two triangles sharing vertex 2
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let m = EdgeSequence::new(vec![(1, 0), (3, 4), (2, 1)], &g).unwrap();
        let t = find_ordered_tour(&g, &m, BUDGET).unwrap().tour.unwrap();
        assert_eq!(verify_tour(&g, &t, &m), Ok(()));
    }
}

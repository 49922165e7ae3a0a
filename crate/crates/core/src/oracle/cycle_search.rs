//! Backtracking search for a cycle through marked vertices in a given order.
//!
//! The cycle is grown as consecutive internally disjoint segments
//! `v_1 -> v_2 -> ... -> v_k -> v_1`. Marks other than the current target are
//! never entered early. For undirected graphs this already covers reflections:
//! a cycle meeting the marks in reverse order is found traversed the other way.

use super::mask::{bits, MaskGraph};
use crate::error::{Error, Result};
use crate::graph::{Adjacency, VertexId};
use crate::witness::{MarkSequence, OrderedCycle};

#[derive(Debug, Clone)]
pub struct CycleSearch {
    pub cycle: Option<OrderedCycle>,
    pub nodes: u64,
}

enum Flow {
    Found,
    Dead,
    Exhausted,
}

struct Searcher<'a> {
    g: &'a MaskGraph,
    marks: &'a [VertexId],
    mark_mask: u64,
    hamiltonian: bool,
    budget: u64,
    nodes: u64,
    path: Vec<VertexId>,
    visited: u64,
}

impl Searcher<'_> {
    fn target(&self, seg: usize) -> VertexId {
        self.marks[seg % self.marks.len()]
    }

    /// Marks still to be entered after the current target.
    fn later_marks(&self, seg: usize) -> u64 {
        self.marks[seg.min(self.marks.len())..]
            .iter()
            .fold(0, |m, &v| m | (1 << v))
    }

    fn feasible(&self, cur: VertexId, seg: usize) -> bool {
        let g = self.g;
        let cur_bit = 1u64 << cur;
        let start_bit = 1u64 << self.marks[0];
        let unvisited = g.full() & !self.visited;
        let free = unvisited & !self.mark_mask;

        // the current target must be reachable through free vertices only
        let t = self.target(seg);
        let via_free = self.g.closure(cur_bit, free);
        if g.out_of(via_free | cur_bit) & (1 << t) == 0 {
            return false;
        }

        // relaxed check: every pending mark and the return to v_1 stay reachable
        let pending = self.later_marks(seg) & unvisited;
        let reach = self.g.closure(cur_bit, unvisited);
        if pending & !reach != 0 {
            return false;
        }
        if g.out_of(reach | cur_bit) & start_bit == 0 {
            return false;
        }

        if self.hamiltonian {
            if unvisited & !reach != 0 {
                return false;
            }
            // each remaining vertex must still have room to enter and leave
            for w in bits(unvisited) {
                if g.directed {
                    if g.out[w] & (unvisited | start_bit) == 0 || g.inn[w] & (unvisited | cur_bit) == 0 {
                        return false;
                    }
                } else if (g.out[w] & (unvisited | cur_bit | start_bit)).count_ones() < 2 {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&mut self, cur: VertexId, seg: usize) -> Flow {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Flow::Exhausted;
        }
        let k = self.marks.len();
        let g = self.g;
        if seg == k {
            let closes = g.out[cur] & (1 << self.marks[0]) != 0;
            if closes && self.path.len() >= 3 && (!self.hamiltonian || self.visited == g.full()) {
                return Flow::Found;
            }
        } else if g.out[cur] & (1 << self.target(seg)) != 0 {
            let t = self.target(seg);
            if let Some(flow) = self.step(t, seg + 1) {
                return flow;
            }
        }
        if !self.feasible(cur, seg) {
            return Flow::Dead;
        }
        let free = g.full() & !self.visited & !self.mark_mask;
        for w in bits(g.out[cur] & free) {
            if let Some(flow) = self.step(w, seg) {
                return flow;
            }
        }
        Flow::Dead
    }

    /// Enter `w`; `None` means the branch died and the search continues.
    fn step(&mut self, w: VertexId, seg: usize) -> Option<Flow> {
        self.visited |= 1 << w;
        self.path.push(w);
        match self.extend(w, seg) {
            Flow::Dead => {
                self.path.pop();
                self.visited &= !(1 << w);
                None
            }
            other => Some(other),
        }
    }
}

pub(crate) fn search_with_mask(
    mg: &MaskGraph,
    marks: &MarkSequence,
    require_hamiltonian: bool,
    budget: u64,
) -> Result<CycleSearch> {
    let ms = marks.as_slice();
    if ms.is_empty() {
        return Err(Error::InvalidMarks("need at least one mark".into()));
    }
    if let Some(&v) = ms.iter().find(|&&v| v >= mg.n) {
        return Err(Error::UnknownVertex(v));
    }
    let mut s = Searcher {
        g: mg,
        marks: ms,
        mark_mask: ms.iter().fold(0, |m, &v| m | (1 << v)),
        hamiltonian: require_hamiltonian,
        budget,
        nodes: 0,
        path: vec![ms[0]],
        visited: 1 << ms[0],
    };
    match s.extend(ms[0], 1) {
        Flow::Found => {
            let nodes = s.nodes;
            let cycle = OrderedCycle::new(s.path, marks)?;
            Ok(CycleSearch { cycle: Some(cycle), nodes })
        }
        Flow::Dead => Ok(CycleSearch { cycle: None, nodes: s.nodes }),
        Flow::Exhausted => Err(Error::ResourceExceeded { budget }),
    }
}

/// Exhaustive search for a cycle visiting `marks` in order (hamiltonian if asked).
///
/// `Ok(None)` inside the result is a certified absence: the search space was
/// fully explored. Hitting `budget` search nodes yields
/// [`Error::ResourceExceeded`], never a negative answer.
pub fn find_ordered_cycle<G: Adjacency + ?Sized>(
    g: &G,
    marks: &MarkSequence,
    require_hamiltonian: bool,
    budget: u64,
) -> Result<CycleSearch> {
    let mg = MaskGraph::new(g)?;
    search_with_mask(&mg, marks, require_hamiltonian, budget)
}

/// Whether the graph has any hamiltonian cycle.
pub fn has_hamiltonian_cycle<G: Adjacency + ?Sized>(g: &G, budget: u64) -> Result<Option<OrderedCycle>> {
    if g.vertex_count() < 3 {
        return Ok(None);
    }
    let marks = MarkSequence::new(vec![0], g.vertex_count())?;
    Ok(find_ordered_cycle(g, &marks, true, budget)?.cycle)
}

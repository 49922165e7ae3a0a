//! Hamiltonian (2k+1)-ordered cycles in uniform bracelets `G_{k,2m}`, by
//! induction on k: peel one free vertex per part, solve the remaining
//! `G_{k-1,2m}`, splice the free cycle back in, and reroute to pick up
//! free vertices that were skipped.

use serde::Serialize;

use super::frame::{alpha_on_parts, orient, rotate_pair_last, select_free, splice, Frame};
use crate::bracelet::BraceletGraph;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, VertexId};
use crate::witness::{verify_ordered_cycle, MarkSequence, OrderedCycle};

/// One free vertex per part, containing exactly one consecutive marked pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreeVertexSelection {
    /// `free[p]` is the free vertex of part `p`.
    pub free: Vec<VertexId>,
    /// Positions `(i, i + 1 mod len)` of the marked pair in the mark sequence.
    pub pair: (usize, usize),
}

impl FreeVertexSelection {
    pub fn marked_pair(&self, marks: &MarkSequence) -> (VertexId, VertexId) {
        (marks.as_slice()[self.pair.0], marks.as_slice()[self.pair.1])
    }
}

/// For every adjacent part pair `(p, p + 1)`, one cycle edge crossing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarCertificate {
    pub crossings: Vec<(VertexId, VertexId)>,
}

impl StarCertificate {
    /// Collects a crossing edge per adjacent part pair; `None` if some pair is uncovered.
    pub fn from_cycle<G>(bg: &crate::bracelet::Bracelet<G>, cycle: &OrderedCycle) -> Option<Self> {
        let m = bg.part_count();
        let mut crossings: Vec<Option<(VertexId, VertexId)>> = vec![None; m];
        for (x, y) in cycle.edges() {
            let (px, py) = (bg.part_of(x), bg.part_of(y));
            if bg.part_offset(px, 1) == py {
                crossings[px].get_or_insert((x, y));
            } else if bg.part_offset(py, 1) == px {
                crossings[py].get_or_insert((y, x));
            }
        }
        crossings.into_iter().collect::<Option<Vec<_>>>().map(|crossings| Self { crossings })
    }

    /// Every listed edge lies on the cycle and crosses its part pair.
    pub fn check<G>(&self, bg: &crate::bracelet::Bracelet<G>, cycle: &OrderedCycle) -> bool {
        let on_cycle: std::collections::HashSet<(VertexId, VertexId)> =
            cycle.edges().flat_map(|(x, y)| [(x, y), (y, x)]).collect();
        self.crossings.len() == bg.part_count()
            && self.crossings.iter().enumerate().all(|(p, &(x, y))| {
                on_cycle.contains(&(x, y)) && bg.part_of(x) == p && bg.part_of(y) == bg.part_offset(p, 1)
            })
    }
}

fn check_uniform(bg: &BraceletGraph, marks: &MarkSequence) -> Result<usize> {
    let sizes = bg.spec().part_sizes();
    let k = sizes[0];
    if sizes.iter().any(|&s| s != k) {
        return Err(Error::Precondition(format!("parts are not uniform: {sizes:?}")));
    }
    if sizes.len() < 4 {
        return Err(Error::Precondition(format!("need at least 4 parts, got {}", sizes.len())));
    }
    if marks.len() != 2 * k + 1 {
        return Err(Error::Precondition(format!("need {} marks for part size {k}, got {}", 2 * k + 1, marks.len())));
    }
    if let Some(&v) = marks.as_slice().iter().find(|&&v| v >= bg.vertex_count()) {
        return Err(Error::UnknownVertex(v));
    }
    Ok(k)
}

pub(crate) fn frame_of<G>(bg: &crate::bracelet::Bracelet<G>) -> Frame<'_> {
    Frame::new(bg.parts().to_vec(), bg.part_map())
}

/// Free vertices for `2k+1` marks in a uniform bracelet: the first consecutive
/// marked pair in different parts such that every other part keeps an
/// unmarked vertex, plus the lowest-id unmarked vertex of each other part.
/// With parts of size 1 the transversal is the whole graph and the pair is `(0, 1)`.
pub fn select_free_vertices(bg: &BraceletGraph, marks: &MarkSequence) -> Result<FreeVertexSelection> {
    let k = check_uniform(bg, marks)?;
    if k == 1 {
        // every part is a single vertex, so the transversal is forced
        return Ok(FreeVertexSelection { free: bg.parts().iter().map(|p| p[0]).collect(), pair: (0, 1) });
    }
    let frame = frame_of(bg);
    let (i, free) = select_free(&frame, marks.as_slice(), |_| true)
        .ok_or_else(|| Error::Internal(format!("no free vertex selection for {marks}")))?;
    Ok(FreeVertexSelection { free, pair: (i, (i + 1) % marks.len()) })
}

/// Recursive builder over a uniform frame. With `hamiltonian`, skipped free
/// vertices are picked up by rerouting (needs an even part count).
pub(crate) fn uniform_cycle(frame: &Frame<'_>, marks: &[VertexId], hamiltonian: bool) -> Result<Vec<VertexId>> {
    let k = frame.parts[0].len();
    if k == 1 {
        let cycle = frame.parts.iter().map(|p| p[0]).collect();
        return orient(cycle, marks, true).ok_or_else(|| Error::Internal("base cycle misses a mark".into()));
    }
    let (i, free) = select_free(frame, marks, |_| true)
        .ok_or_else(|| Error::Internal(format!("no free vertex selection for {marks:?}")))?;
    let r = rotate_pair_last(marks, i);
    let len = r.len();
    let sub = frame.without(&free);
    let d = uniform_cycle(&sub, &r[..len - 2], hamiltonian)?;
    let spliced = splice(frame, &d, r[len - 3], r[len - 2], r[len - 1], &free)?;
    let mut cycle = spliced.cycle;
    if hamiltonian {
        if spliced.missing.len() % 2 == 1 {
            return Err(Error::Internal("odd number of skipped parts".into()));
        }
        for pair in spliced.missing.chunks(2) {
            alpha_on_parts(frame, &mut cycle, &free, pair[0], pair[1])?;
        }
    }
    orient(cycle, marks, true).ok_or_else(|| Error::Internal("spliced cycle lost the mark order".into()))
}

/// Hamiltonian cycle through `2k+1` marks of `G_{k,2m}` in order, with a
/// crossing edge for every adjacent part pair.
pub fn construct_g_hamiltonian(bg: &BraceletGraph, marks: &MarkSequence) -> Result<(OrderedCycle, StarCertificate)> {
    check_uniform(bg, marks)?;
    if bg.part_count() % 2 == 1 {
        return Err(Error::Precondition(format!("need an even part count, got {}", bg.part_count())));
    }
    let cycle = uniform_cycle(&frame_of(bg), marks.as_slice(), true)?;
    let cycle = OrderedCycle::new(cycle, marks)?;
    if let Err(v) = verify_ordered_cycle(bg.graph(), &cycle, marks, true) {
        return Err(Error::Internal(format!("constructed cycle fails verification: {v}")));
    }
    let star = StarCertificate::from_cycle(bg, &cycle)
        .ok_or_else(|| Error::Internal("constructed cycle misses an adjacent part pair".into()))?;
    Ok((cycle, star))
}

/// Ordered (not necessarily hamiltonian) cycle through `2k+1` marks of a
/// uniform bracelet with any part count `>= 4`; hamiltonian when the part count is even.
pub fn construct_uniform_cycle(bg: &BraceletGraph, marks: &MarkSequence) -> Result<OrderedCycle> {
    check_uniform(bg, marks)?;
    let ham = bg.part_count() % 2 == 0;
    let cycle = OrderedCycle::new(uniform_cycle(&frame_of(bg), marks.as_slice(), ham)?, marks)?;
    if let Err(v) = verify_ordered_cycle(bg.graph(), &cycle, marks, ham) {
        return Err(Error::Internal(format!("constructed cycle fails verification: {v}")));
    }
    Ok(cycle)
}

/// Replaces cycle edge `ab` by `a d c b`, where `c` shares the part of `a`
/// and `d` the part of `b`. The mark order is unchanged and the cycle grows by two.
pub fn reroute_alpha<G: Adjacency>(
    bg: &crate::bracelet::Bracelet<G>,
    cycle: &OrderedCycle,
    marks: &MarkSequence,
    edge: (VertexId, VertexId),
    c: VertexId,
    d: VertexId,
) -> Result<OrderedCycle> {
    let (a, b) = edge;
    let g = bg.graph();
    let vs = cycle.vertices();
    let len = vs.len();
    let n = bg.vertex_count();
    if [a, b, c, d].iter().any(|&v| v >= n) {
        return Err(Error::Precondition("vertex out of range".into()));
    }
    if bg.part_of(c) != bg.part_of(a) || bg.part_of(d) != bg.part_of(b) {
        return Err(Error::Precondition("c must share the part of a, d the part of b".into()));
    }
    if vs.contains(&c) || vs.contains(&d) {
        return Err(Error::Precondition("c and d must not lie on the cycle".into()));
    }
    if marks.as_slice().contains(&c) || marks.as_slice().contains(&d) {
        return Err(Error::Precondition("c and d must be unmarked".into()));
    }
    if !(g.has_edge(a, d) && g.has_edge(d, c) && g.has_edge(c, b)) {
        return Err(Error::Precondition("a-d, d-c and c-b must be edges".into()));
    }
    let i = (0..len)
        .find(|&i| (vs[i], vs[(i + 1) % len]) == (a, b) || (vs[i], vs[(i + 1) % len]) == (b, a))
        .ok_or_else(|| Error::Precondition(format!("{a}-{b} is not a cycle edge")))?;
    let detour = if vs[i] == a { [d, c] } else { [c, d] };
    let mut out = vs.to_vec();
    out.splice(i + 1..i + 1, detour);
    OrderedCycle::new(out, marks)
}

//! 2k-ordered cycles in `P_{k,m}` (parts k-1, k-1, k, k+1, ..., k+1), by
//! peeling free vertices down to `P_{2,m}`. Branches without an explicit
//! routing fall back to exhaustive search over a small skeleton.

use super::frame::{orient, rotate_pair_last, select_free, skeleton_search, splice, Frame};
use super::uniform::frame_of;
use crate::bracelet::BraceletGraph;
use crate::error::{Error, Result};
use crate::generators::spec_p;
use crate::graph::VertexId;
use crate::witness::{verify_ordered_cycle, MarkSequence, OrderedCycle};

/// Unmarked vertices kept per part by the fallback search.
const SKELETON_EXTRA: usize = 2;

/// Three marks in one part and the fourth elsewhere: weave through a
/// neighbouring part of size at least 3, then go once around.
fn three_in_one_part(frame: &Frame<'_>, marks: &[VertexId]) -> Option<Vec<VertexId>> {
    let counts = frame.mark_counts(marks);
    let b = counts.iter().position(|&c| c == 3)?;
    let i = (0..4).find(|&i| frame.part(marks[i]) != b)?;
    // outside mark last
    let r: Vec<VertexId> = (1..=4).map(|j| marks[(i + j) % 4]).collect();
    let v4 = r[3];
    let m = frame.m();
    for dir in [1isize, -1] {
        let a = frame.at(b, dir);
        let part = &frame.parts[a];
        if part.len() < 3 {
            continue;
        }
        let mut others = part.iter().copied().filter(|&v| v != v4);
        let (a1, a2) = (others.next()?, others.next()?);
        let a3 = if frame.part(v4) == a { v4 } else { others.next()? };
        let mut cycle = vec![r[0], a1, r[1], a2, r[2], a3];
        for j in 2..m as isize {
            let p = frame.at(b, dir * j);
            let rep = if frame.part(v4) == p { v4 } else { frame.parts[p][0] };
            cycle.push(rep);
        }
        return Some(cycle);
    }
    None
}

fn base_case(frame: &Frame<'_>, marks: &[VertexId], budget: u64) -> Result<Vec<VertexId>> {
    if let Some(c) = three_in_one_part(frame, marks) {
        return Ok(c);
    }
    let counts = frame.mark_counts(marks);
    if counts.iter().all(|&c| c <= 1) {
        let transversal: Vec<VertexId> = frame
            .parts
            .iter()
            .enumerate()
            .map(|(p, part)| marks.iter().copied().find(|&v| frame.part(v) == p).unwrap_or(part[0]))
            .collect();
        if let Some(c) = orient(transversal, marks, true) {
            return Ok(c);
        }
    }
    skeleton_search(frame, marks, SKELETON_EXTRA, budget)
}

pub(crate) fn p_cycle(frame: &Frame<'_>, marks: &[VertexId], budget: u64) -> Result<Vec<VertexId>> {
    let len = marks.len();
    let cycle = if len == 4 {
        base_case(frame, marks, budget)?
    } else {
        match select_free(frame, marks, |_| true) {
            Some((i, free)) => {
                let r = rotate_pair_last(marks, i);
                let d = p_cycle(&frame.without(&free), &r[..len - 2], budget)?;
                splice(frame, &d, r[len - 3], r[len - 2], r[len - 1], &free)?.cycle
            }
            None => skeleton_search(frame, marks, SKELETON_EXTRA, budget)?,
        }
    };
    orient(cycle, marks, true).ok_or_else(|| Error::Internal("constructed cycle lost the mark order".into()))
}

/// Cycle through `2k` marks of `P_{k,m}` in order. `budget` bounds each
/// fallback search (node count).
pub fn construct_p_cycle(bg: &BraceletGraph, marks: &MarkSequence, budget: u64) -> Result<OrderedCycle> {
    if marks.len() < 4 || marks.len() % 2 == 1 {
        return Err(Error::Precondition(format!("need an even number (>= 4) of marks, got {}", marks.len())));
    }
    let k = marks.len() / 2;
    let expected = spec_p(k, bg.part_count()).map_err(|e| Error::Precondition(e.to_string()))?;
    if bg.spec() != &expected {
        return Err(Error::Precondition(format!(
            "bracelet {:?} is not P({k},{})",
            bg.spec().part_sizes(),
            bg.part_count()
        )));
    }
    if let Some(&v) = marks.as_slice().iter().find(|&&v| v >= bg.vertex_count()) {
        return Err(Error::UnknownVertex(v));
    }
    let cycle = OrderedCycle::new(p_cycle(&frame_of(bg), marks.as_slice(), budget)?, marks)?;
    if let Err(v) = verify_ordered_cycle(bg.graph(), &cycle, marks, false) {
        return Err(Error::Internal(format!("constructed cycle fails verification: {v}")));
    }
    Ok(cycle)
}

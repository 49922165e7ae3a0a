//! (2k+1)-ordered cycles in bracelets with at least k vertices per part and at
//! least 2k+1 vertices in every pair of parts at distance 2.

use super::frame::{orient, rotate_pair_last, select_free, splice, Frame};
use super::uniform::{frame_of, uniform_cycle};
use crate::bracelet::BraceletGraph;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::witness::{verify_ordered_cycle, MarkSequence, OrderedCycle};

/// Checks the size conditions for `2k+1` marks; returns `k`.
pub fn distance_two_precondition(bg: &BraceletGraph, marks: usize) -> Result<usize> {
    if marks < 3 || marks % 2 == 0 {
        return Err(Error::Precondition(format!("need an odd number (>= 3) of marks, got {marks}")));
    }
    let k = (marks - 1) / 2;
    let sizes = bg.spec().part_sizes();
    let m = sizes.len();
    if m < 4 {
        return Err(Error::Precondition(format!("need at least 4 parts, got {m}")));
    }
    if let Some((i, &s)) = sizes.iter().enumerate().find(|(_, &s)| s < k) {
        return Err(Error::Precondition(format!("part {i} has {s} < k = {k} vertices")));
    }
    for i in 0..m {
        let j = (i + 2) % m;
        if sizes[i] + sizes[j] < 2 * k + 1 {
            return Err(Error::Precondition(format!(
                "parts {i} and {j} at distance 2 hold {} < 2k+1 = {} vertices",
                sizes[i] + sizes[j],
                2 * k + 1
            )));
        }
    }
    Ok(k)
}

/// Three marks: a cycle through all of them (any cycle fits one direction).
fn three_marks(frame: &Frame<'_>, marks: &[VertexId]) -> Result<Vec<VertexId>> {
    let m = frame.m();
    let parts: Vec<usize> = marks.iter().map(|&v| frame.part(v)).collect();
    let rep = |p: usize, avoid: &[VertexId]| -> Option<VertexId> {
        marks.iter().copied().find(|&v| frame.part(v) == p).or_else(|| frame.parts[p].iter().copied().find(|v| !avoid.contains(v)))
    };
    let short = || Error::Precondition("parts too small for three marks".into());
    if parts[0] != parts[1] && parts[1] != parts[2] && parts[0] != parts[2] {
        return (0..m).map(|p| rep(p, &[]).ok_or_else(short)).collect();
    }
    if parts[0] == parts[1] && parts[1] == parts[2] {
        let p = parts[0];
        let nb: Vec<VertexId> = frame.parts[frame.at(p, -1)].iter().chain(&frame.parts[frame.at(p, 1)]).copied().collect();
        if nb.len() < 3 {
            return Err(short());
        }
        return Ok(vec![marks[0], nb[0], marks[1], nb[1], marks[2], nb[2]]);
    }
    // exactly two marks share a part
    let (s, t, w) = if parts[0] == parts[1] {
        (marks[0], marks[1], marks[2])
    } else if parts[1] == parts[2] {
        (marks[1], marks[2], marks[0])
    } else {
        (marks[0], marks[2], marks[1])
    };
    let (p, q) = (frame.part(s), frame.part(w));
    if frame.at(p, 1) == q || frame.at(p, -1) == q {
        let nb = frame.parts[frame.at(p, -1)]
            .iter()
            .chain(&frame.parts[frame.at(p, 1)])
            .copied()
            .find(|&v| v != w)
            .ok_or_else(short)?;
        return Ok(vec![s, w, t, nb]);
    }
    let dir = if frame.parts[frame.at(p, 1)].len() >= 2 { 1 } else { -1 };
    let side = &frame.parts[frame.at(p, dir)];
    if side.len() < 2 {
        return Err(short());
    }
    let mut cycle = vec![s, side[0], t, side[1]];
    for j in 2..m as isize {
        cycle.push(rep(frame.at(p, dir * j), &[]).ok_or_else(short)?);
    }
    Ok(cycle)
}

pub(crate) fn distance_two_cycle(frame: &Frame<'_>, marks: &[VertexId]) -> Result<Vec<VertexId>> {
    let len = marks.len();
    let k = (len - 1) / 2;
    let cycle = if k == 1 {
        three_marks(frame, marks)?
    } else {
        let counts = frame.mark_counts(marks);
        match counts.iter().enumerate().find(|(_, &c)| c > k) {
            None => {
                // every part has at most k marks: restrict to k vertices per part, marks first
                let flags = super::frame::marked_flags(frame, marks);
                let parts = frame
                    .parts
                    .iter()
                    .map(|p| {
                        let marked = p.iter().copied().filter(|&v| flags[v]);
                        let unmarked = p.iter().copied().filter(|&v| !flags[v]);
                        marked.chain(unmarked).take(k).collect()
                    })
                    .collect();
                uniform_cycle(&Frame::new(parts, frame.part_of), marks, false)?
            }
            Some((b, _)) if counts[b] == len => {
                let nb: Vec<VertexId> =
                    frame.parts[frame.at(b, -1)].iter().chain(&frame.parts[frame.at(b, 1)]).copied().collect();
                if nb.len() < len {
                    return Err(Error::Precondition(format!("neighbourhood of part {b} is too small")));
                }
                marks.iter().zip(&nb).flat_map(|(&v, &w)| [v, w]).collect()
            }
            Some((b, _)) => {
                let (i, free) = select_free(frame, marks, |i| frame.part(marks[i]) == b)
                    .ok_or_else(|| Error::Internal("no free vertices next to the crowded part".into()))?;
                let r = rotate_pair_last(marks, i);
                let sub = frame.without(&free);
                let d = distance_two_cycle(&sub, &r[..len - 2])?;
                splice(frame, &d, r[len - 3], r[len - 2], r[len - 1], &free)?.cycle
            }
        }
    };
    orient(cycle, marks, true).ok_or_else(|| Error::Internal("constructed cycle lost the mark order".into()))
}

/// Cycle through `2k+1` marks in order, for bracelets with at least 4 parts,
/// at least `k` vertices per part and at least `2k+1` vertices in every pair
/// of parts at distance 2.
pub fn construct_bracelet_cycle(bg: &BraceletGraph, marks: &MarkSequence) -> Result<OrderedCycle> {
    distance_two_precondition(bg, marks.len())?;
    if let Some(&v) = marks.as_slice().iter().find(|&&v| v >= bg.vertex_count()) {
        return Err(Error::UnknownVertex(v));
    }
    let cycle = distance_two_cycle(&frame_of(bg), marks.as_slice())?;
    let cycle = OrderedCycle::new(cycle, marks)?;
    if let Err(v) = verify_ordered_cycle(bg.graph(), &cycle, marks, false) {
        return Err(Error::Internal(format!("constructed cycle fails verification: {v}")));
    }
    Ok(cycle)
}

//! Shared machinery for the inductive builders: a bracelet "frame" (parts
//! as vertex lists of the host graph), free-vertex selection, splicing a
//! sub-cycle with the free cycle, and the alpha rerouting.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::oracle::find_ordered_cycle;
use crate::witness::MarkSequence;

/// A bracelet given by its parts; vertices keep their host-graph ids and
/// part indices, so sub-frames (with vertices removed) stay comparable.
#[derive(Debug, Clone)]
pub(crate) struct Frame<'a> {
    pub parts: Vec<Vec<VertexId>>,
    pub part_of: &'a [usize],
}

impl<'a> Frame<'a> {
    pub fn new(parts: Vec<Vec<VertexId>>, part_of: &'a [usize]) -> Self {
        Self { parts, part_of }
    }

    pub fn m(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, v: VertexId) -> usize {
        self.part_of[v]
    }

    /// Part index `p + step` modulo the part count.
    pub fn at(&self, p: usize, step: isize) -> usize {
        (p as isize + step).rem_euclid(self.m() as isize) as usize
    }

    /// `+1` or `-1` if part `to` follows or precedes part `from`.
    pub fn step(&self, from: usize, to: usize) -> Result<isize> {
        if self.at(from, 1) == to {
            Ok(1)
        } else if self.at(from, -1) == to {
            Ok(-1)
        } else {
            Err(Error::Internal(format!("parts {from} and {to} are not adjacent")))
        }
    }

    pub fn without(&self, removed: &[VertexId]) -> Frame<'a> {
        let parts = self.parts.iter().map(|p| p.iter().copied().filter(|v| !removed.contains(v)).collect()).collect();
        Frame { parts, part_of: self.part_of }
    }

    pub fn mark_counts(&self, marks: &[VertexId]) -> Vec<usize> {
        let mut counts = vec![0; self.m()];
        for &v in marks {
            counts[self.part(v)] += 1;
        }
        counts
    }

    /// Induced subgraph on `verts` with local ids, plus the local-to-host map.
    pub fn induced(&self, verts: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut edges = Vec::new();
        for (i, &x) in verts.iter().enumerate() {
            for (j, &y) in verts.iter().enumerate().skip(i + 1) {
                let (px, py) = (self.part(x), self.part(y));
                if px != py && (self.at(px, 1) == py || self.at(px, -1) == py) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(verts.len(), edges).expect("induced bracelet subgraph is simple");
        (g, verts.to_vec())
    }
}

pub(crate) fn marked_flags(frame: &Frame<'_>, marks: &[VertexId]) -> Vec<bool> {
    let mut flags = vec![false; frame.part_of.len()];
    for &v in marks {
        flags[v] = true;
    }
    flags
}

/// Rotate `marks` so that positions `i` and `i + 1` become the last two.
pub(crate) fn rotate_pair_last(marks: &[VertexId], i: usize) -> Vec<VertexId> {
    let len = marks.len();
    (0..len).map(|j| marks[(i + 2 + j) % len]).collect()
}

/// First consecutive pair `(marks[i], marks[i+1])` in different parts, accepted
/// by `pair_ok`, such that every other part has an unmarked vertex. Returns
/// `i` and the free vertices indexed by part (the pair plus the lowest-id
/// unmarked vertex of every other part).
pub(crate) fn select_free(
    frame: &Frame<'_>,
    marks: &[VertexId],
    pair_ok: impl Fn(usize) -> bool,
) -> Option<(usize, Vec<VertexId>)> {
    let marked = marked_flags(frame, marks);
    let len = marks.len();
    'pairs: for i in 0..len {
        let (x, y) = (marks[i], marks[(i + 1) % len]);
        let (px, py) = (frame.part(x), frame.part(y));
        if px == py || !pair_ok(i) {
            continue;
        }
        let mut free = Vec::with_capacity(frame.m());
        for (p, part) in frame.parts.iter().enumerate() {
            if p == px {
                free.push(x);
            } else if p == py {
                free.push(y);
            } else {
                match part.iter().find(|&&v| !marked[v]) {
                    Some(&v) => free.push(v),
                    None => continue 'pairs,
                }
            }
        }
        return Some((i, free));
    }
    None
}

/// Rotate `cycle` to start at `marks[0]`, reversing it if the marks only
/// appear in order backwards (and `allow_reverse`). `None` if neither works.
pub(crate) fn orient(mut cycle: Vec<VertexId>, marks: &[VertexId], allow_reverse: bool) -> Option<Vec<VertexId>> {
    let forward = |c: &[VertexId]| -> bool {
        let len = c.len();
        let pos: Option<Vec<usize>> = marks.iter().map(|m| c.iter().position(|v| v == m)).collect();
        let Some(pos) = pos else { return false };
        let offs: Vec<usize> = pos.iter().map(|&p| (p + len - pos[0]) % len).collect();
        offs.windows(2).all(|w| w[0] < w[1])
    };
    if !forward(&cycle) {
        if !allow_reverse {
            return None;
        }
        cycle.reverse();
        if !forward(&cycle) {
            return None;
        }
    }
    let start = cycle.iter().position(|&v| v == marks[0])?;
    cycle.rotate_left(start);
    Some(cycle)
}

pub(crate) struct Spliced {
    pub cycle: Vec<VertexId>,
    /// Parts whose free vertex was left out (only in the "u in the part of c" case), in order.
    pub missing: Vec<usize>,
}

/// Extends the sub-cycle `d` (starting at the first mark, marks forward, ending
/// the sub-sequence at `a`) to pass through `b` and then `c`, using the free
/// vertices `free` (one per part, `b` and `c` among them).
pub(crate) fn splice(
    frame: &Frame<'_>,
    d: &[VertexId],
    a: VertexId,
    b: VertexId,
    c: VertexId,
    free: &[VertexId],
) -> Result<Spliced> {
    let m = frame.m();
    let ia = d
        .iter()
        .position(|&v| v == a)
        .ok_or_else(|| Error::Internal(format!("mark {a} missing from sub-cycle")))?;
    let u = d[(ia + 1) % d.len()];
    let (pa, pb, pc, pu) = (frame.part(a), frame.part(b), frame.part(c), frame.part(u));
    let mut missing = Vec::new();
    let insert: Vec<VertexId> = if pa != pb {
        // walk once around the free cycle from a neighbour part of `a` back to the part of `a`
        let mut chosen = None;
        for dir in [1isize, -1] {
            let seq: Vec<VertexId> = (1..=m as isize).map(|j| free[frame.at(pa, dir * j)]).collect();
            let ib = seq.iter().position(|&v| v == b);
            let ic = seq.iter().position(|&v| v == c);
            if let (Some(ib), Some(ic)) = (ib, ic) {
                if ib < ic {
                    chosen = Some(seq);
                    break;
                }
            }
        }
        chosen.ok_or_else(|| Error::Internal("no direction around the free cycle meets b before c".into()))?
    } else {
        let du = frame.step(pa, pu)?;
        if pu != pc {
            // a -> free(part of u) -> b -> away from u around the free cycle -> u
            (0..m as isize).map(|j| free[frame.at(pa, du - du * j)]).collect()
        } else {
            missing = (3..=m as isize - 2).map(|j| frame.at(pa, du * j)).collect();
            vec![free[frame.at(pa, -du)], b, c, free[frame.at(pa, 2 * du)]]
        }
    };
    let mut cycle = Vec::with_capacity(d.len() + insert.len());
    cycle.extend_from_slice(&d[..=ia]);
    cycle.extend(insert);
    cycle.extend_from_slice(&d[ia + 1..]);
    Ok(Spliced { cycle, missing })
}

/// Replaces the first cycle edge between parts `x` and `y` by the detour
/// through their free vertices.
pub(crate) fn alpha_on_parts(
    frame: &Frame<'_>,
    cycle: &mut Vec<VertexId>,
    free: &[VertexId],
    x: usize,
    y: usize,
) -> Result<()> {
    let len = cycle.len();
    let i = (0..len)
        .find(|&i| {
            let (p, q) = (frame.part(cycle[i]), frame.part(cycle[(i + 1) % len]));
            (p, q) == (x, y) || (p, q) == (y, x)
        })
        .ok_or_else(|| Error::Internal(format!("no cycle edge between parts {x} and {y}")))?;
    let (s, t) = (cycle[i], cycle[(i + 1) % len]);
    let detour = [free[frame.part(t)], free[frame.part(s)]];
    cycle.splice(i + 1..i + 1, detour);
    Ok(())
}

/// Exhaustive search restricted to the marks plus the first `extra` unmarked
/// vertices of every part; widens to the whole frame if the skeleton has no
/// ordered cycle.
pub(crate) fn skeleton_search(
    frame: &Frame<'_>,
    marks: &[VertexId],
    extra: usize,
    budget: u64,
) -> Result<Vec<VertexId>> {
    let marked = marked_flags(frame, marks);
    let skeleton: Vec<VertexId> = frame
        .parts
        .iter()
        .flat_map(|p| {
            let unmarked = p.iter().copied().filter(|&v| !marked[v]).take(extra);
            p.iter().copied().filter(|&v| marked[v]).chain(unmarked).collect::<Vec<_>>()
        })
        .collect();
    let everything: Vec<VertexId> = frame.parts.iter().flatten().copied().collect();
    let mut attempts = vec![skeleton];
    if attempts[0].len() < everything.len() {
        attempts.push(everything);
    }
    for verts in attempts {
        if let Some(c) = search_in(frame, &verts, marks, budget)? {
            return Ok(c);
        }
    }
    Err(Error::Internal(format!("no ordered cycle through {marks:?} in this bracelet")))
}

fn search_in(frame: &Frame<'_>, verts: &[VertexId], marks: &[VertexId], budget: u64) -> Result<Option<Vec<VertexId>>> {
    let (g, to_host) = frame.induced(verts);
    let local: HashMap<VertexId, usize> = to_host.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let local_marks = MarkSequence::new(marks.iter().map(|v| local[v]).collect(), verts.len())?;
    let found = find_ordered_cycle(&g, &local_marks, false, budget)?;
    Ok(found.cycle.map(|c| c.vertices().iter().map(|&i| to_host[i]).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orient_rotates_and_reflects() {
        let c = vec![5, 1, 2, 3, 4];
        assert_eq!(orient(c.clone(), &[2, 3, 5], true), Some(vec![2, 3, 4, 5, 1]));
        assert_eq!(orient(c.clone(), &[3, 2, 5], true), Some(vec![3, 2, 1, 5, 4]));
        assert_eq!(orient(c, &[3, 2, 5], false), None);
    }

    #[test]
    fn pair_rotation() {
        assert_eq!(rotate_pair_last(&[10, 11, 12, 13, 14], 1), vec![13, 14, 10, 11, 12]);
        assert_eq!(rotate_pair_last(&[10, 11, 12], 2), vec![11, 12, 10]);
    }
}

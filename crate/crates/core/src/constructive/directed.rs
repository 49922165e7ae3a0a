//! Hamiltonian k-ordered cycles in the directed bracelet on parts of size k-1,
//! laid out as a grid with one row per vertex of a part.

use super::frame::orient;
use crate::bracelet::DirectedBracelet;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::witness::{verify_ordered_cycle, MarkSequence, OrderedCycle};

/// Grid of `rows = k - 1` rows; column `c` holds vertices of part `first_part + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGrid {
    pub first_part: usize,
    pub rows: Vec<Vec<VertexId>>,
}

impl DirectedGrid {
    /// Rows in sequence, each read left to right.
    pub fn traversal(&self) -> Vec<VertexId> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// Places the marks: `marks[i]`, `marks[i+1]` (in different parts) in row 0,
/// and each later mark in its own row; other cells get the remaining vertices
/// of their part in increasing id order.
pub fn directed_grid(bg: &DirectedBracelet, marks: &MarkSequence) -> Result<DirectedGrid> {
    let sizes = bg.spec().part_sizes();
    let k = marks.len();
    if k < 2 {
        return Err(Error::Precondition("need at least 2 marks".into()));
    }
    if sizes.iter().any(|&s| s != k - 1) {
        return Err(Error::Precondition(format!("{k} marks need every part of size {}, got {sizes:?}", k - 1)));
    }
    let ms = marks.as_slice();
    if let Some(&v) = ms.iter().find(|&&v| v >= bg.vertex_count()) {
        return Err(Error::UnknownVertex(v));
    }
    let i = (0..k)
        .find(|&i| bg.part_of(ms[i]) != bg.part_of(ms[(i + 1) % k]))
        .ok_or_else(|| Error::Precondition("all marks lie in one part".into()))?;
    let r: Vec<VertexId> = (0..k).map(|j| ms[(i + j) % k]).collect();
    let l = bg.part_count();
    let first = bg.part_of(r[0]);
    let col = |v: VertexId| (bg.part_of(v) + l - first) % l;
    let mut cells: Vec<Vec<Option<VertexId>>> = vec![vec![None; l]; k - 1];
    cells[0][0] = Some(r[0]);
    cells[0][col(r[1])] = Some(r[1]);
    for (row, &v) in r[2..].iter().enumerate() {
        cells[row + 1][col(v)] = Some(v);
    }
    for c in 0..l {
        let part = bg.part(bg.part_offset(first, c as isize));
        let mut rest = part.iter().copied().filter(|v| !ms.contains(v));
        for row in cells.iter_mut() {
            if row[c].is_none() {
                row[c] = Some(rest.next().ok_or_else(|| Error::Internal("grid column overfull".into()))?);
            }
        }
    }
    let rows = cells.into_iter().map(|row| row.into_iter().map(|v| v.expect("filled")).collect()).collect();
    Ok(DirectedGrid { first_part: first, rows })
}

/// Directed hamiltonian cycle through `k` marks in order, for the directed
/// bracelet whose parts all have `k - 1` vertices.
pub fn construct_directed_hamiltonian(bg: &DirectedBracelet, marks: &MarkSequence) -> Result<OrderedCycle> {
    let grid = directed_grid(bg, marks)?;
    let cycle = orient(grid.traversal(), marks.as_slice(), false)
        .ok_or_else(|| Error::Internal("grid traversal lost the mark order".into()))?;
    let cycle = OrderedCycle::new(cycle, marks)?;
    if let Err(v) = verify_ordered_cycle(bg.graph(), &cycle, marks, true) {
        return Err(Error::Internal(format!("constructed cycle fails verification: {v}")));
    }
    Ok(cycle)
}

//! Structural screens on bracelet part sizes that every `2k`-ordered bracelet passes.

use serde::Serialize;

use crate::bracelet::Bracelet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Screen {
    /// Every vertex has degree at least `2k - 1`.
    MinDegree,
    /// Every two non-adjacent parts hold at least `2k - 1` vertices together
    /// (deleting them must not disconnect the graph).
    NonAdjacentParts,
    /// With more than 5 parts: no part `B` with `|B| <= k` has fewer than `2|B|` neighbours.
    SmallPartNeighbourhood,
    /// With more than 5 parts: no part `B` with `|B| > k` has fewer than `2k` neighbours.
    LargePartNeighbourhood,
    /// With more than 6 parts: minimum degree `2k - 1` forces maximum degree at least `2k + 2`.
    DegreeWindow,
}

impl Screen {
    pub const ALL: [Screen; 5] = [
        Screen::MinDegree,
        Screen::NonAdjacentParts,
        Screen::SmallPartNeighbourhood,
        Screen::LargePartNeighbourhood,
        Screen::DegreeWindow,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeAudit {
    pub k: usize,
    pub part_sizes: Vec<usize>,
    pub min_part: usize,
    /// `adjacent_sums[i] = |V_{i-1}| + |V_{i+1}|`, the degree of every vertex of part `i`.
    pub adjacent_sums: Vec<usize>,
    /// `distance_two_sums[i] = |V_i| + |V_{i+2}|`.
    pub distance_two_sums: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Screens that apply to this part count.
    pub applicable: Vec<Screen>,
    pub failed: Vec<Screen>,
}

impl DegreeAudit {
    pub fn passes(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Evaluates the part-size screens for `2k`-orderedness.
pub fn bracelet_degree_audit<G>(bg: &Bracelet<G>, k: usize) -> DegreeAudit {
    let sizes = bg.spec().part_sizes().to_vec();
    let m = sizes.len();
    let at = |i: usize, step: isize| sizes[bg.part_offset(i, step)];
    let adjacent_sums: Vec<usize> = (0..m).map(|i| at(i, -1) + at(i, 1)).collect();
    let distance_two_sums: Vec<usize> = (0..m).map(|i| at(i, 0) + at(i, 2)).collect();
    let min_degree = adjacent_sums.iter().copied().min().unwrap_or(0);
    let max_degree = adjacent_sums.iter().copied().max().unwrap_or(0);
    let need = (2 * k).saturating_sub(1);

    let mut applicable = vec![Screen::MinDegree];
    let mut failed = Vec::new();
    if min_degree < need {
        failed.push(Screen::MinDegree);
    }
    if m >= 4 {
        applicable.push(Screen::NonAdjacentParts);
        let bad = (0..m).any(|i| (0..m).any(|j| bg.part_distance(i, j) >= 2 && sizes[i] + sizes[j] < need));
        if bad {
            failed.push(Screen::NonAdjacentParts);
        }
    }
    if m > 5 {
        applicable.extend([Screen::SmallPartNeighbourhood, Screen::LargePartNeighbourhood]);
        if (0..m).any(|i| sizes[i] <= k && adjacent_sums[i] < 2 * sizes[i]) {
            failed.push(Screen::SmallPartNeighbourhood);
        }
        if (0..m).any(|i| sizes[i] > k && adjacent_sums[i] < 2 * k) {
            failed.push(Screen::LargePartNeighbourhood);
        }
    }
    if m > 6 {
        applicable.push(Screen::DegreeWindow);
        if min_degree == need && max_degree < 2 * k + 2 {
            failed.push(Screen::DegreeWindow);
        }
    }
    DegreeAudit {
        k,
        min_part: sizes.iter().copied().min().unwrap_or(0),
        part_sizes: sizes,
        adjacent_sums,
        distance_two_sums,
        min_degree,
        max_degree,
        applicable,
        failed,
    }
}

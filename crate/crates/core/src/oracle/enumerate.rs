//! Enumeration of ordered k-sequences over `0..n`, optionally one per rotation/reflection class.

use crate::error::{Error, Result};

/// Refuse sweeps that would materialise more sequences than this.
const MAX_SEQUENCES: u128 = 50_000_000;

/// Number of sequences [`mark_sequences`] returns.
pub fn sequence_count(n: usize, k: usize, reflect: bool, reduced: bool) -> u128 {
    if k == 0 || k > n {
        return 0;
    }
    let falling: u128 = (0..k).map(|i| (n - i) as u128).product();
    if !reduced {
        return falling;
    }
    let per_class = k as u128 * if reflect && k >= 3 { 2 } else { 1 };
    falling / per_class
}

/// All ordered k-sequences of distinct items from `0..n` in lexicographic order.
///
/// With `reduced`, only one sequence per rotation class is kept: the one whose
/// smallest item comes first. With `reflect` as well (undirected graphs), a
/// sequence `(a, x_2, ..., x_k)` and its reversal `(a, x_k, ..., x_2)` describe
/// the same cyclic order, so only the one with `x_2 < x_k` is kept.
pub fn mark_sequences(n: usize, k: usize, reflect: bool, reduced: bool) -> Result<Vec<Vec<usize>>> {
    let count = sequence_count(n, k, reflect, reduced);
    if count > MAX_SEQUENCES {
        return Err(Error::TooLarge(format!("{count} sequences of length {k} over {n} items")));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![false; n];
    for first in 0..n {
        cur.push(first);
        used[first] = true;
        let lo = if reduced { first + 1 } else { 0 };
        extend(n, k, lo, reflect && reduced, &mut cur, &mut used, &mut out);
        used[first] = false;
        cur.pop();
    }
    Ok(out)
}

fn extend(
    n: usize,
    k: usize,
    lo: usize,
    reflect: bool,
    cur: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    if cur.len() == k {
        if !reflect || k < 3 || cur[1] < cur[k - 1] {
            out.push(cur.clone());
        }
        return;
    }
    for v in lo..n {
        if used[v] {
            continue;
        }
        used[v] = true;
        cur.push(v);
        extend(n, k, lo, reflect, cur, used, out);
        cur.pop();
        used[v] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    /// Canonical cyclic class of a sequence, by brute force over all rotations/reflections.
    fn class(s: &[usize], reflect: bool) -> Vec<usize> {
        let k = s.len();
        let mut variants = Vec::new();
        for r in 0..k {
            let rot: Vec<usize> = (0..k).map(|i| s[(r + i) % k]).collect();
            if reflect {
                let mut rev = rot.clone();
                rev.reverse();
                variants.push(rev);
            }
            variants.push(rot);
        }
        variants.into_iter().min().unwrap()
    }

    #[test]
    fn counts_match_formula() {
        for n in 1..8 {
            for k in 1..=n {
                for reflect in [false, true] {
                    for reduced in [false, true] {
                        let seqs = mark_sequences(n, k, reflect, reduced).unwrap();
                        assert_eq!(seqs.len() as u128, sequence_count(n, k, reflect, reduced), "n={n} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn reduced_sequences_are_one_per_class() {
        for n in 3..8 {
            for k in 1..=n.min(5) {
                for reflect in [false, true] {
                    let all = mark_sequences(n, k, reflect, false).unwrap();
                    let classes: BTreeSet<Vec<usize>> = all.iter().map(|s| class(s, reflect)).collect();
                    let reduced = mark_sequences(n, k, reflect, true).unwrap();
                    let reps: BTreeSet<Vec<usize>> = reduced.iter().map(|s| class(s, reflect)).collect();
                    assert_eq!(reduced.len(), reps.len(), "duplicates n={n} k={k}");
                    assert_eq!(reps, classes, "n={n} k={k} reflect={reflect}");
                }
            }
        }
    }

    #[test]
    fn lexicographic_order() {
        let seqs = mark_sequences(5, 3, true, true).unwrap();
        assert!(seqs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(seqs[0], vec![0, 1, 2]);
    }
}

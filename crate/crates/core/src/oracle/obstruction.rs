//! Neighbourhood-counting certificates that a graph is not t-ordered.

use serde::Serialize;

use super::mask::{bits, MaskGraph};
use crate::bracelet::BraceletGraph;
use crate::graph::{Adjacency, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionKind {
    /// `|S| = s`, `|N(S)| < 2s` and at least `s` vertices outside `S ∪ N(S)`:
    /// alternating the marks of `S` with `s` outside vertices needs `2s`
    /// distinct neighbours of `S`, so the graph is not `2s`-ordered.
    Alternating,
    /// `S` independent with `|N(S)| < |S|`: a cycle through all of `S` needs
    /// `|S|` distinct neighbours of `S`, so the graph is not `|S|`-ordered.
    Independent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionCertificate {
    pub kind: ObstructionKind,
    pub subset: Vec<VertexId>,
    pub neighborhood_size: usize,
    pub outside_count: usize,
    /// The graph is not `refuted_order`-ordered.
    pub refuted_order: usize,
}

impl ObstructionCertificate {
    /// Recomputes the counts on `g` and checks the certificate's inequalities.
    pub fn check(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let s = self.subset.len();
        if s == 0 || self.subset.iter().any(|&v| v >= n) {
            return false;
        }
        let mut inside = vec![false; n];
        for &v in &self.subset {
            if std::mem::replace(&mut inside[v], true) {
                return false;
            }
        }
        let mut nb = vec![false; n];
        for &v in &self.subset {
            for &w in g.out_neighbors(v) {
                if !inside[w] {
                    nb[w] = true;
                }
            }
        }
        let nsize = nb.iter().filter(|&&b| b).count();
        let outside = n - nsize - s;
        if nsize != self.neighborhood_size || outside != self.outside_count {
            return false;
        }
        match self.kind {
            ObstructionKind::Alternating => nsize < 2 * s && outside >= s && self.refuted_order == 2 * s,
            ObstructionKind::Independent => {
                let independent = self.subset.iter().all(|&v| g.out_neighbors(v).iter().all(|&w| !inside[w]));
                independent && nsize < s && self.refuted_order == s
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum ObstructionScope<'a> {
    /// Only whole parts of a bracelet (or their first `k` vertices when a part is larger).
    PartsOnly(&'a BraceletGraph),
    /// Every vertex subset of at most `max_size` vertices.
    AllSubsets { max_size: usize },
}

fn certificate(mg: &MaskGraph, kind: ObstructionKind, set: u64) -> Option<ObstructionCertificate> {
    let s = set.count_ones() as usize;
    let nb = mg.out_of(set) & !set;
    let nsize = nb.count_ones() as usize;
    let outside = mg.n - nsize - s;
    let ok = match kind {
        ObstructionKind::Alternating => nsize < 2 * s && outside >= s,
        ObstructionKind::Independent => mg.out_of(set) & set == 0 && nsize < s,
    };
    ok.then(|| ObstructionCertificate {
        kind,
        subset: bits(set).collect(),
        neighborhood_size: nsize,
        outside_count: outside,
        refuted_order: if kind == ObstructionKind::Alternating { 2 * s } else { s },
    })
}

/// Looks for a certificate refuting `2s`-orderedness for some `s <= k`
/// (alternating kind) or `t`-orderedness for some `t <= 2k + 1` (independent kind).
///
/// Alternating certificates are preferred, smaller subsets first; within a
/// size, subsets are tried in lexicographic order. Graphs above 64 vertices
/// yield `None`.
pub fn neighborhood_obstruction(g: &Graph, k: usize, scope: ObstructionScope<'_>) -> Option<ObstructionCertificate> {
    let mg = MaskGraph::new(g).ok()?;
    let to_mask = |vs: &[VertexId]| vs.iter().fold(0u64, |m, &v| m | (1 << v));
    match scope {
        ObstructionScope::PartsOnly(bg) => {
            let parts = bg.parts();
            let alternating = parts.iter().find_map(|p| {
                let take = p.len().min(k);
                certificate(&mg, ObstructionKind::Alternating, to_mask(&p[..take]))
            });
            alternating.or_else(|| {
                parts.iter().find_map(|p| {
                    let take = p.len().min(2 * k + 1);
                    certificate(&mg, ObstructionKind::Independent, to_mask(&p[..take]))
                })
            })
        }
        ObstructionScope::AllSubsets { max_size } => {
            let n = mg.n;
            (1..=k.min(max_size).min(n))
                .find_map(|s| first_subset(n, s, |set| certificate(&mg, ObstructionKind::Alternating, set)))
                .or_else(|| {
                    (1..=(2 * k + 1).min(max_size).min(n))
                        .find_map(|t| first_subset(n, t, |set| certificate(&mg, ObstructionKind::Independent, set)))
                })
        }
    }
}

/// Visits the `size`-subsets of `0..n` in lexicographic order until `f` returns a value.
fn first_subset<T>(n: usize, size: usize, mut f: impl FnMut(u64) -> Option<T>) -> Option<T> {
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        let set = idx.iter().fold(0u64, |m, &v| m | (1 << v));
        if let Some(t) = f(set) {
            return Some(t);
        }
        let mut i = size;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_counterexample, gen_g, gen_h};

    #[test]
    fn counterexample_big_part_is_certified() {
        let c = gen_counterexample(2, &[2]).unwrap();
        let g = c.bracelet.graph();
        for scope in [ObstructionScope::PartsOnly(&c.bracelet), ObstructionScope::AllSubsets { max_size: 5 }] {
            let cert = neighborhood_obstruction(g, 2, scope).unwrap();
            assert_eq!(cert.kind, ObstructionKind::Independent);
            assert_eq!(cert.neighborhood_size, 4);
            assert_eq!(cert.refuted_order, 5);
            assert!(cert.check(g));
        }
        let parts = neighborhood_obstruction(g, 2, ObstructionScope::PartsOnly(&c.bracelet)).unwrap();
        assert_eq!(parts.subset, c.bracelet.part(c.big_part));
    }

    #[test]
    fn uniform_bracelet_has_no_certificate() {
        let g = gen_g(2, 4).unwrap();
        assert_eq!(neighborhood_obstruction(g.graph(), 2, ObstructionScope::AllSubsets { max_size: 8 }), None);
    }

    #[test]
    fn single_vertex_part_is_not_enough() {
        let h = gen_h(2, 2).unwrap();
        // a size-1 part has 3 neighbours, and 2 * 1 <= 3
        let v = h.part(0)[0];
        let set = 1u64 << v;
        let mg = MaskGraph::new(h.graph()).unwrap();
        assert_eq!(certificate(&mg, ObstructionKind::Alternating, set), None);
    }

    #[test]
    fn subset_enumeration_is_complete() {
        let mut seen = Vec::new();
        let none: Option<()> = first_subset(5, 3, |s| {
            seen.push(s);
            None
        });
        assert!(none.is_none());
        assert_eq!(seen.len(), 10);
        assert_eq!(seen[0], 0b00111);
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let c = gen_counterexample(2, &[2]).unwrap();
        let g = c.bracelet.graph();
        let mut cert = neighborhood_obstruction(g, 2, ObstructionScope::PartsOnly(&c.bracelet)).unwrap();
        cert.neighborhood_size = 3;
        assert!(!cert.check(g));
    }
}

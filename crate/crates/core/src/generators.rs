//! Named bracelet families, built from integer parameters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bracelet::{build_bracelet, build_directed_bracelet, BraceletGraph, BraceletSpec, DirectedBracelet};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    /// Uniform parts of size k, even part count: 2k-regular.
    GUniform,
    /// Part sizes (k-1, k-1, k, k) repeated m times: (2k-1)-regular.
    HPattern,
    /// Part sizes (k-1, k-1, k, k+1, ..., k+1): minimum degree 2k-1.
    PLowDegree,
    /// Directed uniform bracelet with parts of size k-1: (k-1)-diregular.
    DirectedBracelet,
    /// Three consecutive parts of sizes k, 2k+1, k followed by filler parts.
    CounterexampleNeighborhood,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [
        FamilyId::GUniform,
        FamilyId::HPattern,
        FamilyId::PLowDegree,
        FamilyId::DirectedBracelet,
        FamilyId::CounterexampleNeighborhood,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::GUniform => "G",
            FamilyId::HPattern => "H",
            FamilyId::PLowDegree => "P",
            FamilyId::DirectedBracelet => "directed",
            FamilyId::CounterexampleNeighborhood => "counterexample",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParams(format!("unknown family `{s}`")))
    }
}

pub fn spec_g(k: usize, parts: usize) -> Result<BraceletSpec> {
    if k < 1 {
        return Err(Error::InvalidParams("G family needs k >= 1".into()));
    }
    if parts < 4 || parts % 2 == 1 {
        return Err(Error::InvalidParams(format!("G family needs an even part count >= 4, got {parts}")));
    }
    BraceletSpec::uniform(k, parts)
}

/// `G_{k,parts}`: `parts` parts of size `k`.
pub fn gen_g(k: usize, parts: usize) -> Result<BraceletGraph> {
    Ok(build_bracelet(&spec_g(k, parts)?))
}

pub fn spec_h(k: usize, m: usize) -> Result<BraceletSpec> {
    if k < 2 || m < 1 {
        return Err(Error::InvalidParams(format!("H family needs k >= 2 and m >= 1, got k={k}, m={m}")));
    }
    let sizes = (0..4 * m).map(|i| if i % 4 < 2 { k - 1 } else { k }).collect();
    BraceletSpec::new(sizes)
}

/// `H_{k,4m}`: 4m parts following the pattern k-1, k-1, k, k.
pub fn gen_h(k: usize, m: usize) -> Result<BraceletGraph> {
    Ok(build_bracelet(&spec_h(k, m)?))
}

pub fn spec_p(k: usize, m: usize) -> Result<BraceletSpec> {
    if k < 2 || m < 5 {
        return Err(Error::InvalidParams(format!("P family needs k >= 2 and m >= 5, got k={k}, m={m}")));
    }
    let sizes = (0..m)
        .map(|i| match i {
            0 | 1 => k - 1,
            2 => k,
            _ => k + 1,
        })
        .collect();
    BraceletSpec::new(sizes)
}

/// `P_{k,m}`: parts of sizes k-1, k-1, k and then k+1 for the remaining m-3 parts.
pub fn gen_p(k: usize, m: usize) -> Result<BraceletGraph> {
    Ok(build_bracelet(&spec_p(k, m)?))
}

pub fn spec_directed(k: usize, l: usize) -> Result<BraceletSpec> {
    if k < 2 || l < 3 {
        return Err(Error::InvalidParams(format!("directed family needs k >= 2 and l >= 3, got k={k}, l={l}")));
    }
    BraceletSpec::uniform(k - 1, l)
}

/// Directed bracelet on `l` parts of size `k - 1`.
pub fn gen_directed(k: usize, l: usize) -> Result<DirectedBracelet> {
    Ok(build_directed_bracelet(&spec_directed(k, l)?))
}

/// A bracelet whose middle special part cannot host `2k+1` ordered marks.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub bracelet: BraceletGraph,
    /// Index of the part of size `2k + 1`.
    pub big_part: usize,
}

pub fn spec_counterexample(k: usize, filler_parts: &[usize]) -> Result<BraceletSpec> {
    if k < 1 {
        return Err(Error::InvalidParams("counterexample needs k >= 1".into()));
    }
    if let Some(&s) = filler_parts.iter().find(|&&s| s < k) {
        return Err(Error::InvalidParams(format!("filler part of size {s} is smaller than k = {k}")));
    }
    let mut sizes = vec![k, 2 * k + 1, k];
    sizes.extend_from_slice(filler_parts);
    BraceletSpec::new(sizes)
}

pub fn gen_counterexample(k: usize, filler_parts: &[usize]) -> Result<Counterexample> {
    let spec = spec_counterexample(k, filler_parts)?;
    Ok(Counterexample { bracelet: build_bracelet(&spec), big_part: 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Adjacency, Graph};

    fn is_complete_bipartite(g: &Graph, a: usize) -> bool {
        let n = g.vertex_count();
        (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == ((u < a) != (v < a))))
    }

    #[test]
    fn g_family_examples() {
        assert_eq!(gen_g(1, 4).unwrap().graph(), &Graph::cycle(4).unwrap());
        let g = gen_g(2, 4).unwrap();
        assert_eq!((g.vertex_count(), g.graph().min_degree(), g.graph().max_degree()), (8, 4, 4));
        assert_eq!(gen_g(2, 6).unwrap().vertex_count(), 12);
        assert!(gen_g(2, 5).is_err());
        assert!(gen_g(2, 2).is_err());
    }

    #[test]
    fn h_family_examples() {
        // H_{k,4} is K_{2k-1,2k-1} once the parts are regrouped by parity
        for k in [2, 3] {
            let h = gen_h(k, 1).unwrap();
            let order: Vec<usize> = [0, 2, 1, 3].iter().flat_map(|&p| h.part(p).to_vec()).collect();
            let mut perm = vec![0; order.len()];
            for (new, &old) in order.iter().enumerate() {
                perm[old] = new;
            }
            let g = h.graph().relabel(&perm).unwrap();
            assert!(is_complete_bipartite(&g, 2 * k - 1), "H({k},1)");
        }
        let h = gen_h(2, 2).unwrap();
        assert_eq!(h.spec().part_sizes(), &[1, 1, 2, 2, 1, 1, 2, 2]);
        assert_eq!((h.graph().min_degree(), h.graph().max_degree()), (3, 3));
    }

    #[test]
    fn p_family_degree_profiles() {
        let p = gen_p(2, 5).unwrap();
        assert_eq!(p.spec().part_sizes(), &[1, 1, 2, 3, 3]);
        assert_eq!((p.vertex_count(), p.graph().min_degree(), p.graph().max_degree()), (10, 3, 5));
        let p = gen_p(2, 6).unwrap();
        assert_eq!(p.spec().part_sizes(), &[1, 1, 2, 3, 3, 3]);
        assert_eq!(p.graph().max_degree(), 6);
        // sizes 2,2,3,4,4,4: part degrees 6,5,6,7,8,6
        let p = gen_p(3, 6).unwrap();
        assert_eq!(p.spec().part_sizes(), &[2, 2, 3, 4, 4, 4]);
        assert_eq!((p.graph().min_degree(), p.graph().max_degree()), (5, 8));
        assert!(gen_p(2, 4).is_err());
    }

    #[test]
    fn p_minimum_attained_only_in_second_part() {
        for k in 2..5 {
            for m in 5..9 {
                let spec = spec_p(k, m).unwrap();
                let minimal: Vec<usize> =
                    (0..m).filter(|&i| spec.part_degree(i) == 2 * k - 1).collect();
                assert_eq!(minimal, vec![1]);
                let expected_max = if m >= 6 { 2 * k + 2 } else { 2 * k + 1 };
                assert_eq!(spec.max_degree(), expected_max);
            }
        }
    }

    #[test]
    fn directed_family() {
        let d = gen_directed(2, 4).unwrap();
        assert_eq!(d.graph(), &crate::graph::Digraph::directed_cycle(4).unwrap());
        let d = gen_directed(3, 4).unwrap();
        assert_eq!(d.vertex_count(), 8);
        for v in 0..8 {
            assert_eq!((d.graph().in_degree(v), d.graph().out_degree(v)), (2, 2));
        }
    }

    #[test]
    fn counterexample_shapes() {
        let c = gen_counterexample(2, &[2]).unwrap();
        assert_eq!(c.bracelet.spec().part_sizes(), &[2, 5, 2, 2]);
        assert_eq!(c.bracelet.part(c.big_part).len(), 5);
        assert_eq!(c.bracelet.spec().part_degree(c.big_part), 4);
        let c = gen_counterexample(1, &[1]).unwrap();
        assert_eq!(c.bracelet.spec().part_sizes(), &[1, 3, 1, 1]);
        assert_eq!(c.bracelet.spec().part_degree(1), 2);
        assert!(gen_counterexample(2, &[1]).is_err());
    }

    #[test]
    fn family_names_parse() {
        for f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>().unwrap(), f);
        }
        assert!("Q".parse::<FamilyId>().is_err());
    }
}

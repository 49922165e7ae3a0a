use crate::error::{Error, Result};
use crate::graph::Adjacency;

/// Adjacency as `u64` bitsets; limits exhaustive searches to 64 vertices.
#[derive(Debug, Clone)]
pub(crate) struct MaskGraph {
    pub n: usize,
    pub out: Vec<u64>,
    pub inn: Vec<u64>,
    pub directed: bool,
}

impl MaskGraph {
    pub fn new<G: Adjacency + ?Sized>(g: &G) -> Result<Self> {
        let n = g.vertex_count();
        if n > 64 {
            return Err(Error::TooLarge(format!("{n} vertices (limit 64)")));
        }
        let to_mask = |list: &[usize]| list.iter().fold(0u64, |m, &v| m | (1 << v));
        Ok(Self {
            n,
            out: (0..n).map(|v| to_mask(g.out_neighbors(v))).collect(),
            inn: (0..n).map(|v| to_mask(g.in_neighbors(v))).collect(),
            directed: g.is_directed(),
        })
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Out-neighbourhood of a vertex set.
    pub fn out_of(&self, set: u64) -> u64 {
        bits(set).fold(0, |acc, v| acc | self.out[v])
    }

    /// Vertices of `region` reachable from `from` by out-arcs while staying inside `region`.
    pub fn closure(&self, from: u64, region: u64) -> u64 {
        let mut reached = 0u64;
        let mut frontier = self.out_of(from) & region;
        while frontier != 0 {
            reached |= frontier;
            frontier = self.out_of(frontier) & region & !reached;
        }
        reached
    }
}

/// Iterates the set bits of `mask` in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

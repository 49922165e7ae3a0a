//! Exhaustive ground-truth checks for ordered cycles and tours.

mod cycle_search;
mod enumerate;
pub(crate) mod mask;
mod obstruction;
mod parity;
mod tour_search;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

pub use cycle_search::{find_ordered_cycle, has_hamiltonian_cycle, CycleSearch};
pub use enumerate::{mark_sequences, sequence_count};
pub use obstruction::{neighborhood_obstruction, ObstructionCertificate, ObstructionKind, ObstructionScope};
pub use parity::{parity_audit, ParityReport};
pub use tour_search::{find_ordered_tour, TourSearch};

use crate::error::{Error, Result};
use crate::graph::{Adjacency, VertexId};
use crate::witness::{verify_ordered_cycle, verify_tour, EdgeSequence, MarkSequence, OrderedCycle, Tour};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderMode {
    Ordered,
    OrderedHamiltonian,
    EdgeOrdered,
}

impl OrderMode {
    pub fn name(self) -> &'static str {
        match self {
            OrderMode::Ordered => "ordered",
            OrderMode::OrderedHamiltonian => "ordered-ham",
            OrderMode::EdgeOrdered => "edge-ordered",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    ResourceExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Cycle(OrderedCycle),
    Tour(Tour),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sequence {
    Marks(MarkSequence),
    Edges(EdgeSequence),
}

impl std::fmt::Display for Sequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sequence::Marks(m) => m.fmt(f),
            Sequence::Edges(e) => e.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub sequences_checked: u64,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Outcome of a k-orderedness sweep.
///
/// `Holds` carries the witness for the last sequence checked; `Fails` carries
/// the first failing sequence in enumeration order; `ResourceExceeded`
/// carries the sequence whose search ran out of budget in `unresolved`.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub order: usize,
    pub mode: OrderMode,
    pub status: Status,
    pub witness: Option<Witness>,
    pub counterexample: Option<Sequence>,
    pub unresolved: Option<Sequence>,
    pub stats: SearchStats,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }
}

#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    /// Search-node budget for each individual sequence.
    pub budget: u64,
    /// Enumerate sequences only up to rotation (and reflection when undirected).
    pub symmetry_reduction: bool,
    pub parallel: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, symmetry_reduction: true, parallel: true }
    }
}

enum One {
    Found(Witness, u64),
    Absent(u64),
    Exhausted,
}

/// Runs `check` over `seqs` in chunks, keeping the first non-success in sequence order.
fn sweep<S, F>(seqs: &[S], parallel: bool, check: F) -> Result<(Option<usize>, Option<Witness>, u64, u64, bool)>
where
    S: Sync,
    F: Fn(&S) -> Result<One> + Sync,
{
    let chunk = if parallel { 256 * rayon::current_num_threads().max(1) } else { 1024 };
    let mut nodes = 0u64;
    let mut checked = 0u64;
    let mut last = None;
    for (ci, block) in seqs.chunks(chunk).enumerate() {
        let results: Vec<Result<One>> = if parallel {
            block.par_iter().map(&check).collect()
        } else {
            block.iter().map(&check).collect()
        };
        // a definite failure anywhere beats an unresolved search earlier on
        let mut first_exhausted = None;
        for (i, r) in results.into_iter().enumerate() {
            let idx = ci * chunk + i;
            match r? {
                One::Found(w, n) => {
                    nodes += n;
                    checked += 1;
                    last = Some(w);
                }
                One::Absent(n) => {
                    nodes += n;
                    checked += 1;
                    return Ok((Some(idx), None, nodes, checked, false));
                }
                One::Exhausted => {
                    checked += 1;
                    first_exhausted.get_or_insert(idx);
                }
            }
        }
        if let Some(idx) = first_exhausted {
            return Ok((Some(idx), None, nodes, checked, true));
        }
    }
    Ok((None, last, nodes, checked, false))
}

/// Decides whether every sequence of `k` distinct vertices lies on a cycle in that
/// order (hamiltonian when `require_hamiltonian`).
pub fn is_k_ordered<G: Adjacency + Sync + ?Sized>(
    g: &G,
    k: usize,
    require_hamiltonian: bool,
    opts: OracleOptions,
) -> Result<Verdict> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return Err(Error::InvalidParams(format!("order k = {k} must lie in 1..={n}")));
    }
    let started = Instant::now();
    let mg = mask::MaskGraph::new(g)?;
    let seqs = mark_sequences(n, k, !g.is_directed(), opts.symmetry_reduction)?;
    let check = |s: &Vec<VertexId>| -> Result<One> {
        let marks = MarkSequence::new(s.clone(), n)?;
        match cycle_search::search_with_mask(&mg, &marks, require_hamiltonian, opts.budget) {
            Ok(CycleSearch { cycle: Some(c), nodes }) => {
                if let Err(v) = verify_ordered_cycle(g, &c, &marks, require_hamiltonian) {
                    return Err(Error::Internal(format!("oracle produced an invalid cycle for {marks}: {v}")));
                }
                Ok(One::Found(Witness::Cycle(c), nodes))
            }
            Ok(CycleSearch { cycle: None, nodes }) => Ok(One::Absent(nodes)),
            Err(Error::ResourceExceeded { .. }) => Ok(One::Exhausted),
            Err(e) => Err(e),
        }
    };
    let (bad, witness, nodes, checked, exhausted) = sweep(&seqs, opts.parallel, check)?;
    let mode = if require_hamiltonian { OrderMode::OrderedHamiltonian } else { OrderMode::Ordered };
    let seq_at = |i: usize| Sequence::Marks(MarkSequence::new(seqs[i].clone(), n).expect("enumerated marks are valid"));
    Ok(finish(k, mode, bad.map(seq_at), witness, exhausted, nodes, checked, started))
}

/// Decides whether every sequence of `k` distinct edges lies on a tour in that order.
pub fn is_k_edge_ordered<G: Adjacency + Sync + ?Sized>(g: &G, k: usize, opts: OracleOptions) -> Result<Verdict> {
    let edges = g.edges();
    let m = edges.len();
    if k == 0 || k > m {
        return Err(Error::InvalidParams(format!("order k = {k} must lie in 1..={m}")));
    }
    let started = Instant::now();
    let index = tour_search::EdgeIndex::new(g)?;
    let seqs = mark_sequences(m, k, !g.is_directed(), opts.symmetry_reduction)?;
    let to_edges = |s: &[usize]| -> EdgeSequence {
        EdgeSequence::new(s.iter().map(|&i| edges[i]).collect(), g).expect("enumerated edges are valid")
    };
    let check = |s: &Vec<usize>| -> Result<One> {
        let marks = to_edges(s);
        match tour_search::search_with_index(&index, &marks, opts.budget) {
            Ok(TourSearch { tour: Some(t), nodes }) => {
                if let Err(v) = verify_tour(g, &t, &marks) {
                    return Err(Error::Internal(format!("oracle produced an invalid tour for {marks}: {v}")));
                }
                Ok(One::Found(Witness::Tour(t), nodes))
            }
            Ok(TourSearch { tour: None, nodes }) => Ok(One::Absent(nodes)),
            Err(Error::ResourceExceeded { .. }) => Ok(One::Exhausted),
            Err(e) => Err(e),
        }
    };
    let (bad, witness, nodes, checked, exhausted) = sweep(&seqs, opts.parallel, check)?;
    let seq_at = |i: usize| Sequence::Edges(to_edges(&seqs[i]));
    Ok(finish(k, OrderMode::EdgeOrdered, bad.map(seq_at), witness, exhausted, nodes, checked, started))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    order: usize,
    mode: OrderMode,
    bad: Option<Sequence>,
    witness: Option<Witness>,
    exhausted: bool,
    nodes: u64,
    sequences_checked: u64,
    started: Instant,
) -> Verdict {
    let stats = SearchStats { sequences_checked, nodes, elapsed: started.elapsed() };
    let (status, counterexample, unresolved, witness) = match (bad, exhausted) {
        (None, _) => (Status::Holds, None, None, witness),
        (Some(s), false) => (Status::Fails, Some(s), None, None),
        (Some(s), true) => (Status::ResourceExceeded, None, Some(s), None),
    };
    Verdict { order, mode, status, witness, counterexample, unresolved, stats }
}

/// Dispatches on `mode`.
pub fn verdict<G: Adjacency + Sync + ?Sized>(g: &G, k: usize, mode: OrderMode, opts: OracleOptions) -> Result<Verdict> {
    match mode {
        OrderMode::Ordered => is_k_ordered(g, k, false, opts),
        OrderMode::OrderedHamiltonian => is_k_ordered(g, k, true, opts),
        OrderMode::EdgeOrdered => is_k_edge_ordered(g, k, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_g, gen_h};
    use crate::graph::{Digraph, Graph};

    fn serial() -> OracleOptions {
        OracleOptions { parallel: false, ..OracleOptions::default() }
    }

    #[test]
    fn small_uniform_bracelet_is_five_ordered_hamiltonian() {
        let g = gen_g(2, 4).unwrap();
        let v = is_k_ordered(g.graph(), 5, true, OracleOptions::default()).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!(v.witness.is_some());
    }

    #[test]
    fn h_pattern_is_not_four_ordered() {
        let h = gen_h(2, 2).unwrap();
        let v = is_k_ordered(h.graph(), 4, false, OracleOptions::default()).unwrap();
        assert_eq!(v.status, Status::Fails);
        let Some(Sequence::Marks(m)) = &v.counterexample else { panic!("expected a counterexample") };
        assert!(find_ordered_cycle(h.graph(), m, false, DEFAULT_BUDGET).unwrap().cycle.is_none());
    }

    #[test]
    fn k33_is_four_ordered_hamiltonian() {
        let k33 = gen_h(2, 1).unwrap();
        assert!(is_k_ordered(k33.graph(), 4, true, serial()).unwrap().holds());
    }

    #[test]
    fn cycle_is_three_ordered_but_not_four() {
        let c = Graph::cycle(5).unwrap();
        assert!(is_k_ordered(&c, 3, true, serial()).unwrap().holds());
        assert_eq!(is_k_ordered(&c, 4, false, serial()).unwrap().status, Status::Fails);
    }

    #[test]
    fn exhausted_budget_is_distinct_from_failure() {
        let g = gen_g(2, 4).unwrap();
        let opts = OracleOptions { budget: 1, ..serial() };
        let v = is_k_ordered(g.graph(), 5, true, opts).unwrap();
        assert_eq!(v.status, Status::ResourceExceeded);
        assert!(v.counterexample.is_none());
        assert!(v.unresolved.is_some());
    }

    #[test]
    fn first_failure_is_deterministic() {
        let h = gen_h(2, 2).unwrap();
        let a = is_k_ordered(h.graph(), 4, false, OracleOptions::default()).unwrap();
        let b = is_k_ordered(h.graph(), 4, false, serial()).unwrap();
        assert_eq!(a.counterexample, b.counterexample);
    }

    #[test]
    fn edge_orderedness_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(is_k_edge_ordered(&c4, 3, serial()).unwrap().holds());
        assert_eq!(is_k_edge_ordered(&c4, 4, serial()).unwrap().status, Status::Fails);
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(is_k_edge_ordered(&star, 1, serial()).unwrap().status, Status::Fails);
        assert!(is_k_edge_ordered(&Digraph::complete(4), 2, serial()).unwrap().holds());
    }

    #[test]
    fn order_must_fit() {
        assert!(is_k_ordered(&Graph::cycle(4).unwrap(), 5, false, serial()).is_err());
        assert!(is_k_ordered(&Graph::cycle(4).unwrap(), 0, false, serial()).is_err());
    }
}

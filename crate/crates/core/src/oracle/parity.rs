//! Bipartiteness of even-part bracelets and its hamiltonicity consequence.

use serde::Serialize;

use super::cycle_search::has_hamiltonian_cycle;
use crate::bracelet::BraceletGraph;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub part_count: usize,
    pub vertex_count: usize,
    /// False for bracelets with an odd number of parts, where no parity claim applies.
    pub applicable: bool,
    pub bipartite: bool,
    /// Result of the exhaustive hamiltonian search, run only when `vertex_count` is odd.
    pub hamiltonian: Option<bool>,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl ParityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// With an even number of parts, the bracelet is bipartite (part index parity),
/// so every cycle is even; with an odd vertex count on top, no hamiltonian cycle exists.
pub fn parity_audit(bg: &BraceletGraph, budget: u64) -> Result<ParityReport> {
    let m = bg.part_count();
    let n = bg.vertex_count();
    let bipartite = bg.graph().bipartition().is_some();
    let mut report = ParityReport {
        part_count: m,
        vertex_count: n,
        applicable: m % 2 == 0,
        bipartite,
        hamiltonian: None,
        violations: Vec::new(),
        notes: Vec::new(),
    };
    if !report.applicable {
        report.notes.push(format!("odd-part bracelet ({m} parts): parity audit not applicable"));
        return Ok(report);
    }
    if !bipartite {
        report.violations.push("even-part bracelet is not bipartite".into());
    }
    if n % 2 == 1 {
        let ham = has_hamiltonian_cycle(bg.graph(), budget)?.is_some();
        report.hamiltonian = Some(ham);
        if ham {
            report.violations.push(format!("hamiltonian cycle found on {n} vertices with {m} parts"));
        } else {
            report.notes.push("not hamiltonian-orderable for any k: no hamiltonian cycle".into());
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracelet::{build_bracelet, BraceletSpec};
    use crate::generators::gen_g;

    const BUDGET: u64 = 10_000_000;

    #[test]
    fn uniform_bracelet_is_clean() {
        let r = parity_audit(&gen_g(2, 4).unwrap(), BUDGET).unwrap();
        assert!(r.applicable && r.bipartite && r.ok());
        assert_eq!(r.hamiltonian, None);
    }

    #[test]
    fn odd_order_even_parts_is_not_hamiltonian() {
        let bg = build_bracelet(&BraceletSpec::new(vec![1, 2, 1, 1]).unwrap());
        let r = parity_audit(&bg, BUDGET).unwrap();
        assert_eq!(r.hamiltonian, Some(false));
        assert!(r.ok());
        assert!(r.notes.iter().any(|n| n.contains("not hamiltonian-orderable")));
    }

    #[test]
    fn odd_part_bracelet_is_not_applicable() {
        let bg = build_bracelet(&BraceletSpec::new(vec![1, 1, 1]).unwrap());
        let r = parity_audit(&bg, BUDGET).unwrap();
        assert!(!r.applicable);
        assert!(!r.bipartite);
    }
}

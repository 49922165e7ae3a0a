//! Polynomial-time builders for ordered (hamiltonian) cycles in the bracelet
//! families. Every builder re-verifies its output before returning it.

mod bracelet_cycle;
mod directed;
mod frame;
mod low_degree;
mod uniform;

pub use bracelet_cycle::{construct_bracelet_cycle, distance_two_precondition};
pub use directed::{construct_directed_hamiltonian, directed_grid, DirectedGrid};
pub use low_degree::construct_p_cycle;
pub use uniform::{
    construct_g_hamiltonian, construct_uniform_cycle, reroute_alpha, select_free_vertices, FreeVertexSelection,
    StarCertificate,
};

#[cfg(test)]
mod tests;

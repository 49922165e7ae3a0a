//! Ordered cycles and tours in bracelet graphs: generators, constructive
//! builders, exhaustive oracles, connectivity metrics and linkage-based tours.

pub mod bracelet;
pub mod constructive;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod linkage;
pub mod metrics;
pub mod oracle;
pub mod sampling;
pub mod suite;
pub mod witness;

pub use bracelet::{build_any_bracelet, build_bracelet, build_directed_bracelet, AnyBracelet, Bracelet, BraceletGraph, BraceletSpec, DirectedBracelet};
pub use error::{Error, Result};
pub use graph::{Adjacency, AnyGraph, Digraph, Graph, VertexId};
pub use witness::{verify_ordered_cycle, verify_tour, CycleViolation, EdgeSequence, MarkSequence, OrderedCycle, Tour, TourViolation};

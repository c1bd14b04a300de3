//! Loopless 2-connected plane multigraphs as rotation systems, their duals,
//! and the correspondence between bipartitions `{S, T}` of the vertex set
//! into two induced trees and Hamilton cycles of the dual.
//!
//! ```
//! use dualham::{fixtures, partition, solver};
//!
//! let k4 = fixtures::k4();
//! let found = solver::find_tree_partition(&k4, &Default::default());
//! let solver::SearchResult::Found(p) = found.result else { panic!() };
//! let cert = partition::partition_to_dual_cycle(&k4, &p).unwrap();
//! assert_eq!(cert.len(), k4.n_faces());
//! assert_eq!(partition::dual_cycle_to_partition(&k4, &cert).unwrap(), p);
//! ```

pub mod cli;
pub mod dsu;
pub mod duality;
pub mod edge_set;
pub mod export;
pub mod fixtures;
pub mod generator;
pub mod map;
pub mod partition;
pub mod pmap;
pub mod solver;

pub use duality::{dual, dual_graph, is_bond, is_cycle_edge_set, DualPair};
pub use edge_set::EdgeSet;
pub use map::{components, validate, FacialCycle, PlaneMultigraph, RotationSystem, ValidationFailure};
pub use partition::{Bipartition, Condition, HamiltonCycleCertificate};

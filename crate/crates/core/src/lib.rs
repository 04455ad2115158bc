//! Tools for studying graphs that avoid the square of a Hamilton cycle:
//! graph construction, isomorph-free enumeration, subgraph embedding,
//! spectral radius computation and closure operations.

pub mod catalog;
pub mod closure;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod spectral;
pub mod squareham;

pub use error::GraphError;
pub use family::{FamilyMember, GraphFamily, Provenance};
pub use graph::{DegreeStats, Graph, PlacementSpec};

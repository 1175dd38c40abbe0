//! Applications of the derived-graph machinery beyond plain domination:
//! set cover, k-distance domination via power graphs, per-vertex dominator
//! constraints, and local repair of a marking state under vertex insertions
//! and deletions.

mod constrained;
mod dynamic;
mod error;
mod kdom;
mod setcover;

pub use constrained::{constrained_alg1, ConstraintMap};
pub use dynamic::{dynamic_add_vertex, dynamic_remove_vertex, repair_region, RepairReport};
pub use error::ExtError;
pub use kdom::{k_dominating, k_dominating_with_limit, DEFAULT_MAX_POWER_EDGES};
pub use setcover::{set_cover, SetCoverInstance};

//! Dominating-set algorithms built on derived-graph covers.
//!
//! The pipeline: derive a multigraph whose per-vertex "corresponding edge"
//! joins two neighborhood candidates ([`derive`]), observe that any vertex
//! cover of it (total) dominates the source graph, and produce small covers
//! either by randomized priorities ([`carowei`]) or by iterated marking plus
//! a cover backend ([`marking`]). [`combine`] merges two existing solutions
//! through the same construction.
//!
//! All randomness flows through the counter-based [`rng::RngPolicy`], so
//! equal seeds replay identical runs.

pub mod carowei;
pub mod combine;
pub mod derive;
mod error;
pub mod marking;
pub mod rng;

pub use carowei::{alon_spencer_is, carowei_ds, carowei_tds, expected_independent_set_size};
pub use combine::{combine_solutions, CombineMode};
pub use derive::{
    build_g_dprime, build_g_prime, g_dprime_from_dominating_set,
    g_prime_from_total_dominating_set, FirstTwo, MaxDegreePair, PairChooser, RandomPair,
};
pub use error::AlgoError;
pub use marking::{
    alg1, alg2, alg2_outcome, build_g1_dprime, mark_r_values, mod1, mod2, Alg2Outcome, MarkState,
    Scope,
};
pub use rng::RngPolicy;

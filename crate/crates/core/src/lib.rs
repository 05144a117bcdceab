//! Positive semidefinite zero forcing: propagation, forcing numbers,
//! throttling, migration of forcing sets and small-order extremal searches.

mod error;
mod vertex_set;

pub mod canon;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod migration;
pub mod psd;
pub mod search;

#[cfg(test)]
mod oracle;

pub use canon::{are_isomorphic, canonical_form, canonical_label, enumerate_graphs, CanonicalLabel};
pub use error::{Error, Result};
pub use extremal::{
    classify_extremal, ng_pt_sum, ng_search, ng_z_sum, nordhaus_gaddum, throttling_number, zeta,
    ExtremalRecord,
};
pub use graph::{Graph, InducedSubgraph};
pub use graph6::{parse_graph6, read_corpus, write_graph6};
pub use migration::{MigrationStrategy, StrategyRegistry};
pub use psd::{
    component_pt, forcing_forest, is_psd_forcing_set, propagate, propagation_time, ForceEvent,
    PropagationSchedule,
};
pub use search::{psd_zero_forcing_number, pt_plus, pt_plus_k, Limits};
pub use vertex_set::VertexSet;

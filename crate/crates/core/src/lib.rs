//! Exact computation of Grundy domination invariants, zero forcing, and
//! related graph parameters on small graphs.

pub mod bitset;
pub mod error;
pub mod forcing;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod invariants;
pub mod random;
pub mod sequence;
pub mod verify;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result};
pub use forcing::{
    closure, forcing_set_from_z_sequence, is_k_forcing_set, is_zero_forcing_set, k_forcing_number,
    k_forcing_number_with, min_permutable_blocks, min_permutable_blocks_with, propagation_time,
    propagation_time_with, z_sequence_from_forcing, zero_forcing_number, zero_forcing_number_via_z_sequences,
    zero_forcing_number_with, Force, ForcingProcess, PermutableBlocks, PropagationTime,
};
pub use formulas::{predict, Invariant, Prediction};
pub use generators::{ExprTemplate, FamilySpec, GraphExpr, ProductKind};
pub use graph::{Graph, DEFAULT_SEARCH_LIMIT};
pub use hypergraph::{
    edge_cover_number, grundy_cover_number, grundy_cover_number_with, neighborhood_hypergraph, star_augment,
    verify_reduction_claim, verify_reduction_claim_with, BipartiteGraph, Hypergraph, ReductionCheck,
};
pub use invariants::{domination_number, independence_number, k_domination_number, vertex_cover_number};
pub use sequence::{
    grundy_number, grundy_number_with, k_z_grundy_number, k_z_grundy_number_with, verify_k_z_sequence,
    verify_sequence, GrundySequence, SearchOptions, SequenceState, Variant, Verdict,
};

//! Words over alphabets with more than two letters.

pub mod coverage;
pub mod general;
pub mod graph;
pub mod marking;
pub mod merge;
pub mod projection;

pub use coverage::{coverage_decide, parse_sets, uncovered_pair, Coverage};
pub use general::{
    frequency_order, general_bound, general_coefficients, reconstruct_general, CoefficientMap,
    GeneralReconstruction,
};
pub use graph::{build_graph, topo_sort_unique, MarkingGraph, Node, TopoOrder};
pub use marking::{find_k_valid_marking, k_valid_markings, MarkedWord};
pub use merge::{merge_scattered_factors, reconstruct_from_pairwise_projections, MergeOutcome};
pub use projection::{project, project_symbols, LetterBudget, Pair, ProjectionMap};

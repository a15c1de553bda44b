//! Language constructions: graph encodings, layered families, and the
//! bundled cubic-graph catalog.

mod catalog;
mod families;
mod graph;

pub use catalog::{catalog, catalog_dimacs, catalog_graph, GraphCatalogEntry};
pub use families::{
    encode_cubic_graph, graph_stretch_pattern, lemma5_language, prop4_language, theorem2_language, theorem3_language,
    theorem4_language, theorem4_layer_lengths, theorem4_stated_lengths, theorem5_language, theorem6_language,
    unary_language, uniform_length, TruncationSpec,
};
pub use graph::SimpleGraph;

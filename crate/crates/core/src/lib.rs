//! Situation-specific commonsense networks: sense disambiguation over a
//! lexical hierarchy, network generation from weighted concept relations,
//! and Bayesian logic network modeling and inference over the result.

pub mod bln;
pub mod disambiguation;
pub mod edges;
pub mod eval;
pub mod lexicon;
pub mod netgen;
pub mod pipeline;
pub mod relatedness;
pub mod text;

pub use bln::{BlnError, BlnModel, GroundNetwork};
pub use disambiguation::{disambiguate_edge, disambiguate_seeds, DisambiguationError, SenseAssignment};
pub use edges::{ConceptEdge, EdgeStore, RelationType};
pub use lexicon::{LexiconError, LexiconIndex, Pos, Synset, SynsetId};
pub use netgen::{ConceptGraph, ConceptNode, NodeKind, RelationEdge};
pub use relatedness::{EsaIndex, EsaProvider, RelatednessProvider};
pub use text::Stopwords;

//! Bayesian logic networks over the situated graph: a typed declaration,
//! per-node fragments with full conditional tables, simulated training
//! evidence, grounding per object, and exact or sampled inference.

mod evidence;
mod formula;
mod ground;
mod infer;
mod model;

pub use evidence::{edge_probability, learn_cpfs, simulate_evidence, topological_nodes, EvidenceSet, SimulationParams};
pub use formula::Formula;
pub use ground::{ground, GroundNetwork};
pub use infer::{
    clamp_constraints, infer_exact, infer_gibbs, infer_lw, marginals, marginals_gibbs, marginals_lw, Estimate,
    Evidence, InferenceParams, Method, EXACT_LIMIT,
};
pub use model::{
    model_from_graph, row_index, variable_of, Atom, BlnModel, Declaration, Fragment, DEFAULT_MAX_PARENTS, META_VAR,
    OBJECT_TYPE,
};

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum BlnError {
    #[error("model line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("{0}")]
    Formula(String),
    #[error("invalid model: {0}")]
    Invalid(String),
    #[error("node {node} has {parents} parents, more than the limit of {limit}")]
    TooDense { node: String, parents: usize, limit: usize },
    #[error("cycle: {}", .0.join(" -> "))]
    Cycle(Vec<String>),
    #[error("{variables} unobserved variables exceed the exact-inference limit of {limit}; use lw or gibbs")]
    TooLarge { variables: usize, limit: usize },
    #[error("variable {0} has a deterministic table row; gibbs sampling needs it clamped or use lw")]
    Ergodicity(String),
    #[error("evidence has zero probability")]
    ZeroProbabilityEvidence,
    #[error("evidence does not cover variable {0}")]
    MissingEvidenceVariable(String),
    #[error("grounding needs at least one object")]
    NoObjects,
}

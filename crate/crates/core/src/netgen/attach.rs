use log::debug;

use super::{ConceptGraph, ConceptNode, NodeKind};
use crate::disambiguation::{disambiguate_edge, SenseAssignment};
use crate::edges::{normalized_weight, EdgeStore, RelationType};
use crate::lexicon::LexiconIndex;
use crate::relatedness::RelatednessProvider;
use crate::text::{normalize_term, Stopwords};

/// Counts of relation edges considered and why they were dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AttachReport {
    pub considered: usize,
    pub added: usize,
    pub unknown_term: usize,
    pub sense_mismatch: usize,
    pub degenerate_weight: usize,
}

const ATTACHED: [RelationType; 3] = [
    RelationType::UsedFor,
    RelationType::HasProperty,
    RelationType::AtLocation,
];

/// Id for a new destination node: the bare term, or `term:kind` when the term
/// is already used by a node of another kind.
fn destination_id(graph: &ConceptGraph, term: &str, kind: NodeKind) -> String {
    match graph.nodes.get(term) {
        Some(n) if n.kind != kind => format!("{term}:{kind}"),
        _ => term.to_string(),
    }
}

/// Adds UsedFor, HasProperty and AtLocation edges leaving every concept node.
///
/// The end term's sense is chosen against the start term. When the start is
/// a seed, the start's sense chosen against the end term must match the seed's
/// assigned sense, otherwise the edge belongs to another sense and is dropped.
pub fn attach_relations<P: RelatednessProvider + ?Sized>(
    graph: &ConceptGraph,
    store: &EdgeStore,
    lexicon: &LexiconIndex,
    provider: &P,
    stopwords: &Stopwords,
    assignment: &SenseAssignment,
) -> (ConceptGraph, AttachReport) {
    let mut g = graph.clone();
    let mut report = AttachReport::default();
    let concepts: Vec<ConceptNode> = graph
        .nodes
        .values()
        .filter(|n| n.kind == NodeKind::Concept)
        .cloned()
        .collect();

    for c in &concepts {
        let c_term = c.term();
        for relation in ATTACHED {
            for edge in store.starting_at(c_term, relation) {
                report.considered += 1;
                let Ok((d_sense, _)) = disambiguate_edge(c_term, &edge.end, lexicon, provider, stopwords) else {
                    debug!("dropping {}({}, {}): unknown end term", relation, c_term, edge.end);
                    report.unknown_term += 1;
                    continue;
                };
                if c.is_seed {
                    let expected = assignment.sense_of(&c.id).or(c.synset);
                    let reverse = disambiguate_edge(&edge.end, c_term, lexicon, provider, stopwords)
                        .ok()
                        .map(|(s, _)| s);
                    if reverse != expected {
                        debug!("dropping {}({}, {}): start sense mismatch", relation, c_term, edge.end);
                        report.sense_mismatch += 1;
                        continue;
                    }
                }
                let Ok(strength) = normalized_weight(edge, store) else {
                    report.degenerate_weight += 1;
                    continue;
                };
                let kind = NodeKind::for_relation(relation);
                let term = normalize_term(&edge.end);
                let id = destination_id(&g, &term, kind);
                g.nodes.entry(id.clone()).or_insert_with(|| ConceptNode {
                    id: id.clone(),
                    kind,
                    synset: Some(d_sense),
                    is_seed: false,
                });
                g.add_edge(&c.id, relation, &id, strength);
                report.added += 1;
            }
        }
    }
    g.sort_edges();
    (g, report)
}

/// True if the store says `term` is found in the environment, or it is the
/// environment.
pub fn in_environment(store: &EdgeStore, term: &str, environment: &str) -> bool {
    term == environment || store.contains(term, RelationType::AtLocation, environment)
}

/// Extends each first-hop location with its own store locations, then keeps
/// only locations inside `environment` and drops whatever no seed reaches.
///
/// A second-hop edge's strength is the product of the strongest first-hop
/// edge into its source and its own normalized weight.
pub fn attach_locations_two_hop(graph: &ConceptGraph, store: &EdgeStore, environment: &str) -> ConceptGraph {
    let mut g = graph.clone();
    let env = normalize_term(environment);
    g.environment = env.clone();

    let mut hop1: Vec<(String, f64)> = Vec::new();
    for e in g.edges_of(RelationType::AtLocation) {
        if g.nodes[&e.src].kind != NodeKind::Concept {
            continue;
        }
        match hop1.iter_mut().find(|(id, _)| *id == e.dst) {
            Some((_, s)) => *s = s.max(e.strength),
            None => hop1.push((e.dst.clone(), e.strength)),
        }
    }
    hop1.sort_by(|a, b| a.0.cmp(&b.0));

    for (loc, incoming) in &hop1 {
        let term = g.nodes[loc].term().to_string();
        for edge in store.starting_at(&term, RelationType::AtLocation) {
            let l2 = normalize_term(&edge.end);
            if l2 == term {
                continue;
            }
            let Ok(w) = normalized_weight(edge, store) else {
                continue;
            };
            let id = destination_id(&g, &l2, NodeKind::Location);
            if g.nodes.contains_key(&id) && g.reaches(&id, loc, RelationType::AtLocation) {
                continue;
            }
            let existing = g.nodes.get(&id).and_then(|n| n.synset);
            g.nodes.entry(id.clone()).or_insert_with(|| ConceptNode {
                id: id.clone(),
                kind: NodeKind::Location,
                synset: existing,
                is_seed: false,
            });
            g.add_edge(loc, RelationType::AtLocation, &id, incoming * w);
        }
    }

    let pruned: Vec<String> = g
        .nodes
        .values()
        .filter(|n| n.kind == NodeKind::Location && !in_environment(store, n.term(), &env))
        .map(|n| n.id.clone())
        .collect();
    for id in pruned {
        debug!("pruning location {id}: not in {env}");
        g.remove_node(&id);
    }
    g.remove_orphans();
    g.sort_edges();
    g
}

use std::collections::{BTreeMap, BTreeSet};

use super::{ConceptGraph, ConceptNode, NodeKind};
use crate::disambiguation::SenseAssignment;
use crate::edges::RelationType;
use crate::lexicon::{LexiconIndex, SynsetId};

/// Builds the IsA graph from every chosen seed sense up to the roots.
///
/// Seed nodes are named by the seed word, other synsets by their first lemma.
/// A name already taken by a different synset gets a `:<synset id>` suffix.
pub fn add_isa_paths(assignment: &SenseAssignment, lexicon: &LexiconIndex) -> ConceptGraph {
    let mut graph = ConceptGraph::default();
    let mut node_of: BTreeMap<SynsetId, String> = BTreeMap::new();

    for choice in &assignment.choices {
        graph.nodes.insert(
            choice.word.clone(),
            ConceptNode {
                id: choice.word.clone(),
                kind: NodeKind::Concept,
                synset: Some(choice.synset),
                is_seed: true,
            },
        );
        node_of.entry(choice.synset).or_insert_with(|| choice.word.clone());
    }

    let closure: BTreeSet<SynsetId> = assignment
        .choices
        .iter()
        .flat_map(|c| lexicon.ancestors(c.synset))
        .collect();

    for &id in &closure {
        if node_of.contains_key(&id) {
            continue;
        }
        let Some(synset) = lexicon.synset(id) else { continue };
        let lemma = synset.head_lemma();
        let name = if graph.nodes.contains_key(lemma) {
            format!("{lemma}:{id}")
        } else {
            lemma.to_string()
        };
        graph.nodes.insert(
            name.clone(),
            ConceptNode {
                id: name.clone(),
                kind: NodeKind::Concept,
                synset: Some(id),
                is_seed: false,
            },
        );
        node_of.insert(id, name);
    }

    let link = |graph: &mut ConceptGraph, from: &str, id: SynsetId| {
        if let Some(s) = lexicon.synset(id) {
            for h in &s.hypernyms {
                if let Some(parent) = node_of.get(h) {
                    graph.add_edge(from, RelationType::IsA, parent, 1.0);
                }
            }
        }
    };
    for (&id, name) in &node_of {
        link(&mut graph, name, id);
    }
    // Seeds that share a sense with an earlier seed get their own parents.
    for choice in &assignment.choices {
        if node_of.get(&choice.synset) != Some(&choice.word) {
            link(&mut graph, &choice.word, choice.synset);
        }
    }
    graph.sort_edges();
    graph
}

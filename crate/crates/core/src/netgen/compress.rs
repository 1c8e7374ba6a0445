use std::collections::{BTreeMap, BTreeSet};

use super::{ConceptGraph, NodeKind};
use crate::edges::RelationType;
use crate::lexicon::{information_content, CorpusFrequencies};

pub const DEFAULT_BLOCKLIST: [&str; 3] = ["entity", "abstraction", "physical_entity"];

#[derive(Debug, Clone, PartialEq)]
pub struct CompressOptions {
    pub min_children: usize,
    pub ic_threshold: f64,
    /// Names removed regardless of their information content.
    pub blocklist: BTreeSet<String>,
}

impl Default for CompressOptions {
    fn default() -> Self {
        CompressOptions {
            min_children: 2,
            ic_threshold: 5.0,
            blocklist: DEFAULT_BLOCKLIST.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// Shrinks the IsA hierarchy with three rules applied in order until a full
/// pass changes nothing:
///
/// 1. remove general nodes (low information content or blocklisted);
/// 2. bottom-up, remove interior nodes with fewer than `min_children` children;
/// 3. remove a child whose name is a token run inside its parent's name.
///
/// Seeds are never removed. A removed node's children are linked to its parents.
pub fn compress(graph: &ConceptGraph, freq: &CorpusFrequencies, opts: &CompressOptions) -> ConceptGraph {
    let mut g = graph.clone();
    loop {
        let before = g.nodes.len();
        remove_general(&mut g, freq, opts);
        remove_sparse(&mut g, opts.min_children);
        remove_contained(&mut g);
        if g.nodes.len() == before {
            break;
        }
    }
    g.sort_edges();
    g
}

fn removable(g: &ConceptGraph, id: &str) -> bool {
    g.nodes
        .get(id)
        .is_some_and(|n| !n.is_seed && n.kind == NodeKind::Concept)
}

fn remove_general(g: &mut ConceptGraph, freq: &CorpusFrequencies, opts: &CompressOptions) {
    let doomed: Vec<String> = g
        .nodes
        .values()
        .filter(|n| removable(g, &n.id))
        .filter(|n| opts.blocklist.contains(n.term()) || information_content(n.term(), freq) < opts.ic_threshold)
        .map(|n| n.id.clone())
        .collect();
    for id in doomed {
        g.splice_out(&id);
    }
}

/// Longest downward path to a leaf, per concept node.
fn heights(g: &ConceptGraph) -> BTreeMap<String, usize> {
    fn visit(g: &ConceptGraph, id: &str, memo: &mut BTreeMap<String, usize>) -> usize {
        if let Some(&h) = memo.get(id) {
            return h;
        }
        let h = g
            .isa_children(id)
            .iter()
            .map(|c| visit(g, c, memo) + 1)
            .max()
            .unwrap_or(0);
        memo.insert(id.to_string(), h);
        h
    }
    let mut memo = BTreeMap::new();
    for id in g.nodes.keys() {
        visit(g, id, &mut memo);
    }
    memo
}

fn remove_sparse(g: &mut ConceptGraph, min_children: usize) {
    let h = heights(g);
    let mut order: Vec<(usize, String)> = h.into_iter().map(|(id, h)| (h, id)).collect();
    order.sort();
    for (_, id) in order {
        if !removable(g, &id) || g.isa_parents(&id).is_empty() {
            continue;
        }
        if g.isa_children(&id).len() < min_children {
            g.splice_out(&id);
        }
    }
}

fn contains_tokens(outer: &str, inner: &str) -> bool {
    let outer: Vec<&str> = outer.split('_').collect();
    let inner: Vec<&str> = inner.split('_').collect();
    inner.len() <= outer.len() && outer.windows(inner.len()).any(|w| w == inner.as_slice())
}

fn remove_contained(g: &mut ConceptGraph) {
    loop {
        let hit = g
            .edges_of(RelationType::IsA)
            .filter(|e| removable(g, &e.src))
            .find(|e| contains_tokens(g.nodes[&e.dst].term(), g.nodes[&e.src].term()))
            .map(|e| e.src.clone());
        match hit {
            Some(id) => g.splice_out(&id),
            None => break,
        }
    }
}

//! The situated concept graph: IsA ancestry of the seeds, hierarchy
//! compression, and disambiguated relation attachment.

mod attach;
mod compress;
mod isa;

pub use attach::{attach_locations_two_hop, attach_relations, in_environment, AttachReport};
pub use compress::{compress, CompressOptions, DEFAULT_BLOCKLIST};
pub use isa::add_isa_paths;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::edges::RelationType;
use crate::lexicon::SynsetId;
use crate::text::base_term;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("edge {relation}({src}, {dst}) references a missing node")]
    DanglingEdge {
        relation: RelationType,
        src: String,
        dst: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    Concept,
    Property,
    Location,
    Affordance,
}

impl NodeKind {
    pub const ALL: [NodeKind; 4] = [
        NodeKind::Concept,
        NodeKind::Property,
        NodeKind::Location,
        NodeKind::Affordance,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NodeKind::Concept => "concept",
            NodeKind::Property => "property",
            NodeKind::Location => "location",
            NodeKind::Affordance => "affordance",
        }
    }

    /// Kind of the destination node of a relation.
    pub fn for_relation(relation: RelationType) -> NodeKind {
        match relation {
            RelationType::IsA => NodeKind::Concept,
            RelationType::AtLocation => NodeKind::Location,
            RelationType::HasProperty => NodeKind::Property,
            RelationType::UsedFor => NodeKind::Affordance,
        }
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NodeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NodeKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown node kind {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConceptNode {
    pub id: String,
    pub kind: NodeKind,
    pub synset: Option<SynsetId>,
    pub is_seed: bool,
}

impl ConceptNode {
    /// The term this node stands for, without any disambiguating suffix.
    pub fn term(&self) -> &str {
        base_term(&self.id)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationEdge {
    pub src: String,
    pub relation: RelationType,
    pub dst: String,
    pub strength: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConceptGraph {
    pub nodes: BTreeMap<String, ConceptNode>,
    pub edges: Vec<RelationEdge>,
    pub environment: String,
}

impl ConceptGraph {
    pub fn node(&self, id: &str) -> Option<&ConceptNode> {
        self.nodes.get(id)
    }

    pub fn seeds(&self) -> impl Iterator<Item = &ConceptNode> {
        self.nodes.values().filter(|n| n.is_seed)
    }

    pub fn edge(&self, relation: RelationType, src: &str, dst: &str) -> Option<&RelationEdge> {
        self.edges
            .iter()
            .find(|e| e.relation == relation && e.src == src && e.dst == dst)
    }

    /// Inserts or, when the triple exists, keeps the larger strength.
    pub fn add_edge(&mut self, src: &str, relation: RelationType, dst: &str, strength: f64) {
        if let Some(e) = self
            .edges
            .iter_mut()
            .find(|e| e.relation == relation && e.src == src && e.dst == dst)
        {
            e.strength = e.strength.max(strength);
            return;
        }
        self.edges.push(RelationEdge {
            src: src.to_string(),
            relation,
            dst: dst.to_string(),
            strength,
        });
    }

    pub fn edges_of(&self, relation: RelationType) -> impl Iterator<Item = &RelationEdge> {
        self.edges.iter().filter(move |e| e.relation == relation)
    }

    pub fn isa_parents(&self, id: &str) -> Vec<String> {
        self.edges_of(RelationType::IsA)
            .filter(|e| e.src == id)
            .map(|e| e.dst.clone())
            .collect()
    }

    pub fn isa_children(&self, id: &str) -> Vec<String> {
        self.edges_of(RelationType::IsA)
            .filter(|e| e.dst == id)
            .map(|e| e.src.clone())
            .collect()
    }

    /// Removes a node and every edge touching it.
    pub fn remove_node(&mut self, id: &str) -> Option<ConceptNode> {
        self.edges.retain(|e| e.src != id && e.dst != id);
        self.nodes.remove(id)
    }

    /// Removes an IsA node, linking each of its children to each of its
    /// parents.
    pub fn splice_out(&mut self, id: &str) {
        let parents = self.isa_parents(id);
        let children = self.isa_children(id);
        self.remove_node(id);
        for c in children.iter().filter(|c| *c != id) {
            for p in parents.iter().filter(|p| *p != id) {
                if c != p {
                    self.add_edge(c, RelationType::IsA, p, 1.0);
                }
            }
        }
    }

    /// Ids reachable from any seed along edge direction.
    pub fn reachable_from_seeds(&self) -> BTreeSet<String> {
        let mut out: BTreeSet<String> = self.seeds().map(|n| n.id.clone()).collect();
        let mut queue: VecDeque<String> = out.iter().cloned().collect();
        while let Some(id) = queue.pop_front() {
            for e in self.edges.iter().filter(|e| e.src == id) {
                if out.insert(e.dst.clone()) {
                    queue.push_back(e.dst.clone());
                }
            }
        }
        out
    }

    /// Drops every node no seed can reach. Returns how many were removed.
    pub fn remove_orphans(&mut self) -> usize {
        let keep = self.reachable_from_seeds();
        let doomed: Vec<String> = self.nodes.keys().filter(|id| !keep.contains(*id)).cloned().collect();
        for id in &doomed {
            self.remove_node(id);
        }
        doomed.len()
    }

    /// True if `to` can be reached from `from` along edges of `relation`.
    pub fn reaches(&self, from: &str, to: &str, relation: RelationType) -> bool {
        let mut seen = BTreeSet::from([from.to_string()]);
        let mut stack = vec![from.to_string()];
        while let Some(id) = stack.pop() {
            if id == to {
                return true;
            }
            for e in self.edges_of(relation).filter(|e| e.src == id) {
                if seen.insert(e.dst.clone()) {
                    stack.push(e.dst.clone());
                }
            }
        }
        false
    }

    /// Canonical edge order: relation name, then source, then destination.
    pub fn sort_edges(&mut self) {
        self.edges
            .sort_by(|a, b| (a.relation.as_str(), &a.src, &a.dst).cmp(&(b.relation.as_str(), &b.src, &b.dst)));
    }

    /// Checks endpoint resolution, IsA acyclicity and edge/kind agreement.
    pub fn validate(&self) -> Result<(), String> {
        for e in &self.edges {
            let (Some(s), Some(d)) = (self.nodes.get(&e.src), self.nodes.get(&e.dst)) else {
                return Err(format!("dangling edge {}({}, {})", e.relation, e.src, e.dst));
            };
            if !(0.0..=1.0).contains(&e.strength) {
                return Err(format!("strength {} out of range", e.strength));
            }
            let expected = NodeKind::for_relation(e.relation);
            if d.kind != expected {
                return Err(format!("{} destination {} has kind {}", e.relation, d.id, d.kind));
            }
            if e.relation == RelationType::IsA && (s.kind != NodeKind::Concept || e.strength != 1.0) {
                return Err(format!("bad IsA edge {} -> {}", e.src, e.dst));
            }
            if e.relation == RelationType::IsA && self.reaches(&e.dst, &e.src, RelationType::IsA) {
                return Err(format!("IsA cycle through {}", e.src));
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut g = self.clone();
        g.sort_edges();
        let mut out = String::new();
        let _ = writeln!(out, "ENVIRONMENT\t{}", g.environment);
        for n in g.nodes.values() {
            let synset = n.synset.map_or_else(|| "-".to_string(), |s| s.to_string());
            let _ = writeln!(out, "NODE\t{}\t{}\t{}\t{}", n.id, n.kind, synset, u8::from(n.is_seed));
        }
        for e in &g.edges {
            let _ = writeln!(out, "EDGE\t{}\t{}\t{}\t{}", e.relation, e.src, e.dst, e.strength);
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, GraphError> {
        let mut g = ConceptGraph::default();
        for (i, line) in text.lines().enumerate() {
            let err = |m: String| GraphError::Format {
                line: i + 1,
                message: m,
            };
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split('\t').collect();
            match (f[0], f.len()) {
                ("ENVIRONMENT", 2) => g.environment = f[1].to_string(),
                ("NODE", 5) => {
                    let kind = f[2].parse().map_err(err)?;
                    let synset = match f[3] {
                        "-" => None,
                        s => Some(s.parse().map_err(|e: String| err(e))?),
                    };
                    let is_seed = match f[4] {
                        "1" => true,
                        "0" => false,
                        other => return Err(err(format!("bad seed flag {other:?}"))),
                    };
                    if g.nodes.contains_key(f[1]) {
                        return Err(err(format!("duplicate node {:?}", f[1])));
                    }
                    g.nodes.insert(
                        f[1].to_string(),
                        ConceptNode {
                            id: f[1].to_string(),
                            kind,
                            synset,
                            is_seed,
                        },
                    );
                }
                ("EDGE", 5) => {
                    let relation = f[1].parse().map_err(err)?;
                    let strength: f64 = f[4].parse().map_err(|_| err(format!("bad strength {:?}", f[4])))?;
                    g.edges.push(RelationEdge {
                        src: f[2].to_string(),
                        relation,
                        dst: f[3].to_string(),
                        strength,
                    });
                }
                _ => return Err(err(format!("unrecognized record {line:?}"))),
            }
        }
        for e in &g.edges {
            if !g.nodes.contains_key(&e.src) || !g.nodes.contains_key(&e.dst) {
                return Err(GraphError::DanglingEdge {
                    relation: e.relation,
                    src: e.src.clone(),
                    dst: e.dst.clone(),
                });
            }
        }
        Ok(g)
    }
}

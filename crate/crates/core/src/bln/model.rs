use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use super::{BlnError, Formula};
use crate::edges::RelationType;
use crate::netgen::{ConceptGraph, ConceptNode, NodeKind};

pub const OBJECT_TYPE: &str = "object";
/// Name of the object meta-variable in generated fragments.
pub const META_VAR: &str = "x";
pub const DEFAULT_MAX_PARENTS: usize = 12;

/// A predicate applied to arguments, e.g. `IsA(x,garlic)`. Arguments that
/// are not declared entities are meta-variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub relation: RelationType,
    pub args: Vec<String>,
}

impl Atom {
    pub fn new(relation: RelationType, object: &str, target: &str) -> Atom {
        Atom {
            relation,
            args: vec![object.to_string(), target.to_string()],
        }
    }

    /// Replaces every argument found in `binding`.
    pub fn substitute(&self, binding: &BTreeMap<String, String>) -> Atom {
        Atom {
            relation: self.relation,
            args: self
                .args
                .iter()
                .map(|a| binding.get(a).cloned().unwrap_or_else(|| a.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.relation, self.args.join(","))
    }
}

impl FromStr for Atom {
    type Err = BlnError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BlnError::Formula(format!("malformed atom {s:?}"));
        let s = s.trim();
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let relation = name.trim().parse().map_err(BlnError::Formula)?;
        let args: Vec<String> = inner.split(',').map(|a| a.trim().to_string()).collect();
        if args.iter().any(|a| a.is_empty() || a.contains(['(', ')'])) {
            return Err(bad());
        }
        Ok(Atom { relation, args })
    }
}

/// Types, predicate signatures and typed entities.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Declaration {
    pub types: BTreeSet<String>,
    pub signatures: BTreeMap<RelationType, Vec<String>>,
    pub entities: BTreeMap<String, BTreeSet<String>>,
}

impl Declaration {
    /// The five types and four binary signatures every situation model uses.
    pub fn standard() -> Declaration {
        let mut d = Declaration::default();
        d.types.insert(OBJECT_TYPE.to_string());
        for kind in NodeKind::ALL {
            d.types.insert(kind.as_str().to_string());
        }
        for relation in RelationType::ALL {
            let target = NodeKind::for_relation(relation).as_str().to_string();
            d.signatures.insert(relation, vec![OBJECT_TYPE.to_string(), target]);
        }
        d
    }

    pub fn is_entity(&self, name: &str) -> bool {
        self.entities.contains_key(name)
    }

    pub fn add_entity(&mut self, name: &str, ty: &str) {
        self.entities
            .entry(name.to_string())
            .or_default()
            .insert(ty.to_string());
    }

    /// Arguments of `atom` that are meta-variables.
    pub fn variables_of<'a>(&'a self, atom: &'a Atom) -> impl Iterator<Item = &'a str> + 'a {
        atom.args.iter().map(String::as_str).filter(|a| !self.is_entity(a))
    }

    pub fn check_atom(&self, atom: &Atom) -> Result<(), BlnError> {
        let sig = self
            .signatures
            .get(&atom.relation)
            .ok_or_else(|| BlnError::Invalid(format!("no signature for {}", atom.relation)))?;
        if sig.len() != atom.args.len() {
            return Err(BlnError::Invalid(format!(
                "{atom}: {} takes {} arguments",
                atom.relation,
                sig.len()
            )));
        }
        for (arg, ty) in atom.args.iter().zip(sig) {
            if let Some(types) = self.entities.get(arg) {
                if !types.contains(ty) {
                    return Err(BlnError::Invalid(format!("{atom}: {arg} is not a {ty}")));
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), BlnError> {
        for (rel, params) in &self.signatures {
            if let Some(t) = params.iter().find(|t| !self.types.contains(*t)) {
                return Err(BlnError::Invalid(format!("signature {rel} uses unknown type {t}")));
            }
        }
        for (name, types) in &self.entities {
            if types.is_empty() {
                return Err(BlnError::Invalid(format!("entity {name} has no type")));
            }
            if let Some(t) = types.iter().find(|t| !self.types.contains(*t)) {
                return Err(BlnError::Invalid(format!("entity {name} has unknown type {t}")));
            }
        }
        Ok(())
    }
}

/// Conditional dependence of `child` on `parents`. `cpf[r]` is P(child) for
/// the parent configuration whose bits read `r` with the first parent as
/// the most significant bit.
#[derive(Debug, Clone, PartialEq)]
pub struct Fragment {
    pub child: Atom,
    pub parents: Vec<Atom>,
    pub cpf: Vec<f64>,
    /// Excluded from learning; the table is kept as given.
    pub fixed: bool,
}

impl Fragment {
    pub fn uniform(child: Atom, parents: Vec<Atom>) -> Fragment {
        let rows = 1usize << parents.len();
        Fragment {
            child,
            parents,
            cpf: vec![0.5; rows],
            fixed: false,
        }
    }
}

/// Row index of a parent configuration, first parent most significant.
pub fn row_index(values: impl IntoIterator<Item = bool>) -> usize {
    values.into_iter().fold(0, |acc, v| (acc << 1) | usize::from(v))
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BlnModel {
    pub declaration: Declaration,
    pub fragments: Vec<Fragment>,
    pub constraints: Vec<Formula>,
}

impl BlnModel {
    pub fn fragment(&self, child: &Atom) -> Option<&Fragment> {
        self.fragments.iter().find(|f| &f.child == child)
    }

    pub fn validate(&self) -> Result<(), BlnError> {
        self.declaration.validate()?;
        let mut seen = BTreeSet::new();
        for f in &self.fragments {
            for a in std::iter::once(&f.child).chain(&f.parents) {
                self.declaration.check_atom(a)?;
            }
            if !seen.insert(&f.child) {
                return Err(BlnError::Invalid(format!("two fragments for {}", f.child)));
            }
            if f.cpf.len() != 1 << f.parents.len() {
                return Err(BlnError::Invalid(format!(
                    "{}: {} rows for {} parents",
                    f.child,
                    f.cpf.len(),
                    f.parents.len()
                )));
            }
            if let Some(p) = f.cpf.iter().find(|p| !(0.0..=1.0).contains(*p)) {
                return Err(BlnError::Invalid(format!("{}: probability {p}", f.child)));
            }
        }
        for c in &self.constraints {
            for a in c.atoms() {
                self.declaration.check_atom(a)?;
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let d = &self.declaration;
        let mut out = String::new();
        for t in &d.types {
            let _ = writeln!(out, "TYPE\t{t}");
        }
        for (rel, params) in &d.signatures {
            let _ = writeln!(out, "SIGNATURE\t{rel}\t{}", params.join("\t"));
        }
        for (name, types) in &d.entities {
            let types: Vec<&str> = types.iter().map(String::as_str).collect();
            let _ = writeln!(out, "ENTITY\t{name}\t{}", types.join(","));
        }
        for f in &self.fragments {
            let parents = if f.parents.is_empty() {
                "-".to_string()
            } else {
                f.parents.iter().map(Atom::to_string).collect::<Vec<_>>().join(";")
            };
            let rows: Vec<String> = f.cpf.iter().map(f64::to_string).collect();
            let _ = write!(out, "FRAGMENT\t{}\t{}\t{}", f.child, parents, rows.join(" "));
            if f.fixed {
                out.push_str("\tfixed");
            }
            out.push('\n');
        }
        for c in &self.constraints {
            let _ = writeln!(out, "CONSTRAINT\t{c}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<BlnModel, BlnError> {
        let mut m = BlnModel::default();
        for (i, line) in text.lines().enumerate() {
            let err = |msg: String| BlnError::Format {
                line: i + 1,
                message: msg,
            };
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = line.split('\t').collect();
            match f[0] {
                "TYPE" if f.len() == 2 => {
                    m.declaration.types.insert(f[1].to_string());
                }
                "SIGNATURE" if f.len() >= 2 => {
                    let rel: RelationType = f[1].parse().map_err(err)?;
                    m.declaration
                        .signatures
                        .insert(rel, f[2..].iter().map(|s| s.to_string()).collect());
                }
                "ENTITY" if f.len() == 3 => {
                    for t in f[2].split(',').filter(|t| !t.is_empty()) {
                        m.declaration.add_entity(f[1], t);
                    }
                    m.declaration.entities.entry(f[1].to_string()).or_default();
                }
                "FRAGMENT" if f.len() == 4 || f.len() == 5 => {
                    let child: Atom = f[1].parse().map_err(|e: BlnError| err(e.to_string()))?;
                    let parents = if f[2] == "-" {
                        Vec::new()
                    } else {
                        f[2].split(';')
                            .map(str::parse)
                            .collect::<Result<Vec<Atom>, _>>()
                            .map_err(|e| err(e.to_string()))?
                    };
                    let cpf = f[3]
                        .split_whitespace()
                        .map(|r| r.parse::<f64>().map_err(|_| err(format!("bad probability {r:?}"))))
                        .collect::<Result<Vec<_>, _>>()?;
                    let fixed = match f.get(4) {
                        None => false,
                        Some(&"fixed") => true,
                        Some(other) => return Err(err(format!("unknown fragment flag {other:?}"))),
                    };
                    m.fragments.push(Fragment {
                        child,
                        parents,
                        cpf,
                        fixed,
                    });
                }
                "CONSTRAINT" if f.len() == 2 => {
                    m.constraints
                        .push(Formula::parse(f[1]).map_err(|e| err(e.to_string()))?);
                }
                _ => return Err(err(format!("unrecognized record {line:?}"))),
            }
        }
        m.validate()?;
        Ok(m)
    }
}

/// The abstract variable a graph node becomes, over meta-variable `x`.
pub fn variable_of(node: &ConceptNode) -> Atom {
    let relation = match node.kind {
        NodeKind::Concept => RelationType::IsA,
        NodeKind::Location => RelationType::AtLocation,
        NodeKind::Property => RelationType::HasProperty,
        NodeKind::Affordance => RelationType::UsedFor,
    };
    Atom::new(relation, META_VAR, &node.id)
}

/// Source node ids of the edges entering each node, sorted.
pub fn incoming(graph: &ConceptGraph) -> BTreeMap<&str, Vec<&str>> {
    let mut map: BTreeMap<&str, Vec<&str>> = graph.nodes.keys().map(|k| (k.as_str(), Vec::new())).collect();
    for e in &graph.edges {
        if let Some(v) = map.get_mut(e.dst.as_str()) {
            if !v.contains(&e.src.as_str()) {
                v.push(e.src.as_str());
            }
        }
    }
    for v in map.values_mut() {
        v.sort_unstable();
    }
    map
}

/// One fragment per node; the variable of each edge's source becomes a
/// parent of the variable of its destination. Tables start uniform.
pub fn model_from_graph(graph: &ConceptGraph, max_parents: usize) -> Result<BlnModel, BlnError> {
    let mut declaration = Declaration::standard();
    for n in graph.nodes.values() {
        declaration.add_entity(&n.id, n.kind.as_str());
    }
    let parents_of = incoming(graph);
    let mut fragments = Vec::with_capacity(graph.nodes.len());
    for n in graph.nodes.values() {
        let srcs = &parents_of[n.id.as_str()];
        if srcs.len() > max_parents {
            return Err(BlnError::TooDense {
                node: n.id.clone(),
                parents: srcs.len(),
                limit: max_parents,
            });
        }
        let parents = srcs.iter().map(|s| variable_of(&graph.nodes[*s])).collect();
        fragments.push(Fragment::uniform(variable_of(n), parents));
    }
    let model = BlnModel {
        declaration,
        fragments,
        constraints: Vec::new(),
    };
    model.validate()?;
    Ok(model)
}

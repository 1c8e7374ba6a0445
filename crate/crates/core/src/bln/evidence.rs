use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::model::{incoming, row_index, variable_of};
use super::{Atom, BlnError, Fragment};
use crate::edges::RelationType;
use crate::netgen::{ConceptGraph, RelationEdge};
use crate::relatedness::RelatednessProvider;
use crate::text::base_term;

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationParams {
    /// Weight of the edge strength against relatedness, in [0, 1].
    pub alpha: f64,
    pub n_worlds: usize,
    /// Probability that a seed concept is true independent of its parents.
    pub seed_prior: f64,
    pub seed: u64,
}

impl Default for SimulationParams {
    fn default() -> Self {
        SimulationParams {
            alpha: 0.5,
            n_worlds: 20_000,
            seed_prior: 0.02,
            seed: 0,
        }
    }
}

/// Complete assignments over a fixed list of abstract variables.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct EvidenceSet {
    pub variables: Vec<Atom>,
    pub worlds: Vec<Vec<bool>>,
}

impl EvidenceSet {
    pub fn position(&self, atom: &Atom) -> Option<usize> {
        self.variables.iter().position(|v| v == atom)
    }

    /// Fraction of worlds in which `atom` holds.
    pub fn frequency(&self, atom: &Atom) -> Option<f64> {
        let i = self.position(atom)?;
        let n = self.worlds.iter().filter(|w| w[i]).count();
        Some(n as f64 / self.worlds.len().max(1) as f64)
    }
}

/// Probability that a true source activates the destination of `edge`.
///
/// IsA edges carry their strength unchanged; the other relations mix the
/// strength with the relatedness of the two terms by `alpha`.
pub fn edge_probability<P: RelatednessProvider + ?Sized>(edge: &RelationEdge, provider: &P, alpha: f64) -> f64 {
    let p = match edge.relation {
        RelationType::IsA => edge.strength,
        _ => {
            let rel = provider.score(base_term(&edge.src), base_term(&edge.dst));
            alpha * edge.strength + (1.0 - alpha) * rel
        }
    };
    p.clamp(0.0, 1.0)
}

/// Node ids so that every edge source precedes its destination.
pub fn topological_nodes(graph: &ConceptGraph) -> Result<Vec<String>, BlnError> {
    let parents = incoming(graph);
    let mut pending: BTreeMap<&str, usize> = parents.iter().map(|(k, v)| (*k, v.len())).collect();
    let mut children: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (child, ps) in &parents {
        for p in ps {
            children.entry(p).or_default().push(child);
        }
    }
    let mut ready: Vec<&str> = pending.iter().filter(|(_, n)| **n == 0).map(|(k, _)| *k).collect();
    ready.reverse();
    let mut order = Vec::with_capacity(pending.len());
    while let Some(id) = ready.pop() {
        order.push(id.to_string());
        for c in children.get(id).into_iter().flatten() {
            let n = pending.get_mut(c).expect("child is a node");
            *n -= 1;
            if *n == 0 {
                ready.push(c);
                ready.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
    }
    if order.len() != pending.len() {
        let stuck: Vec<String> = pending
            .iter()
            .filter(|(_, n)| **n > 0)
            .map(|(k, _)| k.to_string())
            .collect();
        return Err(BlnError::Cycle(stuck));
    }
    Ok(order)
}

/// Samples `n_worlds` complete worlds top-down over the graph's variables.
///
/// A variable is activated by each true parent independently (noisy-OR)
/// with that edge's probability; seed concepts also turn on by themselves
/// with `seed_prior`, other parentless variables never do.
pub fn simulate_evidence<P: RelatednessProvider + ?Sized>(
    graph: &ConceptGraph,
    provider: &P,
    params: &SimulationParams,
) -> Result<EvidenceSet, BlnError> {
    let order = topological_nodes(graph)?;
    let pos: HashMap<&str, usize> = order.iter().enumerate().map(|(i, id)| (id.as_str(), i)).collect();

    // (leak, [(parent position, activation probability)]) per node in order.
    let mut plan: Vec<(f64, Vec<(usize, f64)>)> = order
        .iter()
        .map(|id| {
            let leak = if graph.nodes[id].is_seed {
                params.seed_prior
            } else {
                0.0
            };
            (leak, Vec::new())
        })
        .collect();
    for e in &graph.edges {
        let p = edge_probability(e, provider, params.alpha);
        plan[pos[e.dst.as_str()]].1.push((pos[e.src.as_str()], p));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut worlds = Vec::with_capacity(params.n_worlds);
    for _ in 0..params.n_worlds {
        let mut w = vec![false; order.len()];
        for (i, (leak, parents)) in plan.iter().enumerate() {
            let off: f64 = parents
                .iter()
                .filter(|(p, _)| w[*p])
                .fold(1.0 - leak, |acc, (_, q)| acc * (1.0 - q));
            w[i] = rng.gen::<f64>() < 1.0 - off;
        }
        worlds.push(w);
    }
    Ok(EvidenceSet {
        variables: order.iter().map(|id| variable_of(&graph.nodes[id])).collect(),
        worlds,
    })
}

/// Maximum-likelihood tables with a symmetric pseudocount; fixed fragments
/// are returned untouched and rows never observed become 0.5.
pub fn learn_cpfs(fragments: &[Fragment], evidence: &EvidenceSet, pseudocount: f64) -> Result<Vec<Fragment>, BlnError> {
    let locate = |a: &Atom| {
        evidence
            .position(a)
            .ok_or_else(|| BlnError::MissingEvidenceVariable(a.to_string()))
    };
    fragments
        .iter()
        .map(|f| {
            if f.fixed {
                return Ok(f.clone());
            }
            let child = locate(&f.child)?;
            let parents: Vec<usize> = f.parents.iter().map(locate).collect::<Result<_, _>>()?;
            let rows = 1usize << parents.len();
            let mut total = vec![0usize; rows];
            let mut hits = vec![0usize; rows];
            for w in &evidence.worlds {
                let r = row_index(parents.iter().map(|&p| w[p]));
                total[r] += 1;
                hits[r] += usize::from(w[child]);
            }
            let cpf = (0..rows)
                .map(|r| {
                    let denom = total[r] as f64 + 2.0 * pseudocount;
                    if denom == 0.0 {
                        0.5
                    } else {
                        (hits[r] as f64 + pseudocount) / denom
                    }
                })
                .collect();
            Ok(Fragment { cpf, ..f.clone() })
        })
        .collect()
}

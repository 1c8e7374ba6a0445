use std::collections::{BTreeMap, HashMap};

use super::model::row_index;
use super::{Atom, BlnError, Declaration, Formula, Fragment};

/// A directed network over named boolean variables with full tables.
#[derive(Debug, Clone, PartialEq)]
pub struct GroundNetwork {
    names: Vec<String>,
    index: HashMap<String, usize>,
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
    cpfs: Vec<Vec<f64>>,
    auxiliary: Vec<usize>,
    order: Vec<usize>,
}

impl GroundNetwork {
    /// Validates table sizes and acyclicity.
    pub fn new(
        names: Vec<String>,
        parents: Vec<Vec<usize>>,
        cpfs: Vec<Vec<f64>>,
        auxiliary: Vec<usize>,
    ) -> Result<GroundNetwork, BlnError> {
        let n = names.len();
        if parents.len() != n || cpfs.len() != n {
            return Err(BlnError::Invalid("mismatched variable, parent and table counts".into()));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(BlnError::Invalid(format!("duplicate variable {name}")));
            }
        }
        let mut children = vec![Vec::new(); n];
        for (i, ps) in parents.iter().enumerate() {
            if cpfs[i].len() != 1 << ps.len() {
                return Err(BlnError::Invalid(format!(
                    "{}: {} rows for {} parents",
                    names[i],
                    cpfs[i].len(),
                    ps.len()
                )));
            }
            if let Some(p) = cpfs[i].iter().find(|p| !(0.0..=1.0).contains(*p)) {
                return Err(BlnError::Invalid(format!("{}: probability {p}", names[i])));
            }
            for &p in ps {
                if p >= n {
                    return Err(BlnError::Invalid(format!("{}: parent index {p}", names[i])));
                }
                children[p].push(i);
            }
        }
        let order =
            topological_order(&parents, &children).ok_or_else(|| BlnError::Cycle(find_cycle(&parents, &names)))?;
        Ok(GroundNetwork {
            names,
            index,
            parents,
            children,
            cpfs,
            auxiliary,
            order,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn var(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn parents(&self, var: usize) -> &[usize] {
        &self.parents[var]
    }

    pub fn children(&self, var: usize) -> &[usize] {
        &self.children[var]
    }

    pub fn cpf(&self, var: usize) -> &[f64] {
        &self.cpfs[var]
    }

    pub fn auxiliary(&self) -> &[usize] {
        &self.auxiliary
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.order
    }

    /// P(var = value | parents as set in `state`).
    pub fn prob(&self, var: usize, value: bool, state: &[bool]) -> f64 {
        let r = row_index(self.parents[var].iter().map(|&p| state[p]));
        let p = self.cpfs[var][r];
        if value {
            p
        } else {
            1.0 - p
        }
    }

    /// Membership mask of `vars` and all their ancestors.
    pub fn ancestral_mask(&self, vars: impl IntoIterator<Item = usize>) -> Vec<bool> {
        let mut mask = vec![false; self.len()];
        let mut stack: Vec<usize> = vars.into_iter().collect();
        while let Some(v) = stack.pop() {
            if !mask[v] {
                mask[v] = true;
                stack.extend(&self.parents[v]);
            }
        }
        mask
    }
}

fn topological_order(parents: &[Vec<usize>], children: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut pending: Vec<usize> = parents.iter().map(Vec::len).collect();
    let mut ready: Vec<usize> = (0..parents.len()).rev().filter(|&i| pending[i] == 0).collect();
    let mut order = Vec::with_capacity(parents.len());
    while let Some(v) = ready.pop() {
        order.push(v);
        for &c in &children[v] {
            pending[c] -= 1;
            if pending[c] == 0 {
                ready.push(c);
            }
        }
    }
    (order.len() == parents.len()).then_some(order)
}

/// Names along one directed cycle, first name repeated at the end.
fn find_cycle(parents: &[Vec<usize>], names: &[String]) -> Vec<String> {
    // 0 = unseen, 1 = on stack, 2 = done
    let mut color = vec![0u8; parents.len()];
    let mut path: Vec<usize> = Vec::new();
    fn dfs(v: usize, parents: &[Vec<usize>], color: &mut [u8], path: &mut Vec<usize>) -> Option<Vec<usize>> {
        color[v] = 1;
        path.push(v);
        for &p in &parents[v] {
            if color[p] == 1 {
                let start = path.iter().position(|&x| x == p).expect("on stack");
                let mut cycle = path[start..].to_vec();
                cycle.push(p);
                return Some(cycle);
            }
            if color[p] == 0 {
                if let Some(c) = dfs(p, parents, color, path) {
                    return Some(c);
                }
            }
        }
        color[v] = 2;
        path.pop();
        None
    }
    for v in 0..parents.len() {
        if color[v] == 0 {
            if let Some(mut c) = dfs(v, parents, &mut color, &mut path) {
                // Walked child -> parent; report in edge direction.
                c.reverse();
                return c.into_iter().map(|i| names[i].clone()).collect();
            }
        }
    }
    Vec::new()
}

/// All bindings of `vars` to `objects`, first variable varying slowest.
fn bindings(vars: &[&str], objects: &[String]) -> Vec<BTreeMap<String, String>> {
    let mut out = vec![BTreeMap::new()];
    for v in vars {
        out = out
            .into_iter()
            .flat_map(|b| {
                objects.iter().map(move |o| {
                    let mut b = b.clone();
                    b.insert(v.to_string(), o.clone());
                    b
                })
            })
            .collect();
    }
    out
}

fn meta_vars<'a>(decl: &'a Declaration, atoms: impl IntoIterator<Item = &'a Atom>) -> Vec<&'a str> {
    let mut vars = Vec::new();
    for a in atoms {
        for v in decl.variables_of(a) {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
    }
    vars
}

/// Instantiates every fragment once per binding of its meta-variables to
/// `objects`, and adds one deterministic auxiliary variable per ground
/// constraint whose parents are the constraint's atoms.
pub fn ground(
    decl: &Declaration,
    fragments: &[Fragment],
    objects: &[String],
    constraints: &[Formula],
) -> Result<GroundNetwork, BlnError> {
    if objects.is_empty() {
        return Err(BlnError::NoObjects);
    }
    if let Some(o) = objects.iter().find(|o| decl.is_entity(o)) {
        return Err(BlnError::Invalid(format!("object {o} is already a declared entity")));
    }

    let mut names = Vec::new();
    let mut pending_parents: Vec<Vec<String>> = Vec::new();
    let mut cpfs = Vec::new();
    for f in fragments {
        let vars = meta_vars(decl, std::iter::once(&f.child).chain(&f.parents));
        for b in bindings(&vars, objects) {
            names.push(f.child.substitute(&b).to_string());
            pending_parents.push(f.parents.iter().map(|p| p.substitute(&b).to_string()).collect());
            cpfs.push(f.cpf.clone());
        }
    }
    let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let resolve = |name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| BlnError::Invalid(format!("{name} has no fragment")))
    };
    let mut parents: Vec<Vec<usize>> = pending_parents
        .iter()
        .map(|ps| ps.iter().map(|p| resolve(p)).collect())
        .collect::<Result<_, _>>()?;

    let mut aux_names = Vec::new();
    let mut aux_parents = Vec::new();
    let mut aux_cpfs = Vec::new();
    for (k, c) in constraints.iter().enumerate() {
        let vars = meta_vars(decl, c.atoms());
        for b in bindings(&vars, objects) {
            let g = c.map_atoms(&|a| a.substitute(&b));
            let atoms: Vec<Atom> = g.atoms().into_iter().cloned().collect();
            let ids: Vec<usize> = atoms
                .iter()
                .map(|a| resolve(&a.to_string()))
                .collect::<Result<_, _>>()?;
            let rows = (0..1usize << atoms.len())
                .map(|r| {
                    let value = |a: &Atom| {
                        let j = atoms.iter().position(|x| x == a).expect("own atom");
                        (r >> (atoms.len() - 1 - j)) & 1 == 1
                    };
                    if g.eval(&value) {
                        1.0
                    } else {
                        0.0
                    }
                })
                .collect();
            let bound: Vec<&str> = vars.iter().map(|v| b[*v].as_str()).collect();
            aux_names.push(format!("constraint_{}[{}]", k + 1, bound.join(",")));
            aux_parents.push(ids);
            aux_cpfs.push(rows);
        }
    }
    let first_aux = names.len();
    let auxiliary = (first_aux..first_aux + aux_names.len()).collect();
    names.extend(aux_names);
    parents.extend(aux_parents);
    cpfs.extend(aux_cpfs);
    GroundNetwork::new(names, parents, cpfs, auxiliary)
}

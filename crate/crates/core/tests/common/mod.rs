//! Fixture access and brute-force reference implementations shared by the
//! integration tests and the acceptance runner.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use situnet::bln::{Evidence, GroundNetwork};
use situnet::edges::{normalized_weight, EdgeStore, RelationType};
use situnet::lexicon::{information_content, CorpusFrequencies, LexiconIndex, SynsetId};
use situnet::netgen::{ConceptGraph, NodeKind};
use situnet::pipeline::{ResourcePaths, Resources};
use situnet::relatedness::Weighting;

pub fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn scenario_dir(name: &str) -> PathBuf {
    data_dir().join("scenarios").join(name)
}

pub fn fixture_paths() -> ResourcePaths {
    let d = data_dir();
    ResourcePaths {
        lexicon: d.join("lexicon"),
        edges: d.join("conceptnet.tsv"),
        frequencies: d.join("frequencies.tsv"),
        stopwords: d.join("stopwords.txt"),
        esa_corpus: d.join("esa_corpus.tsv"),
    }
}

pub fn fixture() -> Resources {
    Resources::load(&fixture_paths(), Weighting::RawCount).expect("bundled fixture loads")
}

fn word_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

pub fn scenario_seeds(name: &str) -> Vec<String> {
    let text = std::fs::read_to_string(scenario_dir(name).join("seeds.txt")).expect("seeds file");
    word_lines(&text).map(str::to_string).collect()
}

/// The small seed sets bundled for disambiguation checks.
pub fn wsd_sets() -> Vec<Vec<String>> {
    let text = std::fs::read_to_string(data_dir().join("wsd_sets.txt")).expect("wsd sets");
    word_lines(&text)
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect()
}

pub const SCENARIOS: [&str; 3] = ["recipe", "laundry", "cleaning"];

// ---------------------------------------------------------------- lexicon

/// Longest root-to-node path length, roots at depth 1, by plain recursion.
pub fn depth_oracle(lex: &LexiconIndex, id: SynsetId) -> usize {
    let s = lex.synset(id).expect("known synset");
    1 + s.hypernyms.iter().map(|&h| depth_oracle(lex, h)).max().unwrap_or(0)
}

/// `id` and everything above it, by depth-first search.
pub fn closure_oracle(lex: &LexiconIndex, id: SynsetId) -> BTreeSet<SynsetId> {
    fn visit(lex: &LexiconIndex, id: SynsetId, out: &mut BTreeSet<SynsetId>) {
        if out.insert(id) {
            for &h in &lex.synset(id).expect("known synset").hypernyms {
                visit(lex, h, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    visit(lex, id, &mut out);
    out
}

pub fn wup_oracle(lex: &LexiconIndex, a: SynsetId, b: SynsetId) -> Option<f64> {
    if a == b {
        return Some(1.0);
    }
    let ca = closure_oracle(lex, a);
    let cb = closure_oracle(lex, b);
    let lcs = ca.intersection(&cb).map(|&s| depth_oracle(lex, s)).max()?;
    Some(2.0 * lcs as f64 / (depth_oracle(lex, a) + depth_oracle(lex, b)) as f64)
}

pub fn cost_oracle(lex: &LexiconIndex, a: SynsetId, b: SynsetId) -> f64 {
    wup_oracle(lex, a, b).map_or(1.0, |s| 1.0 - s)
}

// ---------------------------------------------------------- disambiguation

/// Memoized pairwise sense costs for one word list.
pub struct CostTable<'a> {
    lex: &'a LexiconIndex,
    memo: HashMap<(SynsetId, SynsetId), f64>,
}

impl<'a> CostTable<'a> {
    pub fn new(lex: &'a LexiconIndex) -> Self {
        CostTable {
            lex,
            memo: HashMap::new(),
        }
    }

    pub fn cost(&mut self, a: SynsetId, b: SynsetId) -> f64 {
        let key = (a.min(b), a.max(b));
        let lex = self.lex;
        *self.memo.entry(key).or_insert_with(|| cost_oracle(lex, a, b))
    }
}

/// Greedy tree growth with sense fixing, written as a scan over every
/// (word, sense) candidate ordered by (cost, word, sense).
pub fn greedy_oracle(
    costs: &mut CostTable,
    senses: &[Vec<SynsetId>],
    start: usize,
    start_sense: usize,
) -> (f64, Vec<usize>) {
    let n = senses.len();
    let mut chosen: Vec<Option<usize>> = vec![None; n];
    chosen[start] = Some(start_sense);
    let mut attached = vec![start];
    let mut total = 0.0;
    while attached.len() < n {
        let mut candidates: Vec<(f64, usize, usize)> = Vec::new();
        for w in 0..n {
            if chosen[w].is_some() {
                continue;
            }
            for (l, &cand) in senses[w].iter().enumerate() {
                let best = attached
                    .iter()
                    .map(|&a| costs.cost(senses[a][chosen[a].unwrap()], cand))
                    .fold(f64::INFINITY, f64::min);
                candidates.push((best, w, l));
            }
        }
        let &(c, w, l) = candidates
            .iter()
            .min_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)))
            .unwrap();
        chosen[w] = Some(l);
        attached.push(w);
        total += c;
    }
    (total, chosen.into_iter().map(Option::unwrap).collect())
}

/// Start word by fewest senses (first on ties), then the best start sense.
pub fn exhaustive_start_oracle(lex: &LexiconIndex, words: &[String]) -> (usize, f64, Vec<SynsetId>) {
    let senses: Vec<Vec<SynsetId>> = words
        .iter()
        .map(|w| lex.sense_ids(w, situnet::Pos::Noun).to_vec())
        .collect();
    let start = (0..words.len()).min_by_key(|&i| (senses[i].len(), i)).unwrap();
    let mut costs = CostTable::new(lex);
    let mut best: Option<(f64, Vec<usize>)> = None;
    for s in 0..senses[start].len() {
        let (total, chosen) = greedy_oracle(&mut costs, &senses, start, s);
        if best.as_ref().is_none_or(|(b, _)| total < *b) {
            best = Some((total, chosen));
        }
    }
    let (total, chosen) = best.unwrap();
    let ids = chosen.iter().enumerate().map(|(w, &l)| senses[w][l]).collect();
    (start, total, ids)
}

/// Minimum spanning tree weight over fixed senses (Prim, complete graph).
pub fn fixed_tree_cost(costs: &mut CostTable, ids: &[SynsetId]) -> f64 {
    let n = ids.len();
    let mut in_tree = vec![false; n];
    let mut dist = vec![f64::INFINITY; n];
    dist[0] = 0.0;
    let mut total = 0.0;
    for _ in 0..n {
        let u = (0..n)
            .filter(|&i| !in_tree[i])
            .min_by(|&a, &b| dist[a].total_cmp(&dist[b]))
            .unwrap();
        in_tree[u] = true;
        total += dist[u];
        for v in 0..n {
            if !in_tree[v] {
                dist[v] = dist[v].min(costs.cost(ids[u], ids[v]));
            }
        }
    }
    total
}

/// Smallest spanning-tree cost over every combination of senses.
pub fn best_combination_cost(lex: &LexiconIndex, words: &[String]) -> f64 {
    let senses: Vec<Vec<SynsetId>> = words
        .iter()
        .map(|w| lex.sense_ids(w, situnet::Pos::Noun).to_vec())
        .collect();
    let mut costs = CostTable::new(lex);
    let mut idx = vec![0usize; words.len()];
    let mut best = f64::INFINITY;
    loop {
        let ids: Vec<SynsetId> = idx.iter().enumerate().map(|(w, &l)| senses[w][l]).collect();
        best = best.min(fixed_tree_cost(&mut costs, &ids));
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < senses[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            return best;
        }
    }
}

// ------------------------------------------------------------- compression

/// Rule engine over plain parent sets, run to a fixpoint.
pub fn compress_oracle(
    graph: &ConceptGraph,
    freq: &CorpusFrequencies,
    min_children: usize,
    ic_threshold: f64,
    blocklist: &[&str],
) -> (BTreeSet<String>, BTreeSet<(String, String)>) {
    let mut nodes: BTreeMap<String, bool> = graph
        .nodes
        .values()
        .filter(|n| n.kind == NodeKind::Concept)
        .map(|n| (n.id.clone(), n.is_seed))
        .collect();
    let mut up: BTreeMap<String, BTreeSet<String>> = nodes.keys().map(|k| (k.clone(), BTreeSet::new())).collect();
    for e in graph.edges.iter().filter(|e| e.relation == RelationType::IsA) {
        up.get_mut(&e.src).unwrap().insert(e.dst.clone());
    }
    let term = |id: &str| id.split(':').next().unwrap().to_string();
    let down = |up: &BTreeMap<String, BTreeSet<String>>, id: &str| -> BTreeSet<String> {
        up.iter()
            .filter(|(_, ps)| ps.contains(id))
            .map(|(c, _)| c.clone())
            .collect()
    };
    let remove = |nodes: &mut BTreeMap<String, bool>, up: &mut BTreeMap<String, BTreeSet<String>>, id: &str| {
        let parents = up.remove(id).unwrap();
        nodes.remove(id);
        for ps in up.values_mut() {
            if ps.remove(id) {
                ps.extend(parents.iter().cloned());
            }
        }
        for (c, ps) in up.iter_mut() {
            ps.remove(c);
        }
    };
    loop {
        let before = nodes.len();
        let general: Vec<String> = nodes
            .iter()
            .filter(|(id, seed)| {
                !**seed
                    && (blocklist.contains(&term(id).as_str()) || information_content(&term(id), freq) < ic_threshold)
            })
            .map(|(id, _)| id.clone())
            .collect();
        for id in general {
            remove(&mut nodes, &mut up, &id);
        }

        fn height(up: &BTreeMap<String, BTreeSet<String>>, id: &str) -> usize {
            up.iter()
                .filter(|(_, ps)| ps.contains(id))
                .map(|(c, _)| height(up, c) + 1)
                .max()
                .unwrap_or(0)
        }
        let mut order: Vec<(usize, String)> = nodes.keys().map(|id| (height(&up, id), id.clone())).collect();
        order.sort();
        for (_, id) in order {
            match nodes.get(&id) {
                Some(false) if !up[&id].is_empty() && down(&up, &id).len() < min_children => {
                    remove(&mut nodes, &mut up, &id);
                }
                _ => {}
            }
        }

        loop {
            let mut hit = None;
            'scan: for (c, ps) in &up {
                if nodes[c] {
                    continue;
                }
                for p in ps {
                    let inner: Vec<String> = term(c).split('_').map(str::to_string).collect();
                    let outer: Vec<String> = term(p).split('_').map(str::to_string).collect();
                    if outer.windows(inner.len()).any(|w| w == inner.as_slice()) {
                        hit = Some(c.clone());
                        break 'scan;
                    }
                }
            }
            match hit {
                Some(c) => remove(&mut nodes, &mut up, &c),
                None => break,
            }
        }
        if nodes.len() == before {
            break;
        }
    }
    let edges = up
        .iter()
        .flat_map(|(c, ps)| ps.iter().map(move |p| (c.clone(), p.clone())))
        .collect();
    (nodes.into_keys().collect(), edges)
}

/// A random concept DAG with seeds at the leaves and random counts for
/// its interior names.
pub fn random_hierarchy(rng: &mut ChaCha8Rng) -> (ConceptGraph, CorpusFrequencies) {
    let n_interior = rng.gen_range(3..14);
    let n_seeds = rng.gen_range(1..5);
    let mut text = String::from("ENVIRONMENT\tkitchen\n");
    // Names are one or two tokens from a tiny vocabulary so that some
    // children end up named inside their parents.
    let vocab = ["pan", "pot", "oil", "cup", "jar"];
    let mut names: Vec<String> = Vec::new();
    while names.len() < n_interior {
        let a = vocab[rng.gen_range(0..vocab.len())];
        let name = if rng.gen_bool(0.5) {
            a.to_string()
        } else {
            format!("{a}_{}", vocab[rng.gen_range(0..vocab.len())])
        };
        if !names.contains(&name) {
            text.push_str(&format!("NODE\t{name}\tconcept\t-\t0\n"));
            names.push(name);
        }
    }
    let seeds: Vec<String> = (0..n_seeds).map(|i| format!("s{i}")).collect();
    for s in &seeds {
        text.push_str(&format!("NODE\t{s}\tconcept\t-\t1\n"));
    }
    // Interior node i may point to any j < i; seeds point into the interior.
    for i in 1..n_interior {
        let k = rng.gen_range(1..=2.min(i));
        let mut ps = BTreeSet::new();
        for _ in 0..k {
            ps.insert(rng.gen_range(0..i));
        }
        for j in ps {
            text.push_str(&format!("EDGE\tIsA\t{}\t{}\t1\n", names[i], names[j]));
        }
    }
    for s in &seeds {
        let j = rng.gen_range(0..n_interior);
        text.push_str(&format!("EDGE\tIsA\t{s}\t{}\t1\n", names[j]));
    }
    let graph = ConceptGraph::from_text(&text).expect("random hierarchy parses");
    let counts: Vec<(String, u64)> = names
        .iter()
        .chain(&seeds)
        .map(|n| (n.clone(), rng.gen_range(1..5000)))
        .collect();
    (graph, CorpusFrequencies::from_counts(counts))
}

// --------------------------------------------------------------- locations

/// Locations a two-hop expansion should keep: hop-1 targets and their store
/// successors, filtered by environment containment, then restricted to what
/// the seeds can still reach.
pub fn location_oracle(before: &ConceptGraph, store: &EdgeStore, env: &str) -> BTreeSet<String> {
    let contained = |t: &str| t == env || store.contains(t, RelationType::AtLocation, env);
    let term = |id: &str| id.split(':').next().unwrap().to_string();
    let mut adj: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    let mut is_loc: BTreeMap<String, bool> = BTreeMap::new();
    for n in before.nodes.values() {
        is_loc.insert(n.id.clone(), n.kind == NodeKind::Location);
    }
    let keep = |id: &str, is_loc: &BTreeMap<String, bool>| !is_loc[id] || contained(&term(id));
    for e in &before.edges {
        if keep(&e.src, &is_loc) && keep(&e.dst, &is_loc) {
            adj.entry(e.src.clone()).or_default().insert(e.dst.clone());
        }
    }
    let hop1: BTreeSet<String> = before
        .edges
        .iter()
        .filter(|e| e.relation == RelationType::AtLocation && !is_loc[&e.src])
        .map(|e| e.dst.clone())
        .collect();
    for l in &hop1 {
        let t = term(l);
        for e in store
            .edges()
            .iter()
            .filter(|e| e.relation == RelationType::AtLocation && e.start == t)
        {
            if e.end == t || !contained(&e.end) || !keep(l, &is_loc) {
                continue;
            }
            let id = match before.nodes.get(&e.end) {
                Some(n) if n.kind != NodeKind::Location => format!("{}:location", e.end),
                _ => e.end.clone(),
            };
            is_loc.entry(id.clone()).or_insert(true);
            adj.entry(l.clone()).or_default().insert(id);
        }
    }
    let mut seen: BTreeSet<String> = before.seeds().map(|n| n.id.clone()).collect();
    let mut queue: VecDeque<String> = seen.iter().cloned().collect();
    while let Some(u) = queue.pop_front() {
        for v in adj.get(&u).into_iter().flatten() {
            if seen.insert(v.clone()) {
                queue.push_back(v.clone());
            }
        }
    }
    seen.into_iter()
        .filter(|id| is_loc.get(id).copied().unwrap_or(false))
        .collect()
}

/// Relation edges `attach_relations` should add for one concept, re-derived
/// with the public filter steps.
pub fn normalized(store: &EdgeStore, start: &str, rel: RelationType, end: &str) -> f64 {
    normalized_weight(store.get(start, rel, end).expect("edge present"), store).unwrap()
}

// --------------------------------------------------------------- inference

/// P(query | evidence) from the explicit joint table.
pub fn joint_table_oracle(net: &GroundNetwork, query: usize, evidence: &Evidence) -> f64 {
    let n = net.len();
    assert!(n <= 20, "joint table oracle is for small nets");
    let (mut num, mut den) = (0.0, 0.0);
    let mut state = vec![false; n];
    for bits in 0u32..(1 << n) {
        for (v, s) in state.iter_mut().enumerate() {
            *s = (bits >> v) & 1 == 1;
        }
        if evidence.iter().any(|(&v, &val)| state[v] != val) {
            continue;
        }
        let p: f64 = (0..n).map(|v| net.prob(v, state[v], &state)).product();
        den += p;
        if state[query] {
            num += p;
        }
    }
    num / den
}

/// A random DAG of up to `max_vars` variables with non-degenerate tables,
/// plus a little random evidence.
pub fn random_network(rng: &mut ChaCha8Rng, max_vars: usize) -> (GroundNetwork, Evidence) {
    let n = rng.gen_range(2..=max_vars);
    let mut parents = Vec::with_capacity(n);
    let mut cpfs = Vec::with_capacity(n);
    for i in 0..n {
        let k = rng.gen_range(0..=3.min(i));
        let mut ps: Vec<usize> = Vec::new();
        while ps.len() < k {
            let p = rng.gen_range(0..i);
            if !ps.contains(&p) {
                ps.push(p);
            }
        }
        cpfs.push((0..1 << k).map(|_| rng.gen_range(0.1..0.9)).collect());
        parents.push(ps);
    }
    let names = (0..n).map(|i| format!("v{i}")).collect();
    let net = GroundNetwork::new(names, parents, cpfs, Vec::new()).expect("random dag is valid");
    let mut evidence = Evidence::new();
    for _ in 0..rng.gen_range(0..=2usize) {
        evidence.insert(rng.gen_range(0..n), rng.gen_bool(0.5));
    }
    (net, evidence)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---------------------------------------------------------------- criteria
//
// Each check returns a one-line summary on success and a description of the
// first violation otherwise.

pub type Check = Result<String, String>;

pub fn check_inference_oracles() -> Check {
    use situnet::bln::{infer_exact, infer_gibbs, infer_lw};
    let started = std::time::Instant::now();
    let mut r = rng(0x1f1f);
    let (mut worst_exact, mut worst_lw, mut worst_gibbs) = (0.0f64, 0.0f64, 0.0f64);
    for case in 0..50u64 {
        let (net, ev) = random_network(&mut r, 15);
        for q in (0..net.len()).filter(|q| !ev.contains_key(q)) {
            let truth = joint_table_oracle(&net, q, &ev);
            let exact = infer_exact(&net, q, &ev).map_err(|e| format!("network {case}: {e}"))?;
            let lw = infer_lw(&net, q, &ev, 50_000, case).probability;
            let gibbs = infer_gibbs(&net, q, &ev, 1_000, 50_000, case).map_err(|e| format!("network {case}: {e}"))?;
            worst_exact = worst_exact.max((exact - truth).abs());
            worst_lw = worst_lw.max((lw - exact).abs());
            worst_gibbs = worst_gibbs.max((gibbs - exact).abs());
        }
    }
    let secs = started.elapsed().as_secs_f64();
    let summary = format!(
        "max |exact-oracle| {worst_exact:.1e}, |lw-exact| {worst_lw:.4}, |gibbs-exact| {worst_gibbs:.4}, {secs:.1}s"
    );
    if worst_exact < 1e-12 && worst_lw < 0.02 && worst_gibbs < 0.02 && secs < 60.0 {
        Ok(summary)
    } else {
        Err(summary)
    }
}

/// Seeds `a`, `b` feed `c`; `c` and `b` feed `d`; `d` feeds a location.
pub const LEARNING_GRAPH: &str = "ENVIRONMENT\tkitchen
NODE\ta\tconcept\t-\t1
NODE\tb\tconcept\t-\t1
NODE\tc\tconcept\t-\t0
NODE\td\tconcept\t-\t0
NODE\tshelf\tlocation\t-\t0
EDGE\tIsA\ta\tc\t0.7
EDGE\tIsA\tb\tc\t0.6
EDGE\tIsA\tc\td\t0.8
EDGE\tIsA\tb\td\t0.4
EDGE\tAtLocation\td\tshelf\t0.3
";

pub fn check_learning() -> Check {
    use situnet::bln::{learn_cpfs, model_from_graph, simulate_evidence, SimulationParams};
    use situnet::relatedness::NullProvider;
    let graph = ConceptGraph::from_text(LEARNING_GRAPH).map_err(|e| e.to_string())?;
    let params = SimulationParams {
        alpha: 1.0,
        n_worlds: 100_000,
        seed_prior: 0.5,
        seed: 11,
    };
    let ev = simulate_evidence(&graph, &NullProvider, &params).map_err(|e| e.to_string())?;
    let model = model_from_graph(&graph, 12).map_err(|e| e.to_string())?;
    let learned = learn_cpfs(&model.fragments, &ev, 0.0).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for f in &learned {
        let child = &f.child.args[1];
        let leak = if graph.nodes[child].is_seed {
            params.seed_prior
        } else {
            0.0
        };
        let k = f.parents.len();
        for (row, &p) in f.cpf.iter().enumerate() {
            let mut off = 1.0 - leak;
            for (i, parent) in f.parents.iter().enumerate() {
                if (row >> (k - 1 - i)) & 1 == 1 {
                    off *= 1.0
                        - graph
                            .edge(RelationType::IsA, &parent.args[1], child)
                            .or_else(|| graph.edge(RelationType::AtLocation, &parent.args[1], child))
                            .expect("edge behind every parent")
                            .strength;
                }
            }
            let err = (p - (1.0 - off)).abs();
            if err >= 0.02 {
                return Err(format!(
                    "{} row {row}: learned {p:.4}, generated {:.4}",
                    f.child,
                    1.0 - off
                ));
            }
            worst = worst.max(err);
        }
    }
    Ok(format!("{} tables, max error {worst:.4}", learned.len()))
}

pub fn check_wsd(res: &Resources) -> Check {
    use situnet::disambiguate_seeds;
    use situnet::eval::GoldStandard;
    let mut checked = 0;
    for set in wsd_sets().into_iter().filter(|s| s.len() <= 5) {
        let got = disambiguate_seeds(&set, &res.lexicon).map_err(|e| e.to_string())?;
        let (_, total, ids) = exhaustive_start_oracle(&res.lexicon, &set);
        if (got.total_cost - total).abs() > 1e-12 {
            return Err(format!("{set:?}: total {} but oracle {total}", got.total_cost));
        }
        let got_ids: Vec<SynsetId> = got.choices.iter().map(|c| c.synset).collect();
        if got_ids != ids {
            return Err(format!("{set:?}: senses {got_ids:?} but oracle {ids:?}"));
        }
        checked += 1;
    }
    let gold = GoldStandard::parse(&std::fs::read_to_string(scenario_dir("recipe").join("gold.tsv")).unwrap())
        .map_err(|e| e.to_string())?;
    let cooking = gold.sense_labels["pan"];
    let recipe = disambiguate_seeds(&scenario_seeds("recipe"), &res.lexicon).map_err(|e| e.to_string())?;
    if recipe.sense_of("pan") != Some(cooking) {
        return Err(format!(
            "recipe resolves pan to {:?}, not the cooking sense {cooking}",
            recipe.sense_of("pan")
        ));
    }
    Ok(format!("{checked} seed sets match exhaustive search; pan -> {cooking}"))
}

pub fn check_compression(res: &Resources) -> Check {
    use situnet::disambiguate_seeds;
    use situnet::netgen::{add_isa_paths, compress, CompressOptions};
    let mut r = rng(404);
    for case in 0..100 {
        let (g, freq) = random_hierarchy(&mut r);
        let opts = CompressOptions {
            min_children: r.gen_range(1..4),
            ..CompressOptions::default()
        };
        let once = compress(&g, &freq, &opts);
        let twice = compress(&once, &freq, &opts);
        if once.to_text() != twice.to_text() {
            return Err(format!("hierarchy {case}: second pass changed the graph"));
        }
        if let Some(s) = g.seeds().find(|s| !once.nodes.contains_key(&s.id)) {
            return Err(format!("hierarchy {case}: seed {} deleted", s.id));
        };
    }
    let seeds = scenario_seeds("compression");
    let assignment = disambiguate_seeds(&seeds, &res.lexicon).map_err(|e| e.to_string())?;
    let full = add_isa_paths(&assignment, &res.lexicon);
    let opts = CompressOptions {
        min_children: 1,
        ..CompressOptions::default()
    };
    let small = compress(&full, &res.frequencies, &opts);
    let nodes: Vec<&str> = small.nodes.keys().map(String::as_str).collect();
    let edges: Vec<(&str, &str)> = small.edges.iter().map(|e| (e.src.as_str(), e.dst.as_str())).collect();
    if nodes != ["flavorer", "garlic", "ingredient"] || edges != [("flavorer", "ingredient"), ("garlic", "flavorer")] {
        return Err(format!(
            "{} nodes compressed to {nodes:?} with edges {edges:?}",
            full.nodes.len()
        ));
    }
    Ok(format!(
        "100 hierarchies idempotent; {}-node chain -> garlic, flavorer, ingredient",
        full.nodes.len()
    ))
}

/// Recipe network just before the two-hop location step.
pub fn recipe_before_two_hop(res: &Resources) -> ConceptGraph {
    use situnet::disambiguate_seeds;
    use situnet::netgen::{add_isa_paths, attach_relations, compress, CompressOptions};
    let assignment = disambiguate_seeds(&scenario_seeds("recipe"), &res.lexicon).unwrap();
    let g = compress(
        &add_isa_paths(&assignment, &res.lexicon),
        &res.frequencies,
        &CompressOptions::default(),
    );
    attach_relations(&g, &res.store, &res.lexicon, &res.provider, &res.stopwords, &assignment).0
}

pub fn check_locations(res: &Resources) -> Check {
    use situnet::netgen::{attach_locations_two_hop, in_environment};
    let before = recipe_before_two_hop(res);
    let after = attach_locations_two_hop(&before, &res.store, "kitchen");
    let kept: BTreeSet<String> = after
        .nodes
        .values()
        .filter(|n| n.kind == NodeKind::Location)
        .map(|n| n.id.clone())
        .collect();
    if let Some(bad) = kept
        .iter()
        .find(|id| !in_environment(&res.store, id.split(':').next().unwrap(), "kitchen"))
    {
        return Err(format!("location {bad} is not in the kitchen"));
    }
    let expected = location_oracle(&before, &res.store, "kitchen");
    if kept != expected {
        return Err(format!("kept {kept:?}, oracle {expected:?}"));
    }
    let store_is_candidate = before.nodes.contains_key("store")
        || before.edges_of(RelationType::AtLocation).any(|e| {
            res.store
                .contains(e.dst.split(':').next().unwrap(), RelationType::AtLocation, "store")
        });
    if !store_is_candidate || in_environment(&res.store, "store", "kitchen") || after.nodes.contains_key("store") {
        return Err("store was not reached and pruned as outside the kitchen".into());
    }
    Ok(format!(
        "{} locations kept, all in the kitchen; store pruned",
        kept.len()
    ))
}

pub fn check_esa(res: &Resources) -> Check {
    use situnet::relatedness::{esa_relatedness, read_corpus};
    use situnet::text::tokenize;
    let docs = read_corpus(std::io::BufReader::new(
        std::fs::File::open(data_dir().join("esa_corpus.tsv")).unwrap(),
    ))
    .map_err(|e| e.to_string())?;
    let mut dense: BTreeMap<String, Vec<f64>> = BTreeMap::new();
    for (d, (_, text)) in docs.iter().enumerate() {
        for tok in tokenize(text, &res.stopwords) {
            dense.entry(tok).or_insert_with(|| vec![0.0; docs.len()])[d] += 1.0;
        }
    }
    let cosine = |a: &[f64], b: &[f64]| {
        let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        let na: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        let nb: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
        dot / (na * nb)
    };
    let index = res.provider.index();
    let words: Vec<&str> = index.words().collect();
    if words.len() != dense.len() {
        return Err(format!("index has {} words, corpus {}", words.len(), dense.len()));
    }
    let mut r = rng(6);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let a = words[r.gen_range(0..words.len())];
        let b = words[r.gen_range(0..words.len())];
        let err = (esa_relatedness(index, a, b) - cosine(&dense[a], &dense[b])).abs();
        if err >= 1e-9 {
            return Err(format!("({a}, {b}): off by {err:e}"));
        }
        worst = worst.max(err);
    }
    for (i, a) in words.iter().enumerate() {
        if (esa_relatedness(index, a, a) - 1.0).abs() > 1e-12 {
            return Err(format!("self-similarity of {a} is {}", esa_relatedness(index, a, a)));
        }
        for b in &words[i + 1..] {
            if esa_relatedness(index, a, b) != esa_relatedness(index, b, a) {
                return Err(format!("({a}, {b}) is not symmetric"));
            }
        }
    }
    Ok(format!(
        "100 pairs within {worst:.1e} of dense cosine; {} words symmetric and self-similar",
        words.len()
    ))
}

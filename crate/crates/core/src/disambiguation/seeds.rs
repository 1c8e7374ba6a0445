use std::collections::HashMap;

use super::{DisambiguationError, SeedChoice, SenseAssignment};
use crate::lexicon::{wup_similarity, LexiconIndex, Pos, Synset, SynsetId};
use crate::text::normalize_term;

/// `1 - wup(a, b)`, or 1 when the two senses share no ancestor.
pub fn sense_cost(lexicon: &LexiconIndex, a: &Synset, b: &Synset) -> f64 {
    wup_similarity(lexicon, a, b).map_or(1.0, |s| 1.0 - s)
}

/// Cheapest sense pair between two words, ties broken by lowest `(k, l)`.
///
/// Panics if either list is empty.
pub fn pairwise_cost(lexicon: &LexiconIndex, senses_i: &[&Synset], senses_j: &[&Synset]) -> (f64, (usize, usize)) {
    assert!(!senses_i.is_empty() && !senses_j.is_empty());
    let mut best = (f64::INFINITY, (0, 0));
    for (k, a) in senses_i.iter().enumerate() {
        for (l, b) in senses_j.iter().enumerate() {
            let c = sense_cost(lexicon, a, b);
            if c < best.0 {
                best = (c, (k, l));
            }
        }
    }
    best
}

/// Result of growing one tree from a fixed start sense.
#[derive(Debug, Clone, PartialEq)]
pub struct GrownTree {
    /// Sense index chosen per word (input order).
    pub senses: Vec<usize>,
    /// Attachment cost per word; 0 for the start word.
    pub costs: Vec<f64>,
    /// Words in attachment order.
    pub order: Vec<usize>,
    pub total: f64,
}

struct CostCache<'a> {
    lexicon: &'a LexiconIndex,
    memo: HashMap<(SynsetId, SynsetId), f64>,
}

impl CostCache<'_> {
    fn get(&mut self, a: &Synset, b: &Synset) -> f64 {
        let key = if a.id <= b.id { (a.id, b.id) } else { (b.id, a.id) };
        if let Some(&c) = self.memo.get(&key) {
            return c;
        }
        let c = sense_cost(self.lexicon, a, b);
        self.memo.insert(key, c);
        c
    }
}

/// Prim-style growth: repeatedly attach the unattached word with the cheapest
/// edge to an attached word, fixing the new word's sense to the one that
/// realizes that edge.
pub fn grow_tree(lexicon: &LexiconIndex, senses: &[Vec<&Synset>], start: usize, start_sense: usize) -> GrownTree {
    let mut cache = CostCache {
        lexicon,
        memo: HashMap::new(),
    };
    grow_with(&mut cache, senses, start, start_sense)
}

fn grow_with(cache: &mut CostCache<'_>, senses: &[Vec<&Synset>], start: usize, start_sense: usize) -> GrownTree {
    let n = senses.len();
    let mut fixed: Vec<Option<usize>> = vec![None; n];
    let mut costs = vec![0.0; n];
    let mut order = vec![start];
    fixed[start] = Some(start_sense);

    while order.len() < n {
        // (cost, word, sense); strict comparison keeps the earliest word,
        // then the lowest sense rank, then the earliest attached partner.
        let mut best: Option<(f64, usize, usize)> = None;
        for w in (0..n).filter(|&w| fixed[w].is_none()) {
            for (l, cand) in senses[w].iter().enumerate() {
                for &a in &order {
                    let anchor = senses[a][fixed[a].unwrap()];
                    let c = cache.get(anchor, cand);
                    if best.is_none_or(|(bc, _, _)| c < bc) {
                        best = Some((c, w, l));
                    }
                }
            }
        }
        let (c, w, l) = best.expect("an unattached word always has a candidate edge");
        fixed[w] = Some(l);
        costs[w] = c;
        order.push(w);
    }

    GrownTree {
        senses: fixed.into_iter().map(Option::unwrap).collect(),
        total: costs.iter().sum(),
        costs,
        order,
    }
}

/// Picks one noun sense per seed word.
///
/// The start word is the seed with the fewest senses (earliest on ties). A
/// tree is grown from each of its senses and the cheapest tree wins, with the
/// lower-ranked start sense winning ties.
pub fn disambiguate_seeds<S: AsRef<str>>(
    seeds: &[S],
    lexicon: &LexiconIndex,
) -> Result<SenseAssignment, DisambiguationError> {
    let mut words: Vec<String> = Vec::new();
    for s in seeds {
        let w = normalize_term(s.as_ref());
        if !words.contains(&w) {
            words.push(w);
        }
    }
    if words.is_empty() {
        return Err(DisambiguationError::NoSeeds);
    }
    let senses: Vec<Vec<&Synset>> = words
        .iter()
        .map(|w| {
            let s = lexicon.senses(w, Pos::Noun);
            if s.is_empty() {
                Err(DisambiguationError::UnknownSeed(w.clone()))
            } else {
                Ok(s)
            }
        })
        .collect::<Result<_, _>>()?;

    let start = (0..words.len()).min_by_key(|&i| senses[i].len()).expect("non-empty");

    let mut cache = CostCache {
        lexicon,
        memo: HashMap::new(),
    };
    let mut best: Option<GrownTree> = None;
    for k in 0..senses[start].len() {
        let tree = grow_with(&mut cache, &senses, start, k);
        if best.as_ref().is_none_or(|b| tree.total < b.total) {
            best = Some(tree);
        }
    }
    let tree = best.expect("start word has at least one sense");

    Ok(SenseAssignment {
        choices: words
            .iter()
            .enumerate()
            .map(|(i, w)| SeedChoice {
                word: w.clone(),
                synset: senses[i][tree.senses[i]].id,
                cost: tree.costs[i],
            })
            .collect(),
        total_cost: tree.total,
        start_word: words[start].clone(),
    })
}

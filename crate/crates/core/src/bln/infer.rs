use std::collections::BTreeMap;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BlnError, GroundNetwork};

/// Observed values by variable index.
pub type Evidence = BTreeMap<usize, bool>;

/// Largest number of unobserved variables enumerated exactly.
pub const EXACT_LIMIT: usize = 25;

const MAX_INIT_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub probability: f64,
    /// Every sample had weight zero; `probability` is the 0.5 fallback.
    pub zero_weight: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Exact,
    #[default]
    LikelihoodWeighting,
    Gibbs,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Method::Exact),
            "lw" => Ok(Method::LikelihoodWeighting),
            "gibbs" => Ok(Method::Gibbs),
            _ => Err(format!("unknown inference method {s:?} (expected exact, lw or gibbs)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InferenceParams {
    pub method: Method,
    pub samples: usize,
    pub burn_in: usize,
    pub seed: u64,
}

impl Default for InferenceParams {
    fn default() -> Self {
        InferenceParams {
            method: Method::default(),
            samples: 20_000,
            burn_in: 2_000,
            seed: 0,
        }
    }
}

/// Sets every auxiliary constraint variable to true.
pub fn clamp_constraints(net: &GroundNetwork, evidence: &mut Evidence) {
    for &a in net.auxiliary() {
        evidence.insert(a, true);
    }
}

fn relevant_order(net: &GroundNetwork, queries: &[usize], evidence: &Evidence) -> Vec<usize> {
    let mask = net.ancestral_mask(queries.iter().copied().chain(evidence.keys().copied()));
    net.topological_order().iter().copied().filter(|&v| mask[v]).collect()
}

/// P(query | evidence) by enumerating the unobserved ancestors of the query
/// and the evidence.
pub fn infer_exact(net: &GroundNetwork, query: usize, evidence: &Evidence) -> Result<f64, BlnError> {
    if let Some(&v) = evidence.get(&query) {
        return Ok(if v { 1.0 } else { 0.0 });
    }
    let order = relevant_order(net, &[query], evidence);
    let hidden = order.iter().filter(|v| !evidence.contains_key(v)).count();
    if hidden > EXACT_LIMIT {
        return Err(BlnError::TooLarge {
            variables: hidden,
            limit: EXACT_LIMIT,
        });
    }

    struct Walk<'a> {
        net: &'a GroundNetwork,
        order: &'a [usize],
        evidence: &'a Evidence,
        query: usize,
        state: Vec<bool>,
        mass: [f64; 2],
    }
    impl Walk<'_> {
        fn go(&mut self, k: usize, weight: f64) {
            if weight == 0.0 {
                return;
            }
            let Some(&v) = self.order.get(k) else {
                self.mass[usize::from(self.state[self.query])] += weight;
                return;
            };
            let values: &[bool] = match self.evidence.get(&v) {
                Some(true) => &[true],
                Some(false) => &[false],
                None => &[false, true],
            };
            for &val in values {
                let p = self.net.prob(v, val, &self.state);
                self.state[v] = val;
                self.go(k + 1, weight * p);
            }
            self.state[v] = false;
        }
    }
    let mut walk = Walk {
        net,
        order: &order,
        evidence,
        query,
        state: vec![false; net.len()],
        mass: [0.0; 2],
    };
    walk.go(0, 1.0);
    let total = walk.mass[0] + walk.mass[1];
    if total == 0.0 {
        return Err(BlnError::ZeroProbabilityEvidence);
    }
    Ok(walk.mass[1] / total)
}

/// Likelihood-weighted estimates for several queries from one sample set.
pub fn marginals_lw(
    net: &GroundNetwork,
    queries: &[usize],
    evidence: &Evidence,
    n_samples: usize,
    seed: u64,
) -> Vec<Estimate> {
    let order = relevant_order(net, queries, evidence);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = vec![false; net.len()];
    let mut total = 0.0;
    let mut hits = vec![0.0; queries.len()];
    for _ in 0..n_samples.max(1) {
        let mut w = 1.0;
        for &v in &order {
            match evidence.get(&v) {
                Some(&val) => {
                    w *= net.prob(v, val, &state);
                    state[v] = val;
                }
                None => state[v] = rng.gen::<f64>() < net.prob(v, true, &state),
            }
        }
        total += w;
        for (h, &q) in hits.iter_mut().zip(queries) {
            if state[q] {
                *h += w;
            }
        }
    }
    queries
        .iter()
        .zip(hits)
        .map(|(q, h)| match evidence.get(q) {
            Some(&v) => Estimate {
                probability: if v { 1.0 } else { 0.0 },
                zero_weight: total == 0.0,
            },
            None if total == 0.0 => Estimate {
                probability: 0.5,
                zero_weight: true,
            },
            None => Estimate {
                probability: h / total,
                zero_weight: false,
            },
        })
        .collect()
}

pub fn infer_lw(net: &GroundNetwork, query: usize, evidence: &Evidence, n_samples: usize, seed: u64) -> Estimate {
    marginals_lw(net, &[query], evidence, n_samples, seed)[0]
}

/// Single-site Gibbs estimates for several queries from one chain.
pub fn marginals_gibbs(
    net: &GroundNetwork,
    queries: &[usize],
    evidence: &Evidence,
    burn_in: usize,
    n_samples: usize,
    seed: u64,
) -> Result<Vec<f64>, BlnError> {
    let order = relevant_order(net, queries, evidence);
    let mut in_set = vec![false; net.len()];
    for &v in &order {
        in_set[v] = true;
    }
    let hidden: Vec<usize> = order.iter().copied().filter(|v| !evidence.contains_key(v)).collect();
    if let Some(&v) = hidden
        .iter()
        .find(|&&v| net.cpf(v).iter().any(|&p| p == 0.0 || p == 1.0))
    {
        return Err(BlnError::Ergodicity(net.name(v).to_string()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = vec![false; net.len()];
    let joint = |state: &[bool]| order.iter().map(|&v| net.prob(v, state[v], state)).product::<f64>();
    let mut initialized = false;
    for _ in 0..MAX_INIT_ATTEMPTS {
        for &v in &order {
            state[v] = match evidence.get(&v) {
                Some(&val) => val,
                None => rng.gen::<f64>() < net.prob(v, true, &state),
            };
        }
        if joint(&state) > 0.0 {
            initialized = true;
            break;
        }
    }
    if !initialized {
        return Err(BlnError::ZeroProbabilityEvidence);
    }

    let blanket: Vec<Vec<usize>> = hidden
        .iter()
        .map(|&v| net.children(v).iter().copied().filter(|&c| in_set[c]).collect())
        .collect();
    let mut hits = vec![0usize; queries.len()];
    for sweep in 0..burn_in + n_samples.max(1) {
        for (i, &v) in hidden.iter().enumerate() {
            let mut weight = [0.0; 2];
            for val in [false, true] {
                state[v] = val;
                let mut w = net.prob(v, val, &state);
                for &c in &blanket[i] {
                    w *= net.prob(c, state[c], &state);
                }
                weight[usize::from(val)] = w;
            }
            let total = weight[0] + weight[1];
            state[v] = if total == 0.0 {
                rng.gen::<bool>()
            } else {
                rng.gen::<f64>() < weight[1] / total
            };
        }
        if sweep >= burn_in {
            for (h, &q) in hits.iter_mut().zip(queries) {
                *h += usize::from(state[q]);
            }
        }
    }
    let n = n_samples.max(1) as f64;
    Ok(queries
        .iter()
        .zip(hits)
        .map(|(q, h)| match evidence.get(q) {
            Some(&v) => f64::from(u8::from(v)),
            None => h as f64 / n,
        })
        .collect())
}

pub fn infer_gibbs(
    net: &GroundNetwork,
    query: usize,
    evidence: &Evidence,
    burn_in: usize,
    n_samples: usize,
    seed: u64,
) -> Result<f64, BlnError> {
    Ok(marginals_gibbs(net, &[query], evidence, burn_in, n_samples, seed)?[0])
}

/// Posterior probabilities of `queries` with the configured method.
pub fn marginals(
    net: &GroundNetwork,
    queries: &[usize],
    evidence: &Evidence,
    params: &InferenceParams,
) -> Result<Vec<f64>, BlnError> {
    match params.method {
        Method::Exact => queries.iter().map(|&q| infer_exact(net, q, evidence)).collect(),
        Method::LikelihoodWeighting => {
            let est = marginals_lw(net, queries, evidence, params.samples, params.seed);
            if est.iter().any(|e| e.zero_weight) {
                log::warn!("likelihood weighting: every sample had zero weight");
            }
            Ok(est.into_iter().map(|e| e.probability).collect())
        }
        Method::Gibbs => marginals_gibbs(net, queries, evidence, params.burn_in, params.samples, params.seed),
    }
}

//! Per-seed scenario queries, 0.5 thresholding against hand labels, and
//! report formatting.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::bln::{clamp_constraints, marginals, Atom, BlnError, Evidence, GroundNetwork, InferenceParams};
use crate::disambiguation::SenseAssignment;
use crate::edges::RelationType;
use crate::lexicon::SynsetId;

/// (seed word, relation, target entity)
pub type ResultKey = (String, RelationType, String);
pub type ScenarioResults = BTreeMap<ResultKey, f64>;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum EvalError {
    #[error("gold line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("results lack {} gold triple(s): {}", .0.len(), .0.join(", "))]
    Coverage(Vec<String>),
    #[error("network has no variable {variable} for seed {seed}")]
    MissingSeedVariable { seed: String, variable: String },
    #[error("gold labels seed {0:?}, which is not in the scenario")]
    UnknownGoldSeed(String),
    #[error(transparent)]
    Bln(#[from] BlnError),
}

/// Name of the object grounded for the `i`-th seed (1-based).
pub fn object_name(i: usize) -> String {
    format!("object_{i}")
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct GoldStandard {
    pub relation_labels: BTreeMap<ResultKey, bool>,
    pub sense_labels: BTreeMap<String, SynsetId>,
}

impl GoldStandard {
    /// Reads `REL\tseed\trelation\ttarget\t0|1` and `SENSE\tseed\tsynset` lines.
    pub fn parse(text: &str) -> Result<GoldStandard, EvalError> {
        let mut gold = GoldStandard::default();
        for (i, line) in text.lines().enumerate() {
            let err = |m: String| EvalError::Format {
                line: i + 1,
                message: m,
            };
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let f: Vec<&str> = line.split('\t').collect();
            match (f[0], f.len()) {
                ("REL", 5) => {
                    let rel: RelationType = f[2].parse().map_err(err)?;
                    let label = match f[4] {
                        "1" => true,
                        "0" => false,
                        other => return Err(err(format!("label {other:?} is not 0 or 1"))),
                    };
                    gold.relation_labels
                        .insert((f[1].to_string(), rel, f[3].to_string()), label);
                }
                ("SENSE", 3) => {
                    let id: SynsetId = f[2].parse().map_err(err)?;
                    gold.sense_labels.insert(f[1].to_string(), id);
                }
                _ => return Err(err(format!("unrecognized record {line:?}"))),
            }
        }
        Ok(gold)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (seed, id) in &self.sense_labels {
            let _ = writeln!(out, "SENSE\t{seed}\t{id}");
        }
        for ((seed, rel, target), label) in &self.relation_labels {
            let _ = writeln!(out, "REL\t{seed}\t{rel}\t{target}\t{}", u8::from(*label));
        }
        out
    }

    /// Fails if a labeled seed is not one of `seeds`.
    pub fn check_seeds<S: AsRef<str>>(&self, seeds: &[S]) -> Result<(), EvalError> {
        let known = |s: &str| seeds.iter().any(|x| x.as_ref() == s);
        let labeled = self
            .relation_labels
            .keys()
            .map(|(s, _, _)| s)
            .chain(self.sense_labels.keys());
        for s in labeled {
            if !known(s) {
                return Err(EvalError::UnknownGoldSeed(s.clone()));
            }
        }
        Ok(())
    }
}

/// For each seed, clamps `IsA(object_i, seed)` true and queries every
/// relation variable of that object.
///
/// Seed `i` (0-based) samples with `params.seed + i`.
pub fn run_scenario<S: AsRef<str>>(
    net: &GroundNetwork,
    seeds: &[S],
    params: &InferenceParams,
) -> Result<ScenarioResults, EvalError> {
    let atoms: Vec<Option<Atom>> = net.names().iter().map(|n| n.parse().ok()).collect();
    let mut out = ScenarioResults::new();
    for (i, seed) in seeds.iter().enumerate() {
        let seed = seed.as_ref();
        let object = object_name(i + 1);
        let evidence_var = Atom::new(RelationType::IsA, &object, seed).to_string();
        let ev_index = net.var(&evidence_var).ok_or_else(|| EvalError::MissingSeedVariable {
            seed: seed.to_string(),
            variable: evidence_var.clone(),
        })?;
        let mut evidence = Evidence::from([(ev_index, true)]);
        clamp_constraints(net, &mut evidence);

        let queries: Vec<(usize, &Atom)> = atoms
            .iter()
            .enumerate()
            .filter_map(|(v, a)| a.as_ref().map(|a| (v, a)))
            .filter(|(_, a)| a.args.len() == 2 && a.args[0] == object)
            .collect();
        let ids: Vec<usize> = queries.iter().map(|(v, _)| *v).collect();
        let run = InferenceParams {
            seed: params.seed.wrapping_add(i as u64),
            ..params.clone()
        };
        let probs = marginals(net, &ids, &evidence, &run)?;
        for ((_, atom), p) in queries.iter().zip(probs) {
            out.insert((seed.to_string(), atom.relation, atom.args[1].clone()), p);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct AccuracyReport {
    /// Percentages rounded to one decimal, only for relations with labels.
    pub per_relation: BTreeMap<RelationType, f64>,
    /// (correct, total) per relation.
    pub counts: BTreeMap<RelationType, (usize, usize)>,
    pub wsd_accuracy: Option<f64>,
    pub wsd_counts: (usize, usize),
}

fn percent(correct: usize, total: usize) -> f64 {
    (1000.0 * correct as f64 / total as f64).round() / 10.0
}

/// Predicts true iff p > 0.5 and compares with every gold relation label;
/// seed senses are compared when an assignment is given.
pub fn score(
    results: &ScenarioResults,
    gold: &GoldStandard,
    assignment: Option<&SenseAssignment>,
) -> Result<AccuracyReport, EvalError> {
    let missing: Vec<String> = gold
        .relation_labels
        .keys()
        .filter(|k| !results.contains_key(*k))
        .map(|(s, r, t)| format!("{r}({s},{t})"))
        .collect();
    if !missing.is_empty() {
        return Err(EvalError::Coverage(missing));
    }
    let mut report = AccuracyReport::default();
    for (key, &label) in &gold.relation_labels {
        let predicted = results[key] > 0.5;
        let cell = report.counts.entry(key.1).or_default();
        cell.0 += usize::from(predicted == label);
        cell.1 += 1;
    }
    for (rel, &(c, t)) in &report.counts {
        report.per_relation.insert(*rel, percent(c, t));
    }
    if let Some(a) = assignment {
        let total = gold.sense_labels.len();
        let correct = gold
            .sense_labels
            .iter()
            .filter(|(seed, id)| a.sense_of(seed) == Some(**id))
            .count();
        report.wsd_counts = (correct, total);
        if total > 0 {
            report.wsd_accuracy = Some(percent(correct, total));
        }
    }
    Ok(report)
}

fn cell(report: &AccuracyReport, rel: RelationType) -> String {
    report
        .per_relation
        .get(&rel)
        .map_or_else(|| "-".to_string(), |p| format!("{p:.1}"))
}

/// Aligned table: one row per scenario, one column per relation, plus WSD.
pub fn format_table(rows: &[(String, AccuracyReport)]) -> String {
    let name_w = rows
        .iter()
        .map(|(n, _)| n.len())
        .max()
        .unwrap_or(0)
        .max("Scenario".len());
    let mut out = format!("{:<name_w$}", "Scenario");
    for rel in RelationType::ALL {
        let _ = write!(out, "  {:>11}", rel.as_str());
    }
    let _ = writeln!(out, "  {:>6}", "WSD");
    for (name, r) in rows {
        let _ = write!(out, "{name:<name_w$}");
        for rel in RelationType::ALL {
            let _ = write!(out, "  {:>11}", cell(r, rel));
        }
        let wsd = r.wsd_accuracy.map_or_else(|| "-".to_string(), |p| format!("{p:.1}"));
        let _ = writeln!(out, "  {wsd:>6}");
    }
    out
}

/// `scenario\trelation\taccuracy` lines, plus a `WSD` line when available.
pub fn format_lines(rows: &[(String, AccuracyReport)]) -> String {
    let mut out = String::new();
    for (name, r) in rows {
        for (rel, p) in &r.per_relation {
            let _ = writeln!(out, "{name}\t{rel}\t{p:.1}");
        }
        if let Some(w) = r.wsd_accuracy {
            let _ = writeln!(out, "{name}\tWSD\t{w:.1}");
        }
    }
    out
}

//! Ingestion and indexing of a ConceptNet-style relation dump.
//!
//! Two line layouts are accepted and told apart by column count:
//!
//! * the public CSV dump: `assertion<TAB>/r/Rel<TAB>/c/en/start<TAB>/c/en/end<TAB>{json}`
//! * a compact fixture layout: `Rel<TAB>start<TAB>end<TAB>weight`
//!
//! Only the four relations of [`RelationType`] survive ingest. Content errors
//! never abort ingest; they are counted in [`IngestReport`].

use std::collections::HashMap;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use crate::lexicon::LexiconIndex;
use crate::text::normalize_term;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationType {
    IsA,
    AtLocation,
    HasProperty,
    UsedFor,
}

impl RelationType {
    pub const ALL: [RelationType; 4] = [
        RelationType::IsA,
        RelationType::AtLocation,
        RelationType::HasProperty,
        RelationType::UsedFor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RelationType::IsA => "IsA",
            RelationType::AtLocation => "AtLocation",
            RelationType::HasProperty => "HasProperty",
            RelationType::UsedFor => "UsedFor",
        }
    }
}

impl fmt::Display for RelationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RelationType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.strip_prefix("/r/").unwrap_or(s);
        RelationType::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| format!("unknown relation {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConceptEdge {
    pub start: String,
    pub relation: RelationType,
    pub end: String,
    pub weight: f64,
}

#[derive(Debug, thiserror::Error)]
pub enum EdgeError {
    #[error("relation {0} has no positive weight to normalize against")]
    DegenerateScale(RelationType),
}

/// Counters from one ingest pass.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IngestReport {
    pub lines: usize,
    pub retained: usize,
    pub merged: usize,
    pub other_relation: usize,
    pub other_language: usize,
    pub malformed: usize,
}

/// Edges indexed by start and by end term. Iteration follows first occurrence.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct EdgeStore {
    edges: Vec<ConceptEdge>,
    by_start: HashMap<(String, RelationType), Vec<usize>>,
    by_end: HashMap<(String, RelationType), Vec<usize>>,
    by_triple: HashMap<(String, RelationType, String), usize>,
    max_weight: HashMap<RelationType, f64>,
}

impl EdgeStore {
    /// Builds a store, merging duplicate triples by keeping the larger weight.
    /// Returns the store and the number of merged duplicates.
    pub fn from_edges(edges: impl IntoIterator<Item = ConceptEdge>) -> (Self, usize) {
        let mut store = EdgeStore::default();
        let mut merged = 0;
        for e in edges {
            let key = (e.start.clone(), e.relation, e.end.clone());
            if let Some(&i) = store.by_triple.get(&key) {
                merged += 1;
                if e.weight > store.edges[i].weight {
                    store.edges[i].weight = e.weight;
                }
                continue;
            }
            let i = store.edges.len();
            store.by_triple.insert(key, i);
            store.by_start.entry((e.start.clone(), e.relation)).or_default().push(i);
            store.by_end.entry((e.end.clone(), e.relation)).or_default().push(i);
            store.edges.push(e);
        }
        for e in &store.edges {
            let m = store.max_weight.entry(e.relation).or_insert(0.0);
            if e.weight > *m {
                *m = e.weight;
            }
        }
        (store, merged)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[ConceptEdge] {
        &self.edges
    }

    pub fn starting_at(&self, term: &str, relation: RelationType) -> impl Iterator<Item = &ConceptEdge> {
        self.by_start
            .get(&(term.to_string(), relation))
            .into_iter()
            .flatten()
            .map(|&i| &self.edges[i])
    }

    pub fn ending_at(&self, term: &str, relation: RelationType) -> impl Iterator<Item = &ConceptEdge> {
        self.by_end
            .get(&(term.to_string(), relation))
            .into_iter()
            .flatten()
            .map(|&i| &self.edges[i])
    }

    pub fn get(&self, start: &str, relation: RelationType, end: &str) -> Option<&ConceptEdge> {
        self.by_triple
            .get(&(start.to_string(), relation, end.to_string()))
            .map(|&i| &self.edges[i])
    }

    pub fn contains(&self, start: &str, relation: RelationType, end: &str) -> bool {
        self.get(start, relation, end).is_some()
    }

    pub fn max_weight(&self, relation: RelationType) -> f64 {
        self.max_weight.get(&relation).copied().unwrap_or(0.0)
    }

    /// Checks that both indexes cover exactly the stored edges.
    pub fn is_consistent(&self) -> bool {
        let mut seen_start = vec![0usize; self.edges.len()];
        let mut seen_end = vec![0usize; self.edges.len()];
        for ((term, rel), ids) in &self.by_start {
            for &i in ids {
                let e = &self.edges[i];
                if e.start != *term || e.relation != *rel {
                    return false;
                }
                seen_start[i] += 1;
            }
        }
        for ((term, rel), ids) in &self.by_end {
            for &i in ids {
                let e = &self.edges[i];
                if e.end != *term || e.relation != *rel {
                    return false;
                }
                seen_end[i] += 1;
            }
        }
        seen_start.iter().all(|&c| c == 1) && seen_end.iter().all(|&c| c == 1)
    }
}

/// Strips a ConceptNet URI to its term and returns the language tag if any.
/// `/c/en/frying_pan/n` → `("frying_pan", Some("en"))`; `"Frying Pan"` →
/// `("frying_pan", None)`.
pub fn parse_term(raw: &str) -> Option<(String, Option<String>)> {
    let raw = raw.trim();
    if let Some(rest) = raw.strip_prefix("/c/") {
        let mut parts = rest.split('/');
        let lang = parts.next().filter(|l| !l.is_empty())?;
        let term = parts.next().filter(|t| !t.is_empty())?;
        Some((normalize_term(&term.replace('_', " ")), Some(lang.to_string())))
    } else if raw.is_empty() || raw.contains('/') {
        None
    } else {
        Some((normalize_term(&raw.replace('_', " ")), None))
    }
}

enum LineOutcome {
    Edge(ConceptEdge),
    OtherRelation,
    OtherLanguage,
    Malformed(String),
}

fn parse_line(line: &str, language: &str) -> LineOutcome {
    let cols: Vec<&str> = line.split('\t').collect();
    let (rel, start, end, weight) = match cols.len() {
        5 => {
            let meta: serde_json::Value = match serde_json::from_str(cols[4]) {
                Ok(v) => v,
                Err(e) => return LineOutcome::Malformed(format!("metadata: {e}")),
            };
            let weight = match meta.get("weight") {
                None => 1.0,
                Some(w) => match w.as_f64() {
                    Some(w) => w,
                    None => return LineOutcome::Malformed("non-numeric weight".into()),
                },
            };
            (cols[1], cols[2], cols[3], weight)
        }
        4 => match cols[3].trim().parse::<f64>() {
            Ok(w) => (cols[0], cols[1], cols[2], w),
            Err(_) => return LineOutcome::Malformed(format!("bad weight {:?}", cols[3])),
        },
        n => return LineOutcome::Malformed(format!("expected 4 or 5 columns, found {n}")),
    };
    let relation = match rel.trim().parse::<RelationType>() {
        Ok(r) => r,
        Err(_) => return LineOutcome::OtherRelation,
    };
    let (Some((start, start_lang)), Some((end, end_lang))) = (parse_term(start), parse_term(end)) else {
        return LineOutcome::Malformed("unparseable concept term".into());
    };
    let lang_ok = |l: &Option<String>| l.as_deref().is_none_or(|l| l == language);
    if !lang_ok(&start_lang) || !lang_ok(&end_lang) {
        return LineOutcome::OtherLanguage;
    }
    if !weight.is_finite() || weight < 0.0 {
        return LineOutcome::Malformed(format!("negative or non-finite weight {weight}"));
    }
    if relation == RelationType::AtLocation && start == end {
        return LineOutcome::Malformed("self-located concept".into());
    }
    LineOutcome::Edge(ConceptEdge {
        start,
        relation,
        end,
        weight,
    })
}

/// Reads a relation dump, keeping edges of the four supported relations whose
/// terms are tagged with `language` (untagged fixture terms always pass).
pub fn ingest_edges<R: BufRead>(source: R, language: &str) -> std::io::Result<(EdgeStore, IngestReport)> {
    let mut report = IngestReport::default();
    let mut edges = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        report.lines += 1;
        match parse_line(line, language) {
            LineOutcome::Edge(e) => edges.push(e),
            LineOutcome::OtherRelation => report.other_relation += 1,
            LineOutcome::OtherLanguage => report.other_language += 1,
            LineOutcome::Malformed(why) => {
                log::warn!("edge dump line {}: {why}; skipped", i + 1);
                report.malformed += 1;
            }
        }
    }
    let (store, merged) = EdgeStore::from_edges(edges);
    report.merged = merged;
    report.retained = store.len();
    Ok((store, report))
}

/// True when `term` is a phrase of two or more alphabetic words.
pub fn is_multiword(term: &str) -> bool {
    let parts: Vec<&str> = term.split('_').collect();
    parts.len() >= 2
        && parts
            .iter()
            .all(|p| !p.is_empty() && p.chars().all(char::is_alphabetic))
}

/// Drops edges whose end term is a free multiword phrase. End terms that are
/// lexicon lemmas (`frying_pan`) are single concepts and stay.
pub fn filter_multiword(store: &EdgeStore, lexicon: &LexiconIndex) -> EdgeStore {
    let kept = store
        .edges()
        .iter()
        .filter(|e| !is_multiword(&e.end) || lexicon.has_lemma(&e.end))
        .cloned();
    EdgeStore::from_edges(kept).0
}

/// `weight / max weight of the edge's relation`.
pub fn normalized_weight(edge: &ConceptEdge, store: &EdgeStore) -> Result<f64, EdgeError> {
    let max = store.max_weight(edge.relation);
    if max <= 0.0 {
        return Err(EdgeError::DegenerateScale(edge.relation));
    }
    Ok((edge.weight / max).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::parse_lexicon;
    use proptest::prelude::*;

    fn ingest(text: &str) -> (EdgeStore, IngestReport) {
        ingest_edges(text.as_bytes(), "en").unwrap()
    }

    #[test]
    fn parses_csv_dump_line() {
        let (store, report) = ingest(
            "/a/[/r/UsedFor/,/c/en/stove/,/c/en/heat/]\t/r/UsedFor\t/c/en/stove\t/c/en/heat\t{\"dataset\": \"/d/conceptnet/4/en\", \"weight\": 2.0}\n",
        );
        assert_eq!(report.retained, 1);
        let e = &store.edges()[0];
        assert_eq!(
            (e.start.as_str(), e.relation, e.end.as_str(), e.weight),
            ("stove", RelationType::UsedFor, "heat", 2.0)
        );
    }

    #[test]
    fn drops_other_relations_and_languages() {
        let (store, report) = ingest(
            "/a/x\t/r/Antonym\t/c/en/hot\t/c/en/cold\t{\"weight\": 1.0}\n\
             /a/y\t/r/AtLocation\t/c/fr/poele\t/c/fr/cuisine\t{\"weight\": 1.0}\n\
             /a/z\t/r/AtLocation\t/c/en/pan/n\t/c/en/kitchen\t{}\n",
        );
        assert_eq!(store.len(), 1);
        assert_eq!(store.edges()[0].weight, 1.0, "missing weight defaults to 1");
        assert_eq!((report.other_relation, report.other_language), (1, 1));
    }

    #[test]
    fn malformed_lines_are_counted_not_fatal() {
        let (store, report) = ingest("garbage\nUsedFor\tbroom\tsweep\tnot-a-number\nUsedFor\tbroom\tsweep\t1.5\n");
        assert_eq!(report.malformed, 2);
        assert_eq!(store.len(), 1);
    }

    #[test]
    fn duplicates_merge_to_max_weight() {
        let (store, report) =
            ingest("UsedFor\tbroom\tsweep\t1.0\nUsedFor\tbroom\tsweep\t3.0\nUsedFor\tbroom\tsweep\t2.0\n");
        assert_eq!(store.len(), 1);
        assert_eq!(report.merged, 2);
        assert_eq!(store.edges()[0].weight, 3.0);
    }

    #[test]
    fn normalizes_against_relation_max() {
        let (store, _) = ingest("UsedFor\ta\tb\t1.0\nUsedFor\tc\td\t4.0\nAtLocation\ta\tk\t0.5\n");
        let w: Vec<f64> = store
            .edges()
            .iter()
            .map(|e| normalized_weight(e, &store).unwrap())
            .collect();
        assert_eq!(w, vec![0.25, 1.0, 1.0]);
        let (zero, _) = ingest("UsedFor\ta\tb\t0\n");
        assert!(normalized_weight(&zero.edges()[0], &zero).is_err());
    }

    #[test]
    fn multiword_filter_spares_lexicon_lemmas() {
        let lex = parse_lexicon(
            "paper_towel n 1 0 1 0 00000001\n".as_bytes(),
            "00000001 06 n 01 paper_towel 0 000 | a disposable towel\n".as_bytes(),
        )
        .unwrap();
        let (store, _) = ingest(
            "UsedFor\tapple\tsatisfy_hunger\t1\nIsA\tpaper_towel\tpaper_towel\t1\nAtLocation\tcheese_cake\tfridge\t1\n",
        );
        let kept = filter_multiword(&store, &lex);
        let ends: Vec<&str> = kept.edges().iter().map(|e| e.end.as_str()).collect();
        assert_eq!(ends, vec!["paper_towel", "fridge"]);
        assert_eq!(filter_multiword(&kept, &lex), kept);
    }

    fn arb_term() -> impl Strategy<Value = String> {
        prop_oneof![
            "[a-c]{1,3}".prop_map(|s| s),
            ("[a-c]{1,3}", "[a-c]{1,3}").prop_map(|(a, b)| format!("{a}_{b}")),
        ]
    }

    proptest! {
        #[test]
        fn indexes_agree_and_filter_is_idempotent(
            rows in proptest::collection::vec((0usize..4, arb_term(), arb_term(), 0u32..5), 0..40)
        ) {
            let edges = rows.into_iter().filter_map(|(r, s, e, w)| {
                let relation = RelationType::ALL[r];
                (relation != RelationType::AtLocation || s != e)
                    .then_some(ConceptEdge { start: s, relation, end: e, weight: w as f64 })
            });
            let (store, _) = EdgeStore::from_edges(edges);
            prop_assert!(store.is_consistent());
            let lex = parse_lexicon("a_a n 1 0 1 0 00000001\n".as_bytes(),
                "00000001 06 n 01 a_a 0 000 | x\n".as_bytes()).unwrap();
            let once = filter_multiword(&store, &lex);
            prop_assert!(once.is_consistent());
            prop_assert_eq!(filter_multiword(&once, &lex), once);
        }
    }
}

use std::collections::HashMap;
use std::io::BufRead;

use super::LexiconError;
use crate::text::normalize_term;

/// Word occurrence counts from a reference corpus.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CorpusFrequencies {
    counts: HashMap<String, u64>,
    total: u64,
}

impl CorpusFrequencies {
    /// Builds from `(word, count)` pairs; zero counts are dropped and repeated
    /// words are summed.
    pub fn from_counts<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, u64)>,
        S: AsRef<str>,
    {
        let mut counts: HashMap<String, u64> = HashMap::new();
        for (word, count) in pairs {
            if count == 0 {
                continue;
            }
            *counts.entry(normalize_term(word.as_ref())).or_default() += count;
        }
        let total = counts.values().sum();
        CorpusFrequencies { counts, total }
    }

    /// Reads `word<TAB>count` lines.
    pub fn read<R: BufRead>(reader: R, source_name: &str) -> Result<Self, LexiconError> {
        let mut pairs = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let err = |message: String| LexiconError::Parse {
                source_name: source_name.to_string(),
                line: i + 1,
                message,
            };
            let line = line.map_err(|e| err(e.to_string()))?;
            let line = line.trim_end();
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let (word, count) = line
                .split_once('\t')
                .ok_or_else(|| err("expected word<TAB>count".into()))?;
            let count: u64 = count.trim().parse().map_err(|_| err(format!("bad count {count:?}")))?;
            pairs.push((word.to_string(), count));
        }
        Ok(CorpusFrequencies::from_counts(pairs))
    }

    pub fn count(&self, word: &str) -> Option<u64> {
        self.counts.get(&normalize_term(word)).copied()
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> {
        self.counts.iter().map(|(w, c)| (w.as_str(), *c))
    }
}

/// `-ln(count/total)`; unseen words get `-ln(1/(total+1))` so they are never
/// treated as very general.
pub fn information_content(word: &str, freq: &CorpusFrequencies) -> f64 {
    match freq.count(word) {
        Some(c) => -(c as f64 / freq.total as f64).ln(),
        None => -(1.0 / (freq.total as f64 + 1.0)).ln(),
    }
}

//! Term normalization and the tokenizer shared by gloss profiles and the ESA index.

use std::collections::HashSet;
use std::io::BufRead;

/// Lowercases a term and joins whitespace-separated parts with underscores.
///
/// `"Frying Pan"` and `"frying_pan"` both become `"frying_pan"`.
pub fn normalize_term(term: &str) -> String {
    term.split_whitespace()
        .map(|part| part.to_lowercase())
        .collect::<Vec<_>>()
        .join("_")
}

/// Display name of a graph or model entity: everything before the first `:`.
pub fn base_term(id: &str) -> &str {
    id.split(':').next().unwrap_or(id)
}

/// A set of stopwords, matched after lowercasing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stopwords {
    words: HashSet<String>,
}

impl Stopwords {
    pub fn new<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Stopwords {
            words: words
                .into_iter()
                .map(|w| w.as_ref().trim().to_lowercase())
                .filter(|w| !w.is_empty())
                .collect(),
        }
    }

    /// Reads one word per line; blank lines and `#` comments are skipped.
    pub fn read<R: BufRead>(reader: R) -> std::io::Result<Self> {
        let mut words = Vec::new();
        for line in reader.lines() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            words.push(line.to_string());
        }
        Ok(Stopwords::new(words))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Lowercases, splits on non-alphanumeric boundaries, and drops stopwords and
/// tokens shorter than two characters.
pub fn tokenize(text: &str, stopwords: &Stopwords) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|tok| !tok.is_empty())
        .map(|tok| tok.to_lowercase())
        .filter(|tok| tok.chars().count() >= 2 && !stopwords.contains(tok))
        .collect()
}

/// Removes duplicates while keeping the first occurrence of each item.
pub(crate) fn dedup_preserving_order(items: impl IntoIterator<Item = String>) -> Vec<String> {
    let mut seen = HashSet::new();
    items.into_iter().filter(|item| seen.insert(item.clone())).collect()
}

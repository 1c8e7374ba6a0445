//! Explicit Semantic Analysis: words as sparse vectors over corpus documents,
//! relatedness as the cosine between those vectors.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::io::BufRead;

use crate::text::{tokenize, Stopwords};

/// Anything that scores how related two terms are, in `[0, 1]`.
///
/// Implementations must be symmetric, return 1 for a known term against
/// itself, and 0 for pairs they know nothing about.
pub trait RelatednessProvider {
    fn score(&self, a: &str, b: &str) -> f64;
}

impl<P: RelatednessProvider + ?Sized> RelatednessProvider for &P {
    fn score(&self, a: &str, b: &str) -> f64 {
        (**self).score(a, b)
    }
}

/// Provider that knows nothing: every pair scores 0.
#[derive(Debug, Clone, Copy, Default)]
pub struct NullProvider;

impl RelatednessProvider for NullProvider {
    fn score(&self, _a: &str, _b: &str) -> f64 {
        0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Weighting {
    #[default]
    RawCount,
    TfIdf,
}

impl Weighting {
    fn as_str(self) -> &'static str {
        match self {
            Weighting::RawCount => "raw_count",
            Weighting::TfIdf => "tfidf",
        }
    }
}

impl std::str::FromStr for Weighting {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "raw_count" | "raw" => Ok(Weighting::RawCount),
            "tfidf" => Ok(Weighting::TfIdf),
            _ => Err(format!("unknown weighting {s:?} (expected raw_count or tfidf)")),
        }
    }
}

pub type SparseVector = Vec<(u32, f64)>;

#[derive(Debug, thiserror::Error)]
pub enum EsaError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct EsaIndex {
    concepts: Vec<String>,
    vectors: BTreeMap<String, SparseVector>,
    weighting: Weighting,
}

impl EsaIndex {
    pub fn concepts(&self) -> &[String] {
        &self.concepts
    }

    pub fn weighting(&self) -> Weighting {
        self.weighting
    }

    pub fn vector(&self, word: &str) -> Option<&SparseVector> {
        self.vectors.get(word)
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.vectors.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Serializes to a line-oriented text form that parses back bit-exactly.
    pub fn to_text(&self) -> String {
        let mut out = format!("ESA\t{}\n", self.weighting.as_str());
        for c in &self.concepts {
            let _ = writeln!(out, "CONCEPT\t{c}");
        }
        for (word, vec) in &self.vectors {
            let _ = write!(out, "WORD\t{word}\t");
            let cells: Vec<String> = vec.iter().map(|(i, w)| format!("{i}:{w:?}")).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }

    pub fn from_text<R: BufRead>(reader: R) -> Result<Self, EsaError> {
        let mut weighting = None;
        let mut concepts = Vec::new();
        let mut vectors = BTreeMap::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let err = |m: &str| EsaError::Format {
                line: i + 1,
                message: m.to_string(),
            };
            let mut cols = line.split('\t');
            match cols.next() {
                Some("ESA") => {
                    let w = cols.next().ok_or_else(|| err("missing weighting"))?;
                    weighting = Some(w.parse().map_err(|e: String| err(&e))?);
                }
                Some("CONCEPT") => concepts.push(cols.next().unwrap_or_default().to_string()),
                Some("WORD") => {
                    let word = cols.next().ok_or_else(|| err("missing word"))?;
                    let cells = cols.next().unwrap_or_default();
                    let mut vec = SparseVector::new();
                    for cell in cells.split_whitespace() {
                        let (idx, w) = cell.split_once(':').ok_or_else(|| err("bad cell"))?;
                        let idx: u32 = idx.parse().map_err(|_| err("bad concept index"))?;
                        let w: f64 = w.parse().map_err(|_| err("bad weight"))?;
                        vec.push((idx, w));
                    }
                    vectors.insert(word.to_string(), vec);
                }
                Some("") | None => {}
                Some(other) => return Err(err(&format!("unknown record {other:?}"))),
            }
        }
        Ok(EsaIndex {
            concepts,
            vectors,
            weighting: weighting.ok_or(EsaError::Format {
                line: 1,
                message: "missing ESA header".into(),
            })?,
        })
    }

    /// Vector for a term; multiword terms (`frying_pan`) sum their token vectors.
    pub fn term_vector(&self, term: &str, stopwords: &Stopwords) -> SparseVector {
        if let Some(v) = self.vectors.get(term) {
            return v.clone();
        }
        let mut acc: BTreeMap<u32, f64> = BTreeMap::new();
        for tok in tokenize(term, stopwords) {
            if let Some(v) = self.vectors.get(&tok) {
                for &(i, w) in v {
                    *acc.entry(i).or_default() += w;
                }
            }
        }
        acc.into_iter().filter(|(_, w)| *w > 0.0).collect()
    }
}

/// Reads `title<TAB>text` lines.
pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<(String, String)>, EsaError> {
    let mut docs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let (title, text) = line.split_once('\t').ok_or(EsaError::Format {
            line: i + 1,
            message: "expected title<TAB>text".into(),
        })?;
        docs.push((title.to_string(), text.to_string()));
    }
    Ok(docs)
}

/// Builds the word-by-document table. Words found in fewer than
/// `min_doc_freq` documents are left out.
pub fn build_esa_index<T, X>(
    documents: &[(T, X)],
    weighting: Weighting,
    stopwords: &Stopwords,
    min_doc_freq: usize,
) -> EsaIndex
where
    T: AsRef<str>,
    X: AsRef<str>,
{
    let n_docs = documents.len();
    let mut counts: HashMap<String, BTreeMap<u32, u64>> = HashMap::new();
    for (doc, (_, text)) in documents.iter().enumerate() {
        for tok in tokenize(text.as_ref(), stopwords) {
            *counts.entry(tok).or_default().entry(doc as u32).or_default() += 1;
        }
    }
    let vectors = counts
        .into_iter()
        .filter(|(_, docs)| docs.len() >= min_doc_freq)
        .map(|(word, docs)| {
            let idf = (n_docs as f64 / docs.len() as f64).ln();
            let vec: SparseVector = docs
                .into_iter()
                .map(|(d, c)| match weighting {
                    Weighting::RawCount => (d, c as f64),
                    Weighting::TfIdf => (d, c as f64 * idf),
                })
                .filter(|(_, w)| *w > 0.0)
                .collect();
            (word, vec)
        })
        .collect();
    EsaIndex {
        concepts: documents.iter().map(|(t, _)| t.as_ref().to_string()).collect(),
        vectors,
        weighting,
    }
}

/// Cosine of two index-sorted sparse vectors; 0 if either has zero norm.
pub fn sparse_cosine(a: &SparseVector, b: &SparseVector) -> f64 {
    let norm = |v: &SparseVector| v.iter().map(|(_, w)| w * w).sum::<f64>().sqrt();
    let (na, nb) = (norm(a), norm(b));
    if na == 0.0 || nb == 0.0 {
        return 0.0;
    }
    let (mut i, mut j, mut dot) = (0, 0, 0.0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                dot += a[i].1 * b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    (dot / (na * nb)).clamp(0.0, 1.0)
}

/// Cosine relatedness of two indexed words; 0 when either is absent.
pub fn esa_relatedness(index: &EsaIndex, a: &str, b: &str) -> f64 {
    match (index.vector(a), index.vector(b)) {
        (Some(va), Some(vb)) => {
            if a == b && !va.is_empty() {
                1.0
            } else {
                sparse_cosine(va, vb)
            }
        }
        _ => 0.0,
    }
}

/// ESA-backed provider over normalized terms, with a per-term vector cache.
pub struct EsaProvider {
    index: EsaIndex,
    stopwords: Stopwords,
    cache: std::sync::RwLock<HashMap<String, SparseVector>>,
}

impl EsaProvider {
    pub fn new(index: EsaIndex, stopwords: Stopwords) -> Self {
        EsaProvider {
            index,
            stopwords,
            cache: Default::default(),
        }
    }

    pub fn index(&self) -> &EsaIndex {
        &self.index
    }

    fn vector(&self, term: &str) -> SparseVector {
        if let Some(v) = self.cache.read().unwrap().get(term) {
            return v.clone();
        }
        let v = self.index.term_vector(term, &self.stopwords);
        self.cache.write().unwrap().insert(term.to_string(), v.clone());
        v
    }
}

impl RelatednessProvider for EsaProvider {
    fn score(&self, a: &str, b: &str) -> f64 {
        let va = self.vector(a);
        if a == b {
            return if va.is_empty() { 0.0 } else { 1.0 };
        }
        sparse_cosine(&va, &self.vector(b))
    }
}

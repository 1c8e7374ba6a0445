//! In-memory lexical database: synsets, the lemma index, and hierarchy queries.
//!
//! The index is built once by [`LexiconBuilder`] (usually through
//! [`parse_lexicon`] or [`LexiconIndex::load_dir`]) and is immutable afterwards.
//! Building reconstructs missing inverse links, rejects hypernym cycles, and
//! precomputes every synset's depth so similarity queries are cheap.

mod frequency;
mod parse;
mod profile;
mod similarity;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

pub use frequency::{information_content, CorpusFrequencies};
pub use parse::{parse_lexicon, write_data, write_index};
pub use profile::{wsp_neighbors, SourceKind};
pub use similarity::wup_similarity;

use crate::text::normalize_term;

#[derive(Debug, thiserror::Error)]
pub enum LexiconError {
    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },
    #[error("hypernym cycle: {}", .0.iter().map(|id| id.to_string()).collect::<Vec<_>>().join(" -> "))]
    Cycle(Vec<SynsetId>),
    #[error("synset {from} points to unknown synset {to}")]
    DanglingPointer { from: SynsetId, to: SynsetId },
    #[error("index entry {lemma:?} references unknown synset {id}")]
    UnknownIndexTarget { lemma: String, id: SynsetId },
    #[error("synsets {0} and {1} share no ancestor")]
    NoCommonAncestor(SynsetId, SynsetId),
    #[error("unknown synset {0}")]
    UnknownSynset(SynsetId),
    #[error("i/o error reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Syntactic category. Satellite adjectives share the adjective id space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pos {
    Noun,
    Verb,
    Adjective,
    AdjectiveSatellite,
    Adverb,
}

impl Pos {
    pub fn from_tag(tag: &str) -> Option<Pos> {
        match tag {
            "n" => Some(Pos::Noun),
            "v" => Some(Pos::Verb),
            "a" => Some(Pos::Adjective),
            "s" => Some(Pos::AdjectiveSatellite),
            "r" => Some(Pos::Adverb),
            _ => None,
        }
    }

    pub fn tag(self) -> char {
        match self {
            Pos::Noun => 'n',
            Pos::Verb => 'v',
            Pos::Adjective => 'a',
            Pos::AdjectiveSatellite => 's',
            Pos::Adverb => 'r',
        }
    }

    /// The category used for ids, index keys and file names.
    pub fn file_pos(self) -> Pos {
        match self {
            Pos::AdjectiveSatellite => Pos::Adjective,
            other => other,
        }
    }

    pub fn file_suffix(self) -> &'static str {
        match self.file_pos() {
            Pos::Noun => "noun",
            Pos::Verb => "verb",
            Pos::Adverb => "adv",
            _ => "adj",
        }
    }
}

/// A synset id: its offset in the data file plus the file's category,
/// rendered as `00012345-n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SynsetId {
    pub offset: u32,
    pub pos: Pos,
}

impl SynsetId {
    pub fn new(offset: u32, pos: Pos) -> Self {
        SynsetId {
            offset,
            pos: pos.file_pos(),
        }
    }
}

impl fmt::Display for SynsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:08}-{}", self.offset, self.pos.tag())
    }
}

impl FromStr for SynsetId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (offset, pos) = s.split_once('-').ok_or_else(|| format!("malformed synset id {s:?}"))?;
        let offset = offset
            .parse::<u32>()
            .map_err(|_| format!("malformed synset offset in {s:?}"))?;
        let pos = Pos::from_tag(pos).ok_or_else(|| format!("unknown pos in {s:?}"))?;
        Ok(SynsetId::new(offset, pos))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Synset {
    pub id: SynsetId,
    pub pos: Pos,
    pub lemmas: Vec<String>,
    pub gloss: String,
    pub hypernyms: Vec<SynsetId>,
    pub hyponyms: Vec<SynsetId>,
    pub meronyms: Vec<SynsetId>,
    pub holonyms: Vec<SynsetId>,
}

impl Synset {
    /// The lemma used to name this synset in generated graphs.
    pub fn head_lemma(&self) -> &str {
        &self.lemmas[0]
    }

    pub fn has_lemma(&self, lemma: &str) -> bool {
        let lemma = normalize_term(lemma);
        self.lemmas.contains(&lemma)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LexiconIndex {
    synsets: BTreeMap<SynsetId, Synset>,
    lemma_index: BTreeMap<(String, Pos), Vec<SynsetId>>,
    roots: Vec<SynsetId>,
    depths: HashMap<SynsetId, usize>,
}

impl LexiconIndex {
    /// Loads every `index.<pos>`/`data.<pos>` pair found in `dir`.
    pub fn load_dir(dir: impl AsRef<Path>) -> Result<Self, LexiconError> {
        let dir = dir.as_ref();
        let mut builder = LexiconBuilder::default();
        let mut found = false;
        for suffix in ["noun", "verb", "adj", "adv"] {
            let index_path = dir.join(format!("index.{suffix}"));
            let data_path = dir.join(format!("data.{suffix}"));
            if !index_path.exists() || !data_path.exists() {
                continue;
            }
            found = true;
            let open = |p: &Path| {
                std::fs::File::open(p)
                    .map(std::io::BufReader::new)
                    .map_err(|source| LexiconError::Io {
                        path: p.display().to_string(),
                        source,
                    })
            };
            builder.add_data(open(&data_path)?, &data_path.display().to_string())?;
            builder.add_index(open(&index_path)?, &index_path.display().to_string())?;
        }
        if !found {
            return Err(LexiconError::Io {
                path: dir.display().to_string(),
                source: std::io::Error::new(std::io::ErrorKind::NotFound, "no index.<pos>/data.<pos> pair found"),
            });
        }
        builder.finish()
    }

    pub fn len(&self) -> usize {
        self.synsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.synsets.is_empty()
    }

    pub fn synset(&self, id: SynsetId) -> Option<&Synset> {
        self.synsets.get(&id)
    }

    pub fn synsets(&self) -> impl Iterator<Item = &Synset> {
        self.synsets.values()
    }

    pub fn roots(&self) -> &[SynsetId] {
        &self.roots
    }

    pub fn lemma_index(&self) -> &BTreeMap<(String, Pos), Vec<SynsetId>> {
        &self.lemma_index
    }

    /// Senses of `word` in rank order. Unknown words yield an empty list.
    pub fn senses(&self, word: &str, pos: Pos) -> Vec<&Synset> {
        self.sense_ids(word, pos)
            .iter()
            .filter_map(|id| self.synsets.get(id))
            .collect()
    }

    pub fn sense_ids(&self, word: &str, pos: Pos) -> &[SynsetId] {
        self.lemma_index
            .get(&(normalize_term(word), pos.file_pos()))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// True when `term` is a lemma of any category.
    pub fn has_lemma(&self, term: &str) -> bool {
        let term = normalize_term(term);
        [Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb]
            .iter()
            .any(|&pos| self.lemma_index.contains_key(&(term.clone(), pos)))
    }

    /// Number of synsets on the deepest path from a root to `id`, inclusive.
    pub fn depth(&self, id: SynsetId) -> Option<usize> {
        self.depths.get(&id).copied()
    }

    /// `id` together with all of its transitive hypernyms.
    pub fn ancestors(&self, id: SynsetId) -> HashSet<SynsetId> {
        let mut seen = HashSet::new();
        let mut stack = vec![id];
        while let Some(cur) = stack.pop() {
            if !seen.insert(cur) {
                continue;
            }
            if let Some(s) = self.synsets.get(&cur) {
                stack.extend(s.hypernyms.iter().copied());
            }
        }
        seen
    }

    /// Categories present in the index, in file order.
    pub fn categories(&self) -> Vec<Pos> {
        let mut out: Vec<Pos> = self.synsets.keys().map(|id| id.pos).collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Accumulates data and index files, then validates and links them.
#[derive(Debug, Default)]
pub struct LexiconBuilder {
    synsets: BTreeMap<SynsetId, Synset>,
    lemma_index: BTreeMap<(String, Pos), Vec<SynsetId>>,
}

impl LexiconBuilder {
    pub fn add_data<R: std::io::BufRead>(&mut self, reader: R, source_name: &str) -> Result<(), LexiconError> {
        for synset in parse::read_data(reader, source_name)? {
            self.synsets.insert(synset.id, synset);
        }
        Ok(())
    }

    pub fn add_index<R: std::io::BufRead>(&mut self, reader: R, source_name: &str) -> Result<(), LexiconError> {
        for (lemma, pos, ids) in parse::read_index(reader, source_name)? {
            let entry = self.lemma_index.entry((lemma, pos)).or_default();
            for id in ids {
                if !entry.contains(&id) {
                    entry.push(id);
                }
            }
        }
        Ok(())
    }

    pub fn finish(self) -> Result<LexiconIndex, LexiconError> {
        let LexiconBuilder {
            mut synsets,
            lemma_index,
        } = self;

        for ((lemma, _), ids) in &lemma_index {
            if let Some(id) = ids.iter().find(|id| !synsets.contains_key(id)) {
                return Err(LexiconError::UnknownIndexTarget {
                    lemma: lemma.clone(),
                    id: *id,
                });
            }
        }

        for s in synsets.values() {
            for to in s
                .hypernyms
                .iter()
                .chain(&s.hyponyms)
                .chain(&s.meronyms)
                .chain(&s.holonyms)
            {
                if !synsets.contains_key(to) {
                    return Err(LexiconError::DanglingPointer { from: s.id, to: *to });
                }
            }
        }

        // Inverse links: whatever one side declares, the other side gets.
        let mut extra_hyper: Vec<(SynsetId, SynsetId)> = Vec::new();
        let mut extra_hypo: Vec<(SynsetId, SynsetId)> = Vec::new();
        let mut extra_mero: Vec<(SynsetId, SynsetId)> = Vec::new();
        let mut extra_holo: Vec<(SynsetId, SynsetId)> = Vec::new();
        for s in synsets.values() {
            extra_hypo.extend(s.hypernyms.iter().map(|h| (*h, s.id)));
            extra_hyper.extend(s.hyponyms.iter().map(|h| (*h, s.id)));
            extra_holo.extend(s.meronyms.iter().map(|m| (*m, s.id)));
            extra_mero.extend(s.holonyms.iter().map(|h| (*h, s.id)));
        }
        let push_unique = |list: &mut Vec<SynsetId>, id: SynsetId| {
            if !list.contains(&id) {
                list.push(id);
            }
        };
        for (at, id) in extra_hyper {
            push_unique(&mut synsets.get_mut(&at).unwrap().hypernyms, id);
        }
        for (at, id) in extra_hypo {
            push_unique(&mut synsets.get_mut(&at).unwrap().hyponyms, id);
        }
        for (at, id) in extra_mero {
            push_unique(&mut synsets.get_mut(&at).unwrap().meronyms, id);
        }
        for (at, id) in extra_holo {
            push_unique(&mut synsets.get_mut(&at).unwrap().holonyms, id);
        }

        let depths = compute_depths(&synsets)?;
        let roots = synsets
            .values()
            .filter(|s| s.hypernyms.is_empty())
            .map(|s| s.id)
            .collect();

        Ok(LexiconIndex {
            synsets,
            lemma_index,
            roots,
            depths,
        })
    }
}

/// Max-path depths with root depth 1; fails on the first hypernym cycle found.
fn compute_depths(synsets: &BTreeMap<SynsetId, Synset>) -> Result<HashMap<SynsetId, usize>, LexiconError> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Active,
        Done,
    }

    let mut depths: HashMap<SynsetId, usize> = HashMap::with_capacity(synsets.len());
    let mut marks: HashMap<SynsetId, Mark> = HashMap::with_capacity(synsets.len());

    for &start in synsets.keys() {
        if marks.contains_key(&start) {
            continue;
        }
        // Iterative DFS: (node, next hypernym index).
        let mut stack: Vec<(SynsetId, usize)> = vec![(start, 0)];
        marks.insert(start, Mark::Active);
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            let hypers = &synsets[&node].hypernyms;
            if *next < hypers.len() {
                let h = hypers[*next];
                *next += 1;
                match marks.get(&h) {
                    Some(Mark::Done) => {}
                    Some(Mark::Active) => {
                        let pos = stack.iter().position(|(n, _)| *n == h).unwrap();
                        let mut cycle: Vec<SynsetId> = stack[pos..].iter().map(|(n, _)| *n).collect();
                        cycle.push(h);
                        return Err(LexiconError::Cycle(cycle));
                    }
                    None => {
                        marks.insert(h, Mark::Active);
                        stack.push((h, 0));
                    }
                }
            } else {
                let depth = 1 + hypers.iter().map(|h| depths[h]).max().unwrap_or(0);
                depths.insert(node, depth);
                marks.insert(node, Mark::Done);
                stack.pop();
            }
        }
    }
    Ok(depths)
}

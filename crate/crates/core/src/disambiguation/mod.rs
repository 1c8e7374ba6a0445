//! Sense selection for seed words (spanning-tree growth over Wu-Palmer cost)
//! and for the ambiguous end of a relation (word sense profiles scored by a
//! relatedness provider).

mod edge;
mod seeds;

pub use edge::{build_wsp, disambiguate_edge, WordSenseProfile};
pub use seeds::{disambiguate_seeds, grow_tree, pairwise_cost, sense_cost, GrownTree};

use std::fmt::Write as _;

use crate::lexicon::SynsetId;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum DisambiguationError {
    #[error("seed word {0:?} has no noun sense in the lexicon")]
    UnknownSeed(String),
    #[error("no seed words given")]
    NoSeeds,
    #[error("term {0:?} has no noun sense in the lexicon")]
    UnknownTerm(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeedChoice {
    pub word: String,
    pub synset: SynsetId,
    /// Cost of the tree edge that attached this word; 0 for the start word.
    pub cost: f64,
}

/// Chosen sense for every seed, in seed input order.
#[derive(Debug, Clone, PartialEq)]
pub struct SenseAssignment {
    pub choices: Vec<SeedChoice>,
    pub total_cost: f64,
    pub start_word: String,
}

impl SenseAssignment {
    pub fn sense_of(&self, word: &str) -> Option<SynsetId> {
        self.choices.iter().find(|c| c.word == word).map(|c| c.synset)
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.choices.iter().map(|c| c.word.as_str())
    }

    /// `word<TAB>synset_id` lines in seed order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.choices {
            let _ = writeln!(out, "{}\t{}", c.word, c.synset);
        }
        out
    }
}

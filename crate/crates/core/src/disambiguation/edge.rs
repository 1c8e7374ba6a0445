use super::DisambiguationError;
use crate::lexicon::{wsp_neighbors, LexiconIndex, Pos, SourceKind, Synset, SynsetId};
use crate::relatedness::RelatednessProvider;
use crate::text::{dedup_preserving_order, normalize_term, Stopwords};

/// Context words of one sense, drawn from all five sources in order.
#[derive(Debug, Clone, PartialEq)]
pub struct WordSenseProfile {
    pub sense: SynsetId,
    pub words: Vec<String>,
}

pub fn build_wsp(sense: &Synset, lexicon: &LexiconIndex, stopwords: &Stopwords) -> WordSenseProfile {
    let words = SourceKind::ALL
        .into_iter()
        .flat_map(|kind| wsp_neighbors(lexicon, sense, kind, stopwords));
    WordSenseProfile {
        sense: sense.id,
        words: dedup_preserving_order(words),
    }
}

/// Chooses the noun sense of `d` whose profile is most related to `c`.
///
/// A sense's score is the sum of `provider.score(c, w)` over its profile
/// words; the lowest-ranked sense wins ties.
pub fn disambiguate_edge<P: RelatednessProvider + ?Sized>(
    c: &str,
    d: &str,
    lexicon: &LexiconIndex,
    provider: &P,
    stopwords: &Stopwords,
) -> Result<(SynsetId, f64), DisambiguationError> {
    let c = normalize_term(c);
    let senses = lexicon.senses(d, Pos::Noun);
    let mut best: Option<(SynsetId, f64)> = None;
    for sense in senses {
        let profile = build_wsp(sense, lexicon, stopwords);
        let score: f64 = profile.words.iter().map(|w| provider.score(&c, w)).sum();
        if best.is_none_or(|(_, b)| score > b) {
            best = Some((sense.id, score));
        }
    }
    best.ok_or_else(|| DisambiguationError::UnknownTerm(normalize_term(d)))
}

use super::{LexiconIndex, Synset, SynsetId};
use crate::text::{dedup_preserving_order, tokenize, Stopwords};

/// The five places a sense's context words are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SourceKind {
    Synonyms,
    GlossWords,
    DirectHypernymsHyponyms,
    MeronymsHolonyms,
    HyponymGlossWords,
}

impl SourceKind {
    pub const ALL: [SourceKind; 5] = [
        SourceKind::Synonyms,
        SourceKind::GlossWords,
        SourceKind::DirectHypernymsHyponyms,
        SourceKind::MeronymsHolonyms,
        SourceKind::HyponymGlossWords,
    ];
}

/// Context words of one kind for `sense`, deduplicated in first-seen order.
pub fn wsp_neighbors(lexicon: &LexiconIndex, sense: &Synset, kind: SourceKind, stopwords: &Stopwords) -> Vec<String> {
    let lemmas_of = |ids: &[SynsetId]| -> Vec<String> {
        ids.iter()
            .filter_map(|id| lexicon.synset(*id))
            .flat_map(|s| s.lemmas.iter().cloned())
            .collect()
    };
    let words: Vec<String> = match kind {
        SourceKind::Synonyms => sense.lemmas.clone(),
        SourceKind::GlossWords => tokenize(&sense.gloss, stopwords),
        SourceKind::DirectHypernymsHyponyms => {
            let mut w = lemmas_of(&sense.hypernyms);
            w.extend(lemmas_of(&sense.hyponyms));
            w
        }
        SourceKind::MeronymsHolonyms => {
            let mut w = lemmas_of(&sense.meronyms);
            w.extend(lemmas_of(&sense.holonyms));
            w
        }
        SourceKind::HyponymGlossWords => sense
            .hyponyms
            .iter()
            .filter_map(|id| lexicon.synset(*id))
            .flat_map(|s| tokenize(&s.gloss, stopwords))
            .collect(),
    };
    dedup_preserving_order(words.into_iter().filter(|w| !w.is_empty() && !stopwords.contains(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::parse_lexicon;

    const DATA: &str = "\
00000001 06 n 01 cooking_utensil 0 001 ~ 00000002 n 0000 | a kitchen utensil made of material that does not melt easily
00000002 06 n 02 pan 0 cooking_pan 0 002 @ 00000001 n 0000 %p 00000004 n 0000 | cooking utensil consisting of wide metal vessel
00000003 06 n 01 frying_pan 0 001 @ 00000002 n 0000 | a pan used for frying foods
00000004 06 n 01 handle 0 000 | the appendage to an object that is designed to be held
00000005 06 n 01 lonely 0 000 | a of
";

    fn lex() -> LexiconIndex {
        parse_lexicon("".as_bytes(), DATA.as_bytes()).unwrap()
    }

    #[test]
    fn synonyms_of_cooking_pan() {
        let l = lex();
        let pan = l.synset("00000002-n".parse().unwrap()).unwrap();
        let words = wsp_neighbors(&l, pan, SourceKind::Synonyms, &Stopwords::default());
        assert_eq!(words, vec!["pan", "cooking_pan"]);
    }

    #[test]
    fn gloss_words_drop_stopwords() {
        let l = lex();
        let pan = l.synset("00000002-n".parse().unwrap()).unwrap();
        let words = wsp_neighbors(&l, pan, SourceKind::GlossWords, &Stopwords::new(["of"]));
        assert_eq!(
            words,
            vec!["cooking", "utensil", "consisting", "wide", "metal", "vessel"]
        );
    }

    #[test]
    fn link_kinds_use_linked_lemmas() {
        let l = lex();
        let pan = l.synset("00000002-n".parse().unwrap()).unwrap();
        let stop = Stopwords::new(["a", "for"]);
        assert_eq!(
            wsp_neighbors(&l, pan, SourceKind::DirectHypernymsHyponyms, &stop),
            vec!["cooking_utensil", "frying_pan"]
        );
        assert_eq!(
            wsp_neighbors(&l, pan, SourceKind::MeronymsHolonyms, &stop),
            vec!["handle"]
        );
        assert_eq!(
            wsp_neighbors(&l, pan, SourceKind::HyponymGlossWords, &stop),
            vec!["pan", "used", "frying", "foods"]
        );
    }

    #[test]
    fn missing_links_give_empty_lists() {
        let l = lex();
        let lonely = l.synset("00000005-n".parse().unwrap()).unwrap();
        let stop = Stopwords::new(["a", "of"]);
        for kind in SourceKind::ALL.into_iter().skip(1) {
            assert!(wsp_neighbors(&l, lonely, kind, &stop).is_empty(), "{kind:?}");
        }
    }
}

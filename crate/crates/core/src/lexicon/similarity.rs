use super::{LexiconError, LexiconIndex, Synset};

/// Wu-Palmer similarity: `2·depth(lcs) / (depth(a) + depth(b))`.
///
/// Depth counts synsets from a root inclusive, taking the longest path when a
/// synset has several hypernyms. The least common subsumer is the shared
/// ancestor (or self) of greatest depth.
pub fn wup_similarity(lexicon: &LexiconIndex, a: &Synset, b: &Synset) -> Result<f64, LexiconError> {
    let depth_of = |id| lexicon.depth(id).ok_or(LexiconError::UnknownSynset(id));
    let da = depth_of(a.id)?;
    let db = depth_of(b.id)?;
    if a.id == b.id {
        return Ok(1.0);
    }
    let ancestors_a = lexicon.ancestors(a.id);
    let lcs_depth = lexicon
        .ancestors(b.id)
        .into_iter()
        .filter(|id| ancestors_a.contains(id))
        .filter_map(|id| lexicon.depth(id))
        .max()
        .ok_or(LexiconError::NoCommonAncestor(a.id, b.id))?;
    Ok(2.0 * lcs_depth as f64 / (da + db) as f64)
}

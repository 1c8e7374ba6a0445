//! Reader and writer for the WordNet 3.x `index.<pos>` / `data.<pos>` layout.
//!
//! Only the pointers that feed the hierarchy and part links are kept:
//! `@` hypernym, `~` hyponym, `%p %m %s` meronyms and `#p #m #s` holonyms.
//! Offsets are treated as opaque ids, so hand-edited files whose offsets are
//! not true byte positions still load.

use std::fmt::Write as _;
use std::io::BufRead;

use super::{LexiconBuilder, LexiconError, LexiconIndex, Pos, Synset, SynsetId};

/// Parses one index/data pair into a validated index.
pub fn parse_lexicon<I: BufRead, D: BufRead>(index_source: I, data_source: D) -> Result<LexiconIndex, LexiconError> {
    let mut builder = LexiconBuilder::default();
    builder.add_data(data_source, "data")?;
    builder.add_index(index_source, "index")?;
    builder.finish()
}

fn parse_err(source_name: &str, line: usize, message: impl Into<String>) -> LexiconError {
    LexiconError::Parse {
        source_name: source_name.to_string(),
        line,
        message: message.into(),
    }
}

/// License header lines in the distributed files start with whitespace.
fn is_content(line: &str) -> bool {
    !line.trim().is_empty() && !line.starts_with(' ') && !line.starts_with('\t')
}

fn clean_lemma(word: &str) -> String {
    // Adjective position markers: "galore(ip)".
    let word = match word.find('(') {
        Some(i) if word.ends_with(')') => &word[..i],
        _ => word,
    };
    word.to_lowercase()
}

pub(super) fn read_data<R: BufRead>(reader: R, source_name: &str) -> Result<Vec<Synset>, LexiconError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| parse_err(source_name, lineno, e.to_string()))?;
        if !is_content(&line) {
            continue;
        }
        out.push(parse_data_line(&line, source_name, lineno)?);
    }
    Ok(out)
}

fn parse_data_line(line: &str, src: &str, lineno: usize) -> Result<Synset, LexiconError> {
    let (fields, gloss) = match line.split_once('|') {
        Some((f, g)) => (f, g.trim()),
        None => (line, ""),
    };
    let mut toks = fields.split_whitespace();
    let mut next = |what: &str| {
        toks.next()
            .ok_or_else(|| parse_err(src, lineno, format!("missing {what}")))
    };

    let offset: u32 = next("synset_offset")?
        .parse()
        .map_err(|_| parse_err(src, lineno, "bad synset_offset"))?;
    next("lex_filenum")?;
    let ss_type = next("ss_type")?;
    let pos = Pos::from_tag(ss_type).ok_or_else(|| parse_err(src, lineno, format!("bad ss_type {ss_type:?}")))?;
    let w_cnt = usize::from_str_radix(next("w_cnt")?, 16).map_err(|_| parse_err(src, lineno, "bad w_cnt"))?;
    if w_cnt == 0 {
        return Err(parse_err(src, lineno, "synset without words"));
    }
    let mut lemmas = Vec::with_capacity(w_cnt);
    for _ in 0..w_cnt {
        let word = clean_lemma(next("word")?);
        next("lex_id")?;
        if word.is_empty() {
            return Err(parse_err(src, lineno, "empty lemma"));
        }
        if !lemmas.contains(&word) {
            lemmas.push(word);
        }
    }
    let p_cnt: usize = next("p_cnt")?
        .parse()
        .map_err(|_| parse_err(src, lineno, "bad p_cnt"))?;

    let id = SynsetId::new(offset, pos);
    let mut synset = Synset {
        id,
        pos,
        lemmas,
        gloss: gloss.to_string(),
        hypernyms: Vec::new(),
        hyponyms: Vec::new(),
        meronyms: Vec::new(),
        holonyms: Vec::new(),
    };
    for _ in 0..p_cnt {
        let symbol = next("pointer_symbol")?;
        let target: u32 = next("pointer offset")?
            .parse()
            .map_err(|_| parse_err(src, lineno, "bad pointer offset"))?;
        let tpos = next("pointer pos")?;
        let tpos = Pos::from_tag(tpos).ok_or_else(|| parse_err(src, lineno, format!("bad pointer pos {tpos:?}")))?;
        next("source/target")?;
        let target = SynsetId::new(target, tpos);
        let list = match symbol {
            "@" => &mut synset.hypernyms,
            "~" => &mut synset.hyponyms,
            "%p" | "%m" | "%s" => &mut synset.meronyms,
            "#p" | "#m" | "#s" => &mut synset.holonyms,
            _ => continue,
        };
        if !list.contains(&target) {
            list.push(target);
        }
    }
    Ok(synset)
}

pub(super) fn read_index<R: BufRead>(
    reader: R,
    source_name: &str,
) -> Result<Vec<(String, Pos, Vec<SynsetId>)>, LexiconError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| parse_err(source_name, lineno, e.to_string()))?;
        if !is_content(&line) {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let err = |m: &str| parse_err(source_name, lineno, m);
        if toks.len() < 6 {
            return Err(err("index line too short"));
        }
        let lemma = clean_lemma(toks[0]);
        let pos = Pos::from_tag(toks[1]).ok_or_else(|| err("bad pos"))?;
        let synset_cnt: usize = toks[2].parse().map_err(|_| err("bad synset_cnt"))?;
        let p_cnt: usize = toks[3].parse().map_err(|_| err("bad p_cnt"))?;
        let offsets_at = 4 + p_cnt + 2;
        if toks.len() != offsets_at + synset_cnt {
            return Err(err("synset_cnt does not match the offsets listed"));
        }
        let mut ids = Vec::with_capacity(synset_cnt);
        for tok in &toks[offsets_at..] {
            let off: u32 = tok.parse().map_err(|_| err("bad synset_offset"))?;
            let id = SynsetId::new(off, pos);
            if !ids.contains(&id) {
                ids.push(id);
            }
        }
        out.push((lemma, pos.file_pos(), ids));
    }
    Ok(out)
}

/// Renders the data file for one category. Offsets are written from the ids.
pub fn write_data(index: &LexiconIndex, pos: Pos) -> String {
    let mut out = String::new();
    for s in index.synsets().filter(|s| s.id.pos == pos.file_pos()) {
        let _ = write!(out, "{:08} 00 {} {:02x}", s.id.offset, s.pos.tag(), s.lemmas.len());
        for lemma in &s.lemmas {
            let _ = write!(out, " {lemma} 0");
        }
        let pointers: Vec<(&str, &SynsetId)> = s
            .hypernyms
            .iter()
            .map(|t| ("@", t))
            .chain(s.hyponyms.iter().map(|t| ("~", t)))
            .chain(s.meronyms.iter().map(|t| ("%p", t)))
            .chain(s.holonyms.iter().map(|t| ("#p", t)))
            .collect();
        let _ = write!(out, " {:03}", pointers.len());
        for (sym, t) in pointers {
            let _ = write!(out, " {sym} {:08} {} 0000", t.offset, t.pos.tag());
        }
        let _ = writeln!(out, " | {}", s.gloss);
    }
    out
}

/// Renders the index file for one category.
pub fn write_index(index: &LexiconIndex, pos: Pos) -> String {
    let mut out = String::new();
    for ((lemma, p), ids) in index.lemma_index() {
        if *p != pos.file_pos() {
            continue;
        }
        let _ = write!(out, "{lemma} {} {} 0 {} 0", p.tag(), ids.len(), ids.len());
        for id in ids {
            let _ = write!(out, " {:08}", id.offset);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const DATA: &str = "  1 This software and database is being provided
00000001 03 n 01 entity 0 001 ~ 00000002 n 0000 | that which exists
00000002 03 n 01 object 0 001 @ 00000001 n 0000 | a tangible thing
00000003 06 n 02 pan 0 cooking_pan 0 002 @ 00000002 n 0000 %p 00000004 n 0000 | cooking utensil consisting of wide metal vessel
00000004 06 n 01 handle 0 000 | the appendage to an object that is designed to be held
";
    const INDEX: &str = "  1 This software and database is being provided
entity n 1 1 ~ 1 0 00000001
object n 1 2 @ ~ 1 0 00000002
pan n 1 2 @ %p 1 0 00000003
cooking_pan n 1 1 @ 1 0 00000003
handle n 1 0 1 0 00000004
";

    #[test]
    fn parses_and_links_inverses() {
        let idx = parse_lexicon(INDEX.as_bytes(), DATA.as_bytes()).unwrap();
        assert_eq!(idx.len(), 4);
        let object = idx.synset("00000002-n".parse().unwrap()).unwrap();
        // entity lists object as hyponym; object lists entity as hypernym
        assert_eq!(object.hyponyms, vec!["00000003-n".parse().unwrap()]);
        let handle = idx.synset("00000004-n".parse().unwrap()).unwrap();
        assert_eq!(handle.holonyms, vec!["00000003-n".parse().unwrap()]);
        assert_eq!(
            idx.roots(),
            &["00000001-n".parse().unwrap(), "00000004-n".parse().unwrap()]
        );
        assert_eq!(idx.depth("00000003-n".parse().unwrap()), Some(3));
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let bad = "00000001 03 n zz entity 0 000 | x\n";
        match parse_lexicon("".as_bytes(), bad.as_bytes()) {
            Err(LexiconError::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        let bad_index = "pan n 2 0 2 0 00000001\n";
        match parse_lexicon(bad_index.as_bytes(), "".as_bytes()) {
            Err(LexiconError::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn cycle_is_rejected() {
        let data = "\
00000001 03 n 01 a 0 001 @ 00000002 n 0000 | a
00000002 03 n 01 b 0 001 @ 00000003 n 0000 | b
00000003 03 n 01 c 0 001 @ 00000001 n 0000 | c
";
        match parse_lexicon("".as_bytes(), data.as_bytes()) {
            Err(LexiconError::Cycle(ids)) => {
                assert_eq!(ids.first(), ids.last());
                assert_eq!(ids.len(), 4);
            }
            other => panic!("expected cycle error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_index_target_is_an_error() {
        let index = "ghost n 1 0 1 0 00000099\n";
        assert!(matches!(
            parse_lexicon(index.as_bytes(), DATA.as_bytes()),
            Err(LexiconError::UnknownIndexTarget { .. })
        ));
    }

    #[test]
    fn write_then_parse_is_identity() {
        let idx = parse_lexicon(INDEX.as_bytes(), DATA.as_bytes()).unwrap();
        let again = parse_lexicon(
            write_index(&idx, Pos::Noun).as_bytes(),
            write_data(&idx, Pos::Noun).as_bytes(),
        )
        .unwrap();
        assert_eq!(idx, again);
    }
}

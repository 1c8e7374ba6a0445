mod common;

use std::io::{BufRead, BufReader, Cursor};

use situnet::lexicon::{information_content, parse_lexicon, write_data, write_index, CorpusFrequencies};
use situnet::{LexiconIndex, Pos};

fn lexicon_file(name: &str) -> Vec<u8> {
    std::fs::read(common::data_dir().join("lexicon").join(name)).unwrap()
}

#[test]
fn every_offset_points_at_its_own_record() {
    let data = lexicon_file("data.noun");
    let lex = LexiconIndex::load_dir(common::data_dir().join("lexicon")).unwrap();
    assert!(lex.len() > 200);
    for s in lex.synsets() {
        let at = s.id.offset as usize;
        let head = std::str::from_utf8(&data[at..at + 9]).unwrap();
        assert_eq!(head, format!("{:08} ", s.id.offset));
        assert!(at == 0 || data[at - 1] == b'\n');
    }
}

#[test]
fn sense_counts_match_a_scan_of_the_index_file() {
    let lex = LexiconIndex::load_dir(common::data_dir().join("lexicon")).unwrap();
    let mut scanned = 0;
    for line in BufReader::new(Cursor::new(lexicon_file("index.noun"))).lines() {
        let line = line.unwrap();
        if line.starts_with("  ") {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        let count: usize = f[2].parse().unwrap();
        let offsets: Vec<u32> = f[f.len() - count..].iter().map(|o| o.parse().unwrap()).collect();
        let got: Vec<u32> = lex.sense_ids(f[0], Pos::Noun).iter().map(|id| id.offset).collect();
        assert_eq!(got, offsets, "{}", f[0]);
        scanned += 1;
    }
    assert!(scanned > 200);
    assert_eq!(lex.senses("pan", Pos::Noun).len(), 4);
    assert!(lex.senses("zzz", Pos::Noun).is_empty());
}

#[test]
fn write_then_parse_reproduces_the_index() {
    let lex = LexiconIndex::load_dir(common::data_dir().join("lexicon")).unwrap();
    let data = write_data(&lex, Pos::Noun);
    let index = write_index(&lex, Pos::Noun);
    let again = parse_lexicon(Cursor::new(index.as_bytes()), Cursor::new(data.as_bytes())).unwrap();
    assert_eq!(again.len(), lex.len());
    for s in lex.synsets() {
        assert_eq!(again.synset(s.id), Some(s));
    }
    assert_eq!(again.lemma_index(), lex.lemma_index());
    assert_eq!(write_data(&again, Pos::Noun), data);
    assert_eq!(write_index(&again, Pos::Noun), index);
}

#[test]
fn depths_and_ancestors_match_recursive_oracles() {
    let lex = LexiconIndex::load_dir(common::data_dir().join("lexicon")).unwrap();
    for s in lex.synsets() {
        assert_eq!(lex.depth(s.id), Some(common::depth_oracle(&lex, s.id)));
        let anc: std::collections::BTreeSet<_> = lex.ancestors(s.id).into_iter().collect();
        assert_eq!(anc, common::closure_oracle(&lex, s.id));
    }
    for &r in lex.roots() {
        assert_eq!(lex.depth(r), Some(1));
    }
}

#[test]
fn information_content_is_minus_log_relative_frequency() {
    let text = std::fs::read_to_string(common::data_dir().join("frequencies.tsv")).unwrap();
    let freq = CorpusFrequencies::read(Cursor::new(text.as_bytes()), "frequencies").unwrap();
    let rows: Vec<(String, f64)> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (w, c) = l.split_once('\t').unwrap();
            (w.to_string(), c.trim().parse().unwrap())
        })
        .collect();
    let total: f64 = rows.iter().map(|(_, c)| c).sum();
    assert_eq!(freq.total() as f64, total);
    for (w, c) in &rows {
        assert!(
            (information_content(w, &freq) - (-(c / total).ln())).abs() < 1e-12,
            "{w}"
        );
    }
    let unseen = -(1.0 / (total + 1.0)).ln();
    assert!((information_content("never_seen_word", &freq) - unseen).abs() < 1e-12);
    let f = CorpusFrequencies::from_counts([("a", 100u64), ("b", 9_900)]);
    assert!((information_content("a", &f) - 4.605170185988091).abs() < 1e-12);
}

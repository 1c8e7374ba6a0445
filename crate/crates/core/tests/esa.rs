mod common;

use std::collections::BTreeMap;

use situnet::relatedness::{build_esa_index, esa_relatedness, read_corpus, Weighting};
use situnet::text::tokenize;

fn corpus() -> Vec<(String, String)> {
    let f = std::fs::File::open(common::data_dir().join("esa_corpus.tsv")).unwrap();
    read_corpus(std::io::BufReader::new(f)).unwrap()
}

#[test]
fn relatedness_matches_dense_cosine() {
    let res = common::fixture();
    println!("{}", common::check_esa(&res).unwrap());
}

#[test]
fn stored_counts_equal_a_recount() {
    let res = common::fixture();
    let docs = corpus();
    assert!(docs.len() >= 50);
    let mut counts: BTreeMap<String, BTreeMap<u32, f64>> = BTreeMap::new();
    for (d, (_, text)) in docs.iter().enumerate() {
        for t in text
            .to_lowercase()
            .split(|c: char| !c.is_alphanumeric())
            .filter(|t| t.chars().count() >= 2 && !res.stopwords.contains(t))
        {
            *counts.entry(t.to_string()).or_default().entry(d as u32).or_default() += 1.0;
        }
    }
    let index = res.provider.index();
    assert_eq!(index.len(), counts.len());
    for (w, docs) in &counts {
        let want: Vec<(u32, f64)> = docs.iter().map(|(&d, &c)| (d, c)).collect();
        assert_eq!(index.vector(w).unwrap(), &want, "{w}");
    }
}

#[test]
fn tiny_corpus_examples() {
    let stop = situnet::Stopwords::new(Vec::<String>::new());
    let docs = [("A", "pan pan pot"), ("B", "pot")];
    let idx = build_esa_index(&docs, Weighting::RawCount, &stop, 1);
    assert_eq!(idx.vector("pan").unwrap(), &vec![(0, 2.0)]);
    assert_eq!(idx.vector("pot").unwrap(), &vec![(0, 1.0), (1, 1.0)]);
    let strict = build_esa_index(&docs, Weighting::RawCount, &stop, 2);
    assert!(strict.vector("pan").is_none());
    let disjoint = build_esa_index(&[("A", "pan"), ("B", "pot")], Weighting::RawCount, &stop, 1);
    assert_eq!(esa_relatedness(&disjoint, "pan", "pot"), 0.0);
    assert_eq!(esa_relatedness(&disjoint, "pan", "zzz"), 0.0);
    let tfidf = build_esa_index(&docs, Weighting::TfIdf, &stop, 1);
    // pot is in every document, so its idf is zero and nothing is stored.
    assert_eq!(tfidf.vector("pot").unwrap(), &vec![]);
    assert!((tfidf.vector("pan").unwrap()[0].1 - 2.0 * 2f64.ln()).abs() < 1e-12);
}

#[test]
fn duplicating_every_document_changes_nothing() {
    let res = common::fixture();
    let docs = corpus();
    let doubled: Vec<(String, String)> = docs.iter().chain(docs.iter()).cloned().collect();
    let a = build_esa_index(&docs, Weighting::RawCount, &res.stopwords, 1);
    let b = build_esa_index(&doubled, Weighting::RawCount, &res.stopwords, 1);
    let words: Vec<&str> = a.words().collect();
    let mut r = common::rng(9);
    for _ in 0..500 {
        use rand::Rng;
        let x = words[r.gen_range(0..words.len())];
        let y = words[r.gen_range(0..words.len())];
        assert!((esa_relatedness(&a, x, y) - esa_relatedness(&b, x, y)).abs() < 1e-12);
        let s = esa_relatedness(&a, x, y);
        assert!((0.0..=1.0).contains(&s));
    }
}

#[test]
fn index_text_round_trips() {
    let res = common::fixture();
    let index = res.provider.index();
    let text = index.to_text();
    let back = situnet::EsaIndex::from_text(std::io::Cursor::new(text.as_bytes())).unwrap();
    assert_eq!(back.to_text(), text);
    for w in index.words() {
        assert_eq!(back.vector(w), index.vector(w));
    }
    let _ = tokenize("unused", &res.stopwords);
}

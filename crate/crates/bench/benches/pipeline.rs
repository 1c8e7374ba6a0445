use std::hint::black_box;
use std::path::Path;

use criterion::{criterion_group, criterion_main, Criterion};
use situnet::bln::{infer_exact, marginals_gibbs, marginals_lw};
use situnet::disambiguate_seeds;
use situnet::eval::object_name;
use situnet::pipeline::{generate, ground_for_seeds, GenerateParams, ResourcePaths, Resources};
use situnet::relatedness::Weighting;

fn resources() -> Resources {
    let d = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let paths = ResourcePaths {
        lexicon: d.join("lexicon"),
        edges: d.join("conceptnet.tsv"),
        frequencies: d.join("frequencies.tsv"),
        stopwords: d.join("stopwords.txt"),
        esa_corpus: d.join("esa_corpus.tsv"),
    };
    Resources::load(&paths, Weighting::RawCount).expect("bundled data")
}

fn seeds(name: &str) -> Vec<String> {
    let p = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/scenarios")
        .join(name)
        .join("seeds.txt");
    std::fs::read_to_string(p)
        .unwrap()
        .lines()
        .map(|l| l.split('#').next().unwrap().trim().to_string())
        .filter(|l| !l.is_empty())
        .collect()
}

fn bench_pipeline(c: &mut Criterion) {
    let res = resources();
    let recipe = seeds("recipe");
    let params = GenerateParams {
        environment: "kitchen".into(),
        ..GenerateParams::default()
    };

    c.bench_function("disambiguate recipe seeds", |b| {
        b.iter(|| disambiguate_seeds(black_box(&recipe), &res.lexicon).unwrap())
    });
    c.bench_function("generate recipe network", |b| {
        b.iter(|| generate(black_box(&recipe), &res, &params).unwrap())
    });

    let g = generate(&recipe, &res, &params).unwrap();
    let net = ground_for_seeds(&g.model, 1).unwrap();
    let obj = object_name(1);
    let ev = situnet::bln::Evidence::from([(net.var(&format!("IsA({obj},{})", recipe[0])).unwrap(), true)]);
    let queries: Vec<usize> = (0..net.len()).collect();
    let mut group = c.benchmark_group("recipe inference, one object");
    group.sample_size(10);
    group.bench_function("likelihood weighting 20k", |b| {
        b.iter(|| marginals_lw(&net, &queries, &ev, 20_000, 1))
    });
    group.bench_function("gibbs 20k", |b| {
        b.iter(|| marginals_gibbs(&net, &queries, &ev, 500, 20_000, 1).unwrap())
    });
    let q = net.var(&format!("AtLocation({obj},kitchen)")).unwrap();
    group.bench_function("exact, one query", |b| b.iter(|| infer_exact(&net, q, &ev)));
    group.finish();
}

criterion_group!(benches, bench_pipeline);
criterion_main!(benches);

mod common;

use situnet::bln::{marginals, InferenceParams, Method};
use situnet::edges::RelationType;
use situnet::eval::{object_name, run_scenario, score, GoldStandard};
use situnet::pipeline::{evaluate_scenario, generate, ground_for_seeds, GenerateParams};

#[test]
fn report_equals_manual_invocation_and_hand_count() {
    let res = common::fixture();
    let seeds = common::scenario_seeds("cleaning");
    let params = GenerateParams {
        environment: "house".into(),
        ..GenerateParams::default()
    };
    let g = generate(&seeds, &res, &params).unwrap();
    let gold =
        GoldStandard::parse(&std::fs::read_to_string(common::scenario_dir("cleaning").join("gold.tsv")).unwrap())
            .unwrap();
    let inf = InferenceParams {
        method: Method::LikelihoodWeighting,
        samples: 2_000,
        burn_in: 0,
        seed: 3,
    };
    let (results, report) = evaluate_scenario(&g.model, &g.assignment, &gold, &inf).unwrap();

    let net = ground_for_seeds(&g.model, seeds.len()).unwrap();
    let manual = run_scenario(&net, &seeds, &inf).unwrap();
    assert_eq!(manual, results);
    assert_eq!(score(&manual, &gold, Some(&g.assignment)).unwrap(), report);

    for rel in RelationType::ALL {
        let labels: Vec<_> = gold.relation_labels.iter().filter(|(k, _)| k.1 == rel).collect();
        let correct = labels.iter().filter(|(k, &l)| (results[*k] > 0.5) == l).count();
        assert_eq!(report.counts[&rel], (correct, labels.len()));
    }
    let right = gold
        .sense_labels
        .iter()
        .filter(|(s, id)| g.assignment.sense_of(s) == Some(**id))
        .count();
    assert_eq!(report.wsd_counts, (right, gold.sense_labels.len()));
}

/// Seed i is answered with the run seed plus i and the seed's own evidence.
#[test]
fn per_seed_queries_use_offset_seeds() {
    let res = common::fixture();
    let seeds = common::scenario_seeds("cleaning");
    let g = generate(
        &seeds,
        &res,
        &GenerateParams {
            environment: "house".into(),
            ..GenerateParams::default()
        },
    )
    .unwrap();
    let net = ground_for_seeds(&g.model, seeds.len()).unwrap();
    let inf = InferenceParams {
        method: Method::LikelihoodWeighting,
        samples: 1_000,
        burn_in: 0,
        seed: 40,
    };
    let results = run_scenario(&net, &seeds, &inf).unwrap();
    let i = 2;
    let obj = object_name(i + 1);
    let ev_var = net.var(&format!("IsA({obj},{})", seeds[i])).unwrap();
    let qs: Vec<usize> = (0..net.len())
        .filter(|&v| net.name(v).contains(&format!("({obj},")))
        .collect();
    let mut ev = situnet::bln::Evidence::from([(ev_var, true)]);
    situnet::bln::clamp_constraints(&net, &mut ev);
    let probs = marginals(&net, &qs, &ev, &InferenceParams { seed: 42, ..inf }).unwrap();
    for (v, p) in qs.iter().zip(probs) {
        let atom: situnet::bln::Atom = net.name(*v).parse().unwrap();
        assert_eq!(results[&(seeds[i].clone(), atom.relation, atom.args[1].clone())], p);
    }
    assert_eq!(results[&(seeds[i].clone(), RelationType::IsA, seeds[i].clone())], 1.0);
}

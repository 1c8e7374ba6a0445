mod common;

use std::collections::BTreeSet;

use situnet::edges::RelationType;
use situnet::netgen::{
    add_isa_paths, attach_locations_two_hop, attach_relations, compress, in_environment, CompressOptions,
};
use situnet::{disambiguate_edge, disambiguate_seeds, NodeKind, Pos};

#[test]
fn surviving_locations_are_in_the_environment() {
    let res = common::fixture();
    println!("{}", common::check_locations(&res).unwrap());
}

#[test]
fn every_scenario_matches_the_location_oracle() {
    let res = common::fixture();
    for (name, env) in [("recipe", "kitchen"), ("laundry", "house"), ("cleaning", "house")] {
        let a = disambiguate_seeds(&common::scenario_seeds(name), &res.lexicon).unwrap();
        let g = compress(
            &add_isa_paths(&a, &res.lexicon),
            &res.frequencies,
            &CompressOptions::default(),
        );
        let (before, _) = attach_relations(&g, &res.store, &res.lexicon, &res.provider, &res.stopwords, &a);
        let after = attach_locations_two_hop(&before, &res.store, env);
        let kept: BTreeSet<String> = after
            .nodes
            .values()
            .filter(|n| n.kind == NodeKind::Location)
            .map(|n| n.id.clone())
            .collect();
        assert_eq!(kept, common::location_oracle(&before, &res.store, env), "{name}");
        assert!(kept
            .iter()
            .all(|id| in_environment(&res.store, id.split(':').next().unwrap(), env)));
        assert_eq!(after.reachable_from_seeds().len(), after.nodes.len());
        after.validate().unwrap();
    }
}

/// Relation edges re-derived by walking the store with the documented
/// filters: the end term needs a noun sense, and a seed start must be
/// re-chosen as its assigned sense.
#[test]
fn attached_edges_follow_the_filter_chain() {
    let res = common::fixture();
    for name in common::SCENARIOS {
        let a = disambiguate_seeds(&common::scenario_seeds(name), &res.lexicon).unwrap();
        let g = compress(
            &add_isa_paths(&a, &res.lexicon),
            &res.frequencies,
            &CompressOptions::default(),
        );
        let (out, report) = attach_relations(&g, &res.store, &res.lexicon, &res.provider, &res.stopwords, &a);

        let mut want = BTreeSet::new();
        let mut considered = 0;
        for c in g.nodes.values().filter(|n| n.kind == NodeKind::Concept) {
            let term = c.id.split(':').next().unwrap();
            for e in res.store.edges().iter().filter(|e| e.start == term) {
                if !matches!(
                    e.relation,
                    RelationType::UsedFor | RelationType::HasProperty | RelationType::AtLocation
                ) {
                    continue;
                }
                considered += 1;
                if res.lexicon.sense_ids(&e.end, Pos::Noun).is_empty() {
                    continue;
                }
                if c.is_seed {
                    let back = disambiguate_edge(&e.end, term, &res.lexicon, &res.provider, &res.stopwords)
                        .unwrap()
                        .0;
                    if Some(back) != a.sense_of(&c.id) {
                        continue;
                    }
                }
                let w = common::normalized(&res.store, &e.start, e.relation, &e.end);
                want.insert((c.id.clone(), e.relation, e.end.clone(), w.to_bits()));
            }
        }
        let got: BTreeSet<_> = out
            .edges
            .iter()
            .filter(|e| e.relation != RelationType::IsA)
            .map(|e| {
                (
                    e.src.clone(),
                    e.relation,
                    e.dst.split(':').next().unwrap().to_string(),
                    e.strength.to_bits(),
                )
            })
            .collect();
        assert_eq!(got, want, "{name}");
        assert_eq!(report.considered, considered);
        assert_eq!(report.added, want.len());
        assert_eq!(
            report.considered,
            report.added + report.unknown_term + report.sense_mismatch + report.degenerate_weight
        );
        for e in out.edges.iter().filter(|e| e.relation != RelationType::IsA) {
            assert_eq!(out.nodes[&e.dst].kind, NodeKind::for_relation(e.relation));
            assert!(e.strength > 0.0 && e.strength <= 1.0);
        }
    }
}

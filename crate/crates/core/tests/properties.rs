use std::collections::HashSet;

use proptest::prelude::*;

use geodex::classify::{
    brute_force_automorphism_count, classify_with, geodesic_level, ClassifyOptions,
    GeodesicOptions,
};
use geodex::golden::GOLDEN_ROWS;
use geodex::graph::DistanceRegularity;
use geodex::io::{
    encode_adjacency_matrix, encode_graph6, parse_adjacency_matrix, parse_graph6, GraphSource,
};
use geodex::{automorphism_group, BigUint, Graph, Permutation, PermutationGroup};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// Small reference graphs, cheap enough to classify many times.
fn small_rows() -> Vec<&'static str> {
    GOLDEN_ROWS
        .iter()
        .filter(|r| r.aut_order <= 50_000 && !r.source.contains("doubled"))
        .map(|r| r.source)
        .collect()
}

fn row_graph(source: &str) -> Graph {
    GraphSource::from_family_id(source).unwrap().build(5000).unwrap()
}

/// Closure of the generators by breadth-first multiplication.
fn enumerate(gens: &[Permutation], n: usize) -> usize {
    let id = Permutation::identity(n);
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.images().to_vec()]);
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = p.then(g);
            if seen.insert(q.images().to_vec()) {
                frontier.push(q);
            }
        }
    }
    seen.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn matrix_round_trip(g in graph(20)) {
        prop_assume!(g.order() > 0);
        prop_assert_eq!(parse_adjacency_matrix(&encode_adjacency_matrix(&g)).unwrap(), g);
    }

    #[test]
    fn bsgs_order_matches_enumeration(
        gens in proptest::collection::vec(permutation(6), 1..4)
    ) {
        let group = PermutationGroup::new(6, gens.clone()).unwrap();
        let product = group
            .orbit_lengths()
            .iter()
            .fold(BigUint::from(1u32), |acc, &l| acc * BigUint::from(l));
        prop_assert_eq!(&product, &group.order());
        prop_assert_eq!(group.order(), BigUint::from(enumerate(&gens, 6)));
        for g in &gens {
            prop_assert!(group.contains(g).unwrap());
        }
    }

    #[test]
    fn automorphisms_match_bijection_count(g in graph(9)) {
        let brute = brute_force_automorphism_count(&g).unwrap();
        let r = automorphism_group(&g);
        prop_assert_eq!(r.order(), BigUint::from(brute));
        for p in r.group.generators() {
            prop_assert!(g.is_automorphism(p));
        }
    }

    #[test]
    fn orbit_stabilizer(g in graph(14)) {
        prop_assume!(g.order() > 0);
        let a = automorphism_group(&g).group;
        for u in [0, g.order() / 2, g.order() - 1] {
            let orbit = a.orbit(u).unwrap().len();
            let stab = a.stabilizer_tower(&[u]).unwrap().order(1);
            prop_assert_eq!(BigUint::from(orbit) * stab, a.order());
        }
    }

    #[test]
    fn complement_has_the_same_group(g in graph(16)) {
        let a = automorphism_group(&g).group;
        let co = g.complement();
        prop_assert_eq!(automorphism_group(&co).order(), a.order());
        for p in a.generators() {
            prop_assert!(co.is_automorphism(p));
        }
    }

    #[test]
    fn double_cover_connectivity(g in graph(12)) {
        prop_assume!(g.order() > 0);
        let law = g.is_connected() && !g.is_bipartite();
        prop_assert_eq!(g.bipartite_double_cover().is_connected(), law);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn certificate_is_relabeling_invariant(
        (g, p) in graph(24).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), permutation(n))
        })
    ) {
        let a = automorphism_group(&g);
        let b = automorphism_group(&g.relabel(&p));
        prop_assert_eq!(a.canonical_certificate, b.canonical_certificate);
    }

    #[test]
    fn family_certificate_is_relabeling_invariant(
        (source, p) in prop::sample::select(small_rows()).prop_flat_map(|s| {
            let n = row_graph(s).order();
            (Just(s), permutation(n))
        })
    ) {
        let g = row_graph(source);
        let a = automorphism_group(&g);
        let b = automorphism_group(&g.relabel(&p));
        prop_assert_eq!(a.order(), b.order());
        prop_assert_eq!(a.canonical_certificate, b.canonical_certificate);
    }

    #[test]
    fn geodesic_level_is_base_independent(
        (source, u) in prop::sample::select(small_rows()).prop_flat_map(|s| {
            let n = row_graph(s).order();
            (Just(s), 0..n)
        })
    ) {
        let g = row_graph(source);
        let a = automorphism_group(&g).group;
        let arr = match g.intersection_array().unwrap() {
            DistanceRegularity::Regular(arr) => Some(arr),
            DistanceRegularity::NotRegular(_) => None,
        };
        let at = |base| {
            geodesic_level(&g, &a, arr.as_ref(), GeodesicOptions { early_exit: false, base_vertex: base })
                .unwrap()
                .level
        };
        prop_assert_eq!(at(u), at(0));
    }

    #[test]
    fn checks_pass_as_a_prefix(source in prop::sample::select(small_rows())) {
        let g = row_graph(source);
        let a = automorphism_group(&g).group;
        let out = geodesic_level(&g, &a, None, GeodesicOptions { early_exit: false, base_vertex: 0 })
            .unwrap();
        let first_fail = out.checks.iter().position(|ok| !ok).unwrap_or(out.checks.len());
        prop_assert!(out.checks[first_fail..].len() <= 1);
        prop_assert_eq!(out.level, first_fail);
    }

    #[test]
    fn early_exit_does_not_change_reports(source in prop::sample::select(small_rows())) {
        let g = row_graph(source);
        let on = classify_with(&g, source, ClassifyOptions { early_exit: true }).unwrap();
        let off = classify_with(&g, source, ClassifyOptions { early_exit: false }).unwrap();
        prop_assert_eq!(on, off);
    }

    #[test]
    fn geodesic_transitive_implies_distance_transitive(source in prop::sample::select(small_rows())) {
        let g = row_graph(source);
        let r = classify_with(&g, source, ClassifyOptions::default()).unwrap();
        prop_assert!(!r.gt || r.dt);
    }
}

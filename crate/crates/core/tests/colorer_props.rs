mod common;

use common::*;
use proptest::prelude::*;
use rainbow_core::colorer::{
    color_bridged, color_by_roles, color_cutvertex_bridgeless, partition_case_b_empty,
    partition_case_b_nonempty, Role,
};
use rainbow_core::generators::{self, RandomDiam2};
use rainbow_core::{
    classify, color_diam2, verify_rainbow_connected, ColorError, ColorOptions, Diam2Classification,
    Graph, Verdict, VerifyOptions,
};

fn sampled(n: usize, p: f64, seed: u64, two_connected: bool) -> Option<Graph> {
    let mut spec = RandomDiam2::new(n, p, seed).bridgeless().max_tries(200);
    if two_connected {
        spec = spec.two_connected();
    }
    generators::random_diam2(&spec).ok().map(|s| s.graph)
}

fn assert_sound(g: &Graph, opts: &ColorOptions) -> usize {
    let out = color_diam2(g, opts).expect("in-scope graph colors");
    assert!(out.certificate.is_connected());
    assert!(out.colors_used <= out.guarantee);
    assert_eq!(out.colors_used, out.coloring.colors_used());
    let again = verify_rainbow_connected(g, &out.coloring, &VerifyOptions::default()).unwrap();
    assert_eq!(again.verdict, Verdict::Connected);
    assert_eq!(naive_failing_pair(g, &out.coloring), None);
    out.colors_used
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn small_graphs_in_scope_iff_diameter_two(g in arb_graph(7)) {
        let in_scope = matches!(brute_diameter(&g), Some(d) if d <= 2);
        match color_diam2(&g, &ColorOptions::default()) {
            Ok(out) => {
                prop_assert!(in_scope);
                prop_assert!(out.colors_used <= out.guarantee);
                prop_assert_eq!(naive_failing_pair(&g, &out.coloring), None);
            }
            Err(e) => {
                prop_assert!(!in_scope);
                prop_assert_eq!(e, ColorError::OutOfScopeGraph);
            }
        }
    }

    #[test]
    fn bridgeless_graphs_take_at_most_five(n in 8usize..=16, p in 0.25f64..0.7, seed in any::<u64>()) {
        let Some(g) = sampled(n, p, seed, false) else { return Ok(()) };
        prop_assert!(assert_sound(&g, &ColorOptions::default()) <= 5);
    }

    #[test]
    fn partitions_satisfy_their_invariants(n in 6usize..=14, p in 0.25f64..0.6, seed in any::<u64>()) {
        let Some(g) = sampled(n, p, seed, true) else { return Ok(()) };
        for v in 0..g.n() {
            let (a, b) = (partition_case_b_nonempty(&g, v), partition_case_b_empty(&g, v));
            prop_assert!(a.is_ok() != b.is_ok(), "exactly one case applies to center {}", v);
            let part = a.or(b).unwrap();
            prop_assert_eq!(part.validate(&g), Ok(()));
            prop_assert!(part.members(Role::D2).is_empty());
            for d in part.members(Role::D1) {
                let x = part.five_edge_of(d).unwrap();
                prop_assert!(g.has_edge(d, x) && part.role[x] == Role::X);
            }
            let col = color_by_roles(&g, &part).unwrap();
            prop_assert!(col.colors_used() <= 5);
            prop_assert!(col.color_count() <= 5);
        }
    }

    #[test]
    fn cut_vertex_graphs_take_at_most_three(n in 5usize..=16, blocks in 2usize..=4, p in 0.1f64..0.8, seed in any::<u64>()) {
        prop_assume!(n >= 1 + 2 * blocks);
        let g = generators::random_apex_blocks(n, blocks, p, seed).unwrap();
        let out = color_cutvertex_bridgeless(&g, &ColorOptions::default()).unwrap();
        prop_assert!(out.colors_used <= 3);
        prop_assert_eq!(naive_failing_pair(&g, &out.coloring), None);
    }

    // apex 0 with `pendants` leaves and a random graph on the rest
    #[test]
    fn bridged_graphs_take_bridges_plus_two(pendants in 1usize..=4, rest in 0usize..=6, mask in proptest::collection::vec(any::<bool>(), 15)) {
        prop_assume!(pendants + rest >= 2);
        let n = 1 + pendants + rest;
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
        let base = 1 + pendants;
        let mut bit = 0;
        for u in base..n {
            for w in u + 1..n {
                if mask[bit] {
                    edges.push((u, w));
                }
                bit += 1;
            }
        }
        let g = Graph::new(n, edges).unwrap();
        let Diam2Classification::BridgedCutVertex(split) = classify(&g) else {
            return Err(TestCaseError::fail("apex with pendants must be bridged"));
        };
        let k = split.bridge_count;
        let out = color_bridged(&g, &split, &ColorOptions::default()).unwrap();
        let expect = if split.nontrivial.is_empty() { k } else { k + 2 };
        prop_assert_eq!(out.colors_used, expect);
        prop_assert_eq!(naive_failing_pair(&g, &out.coloring), None);
    }

    #[test]
    fn deterministic_and_center_search_no_worse(n in 8usize..=14, seed in any::<u64>()) {
        let Some(g) = sampled(n, 0.4, seed, true) else { return Ok(()) };
        let opts = ColorOptions { seed, ..ColorOptions::default() };
        let a = color_diam2(&g, &opts).unwrap();
        prop_assert_eq!(&a, &color_diam2(&g, &opts).unwrap());
        let all = ColorOptions { all_centers: true, ..opts };
        let best = assert_sound(&g, &all);
        prop_assert!(best <= a.colors_used);
        prop_assert_eq!(color_diam2(&g, &all).unwrap(), color_diam2(&g, &all).unwrap());
    }
}

#[test]
fn named_instances() {
    for g in [
        generators::cycle(4).unwrap(),
        generators::cycle(5).unwrap(),
        generators::petersen(),
        generators::wheel(6).unwrap(),
        generators::complete_bipartite(2, 5).unwrap(),
        generators::complete_bipartite(3, 4).unwrap(),
        generators::complete(5).unwrap(),
        generators::friendship(4).unwrap(),
        generators::star(5).unwrap(),
    ] {
        assert_sound(&g, &ColorOptions::default());
        for v in 0..g.n() {
            let opts = ColorOptions {
                center: Some(v),
                ..ColorOptions::default()
            };
            assert_sound(&g, &opts);
        }
    }
    for k in 1..=3 {
        for r in 2..=3 {
            let g = generators::tight_example(k, r).unwrap();
            assert_eq!(assert_sound(&g, &ColorOptions::default()), k + 2);
        }
    }
    let c7 = generators::cycle(7).unwrap();
    assert_eq!(color_diam2(&c7, &ColorOptions::default()), Err(ColorError::OutOfScopeGraph));
}

#[test]
fn wrong_case_is_rejected() {
    let pet = generators::petersen();
    assert!(matches!(
        color_cutvertex_bridgeless(&pet, &ColorOptions::default()),
        Err(ColorError::WrongCase(_))
    ));
    let friendship = generators::friendship(3).unwrap();
    assert!(partition_case_b_nonempty(&friendship, 0).is_err());
}

mod common;

use common::*;
use proptest::prelude::*;
use rainbow_core::verify::{rainbow_path, RainbowChecker};
use rainbow_core::{
    generators, verify_rainbow_connected, EdgeColoring, Graph, Verdict, VerifyError, VerifyOptions,
};

fn colored_graph(max_n: usize, max_colors: u32) -> impl Strategy<Value = (Graph, EdgeColoring)> {
    arb_graph(max_n).prop_flat_map(move |g| {
        let m = g.m();
        proptest::collection::vec(1..=max_colors, m)
            .prop_map(move |c| (g.clone(), EdgeColoring::new(c).unwrap()))
    })
}

fn verdict(g: &Graph, col: &EdgeColoring) -> Verdict {
    verify_rainbow_connected(g, col, &VerifyOptions::default()).unwrap().verdict
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 600,
        max_global_rejects: 50_000,
        ..ProptestConfig::default()
    })]

    #[test]
    fn matches_naive_enumeration((g, col) in colored_graph(7, 4)) {
        let want = match naive_failing_pair(&g, &col) {
            None => Verdict::Connected,
            Some((u, w)) => Verdict::FailingPair(u, w),
        };
        prop_assert_eq!(verdict(&g, &col), want);
        prop_assert_eq!(all_paths_failing_pair(&g, &col), naive_failing_pair(&g, &col));
    }

    #[test]
    fn witnesses_validate((g, col) in colored_graph(7, 4)) {
        let cert = verify_rainbow_connected(&g, &col, &VerifyOptions::default().with_witnesses(true)).unwrap();
        if cert.is_connected() {
            let ws = cert.witnesses.as_ref().unwrap();
            prop_assert_eq!(ws.len(), g.n() * g.n().saturating_sub(1) / 2);
            prop_assert!(cert.validate(&g, &col));
        } else {
            prop_assert!(cert.witnesses.is_none());
        }
    }

    #[test]
    fn rainbow_path_is_rainbow((g, col) in colored_graph(7, 3), a in 0usize..7, b in 0usize..7) {
        prop_assume!(a < g.n() && b < g.n() && a != b);
        match rainbow_path(&g, &col, a, b).unwrap() {
            Some(path) => {
                prop_assert_eq!(path[0], a);
                prop_assert_eq!(*path.last().unwrap(), b);
                let mut seen = std::collections::BTreeSet::new();
                for step in path.windows(2) {
                    let e = g.edge_id(step[0], step[1]);
                    prop_assert!(e.is_some());
                    prop_assert!(seen.insert(col.color(e.unwrap())));
                }
            }
            None => prop_assert!(!naive_has_rainbow_path(&g, &col, a, b)),
        }
    }

    // Giving one edge a brand-new color never breaks rainbow connectivity.
    #[test]
    fn splitting_a_color_class_is_monotone((g, col) in colored_graph(7, 3), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.m() > 0 && verdict(&g, &col) == Verdict::Connected);
        let mut colors = col.colors().to_vec();
        colors[pick.index(g.m())] = 99;
        let split = EdgeColoring::new(colors).unwrap();
        prop_assert_eq!(verdict(&g, &split), Verdict::Connected);
    }

    #[test]
    fn checker_agrees_with_entry_point((g, col) in colored_graph(7, 4)) {
        let (dense, k) = col.dense();
        let mut checker = RainbowChecker::new(&g);
        let got = checker.first_failing_pair(&dense, k, None);
        let want = match verdict(&g, &col) {
            Verdict::Connected => None,
            Verdict::FailingPair(u, w) => Some((u, w)),
        };
        prop_assert_eq!(got, want);
    }
}

#[test]
fn spec_examples() {
    let c4 = generators::cycle(4).unwrap();
    let alternating = EdgeColoring::from_triples(&c4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1), (0, 3, 2)]).unwrap();
    assert_eq!(verdict(&c4, &alternating), Verdict::Connected);
    assert!(matches!(verdict(&c4, &EdgeColoring::uniform(4, 1)), Verdict::FailingPair(..)));
    let missing = EdgeColoring::from_triples(&c4, &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]);
    assert!(matches!(missing, Err(VerifyError::ColoringMismatch(_))));
    let k4 = generators::complete(4).unwrap();
    assert_eq!(verdict(&k4, &EdgeColoring::uniform(6, 1)), Verdict::Connected);
    let disconnected = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(
        verdict(&disconnected, &EdgeColoring::all_distinct(2)),
        Verdict::FailingPair(0, 2)
    );
}

#[test]
fn cap_is_enforced() {
    let c = generators::cycle(20).unwrap();
    let mut colors: Vec<u32> = (1..=20).collect();
    colors[19] = 1;
    let col = EdgeColoring::new(colors).unwrap();
    let err = verify_rainbow_connected(&c, &col, &VerifyOptions::default()).unwrap_err();
    assert!(matches!(err, VerifyError::CapExceeded { colors: 19, .. }));
}
